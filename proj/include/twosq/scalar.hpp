// Exact rational numbers.
//
// Values whose reduced numerator and denominator fit in 64 bits are kept
// inline; anything larger is promoted to a GMP rational and demoted again as
// soon as it fits.  Results are always in lowest terms with a positive
// denominator, so equality of representation is equality of value.
#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <memory>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace twosq {

class Scalar {
public:
    Scalar() noexcept : num_(0), den_(1) {}
    Scalar(int v) noexcept : num_(v), den_(1) {}            // NOLINT(implicit)
    Scalar(long v) noexcept : num_(v), den_(1) {}           // NOLINT(implicit)
    Scalar(long long v) noexcept : num_(v), den_(1) {}      // NOLINT(implicit)
    Scalar(std::int64_t num, std::int64_t den);
    explicit Scalar(const mpq_class& q);

    Scalar(const Scalar& o) : num_(o.num_), den_(o.den_) {
        if (o.big_) big_ = std::make_unique<mpq_class>(*o.big_);
    }
    Scalar(Scalar&&) noexcept = default;
    Scalar& operator=(const Scalar& o) {
        if (this != &o) {
            num_ = o.num_;
            den_ = o.den_;
            big_ = o.big_ ? std::make_unique<mpq_class>(*o.big_) : nullptr;
        }
        return *this;
    }
    Scalar& operator=(Scalar&&) noexcept = default;

    // Accepts integers, decimals ("-1.25", "3e-2") and fractions ("p/q").
    // Throws std::invalid_argument on malformed text or a zero denominator.
    static Scalar parse(std::string_view text);

    bool is_small() const noexcept { return !big_; }
    mpq_class to_mpq() const;
    double to_double() const;
    std::string str() const;  // "p/q", or "p" for integers

    int sign() const noexcept;
    bool is_zero() const noexcept { return !big_ && num_ == 0; }
    bool is_integer() const;

    Scalar operator-() const;
    friend Scalar operator+(const Scalar& a, const Scalar& b);
    friend Scalar operator-(const Scalar& a, const Scalar& b);
    friend Scalar operator*(const Scalar& a, const Scalar& b);
    friend Scalar operator/(const Scalar& a, const Scalar& b);
    Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
    Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
    Scalar& operator*=(const Scalar& o) { return *this = *this * o; }
    Scalar& operator/=(const Scalar& o) { return *this = *this / o; }

    friend int compare(const Scalar& a, const Scalar& b);
    friend bool operator==(const Scalar& a, const Scalar& b) { return compare(a, b) == 0; }
    friend std::strong_ordering operator<=>(const Scalar& a, const Scalar& b) {
        int c = compare(a, b);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

    friend std::ostream& operator<<(std::ostream& os, const Scalar& s);

private:
    static Scalar from_mpq(mpq_class&& q);
    static Scalar from_wide(__int128 num, __int128 den);

    std::int64_t num_;
    std::int64_t den_;
    std::unique_ptr<mpq_class> big_;
};

inline Scalar abs(const Scalar& s) { return s.sign() < 0 ? -s : s; }
inline const Scalar& min(const Scalar& a, const Scalar& b) { return b < a ? b : a; }
inline const Scalar& max(const Scalar& a, const Scalar& b) { return a < b ? b : a; }

}  // namespace twosq
