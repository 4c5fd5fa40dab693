#include "twosq/scalar.hpp"

#include <cctype>
#include <cmath>
#include <limits>
#include <numeric>
#include <ostream>
#include <stdexcept>

namespace twosq {

namespace {

using i128 = __int128;
using u128 = unsigned __int128;

constexpr std::int64_t kMax64 = std::numeric_limits<std::int64_t>::max();

std::uint64_t gcd_u64(std::uint64_t a, std::uint64_t b) { return std::gcd(a, b); }

u128 uabs(i128 v) { return v < 0 ? u128(0) - u128(v) : u128(v); }

u128 gcd_u128(u128 a, u128 b) {
    if (a == 0) return b;
    if (b == 0) return a;
    if ((a >> 64) == 0 && (b >> 64) == 0) return gcd_u64(std::uint64_t(a), std::uint64_t(b));
    int shift = 0;
    while (((a | b) & 1) == 0) {
        a >>= 1;
        b >>= 1;
        ++shift;
    }
    while ((a & 1) == 0) a >>= 1;
    do {
        while ((b & 1) == 0) b >>= 1;
        if (a > b) std::swap(a, b);
        b -= a;
    } while (b != 0);
    return a << shift;
}

bool fits64(i128 v) { return v <= i128(kMax64) && v >= -i128(kMax64); }

mpz_class mpz_from(i128 v) {
    bool neg = v < 0;
    u128 u = uabs(v);
    mpz_class hi(static_cast<unsigned long>(std::uint64_t(u >> 64)));
    mpz_class lo(static_cast<unsigned long>(std::uint64_t(u)));
    mpz_class r = (hi << 64) + lo;
    return neg ? mpz_class(-r) : r;
}

}  // namespace

Scalar::Scalar(std::int64_t num, std::int64_t den) {
    if (den == 0) throw std::domain_error("Scalar: zero denominator");
    *this = from_wide(num, den);
}

Scalar::Scalar(const mpq_class& q) : num_(0), den_(1) {
    mpq_class c(q);
    c.canonicalize();
    *this = from_mpq(std::move(c));
}

Scalar Scalar::from_wide(i128 num, i128 den) {
    if (den < 0) {
        num = -num;
        den = -den;
    }
    u128 g = gcd_u128(uabs(num), u128(den));
    if (g > 1) {
        num /= i128(g);
        den /= i128(g);
    }
    Scalar r;
    if (fits64(num) && fits64(den)) {
        r.num_ = std::int64_t(num);
        r.den_ = std::int64_t(den);
        return r;
    }
    r.big_ = std::make_unique<mpq_class>(mpz_from(num), mpz_from(den));
    return r;
}

Scalar Scalar::from_mpq(mpq_class&& q) {
    Scalar r;
    const mpz_class& n = q.get_num();
    const mpz_class& d = q.get_den();
    if (n.fits_slong_p() && d.fits_slong_p()) {
        long nn = n.get_si();
        long dd = d.get_si();
        if (nn != std::numeric_limits<long>::min() && dd != std::numeric_limits<long>::min()) {
            r.num_ = nn;
            r.den_ = dd;
            return r;
        }
    }
    r.big_ = std::make_unique<mpq_class>(std::move(q));
    return r;
}

mpq_class Scalar::to_mpq() const {
    if (big_) return *big_;
    return mpq_class(mpz_class(static_cast<long>(num_)), mpz_class(static_cast<long>(den_)));
}

double Scalar::to_double() const {
    if (big_) return big_->get_d();
    return double(num_) / double(den_);
}

std::string Scalar::str() const {
    if (big_) return big_->get_str();
    if (den_ == 1) return std::to_string(num_);
    return std::to_string(num_) + "/" + std::to_string(den_);
}

int Scalar::sign() const noexcept {
    if (big_) return sgn(*big_);
    return (num_ > 0) - (num_ < 0);
}

bool Scalar::is_integer() const {
    if (big_) return big_->get_den() == 1;
    return den_ == 1;
}

Scalar Scalar::operator-() const {
    if (big_) return from_mpq(mpq_class(-*big_));
    Scalar r;
    r.num_ = -num_;
    r.den_ = den_;
    return r;
}

Scalar operator+(const Scalar& a, const Scalar& b) {
    if (!a.big_ && !b.big_) {
        if (a.den_ == 1 && b.den_ == 1) return Scalar::from_wide(i128(a.num_) + b.num_, 1);
        std::uint64_t g = gcd_u64(std::uint64_t(a.den_), std::uint64_t(b.den_));
        if (g == 1) {
            i128 num = i128(a.num_) * b.den_ + i128(b.num_) * a.den_;
            i128 den = i128(a.den_) * b.den_;
            Scalar r;
            if (fits64(num) && fits64(den)) {
                r.num_ = std::int64_t(num);
                r.den_ = std::int64_t(den);
                return r;
            }
            return Scalar::from_wide(num, den);
        }
        std::int64_t ad = a.den_ / std::int64_t(g);
        std::int64_t bd = b.den_ / std::int64_t(g);
        i128 t = i128(a.num_) * bd + i128(b.num_) * ad;
        std::uint64_t g2 = gcd_u64(std::uint64_t(uabs(t) % g), g);
        if (g2 == 0) g2 = g;
        return Scalar::from_wide(t / i128(g2), i128(ad) * (b.den_ / std::int64_t(g2)));
    }
    return Scalar::from_mpq(a.to_mpq() + b.to_mpq());
}

Scalar operator-(const Scalar& a, const Scalar& b) { return a + (-b); }

Scalar operator*(const Scalar& a, const Scalar& b) {
    if (!a.big_ && !b.big_) {
        if (a.num_ == 0 || b.num_ == 0) return Scalar();
        std::int64_t g1 = std::int64_t(gcd_u64(std::uint64_t(a.num_ < 0 ? -a.num_ : a.num_), std::uint64_t(b.den_)));
        std::int64_t g2 = std::int64_t(gcd_u64(std::uint64_t(b.num_ < 0 ? -b.num_ : b.num_), std::uint64_t(a.den_)));
        i128 num = i128(a.num_ / g1) * (b.num_ / g2);
        i128 den = i128(a.den_ / g2) * (b.den_ / g1);
        if (fits64(num) && fits64(den)) {
            Scalar r;
            r.num_ = std::int64_t(num);
            r.den_ = std::int64_t(den);
            return r;
        }
        return Scalar::from_wide(num, den);
    }
    return Scalar::from_mpq(a.to_mpq() * b.to_mpq());
}

Scalar operator/(const Scalar& a, const Scalar& b) {
    if (b.sign() == 0) throw std::domain_error("Scalar: division by zero");
    if (!b.big_) {
        Scalar inv;
        inv.num_ = b.num_ < 0 ? -b.den_ : b.den_;
        inv.den_ = b.num_ < 0 ? -b.num_ : b.num_;
        return a * inv;
    }
    return Scalar::from_mpq(a.to_mpq() / b.to_mpq());
}

int compare(const Scalar& a, const Scalar& b) {
    if (!a.big_ && !b.big_) {
        if (a.den_ == b.den_) return (a.num_ > b.num_) - (a.num_ < b.num_);
        i128 l = i128(a.num_) * b.den_;
        i128 r = i128(b.num_) * a.den_;
        return (l > r) - (l < r);
    }
    int c = cmp(a.to_mpq(), b.to_mpq());
    return (c > 0) - (c < 0);
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.str(); }

namespace {

bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
}

[[noreturn]] void bad(std::string_view text) {
    throw std::invalid_argument("malformed number '" + std::string(text) + "'");
}

}  // namespace

Scalar Scalar::parse(std::string_view text) {
    std::string_view t = text;
    while (!t.empty() && std::isspace(static_cast<unsigned char>(t.front()))) t.remove_prefix(1);
    while (!t.empty() && std::isspace(static_cast<unsigned char>(t.back()))) t.remove_suffix(1);
    if (t.empty()) bad(text);
    bool neg = false;
    if (t.front() == '+' || t.front() == '-') {
        neg = t.front() == '-';
        t.remove_prefix(1);
    }
    mpq_class q;
    if (auto slash = t.find('/'); slash != std::string_view::npos) {
        std::string_view n = t.substr(0, slash), d = t.substr(slash + 1);
        if (!all_digits(n) || !all_digits(d)) bad(text);
        mpz_class den(std::string(d), 10);
        if (den == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
        q = mpq_class(mpz_class(std::string(n), 10), den);
    } else {
        std::string_view mant = t;
        long exp10 = 0;
        if (auto e = t.find_first_of("eE"); e != std::string_view::npos) {
            mant = t.substr(0, e);
            std::string_view es = t.substr(e + 1);
            bool eneg = false;
            if (!es.empty() && (es.front() == '+' || es.front() == '-')) {
                eneg = es.front() == '-';
                es.remove_prefix(1);
            }
            if (!all_digits(es) || es.size() > 6) bad(text);
            exp10 = std::stol(std::string(es));
            if (eneg) exp10 = -exp10;
        }
        std::string digits;
        auto dot = mant.find('.');
        if (dot == std::string_view::npos) {
            if (!all_digits(mant)) bad(text);
            digits = std::string(mant);
        } else {
            std::string_view ip = mant.substr(0, dot), fp = mant.substr(dot + 1);
            if ((ip.empty() && fp.empty()) || (!ip.empty() && !all_digits(ip)) || (!fp.empty() && !all_digits(fp)))
                bad(text);
            digits = std::string(ip) + std::string(fp);
            exp10 -= long(fp.size());
        }
        mpz_class n(digits, 10);
        mpz_class p;
        mpz_ui_pow_ui(p.get_mpz_t(), 10, static_cast<unsigned long>(exp10 < 0 ? -exp10 : exp10));
        q = exp10 >= 0 ? mpq_class(n * p) : mpq_class(n, p);
    }
    q.canonicalize();
    if (neg) q = -q;
    return from_mpq(std::move(q));
}

}  // namespace twosq
