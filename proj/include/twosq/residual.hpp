// Frame and violators of the not-yet-hit part of a segment set, maintained
// under a growing hit set by forward-only cursors.
#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "twosq/event_index.hpp"
#include "twosq/extremal.hpp"
#include "twosq/one_square.hpp"

namespace twosq {

// Repair counters, one per special role: d, a, q, p, b, r, s, c.
struct RepairCounters {
    std::array<std::uint64_t, 8> by_case{};
    std::uint64_t events = 0;
    std::uint64_t checks = 0;
    void merge(const RepairCounters& o) {
        for (int i = 0; i < 8; ++i) by_case[i] += o.by_case[i];
        events += o.events;
        checks += o.checks;
    }
};
enum RepairCase : int { kCaseD = 0, kCaseA, kCaseQ, kCaseP, kCaseB, kCaseR, kCaseS, kCaseC };

struct ResidualSpecials {
    int a = -1, b = -1, c = -1, d = -1;  // positions in L
    std::array<int, 4> viol{-1, -1, -1, -1};
    friend bool operator==(const ResidualSpecials&, const ResidualSpecials&) = default;
};

class ResidualTracker {
public:
    // With `debug` set the specials are recomputed from scratch after every
    // query and compared; a mismatch throws std::logic_error.
    ResidualTracker(const EventIndex& index, bool debug = false, RepairCounters* counters = nullptr);

    void mark_hit(int i);
    bool is_hit(int i) const { return hit_[i]; }
    int residual_size() const { return remaining_; }
    std::vector<int> residual() const;

    // max(c.x - a.x, b.y - d.y, 0) of the residual; 0 when it is empty.
    Scalar frame_lower_bound();
    ResidualSpecials specials();

    ExtremalFrame frame();
    ViolatorSet violators();
    // Smallest square hitting the residual; requires a nonempty residual.
    OneSquareResult solve();

private:
    struct ListCursor {
        const std::vector<int>* list = nullptr;
        std::size_t pos = 0;
    };
    struct CrossCursor {
        const std::vector<int>* list = nullptr;
        Scalar x;
        std::size_t pos = 0;
        bool valid = false;
    };

    int advance(ListCursor& c);
    int advance_cross(CrossCursor& c, const Scalar& x, bool top_down, int slope);
    void update_frame();
    void check_against_scratch(const ResidualSpecials& got) const;

    const EventIndex& index_;
    const std::vector<Segment>& L_;
    bool debug_;
    RepairCounters* counters_;
    std::vector<char> hit_;
    int remaining_;
    std::array<ListCursor, 4> frame_cur_;  // a, b, c, d
    std::array<CrossCursor, 4> cross_cur_;  // p, q, r, s
    ResidualSpecials last_;
    bool have_last_ = false;
};

}  // namespace twosq
