#include "twosq/residual.hpp"

#include <stdexcept>

namespace twosq {

ResidualTracker::ResidualTracker(const EventIndex& index, bool debug, RepairCounters* counters)
    : index_(index), L_(index.segments()), debug_(debug), counters_(counters), hit_(L_.size(), 0),
      remaining_(int(L_.size())) {
    frame_cur_[0].list = &index.by_right();
    frame_cur_[1].list = &index.by_bottom();
    frame_cur_[2].list = &index.by_left();
    frame_cur_[3].list = &index.by_top();
}

void ResidualTracker::mark_hit(int i) {
    if (hit_[i]) return;
    hit_[i] = 1;
    --remaining_;
}

std::vector<int> ResidualTracker::residual() const {
    std::vector<int> out;
    out.reserve(remaining_);
    for (int i = 0; i < int(L_.size()); ++i)
        if (!hit_[i]) out.push_back(i);
    return out;
}

int ResidualTracker::advance(ListCursor& c) {
    const auto& v = *c.list;
    while (c.pos < v.size() && hit_[v[c.pos]]) ++c.pos;
    return c.pos < v.size() ? v[c.pos] : -1;
}

int ResidualTracker::advance_cross(CrossCursor& c, const Scalar& x, bool top_down, int slope) {
    if (!c.valid || c.x != x) {
        c.list = &index_.vertical_crossings(x);
        c.x = x;
        c.pos = 0;
        c.valid = true;
    }
    const auto& v = *c.list;
    const std::size_t n = v.size();
    for (; c.pos < n; ++c.pos) {
        int i = v[top_down ? n - 1 - c.pos : c.pos];
        if (!hit_[i] && L_[i].slope_sign() == slope) return i;
    }
    return -1;
}

Scalar ResidualTracker::frame_lower_bound() {
    if (remaining_ == 0) return 0;
    int a = advance(frame_cur_[0]), b = advance(frame_cur_[1]), c = advance(frame_cur_[2]),
        d = advance(frame_cur_[3]);
    Scalar w = L_[c].lx() - L_[a].rx(), h = L_[b].by() - L_[d].ty();
    Scalar m = max(w, h);
    return m.sign() < 0 ? Scalar(0) : m;
}

ResidualSpecials ResidualTracker::specials() {
    ResidualSpecials s;
    if (remaining_ == 0) return s;
    s.a = advance(frame_cur_[0]);
    s.b = advance(frame_cur_[1]);
    s.c = advance(frame_cur_[2]);
    s.d = advance(frame_cur_[3]);
    const Scalar& ax = L_[s.a].rx();
    const Scalar& cx = L_[s.c].lx();
    const Scalar& by = L_[s.b].by();
    const Scalar& dy = L_[s.d].ty();
    // The first residual candidate in each scan order is the violator exactly
    // when it crosses beyond the frame line.
    if (int i = advance_cross(cross_cur_[kP], ax, false, -1); i >= 0 && L_[i].y_at(ax) < dy) s.viol[kP] = i;
    if (int i = advance_cross(cross_cur_[kQ], ax, true, 1); i >= 0 && by < L_[i].y_at(ax)) s.viol[kQ] = i;
    if (int i = advance_cross(cross_cur_[kR], cx, true, -1); i >= 0 && by < L_[i].y_at(cx)) s.viol[kR] = i;
    if (int i = advance_cross(cross_cur_[kS], cx, false, 1); i >= 0 && L_[i].y_at(cx) < dy) s.viol[kS] = i;

    if (counters_) {
        ++counters_->events;
        if (have_last_) {
            auto& k = counters_->by_case;
            k[kCaseD] += s.d != last_.d;
            k[kCaseA] += s.a != last_.a;
            k[kCaseQ] += s.viol[kQ] != last_.viol[kQ];
            k[kCaseP] += s.viol[kP] != last_.viol[kP];
            k[kCaseB] += s.b != last_.b;
            k[kCaseR] += s.viol[kR] != last_.viol[kR];
            k[kCaseS] += s.viol[kS] != last_.viol[kS];
            k[kCaseC] += s.c != last_.c;
        }
    }
    last_ = s;
    have_last_ = true;
    if (debug_) check_against_scratch(s);
    return s;
}

void ResidualTracker::check_against_scratch(const ResidualSpecials& got) const {
    std::vector<int> R = residual();
    ExtremalFrame f = compute_extremal_frame(L_, R);
    ViolatorSet v = find_violators(f, L_, R);
    ResidualSpecials want;
    want.a = f.idx_a;
    want.b = f.idx_b;
    want.c = f.idx_c;
    want.d = f.idx_d;
    for (int k = 0; k < 4; ++k) want.viol[k] = v.v[k] ? v.v[k]->idx : -1;
    if (counters_) ++counters_->checks;
    if (!(want == got)) throw std::logic_error("residual specials diverged from the from-scratch recomputation");
}

ExtremalFrame ResidualTracker::frame() {
    ResidualSpecials s = specials();
    return compute_extremal_frame(L_, {s.a, s.b, s.c, s.d});
}

ViolatorSet ResidualTracker::violators() {
    ResidualSpecials s = specials();
    ExtremalFrame f = compute_extremal_frame(L_, {s.a, s.b, s.c, s.d});
    ViolatorSet out;
    for (int k = 0; k < 4; ++k) {
        if (s.viol[k] < 0) continue;
        out.v[k] = corner_violation(f, L_[s.viol[k]], k);
        if (!out.v[k]) throw std::logic_error("tracked violator fails the corner test");
        out.v[k]->idx = s.viol[k];
    }
    return out;
}

OneSquareResult ResidualTracker::solve() {
    if (remaining_ == 0) throw std::logic_error("solve on an empty residual");
    ResidualSpecials s = specials();
    ExtremalFrame f = compute_extremal_frame(L_, {s.a, s.b, s.c, s.d});
    ViolatorSet v;
    for (int k = 0; k < 4; ++k) {
        if (s.viol[k] < 0) continue;
        v.v[k] = corner_violation(f, L_[s.viol[k]], k);
        if (!v.v[k]) throw std::logic_error("tracked violator fails the corner test");
        v.v[k]->idx = s.viol[k];
    }
    return min_square_from_specials(L_, f, v);
}

}  // namespace twosq
