#include "twosq/extremal.hpp"

#include <numeric>
#include <stdexcept>

namespace twosq {

Scalar ExtremalFrame::lower_bound() const {
    Scalar w = c.x - a.x, h = b.y - d.y;
    Scalar m = max(w, h);
    return m.sign() < 0 ? Scalar(0) : m;
}

const char* corner_name(int corner) {
    static const char* names[] = {"p", "q", "r", "s"};
    return names[corner];
}

ExtremalFrame compute_extremal_frame(const std::vector<Segment>& L, const std::vector<int>& subset) {
    if (subset.empty()) throw std::invalid_argument("extremal frame of an empty set");
    int ia = -1, ib = -1, ic = -1, id = -1;
    // Strict improvement or equal key with smaller id.
    auto better = [&](int cur, int cand, int cmp_result) {
        if (cur < 0) return true;
        if (cmp_result != 0) return cmp_result > 0;
        return L[cand].id < L[cur].id;
    };
    for (int i : subset) {
        const Segment& s = L[i];
        if (ia < 0 || better(ia, i, compare(L[ia].rx(), s.rx()))) ia = i;
        if (ib < 0 || better(ib, i, compare(s.by(), L[ib].by()))) ib = i;
        if (ic < 0 || better(ic, i, compare(s.lx(), L[ic].lx()))) ic = i;
        if (id < 0 || better(id, i, compare(L[id].ty(), s.ty()))) id = i;
    }
    ExtremalFrame f;
    f.idx_a = ia;
    f.idx_b = ib;
    f.idx_c = ic;
    f.idx_d = id;
    f.seg_a = L[ia].id;
    f.seg_b = L[ib].id;
    f.seg_c = L[ic].id;
    f.seg_d = L[id].id;
    f.a = L[ia].right();
    f.b = L[ib].bottom();
    f.c = L[ic].left();
    f.d = L[id].top();
    f.lambda_a = Line::vertical(f.a.x);
    f.lambda_b = Line::horizontal(f.b.y);
    f.lambda_c = Line::vertical(f.c.x);
    f.lambda_d = Line::horizontal(f.d.y);
    f.rect = Rect{{min(f.a.x, f.c.x), min(f.d.y, f.b.y)}, {max(f.a.x, f.c.x), max(f.d.y, f.b.y)}};
    return f;
}

ExtremalFrame compute_extremal_frame(const std::vector<Segment>& L) {
    std::vector<int> all(L.size());
    std::iota(all.begin(), all.end(), 0);
    return compute_extremal_frame(L, all);
}

std::optional<Violator> corner_violation(const ExtremalFrame& f, const Segment& s, int corner) {
    int sg = s.slope_sign();
    const bool left = corner == kP || corner == kQ;
    const bool bottom = corner == kP || corner == kS;
    const int want = (corner == kP || corner == kR) ? -1 : 1;
    if (sg != want) return std::nullopt;
    const Scalar& vx = left ? f.a.x : f.c.x;
    const Scalar& hy = bottom ? f.d.y : f.b.y;
    if (s.rx() < vx || vx < s.lx()) return std::nullopt;
    Scalar y = s.y_at(vx);
    if (bottom ? !(y < hy) : !(hy < y)) return std::nullopt;
    if (hy < s.by() || s.ty() < hy) return std::nullopt;
    Violator v;
    v.id = s.id;
    v.clip1 = {vx, y};
    v.clip2 = {s.x_at(hy), hy};
    return v;
}

ViolatorSet find_violators(const ExtremalFrame& f, const std::vector<Segment>& L, const std::vector<int>& subset) {
    ViolatorSet out;
    for (int corner = 0; corner < 4; ++corner) {
        const bool bottom = corner == kP || corner == kS;
        const bool left = corner == kP || corner == kQ;
        std::optional<Violator> by_vertical, by_horizontal;
        for (int i : subset) {
            auto v = corner_violation(f, L[i], corner);
            if (!v) continue;
            v->idx = i;
            // Farther along the vertical line: lower for bottom corners, higher for top.
            auto vert_better = [&](const Violator& cur) {
                int c = compare(v->clip1.y, cur.clip1.y);
                if (c == 0) return v->id < cur.id;
                return bottom ? c < 0 : c > 0;
            };
            // Farther along the horizontal line: more to the left for left corners.
            auto horiz_better = [&](const Violator& cur) {
                int c = compare(v->clip2.x, cur.clip2.x);
                if (c == 0) return v->id < cur.id;
                return left ? c < 0 : c > 0;
            };
            if (!by_vertical || vert_better(*by_vertical)) by_vertical = v;
            if (!by_horizontal || horiz_better(*by_horizontal)) by_horizontal = v;
        }
        out.v[corner] = by_vertical;
        if (by_vertical && by_horizontal->idx != by_vertical->idx) {
            out.alternatives[corner].push_back(*by_horizontal);
        }
    }
    return out;
}

ViolatorSet find_violators(const ExtremalFrame& f, const std::vector<Segment>& L) {
    std::vector<int> all(L.size());
    std::iota(all.begin(), all.end(), 0);
    return find_violators(f, L, all);
}

HitRectResult is_hitting_rectangle(const ExtremalFrame& f, const std::vector<Segment>& L) {
    HitRectResult r;
    for (const auto& s : L) {
        if (!rect_hits_segment(f.rect, s)) {
            r.hitting = false;
            r.unhit_ids.push_back(s.id);
        }
    }
    return r;
}

std::vector<int> special_indices(const ExtremalFrame& f, const ViolatorSet& v) {
    std::vector<int> out;
    auto add = [&](int i) {
        for (int j : out)
            if (j == i) return;
        out.push_back(i);
    };
    add(f.idx_a);
    add(f.idx_b);
    add(f.idx_c);
    add(f.idx_d);
    for (const auto& x : v.v)
        if (x) add(x->idx);
    for (const auto& alts : v.alternatives)
        for (const auto& x : alts) add(x.idx);
    return out;
}

}  // namespace twosq
