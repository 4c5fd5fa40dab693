// Extremal frame of a segment set and the segments that escape it.
//
// a is the right endpoint with the smallest x, b the bottom endpoint with the
// largest y, c the left endpoint with the largest x and d the top endpoint with
// the smallest y.  The lines x = a.x, y = b.y, x = c.x, y = d.y are lambda_a..d.
//
// A violator is reported per corner of the frame.  For the bottom-left
// corner K = (a.x, d.y) it is a segment of negative slope whose supporting
// line passes strictly below-left of K; the reported one is the farthest of
// these (lowest crossing of lambda_a).  The other corners are mirror images:
//   q: top-left  K = (a.x, b.y), positive slope, passes above K, highest crossing
//   r: top-right K = (c.x, b.y), negative slope, passes above K, highest crossing
//   s: bottom-right K = (c.x, d.y), positive slope, passes below K, lowest crossing
// When a.x <= c.x and d.y <= b.y these are exactly the segments missed by the
// frame rectangle.  For reversed frames (all segments cross a common vertical
// or horizontal line) the corner definition is the one that keeps the
// special-segment reduction valid.
#pragma once

#include <array>
#include <optional>
#include <vector>

#include "twosq/geometry.hpp"

namespace twosq {

struct ExtremalFrame {
    Point a, b, c, d;
    // Positions in the input vector and the segment ids.
    int idx_a = -1, idx_b = -1, idx_c = -1, idx_d = -1;
    int seg_a = -1, seg_b = -1, seg_c = -1, seg_d = -1;
    Line lambda_a, lambda_b, lambda_c, lambda_d;
    Rect rect;  // normalized bounding rectangle of a, b, c, d's coordinates

    const Scalar& ax() const { return a.x; }
    const Scalar& by() const { return b.y; }
    const Scalar& cx() const { return c.x; }
    const Scalar& dy() const { return d.y; }
    bool proper() const { return a.x <= c.x && d.y <= b.y; }
    // max(c.x - a.x, b.y - d.y, 0): no square narrower than this hits all four.
    Scalar lower_bound() const;
};

enum Corner : int { kP = 0, kQ = 1, kR = 2, kS = 3 };
const char* corner_name(int corner);

struct Violator {
    int idx = -1;
    int id = -1;
    Point clip1;  // on the vertical line of the corner (lambda_a or lambda_c)
    Point clip2;  // on the horizontal line of the corner (lambda_d or lambda_b)
};

struct ViolatorSet {
    std::array<std::optional<Violator>, 4> v;  // indexed by Corner
    // Alternative choices when the two "farthest" orders disagree; empty when
    // they agree, which is always the case for pairwise disjoint segments.
    std::array<std::vector<Violator>, 4> alternatives;

    const std::optional<Violator>& p() const { return v[kP]; }
    const std::optional<Violator>& q() const { return v[kQ]; }
    const std::optional<Violator>& r() const { return v[kR]; }
    const std::optional<Violator>& s() const { return v[kS]; }
    bool empty() const { return !v[0] && !v[1] && !v[2] && !v[3]; }
    int count() const { return int(bool(v[0])) + int(bool(v[1])) + int(bool(v[2])) + int(bool(v[3])); }
};

// Indices refer to positions in L.  The subset overloads restrict the
// computation to the listed positions.
ExtremalFrame compute_extremal_frame(const std::vector<Segment>& L);
ExtremalFrame compute_extremal_frame(const std::vector<Segment>& L, const std::vector<int>& subset);

// Does segment s violate the given corner of the frame?  Returns the clip
// points when it does.
std::optional<Violator> corner_violation(const ExtremalFrame& f, const Segment& s, int corner);

ViolatorSet find_violators(const ExtremalFrame& f, const std::vector<Segment>& L);
ViolatorSet find_violators(const ExtremalFrame& f, const std::vector<Segment>& L, const std::vector<int>& subset);

struct HitRectResult {
    bool hitting = true;
    std::vector<int> unhit_ids;
};
HitRectResult is_hitting_rectangle(const ExtremalFrame& f, const std::vector<Segment>& L);

// The special segments: frame segments and violators, deduplicated, as
// positions in L, in the order a, b, c, d, p, q, r, s.
std::vector<int> special_indices(const ExtremalFrame& f, const ViolatorSet& v);

}  // namespace twosq
