// Minimum axis-parallel square hitting a set of segments.
//
// The square is described by the corner that slides along an anchor chord.
// Everything is phrased for the top-right corner; the other three corners are
// handled by reflecting the input (see Transform) before and after.
//
// For a tr corner z and a segment l, the smallest side s for which the square
// [z - (s,s), z] hits l is the maximum of at most four affine functions of z,
// finite on a convex region.  Along a straight anchor every such bound is
// affine in the anchor parameter t, so each locus and the upper envelope are
// convex piecewise-linear functions of t and the anchored minimum sits at an
// envelope vertex.
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "twosq/extremal.hpp"
#include "twosq/geometry.hpp"

namespace twosq {

struct Affine {
    Scalar c0, c1;  // c0 + c1 * t
    Scalar at(const Scalar& t) const { return c0 + c1 * t; }
};

// Size requirement of one segment along an anchor z(t) = z0 + t * dz.
struct SizeBound {
    int seg_id = -1;
    std::vector<Affine> lower;   // s >= each
    std::vector<Affine> domain;  // each >= 0, else the segment cannot be reached
};

SizeBound tr_size_bound(const Point& z0, const Point& dz, const Segment& s);

// Smallest s with the square [z - (s,s), z] hitting s, or nullopt if none.
std::optional<Scalar> tr_size_at(const Point& z, const Segment& s);

struct AffineMin {
    Scalar t;
    Scalar value;
};
// Minimum over t in [lo, hi] of max_i lines[i](t); smallest minimizing t.
AffineMin minimize_max_affine(const std::vector<Affine>& lines, const Scalar& lo, const Scalar& hi);

// Feasible parameter interval for a set of domain constraints inside [0, 1].
std::optional<std::pair<Scalar, Scalar>> feasible_interval(const std::vector<const SizeBound*>& bounds);

struct Strip {
    Line dl1;  // unit slope through the upper-left end of the anchor
    Line dl2;  // unit slope through the lower-right end
};
Strip make_strip(const Segment& anchor);

struct Locus {
    int owner = -1;           // segment id of the constraint
    std::string label;        // role label such as "a" or "p"
    SizeBound bound;          // functional form along the anchor
    std::vector<Scalar> ts;   // breakpoints in anchor parameter
    std::vector<Point> chain; // bottom-left corner at each breakpoint
    bool empty() const { return chain.empty(); }
    int pieces() const { return chain.size() < 2 ? 0 : int(chain.size()) - 1; }
    int non_axis_pieces() const;
};

// Locus of the bottom-left corner of the smallest square whose top-right
// corner lies on `anchor` (parametrized from e1 to e2) and which hits
// `constraint`.  Throws if the constraint lies on the anchor's line.
Locus build_locus(const Segment& anchor, const Segment& constraint);
// Pointwise deeper of two loci (the square must hit both).
Locus build_locus_bc(const Segment& anchor, const Segment& seg_b, const Segment& seg_c);

struct EnvelopeVertex {
    Scalar t;
    Point bl;
    Scalar side;
    std::vector<int> owners;  // loci attaining the envelope here
};
struct Envelope {
    std::vector<EnvelopeVertex> vertices;  // increasing t
};

// Upper envelope of the loci restricted to the closed strip; nullopt when the
// list is empty or the loci have no common feasible parameter.
std::optional<Envelope> upper_envelope(const Segment& anchor, const std::vector<Locus>& loci, const Strip& strip);

struct AnchoredSquare {
    Square square;         // in input coordinates
    Scalar t;              // anchor parameter of the sliding corner
    Point corner;          // the sliding corner, in input coordinates
};

// Smallest square whose corner for the given violator (bl for p, tl for q,
// tr for r, br for s) lies on the violator's clip chord and which hits every
// listed segment.
std::optional<AnchoredSquare> min_anchored_square(int corner, const ExtremalFrame& f, const ViolatorSet& v,
                                                  const std::vector<Segment>& L,
                                                  const std::vector<int>& specials);

// Same with an arbitrary anchor segment and corner; `hit` are the segments the
// square must reach.
std::optional<AnchoredSquare> min_square_with_corner_on(const Segment& anchor, int corner,
                                                        const std::vector<Segment>& L,
                                                        const std::vector<int>& hit);

struct OneSquareResult {
    Square square;
    std::string method;  // "single", "frame", "anchor-p".."anchor-s", "segment-anchor", "box-corner"
};

OneSquareResult min_hitting_square_detail(const std::vector<Segment>& L);
Square min_hitting_square(const std::vector<Segment>& L);

// Minimum square of the subset given its frame and violators (only the
// special segments are examined).
OneSquareResult min_square_from_specials(const std::vector<Segment>& L, const ExtremalFrame& f,
                                         const ViolatorSet& v);
OneSquareResult min_hitting_square_subset(const std::vector<Segment>& L, const std::vector<int>& subset);

// Transform that maps the given corner of a square to its top-right corner.
Transform corner_to_tr(int corner);

}  // namespace twosq
