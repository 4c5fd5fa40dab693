#pragma once

#include <optional>
#include <vector>

#include "twosq/geometry.hpp"

namespace twosq::oracle {

// Convex polygon in counter-clockwise order.  Degenerate regions have one or
// two vertices.
using Polygon = std::vector<Point>;

// Bottom-left corners of the closed squares of side s that hit seg.
Polygon hit_region(const Segment& seg, const Scalar& s);

// Intersection of two convex polygons (either may be degenerate).
Polygon intersect(const Polygon& a, const Polygon& b);

bool feasible_one(const std::vector<Segment>& L, const Scalar& s);
bool feasible_one(const std::vector<Segment>& L, const std::vector<int>& subset, const Scalar& s);

Scalar default_tolerance();  // 1e-12

// Smallest side of a square hitting the subset, to within tol (upper end of
// the final bracket).  An empty subset needs side 0.
Scalar min_square_size_subset(const std::vector<Segment>& L, const std::vector<int>& subset,
                              const Scalar& tol = default_tolerance());
Scalar min_square_size(const std::vector<Segment>& L, const Scalar& tol = default_tolerance());

struct TwoSquareResult {
    Scalar size;
    std::vector<int> part1, part2;  // positions in L; part1 holds position 0
};

inline constexpr int kDefaultCap = 15;

// Exhaustive bipartition search.  Throws std::length_error above the cap.
TwoSquareResult two_square_oracle(const std::vector<Segment>& L, const Scalar& tol = default_tolerance(),
                                  int cap = kDefaultCap);

struct CertificateCheck {
    bool ok = true;
    std::vector<int> unhit_ids;
};
CertificateCheck verify_certificate(const std::vector<Segment>& L, const std::optional<Square>& s1,
                                    const std::optional<Square>& s2);

}  // namespace twosq::oracle
