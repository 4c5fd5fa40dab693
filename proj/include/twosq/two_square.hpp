// Two congruent axis-parallel squares of minimum size hitting a segment set.
//
// The solver reflects the input so that one violator of the extremal frame
// sits in the bottom-left role (the segment called l_p below), then examines
// the configurations of the first square S1 that hits l_p:
//   caseA  S1 grows from an endpoint of l_p
//   B1     S1's bottom edge rests on a top endpoint, bottom-left corner on l_p
//   B2     the transpose of B1 (left edge on a right endpoint)
//   B3     S1's top-right corner fixed by a vertical line V_j and a contact
// For each placement of S1 the rest is covered by the one-square solver.
// Small inputs are then finished by an exact branch-and-bound over
// bipartitions, which catches the placements the configurations above miss.
#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "twosq/event_index.hpp"
#include "twosq/geometry.hpp"
#include "twosq/residual.hpp"

namespace twosq {

// How the growing square [theta, theta + (s,s)] first meets a segment.
enum class ContactKind {
    LeftEndpoint,    // i:   right edge reaches the left endpoint
    BottomRight,     // ii:  bottom-right corner meets a positive-slope segment
    BottomEndpoint,  // iii: top edge reaches the bottom endpoint
    TopRight,        // iv:  top-right corner meets a negative-slope segment
    TopLeft,         // v:   top-left corner meets a positive-slope segment
    Inside,          //      theta itself lies on the segment
};
const char* contact_name(ContactKind k);

struct Contact {
    Scalar size;
    ContactKind kind;
};
// Smallest s >= 0 for which the square with bottom-left corner theta and side
// s hits seg; nullopt if no such square exists.
std::optional<Contact> bl_first_contact(const Point& theta, const Segment& seg);

struct CornerEvent {
    Point theta;      // on l_p
    int source = -1;  // position of the segment whose top endpoint defines theta
    Scalar tau_x;     // x of that endpoint
};
// Horizontal projections of top endpoints onto l_p, sorted, one per theta
// (the one with the smallest tau_x is kept).
std::vector<CornerEvent> enumerate_B1_corners(const std::vector<Segment>& L, int p_index);

struct DiagEvent {
    Point delta;  // top-right corner of S1
    Scalar size;
    ContactKind kind;
    std::vector<int> sources;  // segment ids making contact at this size
};
// Contact events on the diagonal through theta with delta.x >= min_x, sorted
// by size, equal points merged.
std::vector<DiagEvent> build_D_theta(const std::vector<Segment>& L, const Point& theta, const Scalar& min_x);

struct PairAssignment {
    int seg_id = -1;
    int square = 0;  // 1 or 2
    Point witness;
};

struct SquarePairSolution {
    Square s1, s2;       // both of side `size`
    Scalar size;
    Scalar side1, side2;  // sides before inflation
    std::vector<PairAssignment> assignment;
    std::string provenance;  // caseA, B1, B2, B3, fallback-oracle, exact-search
    bool proven_optimal = false;
    std::optional<Point> theta;  // defining corner for the sweep cases
    int violator_corner = -1;    // corner of the violator used as l_p
    RepairCounters counters;
};

struct SolveOptions {
    bool debug = false;       // from-scratch check of the residual after every event
    bool cases_only = false;  // skip the exact completion
    int exact_cap = 16;       // largest n for the exact completion
    int oracle_cap = 15;      // largest n for the oracle-based fallback
    std::uint64_t search_budget = 2000000;  // node limit of the exact search above the caps
    bool case_a = true, case_b1 = true, case_b2 = true, case_b3 = true;
};

// Best pair found by one case with l_p = L[p_index]; coordinates are those of
// L.  Returns nullopt when the case produces no placement below `bound`.
struct PairCandidate {
    Square s1;
    Square s2;
    Scalar size;
    std::string provenance;
    Point theta;
};
std::optional<PairCandidate> solve_case_A(const std::vector<Segment>& L, const EventIndex& index,
                                          const SolveOptions& opt, RepairCounters* counters,
                                          const std::optional<Scalar>& bound = std::nullopt);
std::optional<PairCandidate> solve_case_B1(const std::vector<Segment>& L, const EventIndex& index,
                                           const SolveOptions& opt, RepairCounters* counters,
                                           const std::optional<Scalar>& bound = std::nullopt);
std::optional<PairCandidate> solve_case_B2(const std::vector<Segment>& L, int p_index, const SolveOptions& opt,
                                           RepairCounters* counters,
                                           const std::optional<Scalar>& bound = std::nullopt);
std::optional<PairCandidate> solve_case_B3(const std::vector<Segment>& L, int p_index, const SolveOptions& opt,
                                           const std::optional<Scalar>& bound = std::nullopt);

// Exact minimum over bipartitions by branch and bound, searching only for
// values strictly below `upper`.  Returns the improving pair if one exists and
// sets `complete` to whether the search finished within the node budget.
std::optional<PairCandidate> exact_two_square(const std::vector<Segment>& L, const Scalar& upper,
                                              std::uint64_t budget, bool* complete);

// Throws std::invalid_argument on empty or intersecting input.
SquarePairSolution solve_two_squares(const std::vector<Segment>& L, const SolveOptions& opt = {});

// Rejects empty sets, zero-length segments and intersecting pairs.
void validate_instance(const std::vector<Segment>& L);

}  // namespace twosq
