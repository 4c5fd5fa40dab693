#pragma once

#include <map>
#include <vector>

#include "twosq/geometry.hpp"

namespace twosq {

// Sorted views of a segment set.  Entries are positions in the input vector;
// ties are broken by segment id.
class EventIndex {
public:
    EventIndex(const std::vector<Segment>& L, int p_index);

    const std::vector<Segment>& segments() const { return *L_; }
    int p_index() const { return p_; }

    const std::vector<int>& by_top() const { return lt_; }        // ascending top y
    const std::vector<int>& by_bottom() const { return lb_; }     // descending bottom y
    const std::vector<int>& by_left() const { return ll_; }       // descending left x
    const std::vector<int>& by_right() const { return lr_; }      // ascending right x

    // Segments meeting the vertical line x = x0, bottom to top.  Built on
    // first request and cached.
    const std::vector<int>& vertical_crossings(const Scalar& x0) const;

    // Segments met by the upward (Iv1) or downward (Iv2) vertical ray from an
    // endpoint, nearest first, excluding segments through the endpoint.
    std::vector<int> ray_up(const Point& from) const;
    std::vector<int> ray_down(const Point& from) const;

private:
    const std::vector<Segment>* L_;
    int p_;
    std::vector<int> lt_, lb_, ll_, lr_;
    mutable std::map<Scalar, std::vector<int>> vcache_;
};

// Ordinate used to sort a segment on the vertical line x = x0 (the lower end
// for vertical segments).
Scalar crossing_y(const Segment& s, const Scalar& x0);

}  // namespace twosq
