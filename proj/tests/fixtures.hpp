#pragma once

#include <random>
#include <vector>

#include "twosq/geometry.hpp"

namespace fixtures {

using twosq::Point;
using twosq::Scalar;
using twosq::Segment;

inline Scalar q(long long n, long long d = 1) { return Scalar(n, d); }
inline Point pt(Scalar x, Scalar y) { return {std::move(x), std::move(y)}; }

inline std::vector<Segment> e1() {
    return {Segment({0, 5}, {2, 5}, 1), Segment({5, 8}, {5, 10}, 2), Segment({8, 5}, {10, 5}, 3),
            Segment({5, 0}, {5, 2}, 4)};
}

inline std::vector<Segment> e2() {
    auto L = e1();
    L.push_back(Segment(pt(q(1, 2), q(5, 2)), pt(q(5, 2), q(1, 2)), 5));
    return L;
}

// Random pairwise disjoint integer segments.
inline std::vector<Segment> random_instance(std::mt19937_64& rng, int n, int box = 30, int len = 10) {
    std::uniform_int_distribution<int> c(0, box), d(-len, len);
    std::vector<Segment> L;
    while (int(L.size()) < n) {
        int x = c(rng), y = c(rng), dx = d(rng), dy = d(rng);
        if (dx == 0 && dy == 0) continue;
        Segment s({x, y}, {x + dx, y + dy}, int(L.size()) + 1);
        bool ok = true;
        for (const auto& t : L)
            if (twosq::segments_intersect(s, t)) {
                ok = false;
                break;
            }
        if (ok) L.push_back(s);
    }
    return L;
}

}  // namespace fixtures
