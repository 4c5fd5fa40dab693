#include "twosq/oracle.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <stdexcept>

namespace twosq::oracle {

namespace {

Scalar cross(const Point& o, const Point& a, const Point& b) {
    return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x);
}

Polygon convex_hull(std::vector<Point> pts) {
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    if (pts.size() < 3) return pts;
    Polygon h(2 * pts.size());
    size_t k = 0;
    for (size_t i = 0; i < pts.size(); ++i) {
        while (k >= 2 && cross(h[k - 2], h[k - 1], pts[i]).sign() <= 0) --k;
        h[k++] = pts[i];
    }
    for (size_t i = pts.size() - 1, t = k + 1; i-- > 0;) {
        while (k >= t && cross(h[k - 2], h[k - 1], pts[i]).sign() <= 0) --k;
        h[k++] = pts[i];
    }
    h.resize(k - 1);
    return h;
}

// Closed half-plane a*x + b*y <= c.
struct HalfPlane {
    Scalar a, b, c;
    Scalar excess(const Point& p) const { return a * p.x + b * p.y - c; }
};

HalfPlane left_of(const Point& u, const Point& v) {
    HalfPlane h{v.y - u.y, u.x - v.x, Scalar()};
    h.c = h.a * u.x + h.b * u.y;
    return h;
}

std::vector<HalfPlane> half_planes(const Polygon& poly) {
    std::vector<HalfPlane> out;
    if (poly.size() >= 3) {
        for (size_t i = 0; i < poly.size(); ++i) out.push_back(left_of(poly[i], poly[(i + 1) % poly.size()]));
    } else if (poly.size() == 2) {
        const Point &u = poly[0], &v = poly[1];
        out.push_back(left_of(u, v));
        out.push_back(left_of(v, u));
        Point d = v - u;
        out.push_back({-d.x, -d.y, -(d.x * u.x + d.y * u.y)});
        out.push_back({d.x, d.y, d.x * v.x + d.y * v.y});
    } else if (poly.size() == 1) {
        const Point& p = poly[0];
        out.push_back({1, 0, p.x});
        out.push_back({-1, 0, -p.x});
        out.push_back({0, 1, p.y});
        out.push_back({0, -1, -p.y});
    }
    return out;
}

Polygon clip(const Polygon& poly, const HalfPlane& h) {
    Polygon out;
    const size_t n = poly.size();
    std::vector<Scalar> ex;
    ex.reserve(n);
    bool all_in = true;
    for (const auto& p : poly) {
        ex.push_back(h.excess(p));
        if (ex.back().sign() > 0) all_in = false;
    }
    if (all_in) return poly;
    for (size_t i = 0; i < n; ++i) {
        size_t j = (i + 1) % n;
        int si = ex[i].sign(), sj = ex[j].sign();
        if (si <= 0) out.push_back(poly[i]);
        if ((si < 0 && sj > 0) || (si > 0 && sj < 0)) {
            Scalar t = ex[i] / (ex[i] - ex[j]);
            out.push_back(poly[i] + t * (poly[j] - poly[i]));
        }
    }
    Polygon dedup;
    for (const auto& p : out)
        if (dedup.empty() || !(dedup.back() == p)) dedup.push_back(p);
    while (dedup.size() > 1 && dedup.front() == dedup.back()) dedup.pop_back();
    return dedup;
}

Scalar diameter_bound(const std::vector<Segment>& L, const std::vector<int>& subset) {
    Scalar x0 = L[subset[0]].lx(), x1 = L[subset[0]].rx(), y0 = L[subset[0]].by(), y1 = L[subset[0]].ty();
    for (int i : subset) {
        x0 = min(x0, L[i].lx());
        x1 = max(x1, L[i].rx());
        y0 = min(y0, L[i].by());
        y1 = max(y1, L[i].ty());
    }
    return max(x1 - x0, y1 - y0);
}

}  // namespace

Polygon hit_region(const Segment& seg, const Scalar& s) {
    if (s.sign() < 0) throw std::invalid_argument("hit_region: negative side");
    std::vector<Point> pts;
    for (const Point& e : {seg.e1, seg.e2}) {
        pts.push_back(e);
        pts.push_back({e.x - s, e.y});
        pts.push_back({e.x, e.y - s});
        pts.push_back({e.x - s, e.y - s});
    }
    return convex_hull(std::move(pts));
}

Polygon intersect(const Polygon& a, const Polygon& b) {
    Polygon cur = a;
    for (const auto& h : half_planes(b)) {
        if (cur.empty()) break;
        cur = clip(cur, h);
    }
    return cur;
}

bool feasible_one(const std::vector<Segment>& L, const std::vector<int>& subset, const Scalar& s) {
    if (subset.empty()) return true;
    Polygon cur = hit_region(L[subset[0]], s);
    for (size_t k = 1; k < subset.size() && !cur.empty(); ++k) cur = intersect(cur, hit_region(L[subset[k]], s));
    return !cur.empty();
}

bool feasible_one(const std::vector<Segment>& L, const Scalar& s) {
    std::vector<int> all(L.size());
    std::iota(all.begin(), all.end(), 0);
    return feasible_one(L, all, s);
}

Scalar default_tolerance() { return Scalar(1, 1000000000000LL); }

namespace {

Scalar bisect(const std::vector<Segment>& L, const std::vector<int>& subset, Scalar hi, const Scalar& tol) {
    if (feasible_one(L, subset, 0)) return 0;
    Scalar lo = 0;
    const Scalar half(1, 2);
    while (!(hi - lo < tol)) {
        Scalar mid = (lo + hi) * half;
        if (feasible_one(L, subset, mid))
            hi = mid;
        else
            lo = mid;
    }
    return hi;
}

}  // namespace

Scalar min_square_size_subset(const std::vector<Segment>& L, const std::vector<int>& subset, const Scalar& tol) {
    if (subset.empty()) return 0;
    return bisect(L, subset, diameter_bound(L, subset), tol);
}

Scalar min_square_size(const std::vector<Segment>& L, const Scalar& tol) {
    std::vector<int> all(L.size());
    std::iota(all.begin(), all.end(), 0);
    return min_square_size_subset(L, all, tol);
}

TwoSquareResult two_square_oracle(const std::vector<Segment>& L, const Scalar& tol, int cap) {
    const int n = int(L.size());
    if (n > cap) throw std::length_error("two_square_oracle: instance exceeds the enumeration cap");
    TwoSquareResult best;
    best.size = 0;
    if (n == 0) return best;
    std::vector<int> all(n);
    std::iota(all.begin(), all.end(), 0);
    best.size = min_square_size_subset(L, all, tol);
    best.part1 = all;
    if (n == 1 || best.size.is_zero()) return best;

    // Regions are rebuilt whenever the bound drops; polygons already on the
    // search path were clipped at a larger size and remain over-approximations.
    std::vector<Polygon> regions(n);
    auto rebuild = [&] {
        for (int i = 0; i < n; ++i) regions[i] = hit_region(L[i], best.size);
    };
    rebuild();

    std::vector<int> side(n, 0);
    std::function<void(int, const Polygon&, const std::optional<Polygon>&)> dfs =
        [&](int k, const Polygon& p1, const std::optional<Polygon>& p2) {
            if (k == n) {
                if (!p2) return;
                std::vector<int> a, b;
                for (int i = 0; i < n; ++i) (side[i] == 0 ? a : b).push_back(i);
                // Improvements smaller than the tolerance are not worth a search.
                Scalar probe = best.size - tol;
                if (probe.sign() < 0 || !feasible_one(L, a, probe) || !feasible_one(L, b, probe)) return;
                Scalar v = max(bisect(L, a, probe, tol), bisect(L, b, probe, tol));
                if (v < best.size) {
                    best.size = v;
                    best.part1 = a;
                    best.part2 = b;
                    rebuild();
                }
                return;
            }
            Polygon q1 = intersect(p1, regions[k]);
            if (!q1.empty()) {
                side[k] = 0;
                dfs(k + 1, q1, p2);
            }
            Polygon q2 = p2 ? intersect(*p2, regions[k]) : regions[k];
            if (!q2.empty()) {
                side[k] = 1;
                dfs(k + 1, p1, q2);
            }
        };
    side[0] = 0;
    dfs(1, regions[0], std::nullopt);
    return best;
}

CertificateCheck verify_certificate(const std::vector<Segment>& L, const std::optional<Square>& s1,
                                    const std::optional<Square>& s2) {
    CertificateCheck r;
    for (const auto& s : L) {
        bool hit = (s1 && square_hits_segment(*s1, s).has_value()) || (s2 && square_hits_segment(*s2, s).has_value());
        if (!hit) {
            r.ok = false;
            r.unhit_ids.push_back(s.id);
        }
    }
    return r;
}

}  // namespace twosq::oracle
