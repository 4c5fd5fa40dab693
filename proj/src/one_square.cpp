#include "twosq/one_square.hpp"

#include <numeric>
#include <stdexcept>

namespace twosq {

namespace {

// Normal (a, b) of the supporting line with a*x + b*y = c; b > 0 for
// non-vertical segments, and a > 0 as well when the slope is negative.
struct Normal {
    Scalar a, b, c;
};

Normal normal_of(const Segment& s) {
    Scalar dx = s.e2.x - s.e1.x, dy = s.e2.y - s.e1.y;
    Normal n{-dy, dx, Scalar()};
    n.c = n.a * s.e1.x + n.b * s.e1.y;
    return n;
}

Affine affine_of(const Scalar& k0, const Scalar& kx, const Scalar& ky, const Point& z0, const Point& dz) {
    // k0 + kx * z.x + ky * z.y along z = z0 + t dz
    return {k0 + kx * z0.x + ky * z0.y, kx * dz.x + ky * dz.y};
}

Point along(const Point& z0, const Point& dz, const Scalar& t) { return {z0.x + t * dz.x, z0.y + t * dz.y}; }

// Breakpoints of the convex function max_i lines[i] on [lo, hi].
std::vector<Scalar> envelope_breaks(const std::vector<Affine>& lines, const Scalar& lo, const Scalar& hi) {
    std::vector<Scalar> ts{lo};
    Scalar t = lo;
    while (t < hi) {
        Scalar best = lines[0].at(t);
        for (size_t i = 1; i < lines.size(); ++i) best = max(best, lines[i].at(t));
        const Scalar* slope = nullptr;
        for (const auto& l : lines)
            if (l.at(t) == best && (!slope || *slope < l.c1)) slope = &l.c1;
        std::optional<Scalar> next;
        for (const auto& l : lines) {
            if (!(*slope < l.c1)) continue;
            Scalar cross = t + (best - l.at(t)) / (l.c1 - *slope);
            if (!next || cross < *next) next = cross;
        }
        if (!next || !(*next < hi)) {
            ts.push_back(hi);
            break;
        }
        ts.push_back(*next);
        t = *next;
    }
    return ts;
}

Scalar max_at(const std::vector<Affine>& lines, const Scalar& t) {
    Scalar best = lines[0].at(t);
    for (size_t i = 1; i < lines.size(); ++i) best = max(best, lines[i].at(t));
    return best;
}

}  // namespace

SizeBound tr_size_bound(const Point& z0, const Point& dz, const Segment& s) {
    SizeBound b;
    b.seg_id = s.id;
    b.domain.push_back(affine_of(-s.lx(), 1, 0, z0, dz));
    b.domain.push_back(affine_of(-s.by(), 0, 1, z0, dz));
    b.lower.push_back(affine_of(-s.rx(), 1, 0, z0, dz));
    b.lower.push_back(affine_of(-s.ty(), 0, 1, z0, dz));
    int sg = s.slope_sign();
    if (sg != 0) {
        Normal n = normal_of(s);
        if (sg < 0) {
            // tr corner on or above the line; bl corner on or below it.
            b.domain.push_back(affine_of(-n.c, n.a, n.b, z0, dz));
            Scalar k = n.a + n.b;
            b.lower.push_back(affine_of(-n.c / k, n.a / k, n.b / k, z0, dz));
        } else {
            // tl corner on or above the line; br corner on or below it.
            Scalar na = -n.a;
            b.lower.push_back(affine_of(n.c / na, -n.a / na, -n.b / na, z0, dz));
            b.lower.push_back(affine_of(-n.c / n.b, n.a / n.b, 1, z0, dz));
        }
    }
    return b;
}

std::optional<Scalar> tr_size_at(const Point& z, const Segment& s) {
    SizeBound b = tr_size_bound(z, {0, 0}, s);
    for (const auto& d : b.domain)
        if (d.c0.sign() < 0) return std::nullopt;
    Scalar v = 0;
    for (const auto& l : b.lower) v = max(v, l.c0);
    return v;
}

AffineMin minimize_max_affine(const std::vector<Affine>& lines, const Scalar& lo, const Scalar& hi) {
    Scalar t = lo;
    for (;;) {
        Scalar best = max_at(lines, t);
        if (!(t < hi)) return {t, best};
        const Scalar* slope = nullptr;
        for (const auto& l : lines)
            if (l.at(t) == best && (!slope || *slope < l.c1)) slope = &l.c1;
        if (slope->sign() >= 0) return {t, best};
        std::optional<Scalar> next;
        for (const auto& l : lines) {
            if (!(*slope < l.c1)) continue;
            Scalar cross = t + (best - l.at(t)) / (l.c1 - *slope);
            if (!next || cross < *next) next = cross;
        }
        if (!next || hi < *next) next = hi;
        t = *next;
    }
}

std::optional<std::pair<Scalar, Scalar>> feasible_interval(const std::vector<const SizeBound*>& bounds) {
    Scalar lo = 0, hi = 1;
    for (const SizeBound* b : bounds) {
        for (const auto& d : b->domain) {
            int g = d.c1.sign();
            if (g == 0) {
                if (d.c0.sign() < 0) return std::nullopt;
                continue;
            }
            Scalar root = -d.c0 / d.c1;
            if (g > 0) {
                if (lo < root) lo = root;
            } else if (root < hi) {
                hi = root;
            }
            if (hi < lo) return std::nullopt;
        }
    }
    return std::make_pair(lo, hi);
}

Strip make_strip(const Segment& anchor) {
    return {Line::unit_slope(anchor.e1), Line::unit_slope(anchor.e2)};
}

int Locus::non_axis_pieces() const {
    int n = 0;
    for (size_t i = 1; i < chain.size(); ++i)
        if (chain[i].x != chain[i - 1].x && chain[i].y != chain[i - 1].y) ++n;
    return n;
}

namespace {

Locus locus_from_bound(const Segment& anchor, SizeBound bound, int owner) {
    Locus loc;
    loc.owner = owner;
    loc.bound = std::move(bound);
    auto iv = feasible_interval({&loc.bound});
    if (!iv) return loc;
    std::vector<Affine> lines = loc.bound.lower;
    lines.push_back({0, 0});
    Point z0 = anchor.e1, dz = anchor.e2 - anchor.e1;
    for (const auto& t : envelope_breaks(lines, iv->first, iv->second)) {
        Scalar s = max_at(lines, t);
        Point z = along(z0, dz, t);
        loc.ts.push_back(t);
        loc.chain.push_back({z.x - s, z.y - s});
    }
    return loc;
}

}  // namespace

Locus build_locus(const Segment& anchor, const Segment& constraint) {
    Line al = Line::supporting(anchor);
    if (al.eval(constraint.e1).is_zero() && al.eval(constraint.e2).is_zero())
        throw std::invalid_argument("constraint lies on the anchor line");
    Point dz = anchor.e2 - anchor.e1;
    return locus_from_bound(anchor, tr_size_bound(anchor.e1, dz, constraint), constraint.id);
}

Locus build_locus_bc(const Segment& anchor, const Segment& seg_b, const Segment& seg_c) {
    Locus lb = build_locus(anchor, seg_b);
    Locus lc = build_locus(anchor, seg_c);
    SizeBound both;
    both.seg_id = seg_b.id;
    both.lower = lb.bound.lower;
    both.lower.insert(both.lower.end(), lc.bound.lower.begin(), lc.bound.lower.end());
    both.domain = lb.bound.domain;
    both.domain.insert(both.domain.end(), lc.bound.domain.begin(), lc.bound.domain.end());
    Locus out = locus_from_bound(anchor, std::move(both), seg_b.id);
    out.label = "bc";
    return out;
}

std::optional<Envelope> upper_envelope(const Segment& anchor, const std::vector<Locus>& loci, const Strip&) {
    if (loci.empty()) return std::nullopt;
    std::vector<const SizeBound*> bounds;
    std::vector<Affine> lines{{0, 0}};
    for (const auto& l : loci) {
        bounds.push_back(&l.bound);
        lines.insert(lines.end(), l.bound.lower.begin(), l.bound.lower.end());
    }
    auto iv = feasible_interval(bounds);
    if (!iv) return std::nullopt;
    Point z0 = anchor.e1, dz = anchor.e2 - anchor.e1;
    Envelope env;
    for (const auto& t : envelope_breaks(lines, iv->first, iv->second)) {
        EnvelopeVertex v;
        v.t = t;
        v.side = max_at(lines, t);
        Point z = along(z0, dz, t);
        v.bl = {z.x - v.side, z.y - v.side};
        for (const auto& l : loci) {
            std::vector<Affine> own = l.bound.lower;
            own.push_back({0, 0});
            if (max_at(own, t) == v.side) v.owners.push_back(l.owner);
        }
        env.vertices.push_back(std::move(v));
    }
    return env;
}

Transform corner_to_tr(int corner) {
    switch (corner) {
        case kP: return {true, true, false};
        case kQ: return {true, false, false};
        case kS: return {false, true, false};
        default: return {};
    }
}

std::optional<AnchoredSquare> min_square_with_corner_on(const Segment& anchor, int corner,
                                                        const std::vector<Segment>& L,
                                                        const std::vector<int>& hit) {
    Transform T = corner_to_tr(corner);
    Segment A = T.apply(anchor);
    Point z0 = A.e1, dz = A.e2 - A.e1;
    std::vector<SizeBound> bounds;
    bounds.reserve(hit.size());
    for (int i : hit) bounds.push_back(tr_size_bound(z0, dz, T.apply(L[i])));
    std::vector<const SizeBound*> ptrs;
    std::vector<Affine> lines{{0, 0}};
    for (const auto& b : bounds) {
        ptrs.push_back(&b);
        lines.insert(lines.end(), b.lower.begin(), b.lower.end());
    }
    auto iv = feasible_interval(ptrs);
    if (!iv) return std::nullopt;
    AffineMin m = minimize_max_affine(lines, iv->first, iv->second);
    Point z = along(z0, dz, m.t);
    Square sq{{z.x - m.value, z.y - m.value}, m.value};
    AnchoredSquare out{T.unapply(sq), m.t, T.unapply(z)};
    return out;
}

std::optional<AnchoredSquare> min_anchored_square(int corner, const ExtremalFrame&, const ViolatorSet& v,
                                                  const std::vector<Segment>& L,
                                                  const std::vector<int>& specials) {
    const auto& viol = v.v[corner];
    if (!viol) return std::nullopt;
    Segment chord(viol->clip1, viol->clip2, viol->id);
    return min_square_with_corner_on(chord, corner, L, specials);
}

OneSquareResult min_square_from_specials(const std::vector<Segment>& L, const ExtremalFrame& f,
                                         const ViolatorSet& v) {
    const std::vector<int> specials = special_indices(f, v);
    if (v.empty() && f.proper()) {
        Scalar side = f.lower_bound();
        return {{{f.a.x, f.b.y - side}, side}, "frame"};
    }
    std::optional<OneSquareResult> best;
    auto offer = [&](const Square& sq, const char* method) {
        if (!best || sq.side < best->square.side) best = OneSquareResult{sq, method};
    };
    if (!f.proper()) {
        // Squares of the frame-forced size in the corners of the feasible box.
        Scalar s0 = f.lower_bound();
        Scalar xs[2] = {f.c.x - s0, f.a.x};
        Scalar ys[2] = {f.b.y - s0, f.d.y};
        for (const auto& x : xs) {
            for (const auto& y : ys) {
                Square sq{{x, y}, s0};
                bool ok = true;
                for (int i : specials)
                    if (!hits(sq, L[i])) {
                        ok = false;
                        break;
                    }
                if (ok) {
                    offer(sq, "box-corner");
                    break;
                }
            }
            if (best) break;
        }
    }
    static const char* names[] = {"anchor-p", "anchor-q", "anchor-r", "anchor-s"};
    for (int c = 0; c < 4; ++c) {
        if (best && best->square.side.is_zero()) break;
        if (auto a = min_anchored_square(c, f, v, L, specials)) offer(a->square, names[c]);
        for (const auto& alt : v.alternatives[c]) {
            Segment chord(alt.clip1, alt.clip2, alt.id);
            if (auto a = min_square_with_corner_on(chord, c, L, specials)) offer(a->square, names[c]);
        }
    }
    if (!f.proper()) {
        for (int i : specials) {
            if (best && best->square.side.is_zero()) break;
            int sg = L[i].slope_sign();
            if (sg == 0) continue;
            int corners[2] = {sg < 0 ? kP : kQ, sg < 0 ? kR : kS};
            for (int c : corners)
                if (auto a = min_square_with_corner_on(L[i], c, L, specials)) offer(a->square, "segment-anchor");
        }
    }
    if (!best) throw std::logic_error("no hitting square candidate found");
    return *best;
}

OneSquareResult min_hitting_square_subset(const std::vector<Segment>& L, const std::vector<int>& subset) {
    ExtremalFrame f = compute_extremal_frame(L, subset);
    ViolatorSet v = find_violators(f, L, subset);
    return min_square_from_specials(L, f, v);
}

OneSquareResult min_hitting_square_detail(const std::vector<Segment>& L) {
    if (L.empty()) throw std::invalid_argument("min_hitting_square: empty input");
    std::vector<int> all(L.size());
    std::iota(all.begin(), all.end(), 0);
    return min_hitting_square_subset(L, all);
}

Square min_hitting_square(const std::vector<Segment>& L) { return min_hitting_square_detail(L).square; }

}  // namespace twosq
