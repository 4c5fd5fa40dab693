#include <random>

#include "doctest.h"
#include "fixtures.hpp"
#include "twosq/one_square.hpp"
#include "twosq/oracle.hpp"

using namespace twosq;
using fixtures::q;

TEST_CASE("frame-only instance is solved by the bounding square") {
    auto r = min_hitting_square_detail(fixtures::e1());
    CHECK(r.square.side == 6);
    CHECK(r.square.bl == Point{2, 2});
    CHECK(r.method == "frame");
}

TEST_CASE("corner violator moves the square down-left") {
    auto r = min_hitting_square_detail(fixtures::e2());
    CHECK(r.square.side == q(13, 2));
    CHECK(r.square.bl == Point{q(3, 2), q(3, 2)});
    CHECK(r.method == "anchor-p");
}

TEST_CASE("single segment gives a point square at its smaller endpoint") {
    std::vector<Segment> L{Segment({3, 4}, {1, 7}, 1)};
    auto sq = min_hitting_square(L);
    CHECK(sq.side == 0);
    CHECK(sq.bl == Point{1, 7});
}

TEST_CASE("anchored minimum on the violator chord") {
    auto L = fixtures::e2();
    auto f = compute_extremal_frame(L);
    auto v = find_violators(f, L);
    auto a = min_anchored_square(kP, f, v, L, special_indices(f, v));
    REQUIRE(a);
    CHECK(a->square.side == q(13, 2));
    CHECK(a->corner == Point{q(3, 2), q(3, 2)});
}

TEST_CASE("convex walk finds the lowest point of a max of lines") {
    std::vector<Affine> lines{{0, 0}, {4, -2}, {-1, 1}};
    auto m = minimize_max_affine(lines, 0, 10);
    CHECK(m.t == q(5, 3));
    CHECK(m.value == q(2, 3));
    auto edge = minimize_max_affine({{0, 0}, {4, -2}}, 0, 1);
    CHECK(edge.t == 1);
    CHECK(edge.value == 2);
}

TEST_CASE("locus of a vertical constraint is axis-parallel") {
    Segment anchor({0, 10}, {10, 0}, 0);
    Segment wall({-5, 0}, {-5, 30}, 1);
    Locus loc = build_locus(anchor, wall);
    CHECK_FALSE(loc.empty());
    CHECK(loc.non_axis_pieces() == 0);
    Segment collinear({20, -10}, {30, -20}, 2);
    CHECK_THROWS(build_locus(anchor, collinear));
}

TEST_CASE("random instances agree with the brute-force oracle") {
    std::mt19937_64 rng(12345);
    const double tol = 1e-9;
    for (int it = 0; it < 150; ++it) {
        int n = 3 + int(rng() % 10);
        auto L = fixtures::random_instance(rng, n);
        auto r = min_hitting_square_detail(L);
        for (const auto& s : L) REQUIRE(hits(r.square, s));
        double o = oracle::min_square_size(L).to_double();
        INFO("iteration " << it << " method " << r.method);
        CHECK(std::abs(r.square.side.to_double() - o) <= tol);
    }
}

TEST_CASE("locus shapes inside and beside the strip") {
    Segment anchor({0, 10}, {10, 0}, 0);
    Locus beside = build_locus(anchor, Segment({-30, -5}, {-30, 5}, 1));
    CHECK(beside.pieces() == 1);
    CHECK(beside.chain.front().x == beside.chain.back().x);

    Locus neg = build_locus(anchor, Segment({-6, -2}, {-2, -6}, 2));
    REQUIRE(neg.pieces() == 3);
    CHECK(neg.chain[0].y == neg.chain[1].y);
    CHECK(neg.chain[1] == Point{-6, -2});
    CHECK(neg.chain[2] == Point{-2, -6});
    CHECK(neg.chain[2].x == neg.chain[3].x);

    Locus pos = build_locus(anchor, Segment({-8, -8}, {-6, -2}, 3));
    REQUIRE(pos.pieces() == 2);
    CHECK(pos.non_axis_pieces() == 0);
    CHECK(pos.chain[0].y == pos.chain[1].y);
    CHECK(pos.chain[1].x == pos.chain[2].x);
}

TEST_CASE("combined locus and envelope") {
    Segment anchor({0, 10}, {10, 0}, 0);
    Segment deep({-30, -5}, {-30, 5}, 1), shallow({-6, -2}, {-2, -6}, 2);
    Locus both = build_locus_bc(anchor, deep, shallow);
    Locus d = build_locus(anchor, deep);
    CHECK(both.chain == d.chain);

    Strip strip = make_strip(anchor);
    CHECK_FALSE(upper_envelope(anchor, {}, strip));
    auto one = upper_envelope(anchor, {d}, strip);
    REQUIRE(one);
    REQUIRE(one->vertices.size() == d.chain.size());
    for (std::size_t i = 0; i < d.chain.size(); ++i) CHECK(one->vertices[i].bl == d.chain[i]);
    auto two = upper_envelope(anchor, {d, build_locus(anchor, shallow)}, strip);
    REQUIRE(two);
    for (const auto& v : two->vertices) CHECK(v.owners == std::vector<int>{1});
}

TEST_CASE("envelope of the worked example has its minimum at a vertex") {
    auto L = fixtures::e2();
    auto f = compute_extremal_frame(L);
    auto v = find_violators(f, L);
    Transform T = corner_to_tr(kP);
    Segment chord = T.apply(Segment(v.p()->clip1, v.p()->clip2, 5));
    std::vector<Locus> loci;
    for (int i : special_indices(f, v))
        if (L[i].id != 5) loci.push_back(build_locus(chord, T.apply(L[i])));
    auto env = upper_envelope(chord, loci, make_strip(chord));
    REQUIRE(env);
    CHECK(env->vertices.size() <= 19);
    Scalar best = env->vertices.front().side;
    for (const auto& x : env->vertices) best = min(best, x.side);
    CHECK(best == q(13, 2));
    CHECK(std::abs(oracle::min_square_size(L).to_double() - 6.5) <= 1e-9);
}

TEST_CASE("absent and reflected anchors") {
    auto L = fixtures::e2();
    auto f = compute_extremal_frame(L);
    auto v = find_violators(f, L);
    CHECK_FALSE(min_anchored_square(kQ, f, v, L, special_indices(f, v)));
    std::vector<Segment> R;
    for (const auto& s : L) R.push_back(Segment({10 - s.e1.x, 10 - s.e1.y}, {10 - s.e2.x, 10 - s.e2.y}, s.id));
    auto fr = compute_extremal_frame(R);
    auto vr = find_violators(fr, R);
    auto a = min_anchored_square(kR, fr, vr, R, special_indices(fr, vr));
    REQUIRE(a);
    CHECK(a->square.side == q(13, 2));
    CHECK(a->square.bl == Point{2, 2});
}

TEST_CASE("side is invariant under reordering, translation and scaling") {
    std::mt19937_64 rng(5);
    for (int it = 0; it < 50; ++it) {
        auto L = fixtures::random_instance(rng, 3 + int(rng() % 10));
        Square base = min_hitting_square(L);
        std::vector<Segment> rev(L.rbegin(), L.rend());
        CHECK(min_hitting_square(rev).side == base.side);
        std::vector<Segment> moved;
        for (const auto& s : L)
            moved.push_back(Segment({3 * s.e1.x + 1, 3 * s.e1.y - 2}, {3 * s.e2.x + 1, 3 * s.e2.y - 2}, s.id));
        CHECK(min_hitting_square(moved).side == 3 * base.side);
    }
}
