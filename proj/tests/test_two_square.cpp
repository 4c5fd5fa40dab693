#include <random>

#include "doctest.h"
#include "fixtures.hpp"
#include "twosq/oracle.hpp"
#include "twosq/two_square.hpp"

using namespace twosq;
using fixtures::q;

TEST_CASE("event index orders and ray lists") {
    auto L = fixtures::e2();
    EventIndex idx(L, 4);
    std::vector<int> ids;
    for (int i : idx.by_top()) ids.push_back(L[i].id);
    CHECK(ids == std::vector<int>{4, 5, 1, 3, 2});
    auto up = idx.ray_up({5, 2});
    REQUIRE(up.size() == 1);
    CHECK(L[up[0]].id == 2);
    std::vector<Segment> one{Segment({0, 0}, {1, 1}, 1)};
    EventIndex i1(one, 0);
    CHECK(i1.by_left().size() == 1);
    CHECK(i1.ray_up({1, 1}).empty());
    CHECK(i1.ray_down({1, 1}).empty());
}

TEST_CASE("corner and diagonal events on the worked example") {
    auto L = fixtures::e2();
    auto C = enumerate_B1_corners(L, 4);
    bool found = false;
    for (const auto& c : C)
        if (c.theta == Point{1, 2}) {
            found = true;
            CHECK(L[c.source].id == 4);
        }
    CHECK(found);
    auto all = build_D_theta(L, {1, 2}, 0);
    bool s1_event = false;
    for (const auto& e : all)
        if (e.delta == Point{4, 5}) {
            s1_event = true;
            CHECK(e.kind == ContactKind::BottomEndpoint);
        }
    CHECK(s1_event);
    auto D = build_D_theta(L, {1, 2}, 5);
    REQUIRE_FALSE(D.empty());
    for (const auto& e : D) CHECK(e.delta.x >= 5);
    bool s2_event = false;
    for (const auto& e : D)
        if (e.delta == Point{7, 8} && e.kind == ContactKind::BottomEndpoint) s2_event = true;
    CHECK(s2_event);
}

TEST_CASE("first contact kinds") {
    auto c = bl_first_contact({0, 0}, Segment({4, 0}, {0, 4}, 1));
    REQUIRE(c);
    CHECK(c->size == 2);
    CHECK(c->kind == ContactKind::TopRight);
    auto d = bl_first_contact({0, 0}, Segment({-1, 1}, {1, 5}, 1));
    REQUIRE(d);
    CHECK(d->size == 3);
    CHECK(d->kind == ContactKind::TopLeft);
    auto e = bl_first_contact({0, 0}, Segment({1, -1}, {5, 1}, 1));
    REQUIRE(e);
    CHECK(e->size == 3);
    CHECK(e->kind == ContactKind::BottomRight);
    CHECK_FALSE(bl_first_contact({5, 5}, Segment({0, 0}, {4, 9}, 1)));
}

TEST_CASE("worked example with a corner violator") {
    auto L = fixtures::e2();
    auto sol = solve_two_squares(L);
    CHECK(sol.size == q(7, 2));
    CHECK(sol.s1 == Square{{q(3, 2), q(3, 2)}, q(7, 2)});
    CHECK(sol.s2 == Square{{5, 5}, q(7, 2)});
    CHECK(sol.side2 == 3);
    CHECK(sol.provenance == "B3");
    for (const auto& a : sol.assignment) CHECK(a.square == ((a.seg_id == 2 || a.seg_id == 3) ? 2 : 1));
    SolveOptions cases;
    cases.cases_only = true;
    CHECK(solve_two_squares(L, cases).size == q(7, 2));
}

TEST_CASE("frame-only input uses the fallback") {
    auto sol = solve_two_squares(fixtures::e1());
    CHECK(sol.provenance == "fallback-oracle");
    CHECK(std::abs(sol.size.to_double() - oracle::two_square_oracle(fixtures::e1()).size.to_double()) <= 1e-9);
}

TEST_CASE("far-apart pair needs point squares") {
    std::vector<Segment> L{Segment({0, 0}, {1, 0}, 1), Segment({50, 50}, {51, 52}, 2)};
    auto sol = solve_two_squares(L);
    CHECK(sol.size == 0);
}

TEST_CASE("debug sweep agrees with from-scratch residuals") {
    std::mt19937_64 rng(77);
    SolveOptions opt;
    opt.debug = true;
    for (int it = 0; it < 40; ++it) {
        auto L = fixtures::random_instance(rng, 4 + int(rng() % 9));
        CHECK_NOTHROW(solve_two_squares(L, opt));
    }
}

TEST_CASE("random instances agree with the bipartition oracle") {
    std::mt19937_64 rng(4242);
    int cases_misses = 0;
    for (int it = 0; it < 60; ++it) {
        auto L = fixtures::random_instance(rng, 4 + int(rng() % 7));
        auto sol = solve_two_squares(L);
        double o = oracle::two_square_oracle(L).size.to_double();
        INFO("iteration " << it);
        CHECK(std::abs(sol.size.to_double() - o) <= 1e-9);
        SolveOptions cases;
        cases.cases_only = true;
        auto p = solve_two_squares(L, cases);
        CHECK(p.size >= sol.size);
        cases_misses += std::abs(p.size.to_double() - o) > 1e-9;
    }
    MESSAGE("cases-only mismatches: " << cases_misses);
}
