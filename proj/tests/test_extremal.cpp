#include "doctest.h"
#include "fixtures.hpp"
#include "twosq/extremal.hpp"
#include "twosq/oracle.hpp"

using namespace twosq;
using fixtures::q;

TEST_CASE("frame of four stubs") {
    auto L = fixtures::e1();
    auto f = compute_extremal_frame(L);
    CHECK(f.a == Point{2, 5});
    CHECK(f.b == Point{5, 8});
    CHECK(f.c == Point{8, 5});
    CHECK(f.d == Point{5, 2});
    CHECK(f.rect == Rect{{2, 2}, {8, 8}});
    CHECK(f.proper());
    CHECK(f.lower_bound() == 6);
    CHECK(find_violators(f, L).empty());
    CHECK(is_hitting_rectangle(f, L).hitting);
    // Independent check: the frame rectangle as a square of side 6 hits everything.
    CHECK(oracle::verify_certificate(L, Square{{2, 2}, 6}, std::nullopt).ok);
}

TEST_CASE("single segment frame is reversed") {
    std::vector<Segment> L{Segment({0, 0}, {1, 1}, 1)};
    auto f = compute_extremal_frame(L);
    CHECK(f.a == Point{1, 1});
    CHECK(f.b == Point{0, 0});
    CHECK(f.c == Point{0, 0});
    CHECK(f.d == Point{1, 1});
    CHECK(f.rect == Rect{{0, 0}, {1, 1}});
    CHECK_FALSE(f.proper());
    CHECK_THROWS(compute_extremal_frame(std::vector<Segment>{}));
}

TEST_CASE("ties go to the smaller id") {
    std::vector<Segment> L{Segment({0, 10}, {3, 10}, 4), Segment({0, 0}, {3, 1}, 2), Segment({6, 5}, {9, 5}, 3)};
    auto f = compute_extremal_frame(L);
    CHECK(f.seg_a == 2);
}

TEST_CASE("corner violator and its clip points") {
    auto L = fixtures::e2();
    auto f = compute_extremal_frame(L);
    auto v = find_violators(f, L);
    REQUIRE(v.p());
    CHECK(v.p()->id == 5);
    CHECK(v.p()->clip1 == Point{2, 1});
    CHECK(v.p()->clip2 == Point{1, 2});
    CHECK_FALSE(v.q());
    CHECK_FALSE(v.r());
    CHECK_FALSE(v.s());
    CHECK(v.count() == 1);
    auto hr = is_hitting_rectangle(f, L);
    CHECK_FALSE(hr.hitting);
    CHECK(hr.unhit_ids == std::vector<int>{5});
    auto sp = special_indices(f, v);
    CHECK(sp.size() == 5);
}

TEST_CASE("reflection through the center moves the violator to the opposite corner") {
    std::vector<Segment> R;
    for (const auto& s : fixtures::e2())
        R.push_back(Segment({10 - s.e1.x, 10 - s.e1.y}, {10 - s.e2.x, 10 - s.e2.y}, s.id));
    auto f = compute_extremal_frame(R);
    auto v = find_violators(f, R);
    CHECK_FALSE(v.p());
    REQUIRE(v.r());
    CHECK(v.r()->id == 5);
    CHECK(v.r()->clip1 == Point{8, 9});
    CHECK(v.r()->clip2 == Point{9, 8});
}
