#include <random>

#include "doctest.h"
#include "fixtures.hpp"
#include "twosq/geometry.hpp"

using namespace twosq;
using fixtures::q;

TEST_CASE("scalar arithmetic stays canonical") {
    CHECK(Scalar(2, 4).str() == "1/2");
    CHECK(Scalar(-3, -6) == q(1, 2));
    CHECK((q(1, 3) + q(1, 6)) == q(1, 2));
    CHECK(Scalar::parse("2.5") == q(5, 2));
    CHECK(Scalar::parse("-1.25e1") == q(-25, 2));
    CHECK(Scalar::parse("7/21") == q(1, 3));
    CHECK_THROWS(Scalar::parse("1/0"));
    CHECK_THROWS(Scalar::parse("abc"));
    Scalar big(1LL << 62);
    Scalar prod = big * big * big;
    CHECK_FALSE(prod.is_small());
    CHECK(prod / big / big == big);
    CHECK((prod / big / big).is_small());
    CHECK(q(1, 3) < q(1, 2));
    CHECK(abs(q(-7, 2)) == q(7, 2));
}

TEST_CASE("segment endpoints are ordered") {
    Segment s({3, 1}, {1, 4}, 7);
    CHECK(s.e1 == Point{1, 4});
    CHECK(s.e2 == Point{3, 1});
    CHECK(s.top() == Point{1, 4});
    CHECK(s.bottom() == Point{3, 1});
    CHECK(s.slope_sign() == -1);
    CHECK_THROWS(Segment({1, 1}, {1, 1}, 1));
    CHECK(Segment({0, 0}, {1, 1}, 1).slope_class() == SlopeClass::Unit);
    CHECK(Segment({0, 0}, {1, 3}, 1).slope_class() == SlopeClass::PositiveGt1);
    CHECK(Segment({0, 0}, {3, 1}, 1).slope_class() == SlopeClass::PositiveLe1);
    CHECK(Segment({0, 0}, {0, 3}, 1).slope_class() == SlopeClass::Vertical);
}

TEST_CASE("segment intersection") {
    CHECK(segments_intersect(Segment({0, 0}, {1, 1}, 1), Segment({0, 1}, {1, 0}, 2)));
    CHECK_FALSE(segments_intersect(Segment({0, 0}, {1, 0}, 1), Segment({0, 1}, {1, 1}, 2)));
    CHECK(segments_intersect(Segment({0, 0}, {1, 1}, 1), Segment({1, 1}, {2, 0}, 2)));
    CHECK(segments_intersect(Segment({0, 0}, {2, 0}, 1), Segment({1, 0}, {3, 0}, 2)));
    CHECK_FALSE(segments_intersect(Segment({0, 0}, {1, 0}, 1), Segment({2, 0}, {3, 0}, 2)));
    std::mt19937_64 rng(3);
    std::uniform_int_distribution<int> c(0, 6);
    for (int i = 0; i < 2000; ++i) {
        Point a{c(rng), c(rng)}, b{c(rng), c(rng)}, d{c(rng), c(rng)}, e{c(rng), c(rng)};
        if (a == b || d == e) continue;
        Segment s(a, b, 1), t(d, e, 2);
        CHECK(segments_intersect(s, t) == segments_intersect(t, s));
    }
}

TEST_CASE("closed square hit test") {
    auto w = square_hits_segment(Square{{0, 0}, 2}, Segment({1, 1}, {3, 3}, 1));
    REQUIRE(w);
    CHECK(*w == Point{1, 1});
    CHECK(square_hits_segment(Square{{0, 0}, 2}, Segment({2, 0}, {2, 2}, 1)));
    CHECK_FALSE(square_hits_segment(Square{{0, 0}, 1}, Segment({q(1, 2), q(5, 2)}, {q(5, 2), q(1, 2)}, 1)));
    CHECK(square_hits_segment(Square{{0, 0}, q(3, 2)}, Segment({q(1, 2), q(5, 2)}, {q(5, 2), q(1, 2)}, 1)));
    auto through = square_hits_segment(Square{{0, 0}, 2}, Segment({-1, 1}, {3, 1}, 1));
    REQUIRE(through);
    CHECK(*through == Point{0, 1});
}

TEST_CASE("hit test agrees with dense sampling") {
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<int> c(-10, 10);
    for (int i = 0; i < 2000; ++i) {
        Point a{c(rng), c(rng)}, b{c(rng), c(rng)};
        if (a == b) continue;
        Segment s(a, b, 1);
        Square sq{{c(rng), c(rng)}, int(rng() % 6)};
        bool sampled = false;
        for (int k = 0; k <= 1000 && !sampled; ++k) {
            Scalar t(k, 1000);
            sampled = sq.contains(a + t * (b - a));
        }
        bool exact = square_hits_segment(sq, s).has_value();
        if (sampled) CHECK(exact);
        CHECK(exact == hits(sq, s));
    }
}

TEST_CASE("segment and line intersection") {
    Segment p({q(1, 2), q(5, 2)}, {q(5, 2), q(1, 2)}, 1);
    auto x = intersect_segment_line(p, Line::vertical(2));
    REQUIRE(x);
    CHECK(*x == Point{2, 1});
    CHECK_FALSE(intersect_segment_line(Segment({0, 0}, {2, 0}, 1), Line::horizontal(1)));
    auto on = intersect_segment_line(Segment({2, 2}, {0, 0}, 1), Line::unit_slope({0, 0}));
    REQUIRE(on);
    CHECK(*on == Point{0, 0});
}

TEST_CASE("reflections map squares to squares") {
    Square sq{{1, 2}, 3};
    for (int m = 0; m < 8; ++m) {
        Transform T{bool(m & 1), bool(m & 2), bool(m & 4)};
        Square img = T.apply(sq);
        CHECK(img.side == 3);
        CHECK(T.unapply(img) == sq);
        Segment s({0, 4}, {5, 3}, 1);
        CHECK(hits(sq, s) == hits(img, T.apply(s)));
    }
}
