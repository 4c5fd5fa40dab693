#include "doctest.h"
#include <random>

#include "twosq/oracle.hpp"

using namespace twosq;
#include "fixtures.hpp"

using fixtures::q;

TEST_CASE("hit region of a diagonal segment is a hexagon") {
    auto h = oracle::hit_region(Segment({0, 0}, {1, 1}, 1), 1);
    std::vector<Point> want{{-1, -1}, {0, -1}, {1, 0}, {1, 1}, {0, 1}, {-1, 0}};
    CHECK(h == want);
    auto r = oracle::hit_region(Segment({0, 0}, {2, 0}, 1), 1);
    CHECK(r.size() == 4);
    auto z = oracle::hit_region(Segment({0, 0}, {2, 3}, 1), 0);
    CHECK(z.size() == 2);
}

TEST_CASE("hit region membership matches the direct hit test") {
    std::mt19937_64 rng(99);
    std::uniform_int_distribution<int> c(-8, 8);
    for (int it = 0; it < 3000; ++it) {
        Point a{c(rng), c(rng)}, b{c(rng), c(rng)};
        if (a == b) continue;
        Segment s(a, b, 1);
        Scalar side(int(rng() % 5), 2);
        Point p{Scalar(c(rng), 2), Scalar(c(rng), 2)};
        bool in = !oracle::intersect(oracle::hit_region(s, side), {p}).empty();
        CHECK(in == hits(Square{p, side}, s));
    }
}

TEST_CASE("feasibility thresholds on the worked examples") {
    auto E1 = fixtures::e1(), E2 = fixtures::e2();
    CHECK(oracle::feasible_one(E2, q(13, 2)));
    CHECK_FALSE(oracle::feasible_one(E2, q(13, 2) - q(1, 1000)));
    CHECK(oracle::feasible_one(E1, 6));
    CHECK_FALSE(oracle::feasible_one(E1, q(59, 10)));
    CHECK(oracle::feasible_one({Segment({0, 0}, {1, 2}, 1)}, 0));
}

TEST_CASE("bisection brackets the subset optimum") {
    auto E2 = fixtures::e2();
    double tol = 1e-12;
    CHECK(std::abs(oracle::min_square_size_subset(E2, {1, 2}).to_double() - 3) <= tol);
    CHECK(oracle::min_square_size_subset(E2, {3}) == 0);
    CHECK(std::abs(oracle::min_square_size(E2).to_double() - 6.5) <= tol);
}

TEST_CASE("bipartition search") {
    auto r = oracle::two_square_oracle(fixtures::e2());
    CHECK(std::abs(r.size.to_double() - 3.5) <= 1e-12);
    CHECK(r.part1 == std::vector<int>{0, 3, 4});
    CHECK(r.part2 == std::vector<int>{1, 2});
    std::vector<Segment> two{Segment({0, 0}, {1, 0}, 1), Segment({50, 50}, {51, 52}, 2)};
    CHECK(oracle::two_square_oracle(two).size == 0);
    CHECK(oracle::two_square_oracle({Segment({0, 0}, {1, 0}, 1)}).size == 0);
    std::vector<Segment> many;
    for (int i = 0; i < 16; ++i) many.push_back(Segment({i * 3, 0}, {i * 3 + 1, 0}, i + 1));
    CHECK_THROWS_AS(oracle::two_square_oracle(many), std::length_error);
}

TEST_CASE("certificate check") {
    auto E2 = fixtures::e2();
    Square s1{{q(3, 2), q(3, 2)}, q(7, 2)}, s2{{5, 5}, q(7, 2)};
    auto ok = oracle::verify_certificate(E2, s1, s2);
    CHECK(ok.ok);
    CHECK(ok.unhit_ids.empty());
    auto bad = oracle::verify_certificate(E2, s1, std::nullopt);
    CHECK_FALSE(bad.ok);
    CHECK(bad.unhit_ids == std::vector<int>{2, 3});
    CHECK(oracle::verify_certificate({}, std::nullopt, std::nullopt).ok);
}
