#include <sstream>

#include "doctest.h"
#include "twosq/extremal.hpp"
#include "twosq/instance.hpp"
#include "twosq/report.hpp"

using namespace twosq;

namespace {
Instance from_text(const std::string& s) {
    std::istringstream is(s);
    return parse_instance(is);
}
}  // namespace

TEST_CASE("text parsing") {
    auto inst = from_text("# name: demo\n0 5 2 5\n1/2 5/2 5/2 1/2  # trailing comment\n\n");
    CHECK(inst.name == "demo");
    REQUIRE(inst.segments.size() == 2);
    CHECK(inst.segments[0].e1 == Point{0, 5});
    CHECK(inst.segments[1].e1 == Point{Scalar(1, 2), Scalar(5, 2)});
    CHECK(inst.segments[1].id == 2);
    auto dec = from_text("0.5 0 1.25 3\n");
    CHECK(dec.segments[0].e2 == Point{Scalar(5, 4), 3});
}

TEST_CASE("parse errors carry their location") {
    try {
        from_text("0 0 1 1\n0 0 1\n");
        FAIL("expected an error");
    } catch (const InstanceError& e) {
        CHECK(e.kind == InstanceError::Kind::Parse);
        CHECK(e.line == 2);
    }
    try {
        from_text("0 5 2 5\n5 8 5 10\n1 5 3 5\n");
        FAIL("expected an error");
    } catch (const InstanceError& e) {
        CHECK(e.kind == InstanceError::Kind::Intersection);
        CHECK(e.id1 == 1);
        CHECK(e.id2 == 3);
    }
    try {
        from_text("1 1 1 1\n");
        FAIL("expected an error");
    } catch (const InstanceError& e) {
        CHECK(e.kind == InstanceError::Kind::ZeroLength);
    }
    CHECK_THROWS_AS(from_text("0 0 x 1\n"), InstanceError);
}

TEST_CASE("round trips are exact") {
    GenerateOptions g;
    g.n = 12;
    g.seed = 5;
    g.with_violator = true;
    Instance inst = generate_instance(g);
    inst.name = "rt";
    inst.segments.push_back(Segment({Scalar(-100, 3), Scalar(7, 9)}, {Scalar(-200, 7), 100}, 13));
    CHECK(from_text(to_text(inst)) == inst);
    CHECK(parse_json(to_json(inst)) == inst);
    auto numeric = parse_json(R"({"segments": [{"x1": 0, "y1": 0.5, "x2": "3/4", "y2": 2}]})");
    CHECK(numeric.segments[0].e1 == Point{0, Scalar(1, 2)});
}

TEST_CASE("generation is deterministic") {
    GenerateOptions g;
    g.n = 5;
    g.seed = 7;
    CHECK(generate_instance(g) == generate_instance(g));
    g.n = 1;
    CHECK(generate_instance(g).segments.size() == 1);
    g.n = 10;
    g.with_violator = true;
    for (std::uint64_t s = 1; s <= 30; ++s) {
        g.seed = s;
        Instance inst = generate_instance(g);
        CHECK(inst.segments.size() == 10);
        auto f = compute_extremal_frame(inst.segments);
        CHECK_FALSE(find_violators(f, inst.segments).empty());
    }
    GenerateOptions crowded;
    crowded.n = 500;
    crowded.box = 3;
    crowded.attempts_per_segment = 50;
    CHECK_THROWS_AS(generate_instance(crowded), InstanceError);
}

TEST_CASE("report squares survive serialization") {
    Square sq{{Scalar(3, 2), Scalar(-1, 3)}, Scalar(7, 2)};
    auto j = nlohmann::json::parse(to_json(sq).dump());
    CHECK(square_from_json(j) == sq);
}
