#pragma once

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "twosq/one_square.hpp"
#include "twosq/two_square.hpp"

namespace twosq {

// Numbers are written as {"exact": "p/q", "approx": <double>}.
nlohmann::json to_json(const Scalar& s);
nlohmann::json to_json(const Point& p);
nlohmann::json to_json(const Square& s);

Scalar scalar_from_json(const nlohmann::json& j);
Square square_from_json(const nlohmann::json& j);

nlohmann::json one_square_report(const std::vector<Segment>& L, const OneSquareResult& r);
nlohmann::json two_square_report(const SquarePairSolution& sol);
nlohmann::json oracle_report(const Scalar& size, const std::vector<Segment>& L, const std::vector<int>& part1,
                             const std::vector<int>& part2, const Scalar& tolerance);

// The squares listed in a report, in order.
std::vector<Square> squares_from_report(const nlohmann::json& report);

}  // namespace twosq
