#include "twosq/report.hpp"

#include <stdexcept>

namespace twosq {

using nlohmann::json;

json to_json(const Scalar& s) { return {{"exact", s.str()}, {"approx", s.to_double()}}; }
json to_json(const Point& p) { return {{"x", to_json(p.x)}, {"y", to_json(p.y)}}; }
json to_json(const Square& s) { return {{"bl", to_json(s.bl)}, {"side", to_json(s.side)}}; }

Scalar scalar_from_json(const json& j) {
    if (j.is_object() && j.contains("exact")) return Scalar::parse(j["exact"].get<std::string>());
    if (j.is_string()) return Scalar::parse(j.get<std::string>());
    if (j.is_number()) return Scalar::parse(j.dump());
    throw std::invalid_argument("expected a number in the report");
}

Square square_from_json(const json& j) {
    return Square{{scalar_from_json(j.at("bl").at("x")), scalar_from_json(j.at("bl").at("y"))},
                  scalar_from_json(j.at("side"))};
}

json one_square_report(const std::vector<Segment>& L, const OneSquareResult& r) {
    json j;
    j["solver"] = "one";
    j["squares"] = json::array({to_json(r.square)});
    j["size"] = to_json(r.square.side);
    j["provenance"] = r.method;
    json a = json::array();
    for (const auto& s : L) {
        auto w = square_hits_segment(r.square, s);
        a.push_back({{"id", s.id}, {"square", 1}, {"witness", w ? to_json(*w) : json()}});
    }
    j["assignment"] = a;
    return j;
}

json two_square_report(const SquarePairSolution& sol) {
    json j;
    j["solver"] = "two";
    j["squares"] = json::array({to_json(sol.s1), to_json(sol.s2)});
    j["size"] = to_json(sol.size);
    j["sides_before_inflation"] = json::array({to_json(sol.side1), to_json(sol.side2)});
    j["provenance"] = sol.provenance;
    j["proven_optimal"] = sol.proven_optimal;
    if (sol.theta) j["theta"] = to_json(*sol.theta);
    json a = json::array();
    for (const auto& p : sol.assignment)
        a.push_back({{"id", p.seg_id}, {"square", p.square}, {"witness", to_json(p.witness)}});
    j["assignment"] = a;
    return j;
}

json oracle_report(const Scalar& size, const std::vector<Segment>& L, const std::vector<int>& part1,
                   const std::vector<int>& part2, const Scalar& tolerance) {
    json j;
    j["solver"] = "oracle";
    j["size"] = to_json(size);
    j["tolerance"] = to_json(tolerance);
    json p1 = json::array(), p2 = json::array();
    for (int i : part1) p1.push_back(L[i].id);
    for (int i : part2) p2.push_back(L[i].id);
    j["partition"] = json::array({p1, p2});
    j["squares"] = json::array();
    return j;
}

std::vector<Square> squares_from_report(const json& report) {
    std::vector<Square> out;
    if (!report.contains("squares")) return out;
    for (const auto& s : report["squares"]) out.push_back(square_from_json(s));
    return out;
}

}  // namespace twosq
