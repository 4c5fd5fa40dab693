#include "twosq/instance.hpp"

#include <fstream>
#include <random>
#include <sstream>

#include "json.hpp"
#include "twosq/extremal.hpp"

namespace twosq {

namespace {

void check_pairs(const std::vector<Segment>& L) {
    for (std::size_t i = 0; i < L.size(); ++i)
        for (std::size_t j = i + 1; j < L.size(); ++j)
            if (segments_intersect(L[i], L[j]))
                throw InstanceError(InstanceError::Kind::Intersection,
                                    "segments " + std::to_string(L[i].id) + " and " + std::to_string(L[j].id) +
                                        " intersect",
                                    0, L[i].id, L[j].id);
}

Segment make_segment(const Point& a, const Point& b, int id, int line) {
    if (a == b)
        throw InstanceError(InstanceError::Kind::ZeroLength,
                            "line " + std::to_string(line) + ": zero-length segment " + std::to_string(id), line, id);
    return Segment(a, b, id);
}

std::string trim(const std::string& s) {
    auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

}  // namespace

Instance parse_text(std::istream& in) {
    Instance inst;
    std::string raw;
    int line = 0;
    while (std::getline(in, raw)) {
        ++line;
        std::string body = raw;
        if (auto h = raw.find('#'); h != std::string::npos) {
            std::string comment = trim(raw.substr(h + 1));
            if (comment.rfind("name:", 0) == 0) inst.name = trim(comment.substr(5));
            if (comment.rfind("seed:", 0) == 0) {
                try {
                    inst.seed = std::stoull(trim(comment.substr(5)));
                } catch (const std::exception&) {
                    throw InstanceError(InstanceError::Kind::Parse, "line " + std::to_string(line) + ": bad seed",
                                        line);
                }
            }
            body = raw.substr(0, h);
        }
        std::istringstream ls(body);
        std::vector<std::string> tok;
        for (std::string t; ls >> t;) tok.push_back(t);
        if (tok.empty()) continue;
        if (tok.size() != 4)
            throw InstanceError(InstanceError::Kind::Parse,
                                "line " + std::to_string(line) + ": expected 4 coordinates, got " +
                                    std::to_string(tok.size()),
                                line);
        Scalar v[4];
        for (int k = 0; k < 4; ++k) {
            try {
                v[k] = Scalar::parse(tok[k]);
            } catch (const std::exception&) {
                throw InstanceError(InstanceError::Kind::Parse,
                                    "line " + std::to_string(line) + ": bad number '" + tok[k] + "'", line);
            }
        }
        int id = int(inst.segments.size()) + 1;
        inst.segments.push_back(make_segment({v[0], v[1]}, {v[2], v[3]}, id, line));
    }
    check_pairs(inst.segments);
    return inst;
}

Instance parse_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw InstanceError(InstanceError::Kind::Parse, std::string("invalid JSON: ") + e.what());
    }
    Instance inst;
    if (j.contains("name") && j["name"].is_string()) inst.name = j["name"].get<std::string>();
    if (j.contains("seed") && j["seed"].is_number_unsigned()) inst.seed = j["seed"].get<std::uint64_t>();
    if (!j.contains("segments") || !j["segments"].is_array())
        throw InstanceError(InstanceError::Kind::Parse, "JSON instance needs a \"segments\" array");
    int k = 0;
    for (const auto& s : j["segments"]) {
        ++k;
        auto num = [&](const char* key) {
            if (!s.contains(key))
                throw InstanceError(InstanceError::Kind::Parse,
                                    "segment " + std::to_string(k) + ": missing " + key, k);
            const auto& v = s[key];
            try {
                return Scalar::parse(v.is_string() ? v.get<std::string>() : v.dump());
            } catch (const std::exception&) {
                throw InstanceError(InstanceError::Kind::Parse,
                                    "segment " + std::to_string(k) + ": bad number for " + key, k);
            }
        };
        inst.segments.push_back(make_segment({num("x1"), num("y1")}, {num("x2"), num("y2")}, k, k));
    }
    check_pairs(inst.segments);
    return inst;
}

Instance parse_instance(std::istream& in) {
    std::stringstream buf;
    buf << in.rdbuf();
    std::string text = buf.str();
    auto first = text.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && text[first] == '{') return parse_json(text);
    std::istringstream is(text);
    return parse_text(is);
}

Instance load_instance(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InstanceError(InstanceError::Kind::Parse, "cannot open " + path);
    return parse_instance(in);
}

std::string to_text(const Instance& inst) {
    std::ostringstream os;
    if (!inst.name.empty()) os << "# name: " << inst.name << "\n";
    if (inst.seed) os << "# seed: " << *inst.seed << "\n";
    for (const auto& s : inst.segments) os << s.e1.x << ' ' << s.e1.y << ' ' << s.e2.x << ' ' << s.e2.y << "\n";
    return os.str();
}

std::string to_json(const Instance& inst) {
    nlohmann::json j;
    if (!inst.name.empty()) j["name"] = inst.name;
    if (inst.seed) j["seed"] = *inst.seed;
    j["segments"] = nlohmann::json::array();
    for (const auto& s : inst.segments)
        j["segments"].push_back(
            {{"x1", s.e1.x.str()}, {"y1", s.e1.y.str()}, {"x2", s.e2.x.str()}, {"y2", s.e2.y.str()}});
    return j.dump(2) + "\n";
}

namespace {

bool disjoint_from(const Segment& s, const std::vector<Segment>& L) {
    for (const auto& t : L)
        if (segments_intersect(s, t)) return false;
    return true;
}

// A segment through the region just outside corner `corner` of the frame,
// crossing both of the corner's frame lines.
Segment corner_crosser(const ExtremalFrame& f, int corner, std::mt19937_64& rng, long long max_len, int id) {
    std::uniform_int_distribution<long long> off(1, std::max(1LL, max_len / 3));
    std::uniform_int_distribution<long long> dir(1, std::max(1LL, max_len / 2));
    long long delta = off(rng), dx = dir(rng), dy = dir(rng);
    // Build for the bottom-left corner, then mirror.
    bool fx = corner == kR || corner == kS, fy = corner == kQ || corner == kR;
    Scalar kx = fx ? -f.c.x : f.a.x, ky = fy ? -f.b.y : f.d.y;
    Point k{kx - Scalar(delta), ky - Scalar(delta)};
    long long alpha = delta / dy + 1 + static_cast<long long>(rng() % 3);
    long long beta = delta / dx + 1 + static_cast<long long>(rng() % 3);
    Point p1{k.x - Scalar(alpha * dx), k.y + Scalar(alpha * dy)};
    Point p2{k.x + Scalar(beta * dx), k.y - Scalar(beta * dy)};
    auto m = [&](const Point& p) { return Point{fx ? -p.x : p.x, fy ? -p.y : p.y}; };
    return Segment(m(p1), m(p2), id);
}

}  // namespace

Instance generate_instance(const GenerateOptions& opt) {
    if (opt.n < 1) throw std::invalid_argument("generate_instance: n must be positive");
    std::mt19937_64 rng(opt.seed);
    std::uniform_int_distribution<long long> coord(0, opt.box), ext(-opt.max_len, opt.max_len);
    Instance inst;
    inst.seed = opt.seed;
    auto& L = inst.segments;
    const int plain = opt.with_violator && opt.n >= 2 ? opt.n - 1 : opt.n;
    auto add_random = [&](int id) {
        for (int attempt = 0; attempt < opt.attempts_per_segment; ++attempt) {
            long long x = coord(rng), y = coord(rng), dx = ext(rng), dy = ext(rng);
            if (dx == 0 && dy == 0) continue;
            Segment s({x, y}, {x + dx, y + dy}, id);
            if (disjoint_from(s, L)) {
                L.push_back(s);
                return;
            }
        }
        throw InstanceError(InstanceError::Kind::Budget,
                            "sampling budget exhausted after " + std::to_string(opt.attempts_per_segment) +
                                " attempts for segment " + std::to_string(id),
                            0, id);
    };
    for (int i = 1; i <= plain; ++i) add_random(i);
    if (plain == opt.n) return inst;

    for (int attempt = 0; attempt < opt.attempts_per_segment; ++attempt) {
        ExtremalFrame f = compute_extremal_frame(L);
        int corner = int(rng() % 4);
        Segment s = corner_crosser(f, corner, rng, opt.max_len, opt.n);
        if (!disjoint_from(s, L)) continue;
        L.push_back(s);
        ExtremalFrame g = compute_extremal_frame(L);
        if (!find_violators(g, L).empty()) return inst;
        L.pop_back();
    }
    throw InstanceError(InstanceError::Kind::Budget, "could not plant a violator", 0, opt.n);
}

}  // namespace twosq
