#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "twosq/geometry.hpp"

namespace twosq {

struct Instance {
    std::vector<Segment> segments;  // ids 1..n in file order
    std::string name;
    std::optional<std::uint64_t> seed;
    friend bool operator==(const Instance&, const Instance&) = default;
};

class InstanceError : public std::runtime_error {
public:
    enum class Kind { Parse, ZeroLength, Intersection, Budget };
    InstanceError(Kind k, const std::string& what, int line = 0, int id1 = 0, int id2 = 0)
        : std::runtime_error(what), kind(k), line(line), id1(id1), id2(id2) {}
    Kind kind;
    int line;
    int id1, id2;
};

// Text: one segment per line "x1 y1 x2 y2" (integers, decimals or p/q), '#'
// starts a comment; "# name: ..." and "# seed: ..." carry metadata.
Instance parse_text(std::istream& in);
// JSON: {"name": ..., "seed": ..., "segments": [{"x1": "0", "y1": "5", ...}]};
// coordinates may be strings or numbers.
Instance parse_json(const std::string& text);
// Chooses the format from the first non-blank character.
Instance parse_instance(std::istream& in);
Instance load_instance(const std::string& path);

std::string to_text(const Instance& inst);
std::string to_json(const Instance& inst);

struct GenerateOptions {
    int n = 10;
    long long box = 30;      // coordinates in [0, box]
    long long max_len = 10;  // coordinate extent of each segment
    std::uint64_t seed = 1;
    bool with_violator = false;
    int attempts_per_segment = 10000;
};
// Deterministic for a given option set.  Throws InstanceError(Budget) when
// rejection sampling gives up.
Instance generate_instance(const GenerateOptions& opt);

}  // namespace twosq
