// twosq: command-line front end for the square hitting solvers.
//
// Exit codes: 0 success, 1 infeasible input or failed verification, 2 bad
// input or usage.  TWOSQ_SEED supplies the default seed for gen, bench and
// fuzz.

#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <mutex>
#include <random>
#include <thread>

#include "CLI11.hpp"
#include "twosq/bench.hpp"
#include "twosq/instance.hpp"
#include "twosq/one_square.hpp"
#include "twosq/oracle.hpp"
#include "twosq/report.hpp"
#include "twosq/svg.hpp"
#include "twosq/two_square.hpp"

namespace fs = std::filesystem;
using namespace twosq;
using nlohmann::json;

namespace {

constexpr int kOk = 0, kFail = 1, kInput = 2;

std::uint64_t default_seed() {
    if (const char* s = std::getenv("TWOSQ_SEED")) {
        try {
            return std::stoull(s);
        } catch (const std::exception&) {
            std::cerr << "ignoring malformed TWOSQ_SEED\n";
        }
    }
    return 1;
}

double elapsed_ms(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
}

void emit(json report, bool timing, double ms) {
    if (timing) report["timing_ms"] = ms;
    std::cout << report.dump(2) << "\n";
}

Scalar parse_tolerance(const std::string& t) {
    Scalar tol = Scalar::parse(t);
    if (tol.sign() <= 0) throw std::invalid_argument("tolerance must be positive");
    return tol;
}

struct FuzzOutcome {
    std::uint64_t seed = 0;
    bool ok = true;
    std::string line;
    Instance inst;
};

FuzzOutcome fuzz_one(std::uint64_t seed, int max_n, const Scalar& tol) {
    FuzzOutcome o;
    o.seed = seed;
    std::mt19937_64 rng(seed);
    GenerateOptions g;
    g.n = 4 + int(rng() % std::uint64_t(std::max(1, max_n - 3)));
    g.seed = seed;
    g.with_violator = rng() % 2 == 0;
    o.inst = generate_instance(g);
    o.inst.name = "fuzz-" + std::to_string(seed);
    const auto& L = o.inst.segments;
    auto sol = solve_two_squares(L);
    auto orc = oracle::two_square_oracle(L, tol);
    double diff = std::abs(sol.size.to_double() - orc.size.to_double());
    o.ok = diff <= 1e-9;
    o.line = "seed " + std::to_string(seed) + " n " + std::to_string(L.size()) + " solver " + sol.size.str() +
             " oracle " + std::to_string(orc.size.to_double()) + (o.ok ? " ok" : " MISMATCH");
    return o;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Minimum axis-parallel squares hitting planar segments"};
    app.require_subcommand(1);
    bool timing = false;
    app.add_flag("--timing", timing, "Include wall time in reports");

    std::string in_path;
    auto* one = app.add_subcommand("solve-one", "Smallest single square hitting every segment");
    one->add_option("instance", in_path, "Instance file (text or JSON)")->required();

    auto* two = app.add_subcommand("solve-two", "Smallest pair of congruent squares hitting every segment");
    two->add_option("instance", in_path, "Instance file")->required();
    bool cases_only = false, debug = false;
    int exact_cap = 16;
    two->add_flag("--cases-only", cases_only, "Skip the exact completion stage");
    two->add_flag("--debug", debug, "Check the residual bookkeeping after every event");
    two->add_option("--exact-cap", exact_cap, "Largest n for the exact completion");

    auto* orc = app.add_subcommand("oracle", "Brute-force reference values");
    orc->add_option("instance", in_path, "Instance file")->required();
    std::string tol_text = "1/1000000000000";
    bool oracle_one = false;
    orc->add_option("--tolerance", tol_text, "Bisection tolerance");
    orc->add_flag("--one", oracle_one, "Single square instead of a pair");

    auto* ver = app.add_subcommand("verify", "Check that a report's squares hit every segment");
    std::string report_path;
    ver->add_option("instance", in_path, "Instance file")->required();
    ver->add_option("report", report_path, "Report JSON")->required();

    auto* ren = app.add_subcommand("render", "Draw an instance as SVG");
    std::string out_path;
    bool debug_loci = false;
    ren->add_option("instance", in_path, "Instance file")->required();
    ren->add_option("--report", report_path, "Report whose squares are drawn");
    ren->add_option("-o,--out", out_path, "Output file (default stdout)");
    ren->add_flag("--debug-loci", debug_loci, "Draw anchor loci of the one-square solver");

    auto* gen = app.add_subcommand("gen", "Generate a random instance");
    GenerateOptions gopt;
    gopt.seed = default_seed();
    std::string format = "text";
    gen->add_option("-n", gopt.n, "Number of segments")->check(CLI::PositiveNumber);
    gen->add_option("--seed", gopt.seed, "Random seed");
    gen->add_option("--box", gopt.box, "Coordinates range over [0, box]");
    gen->add_option("--max-len", gopt.max_len, "Largest coordinate extent of a segment");
    gen->add_flag("--with-violator", gopt.with_violator, "Plant a segment outside a frame corner");
    gen->add_option("--format", format, "text or json")->check(CLI::IsMember({"text", "json"}));
    gen->add_option("-o,--out", out_path, "Output file (default stdout)");

    auto* ben = app.add_subcommand("bench", "Time solve-two on growing planted-violator instances");
    std::uint64_t seed = default_seed();
    int reps = 3, jobs = 1;
    std::vector<int> sizes{250, 500, 1000, 2000};
    ben->add_option("--seed", seed, "Base seed");
    ben->add_option("--reps", reps, "Repetitions per size")->check(CLI::PositiveNumber);
    ben->add_option("--jobs", jobs, "Worker threads")->check(CLI::PositiveNumber);
    ben->add_option("--sizes", sizes, "Instance sizes");

    auto* fuz = app.add_subcommand("fuzz", "Compare solve-two with the oracle on random instances");
    int count = 100, max_n = 12;
    std::string corpus = "fuzz-failures";
    fuz->add_option("--seed", seed, "First seed");
    fuz->add_option("--count", count, "Number of instances")->check(CLI::PositiveNumber);
    fuz->add_option("--max-n", max_n, "Largest instance size")->check(CLI::Range(4, oracle::kDefaultCap));
    fuz->add_option("--jobs", jobs, "Worker threads")->check(CLI::PositiveNumber);
    fuz->add_option("--corpus", corpus, "Directory receiving failing instances");
    fuz->add_option("--tolerance", tol_text, "Oracle bisection tolerance");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? kOk : kInput;
    }

    try {
        auto t0 = std::chrono::steady_clock::now();
        if (*one) {
            Instance inst = load_instance(in_path);
            if (inst.segments.empty()) throw InstanceError(InstanceError::Kind::Parse, "empty instance");
            auto r = min_hitting_square_detail(inst.segments);
            if (!oracle::verify_certificate(inst.segments, r.square, std::nullopt).ok) {
                std::cerr << "internal error: square misses a segment\n";
                return kFail;
            }
            emit(one_square_report(inst.segments, r), timing, elapsed_ms(t0));
        } else if (*two) {
            Instance inst = load_instance(in_path);
            SolveOptions opt;
            opt.cases_only = cases_only;
            opt.debug = debug;
            opt.exact_cap = exact_cap;
            auto sol = solve_two_squares(inst.segments, opt);
            emit(two_square_report(sol), timing, elapsed_ms(t0));
        } else if (*orc) {
            Instance inst = load_instance(in_path);
            Scalar tol = parse_tolerance(tol_text);
            if (oracle_one) {
                Scalar s = oracle::min_square_size(inst.segments, tol);
                std::vector<int> all(inst.segments.size());
                for (std::size_t i = 0; i < all.size(); ++i) all[i] = int(i);
                emit(oracle_report(s, inst.segments, all, {}, tol), timing, elapsed_ms(t0));
            } else {
                auto r = oracle::two_square_oracle(inst.segments, tol);
                emit(oracle_report(r.size, inst.segments, r.part1, r.part2, tol), timing, elapsed_ms(t0));
            }
        } else if (*ver) {
            Instance inst = load_instance(in_path);
            std::ifstream rf(report_path);
            if (!rf) throw InstanceError(InstanceError::Kind::Parse, "cannot open " + report_path);
            json rep = json::parse(rf);
            auto sq = squares_from_report(rep);
            std::optional<Square> s1, s2;
            if (sq.size() > 0) s1 = sq[0];
            if (sq.size() > 1) s2 = sq[1];
            auto chk = oracle::verify_certificate(inst.segments, s1, s2);
            if (!chk.ok) {
                std::cerr << "unhit segments:";
                for (int id : chk.unhit_ids) std::cerr << ' ' << id;
                std::cerr << "\n";
                return kFail;
            }
            std::cerr << "ok: " << inst.segments.size() << " segments hit\n";
        } else if (*ren) {
            Instance inst = load_instance(in_path);
            SvgScene scene;
            scene.segments = inst.segments;
            if (!report_path.empty()) {
                std::ifstream rf(report_path);
                if (!rf) throw InstanceError(InstanceError::Kind::Parse, "cannot open " + report_path);
                scene.squares = squares_from_report(json::parse(rf));
            }
            if (debug_loci && !inst.segments.empty()) {
                const auto& L = inst.segments;
                ExtremalFrame f = compute_extremal_frame(L);
                ViolatorSet v = find_violators(f, L);
                for (int c = 0; c < 4; ++c) {
                    if (!v.v[c]) continue;
                    Transform T = corner_to_tr(c);
                    Segment chord = T.apply(Segment(v.v[c]->clip1, v.v[c]->clip2, v.v[c]->id));
                    for (int i : special_indices(f, v)) {
                        try {
                            Locus loc = build_locus(chord, T.apply(L[i]));
                            for (auto& p : loc.chain) p = T.unapply(p);
                            scene.loci.push_back(std::move(loc));
                        } catch (const std::invalid_argument&) {
                        }
                    }
                }
            }
            std::string svg = render_svg(scene);
            if (out_path.empty()) {
                std::cout << svg;
            } else {
                std::ofstream(out_path) << svg;
            }
        } else if (*gen) {
            Instance inst = generate_instance(gopt);
            std::string text = format == "json" ? to_json(inst) : to_text(inst);
            if (out_path.empty()) {
                std::cout << text;
            } else {
                std::ofstream(out_path) << text;
            }
        } else if (*ben) {
            BenchResult r = run_bench(sizes, seed, reps, jobs);
            json j;
            j["seed"] = seed;
            j["reps"] = reps;
            for (const auto& p : r.points)
                j["points"].push_back({{"n", p.n}, {"seconds", p.seconds}, {"size", p.size}, {"provenance", p.provenance}});
            j["slope"] = r.slope;
            std::cout << j.dump(2) << "\n";
            if (r.slope < 1.7 || r.slope > 2.3) return kFail;
        } else if (*fuz) {
            Scalar tol = parse_tolerance(tol_text);
            std::vector<FuzzOutcome> results(count);
            std::atomic<int> next{0};
            std::atomic<bool> stop{false};
            auto worker = [&] {
                for (int k; !stop && (k = next++) < count;) {
                    results[k] = fuzz_one(seed + std::uint64_t(k), max_n, tol);
                    if (!results[k].ok) stop = true;
                }
            };
            std::vector<std::thread> pool;
            for (int j = 1; j < jobs; ++j) pool.emplace_back(worker);
            worker();
            for (auto& t : pool) t.join();
            // Report in seed order up to and including the first failure.
            int failures = 0;
            for (int k = 0; k < count; ++k) {
                if (results[k].line.empty()) break;
                std::cout << results[k].line << "\n";
                if (!results[k].ok) {
                    ++failures;
                    fs::create_directories(corpus);
                    fs::path p = fs::path(corpus) / ("fuzz-" + std::to_string(results[k].seed) + ".txt");
                    std::ofstream(p) << to_text(results[k].inst);
                    std::cerr << "failure saved to " << p << "\n";
                    break;
                }
            }
            return failures ? kFail : kOk;
        }
    } catch (const InstanceError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kInput;
    } catch (const std::invalid_argument& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kInput;
    } catch (const json::exception& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kInput;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kFail;
    }
    return kOk;
}
