#include "twosq/two_square.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "twosq/one_square.hpp"
#include "twosq/oracle.hpp"

namespace twosq {

const char* contact_name(ContactKind k) {
    switch (k) {
        case ContactKind::LeftEndpoint: return "i";
        case ContactKind::BottomRight: return "ii";
        case ContactKind::BottomEndpoint: return "iii";
        case ContactKind::TopRight: return "iv";
        case ContactKind::TopLeft: return "v";
        case ContactKind::Inside: return "inside";
    }
    return "?";
}

std::optional<Contact> bl_first_contact(const Point& th, const Segment& seg) {
    if (seg.rx() < th.x || seg.ty() < th.y) return std::nullopt;
    Contact best{0, ContactKind::Inside};
    auto offer = [&](Scalar v, ContactKind k) {
        if (best.size < v) best = {std::move(v), k};
    };
    offer(seg.lx() - th.x, ContactKind::LeftEndpoint);
    offer(seg.by() - th.y, ContactKind::BottomEndpoint);
    int sg = seg.slope_sign();
    if (sg != 0) {
        Scalar a = seg.e1.y - seg.e2.y, b = seg.e2.x - seg.e1.x;  // a*x + b*y = c, b > 0
        Scalar c = a * seg.e1.x + b * seg.e1.y;
        Scalar f = c - a * th.x - b * th.y;  // positive when theta is below the line
        if (sg < 0) {
            if (f.sign() < 0) return std::nullopt;
            offer(f / (a + b), ContactKind::TopRight);
        } else if (f.sign() > 0) {
            offer(f / b, ContactKind::TopLeft);
        } else if (f.sign() < 0) {
            offer(-f / -a, ContactKind::BottomRight);
        }
    }
    return best;
}

std::vector<CornerEvent> enumerate_B1_corners(const std::vector<Segment>& L, int p_index) {
    const Segment& lp = L[p_index];
    std::vector<CornerEvent> out;
    for (int i = 0; i < int(L.size()); ++i) {
        const Point& tau = L[i].top();
        if (tau.y < lp.by() || lp.ty() < tau.y) continue;
        auto th = intersect_segment_line(lp, Line::horizontal(tau.y));
        if (!th || tau.x < th->x) continue;
        out.push_back({*th, i, tau.x});
    }
    std::sort(out.begin(), out.end(), [&](const CornerEvent& u, const CornerEvent& v) {
        if (u.theta != v.theta) return u.theta < v.theta;
        if (u.tau_x != v.tau_x) return u.tau_x < v.tau_x;
        return L[u.source].id < L[v.source].id;
    });
    out.erase(std::unique(out.begin(), out.end(),
                          [](const CornerEvent& u, const CornerEvent& v) { return u.theta == v.theta; }),
              out.end());
    return out;
}

namespace {

struct Timed {
    Scalar size;
    int idx;
    ContactKind kind;
};

std::vector<Timed> contacts_from(const std::vector<Segment>& L, const Point& theta) {
    std::vector<Timed> out;
    out.reserve(L.size());
    for (int i = 0; i < int(L.size()); ++i)
        if (auto c = bl_first_contact(theta, L[i])) out.push_back({std::move(c->size), i, c->kind});
    std::sort(out.begin(), out.end(), [&](const Timed& u, const Timed& v) {
        int c = compare(u.size, v.size);
        return c != 0 ? c < 0 : L[u.idx].id < L[v.idx].id;
    });
    return out;
}

// Grows S1 from theta and evaluates every distinct contact size not below
// `threshold`, plus the threshold itself.
std::optional<PairCandidate> sweep_theta(const std::vector<Segment>& L, const EventIndex& index, const Point& theta,
                                         const Scalar& threshold, std::optional<Scalar> bound,
                                         const SolveOptions& opt, RepairCounters* counters, const char* prov) {
    std::vector<Timed> ev = contacts_from(L, theta);
    ResidualTracker tr(index, opt.debug, counters);
    std::optional<PairCandidate> best;
    std::size_t k = 0;
    bool threshold_done = false;
    while (k < ev.size() || !threshold_done) {
        Scalar s;
        if (!threshold_done && (k == ev.size() || threshold < ev[k].size)) {
            s = threshold;
            threshold_done = true;
        } else {
            s = ev[k].size;
            while (k < ev.size() && ev[k].size == s) tr.mark_hit(ev[k++].idx);
            if (s < threshold) continue;
            if (s == threshold) threshold_done = true;
        }
        if (bound && !(s < *bound)) break;
        Square s1{theta, s};
        if (tr.residual_size() == 0) {
            best = PairCandidate{s1, Square{theta, 0}, s, prov, theta};
            break;
        }
        if (opt.debug) tr.specials();
        if (bound && !(tr.frame_lower_bound() < *bound)) continue;
        OneSquareResult r = tr.solve();
        Scalar v = max(s, r.square.side);
        if (!bound || v < *bound) {
            bound = v;
            best = PairCandidate{s1, r.square, v, prov, theta};
        }
    }
    return best;
}

std::optional<Scalar> tighter(const std::optional<Scalar>& b, const std::optional<PairCandidate>& c) {
    if (c && (!b || c->size < *b)) return c->size;
    return b;
}

}  // namespace

std::vector<DiagEvent> build_D_theta(const std::vector<Segment>& L, const Point& theta, const Scalar& min_x) {
    std::vector<DiagEvent> out;
    for (const Timed& t : contacts_from(L, theta)) {
        Point delta{theta.x + t.size, theta.y + t.size};
        if (delta.x < min_x) continue;
        if (!out.empty() && out.back().size == t.size) {
            out.back().sources.push_back(L[t.idx].id);
            continue;
        }
        out.push_back({delta, t.size, t.kind, {L[t.idx].id}});
    }
    return out;
}

std::optional<PairCandidate> solve_case_A(const std::vector<Segment>& L, const EventIndex& index,
                                          const SolveOptions& opt, RepairCounters* counters,
                                          const std::optional<Scalar>& bound) {
    const Segment& lp = L[index.p_index()];
    std::optional<PairCandidate> best;
    std::optional<Scalar> b = bound;
    for (const Point& pi : {lp.e1, lp.e2}) {
        auto c = sweep_theta(L, index, pi, 0, b, opt, counters, "caseA");
        if (c && (!b || c->size < *b)) best = c;
        b = tighter(b, c);
    }
    return best;
}

std::optional<PairCandidate> solve_case_B1(const std::vector<Segment>& L, const EventIndex& index,
                                           const SolveOptions& opt, RepairCounters* counters,
                                           const std::optional<Scalar>& bound) {
    std::optional<PairCandidate> best;
    std::optional<Scalar> b = bound;
    for (const auto& ce : enumerate_B1_corners(L, index.p_index())) {
        auto c = sweep_theta(L, index, ce.theta, ce.tau_x - ce.theta.x, b, opt, counters, "B1");
        if (c && (!b || c->size < *b)) best = c;
        b = tighter(b, c);
    }
    return best;
}

std::optional<PairCandidate> solve_case_B2(const std::vector<Segment>& L, int p_index, const SolveOptions& opt,
                                           RepairCounters* counters, const std::optional<Scalar>& bound) {
    Transform T{false, false, true};
    std::vector<Segment> LT = T.apply(L);
    EventIndex index(LT, p_index);
    auto c = solve_case_B1(LT, index, opt, counters, bound);
    if (!c) return c;
    c->s1 = T.unapply(c->s1);
    c->s2 = T.unapply(c->s2);
    c->theta = T.unapply(c->theta);
    c->provenance = "B2";
    return c;
}

namespace {

struct TopRightEvent {
    Point corner;  // top-right corner of S1
    Point bl;      // bottom-left corner, on l_p
    Scalar size;
};

}  // namespace

std::optional<PairCandidate> solve_case_B3(const std::vector<Segment>& L, int p_index, const SolveOptions&,
                                           const std::optional<Scalar>& bound) {
    const Segment& lp = L[p_index];
    const int n = int(L.size());
    // The diagonal through a corner meets l_p iff y - x lies between its ends.
    Scalar k1 = lp.e1.y - lp.e1.x, k2 = lp.e2.y - lp.e2.x;
    Scalar klo = min(k1, k2), khi = max(k1, k2);
    std::vector<TopRightEvent> ev;
    auto consider = [&](const Point& z) {
        Scalar k = z.y - z.x;
        if (k < klo || khi < k) return;
        auto bl = intersect_segment_line(lp, Line::unit_slope(z));
        if (!bl || z.x < bl->x) return;
        Scalar s = z.x - bl->x;
        if (bound && !(s < *bound)) return;
        ev.push_back({z, *bl, std::move(s)});
    };
    for (int j = 0; j < n; ++j) {
        const Point& lj = L[j].left();
        const Scalar& V = lj.x;
        consider(lj);
        for (int i = 0; i < n; ++i) {
            if (i == j) continue;
            const Point& bt = L[i].bottom();
            if (bt.x < V && lj.y < bt.y) consider({V, bt.y});
            if (L[i].slope_sign() < 0 && L[i].lx() <= V && V <= L[i].rx()) {
                Scalar y = L[i].y_at(V);
                if (lj.y < y) consider({V, y});
            }
        }
    }
    // A single segment may touch both the top and the right edge at once.
    for (const auto& s : L) {
        consider(s.e1);
        consider(s.e2);
    }
    std::sort(ev.begin(), ev.end(), [](const TopRightEvent& u, const TopRightEvent& v) {
        if (u.size != v.size) return u.size < v.size;
        return u.corner < v.corner;
    });
    ev.erase(std::unique(ev.begin(), ev.end(),
                         [](const TopRightEvent& u, const TopRightEvent& v) { return u.corner == v.corner; }),
             ev.end());

    std::optional<PairCandidate> best;
    std::optional<Scalar> b = bound;
    std::vector<int> rest;
    for (const auto& e : ev) {
        if (b && !(e.size < *b)) break;
        Square s1{e.bl, e.size};
        rest.clear();
        for (int i = 0; i < n; ++i)
            if (!hits(s1, L[i])) rest.push_back(i);
        if (rest.empty()) {
            b = e.size;
            best = PairCandidate{s1, Square{e.bl, 0}, e.size, "B3", e.bl};
            break;
        }
        ExtremalFrame f = compute_extremal_frame(L, rest);
        if (b && !(f.lower_bound() < *b)) continue;
        ViolatorSet v = find_violators(f, L, rest);
        OneSquareResult r = min_square_from_specials(L, f, v);
        Scalar val = max(e.size, r.square.side);
        if (!b || val < *b) {
            b = val;
            best = PairCandidate{s1, r.square, val, "B3", e.bl};
        }
    }
    return best;
}

std::optional<PairCandidate> exact_two_square(const std::vector<Segment>& L, const Scalar& upper,
                                              std::uint64_t budget, bool* complete) {
    const int n = int(L.size());
    Scalar best = upper;
    std::optional<PairCandidate> found;
    std::vector<int> A{0}, B;
    std::uint64_t nodes = 0;
    bool aborted = false;
    auto size_of = [&](const std::vector<int>& S) -> Scalar {
        return S.empty() ? Scalar(0) : min_hitting_square_subset(L, S).square.side;
    };
    auto rec = [&](auto&& self, int k) -> void {
        if (aborted) return;
        if (++nodes > budget) {
            aborted = true;
            return;
        }
        if (k == n) {
            Square s1 = min_hitting_square_subset(L, A).square;
            Square s2 = B.empty() ? Square{s1.bl, 0} : min_hitting_square_subset(L, B).square;
            Scalar v = max(s1.side, s2.side);
            if (v < best) {
                best = v;
                found = PairCandidate{s1, s2, v, "exact-search", s1.bl};
            }
            return;
        }
        A.push_back(k);
        if (size_of(A) < best) self(self, k + 1);
        A.pop_back();
        B.push_back(k);
        if (size_of(B) < best) self(self, k + 1);
        B.pop_back();
    };
    if (n > 0 && Scalar(0) < best) rec(rec, 1);
    if (complete) *complete = !aborted;
    return found;
}

void validate_instance(const std::vector<Segment>& L) {
    if (L.empty()) throw std::invalid_argument("empty segment set");
    for (const auto& s : L)
        if (s.e1 == s.e2) throw std::invalid_argument("zero-length segment " + std::to_string(s.id));
    std::vector<int> order(L.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int i, int j) { return L[i].lx() < L[j].lx(); });
    for (std::size_t u = 0; u < order.size(); ++u) {
        const Segment& s = L[order[u]];
        for (std::size_t w = u + 1; w < order.size(); ++w) {
            const Segment& t = L[order[w]];
            if (s.rx() < t.lx()) break;
            if (segments_intersect(s, t))
                throw std::invalid_argument("segments " + std::to_string(s.id) + " and " + std::to_string(t.id) +
                                            " intersect");
        }
    }
}

namespace {

Transform corner_to_bl(int corner) {
    switch (corner) {
        case kQ: return {false, true, false};
        case kR: return {true, true, false};
        case kS: return {true, false, false};
        default: return {};
    }
}

int provenance_rank(const std::string& p) {
    static const char* order[] = {"caseA", "B1", "B2", "B3", "fallback-oracle", "exact-search"};
    for (int i = 0; i < 6; ++i)
        if (p == order[i]) return i;
    return 6;
}

}  // namespace

SquarePairSolution solve_two_squares(const std::vector<Segment>& L, const SolveOptions& opt) {
    validate_instance(L);
    const int n = int(L.size());
    SquarePairSolution sol;
    std::optional<PairCandidate> best;
    int best_corner = -1;

    ExtremalFrame f = compute_extremal_frame(L);
    ViolatorSet vs = find_violators(f, L);
    if (vs.empty()) {
        if (n <= opt.oracle_cap) {
            auto o = oracle::two_square_oracle(L, oracle::default_tolerance(), opt.oracle_cap);
            Square s1 = min_hitting_square_subset(L, o.part1).square;
            Square s2 = o.part2.empty() ? Square{s1.bl, 0} : min_hitting_square_subset(L, o.part2).square;
            best = PairCandidate{s1, s2, max(s1.side, s2.side), "fallback-oracle", s1.bl};
        } else {
            Square one = min_hitting_square(L);
            best = PairCandidate{one, Square{one.bl, 0}, one.side, "fallback-oracle", one.bl};
        }
        bool complete = false;
        if (auto e = exact_two_square(L, best->size, opt.search_budget, &complete)) {
            best = e;
            best->provenance = "fallback-oracle";
        }
        sol.proven_optimal = complete;
    } else {
        std::vector<std::pair<int, int>> runs;  // corner, position of l_p
        for (int c = 0; c < 4; ++c) {
            if (vs.v[c]) runs.emplace_back(c, vs.v[c]->idx);
            for (const auto& alt : vs.alternatives[c]) runs.emplace_back(c, alt.idx);
        }
        for (auto [corner, p] : runs) {
            Transform T = corner_to_bl(corner);
            std::vector<Segment> LT = T.apply(L);
            EventIndex index(LT, p);
            std::optional<Scalar> bound = best ? std::optional<Scalar>(best->size) : std::nullopt;
            std::optional<PairCandidate> run_best;
            auto take = [&](std::optional<PairCandidate> c) {
                if (!c) return;
                if (!bound || c->size < *bound) {
                    bound = c->size;
                    run_best = std::move(c);
                }
            };
            if (opt.case_a) take(solve_case_A(LT, index, opt, &sol.counters, bound));
            if (opt.case_b1) take(solve_case_B1(LT, index, opt, &sol.counters, bound));
            if (opt.case_b2) take(solve_case_B2(LT, p, opt, &sol.counters, bound));
            if (opt.case_b3) take(solve_case_B3(LT, p, opt, bound));
            if (!run_best) continue;
            run_best->s1 = T.unapply(run_best->s1);
            run_best->s2 = T.unapply(run_best->s2);
            run_best->theta = T.unapply(run_best->theta);
            bool better = !best || run_best->size < best->size ||
                          (run_best->size == best->size &&
                           (provenance_rank(run_best->provenance) < provenance_rank(best->provenance) ||
                            (run_best->provenance == best->provenance && run_best->theta < best->theta)));
            if (better) {
                best = std::move(run_best);
                best_corner = corner;
            }
        }
        if (!best) {
            // Every case was empty; a single square is always a valid pair.
            Square one = min_hitting_square(L);
            best = PairCandidate{one, Square{one.bl, 0}, one.side, "caseA", one.bl};
        }
        if (!opt.cases_only && n <= opt.exact_cap) {
            bool complete = false;
            if (auto e = exact_two_square(L, best->size, opt.search_budget, &complete)) {
                best = e;
                best_corner = -1;
            }
            sol.proven_optimal = complete;
        }
    }

    sol.size = best->size;
    sol.side1 = best->s1.side;
    sol.side2 = best->s2.side;
    sol.s1 = Square{best->s1.bl, sol.size};
    sol.s2 = Square{best->s2.bl, sol.size};
    sol.provenance = best->provenance;
    if (best->provenance != "fallback-oracle" && best->provenance != "exact-search") sol.theta = best->theta;
    sol.violator_corner = best_corner;
    for (const auto& s : L) {
        PairAssignment pa;
        pa.seg_id = s.id;
        if (auto w = square_hits_segment(sol.s1, s)) {
            pa.square = 1;
            pa.witness = *w;
        } else if (auto w2 = square_hits_segment(sol.s2, s)) {
            pa.square = 2;
            pa.witness = *w2;
        } else {
            throw std::logic_error("two-square result misses segment " + std::to_string(s.id));
        }
        sol.assignment.push_back(pa);
    }
    if (!oracle::verify_certificate(L, sol.s1, sol.s2).ok) throw std::logic_error("certificate check failed");
    return sol;
}

}  // namespace twosq
