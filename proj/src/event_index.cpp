#include "twosq/event_index.hpp"

#include <algorithm>
#include <numeric>

namespace twosq {

namespace {

template <class Key>
std::vector<int> sorted_by(const std::vector<Segment>& L, Key key, bool descending) {
    std::vector<int> v(L.size());
    std::iota(v.begin(), v.end(), 0);
    std::stable_sort(v.begin(), v.end(), [&](int i, int j) {
        int c = compare(key(L[i]), key(L[j]));
        if (c != 0) return descending ? c > 0 : c < 0;
        return L[i].id < L[j].id;
    });
    return v;
}

}  // namespace

Scalar crossing_y(const Segment& s, const Scalar& x0) { return s.vertical() ? s.by() : s.y_at(x0); }

EventIndex::EventIndex(const std::vector<Segment>& L, int p_index) : L_(&L), p_(p_index) {
    lt_ = sorted_by(L, [](const Segment& s) -> const Scalar& { return s.ty(); }, false);
    lb_ = sorted_by(L, [](const Segment& s) -> const Scalar& { return s.by(); }, true);
    ll_ = sorted_by(L, [](const Segment& s) -> const Scalar& { return s.lx(); }, true);
    lr_ = sorted_by(L, [](const Segment& s) -> const Scalar& { return s.rx(); }, false);
}

const std::vector<int>& EventIndex::vertical_crossings(const Scalar& x0) const {
    auto it = vcache_.find(x0);
    if (it != vcache_.end()) return it->second;
    const auto& L = *L_;
    std::vector<std::pair<Scalar, int>> keyed;
    for (int i = 0; i < int(L.size()); ++i)
        if (L[i].lx() <= x0 && x0 <= L[i].rx()) keyed.emplace_back(crossing_y(L[i], x0), i);
    std::sort(keyed.begin(), keyed.end(), [&](const auto& u, const auto& v) {
        int c = compare(u.first, v.first);
        return c != 0 ? c < 0 : L[u.second].id < L[v.second].id;
    });
    std::vector<int> out;
    out.reserve(keyed.size());
    for (auto& k : keyed) out.push_back(k.second);
    return vcache_.emplace(x0, std::move(out)).first->second;
}

std::vector<int> EventIndex::ray_up(const Point& from) const {
    std::vector<int> out;
    for (int i : vertical_crossings(from.x)) {
        const Segment& s = (*L_)[i];
        if (s.vertical() ? from.y < s.by() : from.y < s.y_at(from.x)) out.push_back(i);
    }
    return out;
}

std::vector<int> EventIndex::ray_down(const Point& from) const {
    std::vector<int> out;
    const auto& v = vertical_crossings(from.x);
    for (auto it = v.rbegin(); it != v.rend(); ++it) {
        const Segment& s = (*L_)[*it];
        if (s.vertical() ? s.ty() < from.y : s.y_at(from.x) < from.y) out.push_back(*it);
    }
    return out;
}

}  // namespace twosq
