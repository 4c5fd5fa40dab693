#include "twosq/geometry.hpp"

#include <stdexcept>

namespace twosq {

Point operator+(const Point& a, const Point& b) { return {a.x + b.x, a.y + b.y}; }
Point operator-(const Point& a, const Point& b) { return {a.x - b.x, a.y - b.y}; }
Point operator*(const Scalar& k, const Point& p) { return {k * p.x, k * p.y}; }

std::string to_string(const Point& p) { return "(" + p.x.str() + "," + p.y.str() + ")"; }

int orient(const Point& a, const Point& b, const Point& c) {
    Scalar v = (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x);
    return v.sign();
}

Segment::Segment(Point a, Point b, int id_) : id(id_) {
    if (a == b) throw std::invalid_argument("zero-length segment");
    if (b < a) std::swap(a, b);
    e1 = std::move(a);
    e2 = std::move(b);
}

int Segment::slope_sign() const {
    if (vertical() || horizontal()) return 0;
    return e2.y > e1.y ? 1 : -1;
}

SlopeClass Segment::slope_class() const {
    if (vertical()) return SlopeClass::Vertical;
    if (horizontal()) return SlopeClass::Horizontal;
    Scalar dx = e2.x - e1.x, dy = e2.y - e1.y;
    if (dy.sign() < 0) return SlopeClass::Negative;
    int c = compare(dy, dx);
    if (c == 0) return SlopeClass::Unit;
    return c < 0 ? SlopeClass::PositiveLe1 : SlopeClass::PositiveGt1;
}

Scalar Segment::y_at(const Scalar& x) const {
    return e1.y + (x - e1.x) * (e2.y - e1.y) / (e2.x - e1.x);
}

Scalar Segment::x_at(const Scalar& y) const {
    return e1.x + (y - e1.y) * (e2.x - e1.x) / (e2.y - e1.y);
}

std::string to_string(const Segment& s) {
    return "#" + std::to_string(s.id) + " " + to_string(s.e1) + "-" + to_string(s.e2);
}

Line Line::through(const Point& p, const Point& dir) {
    if (dir.x.is_zero() && dir.y.is_zero()) throw std::invalid_argument("line with zero direction");
    Line l{dir.y, -dir.x, Scalar()};
    l.c = l.a * p.x + l.b * p.y;
    return l;
}

SlopeClass Line::slope_class() const {
    if (b.is_zero()) return SlopeClass::Vertical;
    if (a.is_zero()) return SlopeClass::Horizontal;
    Scalar m = -a / b;
    if (m.sign() < 0) return SlopeClass::Negative;
    int c = compare(m, Scalar(1));
    if (c == 0) return SlopeClass::Unit;
    return c < 0 ? SlopeClass::PositiveLe1 : SlopeClass::PositiveGt1;
}

std::optional<Point> intersect_lines(const Line& l1, const Line& l2) {
    Scalar det = l1.a * l2.b - l2.a * l1.b;
    if (det.is_zero()) return std::nullopt;
    return Point{(l1.c * l2.b - l2.c * l1.b) / det, (l1.a * l2.c - l2.a * l1.c) / det};
}

std::string to_string(const Square& s) { return "[bl=" + to_string(s.bl) + " side=" + s.side.str() + "]"; }

namespace {

bool on_segment_collinear(const Point& p, const Point& a, const Point& b) {
    return min(a.x, b.x) <= p.x && p.x <= max(a.x, b.x) && min(a.y, b.y) <= p.y && p.y <= max(a.y, b.y);
}

// Liang-Barsky clip of the segment against [x0,x1]x[y0,y1]; returns the
// entry parameter when the clipped piece is nonempty.
std::optional<Scalar> clip_entry(const Scalar& x0, const Scalar& x1, const Scalar& y0, const Scalar& y1,
                                 const Segment& s) {
    Scalar lo = 0, hi = 1;
    const Scalar dx = s.e2.x - s.e1.x;
    const Scalar dy = s.e2.y - s.e1.y;
    auto edge = [&](const Scalar& d, const Scalar& start, const Scalar& min_v, const Scalar& max_v) {
        if (d.is_zero()) return min_v <= start && start <= max_v;
        Scalar t0 = (min_v - start) / d;
        Scalar t1 = (max_v - start) / d;
        if (d.sign() < 0) std::swap(t0, t1);
        if (lo < t0) lo = t0;
        if (t1 < hi) hi = t1;
        return lo <= hi;
    };
    if (!edge(dx, s.e1.x, x0, x1)) return std::nullopt;
    if (!edge(dy, s.e1.y, y0, y1)) return std::nullopt;
    return lo;
}

bool box_contains(const Scalar& x0, const Scalar& x1, const Scalar& y0, const Scalar& y1, const Point& p) {
    return x0 <= p.x && p.x <= x1 && y0 <= p.y && p.y <= y1;
}

std::optional<Point> box_hits(const Scalar& x0, const Scalar& x1, const Scalar& y0, const Scalar& y1,
                              const Segment& s) {
    if (box_contains(x0, x1, y0, y1, s.e1)) return s.e1;
    if (box_contains(x0, x1, y0, y1, s.e2)) return s.e2;
    auto t = clip_entry(x0, x1, y0, y1, s);
    if (!t) return std::nullopt;
    return Point{s.e1.x + *t * (s.e2.x - s.e1.x), s.e1.y + *t * (s.e2.y - s.e1.y)};
}

}  // namespace

bool segments_intersect(const Segment& s1, const Segment& s2) {
    const Point &p1 = s1.e1, &p2 = s1.e2, &q1 = s2.e1, &q2 = s2.e2;
    // Bounding boxes first: cheap and exact.
    if (max(p1.x, p2.x) < min(q1.x, q2.x) || max(q1.x, q2.x) < min(p1.x, p2.x)) return false;
    if (max(p1.y, p2.y) < min(q1.y, q2.y) || max(q1.y, q2.y) < min(p1.y, p2.y)) return false;
    int o1 = orient(p1, p2, q1), o2 = orient(p1, p2, q2);
    int o3 = orient(q1, q2, p1), o4 = orient(q1, q2, p2);
    if (o1 * o2 < 0 && o3 * o4 < 0) return true;
    if (o1 == 0 && on_segment_collinear(q1, p1, p2)) return true;
    if (o2 == 0 && on_segment_collinear(q2, p1, p2)) return true;
    if (o3 == 0 && on_segment_collinear(p1, q1, q2)) return true;
    if (o4 == 0 && on_segment_collinear(p2, q1, q2)) return true;
    return false;
}

std::optional<Point> square_hits_segment(const Square& sq, const Segment& s) {
    if (sq.side.sign() < 0) return std::nullopt;
    Scalar x1 = sq.bl.x + sq.side, y1 = sq.bl.y + sq.side;
    return box_hits(sq.bl.x, x1, sq.bl.y, y1, s);
}

bool hits(const Square& sq, const Segment& s) {
    Scalar x1 = sq.bl.x + sq.side, y1 = sq.bl.y + sq.side;
    // Reject on bounding boxes before clipping.
    if (s.rx() < sq.bl.x || x1 < s.lx() || s.ty() < sq.bl.y || y1 < s.by()) return false;
    if (box_contains(sq.bl.x, x1, sq.bl.y, y1, s.e1) || box_contains(sq.bl.x, x1, sq.bl.y, y1, s.e2)) return true;
    if (s.vertical() || s.horizontal()) return true;  // bounding boxes overlap
    // The segment's line must separate neither way: some corner on each side.
    Line l = Line::supporting(s);
    int sg[4] = {l.eval(sq.bl).sign(), l.eval({x1, sq.bl.y}).sign(), l.eval({sq.bl.x, y1}).sign(),
                 l.eval({x1, y1}).sign()};
    bool pos = false, neg = false;
    for (int v : sg) {
        if (v == 0) return true;
        (v > 0 ? pos : neg) = true;
    }
    return pos && neg;
}

std::optional<Point> rect_hits_segment(const Rect& r, const Segment& s) {
    return box_hits(r.bl.x, r.tr.x, r.bl.y, r.tr.y, s);
}

std::optional<Point> intersect_segment_line(const Segment& s, const Line& l) {
    Scalar f1 = l.eval(s.e1), f2 = l.eval(s.e2);
    int g1 = f1.sign(), g2 = f2.sign();
    if (g1 == 0) return s.e1;
    if (g2 == 0) return s.e2;
    if (g1 == g2) return std::nullopt;
    Scalar t = f1 / (f1 - f2);
    return Point{s.e1.x + t * (s.e2.x - s.e1.x), s.e1.y + t * (s.e2.y - s.e1.y)};
}

Point Transform::apply(const Point& p) const {
    Point q{flip_x ? -p.x : p.x, flip_y ? -p.y : p.y};
    if (swap_xy) std::swap(q.x, q.y);
    return q;
}

Point Transform::unapply(const Point& p) const {
    Point q = p;
    if (swap_xy) std::swap(q.x, q.y);
    if (flip_x) q.x = -q.x;
    if (flip_y) q.y = -q.y;
    return q;
}

Square Transform::apply(const Square& s) const {
    Point a = apply(s.bl), b = apply(s.tr());
    return {{min(a.x, b.x), min(a.y, b.y)}, s.side};
}

Square Transform::unapply(const Square& s) const {
    Point a = unapply(s.bl), b = unapply(s.tr());
    return {{min(a.x, b.x), min(a.y, b.y)}, s.side};
}

std::vector<Segment> Transform::apply(const std::vector<Segment>& v) const {
    std::vector<Segment> out;
    out.reserve(v.size());
    for (const auto& s : v) out.push_back(apply(s));
    return out;
}

}  // namespace twosq
