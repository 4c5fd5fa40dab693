// Planar primitives over exact rationals and the predicates built on them.
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "twosq/scalar.hpp"

namespace twosq {

struct Point {
    Scalar x, y;
    friend bool operator==(const Point&, const Point&) = default;
    friend auto operator<=>(const Point& a, const Point& b) {
        if (auto c = a.x <=> b.x; c != 0) return c;
        return a.y <=> b.y;
    }
};

Point operator+(const Point& a, const Point& b);
Point operator-(const Point& a, const Point& b);
Point operator*(const Scalar& k, const Point& p);
std::string to_string(const Point& p);

// Sign of the cross product (b - a) x (c - a): +1 left turn, -1 right turn, 0 collinear.
int orient(const Point& a, const Point& b, const Point& c);

enum class SlopeClass { Vertical, Horizontal, PositiveLe1, Unit, PositiveGt1, Negative };

// A closed segment.  The constructor orders the endpoints so that e1 < e2
// lexicographically; zero-length segments are rejected.
struct Segment {
    Point e1, e2;
    int id = 0;

    Segment() = default;
    Segment(Point a, Point b, int id_);

    const Scalar& lx() const { return e1.x; }
    const Scalar& rx() const { return e2.x; }
    const Scalar& by() const { return e1.y < e2.y ? e1.y : e2.y; }
    const Scalar& ty() const { return e1.y < e2.y ? e2.y : e1.y; }
    const Point& left() const { return e1; }
    const Point& right() const { return e2; }
    const Point& bottom() const { return e2.y < e1.y ? e2 : e1; }
    const Point& top() const { return e2.y < e1.y ? e1 : e2; }

    bool vertical() const { return e1.x == e2.x; }
    bool horizontal() const { return e1.y == e2.y; }
    // Sign of the slope: +1, -1, or 0 for axis-parallel segments.
    int slope_sign() const;
    SlopeClass slope_class() const;

    // y on the supporting line at abscissa x (non-vertical segments only).
    Scalar y_at(const Scalar& x) const;
    // x on the supporting line at ordinate y (non-horizontal segments only).
    Scalar x_at(const Scalar& y) const;

    friend bool operator==(const Segment& a, const Segment& b) {
        return a.id == b.id && a.e1 == b.e1 && a.e2 == b.e2;
    }
};

std::string to_string(const Segment& s);

// Line a*x + b*y = c with (a, b) != (0, 0).
struct Line {
    Scalar a, b, c;

    static Line vertical(const Scalar& x0) { return {1, 0, x0}; }
    static Line horizontal(const Scalar& y0) { return {0, 1, y0}; }
    static Line through(const Point& p, const Point& dir);
    static Line unit_slope(const Point& p) { return through(p, {1, 1}); }
    static Line supporting(const Segment& s) { return through(s.e1, s.e2 - s.e1); }

    Scalar eval(const Point& p) const { return a * p.x + b * p.y - c; }
    Point direction() const { return {b, -a}; }
    SlopeClass slope_class() const;
};

std::optional<Point> intersect_lines(const Line& l1, const Line& l2);

struct Square {
    Point bl;
    Scalar side;

    Point tr() const { return {bl.x + side, bl.y + side}; }
    bool contains(const Point& p) const {
        return bl.x <= p.x && p.x <= bl.x + side && bl.y <= p.y && p.y <= bl.y + side;
    }
    friend bool operator==(const Square&, const Square&) = default;
};

std::string to_string(const Square& s);

struct Rect {
    Point bl, tr;
    bool contains(const Point& p) const {
        return bl.x <= p.x && p.x <= tr.x && bl.y <= p.y && p.y <= tr.y;
    }
    friend bool operator==(const Rect&, const Rect&) = default;
};

bool segments_intersect(const Segment& s1, const Segment& s2);

// Closed-region hit test.  The witness is an endpoint of the segment when one
// lies in the square, otherwise the first point of the segment inside it.
std::optional<Point> square_hits_segment(const Square& sq, const Segment& s);
bool hits(const Square& sq, const Segment& s);
std::optional<Point> rect_hits_segment(const Rect& r, const Segment& s);

// Point of the closed segment on the line; if the segment lies on the line
// the lexicographically smaller endpoint (e1) is returned.
std::optional<Point> intersect_segment_line(const Segment& s, const Line& l);

// Axis reflections optionally followed by swapping the axes.  Every
// transform here is an isometry that maps axis-parallel squares to
// axis-parallel squares of the same side.
struct Transform {
    bool flip_x = false;
    bool flip_y = false;
    bool swap_xy = false;

    Point apply(const Point& p) const;
    Point unapply(const Point& p) const;
    Segment apply(const Segment& s) const { return Segment(apply(s.e1), apply(s.e2), s.id); }
    Segment unapply(const Segment& s) const { return Segment(unapply(s.e1), unapply(s.e2), s.id); }
    Square apply(const Square& s) const;
    Square unapply(const Square& s) const;
    std::vector<Segment> apply(const std::vector<Segment>& v) const;
    bool identity() const { return !flip_x && !flip_y && !swap_xy; }
};

}  // namespace twosq
