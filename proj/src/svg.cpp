#include "twosq/svg.hpp"

#include <algorithm>
#include <sstream>

#include "twosq/extremal.hpp"

namespace twosq {

namespace {

struct View {
    double x0, y0, x1, y1, scale;
    int w, h;
    double X(const Scalar& x) const { return 20 + (x.to_double() - x0) * scale; }
    double Y(const Scalar& y) const { return h - 20 - (y.to_double() - y0) * scale; }
};

void grow(double& lo, double& hi, double v) {
    lo = std::min(lo, v);
    hi = std::max(hi, v);
}

}  // namespace

std::string render_svg(const SvgScene& sc) {
    double x0 = 0, x1 = 1, y0 = 0, y1 = 1;
    bool first = true;
    auto include = [&](const Point& p) {
        double x = p.x.to_double(), y = p.y.to_double();
        if (first) {
            x0 = x1 = x;
            y0 = y1 = y;
            first = false;
        }
        grow(x0, x1, x);
        grow(y0, y1, y);
    };
    for (const auto& s : sc.segments) {
        include(s.e1);
        include(s.e2);
    }
    for (const auto& q : sc.squares) {
        include(q.bl);
        include(q.tr());
    }
    double span = std::max({x1 - x0, y1 - y0, 1e-9});
    View v{x0, y0, x1, y1, (sc.width - 40) / span, sc.width, 0};
    v.h = int((y1 - y0) * v.scale) + 40;

    std::ostringstream os;
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << v.w << "\" height=\"" << v.h << "\">\n";
    os << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    if (sc.show_frame && !sc.segments.empty()) {
        ExtremalFrame f = compute_extremal_frame(sc.segments);
        os << "<rect x=\"" << v.X(f.rect.bl.x) << "\" y=\"" << v.Y(f.rect.tr.y) << "\" width=\""
           << v.X(f.rect.tr.x) - v.X(f.rect.bl.x) << "\" height=\"" << v.Y(f.rect.bl.y) - v.Y(f.rect.tr.y)
           << "\" fill=\"#eef\" stroke=\"#99c\" stroke-dasharray=\"4 2\"/>\n";
        for (const Scalar* x : {&f.a.x, &f.c.x})
            os << "<line x1=\"" << v.X(*x) << "\" y1=\"0\" x2=\"" << v.X(*x) << "\" y2=\"" << v.h
               << "\" stroke=\"#ccd\" stroke-width=\"0.5\"/>\n";
        for (const Scalar* y : {&f.b.y, &f.d.y})
            os << "<line x1=\"0\" y1=\"" << v.Y(*y) << "\" x2=\"" << v.w << "\" y2=\"" << v.Y(*y)
               << "\" stroke=\"#ccd\" stroke-width=\"0.5\"/>\n";
        ViolatorSet vs = find_violators(f, sc.segments);
        for (int c = 0; c < 4; ++c) {
            if (!vs.v[c]) continue;
            const Segment& s = sc.segments[vs.v[c]->idx];
            os << "<line x1=\"" << v.X(s.e1.x) << "\" y1=\"" << v.Y(s.e1.y) << "\" x2=\"" << v.X(s.e2.x)
               << "\" y2=\"" << v.Y(s.e2.y) << "\" stroke=\"#e80\" stroke-width=\"5\" stroke-opacity=\"0.4\"/>\n";
        }
    }
    for (const auto& s : sc.segments) {
        os << "<line x1=\"" << v.X(s.e1.x) << "\" y1=\"" << v.Y(s.e1.y) << "\" x2=\"" << v.X(s.e2.x) << "\" y2=\""
           << v.Y(s.e2.y) << "\" stroke=\"black\" stroke-width=\"1.5\"/>\n";
        os << "<text x=\"" << (v.X(s.e1.x) + v.X(s.e2.x)) / 2 + 3 << "\" y=\"" << (v.Y(s.e1.y) + v.Y(s.e2.y)) / 2 - 3
           << "\" font-size=\"10\" fill=\"#555\">" << s.id << "</text>\n";
    }
    static const char* colors[] = {"#c22", "#22c", "#2a2", "#a2a"};
    for (std::size_t i = 0; i < sc.squares.size(); ++i) {
        const Square& q = sc.squares[i];
        os << "<rect x=\"" << v.X(q.bl.x) << "\" y=\"" << v.Y(q.bl.y + q.side) << "\" width=\""
           << q.side.to_double() * v.scale << "\" height=\"" << q.side.to_double() * v.scale
           << "\" fill=\"none\" stroke=\"" << colors[i % 4] << "\" stroke-width=\"2\"/>\n";
    }
    for (const auto& l : sc.loci) {
        if (l.chain.size() < 2) continue;
        os << "<polyline fill=\"none\" stroke=\"#0a8\" stroke-dasharray=\"3 2\" points=\"";
        for (const auto& p : l.chain) os << v.X(p.x) << "," << v.Y(p.y) << " ";
        os << "\"/>\n";
    }
    os << "</svg>\n";
    return os.str();
}

}  // namespace twosq
