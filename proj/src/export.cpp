#include "ramseg/export.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

namespace ramseg {

namespace {

constexpr double kWidth = 1000;
constexpr double kHeight = 600;
constexpr double kMargin = 40;

std::string num(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3f", v);
    return buf;
}

std::string escape(const std::string& s) {
    std::string out;
    for (char c : s) {
        switch (c) {
        case '&': out += "&amp;"; break;
        case '<': out += "&lt;"; break;
        case '>': out += "&gt;"; break;
        case '"': out += "&quot;"; break;
        default: out += c;
        }
    }
    return out;
}

struct Frame {
    double x0, y0, sx, sy;

    double px(double x) const { return kMargin + (x - x0) * sx; }
    double py(double y) const { return kHeight - kMargin - (y - y0) * sy; }
};

Frame fit(const NumericArrangement& arr) {
    double x0 = arr.front().left.x.to_double(), x1 = x0;
    double y0 = arr.front().left.y.to_double(), y1 = y0;
    for (const auto& s : arr) {
        for (const auto* p : {&s.left, &s.right}) {
            x0 = std::min(x0, p->x.to_double());
            x1 = std::max(x1, p->x.to_double());
            y0 = std::min(y0, p->y.to_double());
            y1 = std::max(y1, p->y.to_double());
        }
    }
    const double sx = (kWidth - 2 * kMargin) / (x1 > x0 ? x1 - x0 : 1.0);
    const double sy = (kHeight - 2 * kMargin) / (y1 > y0 ? y1 - y0 : 1.0);
    return {x0, y0, sx, sy};
}

}  // namespace

void write_dot(std::ostream& os, const LabeledGraph& g, const std::string& name) {
    os << "graph " << name << " {\n";
    for (std::size_t v = 1; v <= g.vertex_count(); ++v) os << "  " << v << ";\n";
    for (const auto& [i, j] : g.edges()) os << "  " << i << " -- " << j << ";\n";
    os << "}\n";
}

void write_svg(std::ostream& os, const NumericArrangement& arr, const std::optional<StabLine>& line,
               const std::string& title) {
    os << "<?xml version=\"1.0\" encoding=\"UTF-8\" standalone=\"no\"?>\n"
       << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << kWidth << "\" height=\"" << kHeight
       << "\" viewBox=\"0 0 " << kWidth << " " << kHeight << "\">\n";
    if (arr.empty()) {
        os << "</svg>\n";
        return;
    }
    const Frame f = fit(arr);
    os << "<!-- display only: y stretched by factor " << num(f.sy / f.sx) << " relative to x -->\n";
    if (!title.empty()) os << "<title>" << escape(title) << "</title>\n";
    os << "<rect x=\"0\" y=\"0\" width=\"" << kWidth << "\" height=\"" << kHeight << "\" fill=\"white\"/>\n";

    if (line) {
        const double a = line->coeffs.a.to_double();
        const double b = line->coeffs.b.to_double();
        const double c = line->coeffs.c.to_double();
        const double xl = f.x0 - kMargin / f.sx;
        const double xr = f.x0 + (kWidth - kMargin) / f.sx;
        double X1, Y1, X2, Y2;
        if (b != 0) {
            X1 = f.px(xl);
            Y1 = f.py(-(a * xl + c) / b);
            X2 = f.px(xr);
            Y2 = f.py(-(a * xr + c) / b);
        } else {
            X1 = X2 = f.px(-c / a);
            Y1 = 0;
            Y2 = kHeight;
        }
        os << "<line class=\"stab\" x1=\"" << num(X1) << "\" y1=\"" << num(Y1) << "\" x2=\"" << num(X2) << "\" y2=\""
           << num(Y2) << "\" stroke=\"red\" stroke-width=\"1\" stroke-dasharray=\"6,4\"/>\n";
    }

    for (std::size_t i = 0; i < arr.size(); ++i) {
        const auto& s = arr[i];
        const double lx = f.px(s.left.x.to_double()), ly = f.py(s.left.y.to_double());
        const double rx = f.px(s.right.x.to_double()), ry = f.py(s.right.y.to_double());
        os << "<line class=\"segment\" x1=\"" << num(lx) << "\" y1=\"" << num(ly) << "\" x2=\"" << num(rx)
           << "\" y2=\"" << num(ry) << "\" stroke=\"black\" stroke-width=\"1\"/>\n";
        // Labels are spread along the segments so they do not pile up at
        // the clustered endpoints.
        const double t = static_cast<double>(i + 1) / static_cast<double>(arr.size() + 1);
        os << "<text class=\"label\" x=\"" << num(lx + t * (rx - lx)) << "\" y=\"" << num(ly + t * (ry - ly) - 3)
           << "\" font-size=\"10\" fill=\"blue\">" << i + 1 << "</text>\n";
    }
    os << "</svg>\n";
}

}  // namespace ramseg
