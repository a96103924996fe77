#include "frieze/svg_render.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

namespace frieze {

namespace {

std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.1f", v);
    return buf;
}

class SvgWriter {
public:
    SvgWriter(double width, double height) : width_(width), height_(height) {}

    void line(double x1, double y1, double x2, double y2, const char* cls) {
        body_ << "  <line class=\"" << cls << "\" x1=\"" << fmt(x1) << "\" y1=\"" << fmt(y1)
              << "\" x2=\"" << fmt(x2) << "\" y2=\"" << fmt(y2) << "\"/>\n";
    }
    void path(const std::string& d) {
        body_ << "  <path d=\"" << d << "\"/>\n";
    }
    void dot(double x, double y) {
        body_ << "  <circle cx=\"" << fmt(x) << "\" cy=\"" << fmt(y) << "\" r=\"2.5\"/>\n";
    }
    void label(double x, double y, const std::string& text) {
        body_ << "  <text x=\"" << fmt(x) << "\" y=\"" << fmt(y) << "\">" << text << "</text>\n";
    }

    std::string str() const {
        std::ostringstream out;
        out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
            << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << fmt(width_)
            << "\" height=\"" << fmt(height_) << "\" viewBox=\"0 0 " << fmt(width_) << " "
            << fmt(height_) << "\">\n"
            << "  <style>line.boundary{stroke:#000;stroke-width:1.5}"
               "line.cut{stroke:#888;stroke-dasharray:6 4}"
               "path{stroke:#336;fill:none;stroke-width:1.2}"
               "circle{fill:#000}text{font:10px sans-serif;fill:#222}</style>\n"
            << body_.str() << "</svg>\n";
    }

private:
    double width_, height_;
    std::ostringstream body_;
};

constexpr double kMargin = 50, kScale = 70, kLowY = 240, kUpY = 60;

double lx(double u) { return kMargin + u * kScale; }

std::string arch_path(double x1, double x2, double baseY, double dir) {
    double mid = (x1 + x2) / 2;
    double lift = dir * std::min(60.0, 12.0 + (x2 - x1) * 0.22);
    std::ostringstream d;
    d << "M " << fmt(x1) << " " << fmt(baseY) << " Q " << fmt(mid) << " " << fmt(baseY - lift)
      << " " << fmt(x2) << " " << fmt(baseY);
    return d.str();
}

std::string segment_path(double x1, double y1, double x2, double y2) {
    std::ostringstream d;
    d << "M " << fmt(x1) << " " << fmt(y1) << " L " << fmt(x2) << " " << fmt(y2);
    return d.str();
}

std::string hook_path(double x, double y, double edgeX, double midY) {
    std::ostringstream d;
    d << "M " << fmt(x) << " " << fmt(y) << " Q " << fmt(x) << " " << fmt(midY) << " "
      << fmt(edgeX) << " " << fmt(midY);
    return d.str();
}

std::string render_annulus(const AnnulusTriangulation& T) {
    const double unitsWide = T.n;
    double width = 2 * kMargin + unitsWide * kScale;
    SvgWriter svg(width, kLowY + kMargin);

    auto lower_at = [&](double absIndex) { return lx(absIndex); };
    auto upper_at = [&](double absIndex) {
        return T.m == 0 ? lx(0) : lx(absIndex * double(T.n) / double(T.m));
    };

    svg.line(lx(0), kLowY, lx(unitsWide), kLowY, "boundary");
    svg.line(lx(0), kUpY, lx(unitsWide), kUpY, "boundary");
    svg.line(lx(0), kUpY, lx(0), kLowY, "cut");
    svg.line(lx(unitsWide), kUpY, lx(unitsWide), kLowY, "cut");

    for (Index i = 1; i <= T.n; ++i) {
        svg.dot(lower_at(i - 1), kLowY);
        svg.label(lower_at(i - 1) - 3, kLowY + 16, std::to_string(i));
    }
    svg.dot(lower_at(T.n), kLowY);
    svg.label(lower_at(T.n) - 3, kLowY + 16, "1");
    for (Index p = T.n + 1; p <= T.n + T.m; ++p) {
        double x = upper_at(p - T.n - 1);
        svg.dot(x, kUpY);
        svg.label(x - 3, kUpY - 8, std::to_string(p));
    }

    const double midY = (kLowY + kUpY) / 2;
    for (const Arc& arc : T.arcs) {
        switch (arc.kind) {
        case Arc::Kind::peripheral: {
            if (arc.boundary == Boundary::outer) {
                double a = arc.from - 1;
                double len = arc.from == arc.to ? T.n : (((arc.to - arc.from) % T.n) + T.n) % T.n;
                svg.path(arch_path(lower_at(a), lower_at(a + len), kLowY, 1.0));
            } else {
                double a = arc.from - T.n - 1;
                double len = arc.from == arc.to ? T.m : (((arc.to - arc.from) % T.m) + T.m) % T.m;
                svg.path(arch_path(upper_at(a), upper_at(a + len), kUpY, -1.0));
            }
            break;
        }
        case Arc::Kind::bridging: {
            double L = arc.outer_point - 1;
            double U = (arc.inner_point - T.n - 1) + double(arc.winding) * T.m;
            svg.path(segment_path(lower_at(L), kLowY, upper_at(U), kUpY));
            break;
        }
        case Arc::Kind::asymptotic: {
            bool left = arc.spiral == Spiral::left;
            double edge = left ? lx(0) - 10 : lx(unitsWide) + 10;
            if (arc.base.boundary == Boundary::outer)
                svg.path(hook_path(lower_at(arc.base.index - 1), kLowY, edge, midY + 18));
            else
                svg.path(hook_path(upper_at(arc.base.index - T.n - 1), kUpY, edge, midY - 18));
            break;
        }
        }
    }
    return svg.str();
}

std::string render_disc(const PuncturedDisc& D) {
    return render_annulus(disc_to_annulus(D));
}

std::string render_strip(const StripTriangulation& T) {
    const double lo = double(T.stored_lo), hi = double(T.stored_hi);
    double width = 2 * kMargin + (hi - lo) * kScale;
    SvgWriter svg(width, kLowY + kMargin);
    auto X = [&](double v) { return kMargin + (v - lo) * kScale; };

    svg.line(X(lo), kLowY, X(hi), kLowY, "boundary");
    svg.line(X(lo), kUpY, X(hi), kUpY, "boundary");

    for (Index i = T.stored_lo; i <= T.stored_hi; ++i) {
        svg.dot(X(double(i)), kLowY);
        svg.label(X(double(i)) - 3, kLowY + 16, std::to_string(i));
    }
    for (std::size_t u = 0; u < T.upper.size(); ++u) {
        double xv = boost::multiprecision::numerator(T.upper[u]).convert_to<double>() /
                    boost::multiprecision::denominator(T.upper[u]).convert_to<double>();
        svg.dot(X(xv), kUpY);
        svg.label(X(xv) - 3, kUpY - 8, rational_to_string(T.upper[u]));
    }
    auto ux = [&](Index u) {
        return boost::multiprecision::numerator(T.upper[static_cast<std::size_t>(u)]).convert_to<double>() /
               boost::multiprecision::denominator(T.upper[static_cast<std::size_t>(u)]).convert_to<double>();
    };
    for (const auto& arch : T.lower_arches)
        svg.path(arch_path(X(double(arch.from)), X(double(arch.to)), kLowY, 1.0));
    for (const auto& arch : T.upper_arches)
        svg.path(arch_path(X(ux(arch.from)), X(ux(arch.to)), kUpY, -1.0));
    for (const auto& br : T.bridges)
        svg.path(segment_path(X(double(br.lower)), kLowY, X(ux(br.upper)), kUpY));
    return svg.str();
}

std::string render_polygon(const TriangulatedPolygon& P) {
    const double R = 140, cx = kMargin + R, cy = kMargin + R;
    SvgWriter svg(2 * (kMargin + R), 2 * (kMargin + R));
    auto px = [&](Index v) {
        double ang = 2 * M_PI * double(v - 1) / double(P.n) - M_PI / 2;
        return std::pair<double, double>{cx + R * std::cos(ang), cy + R * std::sin(ang)};
    };
    std::ostringstream ring;
    for (Index v = 1; v <= P.n; ++v) {
        auto [x, y] = px(v);
        ring << (v == 1 ? "M " : "L ") << fmt(x) << " " << fmt(y) << " ";
    }
    ring << "Z";
    svg.path(ring.str());
    for (const auto& [u, v] : P.diagonals) {
        auto [x1, y1] = px(u);
        auto [x2, y2] = px(v);
        svg.path(segment_path(x1, y1, x2, y2));
    }
    for (Index v = 1; v <= P.n; ++v) {
        auto [x, y] = px(v);
        svg.dot(x, y);
        svg.label(x - 3, y - 8, std::to_string(v));
    }
    return svg.str();
}

} // namespace

std::string render_svg(const Triangulation& T) {
    if (std::holds_alternative<AnnulusTriangulation>(T))
        return render_annulus(std::get<AnnulusTriangulation>(T));
    if (std::holds_alternative<PuncturedDisc>(T)) return render_disc(std::get<PuncturedDisc>(T));
    if (std::holds_alternative<StripTriangulation>(T))
        return render_strip(std::get<StripTriangulation>(T));
    return render_polygon(std::get<TriangulatedPolygon>(T));
}

} // namespace frieze
