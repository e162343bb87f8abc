#include "tilekit/svg.hpp"

#include <cstdio>
#include <sstream>

namespace tilekit {

namespace {

std::string fixed6(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.6f", v);
    return buf;
}

// SVG y grows downward; geometry y grows upward.
std::string coord(const Point2& p) {
    return fixed6(p.x.to_double()) + "," + fixed6(-p.y.to_double());
}

}  // namespace

std::string render_svg(const Patch& patch, const SvgStyle& style) {
    double r = patch.window.to_double();
    std::ostringstream out;
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"" << fixed6(-r) << " "
        << fixed6(-r) << " " << fixed6(2 * r) << " " << fixed6(2 * r) << "\">\n";
    out << "<g fill=\"#3b6ea5\" fill-opacity=\"" << fixed6(style.fill_opacity)
        << "\" stroke=\"#1f3a5f\" stroke-width=\"" << fixed6(style.stroke_width) << "\">\n";
    for (const Vec2& t : patch.translations) {
        out << "<path d=\"";
        for (int i = 0; i < patch.polygon.size(); ++i)
            out << (i == 0 ? "M" : " L") << coord(patch.polygon.vertex(i) + t);
        out << " Z\"/>\n";
    }
    out << "</g>\n";
    if (style.mark_lattice) {
        out << "<g fill=\"#aa3311\">\n";
        for (const Vec2& t : patch.translations)
            out << "<circle cx=\"" << fixed6(t.x.to_double()) << "\" cy=\""
                << fixed6(-t.y.to_double()) << "\" r=\"" << fixed6(0.05) << "\"/>\n";
        out << "</g>\n";
    }
    out << "</svg>\n";
    return out.str();
}

}  // namespace tilekit
