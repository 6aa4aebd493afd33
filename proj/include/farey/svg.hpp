#pragma once

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <string>
#include <vector>

#include "geodesic.hpp"

namespace farey {

namespace detail {

inline double toDouble(const ExtRational& v) {
    return v.num().convert_to<double>() / v.den().convert_to<double>();
}

inline std::string fmt(double x) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.4f", x);
    return buf;
}

}  // namespace detail

/// Upper-half-plane picture of three periods of the invariant ladder:
/// edges as semicircles (vertical rays at infinity), the axis pivot
/// path highlighted. Presentation only; all math upstream stays exact.
inline std::string axisSvg(const MatrixPSL2Z& m, const AxisResult& r) {
    std::vector<FareyEdge> edges;
    std::vector<ExtRational> axis;
    MatrixPSL2Z power(1, 0, 0, 1);
    for (int period = 0; period < 3; ++period) {
        for (const auto& e : ladderEdges(r.window)) edges.push_back(apply(power, e));
        for (const auto& v : r.axis) axis.push_back(apply(power, v));
        power = power * m;
    }
    axis.push_back(apply(power, r.axis.empty() ? r.window.pivots.front() : r.axis.front()));

    double lo = 0, hi = 0;
    bool seen = false;
    auto see = [&](const ExtRational& v) {
        if (v.isInfinity()) return;
        double x = detail::toDouble(v);
        if (!seen) {
            lo = hi = x;
            seen = true;
        } else {
            lo = std::min(lo, x);
            hi = std::max(hi, x);
        }
    };
    for (const auto& e : edges) {
        see(e.a());
        see(e.b());
    }
    for (const auto& v : axis) see(v);
    if (!seen || hi - lo < 1e-9) {
        lo -= 1;
        hi += 1;
    }

    const double width = 900, height = 420, margin = 30, base = height - 40;
    double scale = (width - 2 * margin) / (hi - lo);
    auto X = [&](double x) { return margin + (x - lo) * scale; };

    auto arc = [&](const ExtRational& u, const ExtRational& v, const char* style) {
        std::string out = "  <path d=\"";
        if (u.isInfinity() || v.isInfinity()) {
            double x = X(detail::toDouble(u.isInfinity() ? v : u));
            out += "M " + detail::fmt(x) + " " + detail::fmt(base) + " L " + detail::fmt(x) + " 10";
        } else {
            double a = detail::toDouble(u), b = detail::toDouble(v);
            if (a > b) std::swap(a, b);
            double rad = (b - a) / 2 * scale;
            out += "M " + detail::fmt(X(a)) + " " + detail::fmt(base) + " A " + detail::fmt(rad) + " " +
                   detail::fmt(rad) + " 0 0 1 " + detail::fmt(X(b)) + " " + detail::fmt(base);
        }
        out += "\" ";
        out += style;
        out += "/>\n";
        return out;
    };

    std::string svg = "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + detail::fmt(width) +
                      "\" height=\"" + detail::fmt(height) + "\" viewBox=\"0 0 " + detail::fmt(width) + " " +
                      detail::fmt(height) + "\">\n";
    svg += "  <line x1=\"0\" y1=\"" + detail::fmt(base) + "\" x2=\"" + detail::fmt(width) + "\" y2=\"" +
           detail::fmt(base) + "\" stroke=\"#999\" stroke-width=\"1\"/>\n";
    for (const auto& e : edges) svg += arc(e.a(), e.b(), "fill=\"none\" stroke=\"#7aa0c4\" stroke-width=\"1\"");
    for (size_t i = 0; i + 1 < axis.size(); ++i)
        svg += arc(axis[i], axis[i + 1], "fill=\"none\" stroke=\"#c0392b\" stroke-width=\"2.5\"");
    svg += "</svg>\n";
    return svg;
}

}  // namespace farey
