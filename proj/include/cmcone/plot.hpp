#ifndef CMCONE_PLOT_HPP
#define CMCONE_PLOT_HPP

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <string>
#include <vector>

#include "cone.hpp"
#include "grothendieck.hpp"

namespace cmcone {

/// What to draw for a cone in G0(R##)_Q.
///
/// m = 2: the plane with coordinates (rank, q1 - q2); rays are drawn from the
/// origin, rank pointing up. The rays [I_1], [I_2] land on (1, 1) and (1, -1).
/// m >= 3: the rank-one slice, projected onto a fixed orthonormal basis of the
/// rank-zero hyperplane (first two Helmert vectors).
/// m = 1: the single ray [R##] on the rank axis.
struct PlotSpec {
    enum class Projection { Ray, RankDifference, RankSlice };
    struct Point {
        double horizontal = 0;
        double vertical = 0;
        std::string label;
    };

    Projection projection = Projection::Ray;
    std::size_t m = 0;
    std::string horizontal_axis;
    std::string vertical_axis;
    std::vector<Point> rays;
    /// Exact (rank, q1 - q2) coordinates for m = 2, in ray order.
    std::vector<std::pair<Rational, Rational>> exact_rank_difference;
    /// Boundary of the rank-one slice for m >= 3, counter-clockwise.
    std::vector<Point> slice_polygon;
};

namespace detail {

inline double cross(const PlotSpec::Point& o, const PlotSpec::Point& a, const PlotSpec::Point& b) {
    return (a.horizontal - o.horizontal) * (b.vertical - o.vertical) - (a.vertical - o.vertical) * (b.horizontal - o.horizontal);
}

// Andrew's monotone chain; collinear points are dropped.
inline std::vector<PlotSpec::Point> convex_hull(std::vector<PlotSpec::Point> pts) {
    std::sort(pts.begin(), pts.end(), [](const auto& a, const auto& b) {
        return a.horizontal < b.horizontal || (a.horizontal == b.horizontal && a.vertical < b.vertical);
    });
    if (pts.size() < 3) return pts;
    std::vector<PlotSpec::Point> hull(2 * pts.size());
    std::size_t k = 0;
    constexpr double eps = 1e-12;
    for (const auto& p : pts) {
        while (k >= 2 && cross(hull[k - 2], hull[k - 1], p) <= eps) --k;
        hull[k++] = p;
    }
    for (std::size_t i = pts.size() - 1, t = k + 1; i-- > 0;) {
        while (k >= t && cross(hull[k - 2], hull[k - 1], pts[i]) <= eps) --k;
        hull[k++] = pts[i];
    }
    hull.resize(k - 1);
    return hull;
}

inline std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3f", std::abs(v) < 5e-4 ? 0.0 : v);
    return buf;
}

inline std::string escape(const std::string& s) {
    std::string out;
    for (char c : s) {
        if (c == '<') out += "&lt;";
        else if (c == '>') out += "&gt;";
        else if (c == '&') out += "&amp;";
        else if (c == '#') out += "&#35;";
        else out += c;
    }
    return out;
}

}  // namespace detail

inline PlotSpec make_plot_spec(const Cone& c) {
    PlotSpec p;
    p.m = c.dim();
    const auto& gens = c.generators();
    const auto label_of = [&](std::size_t i) { return c.labels().empty() ? std::to_string(i + 1) : c.labels()[i]; };

    if (p.m == 1) {
        p.projection = PlotSpec::Projection::Ray;
        p.horizontal_axis = "";
        p.vertical_axis = "rank";
        for (std::size_t i = 0; i < gens.size(); ++i) p.rays.push_back({0.0, 1.0, label_of(i)});
        return p;
    }
    if (p.m == 2) {
        p.projection = PlotSpec::Projection::RankDifference;
        p.horizontal_axis = "q1 - q2";
        p.vertical_axis = "rank";
        for (std::size_t i = 0; i < gens.size(); ++i) {
            const Rational rk = rank(gens[i]);
            const Rational diff = gens[i][0] - gens[i][1];
            p.exact_rank_difference.emplace_back(rk, diff);
            const double scale = rk.is_zero() ? 1.0 : 1.0 / std::abs(rk.to_double());
            p.rays.push_back({diff.to_double() * scale, rk.to_double() * scale, label_of(i)});
        }
        return p;
    }

    p.projection = PlotSpec::Projection::RankSlice;
    p.horizontal_axis = "u1";
    p.vertical_axis = "u2";
    const double s1 = 1.0 / std::sqrt(2.0);
    const double s2 = 1.0 / std::sqrt(6.0);
    for (std::size_t i = 0; i < gens.size(); ++i) {
        const Rational rk = rank(gens[i]);
        if (rk.sign() <= 0) continue;
        std::vector<double> v;
        for (const auto& q : gens[i]) v.push_back((q / rk).to_double());
        p.rays.push_back({(v[0] - v[1]) * s1, (v[0] + v[1] - 2 * v[2]) * s2, label_of(i)});
    }
    p.slice_polygon = detail::convex_hull(p.rays);
    return p;
}

/// Deterministic SVG rendering. The cone region carries class "wedge" (m <= 2)
/// or "slice" (m >= 3); each boundary ray carries class "ray".
inline std::string render_svg(const PlotSpec& p) {
    const double size = 400, mid = size / 2;
    std::string out;
    out += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    out += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"400\" height=\"400\" viewBox=\"0 0 400 400\">\n";
    out += "  <rect x=\"0\" y=\"0\" width=\"400\" height=\"400\" fill=\"white\"/>\n";
    using detail::fmt;

    if (p.projection == PlotSpec::Projection::RankSlice) {
        double extent = 1e-9;
        for (const auto& q : p.rays) extent = std::max({extent, std::abs(q.horizontal), std::abs(q.vertical)});
        const double scale = (mid - 50) / extent;
        auto sx = [&](double h) { return mid + h * scale; };
        auto sy = [&](double v) { return mid - v * scale; };
        out += "  <title>rank-one slice of the Cohen-Macaulay cone, m = " + std::to_string(p.m) + "</title>\n";
        out += "  <line class=\"axis\" x1=\"20\" y1=\"" + fmt(mid) + "\" x2=\"380\" y2=\"" + fmt(mid) + "\" stroke=\"#999\"/>\n";
        out += "  <line class=\"axis\" x1=\"" + fmt(mid) + "\" y1=\"20\" x2=\"" + fmt(mid) + "\" y2=\"380\" stroke=\"#999\"/>\n";
        std::string pts;
        for (const auto& q : p.slice_polygon) pts += (pts.empty() ? "" : " ") + fmt(sx(q.horizontal)) + "," + fmt(sy(q.vertical));
        out += "  <polygon class=\"slice\" points=\"" + pts + "\" fill=\"#6fa8dc\" fill-opacity=\"0.6\" stroke=\"#1f4e79\"/>\n";
        for (const auto& q : p.rays) {
            out += "  <circle class=\"vertex\" cx=\"" + fmt(sx(q.horizontal)) + "\" cy=\"" + fmt(sy(q.vertical)) +
                   "\" r=\"3\" fill=\"#1f4e79\"/>\n";
            out += "  <text x=\"" + fmt(sx(q.horizontal) + 6) + "\" y=\"" + fmt(sy(q.vertical) - 6) +
                   "\" font-size=\"12\" font-family=\"sans-serif\">" + detail::escape(q.label) + "</text>\n";
        }
        out += "</svg>\n";
        return out;
    }

    const double oy = size - 40;
    const double scale = 150;
    auto sx = [&](double h) { return mid + h * scale; };
    auto sy = [&](double v) { return oy - v * scale; };
    out += "  <title>Cohen-Macaulay cone in (rank, q1 - q2) coordinates</title>\n";
    out += "  <line class=\"axis\" x1=\"20\" y1=\"" + fmt(oy) + "\" x2=\"380\" y2=\"" + fmt(oy) + "\" stroke=\"#999\"/>\n";
    out += "  <line class=\"axis\" x1=\"" + fmt(mid) + "\" y1=\"" + fmt(oy + 20) + "\" x2=\"" + fmt(mid) + "\" y2=\"20\" stroke=\"#999\"/>\n";
    out += "  <text x=\"" + fmt(mid + 6) + "\" y=\"30\" font-size=\"12\" font-family=\"sans-serif\">" + p.vertical_axis + "</text>\n";
    if (!p.horizontal_axis.empty())
        out += "  <text x=\"330\" y=\"" + fmt(oy + 16) + "\" font-size=\"12\" font-family=\"sans-serif\">" + p.horizontal_axis + "</text>\n";
    if (p.rays.size() == 2) {
        out += "  <path class=\"wedge\" d=\"M " + fmt(sx(0)) + " " + fmt(sy(0)) + " L " + fmt(sx(p.rays[0].horizontal)) + " " +
               fmt(sy(p.rays[0].vertical)) + " L " + fmt(sx(p.rays[1].horizontal)) + " " + fmt(sy(p.rays[1].vertical)) +
               " Z\" fill=\"#6fa8dc\" fill-opacity=\"0.6\" stroke=\"none\"/>\n";
    }
    for (const auto& q : p.rays) {
        out += "  <line class=\"ray\" x1=\"" + fmt(sx(0)) + "\" y1=\"" + fmt(sy(0)) + "\" x2=\"" + fmt(sx(q.horizontal)) + "\" y2=\"" +
               fmt(sy(q.vertical)) + "\" stroke=\"#1f4e79\" stroke-width=\"2\"/>\n";
        out += "  <text x=\"" + fmt(sx(q.horizontal) + (q.horizontal < 0 ? -40 : 6)) + "\" y=\"" + fmt(sy(q.vertical) - 6) +
               "\" font-size=\"12\" font-family=\"sans-serif\">" + detail::escape(q.label) + "</text>\n";
    }
    out += "</svg>\n";
    return out;
}

}  // namespace cmcone

#endif
