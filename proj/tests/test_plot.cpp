#include <regex>

#include <gtest/gtest.h>

#include <cmcone/plot.hpp>

using namespace cmcone;

namespace {

std::size_t count(const std::string& s, const std::string& needle) {
    std::size_t n = 0;
    for (auto pos = s.find(needle); pos != std::string::npos; pos = s.find(needle, pos + 1)) ++n;
    return n;
}

// Minimal well-formedness check: tags balance and every attribute is quoted.
bool balanced_xml(const std::string& s) {
    std::vector<std::string> stack;
    const std::regex tag(R"(<(/?)([a-zA-Z]+)((?:\s+[a-zA-Z0-9:-]+="[^"<]*")*)\s*(/?)>)");
    std::size_t consumed = 0;
    auto body = s.substr(s.find("?>") + 2);
    for (std::sregex_iterator it(body.begin(), body.end(), tag), end; it != end; ++it) {
        const auto& m = *it;
        const auto gap = body.substr(consumed, static_cast<std::size_t>(m.position()) - consumed);
        if (gap.find('<') != std::string::npos) return false;
        consumed = static_cast<std::size_t>(m.position() + m.length());
        if (m[4] == "/") continue;
        if (m[1] == "/") {
            if (stack.empty() || stack.back() != m[2]) return false;
            stack.pop_back();
        } else {
            stack.push_back(m[2]);
        }
    }
    return stack.empty() && body.substr(consumed).find('<') == std::string::npos;
}

}  // namespace

TEST(PlotSpec, TwoBranchRaysAreSymmetric) {
    const auto p = make_plot_spec(cm_cone(2));
    EXPECT_EQ(p.projection, PlotSpec::Projection::RankDifference);
    ASSERT_EQ(p.exact_rank_difference.size(), 2u);
    EXPECT_EQ(p.exact_rank_difference[0], std::make_pair(Rational(1), Rational(1)));
    EXPECT_EQ(p.exact_rank_difference[1], std::make_pair(Rational(1), Rational(-1)));
    EXPECT_EQ(p.rays[0].label, "I_{1}");
    EXPECT_DOUBLE_EQ(p.rays[0].horizontal, -p.rays[1].horizontal);
    EXPECT_DOUBLE_EQ(p.rays[0].vertical, p.rays[1].vertical);
}

TEST(PlotSpec, RankSliceForThreeBranchesIsHexagon) {
    const auto p = make_plot_spec(cm_cone(3));
    EXPECT_EQ(p.projection, PlotSpec::Projection::RankSlice);
    EXPECT_EQ(p.rays.size(), 6u);
    EXPECT_EQ(p.slice_polygon.size(), 6u);
}

TEST(PlotSpec, RankSliceForFourBranchesIsConvex) {
    const auto p = make_plot_spec(cm_cone(4));
    EXPECT_EQ(p.rays.size(), 14u);
    ASSERT_GE(p.slice_polygon.size(), 3u);
    const auto& h = p.slice_polygon;
    for (std::size_t i = 0; i < h.size(); ++i)
        EXPECT_GT(detail::cross(h[i], h[(i + 1) % h.size()], h[(i + 2) % h.size()]), 0);
}

TEST(RenderSvg, TwoBranchHasOneWedgeAndTwoRays) {
    const auto svg = render_svg(make_plot_spec(cm_cone(2)));
    EXPECT_EQ(count(svg, "class=\"wedge\""), 1u);
    EXPECT_EQ(count(svg, "class=\"ray\""), 2u);
    EXPECT_TRUE(balanced_xml(svg));
    EXPECT_EQ(svg, render_svg(make_plot_spec(cm_cone(2))));
}

TEST(RenderSvg, TwoBranchWedgeIsMirrorSymmetric) {
    const auto svg = render_svg(make_plot_spec(cm_cone(2)));
    const std::regex ray(R"re(class="ray" x1="([-0-9.]+)" y1="([-0-9.]+)" x2="([-0-9.]+)" y2="([-0-9.]+)")re");
    std::vector<std::array<double, 4>> rays;
    for (std::sregex_iterator it(svg.begin(), svg.end(), ray), end; it != end; ++it)
        rays.push_back({std::stod((*it)[1]), std::stod((*it)[2]), std::stod((*it)[3]), std::stod((*it)[4])});
    ASSERT_EQ(rays.size(), 2u);
    const double axis = rays[0][0];
    EXPECT_DOUBLE_EQ(rays[1][0], axis);
    EXPECT_NEAR(rays[0][2] - axis, axis - rays[1][2], 1e-9);
    EXPECT_DOUBLE_EQ(rays[0][3], rays[1][3]);
}

TEST(RenderSvg, SliceIsWellFormed) {
    for (std::size_t m : {1, 3, 4, 5}) {
        const auto svg = render_svg(make_plot_spec(cm_cone(m)));
        EXPECT_TRUE(balanced_xml(svg)) << svg;
        if (m >= 3) {
            EXPECT_EQ(count(svg, "class=\"slice\""), 1u);
        }
    }
}

TEST(RenderSvg, BalancedXmlRejectsBrokenDocuments) {
    EXPECT_FALSE(balanced_xml("<?xml?><svg><g></svg>"));
    EXPECT_TRUE(balanced_xml("<?xml?><svg><g a=\"1\"/></svg>"));
}
