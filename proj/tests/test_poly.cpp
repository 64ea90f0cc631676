#include <random>

#include <gtest/gtest.h>

#include <cmcone/multiplicity.hpp>
#include <cmcone/parse.hpp>

#include "oracles/random_poly.hpp"
#include "oracles/truncated_colength.hpp"

using namespace cmcone;

namespace {

BivariatePoly P(const char* s) { return parse_poly(s); }

}  // namespace

TEST(Rational, ParsesAndReduces) {
    EXPECT_EQ(Rational::parse("6/4").to_string(), "3/2");
    EXPECT_EQ(Rational::parse("-2/4").to_string(), "-1/2");
    EXPECT_EQ(Rational::parse("4/2").to_string(), "2");
    EXPECT_EQ(Rational::parse(" 7 ").to_string(), "7");
    EXPECT_THROW(Rational::parse("1/0"), std::invalid_argument);
    EXPECT_THROW(Rational::parse("1/-2"), std::invalid_argument);
    EXPECT_THROW(Rational::parse("abc"), std::invalid_argument);
    EXPECT_EQ(floor(Rational::parse("-3/2")), -2);
    EXPECT_EQ(ceil(Rational::parse("-3/2")), -1);
}

TEST(ParsePoly, Examples) {
    const auto p = P("x*y - x^3");
    ASSERT_EQ(p.size(), 2u);
    EXPECT_EQ(p.coeff(1, 1), Rational(1));
    EXPECT_EQ(p.coeff(3, 0), Rational(-1));
    EXPECT_TRUE(P("0").is_zero());
    EXPECT_TRUE(P("(x+y)^2 - x^2 - y^2 - 2*x*y").is_zero());
}

TEST(ParsePoly, CanonicalPrinting) {
    EXPECT_EQ(P("x*y - x^3").to_string(), "x*y - x^3");
    EXPECT_EQ(P("-x^3 + x*y").to_string(), "x*y - x^3");
    EXPECT_EQ(P("3/6*y^2 - 2 + x").to_string(), "-2 + 1/2*y^2 + x");
    EXPECT_EQ(P("-(x - 1)").to_string(), "1 - x");
    EXPECT_EQ(parse_poly("u*v - u^2", {"u", "v"}).to_string(), "u*v - u^2");
}

TEST(ParsePoly, ErrorsCarryPosition) {
    try {
        P("x + * y");
        FAIL();
    } catch (const ParseError& e) {
        EXPECT_EQ(e.position(), 4u);
    }
    try {
        P("x + z");
        FAIL();
    } catch (const ParseError& e) {
        EXPECT_EQ(e.position(), 4u);
        EXPECT_NE(std::string(e.what()).find("unknown identifier"), std::string::npos);
    }
    try {
        P("x^-2");
        FAIL();
    } catch (const ParseError& e) {
        EXPECT_EQ(e.position(), 2u);
        EXPECT_NE(std::string(e.what()).find("negative exponent"), std::string::npos);
    }
    EXPECT_THROW(P("(x + y"), ParseError);
    EXPECT_THROW(P(""), ParseError);
    EXPECT_THROW(P("x y"), ParseError);
    EXPECT_THROW(P("x/2"), ParseError);
    EXPECT_THROW(P("1/0"), ParseError);
}

TEST(ParsePoly, PrintParseIsIdempotent) {
    std::mt19937_64 rng(11);
    for (int t = 0; t < 200; ++t) {
        const auto p = oracle::random_poly(rng, 4, 3, false);
        const auto q = P(p.to_string().c_str());
        EXPECT_EQ(p, q) << p.to_string();
        EXPECT_EQ(q.to_string(), P(q.to_string().c_str()).to_string());
    }
}

TEST(OriginOrder, Examples) {
    EXPECT_EQ(origin_order(P("x*y - x^3")), Multiplicity(2));
    EXPECT_EQ(origin_order(P("1 + x")), Multiplicity(0));
    EXPECT_TRUE(origin_order(P("0")).is_infinite());
}

TEST(Resultant, Examples) {
    const auto r1 = resultant_y(P("y - x^2"), P("y"));
    EXPECT_EQ(r1, UnivariatePoly::monomial(1, 2));  // +x^2 with g's rows first
    EXPECT_TRUE(resultant_y(P("y"), P("y")).is_zero());
    EXPECT_EQ(resultant_y(P("x"), P("y")), UnivariatePoly::monomial(1, 1));
    EXPECT_THROW(resultant_y(P("0"), P("y")), std::invalid_argument);
}

TEST(Resultant, MatchesCofactorExpansionOnSmallCases) {
    // 3x3 Sylvester matrix of g = y^2 + a y + b and h = y + c is
    // [[1, a, b], [1, c, 0], [0, 1, c]] with determinant c^2 - a c + b.
    const auto a = UnivariatePoly(std::vector<Rational>{0, 1});        // x
    const auto b = UnivariatePoly(std::vector<Rational>{0, 0, -1});    // -x^2
    const auto c = UnivariatePoly(std::vector<Rational>{1, 0, 0, 2});  // 1 + 2x^3
    const auto g = P("y^2 + x*y - x^2");
    const auto h = P("y + 1 + 2*x^3");
    EXPECT_EQ(resultant_y(g, h), c * c - a * c + b);
}

TEST(Resultant, VanishesExactlyOnCommonFactor) {
    EXPECT_TRUE(resultant_y(P("(y - x)*(y + 1)"), P("(y - x)*x")).is_zero());
    EXPECT_FALSE(resultant_y(P("y^2 - x^3"), P("y - x")).is_zero());
}

TEST(PolynomialGcd, DetectsSharedComponents) {
    EXPECT_EQ(polynomial_gcd(P("x*y"), P("x")), P("x"));
    EXPECT_EQ(polynomial_gcd(P("(y - x^2)*(1 + x)"), P("(y - x^2)*(y + 3)")), P("x^2 - y"));
    EXPECT_EQ(polynomial_gcd(P("y^2 - x^3"), P("y")), P("1"));
    EXPECT_EQ(polynomial_gcd(P("(1 + x)*y"), P("(1 + x)*x")), P("1 + x"));
}

TEST(IntersectionMultiplicity, Examples) {
    EXPECT_EQ(intersection_multiplicity(P("x"), P("y")), Multiplicity(1));
    EXPECT_EQ(intersection_multiplicity(P("x^2"), P("y^3")), Multiplicity(6));
    EXPECT_EQ(intersection_multiplicity(P("y - x^2"), P("y + x^2")), Multiplicity(2));
    EXPECT_EQ(intersection_multiplicity(P("y^2 - x^3"), P("y")), Multiplicity(3));
    EXPECT_TRUE(intersection_multiplicity(P("x*y"), P("x")).is_infinite());
}

TEST(IntersectionMultiplicity, EdgeCases) {
    EXPECT_EQ(intersection_multiplicity(P("1 + x"), P("y")), Multiplicity(0));
    EXPECT_EQ(intersection_multiplicity(P("1"), P("0")), Multiplicity(0));
    EXPECT_TRUE(intersection_multiplicity(P("0"), P("y")).is_infinite());
    EXPECT_TRUE(intersection_multiplicity(P("y - x"), P("y - x")).is_infinite());
    // a common factor that is a unit at the origin does not matter
    EXPECT_EQ(intersection_multiplicity(P("(1 + x)*y"), P("(1 + x)*x")), Multiplicity(1));
    EXPECT_TRUE(intersection_multiplicity(P("(y - x^2)*(x + y)"), P("(y - x^2)*y^5")).is_infinite());
}

TEST(IntersectionMultiplicity, AgreesWithOracleOnSmallCases) {
    const char* cases[][2] = {{"x", "y"}, {"x^2", "y^3"}, {"y - x^2", "y + x^2"}, {"y^2 - x^3", "y"}};
    for (auto& c : cases) {
        const auto o = oracle::colength(P(c[0]), P(c[1]));
        ASSERT_TRUE(o.has_value());
        EXPECT_EQ(intersection_multiplicity(P(c[0]), P(c[1])), Multiplicity(*o)) << c[0] << " , " << c[1];
    }
}

TEST(PowerLaw, Examples) {
    EXPECT_EQ(multiplicity_power_law(P("x"), P("y"), 2, 3), Multiplicity(6));
    EXPECT_EQ(multiplicity_power_law(P("y - x^2"), P("y"), 1, 2), Multiplicity(4));
    EXPECT_EQ(multiplicity_power_law(P("x"), P("y"), 1, 1), Multiplicity(1));
    EXPECT_EQ(*oracle::colength(P("y - x^2"), P("y^2")), 4u);
    EXPECT_THROW(multiplicity_power_law(P("x*y"), P("x"), 1, 1), std::domain_error);
}

TEST(IntersectionMultiplicity, FultonProperties) {
    std::mt19937_64 rng(2024);
    int finite = 0;
    for (int t = 0; t < 200; ++t) {
        const auto g = oracle::random_poly(rng, 3, 2, true);
        const auto h1 = oracle::random_poly(rng, 3, 2, true);
        const auto h2 = oracle::random_poly(rng, 2, 2, true);
        const auto q = oracle::random_poly(rng, 2, 2, false);
        const auto i1 = intersection_multiplicity(g, h1);
        EXPECT_EQ(i1, intersection_multiplicity(h1, g)) << g << " ; " << h1;
        EXPECT_EQ(i1, intersection_multiplicity(g, h1 + q * g)) << g << " ; " << h1 << " ; " << q;
        const auto i2 = intersection_multiplicity(g, h2);
        if (i1.is_finite() && i2.is_finite()) {
            ++finite;
            EXPECT_EQ(intersection_multiplicity(g, h1 * h2), i1 + i2);
            EXPECT_GE(i1.value(), origin_order(g).value() * origin_order(h1).value());
        }
    }
    EXPECT_GT(finite, 80);
}

TEST(IntersectionMultiplicity, OracleEquivalenceOnRandomGerms) {
    std::mt19937_64 rng(99);
    int checked = 0;
    for (int t = 0; t < 120; ++t) {
        const auto g = oracle::random_poly(rng, 3, 2, true);
        const auto h = oracle::random_poly(rng, 3, 2, true);
        const auto fast = intersection_multiplicity(g, h);
        if (fast.is_infinite() || fast.value() > 12) continue;
        const auto o = oracle::colength(g, h, 15);
        ASSERT_TRUE(o.has_value()) << g << " ; " << h;
        EXPECT_EQ(fast.value(), *o) << g << " ; " << h;
        ++checked;
    }
    EXPECT_GT(checked, 80);
}

TEST(Resultant, OrderAtOriginEqualsMultiplicityWhenOnlyMeetingOnAxisAtOrigin) {
    std::mt19937_64 rng(5);
    int checked = 0;
    for (int t = 0; t < 3000 && checked < 60; ++t) {
        // germs y^2 + x*r and y + x*s; only those that stay y-monic are kept
        auto g = oracle::random_poly(rng, 3, 2, true);
        auto h = oracle::random_poly(rng, 3, 2, true);
        g = g * P("x") + P("y^2");
        h = h * P("x") + P("y");
        const auto gy = g.y_coefficients();
        const auto hy = h.y_coefficients();
        if (gy.back().degree() != 0 || hy.back().degree() != 0) continue;
        const auto i = intersection_multiplicity(g, h);
        if (i.is_infinite()) continue;
        // only common zero on x = 0 must be y = 0
        const auto common = gcd(g.at_x_zero(), h.at_x_zero());
        if (common.degree() != common.order()) continue;
        const auto res = resultant_y(g, h);
        ASSERT_FALSE(res.is_zero());
        EXPECT_EQ(static_cast<std::uint64_t>(res.order()), i.value()) << g << " ; " << h;
        ++checked;
    }
    EXPECT_GE(checked, 40);
}
