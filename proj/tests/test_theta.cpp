#include <random>

#include <gtest/gtest.h>

#include <cmcone/hypersurface.hpp>
#include <cmcone/theta.hpp>

#include "oracles/truncated_colength.hpp"

using namespace cmcone;

namespace {

BranchSpec explicit_spec(std::vector<std::pair<const char*, unsigned>> branches) {
    ExplicitSpec ex;
    for (auto [p, a] : branches) ex.branches.push_back({parse_poly(p), a});
    return BranchSpec{ex};
}

ThetaMatrix T(std::vector<std::vector<std::int64_t>> rows) { return ThetaMatrix{std::move(rows)}; }

GClass G(std::initializer_list<long> xs) {
    RationalVector v;
    for (long x : xs) v.emplace_back(x);
    return GClass(v);
}

GClass random_class(std::mt19937_64& rng, std::size_t m) {
    std::uniform_int_distribution<long> num(-9, 9);
    std::uniform_int_distribution<long> den(1, 7);
    GClass c = GClass::zero(m);
    for (auto& q : c.coords) q = Rational(Integer(num(rng)), Integer(den(rng)));
    return c;
}

}  // namespace

TEST(ThetaMatrix, Examples) {
    EXPECT_EQ(theta_matrix(explicit_spec({{"x", 1}, {"y", 1}})), T({{1, -1}, {-1, 1}}));
    EXPECT_EQ(theta_matrix(explicit_spec({{"x", 2}, {"y", 3}})), T({{6, -6}, {-6, 6}}));
    EXPECT_EQ(theta_matrix(explicit_spec({{"x", 1}, {"y", 1}, {"x + y", 1}})), T({{2, -1, -1}, {-1, 2, -1}, {-1, -1, 2}}));
    EXPECT_EQ(theta_matrix(explicit_spec({{"y^2 - x^3", 1}, {"y", 1}})), T({{3, -3}, {-3, 3}}));
}

TEST(ThetaMatrix, Errors) {
    EXPECT_THROW(theta_matrix(explicit_spec({{"x", 1}, {"x*y", 1}})), ValidationError);
    EXPECT_THROW(theta_matrix(BranchSpec{SymbolicSpec{{1, 1}}}), PreconditionError);
}

TEST(ThetaMatrix, EntriesMatchOracleColengths) {
    const auto spec = explicit_spec({{"y^2 - x^3", 1}, {"y - x", 2}, {"y + x^2", 1}});
    const auto t = theta_matrix(spec);
    const auto& br = spec.explicit_spec().branches;
    for (std::size_t i = 0; i < 3; ++i) {
        const auto fi = pow(br[i].poly, br[i].mult);
        BivariatePoly rest(Rational(1));
        for (std::size_t j = 0; j < 3; ++j) {
            if (j == i) continue;
            const auto fj = pow(br[j].poly, br[j].mult);
            rest = rest * fj;
            EXPECT_EQ(t(i, j), -static_cast<std::int64_t>(*oracle::colength(fi, fj)));
        }
        EXPECT_EQ(t(i, i), static_cast<std::int64_t>(*oracle::colength(fi, rest, 20)));
    }
    EXPECT_TRUE(theta_structure_defects(t).empty());
}

TEST(ThetaStructure, DetectsDefects) {
    EXPECT_TRUE(theta_structure_defects(T({{1, -1}, {-1, 1}})).empty());
    EXPECT_FALSE(theta_structure_defects(T({{1, -1}, {-2, 2}})).empty());
    EXPECT_FALSE(theta_structure_defects(T({{2, -1}, {-1, 1}})).empty());
    EXPECT_FALSE(theta_structure_defects(T({{0, 0}, {0, 0}})).empty());
}

TEST(ThetaPair, Examples) {
    const auto t = T({{1, -1}, {-1, 1}});
    EXPECT_EQ(theta_pair(t, G({1, 0}), G({1, 0})), Rational(1));
    const auto t3 = T({{2, -1, -1}, {-1, 2, -1}, {-1, -1, 2}});
    EXPECT_EQ(theta_pair(t3, G({4, -7, 2}), class_of_structure_sheaf(3)), Rational(0));
    EXPECT_EQ(theta_pair(t3, GClass::zero(3), G({4, -7, 2})), Rational(0));
    EXPECT_THROW(theta_pair(t, G({1, 0, 0}), G({1, 0})), DimensionError);
}

TEST(NumericalTriviality, Examples) {
    const auto t = T({{1, -1}, {-1, 1}});
    EXPECT_TRUE(numerical_triviality_certificate(t, GClass::zero(2)).trivial());

    const auto v = numerical_triviality_certificate(t, G({1, -1}));
    EXPECT_EQ(v.kind, NumericalVerdict::Kind::ThetaWitness);
    EXPECT_EQ(v.witness_index, 1u);
    EXPECT_EQ(v.witness_value, Rational(-2));

    const auto w = numerical_triviality_certificate(t, G({3, 3}));
    EXPECT_EQ(w.kind, NumericalVerdict::Kind::RankWitness);
    EXPECT_EQ(w.witness_value, Rational(6));
}

TEST(NumericalTriviality, TieBreaksToSmallestIndex) {
    const auto t3 = T({{2, -1, -1}, {-1, 2, -1}, {-1, -1, 2}});
    const auto v = numerical_triviality_certificate(t3, G({5, 0, 0}));
    EXPECT_EQ(v.witness_index, 1u);
    EXPECT_EQ(v.witness_value, Rational(-5));
}

TEST(ThetaProperties, SymmetricZeroRowSumsAndStructureSheafKernel) {
    const std::vector<BranchSpec> specs = {
        explicit_spec({{"x", 1}, {"y", 1}}),
        explicit_spec({{"x", 2}, {"y", 3}}),
        explicit_spec({{"x", 1}, {"y", 1}, {"x + y", 1}}),
        explicit_spec({{"y^2 - x^3", 2}, {"y - x^2", 1}, {"x", 1}, {"y + x", 3}}),
    };
    std::mt19937_64 rng(7);
    for (const auto& s : specs) {
        const auto t = theta_matrix(s);
        const std::size_t m = t.size();
        for (std::size_t i = 0; i < m; ++i) {
            std::int64_t sum = 0;
            for (std::size_t j = 0; j < m; ++j) {
                EXPECT_EQ(t(i, j), t(j, i));
                sum += t(i, j);
            }
            EXPECT_EQ(sum, 0);
        }
        for (int k = 0; k < 50; ++k) {
            const auto a = random_class(rng, m);
            const auto b = random_class(rng, m);
            EXPECT_EQ(theta_pair(t, a, class_of_structure_sheaf(m)), Rational(0));
            EXPECT_EQ(theta_pair(t, a, b), theta_pair(t, b, a));
        }
    }
}

TEST(ThetaProperties, EveryNonzeroClassHasWitness) {
    std::mt19937_64 rng(31);
    for (std::size_t m = 2; m <= 5; ++m) {
        // theta of m lines through the origin: all pairwise multiplicities 1
        std::vector<std::pair<const char*, unsigned>> lines = {{"x", 1}, {"y", 1}, {"x + y", 1}, {"x - y", 1}, {"x + 2*y", 1}};
        lines.resize(m);
        const auto t = theta_matrix(explicit_spec(lines));
        for (int k = 0; k < 1000; ++k) {
            auto a = random_class(rng, m);
            if (a.is_zero()) continue;
            const auto v = numerical_triviality_certificate(t, a);
            ASSERT_FALSE(v.trivial());
            if (v.kind == NumericalVerdict::Kind::ThetaWitness) {
                EXPECT_LT(v.witness_value.sign(), 0);
                const auto scaled = numerical_triviality_certificate(t, Rational(5, 2) * a);
                EXPECT_EQ(scaled.witness_index, v.witness_index);
                EXPECT_EQ(scaled.witness_value, Rational(5, 2) * v.witness_value);
            } else {
                EXPECT_NE(v.witness_value.sign(), 0);
            }
        }
    }
}
