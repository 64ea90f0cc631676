#ifndef CMCONE_THETA_HPP
#define CMCONE_THETA_HPP

#include <cstdint>
#include <future>
#include <stdexcept>
#include <string>
#include <vector>

#include "branch_spec.hpp"
#include "errors.hpp"
#include "grothendieck.hpp"
#include "multiplicity.hpp"

namespace cmcone {

/// Symmetric integer matrix of theta(I_i, I_j) on R##.
struct ThetaMatrix {
    std::vector<std::vector<std::int64_t>> entries;

    std::size_t size() const { return entries.size(); }
    std::int64_t operator()(std::size_t i, std::size_t j) const { return entries[i][j]; }
    friend bool operator==(const ThetaMatrix&, const ThetaMatrix&) = default;
};

/// Structural defects of a theta matrix; empty when symmetric with zero row
/// sums, off-diagonals <= -1 and (for m >= 2) diagonal >= 1.
inline std::vector<std::string> theta_structure_defects(const ThetaMatrix& t) {
    std::vector<std::string> out;
    const std::size_t m = t.size();
    for (std::size_t i = 0; i < m; ++i) {
        if (t.entries[i].size() != m) {
            out.push_back("row " + std::to_string(i + 1) + " has wrong length");
            return out;
        }
    }
    for (std::size_t i = 0; i < m; ++i) {
        std::int64_t sum = 0;
        for (std::size_t j = 0; j < m; ++j) {
            sum += t(i, j);
            if (t(i, j) != t(j, i)) out.push_back("asymmetric at (" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")");
            if (i != j && t(i, j) > -1) out.push_back("off-diagonal (" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ") is not negative");
        }
        if (sum != 0) out.push_back("row " + std::to_string(i + 1) + " sums to " + std::to_string(sum));
        if (m >= 2 && t(i, i) < 1) out.push_back("diagonal entry " + std::to_string(i + 1) + " is not positive");
    }
    return out;
}

/// theta(I_i, I_j) = -I(f_i^a_i, f_j^a_j) off the diagonal and
/// I(f_i^a_i, prod_{j != i} f_j^a_j) on it. The diagonal is computed directly
/// and checked against the zero-row-sum identity.
inline ThetaMatrix theta_matrix(const BranchSpec& spec) {
    if (!spec.is_explicit()) throw PreconditionError("theta matrix needs explicit branch polynomials");
    const auto& branches = spec.explicit_spec().branches;
    const std::size_t m = branches.size();
    if (m == 0) throw PreconditionError("no branches");

    std::vector<BivariatePoly> powered;
    powered.reserve(m);
    for (const auto& b : branches) powered.push_back(pow(b.poly, b.mult));

    ThetaMatrix t{std::vector<std::vector<std::int64_t>>(m, std::vector<std::int64_t>(m, 0))};

    struct Pending {
        std::size_t i, j;
        std::future<Multiplicity> value;
    };
    std::vector<Pending> off;
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = i + 1; j < m; ++j)
            off.push_back({i, j, std::async(std::launch::async, [&, i, j] {
                               const auto& bi = branches[i];
                               const auto& bj = branches[j];
                               if (intersection_multiplicity(bi.poly, bj.poly).is_infinite()) return Multiplicity::infinite();
                               return multiplicity_power_law(bi.poly, bj.poly, bi.mult, bj.mult);
                           })});
    std::vector<std::future<Multiplicity>> diag;
    for (std::size_t i = 0; i < m; ++i)
        diag.push_back(std::async(std::launch::async, [&, i] {
            BivariatePoly rest(Rational(1), powered[i].variables());
            for (std::size_t j = 0; j < m; ++j)
                if (j != i) rest *= powered[j];
            return intersection_multiplicity(powered[i], rest);
        }));

    for (auto& p : off) {
        const Multiplicity v = p.value.get();
        if (v.is_infinite())
            throw ValidationError("branches " + std::to_string(p.i + 1) + " and " + std::to_string(p.j + 1) +
                                  " share a component (infinite intersection multiplicity)");
        t.entries[p.i][p.j] = t.entries[p.j][p.i] = -static_cast<std::int64_t>(v.value());
    }
    for (std::size_t i = 0; i < m; ++i) {
        const Multiplicity direct = diag[i].get();
        std::int64_t by_rows = 0;
        for (std::size_t j = 0; j < m; ++j)
            if (j != i) by_rows -= t.entries[i][j];
        if (direct.is_infinite() || static_cast<std::int64_t>(direct.value()) != by_rows)
            throw std::logic_error("theta diagonal " + std::to_string(i + 1) + ": direct colength " + direct.to_string() +
                                   " disagrees with row-sum identity " + std::to_string(by_rows));
        t.entries[i][i] = by_rows;
    }
    return t;
}

/// Bilinear extension alpha^T T beta.
inline Rational theta_pair(const ThetaMatrix& t, const GClass& alpha, const GClass& beta) {
    const std::size_t m = t.size();
    if (alpha.dim() != m || beta.dim() != m)
        throw DimensionError("theta pairing expects classes of dimension " + std::to_string(m));
    Rational acc;
    for (std::size_t i = 0; i < m; ++i) {
        if (alpha[i].is_zero()) continue;
        Rational row;
        for (std::size_t j = 0; j < m; ++j) row += Rational(static_cast<long>(t(i, j))) * beta[j];
        acc += alpha[i] * row;
    }
    return acc;
}

struct NumericalVerdict {
    enum class Kind { Trivial, RankWitness, ThetaWitness };
    Kind kind = Kind::Trivial;
    /// Index (0-based) of the [I_i] used as theta witness.
    std::size_t witness_index = 0;
    /// rank(alpha) for RankWitness, theta([I_i], alpha) < 0 for ThetaWitness.
    Rational witness_value;

    bool trivial() const { return kind == Kind::Trivial; }
};

/// Decides whether alpha is numerically trivial in G0(R##)_Q; it is iff alpha = 0.
/// Nonzero classes get a witness: the rank functional when all coordinates
/// agree, otherwise theta against [I_i] at the (first) minimal coordinate.
inline NumericalVerdict numerical_triviality_certificate(const ThetaMatrix& t, const GClass& alpha) {
    const std::size_t m = t.size();
    if (alpha.dim() != m) throw DimensionError("class has dimension " + std::to_string(alpha.dim()) + ", expected " + std::to_string(m));
    NumericalVerdict v;
    if (alpha.is_zero()) return v;

    std::size_t lowest = 0;
    bool all_equal = true;
    for (std::size_t i = 1; i < m; ++i) {
        if (alpha[i] != alpha[0]) all_equal = false;
        if (alpha[i] < alpha[lowest]) lowest = i;
    }
    if (all_equal) {
        v.kind = NumericalVerdict::Kind::RankWitness;
        v.witness_value = rank(alpha);
        return v;
    }
    v.kind = NumericalVerdict::Kind::ThetaWitness;
    v.witness_index = lowest;
    v.witness_value = theta_pair(t, GClass::basis(m, lowest), alpha);
    if (v.witness_value.sign() >= 0)
        throw std::logic_error("theta witness is not negative; matrix violates the theta structure");
    return v;
}

}  // namespace cmcone

#endif
