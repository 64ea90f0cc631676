#ifndef CMCONE_LATTICE_HPP
#define CMCONE_LATTICE_HPP

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <vector>

#include "linalg.hpp"

namespace cmcone {

/// A finitely generated subgroup of Q^m, kept as an echelon (Hermite) basis.
class Lattice {
public:
    Lattice() = default;

    static Lattice from_generators(const std::vector<RationalVector>& gens, std::size_t dim) {
        Integer den = 1;
        for (const auto& g : gens) {
            if (g.size() != dim) throw std::invalid_argument("lattice generator has wrong length");
            for (const auto& q : g) den = lcm(den, q.denominator());
        }
        std::vector<IntVector> rows;
        for (const auto& g : gens) {
            IntVector r;
            for (const auto& q : g) r.push_back(q.numerator() * (den / q.denominator()));
            rows.push_back(std::move(r));
        }

        Lattice l;
        l.dim_ = dim;
        for (std::size_t col = 0; col < dim; ++col) {
            while (true) {
                std::size_t piv = rows.size();
                std::size_t nonzero = 0;
                for (std::size_t i = 0; i < rows.size(); ++i) {
                    if (rows[i][col] == 0) continue;
                    ++nonzero;
                    if (piv == rows.size() || abs(rows[i][col]) < abs(rows[piv][col])) piv = i;
                }
                if (nonzero == 0) break;
                if (nonzero == 1) {
                    IntVector b = rows[piv];
                    if (b[col] < 0)
                        for (auto& z : b) z = -z;
                    rows.erase(rows.begin() + static_cast<long>(piv));
                    l.pivots_.push_back(col);
                    l.int_basis_.push_back(std::move(b));
                    break;
                }
                for (std::size_t i = 0; i < rows.size(); ++i) {
                    if (i == piv || rows[i][col] == 0) continue;
                    Integer q;
                    mpz_fdiv_q(q.get_mpz_t(), rows[i][col].get_mpz_t(), rows[piv][col].get_mpz_t());
                    for (std::size_t c = 0; c < dim; ++c) rows[i][c] -= q * rows[piv][c];
                }
            }
        }
        for (const auto& b : l.int_basis_) {
            RationalVector v;
            for (const auto& z : b) v.emplace_back(z, den);
            l.basis_.push_back(std::move(v));
        }
        return l;
    }

    std::size_t dim() const { return dim_; }
    std::size_t rank() const { return basis_.size(); }
    const std::vector<RationalVector>& basis() const { return basis_; }

    /// Integer coordinates of x over the basis; nullopt if x is not in the rational span.
    /// Entries are rational when x is in the span but not in the lattice.
    std::optional<RationalVector> coordinates(const RationalVector& x) const {
        const std::size_t k = rank();
        RationalMatrix m(k, RationalVector(k));
        RationalVector rhs(k);
        for (std::size_t r = 0; r < k; ++r) {
            for (std::size_t i = 0; i < k; ++i) m[r][i] = basis_[i][pivots_[r]];
            rhs[r] = x[pivots_[r]];
        }
        auto z = solve(m, rhs);
        if (!z) return std::nullopt;
        if (point(*z) != x) return std::nullopt;
        return z;
    }

    RationalVector point(const RationalVector& z) const {
        RationalVector x(dim_);
        for (std::size_t i = 0; i < basis_.size(); ++i)
            if (!z[i].is_zero())
                for (std::size_t c = 0; c < dim_; ++c) x[c] += z[i] * basis_[i][c];
        return x;
    }

    bool contains(const RationalVector& x) const {
        const auto z = coordinates(x);
        return z && std::all_of(z->begin(), z->end(), [](const Rational& q) { return q.is_integer(); });
    }

private:
    std::size_t dim_ = 0;
    std::vector<IntVector> int_basis_;
    std::vector<std::size_t> pivots_;
    std::vector<RationalVector> basis_;
};

}  // namespace cmcone

#endif
