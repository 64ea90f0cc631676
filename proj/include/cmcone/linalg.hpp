#ifndef CMCONE_LINALG_HPP
#define CMCONE_LINALG_HPP

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <vector>

#include "rational.hpp"

namespace cmcone {

using IntVector = std::vector<Integer>;
using RationalMatrix = std::vector<RationalVector>;

inline Rational dot(const RationalVector& a, const RationalVector& b) {
    Rational s;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (!a[i].is_zero() && !b[i].is_zero()) s += a[i] * b[i];
    return s;
}

inline Rational dot(const IntVector& a, const RationalVector& b) {
    Rational s;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] != 0 && !b[i].is_zero()) s += Rational(a[i]) * b[i];
    return s;
}

inline Integer dot(const IntVector& a, const IntVector& b) {
    Integer s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

inline bool is_zero(const RationalVector& v) {
    return std::all_of(v.begin(), v.end(), [](const Rational& q) { return q.is_zero(); });
}

inline RationalVector to_rational(const IntVector& v) {
    RationalVector out;
    out.reserve(v.size());
    for (const auto& z : v) out.emplace_back(z);
    return out;
}

/// Divides out the gcd; direction (and sign) is preserved.
inline IntVector make_primitive(IntVector v) {
    Integer g = 0;
    for (const auto& z : v) g = gcd(g, z);
    if (g > 1)
        for (auto& z : v) z /= g;
    return v;
}

/// Smallest positive integer multiple of v with coprime entries.
inline IntVector primitive_integer(const RationalVector& v) {
    Integer l = 1;
    for (const auto& q : v) l = lcm(l, q.denominator());
    IntVector out;
    out.reserve(v.size());
    for (const auto& q : v) out.push_back(q.numerator() * (l / q.denominator()));
    return make_primitive(std::move(out));
}

/// Reduced row echelon form in place; returns pivot columns.
inline std::vector<std::size_t> rref(RationalMatrix& a, std::size_t ncols) {
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < ncols && row < a.size(); ++col) {
        std::size_t p = row;
        while (p < a.size() && a[p][col].is_zero()) ++p;
        if (p == a.size()) continue;
        std::swap(a[p], a[row]);
        const Rational inv = Rational(1) / a[row][col];
        for (auto& q : a[row]) q *= inv;
        for (std::size_t i = 0; i < a.size(); ++i) {
            if (i == row || a[i][col].is_zero()) continue;
            const Rational f = a[i][col];
            for (std::size_t j = col; j < a[i].size(); ++j)
                if (!a[row][j].is_zero()) a[i][j] -= f * a[row][j];
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

inline std::size_t matrix_rank(RationalMatrix rows) {
    if (rows.empty()) return 0;
    const std::size_t n = rows.front().size();
    return rref(rows, n).size();
}

/// Solves the square system M x = b; nullopt when M is singular.
inline std::optional<RationalVector> solve(RationalMatrix m, const RationalVector& b) {
    const std::size_t n = m.size();
    for (std::size_t i = 0; i < n; ++i) m[i].push_back(b[i]);
    const auto piv = rref(m, n);
    if (piv.size() != n) return std::nullopt;
    RationalVector x(n);
    for (std::size_t i = 0; i < n; ++i) x[i] = m[i][n];
    return x;
}

/// Row indices of a maximal linearly independent subset, chosen greedily in order.
inline std::vector<std::size_t> independent_rows(const RationalMatrix& rows) {
    std::vector<std::size_t> chosen;
    RationalMatrix basis;
    for (std::size_t i = 0; i < rows.size(); ++i) {
        basis.push_back(rows[i]);
        if (matrix_rank(basis) == basis.size()) chosen.push_back(i);
        else basis.pop_back();
    }
    return chosen;
}

}  // namespace cmcone

#endif
