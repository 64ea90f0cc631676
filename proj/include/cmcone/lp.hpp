#ifndef CMCONE_LP_HPP
#define CMCONE_LP_HPP

#include <algorithm>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <vector>

#include "linalg.hpp"

namespace cmcone {

/// Outcome of deciding whether { lambda >= 0 : A lambda = b } is nonempty.
struct Feasibility {
    bool feasible = false;
    /// A nonnegative solution when feasible.
    RationalVector point;
    /// When infeasible and available: w with w^T A >= 0 and w^T b < 0.
    RationalVector farkas;
};

namespace detail {

inline void check_system(const RationalMatrix& a, const RationalVector& b, std::size_t n) {
    if (a.size() != b.size()) throw std::invalid_argument("row count of A and length of b differ");
    for (const auto& row : a)
        if (row.size() != n) throw std::invalid_argument("ragged constraint matrix");
}

inline bool verify_point(const RationalMatrix& a, const RationalVector& b, const RationalVector& x) {
    for (const auto& q : x)
        if (q.sign() < 0) return false;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (dot(a[i], x) != b[i]) return false;
    return true;
}

}  // namespace detail

/// Phase-one simplex on the dense tableau with Bland's rule; exact arithmetic.
/// `n` is the number of unknowns (needed when A has no rows).
inline Feasibility simplex_feasibility(const RationalMatrix& a, const RationalVector& b, std::size_t n) {
    detail::check_system(a, b, n);
    const std::size_t rows = a.size();
    const std::size_t cols = n + rows;  // unknowns, then one artificial per row

    std::vector<int> flip(rows, 1);
    RationalMatrix t(rows, RationalVector(cols + 1));
    for (std::size_t i = 0; i < rows; ++i) {
        if (b[i].sign() < 0) flip[i] = -1;
        for (std::size_t j = 0; j < n; ++j) t[i][j] = flip[i] < 0 ? -a[i][j] : a[i][j];
        t[i][n + i] = 1;
        t[i][cols] = flip[i] < 0 ? -b[i] : b[i];
    }
    std::vector<std::size_t> basis(rows);
    for (std::size_t i = 0; i < rows; ++i) basis[i] = n + i;

    // Reduced costs for min sum(artificials); last entry holds -objective.
    RationalVector cost(cols + 1);
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t i = 0; i < rows; ++i) cost[j] -= t[i][j];
    for (std::size_t i = 0; i < rows; ++i) cost[cols] -= t[i][cols];

    while (true) {
        std::size_t enter = cols;
        for (std::size_t j = 0; j < cols; ++j)
            if (cost[j].sign() < 0) {
                enter = j;
                break;
            }
        if (enter == cols) break;
        std::size_t leave = rows;
        Rational best;
        for (std::size_t i = 0; i < rows; ++i) {
            if (t[i][enter].sign() <= 0) continue;
            const Rational ratio = t[i][cols] / t[i][enter];
            if (leave == rows || ratio < best || (ratio == best && basis[i] < basis[leave])) {
                leave = i;
                best = ratio;
            }
        }
        if (leave == rows) throw std::logic_error("phase-one objective unbounded");
        const Rational inv = Rational(1) / t[leave][enter];
        for (auto& q : t[leave]) q *= inv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == leave || t[i][enter].is_zero()) continue;
            const Rational f = t[i][enter];
            for (std::size_t j = 0; j <= cols; ++j)
                if (!t[leave][j].is_zero()) t[i][j] -= f * t[leave][j];
        }
        if (!cost[enter].is_zero()) {
            const Rational f = cost[enter];
            for (std::size_t j = 0; j <= cols; ++j)
                if (!t[leave][j].is_zero()) cost[j] -= f * t[leave][j];
        }
        basis[leave] = enter;
    }

    Feasibility out;
    if (cost[cols].is_zero()) {
        out.feasible = true;
        out.point.assign(n, Rational(0));
        for (std::size_t i = 0; i < rows; ++i)
            if (basis[i] < n) out.point[basis[i]] = t[i][cols];
        if (!detail::verify_point(a, b, out.point)) throw std::logic_error("simplex produced an invalid point");
        return out;
    }
    // Dual of phase one: y_i = 1 - reduced cost of artificial i; w = -y in original row signs.
    out.farkas.resize(rows);
    for (std::size_t i = 0; i < rows; ++i) {
        const Rational y = Rational(1) - cost[n + i];
        out.farkas[i] = flip[i] < 0 ? y : -y;
    }
    Rational wb;
    for (std::size_t i = 0; i < rows; ++i) wb += out.farkas[i] * b[i];
    bool ok = wb.sign() < 0;
    for (std::size_t j = 0; j < n && ok; ++j) {
        Rational s;
        for (std::size_t i = 0; i < rows; ++i) s += out.farkas[i] * a[i][j];
        ok = s.sign() >= 0;
    }
    if (!ok) throw std::logic_error("simplex produced an invalid Farkas certificate");
    return out;
}

/// Fourier-Motzkin elimination after solving out the equalities; the solution
/// is recovered by back substitution. Chernikov's history rule prunes
/// redundant combinations. Produces no Farkas vector.
inline Feasibility fourier_motzkin_feasibility(const RationalMatrix& a, const RationalVector& b, std::size_t n) {
    detail::check_system(a, b, n);
    Feasibility out;

    RationalMatrix aug = a;
    for (std::size_t i = 0; i < aug.size(); ++i) aug[i].push_back(b[i]);
    const auto pivots = rref(aug, n);
    for (std::size_t i = pivots.size(); i < aug.size(); ++i)
        if (!aug[i][n].is_zero()) return out;  // inconsistent equalities

    std::vector<bool> is_pivot(n, false);
    for (auto p : pivots) is_pivot[p] = true;
    std::vector<std::size_t> free_vars;
    for (std::size_t j = 0; j < n; ++j)
        if (!is_pivot[j]) free_vars.push_back(j);
    const std::size_t k = free_vars.size();

    // Constraint: sum coef[v] x_v + constant >= 0 over free variables x.
    struct Ineq {
        RationalVector coef;
        Rational constant;
        std::vector<std::uint32_t> history;  // sorted ids of source inequalities
    };
    std::vector<Ineq> system;
    std::uint32_t id = 0;
    for (std::size_t v = 0; v < k; ++v) {
        Ineq q{RationalVector(k), Rational(0), {id++}};
        q.coef[v] = 1;
        system.push_back(std::move(q));
    }
    for (std::size_t r = 0; r < pivots.size(); ++r) {
        Ineq q{RationalVector(k), aug[r][n], {id++}};
        for (std::size_t v = 0; v < k; ++v) q.coef[v] = -aug[r][free_vars[v]];
        system.push_back(std::move(q));
    }

    auto normalize = [](Ineq& q) {
        Rational scale;
        for (const auto& c : q.coef)
            if (!c.is_zero()) {
                scale = abs(c);
                break;
            }
        if (scale.is_zero()) return;
        const Rational inv = Rational(1) / scale;
        for (auto& c : q.coef) c *= inv;
        q.constant *= inv;
    };

    struct Stage {
        std::size_t var;
        std::vector<Ineq> bounds;
    };
    std::vector<Stage> stages;
    std::vector<bool> eliminated(k, false);

    for (std::size_t step = 0; step < k; ++step) {
        // Pick the variable producing the fewest new inequalities.
        std::size_t var = k;
        long best = 0;
        for (std::size_t v = 0; v < k; ++v) {
            if (eliminated[v]) continue;
            long pos = 0, neg = 0;
            for (const auto& q : system) {
                if (q.coef[v].sign() > 0) ++pos;
                else if (q.coef[v].sign() < 0) ++neg;
            }
            const long score = pos * neg - pos - neg;
            if (var == k || score < best) {
                var = v;
                best = score;
            }
        }
        eliminated[var] = true;

        Stage stage{var, {}};
        std::vector<Ineq> pos, neg, next;
        for (auto& q : system) {
            const int s = q.coef[var].sign();
            if (s > 0) pos.push_back(q);
            else if (s < 0) neg.push_back(q);
            else next.push_back(std::move(q));
        }
        const std::size_t limit = step + 2;
        std::map<std::pair<RationalVector, Rational>, std::size_t> seen;
        for (std::size_t i = 0; i < next.size(); ++i) seen.emplace(std::make_pair(next[i].coef, next[i].constant), i);
        for (const auto& p : pos) {
            for (const auto& q : neg) {
                std::vector<std::uint32_t> hist;
                std::set_union(p.history.begin(), p.history.end(), q.history.begin(), q.history.end(), std::back_inserter(hist));
                if (hist.size() > limit) continue;
                const Rational fp = -q.coef[var];
                const Rational fq = p.coef[var];
                Ineq c{RationalVector(k), fp * p.constant + fq * q.constant, std::move(hist)};
                bool all_zero = true;
                for (std::size_t v = 0; v < k; ++v) {
                    if (v == var) continue;
                    c.coef[v] = fp * p.coef[v] + fq * q.coef[v];
                    if (!c.coef[v].is_zero()) all_zero = false;
                }
                if (all_zero) {
                    if (c.constant.sign() < 0) return out;
                    continue;
                }
                normalize(c);
                auto key = std::make_pair(c.coef, c.constant);
                if (seen.count(key)) continue;
                seen.emplace(std::move(key), next.size());
                next.push_back(std::move(c));
            }
        }
        for (auto& q : pos) stage.bounds.push_back(std::move(q));
        for (auto& q : neg) stage.bounds.push_back(std::move(q));
        stages.push_back(std::move(stage));
        system = std::move(next);
    }
    for (const auto& q : system)
        if (q.constant.sign() < 0) return out;

    RationalVector x(k);
    for (auto it = stages.rbegin(); it != stages.rend(); ++it) {
        const std::size_t v = it->var;
        bool have_lower = false, have_upper = false;
        Rational lower, upper;
        for (const auto& q : it->bounds) {
            Rational rest = q.constant;
            for (std::size_t u = 0; u < k; ++u)
                if (u != v && !q.coef[u].is_zero()) rest += q.coef[u] * x[u];
            const Rational bound = -rest / q.coef[v];
            if (q.coef[v].sign() > 0) {
                if (!have_lower || bound > lower) lower = bound;
                have_lower = true;
            } else {
                if (!have_upper || bound < upper) upper = bound;
                have_upper = true;
            }
        }
        x[v] = have_lower ? lower : (have_upper ? std::min(upper, Rational(0)) : Rational(0));
        if (have_lower && have_upper && lower > upper) throw std::logic_error("Fourier-Motzkin back substitution failed");
    }

    out.point.assign(n, Rational(0));
    for (std::size_t v = 0; v < k; ++v) out.point[free_vars[v]] = x[v];
    for (std::size_t r = 0; r < pivots.size(); ++r) {
        Rational val = aug[r][n];
        for (std::size_t v = 0; v < k; ++v) val -= aug[r][free_vars[v]] * x[v];
        out.point[pivots[r]] = val;
    }
    if (!detail::verify_point(a, b, out.point)) throw std::logic_error("Fourier-Motzkin produced an invalid point");
    out.feasible = true;
    return out;
}

}  // namespace cmcone

#endif
