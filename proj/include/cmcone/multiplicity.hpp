#ifndef CMCONE_MULTIPLICITY_HPP
#define CMCONE_MULTIPLICITY_HPP

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "poly.hpp"

namespace cmcone {

/// A nonnegative integer or INFINITE.
class Multiplicity {
public:
    constexpr Multiplicity() = default;
    constexpr Multiplicity(std::uint64_t v) : v_(v) {}
    static constexpr Multiplicity infinite() {
        Multiplicity m;
        m.v_.reset();
        return m;
    }

    constexpr bool is_finite() const { return v_.has_value(); }
    constexpr bool is_infinite() const { return !v_.has_value(); }
    std::uint64_t value() const {
        if (!v_) throw std::logic_error("infinite multiplicity has no integer value");
        return *v_;
    }

    friend constexpr Multiplicity operator+(const Multiplicity& a, const Multiplicity& b) {
        if (!a.v_ || !b.v_) return infinite();
        return Multiplicity(*a.v_ + *b.v_);
    }
    friend constexpr bool operator==(const Multiplicity&, const Multiplicity&) = default;

    std::string to_string() const { return v_ ? std::to_string(*v_) : "infinite"; }

private:
    std::optional<std::uint64_t> v_{0};
};

/// Order of vanishing at the origin: the least total degree in the support.
inline Multiplicity origin_order(const BivariatePoly& p) {
    if (p.is_zero()) return Multiplicity::infinite();
    unsigned best = ~0u;
    for (const auto& [e, c] : p.terms()) best = std::min(best, e.total());
    return best;
}

/// Sylvester resultant with respect to the second variable; g's coefficient
/// rows come first. Computed by fraction-free elimination over Q[x].
inline UnivariatePoly resultant_y(const BivariatePoly& g, const BivariatePoly& h) {
    if (g.is_zero() || h.is_zero()) throw std::invalid_argument("resultant of the zero polynomial");
    const auto gc = g.y_coefficients();
    const auto hc = h.y_coefficients();
    const std::size_t p = gc.size() - 1;
    const std::size_t q = hc.size() - 1;
    const std::size_t n = p + q;
    if (n == 0) return UnivariatePoly(Rational(1));

    std::vector<std::vector<UnivariatePoly>> M(n, std::vector<UnivariatePoly>(n));
    for (std::size_t r = 0; r < q; ++r)
        for (std::size_t k = 0; k <= p; ++k) M[r][r + k] = gc[p - k];
    for (std::size_t r = 0; r < p; ++r)
        for (std::size_t k = 0; k <= q; ++k) M[q + r][r + k] = hc[q - k];

    // Bareiss: every intermediate division is exact.
    bool negate = false;
    UnivariatePoly prev(Rational(1));
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t piv = k;
        while (piv < n && M[piv][k].is_zero()) ++piv;
        if (piv == n) return {};
        if (piv != k) {
            std::swap(M[piv], M[k]);
            negate = !negate;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j)
                M[i][j] = exact_div(M[k][k] * M[i][j] - M[i][k] * M[k][j], prev);
            M[i][k] = {};
        }
        prev = M[k][k];
    }
    return negate ? -M[n - 1][n - 1] : M[n - 1][n - 1];
}

namespace detail {

inline UnivariatePoly y_content(const std::vector<UnivariatePoly>& coeffs) {
    UnivariatePoly c;
    for (const auto& a : coeffs) c = gcd(c, a);
    return c;
}

inline std::vector<UnivariatePoly> y_primitive(std::vector<UnivariatePoly> coeffs) {
    const UnivariatePoly c = y_content(coeffs);
    if (c.is_zero()) return coeffs;
    for (auto& a : coeffs) a = exact_div(a, c);
    return coeffs;
}

inline void trim_y(std::vector<UnivariatePoly>& a) {
    while (!a.empty() && a.back().is_zero()) a.pop_back();
}

// Pseudo-remainder of a by b as polynomials in y over Q[x].
inline std::vector<UnivariatePoly> y_pseudo_remainder(std::vector<UnivariatePoly> a, const std::vector<UnivariatePoly>& b) {
    const UnivariatePoly& lb = b.back();
    while (!a.empty() && a.size() >= b.size()) {
        const std::size_t shift = a.size() - b.size();
        const UnivariatePoly la = a.back();
        for (auto& c : a) c = c * lb;
        for (std::size_t i = 0; i < b.size(); ++i) a[i + shift] -= la * b[i];
        trim_y(a);
    }
    return a;
}

}  // namespace detail

/// Greatest common divisor in Q[x, y], normalized so the lex-greatest term has coefficient 1.
inline BivariatePoly polynomial_gcd(const BivariatePoly& f, const BivariatePoly& g) {
    auto normalize = [](BivariatePoly p) {
        if (!p.is_zero()) p *= Rational(1) / p.terms().rbegin()->second;
        return p;
    };
    if (f.is_zero()) return normalize(g);
    if (g.is_zero()) return normalize(f);
    auto a = f.y_coefficients();
    auto b = g.y_coefficients();
    const UnivariatePoly content = gcd(detail::y_content(a), detail::y_content(b));
    a = detail::y_primitive(std::move(a));
    b = detail::y_primitive(std::move(b));
    if (a.size() < b.size()) std::swap(a, b);
    while (!b.empty()) {
        auto r = detail::y_pseudo_remainder(a, b);
        a = std::move(b);
        b = r.empty() ? std::move(r) : detail::y_primitive(std::move(r));
    }
    a = detail::y_primitive(std::move(a));
    for (auto& c : a) c = c * content;
    return normalize(BivariatePoly::from_y_coefficients(a, f.variables()));
}

namespace detail {

// Axiomatic reduction for two germs with finite intersection number:
//   I(yH, G) = ord_x G(x, 0) + I(H, G)
//   I(F, G) = I(F, G - c x^k F) to lower deg G(x, 0)
inline std::uint64_t fulton_reduce(BivariatePoly f, BivariatePoly g) {
    std::uint64_t total = 0;
    for (std::size_t step = 0; step < 10'000'000; ++step) {
        if (!f.constant_term().is_zero() || !g.constant_term().is_zero()) return total;
        UnivariatePoly r = f.at_y_zero();
        UnivariatePoly s = g.at_y_zero();
        if (r.is_zero() && s.is_zero()) throw std::logic_error("germs share the component y = 0");
        if (r.is_zero()) {
            std::swap(f, g);
            std::swap(r, s);
        }
        if (s.is_zero()) {
            total += static_cast<std::uint64_t>(r.order());
            g = g.divide_by_y();
            continue;
        }
        if (r.degree() > s.degree()) {
            std::swap(f, g);
            std::swap(r, s);
        }
        const Rational c = s.leading() / r.leading();
        g -= f.shifted(static_cast<unsigned>(s.degree() - r.degree()), 0) * c;
    }
    throw std::runtime_error("intersection multiplicity reduction did not terminate");
}

}  // namespace detail

/// Local intersection number dim_Q Q[[x,y]]/(g, h) at the origin.
inline Multiplicity intersection_multiplicity(const BivariatePoly& g, const BivariatePoly& h) {
    if (!g.constant_term().is_zero() || !h.constant_term().is_zero()) return 0;
    if (g.is_zero() || h.is_zero()) return Multiplicity::infinite();
    if (polynomial_gcd(g, h).constant_term().is_zero()) return Multiplicity::infinite();
    return detail::fulton_reduce(g, h);
}

/// a*b*I(g, h), cross-checked against I(g^a, h^b).
inline Multiplicity multiplicity_power_law(const BivariatePoly& g, const BivariatePoly& h, unsigned a, unsigned b) {
    if (a == 0 || b == 0) throw std::invalid_argument("exponents must be positive");
    const Multiplicity base = intersection_multiplicity(g, h);
    if (base.is_infinite()) throw std::domain_error("intersection multiplicity is infinite");
    const Multiplicity scaled = std::uint64_t{a} * b * base.value();
    const Multiplicity direct = intersection_multiplicity(pow(g, a), pow(h, b));
    if (direct != scaled)
        throw std::logic_error("power law violated: " + direct.to_string() + " != " + scaled.to_string());
    return scaled;
}

}  // namespace cmcone

#endif
