#ifndef CMCONE_POLY_HPP
#define CMCONE_POLY_HPP

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "rational.hpp"

namespace cmcone {

/// Dense univariate polynomial over Q, coefficients stored from degree 0 up.
/// The zero polynomial has no coefficients.
class UnivariatePoly {
public:
    UnivariatePoly() = default;
    explicit UnivariatePoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }
    UnivariatePoly(const Rational& constant) { if (!constant.is_zero()) c_.push_back(constant); }

    static UnivariatePoly monomial(const Rational& coeff, std::size_t degree) {
        std::vector<Rational> c(degree + 1);
        c[degree] = coeff;
        return UnivariatePoly(std::move(c));
    }

    bool is_zero() const { return c_.empty(); }
    /// -1 for the zero polynomial.
    long degree() const { return static_cast<long>(c_.size()) - 1; }
    /// Lowest exponent with a nonzero coefficient; -1 for the zero polynomial.
    long order() const {
        for (std::size_t i = 0; i < c_.size(); ++i)
            if (!c_[i].is_zero()) return static_cast<long>(i);
        return -1;
    }
    const Rational& leading() const { return c_.back(); }
    Rational coeff(std::size_t i) const { return i < c_.size() ? c_[i] : Rational(0); }
    const std::vector<Rational>& coefficients() const { return c_; }

    Rational operator()(const Rational& t) const {
        Rational acc;
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * t + *it;
        return acc;
    }

    UnivariatePoly& operator+=(const UnivariatePoly& o) {
        if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
        for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
        trim();
        return *this;
    }
    UnivariatePoly& operator-=(const UnivariatePoly& o) {
        if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
        for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
        trim();
        return *this;
    }
    UnivariatePoly operator-() const {
        UnivariatePoly r = *this;
        for (auto& q : r.c_) q = -q;
        return r;
    }
    friend UnivariatePoly operator+(UnivariatePoly a, const UnivariatePoly& b) { return a += b; }
    friend UnivariatePoly operator-(UnivariatePoly a, const UnivariatePoly& b) { return a -= b; }
    friend UnivariatePoly operator*(const UnivariatePoly& a, const UnivariatePoly& b) {
        if (a.is_zero() || b.is_zero()) return {};
        std::vector<Rational> c(a.c_.size() + b.c_.size() - 1);
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            if (a.c_[i].is_zero()) continue;
            for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
        }
        return UnivariatePoly(std::move(c));
    }
    friend bool operator==(const UnivariatePoly&, const UnivariatePoly&) = default;

    /// Euclidean division over Q: returns (quotient, remainder).
    friend std::pair<UnivariatePoly, UnivariatePoly> divmod(const UnivariatePoly& a, const UnivariatePoly& b) {
        if (b.is_zero()) throw std::domain_error("polynomial division by zero");
        UnivariatePoly rem = a;
        std::vector<Rational> q(a.degree() >= b.degree() ? a.degree() - b.degree() + 1 : 0);
        while (!rem.is_zero() && rem.degree() >= b.degree()) {
            const std::size_t shift = static_cast<std::size_t>(rem.degree() - b.degree());
            const Rational factor = rem.leading() / b.leading();
            q[shift] = factor;
            for (std::size_t i = 0; i < b.c_.size(); ++i) rem.c_[i + shift] -= factor * b.c_[i];
            rem.trim();
        }
        return {UnivariatePoly(std::move(q)), rem};
    }

    /// Division that must leave no remainder.
    friend UnivariatePoly exact_div(const UnivariatePoly& a, const UnivariatePoly& b) {
        auto [q, r] = divmod(a, b);
        if (!r.is_zero()) throw std::logic_error("inexact polynomial division");
        return q;
    }

    UnivariatePoly monic() const {
        if (is_zero()) return {};
        UnivariatePoly r = *this;
        const Rational lc = leading();
        for (auto& q : r.c_) q /= lc;
        return r;
    }

    /// Monic gcd; gcd(0, 0) = 0.
    friend UnivariatePoly gcd(UnivariatePoly a, UnivariatePoly b) {
        while (!b.is_zero()) {
            auto r = divmod(a, b).second;
            a = std::move(b);
            b = std::move(r);
        }
        return a.monic();
    }

    std::string to_string(const std::string& var = "x") const {
        if (is_zero()) return "0";
        std::string out;
        for (std::size_t i = 0; i < c_.size(); ++i) {
            if (c_[i].is_zero()) continue;
            std::string mono = i == 0 ? "" : (i == 1 ? var : var + "^" + std::to_string(i));
            std::string term;
            if (mono.empty()) term = c_[i].to_string();
            else if (c_[i] == Rational(1)) term = mono;
            else if (c_[i] == Rational(-1)) term = "-" + mono;
            else term = c_[i].to_string() + "*" + mono;
            if (out.empty()) out = term;
            else if (term.front() == '-') out += " - " + term.substr(1);
            else out += " + " + term;
        }
        return out;
    }

private:
    void trim() {
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }
    std::vector<Rational> c_;
};

/// Exponent pair (e_x, e_y).
struct Exponent {
    unsigned x = 0;
    unsigned y = 0;
    friend auto operator<=>(const Exponent&, const Exponent&) = default;
    unsigned total() const { return x + y; }
};

/// Sparse polynomial in two variables over Q. Terms are kept in lex order on
/// (e_x, e_y) with no zero coefficients; the zero polynomial has no terms.
class BivariatePoly {
public:
    using Terms = std::map<Exponent, Rational>;
    using Variables = std::array<std::string, 2>;

    BivariatePoly() = default;
    explicit BivariatePoly(Variables vars) : vars_(std::move(vars)) {}
    BivariatePoly(const Rational& constant, Variables vars = {"x", "y"}) : vars_(std::move(vars)) {
        if (!constant.is_zero()) terms_.emplace(Exponent{0, 0}, constant);
    }

    static BivariatePoly monomial(const Rational& coeff, unsigned ex, unsigned ey, Variables vars = {"x", "y"}) {
        BivariatePoly p(std::move(vars));
        if (!coeff.is_zero()) p.terms_.emplace(Exponent{ex, ey}, coeff);
        return p;
    }
    static BivariatePoly x(Variables vars = {"x", "y"}) { return monomial(1, 1, 0, std::move(vars)); }
    static BivariatePoly y(Variables vars = {"x", "y"}) { return monomial(1, 0, 1, std::move(vars)); }

    const Terms& terms() const { return terms_; }
    const Variables& variables() const { return vars_; }
    BivariatePoly with_variables(Variables vars) const {
        BivariatePoly p = *this;
        p.vars_ = std::move(vars);
        return p;
    }

    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }

    Rational coeff(unsigned ex, unsigned ey) const {
        auto it = terms_.find(Exponent{ex, ey});
        return it == terms_.end() ? Rational(0) : it->second;
    }
    Rational constant_term() const { return coeff(0, 0); }

    long degree_x() const {
        long d = -1;
        for (const auto& [e, c] : terms_) d = std::max<long>(d, e.x);
        return d;
    }
    long degree_y() const {
        long d = -1;
        for (const auto& [e, c] : terms_) d = std::max<long>(d, e.y);
        return d;
    }
    long total_degree() const {
        long d = -1;
        for (const auto& [e, c] : terms_) d = std::max<long>(d, e.total());
        return d;
    }

    Rational operator()(const Rational& xv, const Rational& yv) const {
        Rational acc;
        for (const auto& [e, c] : terms_) {
            Rational t = c;
            for (unsigned i = 0; i < e.x; ++i) t *= xv;
            for (unsigned i = 0; i < e.y; ++i) t *= yv;
            acc += t;
        }
        return acc;
    }

    /// p(x, 0) as a polynomial in x.
    UnivariatePoly at_y_zero() const {
        std::vector<Rational> c;
        for (const auto& [e, q] : terms_) {
            if (e.y != 0) continue;
            if (c.size() <= e.x) c.resize(e.x + 1);
            c[e.x] = q;
        }
        return UnivariatePoly(std::move(c));
    }
    /// p(0, y) as a polynomial in y.
    UnivariatePoly at_x_zero() const { return swapped().at_y_zero(); }

    /// p(y, x); variable names are swapped as well.
    BivariatePoly swapped() const {
        BivariatePoly p(Variables{vars_[1], vars_[0]});
        for (const auto& [e, q] : terms_) p.terms_.emplace(Exponent{e.y, e.x}, q);
        return p;
    }

    /// Coefficients of y^0, y^1, ... as polynomials in x.
    std::vector<UnivariatePoly> y_coefficients() const {
        std::vector<std::vector<Rational>> rows(static_cast<std::size_t>(degree_y() + 1));
        for (const auto& [e, q] : terms_) {
            auto& row = rows[e.y];
            if (row.size() <= e.x) row.resize(e.x + 1);
            row[e.x] = q;
        }
        std::vector<UnivariatePoly> out;
        out.reserve(rows.size());
        for (auto& r : rows) out.emplace_back(std::move(r));
        return out;
    }
    static BivariatePoly from_y_coefficients(const std::vector<UnivariatePoly>& coeffs, Variables vars = {"x", "y"}) {
        BivariatePoly p(std::move(vars));
        for (std::size_t j = 0; j < coeffs.size(); ++j) {
            const auto& cs = coeffs[j].coefficients();
            for (std::size_t i = 0; i < cs.size(); ++i)
                if (!cs[i].is_zero()) p.terms_.emplace(Exponent{static_cast<unsigned>(i), static_cast<unsigned>(j)}, cs[i]);
        }
        return p;
    }

    /// Exact division by y^k; throws if some term has e_y < k.
    BivariatePoly divide_by_y(unsigned k = 1) const {
        BivariatePoly p(vars_);
        for (const auto& [e, q] : terms_) {
            if (e.y < k) throw std::logic_error("polynomial not divisible by " + vars_[1]);
            p.terms_.emplace(Exponent{e.x, e.y - k}, q);
        }
        return p;
    }
    BivariatePoly divide_by_x(unsigned k = 1) const { return swapped().divide_by_y(k).swapped(); }

    BivariatePoly& operator+=(const BivariatePoly& o) {
        for (const auto& [e, q] : o.terms_) add_term(e, q);
        return *this;
    }
    BivariatePoly& operator-=(const BivariatePoly& o) {
        for (const auto& [e, q] : o.terms_) add_term(e, -q);
        return *this;
    }
    BivariatePoly operator-() const {
        BivariatePoly p = *this;
        for (auto& [e, q] : p.terms_) q = -q;
        return p;
    }
    BivariatePoly& operator*=(const Rational& s) {
        if (s.is_zero()) terms_.clear();
        else
            for (auto& [e, q] : terms_) q *= s;
        return *this;
    }
    friend BivariatePoly operator+(BivariatePoly a, const BivariatePoly& b) { return a += b; }
    friend BivariatePoly operator-(BivariatePoly a, const BivariatePoly& b) { return a -= b; }
    friend BivariatePoly operator*(BivariatePoly a, const Rational& s) { return a *= s; }
    friend BivariatePoly operator*(const Rational& s, BivariatePoly a) { return a *= s; }
    friend BivariatePoly operator*(const BivariatePoly& a, const BivariatePoly& b) {
        BivariatePoly p(a.vars_);
        for (const auto& [ea, qa] : a.terms_)
            for (const auto& [eb, qb] : b.terms_) p.add_term(Exponent{ea.x + eb.x, ea.y + eb.y}, qa * qb);
        return p;
    }
    BivariatePoly& operator*=(const BivariatePoly& o) { return *this = *this * o; }

    /// Multiplies by x^ex y^ey.
    BivariatePoly shifted(unsigned ex, unsigned ey) const {
        BivariatePoly p(vars_);
        for (const auto& [e, q] : terms_) p.terms_.emplace(Exponent{e.x + ex, e.y + ey}, q);
        return p;
    }

    friend BivariatePoly pow(const BivariatePoly& base, unsigned n) {
        BivariatePoly result(Rational(1), base.vars_);
        BivariatePoly b = base;
        while (n) {
            if (n & 1u) result *= b;
            n >>= 1;
            if (n) b *= b;
        }
        return result;
    }

    /// Equality compares terms only; variable names are presentation.
    friend bool operator==(const BivariatePoly& a, const BivariatePoly& b) { return a.terms_ == b.terms_; }

    /// Canonical text: lex order on (e_x, e_y), explicit "*" and "^".
    std::string to_string() const {
        if (is_zero()) return "0";
        std::string out;
        for (const auto& [e, c] : terms_) {
            std::string mono;
            auto append = [&](const std::string& v, unsigned k) {
                if (k == 0) return;
                if (!mono.empty()) mono += "*";
                mono += v;
                if (k > 1) mono += "^" + std::to_string(k);
            };
            append(vars_[0], e.x);
            append(vars_[1], e.y);
            std::string term;
            if (mono.empty()) term = c.to_string();
            else if (c == Rational(1)) term = mono;
            else if (c == Rational(-1)) term = "-" + mono;
            else term = c.to_string() + "*" + mono;
            if (out.empty()) out = term;
            else if (term.front() == '-') out += " - " + term.substr(1);
            else out += " + " + term;
        }
        return out;
    }

    friend std::ostream& operator<<(std::ostream& os, const BivariatePoly& p) { return os << p.to_string(); }

private:
    void add_term(const Exponent& e, const Rational& q) {
        if (q.is_zero()) return;
        auto [it, inserted] = terms_.try_emplace(e, q);
        if (!inserted) {
            it->second += q;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    Terms terms_;
    Variables vars_{"x", "y"};
};

}  // namespace cmcone

#endif
