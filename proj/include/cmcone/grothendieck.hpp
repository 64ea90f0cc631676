#ifndef CMCONE_GROTHENDIECK_HPP
#define CMCONE_GROTHENDIECK_HPP

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "errors.hpp"
#include "rational.hpp"

namespace cmcone {

// Coordinates over Q^m. GClass lives in G0(R##)_Q with basis [I_1..I_m];
// RClass in G0(R)_Q with basis [R/(f_1^a_1)..R/(f_m^a_m)].
template <class Tag>
struct ClassVector {
    RationalVector coords;

    ClassVector() = default;
    explicit ClassVector(RationalVector c) : coords(std::move(c)) {}
    static ClassVector zero(std::size_t m) { return ClassVector(RationalVector(m)); }
    static ClassVector basis(std::size_t m, std::size_t i) {
        ClassVector v = zero(m);
        v.coords.at(i) = 1;
        return v;
    }

    std::size_t dim() const { return coords.size(); }
    bool is_zero() const {
        for (const auto& q : coords)
            if (!q.is_zero()) return false;
        return true;
    }
    const Rational& operator[](std::size_t i) const { return coords[i]; }
    Rational& operator[](std::size_t i) { return coords[i]; }

    ClassVector& operator+=(const ClassVector& o) {
        check(o);
        for (std::size_t i = 0; i < coords.size(); ++i) coords[i] += o.coords[i];
        return *this;
    }
    ClassVector& operator-=(const ClassVector& o) {
        check(o);
        for (std::size_t i = 0; i < coords.size(); ++i) coords[i] -= o.coords[i];
        return *this;
    }
    ClassVector& operator*=(const Rational& s) {
        for (auto& q : coords) q *= s;
        return *this;
    }
    friend ClassVector operator+(ClassVector a, const ClassVector& b) { return a += b; }
    friend ClassVector operator-(ClassVector a, const ClassVector& b) { return a -= b; }
    friend ClassVector operator*(const Rational& s, ClassVector a) { return a *= s; }
    friend ClassVector operator*(ClassVector a, const Rational& s) { return a *= s; }
    friend bool operator==(const ClassVector&, const ClassVector&) = default;

    std::string to_string() const { return cmcone::to_string(coords); }

private:
    void check(const ClassVector& o) const {
        if (o.coords.size() != coords.size())
            throw DimensionError("class dimensions differ: " + std::to_string(coords.size()) + " vs " +
                                 std::to_string(o.coords.size()));
    }
};

struct GClassTag {};
struct RClassTag {};
using GClass = ClassVector<GClassTag>;
using RClass = ClassVector<RClassTag>;

inline constexpr std::size_t kMaxBranches = 20;

/// Nonempty subset of {1..m} as a bitmask; bit i-1 stands for branch i.
struct SubsetIdeal {
    std::uint32_t mask = 0;

    static SubsetIdeal of(std::initializer_list<std::size_t> one_based) {
        SubsetIdeal s;
        for (auto i : one_based) {
            if (i == 0 || i > kMaxBranches) throw std::out_of_range("branch index out of range");
            s.mask |= 1u << (i - 1);
        }
        return s;
    }
    static SubsetIdeal full(std::size_t m) { return SubsetIdeal{static_cast<std::uint32_t>((1u << m) - 1)}; }

    std::size_t size() const { return static_cast<std::size_t>(std::popcount(mask)); }
    bool contains(std::size_t zero_based) const { return (mask >> zero_based) & 1u; }
    bool is_proper(std::size_t m) const { return mask != 0 && mask != full(m).mask; }

    /// "I_{12}" style label with 1-based indices, comma separated when m > 9.
    std::string label(std::size_t m) const {
        std::string s = "I_{";
        bool first = true;
        for (std::size_t i = 0; i < m; ++i) {
            if (!contains(i)) continue;
            if (!first && m > 9) s += ",";
            s += std::to_string(i + 1);
            first = false;
        }
        return s + "}";
    }
    friend bool operator==(const SubsetIdeal&, const SubsetIdeal&) = default;
};

inline void require_branch_count(std::size_t m) {
    if (m == 0) throw std::invalid_argument("number of branches must be at least 1");
    if (m > kMaxBranches) throw std::invalid_argument("at most " + std::to_string(kMaxBranches) + " branches supported");
}

/// [R##] = (1/m, ..., 1/m), from m[R##] = sum [I_i].
inline GClass class_of_structure_sheaf(std::size_t m) {
    require_branch_count(m);
    return GClass(RationalVector(m, Rational(Integer(1), Integer(static_cast<unsigned long>(m)))));
}

/// [I_S] = sum_{i in S} e_i - ((|S| - 1)/m) * (1, ..., 1).
inline GClass class_of_ideal(SubsetIdeal s, std::size_t m) {
    require_branch_count(m);
    if (s.mask == 0) throw std::invalid_argument("subset ideal needs a nonempty subset");
    if (s.mask >> m) throw std::out_of_range("subset refers to a branch beyond m");
    const Rational shift(Integer(static_cast<unsigned long>(s.size() - 1)), Integer(static_cast<unsigned long>(m)));
    GClass c(RationalVector(m, -shift));
    for (std::size_t i = 0; i < m; ++i)
        if (s.contains(i)) c[i] += 1;
    return c;
}

/// Rank functional; each [I_i] has rank 1.
inline Rational rank(const GClass& c) {
    Rational r;
    for (const auto& q : c.coords) r += q;
    return r;
}

/// Projection onto the rank-zero summand: c - rank(c) [R##].
inline GClass rank_zero_part(const GClass& c) {
    if (c.dim() == 0) return c;
    return c - rank(c) * class_of_structure_sheaf(c.dim());
}

/// Representative of the Knorrer image, sending [R/(f_i^a_i)] to [I_i].
/// Only meaningful modulo Z[R##].
inline GClass knorrer_image(const RClass& y) { return GClass(y.coords); }

/// [R/(f_i)] = (1/a_i) [R/(f_i^a_i)] in the basis used by RClass.
inline RClass class_of_reduced_branch(std::size_t i, const std::vector<unsigned>& mults) {
    RClass v = RClass::zero(mults.size());
    v.coords.at(i) = Rational(Integer(1), Integer(static_cast<unsigned long>(mults.at(i))));
    return v;
}

}  // namespace cmcone

#endif
