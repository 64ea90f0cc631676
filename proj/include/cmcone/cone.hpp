#ifndef CMCONE_CONE_HPP
#define CMCONE_CONE_HPP

#include <algorithm>
#include <cstdint>
#include <memory>
#include <mutex>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "double_description.hpp"
#include "errors.hpp"
#include "grothendieck.hpp"
#include "lattice.hpp"
#include "linalg.hpp"
#include "lp.hpp"

namespace cmcone {

/// Largest m for which the closed-form facets of cm_cone(m) are recomputed by
/// double description rather than taken from the formula.
inline constexpr std::size_t kFacetOracleLimit = 6;

/// Rational polyhedral cone in Q^m given by ray generators. Facets and
/// extremal rays are derived lazily and computed at most once per cone value
/// (copies share the cache).
class Cone {
public:
    enum class Kind { General, CohenMacaulay, ModuleOrthant };

    Cone() : cache_(std::make_shared<Cache>()) {}

    static Cone from_generators(std::size_t m, std::vector<RationalVector> gens, std::vector<std::string> labels = {},
                                Kind kind = Kind::General) {
        for (const auto& g : gens) {
            if (g.size() != m) throw DimensionError("generator " + to_string(g) + " does not live in Q^" + std::to_string(m));
            if (is_zero(g)) throw std::invalid_argument("cone generators must be nonzero");
        }
        if (!labels.empty() && labels.size() != gens.size()) throw std::invalid_argument("one label per generator expected");
        Cone c;
        c.m_ = m;
        c.gens_ = std::move(gens);
        c.labels_ = std::move(labels);
        c.kind_ = kind;
        return c;
    }

    std::size_t dim() const { return m_; }
    Kind kind() const { return kind_; }
    const std::vector<RationalVector>& generators() const { return gens_; }
    /// Per-generator labels such as "I_{12}"; may be empty.
    const std::vector<std::string>& labels() const { return labels_; }

    std::size_t span_dimension() const { return matrix_rank(gens_); }
    bool full_dimensional() const { return span_dimension() == m_; }

    const std::vector<IntVector>& facets() const& {
        std::call_once(cache_->facets_once, [this] { cache_->facets = compute_facets(); });
        return cache_->facets;
    }
    std::vector<IntVector> facets() const&& { return static_cast<const Cone&>(*this).facets(); }
    const std::vector<IntVector>& extremal_rays() const& {
        std::call_once(cache_->rays_once, [this] { cache_->rays = compute_extremal_rays(); });
        return cache_->rays;
    }
    std::vector<IntVector> extremal_rays() const&& { return static_cast<const Cone&>(*this).extremal_rays(); }

private:
    struct Cache {
        std::once_flag facets_once;
        std::vector<IntVector> facets;
        std::once_flag rays_once;
        std::vector<IntVector> rays;
    };

    std::vector<IntVector> compute_facets() const;
    std::vector<IntVector> compute_extremal_rays() const;

    std::size_t m_ = 0;
    std::vector<RationalVector> gens_;
    std::vector<std::string> labels_;
    Kind kind_ = Kind::General;
    std::shared_ptr<Cache> cache_;
};

/// Cone spanned by [I_S] over nonempty proper S (m >= 2), or by [R##] (m = 1).
inline Cone cm_cone(std::size_t m) {
    require_branch_count(m);
    std::vector<RationalVector> gens;
    std::vector<std::string> labels;
    if (m == 1) {
        gens.push_back(class_of_structure_sheaf(1).coords);
        labels.push_back("R##");
    } else {
        const std::uint32_t full = SubsetIdeal::full(m).mask;
        for (std::uint32_t mask = 1; mask < full; ++mask) {
            gens.push_back(class_of_ideal(SubsetIdeal{mask}, m).coords);
            labels.push_back(SubsetIdeal{mask}.label(m));
        }
    }
    return Cone::from_generators(m, std::move(gens), std::move(labels), Cone::Kind::CohenMacaulay);
}

/// Coordinate orthant spanned by [R/(f_i^a_i)] in G0(R)_Q.
inline Cone cm_cone_R(std::size_t m) {
    require_branch_count(m);
    std::vector<RationalVector> gens;
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < m; ++i) {
        gens.push_back(RClass::basis(m, i).coords);
        labels.push_back("R/(f_" + std::to_string(i + 1) + ")");
    }
    return Cone::from_generators(m, std::move(gens), std::move(labels), Cone::Kind::ModuleOrthant);
}

/// Normals 1 + e_i - e_j (i != j), primitive; the facets of cm_cone(m) for m >= 2.
inline std::vector<IntVector> cm_cone_facets_closed_form(std::size_t m) {
    require_branch_count(m);
    std::vector<IntVector> out;
    if (m == 1) return {IntVector{1}};
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j) {
            if (i == j) continue;
            IntVector n(m, 1);
            n[i] += 1;
            n[j] -= 1;
            out.push_back(make_primitive(std::move(n)));
        }
    std::sort(out.begin(), out.end());
    return out;
}

/// Facets by double description on the generators.
inline std::vector<IntVector> facets_double_description(const Cone& c) {
    const std::size_t span = c.span_dimension();
    if (span != c.dim()) throw NotFullDimensional(span, c.dim());
    std::vector<IntVector> rows;
    for (const auto& g : c.generators()) rows.push_back(primitive_integer(g));
    return double_description(rows, c.dim());
}

inline std::vector<IntVector> Cone::compute_facets() const {
    if (kind_ == Kind::CohenMacaulay && m_ > kFacetOracleLimit) return cm_cone_facets_closed_form(m_);
    if (kind_ == Kind::ModuleOrthant) {
        std::vector<IntVector> out;
        for (std::size_t i = 0; i < m_; ++i) {
            IntVector n(m_, 0);
            n[i] = 1;
            out.push_back(std::move(n));
        }
        std::sort(out.begin(), out.end());
        return out;
    }
    return facets_double_description(*this);
}

/// Generators not expressible as nonnegative combinations of the others,
/// decided by one exact LP per distinct direction.
inline std::vector<IntVector> extremal_rays_lp(const Cone& c) {
    std::vector<IntVector> dirs;
    for (const auto& g : c.generators()) dirs.push_back(primitive_integer(g));
    std::sort(dirs.begin(), dirs.end());
    dirs.erase(std::unique(dirs.begin(), dirs.end()), dirs.end());

    std::vector<IntVector> out;
    const std::size_t m = c.dim();
    for (std::size_t i = 0; i < dirs.size(); ++i) {
        RationalMatrix a(m);
        for (std::size_t j = 0; j < dirs.size(); ++j) {
            if (j == i) continue;
            for (std::size_t r = 0; r < m; ++r) a[r].emplace_back(dirs[j][r]);
        }
        const auto res = simplex_feasibility(a, to_rational(dirs[i]), dirs.size() - 1);
        if (!res.feasible) out.push_back(dirs[i]);
    }
    return out;
}

/// Extremal rays as the double-description dual of the facets; needs a pointed,
/// full-dimensional cone.
inline std::vector<IntVector> extremal_rays_double_description(const Cone& c) {
    return double_description(c.facets(), c.dim());
}

inline std::vector<IntVector> Cone::compute_extremal_rays() const { return extremal_rays_lp(*this); }

inline const std::vector<IntVector>& extremal_rays(const Cone& c) { return c.extremal_rays(); }
inline const std::vector<IntVector>& facets(const Cone& c) { return c.facets(); }

enum class LpMethod { Auto, FourierMotzkin, Simplex };

/// Membership answer. A member comes with nonnegative coefficients over the
/// generators; a non-member with a normal n such that <n, g> >= 0 on the cone
/// and <n, alpha> < 0.
struct Membership {
    bool member = false;
    RationalVector coefficients;
    IntVector separator;
    LpMethod method = LpMethod::Auto;
};

inline Membership contains(const Cone& c, const RationalVector& alpha, LpMethod method = LpMethod::Auto) {
    const std::size_t m = c.dim();
    if (alpha.size() != m)
        throw DimensionError("class has dimension " + std::to_string(alpha.size()) + ", cone lives in Q^" + std::to_string(m));
    if (method == LpMethod::Auto) method = m <= 4 ? LpMethod::FourierMotzkin : LpMethod::Simplex;

    const auto& gens = c.generators();
    RationalMatrix a(m);
    for (std::size_t r = 0; r < m; ++r)
        for (const auto& g : gens) a[r].push_back(g[r]);

    Membership out;
    out.method = method;
    const Feasibility res = method == LpMethod::FourierMotzkin ? fourier_motzkin_feasibility(a, alpha, gens.size())
                                                               : simplex_feasibility(a, alpha, gens.size());
    if (res.feasible) {
        out.member = true;
        out.coefficients = res.point;
        return out;
    }
    if (c.full_dimensional()) {
        for (const auto& n : c.facets())
            if (dot(n, alpha).sign() < 0) {
                out.separator = n;
                return out;
            }
        throw std::logic_error("LP reports non-membership but no facet separates");
    }
    const auto farkas = res.farkas.empty() ? simplex_feasibility(a, alpha, gens.size()).farkas : res.farkas;
    out.separator = primitive_integer(farkas);
    return out;
}

inline Membership contains(const Cone& c, const GClass& alpha, LpMethod method = LpMethod::Auto) {
    return contains(c, alpha.coords, method);
}

struct ChainStep {
    SubsetIdeal subset;
    Rational coefficient;
};

/// alpha = c0 [R##] + sum coefficient_k [I_{suffix_k}] where the suffixes run
/// over the coordinates sorted ascending.
struct ChainDecomposition {
    std::size_t m = 0;
    /// order[k] is the (0-based) branch with the k-th smallest coordinate; ties by index.
    std::vector<std::size_t> order;
    Rational c0;
    std::vector<ChainStep> chain;

    GClass reconstruct() const {
        GClass sum = c0 * class_of_structure_sheaf(m);
        for (const auto& s : chain)
            if (!s.coefficient.is_zero()) sum += s.coefficient * class_of_ideal(s.subset, m);
        return sum;
    }
    bool in_cone() const { return c0.sign() >= 0; }
};

inline ChainDecomposition chain_decompose(const GClass& alpha) {
    const std::size_t m = alpha.dim();
    if (m < 2) throw PreconditionError("chain decomposition needs m >= 2");
    require_branch_count(m);
    ChainDecomposition d;
    d.m = m;
    d.order.resize(m);
    std::iota(d.order.begin(), d.order.end(), std::size_t{0});
    std::stable_sort(d.order.begin(), d.order.end(), [&](std::size_t i, std::size_t j) { return alpha[i] < alpha[j]; });
    d.c0 = rank(alpha) + alpha[d.order.front()] - alpha[d.order.back()];
    for (std::size_t k = 1; k < m; ++k) {
        SubsetIdeal suffix;
        for (std::size_t t = k; t < m; ++t) suffix.mask |= 1u << d.order[t];
        d.chain.push_back({suffix, alpha[d.order[k]] - alpha[d.order[k - 1]]});
    }
    return d;
}

inline Rational rank(const RationalVector& v) {
    Rational r;
    for (const auto& q : v) r += q;
    return r;
}

/// True iff C meets -C only in 0 and the rank functional is positive on every
/// extremal ray.
inline bool is_pointed_with_positive_rank(const Cone& c) {
    const auto& gens = c.generators();
    if (gens.empty()) return true;
    const std::size_t m = c.dim();
    RationalMatrix a(m + 1);
    for (const auto& g : gens) {
        for (std::size_t r = 0; r < m; ++r) a[r].push_back(g[r]);
        a[m].push_back(Rational(1));
    }
    RationalVector b(m + 1);
    b[m] = 1;
    if (simplex_feasibility(a, b, gens.size()).feasible) return false;
    for (const auto& ray : c.extremal_rays())
        if (rank(to_rational(ray)).sign() <= 0) return false;
    return true;
}

/// The lattice spanned by the generators of cm_cone(m) together with [R##].
inline Lattice module_lattice(std::size_t m) {
    auto gens = cm_cone(m).generators();
    gens.push_back(class_of_structure_sheaf(m).coords);
    return Lattice::from_generators(gens, m);
}

/// All points of L in C with rank r. The slice is a polytope whose vertices
/// are r * ray / rank(ray); its bounding box in lattice coordinates is scanned
/// with one coordinate solved from the rank equation.
inline std::vector<RationalVector> rank_slice_lattice_points(const Cone& c, std::uint64_t r, const Lattice& lattice) {
    if (r == 0) throw std::invalid_argument("rank must be positive");
    if (lattice.dim() != c.dim()) throw DimensionError("lattice and cone dimensions differ");
    if (!is_pointed_with_positive_rank(c))
        throw PreconditionError("rank slice is unbounded: cone is not pointed with positive rank");

    const std::size_t k = lattice.rank();
    const auto& basis = lattice.basis();
    const Rational target(static_cast<unsigned long>(r));

    std::vector<RationalVector> vertices;
    for (const auto& ray : c.extremal_rays()) {
        RationalVector v = to_rational(ray);
        const Rational scale = target / rank(v);
        for (auto& q : v) q *= scale;
        vertices.push_back(std::move(v));
    }
    if (vertices.empty() || k == 0) return {};

    std::vector<Integer> lo(k), hi(k);
    for (std::size_t v = 0; v < vertices.size(); ++v) {
        const auto z = lattice.coordinates(vertices[v]);
        if (!z) throw PreconditionError("cone is not contained in the span of the lattice");
        for (std::size_t i = 0; i < k; ++i) {
            const Integer fl = floor((*z)[i]);
            const Integer cl = ceil((*z)[i]);
            if (v == 0 || cl < lo[i]) lo[i] = cl;
            if (v == 0 || fl > hi[i]) hi[i] = fl;
        }
    }
    std::vector<Rational> basis_rank(k);
    std::size_t solved = k;
    for (std::size_t i = 0; i < k; ++i) {
        basis_rank[i] = rank(basis[i]);
        if (solved == k && !basis_rank[i].is_zero()) solved = i;
    }
    if (solved == k) return {};

    const bool use_facets = c.full_dimensional();
    auto inside = [&](const RationalVector& x) {
        if (use_facets) {
            for (const auto& n : c.facets())
                if (dot(n, x).sign() < 0) return false;
            return true;
        }
        return contains(c, x, LpMethod::Simplex).member;
    };

    std::vector<RationalVector> out;
    RationalVector z(k);
    std::vector<Integer> cur(k);
    for (std::size_t i = 0; i < k; ++i) cur[i] = lo[i];
    for (std::size_t i = 0; i < k; ++i)
        if (i != solved && lo[i] > hi[i]) return {};
    while (true) {
        Rational rest = target;
        for (std::size_t i = 0; i < k; ++i)
            if (i != solved) rest -= Rational(cur[i]) * basis_rank[i];
        const Rational zs = rest / basis_rank[solved];
        if (zs.is_integer() && zs.numerator() >= lo[solved] && zs.numerator() <= hi[solved]) {
            for (std::size_t i = 0; i < k; ++i) z[i] = i == solved ? zs : Rational(cur[i]);
            RationalVector x = lattice.point(z);
            if (inside(x)) out.push_back(std::move(x));
        }
        std::size_t i = 0;
        for (; i < k; ++i) {
            if (i == solved) continue;
            if (cur[i] < hi[i]) {
                cur[i] += 1;
                break;
            }
            cur[i] = lo[i];
        }
        if (i == k) break;
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace cmcone

#endif
