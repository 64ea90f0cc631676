#ifndef CMCONE_DOUBLE_DESCRIPTION_HPP
#define CMCONE_DOUBLE_DESCRIPTION_HPP

#include <algorithm>
#include <bit>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "errors.hpp"
#include "linalg.hpp"

namespace cmcone {

namespace detail {

class RowSet {
public:
    explicit RowSet(std::size_t n = 0) : words_((n + 63) / 64, 0) {}
    void set(std::size_t i) { words_[i / 64] |= std::uint64_t{1} << (i % 64); }
    std::size_t count() const {
        std::size_t c = 0;
        for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
        return c;
    }
    RowSet operator&(const RowSet& o) const {
        RowSet r = *this;
        for (std::size_t i = 0; i < words_.size(); ++i) r.words_[i] &= o.words_[i];
        return r;
    }
    bool contains_all(const RowSet& o) const {
        for (std::size_t i = 0; i < words_.size(); ++i)
            if ((o.words_[i] & ~words_[i]) != 0) return false;
        return true;
    }

private:
    std::vector<std::uint64_t> words_;
};

}  // namespace detail

/// Extreme rays of the pointed cone { x : A x >= 0 } by the double description
/// method (incremental, combinatorial adjacency test). Rays come back as
/// primitive integer vectors in lexicographic order.
inline std::vector<IntVector> double_description(const std::vector<IntVector>& a, std::size_t dim) {
    for (const auto& row : a)
        if (row.size() != dim) throw DimensionError("constraint row has wrong length");
    if (dim == 0) return {};

    RationalMatrix ra;
    for (const auto& row : a) ra.push_back(to_rational(row));
    const auto basis_rows = independent_rows(ra);
    if (basis_rows.size() != dim)
        throw PreconditionError("constraint system has rank " + std::to_string(basis_rows.size()) + " < " +
                                std::to_string(dim) + "; the cone is not pointed");

    struct Ray {
        IntVector v;
        detail::RowSet zeros;
    };
    std::vector<Ray> rays;
    {
        // Columns of the inverse of the chosen square subsystem.
        RationalMatrix sub;
        for (auto r : basis_rows) sub.push_back(ra[r]);
        for (std::size_t j = 0; j < dim; ++j) {
            RationalVector e(dim);
            e[j] = 1;
            const auto col = solve(sub, e);
            if (!col) throw std::logic_error("independent rows produced a singular system");
            Ray ray{primitive_integer(*col), detail::RowSet(a.size())};
            for (std::size_t i = 0; i < dim; ++i)
                if (i != j) ray.zeros.set(basis_rows[i]);
            rays.push_back(std::move(ray));
        }
    }

    std::vector<bool> used(a.size(), false);
    for (auto r : basis_rows) used[r] = true;

    for (std::size_t row = 0; row < a.size(); ++row) {
        if (used[row]) continue;
        used[row] = true;
        std::vector<Integer> val(rays.size());
        std::vector<std::size_t> pos, neg;
        for (std::size_t i = 0; i < rays.size(); ++i) {
            val[i] = dot(a[row], rays[i].v);
            if (val[i] > 0) pos.push_back(i);
            else if (val[i] < 0) neg.push_back(i);
        }
        if (neg.empty()) {
            for (std::size_t i = 0; i < rays.size(); ++i)
                if (val[i] == 0) rays[i].zeros.set(row);
            continue;
        }

        std::vector<Ray> next;
        for (std::size_t p : pos)
            for (std::size_t q : neg) {
                detail::RowSet common = rays[p].zeros & rays[q].zeros;
                if (dim >= 2 && common.count() + 2 < dim) continue;
                bool adjacent = true;
                for (std::size_t r = 0; r < rays.size() && adjacent; ++r)
                    if (r != p && r != q && rays[r].zeros.contains_all(common)) adjacent = false;
                if (!adjacent) continue;
                IntVector v(dim);
                for (std::size_t c = 0; c < dim; ++c) v[c] = val[p] * rays[q].v[c] - val[q] * rays[p].v[c];
                common.set(row);
                next.push_back({make_primitive(std::move(v)), std::move(common)});
            }
        for (std::size_t i = 0; i < rays.size(); ++i) {
            if (val[i] < 0) continue;
            if (val[i] == 0) rays[i].zeros.set(row);
            next.push_back(std::move(rays[i]));
        }
        rays = std::move(next);
    }

    std::vector<IntVector> out;
    out.reserve(rays.size());
    for (auto& r : rays) out.push_back(std::move(r.v));
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

}  // namespace cmcone

#endif
