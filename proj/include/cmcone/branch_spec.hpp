#ifndef CMCONE_BRANCH_SPEC_HPP
#define CMCONE_BRANCH_SPEC_HPP

#include <string>
#include <variant>
#include <vector>

#include "poly.hpp"

namespace cmcone {

struct Branch {
    BivariatePoly poly;
    unsigned mult = 1;
};

/// f = f_1^a_1 ... f_m^a_m with explicit branch polynomials in two variables.
struct ExplicitSpec {
    BivariatePoly::Variables vars{"x", "y"};
    std::vector<Branch> branches;
};

/// Only m and the exponents a_i; enough for everything that does not need theta.
struct SymbolicSpec {
    std::vector<unsigned> mults;
};

struct BranchSpec {
    std::variant<ExplicitSpec, SymbolicSpec> mode;

    bool is_explicit() const { return std::holds_alternative<ExplicitSpec>(mode); }
    const ExplicitSpec& explicit_spec() const { return std::get<ExplicitSpec>(mode); }
    const SymbolicSpec& symbolic_spec() const { return std::get<SymbolicSpec>(mode); }

    std::size_t m() const {
        return is_explicit() ? explicit_spec().branches.size() : symbolic_spec().mults.size();
    }
    std::vector<unsigned> mults() const {
        if (!is_explicit()) return symbolic_spec().mults;
        std::vector<unsigned> out;
        for (const auto& b : explicit_spec().branches) out.push_back(b.mult);
        return out;
    }
};

}  // namespace cmcone

#endif
