#ifndef CMCONE_HYPERSURFACE_HPP
#define CMCONE_HYPERSURFACE_HPP

#include <cctype>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "branch_spec.hpp"
#include "cone.hpp"
#include "errors.hpp"
#include "grothendieck.hpp"
#include "json_io.hpp"
#include "multiplicity.hpp"
#include "parse.hpp"
#include "theta.hpp"
#include "version.hpp"

namespace cmcone {

/// Largest m accepted by analyze(); the cone has 2^m - 2 generators.
inline constexpr std::size_t kMaxAnalyzeBranches = 8;

namespace detail {

inline bool is_identifier(const std::string& s) {
    if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
    for (char c : s)
        if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_')) return false;
    return true;
}

inline unsigned positive_int(const Json& j, const std::string& path) {
    if (!j.is_number_integer()) throw SchemaError(path, "expected a positive integer");
    const auto v = j.get<long long>();
    if (v < 1) throw SchemaError(path, "must be a positive integer, got " + std::to_string(v));
    if (v > 1'000'000) throw SchemaError(path, "value too large");
    return static_cast<unsigned>(v);
}

inline void only_keys(const Json& obj, std::initializer_list<const char*> keys, const std::string& path) {
    for (auto it = obj.begin(); it != obj.end(); ++it) {
        bool known = false;
        for (const char* k : keys) known = known || it.key() == k;
        if (!known) throw SchemaError(path + "." + it.key(), "unknown key");
    }
}

}  // namespace detail

/// Parses the input document:
///   { "variables": [x, y], "branches": [ {"poly": str, "mult": int}, ... ] }
///   { "symbolic": { "m": int, "mults": [int, ...] } }
inline BranchSpec load_spec(const std::string& document) {
    Json doc;
    try {
        doc = Json::parse(document);
    } catch (const Json::parse_error& e) {
        throw SchemaError("$", std::string("invalid JSON: ") + e.what());
    }
    if (!doc.is_object()) throw SchemaError("$", "expected an object");

    if (doc.contains("symbolic")) {
        detail::only_keys(doc, {"symbolic"}, "$");
        const auto& s = doc["symbolic"];
        if (!s.is_object()) throw SchemaError("$.symbolic", "expected an object");
        detail::only_keys(s, {"m", "mults"}, "$.symbolic");
        if (!s.contains("m")) throw SchemaError("$.symbolic.m", "missing");
        if (!s.contains("mults")) throw SchemaError("$.symbolic.mults", "missing");
        const unsigned m = detail::positive_int(s["m"], "$.symbolic.m");
        if (m > kMaxBranches) throw SchemaError("$.symbolic.m", "at most " + std::to_string(kMaxBranches) + " branches supported");
        const auto& mults = s["mults"];
        if (!mults.is_array()) throw SchemaError("$.symbolic.mults", "expected an array");
        if (mults.size() != m)
            throw SchemaError("$.symbolic.mults", "expected " + std::to_string(m) + " entries, got " + std::to_string(mults.size()));
        SymbolicSpec sym;
        for (std::size_t i = 0; i < mults.size(); ++i)
            sym.mults.push_back(detail::positive_int(mults[i], "$.symbolic.mults[" + std::to_string(i) + "]"));
        return BranchSpec{sym};
    }

    detail::only_keys(doc, {"variables", "branches"}, "$");
    if (!doc.contains("variables")) throw SchemaError("$.variables", "missing");
    if (!doc.contains("branches")) throw SchemaError("$.branches", "missing");
    const auto& vars = doc["variables"];
    if (!vars.is_array() || vars.size() != 2) throw SchemaError("$.variables", "expected an array of two names");
    ExplicitSpec ex;
    for (std::size_t i = 0; i < 2; ++i) {
        const std::string p = "$.variables[" + std::to_string(i) + "]";
        if (!vars[i].is_string() || !detail::is_identifier(vars[i].get<std::string>()))
            throw SchemaError(p, "expected an identifier");
        ex.vars[i] = vars[i].get<std::string>();
    }
    if (ex.vars[0] == ex.vars[1]) throw SchemaError("$.variables", "variable names must differ");

    const auto& branches = doc["branches"];
    if (!branches.is_array()) throw SchemaError("$.branches", "expected an array");
    if (branches.empty()) throw SchemaError("$.branches", "empty branch list");
    if (branches.size() > kMaxBranches)
        throw SchemaError("$.branches", "at most " + std::to_string(kMaxBranches) + " branches supported");
    for (std::size_t i = 0; i < branches.size(); ++i) {
        const std::string p = "$.branches[" + std::to_string(i) + "]";
        const auto& b = branches[i];
        if (!b.is_object()) throw SchemaError(p, "expected an object");
        detail::only_keys(b, {"poly", "mult"}, p);
        if (!b.contains("poly") || !b["poly"].is_string()) throw SchemaError(p + ".poly", "expected a polynomial string");
        if (!b.contains("mult")) throw SchemaError(p + ".mult", "missing");
        Branch br;
        try {
            br.poly = parse_poly(b["poly"].get<std::string>(), ex.vars);
        } catch (const ParseError& e) {
            throw SchemaError(p + ".poly", e.what());
        }
        br.mult = detail::positive_int(b["mult"], p + ".mult");
        ex.branches.push_back(std::move(br));
    }
    return BranchSpec{ex};
}

/// Canonical echo of a spec in the input schema.
inline Json to_json(const BranchSpec& spec) {
    Json j;
    if (spec.is_explicit()) {
        const auto& ex = spec.explicit_spec();
        j["variables"] = Json::array({ex.vars[0], ex.vars[1]});
        Json bs = Json::array();
        for (const auto& b : ex.branches) {
            Json e;
            e["poly"] = b.poly.with_variables(ex.vars).to_string();
            e["mult"] = b.mult;
            bs.push_back(e);
        }
        j["branches"] = bs;
    } else {
        Json s;
        s["m"] = spec.m();
        s["mults"] = spec.symbolic_spec().mults;
        j["symbolic"] = s;
    }
    return j;
}

struct Diagnostic {
    enum class Severity { Warning, Error };
    Severity severity = Severity::Error;
    std::string code;
    std::string message;
    /// 1-based branch indices involved.
    std::vector<std::size_t> branches;
};

struct Validation {
    std::vector<Diagnostic> diagnostics;

    bool ok() const {
        for (const auto& d : diagnostics)
            if (d.severity == Diagnostic::Severity::Error) return false;
        return true;
    }
    const Diagnostic* first_error() const {
        for (const auto& d : diagnostics)
            if (d.severity == Diagnostic::Severity::Error) return &d;
        return nullptr;
    }
};

/// Checks the hypotheses that can be checked: every branch lies in the maximal
/// ideal and branches are pairwise coprime as germs. Irreducibility is assumed.
inline Validation validate(const BranchSpec& spec) {
    Validation v;
    const std::size_t m = spec.m();
    if (m == 0) {
        v.diagnostics.push_back({Diagnostic::Severity::Error, "no-branches", "at least one branch is required", {}});
        return v;
    }
    if (m > kMaxBranches)
        v.diagnostics.push_back({Diagnostic::Severity::Error, "too-many-branches",
                                 "at most " + std::to_string(kMaxBranches) + " branches supported", {}});
    const auto mults = spec.mults();
    for (std::size_t i = 0; i < mults.size(); ++i)
        if (mults[i] < 1)
            v.diagnostics.push_back({Diagnostic::Severity::Error, "bad-mult",
                                     "branch " + std::to_string(i + 1) + " has multiplicity < 1", {i + 1}});
    if (!spec.is_explicit()) return v;

    const auto& ex = spec.explicit_spec();
    bool germs_ok = true;
    for (std::size_t i = 0; i < m; ++i) {
        const auto& p = ex.branches[i].poly;
        const auto ord = origin_order(p);
        if (ord.is_infinite()) {
            v.diagnostics.push_back({Diagnostic::Severity::Error, "zero-branch",
                                     "branch " + std::to_string(i + 1) + " is the zero polynomial", {i + 1}});
            germs_ok = false;
        } else if (ord.value() == 0) {
            v.diagnostics.push_back({Diagnostic::Severity::Error, "unit-germ",
                                     "branch " + std::to_string(i + 1) + " (" + p.to_string() +
                                         ") does not vanish at the origin",
                                     {i + 1}});
            germs_ok = false;
        }
    }
    if (germs_ok) {
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j = i + 1; j < m; ++j)
                if (intersection_multiplicity(ex.branches[i].poly, ex.branches[j].poly).is_infinite())
                    v.diagnostics.push_back({Diagnostic::Severity::Error, "shared-component",
                                             "branches " + std::to_string(i + 1) + " (" + ex.branches[i].poly.to_string() +
                                                 ") and " + std::to_string(j + 1) + " (" + ex.branches[j].poly.to_string() +
                                                 ") share a component: I = infinite",
                                             {i + 1, j + 1}});
    }
    v.diagnostics.push_back({Diagnostic::Severity::Warning, "irreducibility-assumed",
                             "analytic irreducibility of each branch is assumed, not checked", {}});
    return v;
}

inline Json to_json(const Validation& v) {
    Json a = Json::array();
    for (const auto& d : v.diagnostics) {
        Json j;
        j["severity"] = d.severity == Diagnostic::Severity::Error ? "error" : "warning";
        j["code"] = d.code;
        j["message"] = d.message;
        if (!d.branches.empty()) j["branches"] = d.branches;
        a.push_back(j);
    }
    return a;
}

struct CheckResult {
    bool pass = false;
    Json detail = Json::object();
};

struct AnalysisReport {
    std::size_t m = 0;
    std::size_t grothendieck_rank = 0;
    Cone cone;
    std::optional<ThetaMatrix> theta;
    std::vector<std::pair<std::string, CheckResult>> checks;
    Validation validation;
    Json provenance;

    bool all_passed() const {
        for (const auto& [name, c] : checks)
            if (!c.pass) return false;
        return true;
    }
    const CheckResult* check(const std::string& name) const {
        for (const auto& [n, c] : checks)
            if (n == name) return &c;
        return nullptr;
    }
};

namespace detail {

/// Small random rational vectors from a fixed-seed engine; the mapping from raw
/// engine output is spelled out so reports are identical across platforms.
class SpotSampler {
public:
    explicit SpotSampler(std::uint64_t seed) : eng_(seed) {}
    Rational rational(long range, unsigned long max_den) {
        const long num = static_cast<long>(eng_() % static_cast<std::uint64_t>(2 * range + 1)) - range;
        const unsigned long den = 1 + static_cast<unsigned long>(eng_() % max_den);
        return Rational(Integer(num), Integer(den));
    }
    GClass nonzero_class(std::size_t m) {
        while (true) {
            GClass c = GClass::zero(m);
            for (auto& q : c.coords) q = rational(5, 4);
            if (!c.is_zero()) return c;
        }
    }

private:
    std::mt19937_64 eng_;
};

}  // namespace detail

/// Runs the full pipeline for one ring. Deterministic for a given spec.
inline AnalysisReport analyze(const BranchSpec& spec) {
    AnalysisReport rep;
    rep.validation = validate(spec);
    if (const auto* err = rep.validation.first_error()) throw ValidationError(err->message);
    const std::size_t m = spec.m();
    if (m > kMaxAnalyzeBranches)
        throw PreconditionError("analysis supports at most " + std::to_string(kMaxAnalyzeBranches) + " branches");

    rep.m = m;
    rep.cone = cm_cone(m);
    const Cone& cone = rep.cone;

    {
        // [I_1..I_m] is a basis and m[R##] = sum [I_i].
        RationalMatrix basis;
        GClass sum = GClass::zero(m);
        for (std::size_t i = 0; i < m; ++i) {
            const GClass ii = class_of_ideal(SubsetIdeal{1u << i}, m);
            basis.push_back(ii.coords);
            sum += ii;
        }
        rep.grothendieck_rank = matrix_rank(basis);
        CheckResult c;
        const bool relation = sum == Rational(static_cast<unsigned long>(m)) * class_of_structure_sheaf(m);
        c.pass = rep.grothendieck_rank == m && relation;
        c.detail["rank"] = rep.grothendieck_rank;
        c.detail["structure_sheaf_relation"] = relation;
        rep.checks.emplace_back("grothendieck_basis", c);
    }
    {
        const auto& rays = cone.extremal_rays();
        std::vector<IntVector> gens;
        for (const auto& g : cone.generators()) gens.push_back(primitive_integer(g));
        std::sort(gens.begin(), gens.end());
        const std::size_t expected = m == 1 ? 1 : (std::size_t{1} << m) - 2;
        CheckResult c;
        c.pass = rays.size() == expected && rays == gens;
        c.detail["extremal_rays"] = rays.size();
        c.detail["expected"] = expected;
        c.detail["all_generators_extremal"] = rays == gens;
        rep.checks.emplace_back("minimal_generation", c);
    }
    {
        const auto& f = cone.facets();
        CheckResult c;
        const auto dd_rays = extremal_rays_double_description(cone);
        c.pass = dd_rays == cone.extremal_rays();
        c.detail["facets"] = f.size();
        c.detail["facet_source"] = m > kFacetOracleLimit ? "closed form" : "double description";
        c.detail["closed_form_matches"] = f == cm_cone_facets_closed_form(m);
        c.pass = c.pass && f == cm_cone_facets_closed_form(m);
        rep.checks.emplace_back("double_description_round_trip", c);
    }
    {
        CheckResult c;
        c.pass = is_pointed_with_positive_rank(cone);
        rep.checks.emplace_back("pointed_positive_rank", c);
    }
    {
        CheckResult c;
        const auto pts = rank_slice_lattice_points(cone, 1, module_lattice(m));
        c.pass = !pts.empty();
        for (const auto& p : pts) c.pass = c.pass && rank(p) == Rational(1) && contains(cone, p).member;
        c.detail["rank"] = 1;
        c.detail["lattice_points"] = pts.size();
        rep.checks.emplace_back("rank_slice_finite", c);
    }
    if (m >= 2) {
        CheckResult c;
        detail::SpotSampler rng(0x5eed0001u + m);
        std::size_t agree = 0, members = 0;
        const std::size_t trials = 32;
        for (std::size_t t = 0; t < trials; ++t) {
            const GClass a = rng.nonzero_class(m);
            const auto mem = contains(cone, a);
            const auto d = chain_decompose(a);
            if (mem.member == d.in_cone() && d.reconstruct() == a) ++agree;
            members += mem.member;
        }
        c.pass = agree == trials;
        c.detail["trials"] = trials;
        c.detail["members"] = members;
        rep.checks.emplace_back("chain_membership", c);
    }

    if (spec.is_explicit()) {
        rep.theta = theta_matrix(spec);
        {
            CheckResult c;
            const auto defects = theta_structure_defects(*rep.theta);
            c.pass = defects.empty();
            c.detail["defects"] = defects;
            rep.checks.emplace_back("theta_structure", c);
        }
        {
            CheckResult c;
            detail::SpotSampler rng(0x7e7a0001u + m);
            const std::size_t trials = 64;
            std::size_t nontrivial = 0;
            for (std::size_t t = 0; t < trials; ++t) {
                const GClass a = rng.nonzero_class(m);
                const auto v = numerical_triviality_certificate(*rep.theta, a);
                const bool valid = v.kind == NumericalVerdict::Kind::RankWitness ? !v.witness_value.is_zero()
                                   : v.kind == NumericalVerdict::Kind::ThetaWitness ? v.witness_value.sign() < 0
                                                                                    : false;
                nontrivial += valid;
            }
            const bool zero_trivial = numerical_triviality_certificate(*rep.theta, GClass::zero(m)).trivial();
            c.pass = nontrivial == trials && zero_trivial;
            c.detail["trials"] = trials;
            c.detail["nontrivial_with_witness"] = nontrivial;
            c.detail["zero_is_trivial"] = zero_trivial;
            rep.checks.emplace_back("numerical_triviality_kernel", c);
        }
    }

    rep.provenance["input"] = to_json(spec);
    rep.provenance["library"] = std::string("cmcone ") + kVersion;
    rep.provenance["coefficient_field"] = "Q";
    Json assumed = Json::array();
    if (spec.is_explicit()) {
        assumed.push_back("each branch is analytically irreducible");
        assumed.push_back("a resolution of singularities of R## exists that is an isomorphism off the closed point");
    }
    rep.provenance["assumed_hypotheses"] = assumed;
    return rep;
}

inline Json to_json(const AnalysisReport& r) {
    Json j;
    j["m"] = r.m;
    j["mode"] = r.theta ? "explicit" : "symbolic";
    j["grothendieck_rank"] = r.grothendieck_rank;
    Json basis = Json::array();
    for (std::size_t i = 0; i < r.m; ++i) basis.push_back(SubsetIdeal{1u << i}.label(r.m));
    j["basis"] = basis;
    j["structure_sheaf_class"] = to_json(class_of_structure_sheaf(r.m));
    j["cone"] = to_json(r.cone);
    j["theta"] = r.theta ? to_json(*r.theta) : Json(nullptr);
    Json checks;
    for (const auto& [name, c] : r.checks) {
        Json e;
        e["pass"] = c.pass;
        for (auto it = c.detail.begin(); it != c.detail.end(); ++it) e[it.key()] = it.value();
        checks[name] = e;
    }
    j["checks"] = checks;
    j["all_checks_pass"] = r.all_passed();
    j["diagnostics"] = to_json(r.validation);
    j["provenance"] = r.provenance;
    return j;
}

}  // namespace cmcone

#endif
