#ifndef CMCONE_JSON_IO_HPP
#define CMCONE_JSON_IO_HPP

#include <string>
#include <vector>

#include <json.hpp>

#include "cone.hpp"
#include "errors.hpp"
#include "grothendieck.hpp"
#include "multiplicity.hpp"
#include "theta.hpp"

namespace cmcone {

using Json = nlohmann::ordered_json;

inline Json to_json(const Rational& q) { return q.to_string(); }

inline Json to_json(const Integer& z) {
    if (z.fits_slong_p()) return z.get_si();
    return z.get_str();
}

inline Json to_json(const RationalVector& v) {
    Json a = Json::array();
    for (const auto& q : v) a.push_back(to_json(q));
    return a;
}

inline Json to_json(const IntVector& v) {
    Json a = Json::array();
    for (const auto& z : v) a.push_back(to_json(z));
    return a;
}

inline Json to_json(const GClass& c) { return to_json(c.coords); }
inline Json to_json(const RClass& c) { return to_json(c.coords); }

/// Accepts an array of "p/q" strings or JSON integers.
inline RationalVector rational_vector_from_json(const Json& j, const std::string& path = "$") {
    if (!j.is_array()) throw SchemaError(path, "expected an array of rationals");
    RationalVector out;
    for (std::size_t i = 0; i < j.size(); ++i) {
        const auto& e = j[i];
        const std::string p = path + "[" + std::to_string(i) + "]";
        if (e.is_number_integer()) out.emplace_back(static_cast<long>(e.get<long long>()));
        else if (e.is_string()) {
            try {
                out.push_back(Rational::parse(e.get<std::string>()));
            } catch (const std::exception& ex) {
                throw SchemaError(p, ex.what());
            }
        } else
            throw SchemaError(p, "expected a rational as \"p/q\" string or integer");
    }
    return out;
}

inline GClass gclass_from_json(const Json& j) { return GClass(rational_vector_from_json(j)); }

inline Json to_json(const Multiplicity& m) {
    if (m.is_infinite()) return "infinite";
    return m.value();
}

inline Json to_json(const ThetaMatrix& t) {
    Json a = Json::array();
    for (const auto& row : t.entries) a.push_back(row);
    return a;
}

inline ThetaMatrix theta_from_json(const Json& j) {
    if (!j.is_array()) throw SchemaError("$", "theta matrix must be an array of arrays");
    ThetaMatrix t;
    for (std::size_t i = 0; i < j.size(); ++i) {
        if (!j[i].is_array()) throw SchemaError("$[" + std::to_string(i) + "]", "expected an array of integers");
        std::vector<std::int64_t> row;
        for (std::size_t k = 0; k < j[i].size(); ++k) {
            if (!j[i][k].is_number_integer())
                throw SchemaError("$[" + std::to_string(i) + "][" + std::to_string(k) + "]", "expected an integer");
            row.push_back(j[i][k].get<std::int64_t>());
        }
        t.entries.push_back(std::move(row));
    }
    return t;
}

/// {m, generators, facets, extremal}; facets are omitted (null) for cones
/// that are not full-dimensional.
inline Json to_json(const Cone& c) {
    Json j;
    j["m"] = c.dim();
    Json gens = Json::array();
    for (const auto& g : c.generators()) gens.push_back(to_json(g));
    j["generators"] = gens;
    if (c.full_dimensional()) {
        Json f = Json::array();
        for (const auto& n : c.facets()) f.push_back(to_json(n));
        j["facets"] = f;
    } else {
        j["facets"] = nullptr;
    }
    Json e = Json::array();
    for (const auto& r : c.extremal_rays()) e.push_back(to_json(r));
    j["extremal"] = e;
    return j;
}

inline const char* method_name(LpMethod m) {
    switch (m) {
        case LpMethod::FourierMotzkin: return "fourier-motzkin";
        case LpMethod::Simplex: return "simplex";
        default: return "auto";
    }
}

inline Json to_json(const Membership& mem, const Cone& c) {
    Json j;
    j["member"] = mem.member;
    j["method"] = method_name(mem.method);
    if (mem.member) {
        Json combo = Json::array();
        for (std::size_t i = 0; i < mem.coefficients.size(); ++i) {
            if (mem.coefficients[i].is_zero()) continue;
            Json t;
            t["generator"] = c.labels().empty() ? Json(i) : Json(c.labels()[i]);
            t["coefficient"] = to_json(mem.coefficients[i]);
            combo.push_back(t);
        }
        j["combination"] = combo;
    } else {
        j["separator"] = to_json(mem.separator);
    }
    return j;
}

inline Json to_json(const ChainDecomposition& d) {
    Json j;
    Json order = Json::array();
    for (auto i : d.order) order.push_back(i + 1);
    j["order"] = order;
    j["c0"] = to_json(d.c0);
    Json chain = Json::array();
    for (const auto& s : d.chain) {
        Json step;
        step["subset"] = s.subset.label(d.m);
        step["coefficient"] = to_json(s.coefficient);
        chain.push_back(step);
    }
    j["chain"] = chain;
    j["in_cone"] = d.in_cone();
    j["reconstruction"] = to_json(d.reconstruct());
    return j;
}

inline Json to_json(const NumericalVerdict& v) {
    Json j;
    switch (v.kind) {
        case NumericalVerdict::Kind::Trivial:
            j["verdict"] = "trivial";
            break;
        case NumericalVerdict::Kind::RankWitness:
            j["verdict"] = "nontrivial";
            j["witness"] = "rank";
            j["value"] = to_json(v.witness_value);
            break;
        case NumericalVerdict::Kind::ThetaWitness:
            j["verdict"] = "nontrivial";
            j["witness"] = "theta";
            j["branch"] = v.witness_index + 1;
            j["value"] = to_json(v.witness_value);
            break;
    }
    return j;
}

inline Json to_json(const std::vector<RationalVector>& points) {
    Json a = Json::array();
    for (const auto& p : points) a.push_back(to_json(p));
    return a;
}

}  // namespace cmcone

#endif
