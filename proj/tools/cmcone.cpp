// cmcone: command-line front end for the Cohen-Macaulay cone library.
//
// Exit codes: 0 success, 1 validation failure, 2 I/O, schema or argument
// error, 3 a "false" answer from member or a "nontrivial" answer from numeq.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <unistd.h>

#include <CLI11.hpp>

#include <cmcone/cmcone.hpp>

namespace {

using namespace cmcone;

enum Exit { kOk = 0, kInvalid = 1, kUsage = 2, kNegative = 3 };

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Style {
    bool color = false;
    std::string wrap(const std::string& code, const std::string& s) const { return color ? "\033[" + code + "m" + s + "\033[0m" : s; }
    std::string red(const std::string& s) const { return wrap("31", s); }
    std::string green(const std::string& s) const { return wrap("32", s); }
    std::string yellow(const std::string& s) const { return wrap("33", s); }
    std::string bold(const std::string& s) const { return wrap("1", s); }
};

Style style_for(int fd) {
    Style s;
    s.color = std::getenv("CMCONE_NO_COLOR") == nullptr && isatty(fd);
    return s;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw UsageError("cannot read " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw UsageError("cannot write " + path);
    out << text;
    if (!out) throw UsageError("failed writing " + path);
}

void print_diagnostics(const Validation& v) {
    const Style st = style_for(2);
    for (const auto& d : v.diagnostics) {
        const bool err = d.severity == Diagnostic::Severity::Error;
        std::cerr << (err ? st.red("error") : st.yellow("warning")) << " [" << d.code << "]: " << d.message << "\n";
    }
}

/// Loads and validates a spec; validation errors raise ValidationError after
/// printing every diagnostic.
BranchSpec load_validated(const std::string& path) {
    BranchSpec spec = load_spec(read_file(path));
    const Validation v = validate(spec);
    if (!v.ok()) {
        print_diagnostics(v);
        throw ValidationError(v.first_error()->message);
    }
    return spec;
}

GClass parse_class(const std::string& text, std::size_t m) {
    RationalVector v;
    try {
        v = parse_rational_list(text);
    } catch (const std::exception& e) {
        throw UsageError("--class: " + std::string(e.what()));
    }
    if (v.size() != m)
        throw UsageError("--class has " + std::to_string(v.size()) + " entries but the spec has m = " + std::to_string(m));
    return GClass(v);
}

void emit(const Json& j) { std::cout << j.dump(2) << "\n"; }

int cmd_analyze(const std::string& input, const std::string& json_out, const std::string& svg_out) {
    const BranchSpec spec = load_spec(read_file(input));
    const Validation v = validate(spec);
    if (!v.ok()) {
        print_diagnostics(v);
        return kInvalid;
    }
    const AnalysisReport rep = analyze(spec);
    const std::string text = to_json(rep).dump(2) + "\n";
    if (!svg_out.empty()) write_file(svg_out, render_svg(make_plot_spec(rep.cone)));
    if (json_out.empty()) {
        std::cout << text;
    } else {
        write_file(json_out, text);
        const Style st = style_for(1);
        std::cout << st.bold("m = " + std::to_string(rep.m)) << ", Grothendieck rank " << rep.grothendieck_rank << ", "
                  << rep.cone.extremal_rays().size() << " extremal rays, " << rep.cone.facets().size() << " facets\n";
        for (const auto& [name, c] : rep.checks)
            std::cout << "  " << (c.pass ? st.green("pass") : st.red("FAIL")) << "  " << name << "\n";
    }
    return rep.all_passed() ? kOk : kInvalid;
}

int cmd_theta(const std::string& input) {
    const BranchSpec spec = load_validated(input);
    if (!spec.is_explicit()) throw UsageError("theta needs explicit branch polynomials, not a symbolic spec");
    emit(to_json(theta_matrix(spec)));
    return kOk;
}

int cmd_member(const std::string& input, const std::string& cls) {
    const BranchSpec spec = load_validated(input);
    const Cone cone = cm_cone(spec.m());
    const GClass a = parse_class(cls, spec.m());
    const Membership mem = contains(cone, a);
    emit(to_json(mem, cone));
    return mem.member ? kOk : kNegative;
}

int cmd_decompose(const std::string& input, const std::string& cls) {
    const BranchSpec spec = load_validated(input);
    if (spec.m() < 2) throw UsageError("decompose needs at least two branches");
    emit(to_json(chain_decompose(parse_class(cls, spec.m()))));
    return kOk;
}

int cmd_numeq(const std::string& input, const std::string& cls) {
    const BranchSpec spec = load_validated(input);
    if (!spec.is_explicit()) throw UsageError("numeq needs explicit branch polynomials, not a symbolic spec");
    const NumericalVerdict v = numerical_triviality_certificate(theta_matrix(spec), parse_class(cls, spec.m()));
    emit(to_json(v));
    return v.trivial() ? kOk : kNegative;
}

int cmd_slice(const std::string& input, std::uint64_t r) {
    const BranchSpec spec = load_validated(input);
    if (r == 0) throw UsageError("--rank must be positive");
    const auto pts = rank_slice_lattice_points(cm_cone(spec.m()), r, module_lattice(spec.m()));
    Json j;
    j["m"] = spec.m();
    j["rank"] = r;
    j["count"] = pts.size();
    j["points"] = to_json(pts);
    emit(j);
    return kOk;
}

int cmd_imult(const std::string& g, const std::string& h, const std::vector<std::string>& vars) {
    if (vars.size() != 2) throw UsageError("--vars expects two names");
    BivariatePoly pg, ph;
    try {
        pg = parse_poly(g, {vars[0], vars[1]});
        ph = parse_poly(h, {vars[0], vars[1]});
    } catch (const ParseError& e) {
        throw UsageError(e.what());
    }
    std::cout << intersection_multiplicity(pg, ph).to_string() << "\n";
    return kOk;
}

int cmd_plot(const std::string& input, const std::string& svg_out) {
    const BranchSpec spec = load_validated(input);
    const std::string svg = render_svg(make_plot_spec(cm_cone(spec.m())));
    if (svg_out.empty()) std::cout << svg;
    else write_file(svg_out, svg);
    return kOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Cohen-Macaulay cones, theta pairings and intersection multiplicities for xi*eta + f"};
    app.set_version_flag("--version", std::string("cmcone ") + kVersion);
    app.require_subcommand(1);

    std::string input, json_out, svg_out, cls, g, h;
    std::uint64_t rank_r = 0;
    std::vector<std::string> vars{"x", "y"};
    std::function<int()> run;

    auto* analyze_cmd = app.add_subcommand("analyze", "full analysis report for one ring");
    analyze_cmd->add_option("input", input, "spec JSON")->required();
    analyze_cmd->add_option("--json", json_out, "write the report here instead of stdout");
    analyze_cmd->add_option("--svg", svg_out, "also write the cone figure");
    analyze_cmd->callback([&] { run = [&] { return cmd_analyze(input, json_out, svg_out); }; });

    auto* theta_cmd = app.add_subcommand("theta", "theta matrix of an explicit spec");
    theta_cmd->add_option("input", input, "spec JSON")->required();
    theta_cmd->callback([&] { run = [&] { return cmd_theta(input); }; });

    auto* member_cmd = app.add_subcommand("member", "cone membership with certificate (exit 3 if not a member)");
    member_cmd->add_option("input", input, "spec JSON")->required();
    member_cmd->add_option("--class", cls, "coordinates q1,...,qm over [I_1..I_m]")->required();
    member_cmd->callback([&] { run = [&] { return cmd_member(input, cls); }; });

    auto* decompose_cmd = app.add_subcommand("decompose", "chain decomposition of a class");
    decompose_cmd->add_option("input", input, "spec JSON")->required();
    decompose_cmd->add_option("--class", cls, "coordinates q1,...,qm over [I_1..I_m]")->required();
    decompose_cmd->callback([&] { run = [&] { return cmd_decompose(input, cls); }; });

    auto* numeq_cmd = app.add_subcommand("numeq", "numerical triviality with witness (exit 3 if nontrivial)");
    numeq_cmd->add_option("input", input, "spec JSON")->required();
    numeq_cmd->add_option("--class", cls, "coordinates q1,...,qm over [I_1..I_m]")->required();
    numeq_cmd->callback([&] { run = [&] { return cmd_numeq(input, cls); }; });

    auto* slice_cmd = app.add_subcommand("slice", "module-lattice points of the cone at a given rank");
    slice_cmd->add_option("input", input, "spec JSON")->required();
    slice_cmd->add_option("--rank", rank_r, "rank r >= 1")->required();
    slice_cmd->callback([&] { run = [&] { return cmd_slice(input, rank_r); }; });

    auto* imult_cmd = app.add_subcommand("imult", "intersection multiplicity at the origin");
    imult_cmd->add_option("first", g, "first polynomial g")->required();
    imult_cmd->add_option("second", h, "second polynomial h")->required();
    imult_cmd->add_option("--vars", vars, "variable names")->expected(2);
    imult_cmd->callback([&] { run = [&] { return cmd_imult(g, h, vars); }; });

    auto* plot_cmd = app.add_subcommand("plot", "SVG figure of the cone");
    plot_cmd->add_option("input", input, "spec JSON")->required();
    plot_cmd->add_option("--svg", svg_out, "output path (stdout if omitted)");
    plot_cmd->callback([&] { run = [&] { return cmd_plot(input, svg_out); }; });

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kUsage;
    }

    const Style st = style_for(2);
    try {
        return run();
    } catch (const ValidationError& e) {
        std::cerr << st.red("validation error") << ": " << e.what() << "\n";
        return kInvalid;
    } catch (const SchemaError& e) {
        std::cerr << st.red("schema error") << ": " << e.what() << "\n";
        return kUsage;
    } catch (const UsageError& e) {
        std::cerr << st.red("error") << ": " << e.what() << "\n";
        return kUsage;
    } catch (const PreconditionError& e) {
        std::cerr << st.red("error") << ": " << e.what() << "\n";
        return kUsage;
    } catch (const std::exception& e) {
        std::cerr << st.red("internal error") << ": " << e.what() << "\n";
        return 70;
    }
}
