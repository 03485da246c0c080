#include "sepvar/cli.hpp"

#include "sepvar/expression.hpp"
#include "sepvar/report.hpp"

#include <CLI11.hpp>

namespace sepvar {

namespace {

using report::Json;

struct Output {
    int exit_code = 0;
    Json body;
    std::vector<std::string> rendering;
};

Json envelope(const std::string& command) {
    Json j;
    j["schema_version"] = report::kSchemaVersion;
    j["command"] = command.empty() ? Json(nullptr) : Json(command);
    return j;
}

std::string serialize(const Json& j, bool pretty) {
    return (pretty ? j.dump(2) : j.dump()) + "\n";
}

CommandResult error_result(const std::string& command, const std::string& kind, const std::string& message,
                           int exit_code, bool pretty, std::optional<std::size_t> position = std::nullopt) {
    Json j = envelope(command);
    Json e;
    e["kind"] = kind;
    e["message"] = message;
    if (position) e["position"] = *position;
    j["error"] = std::move(e);
    return {exit_code, serialize(j, pretty)};
}

class Runner {
public:
    explicit Runner(int max_degree) { limits_.max_portrait_degree = max_degree; }

    RationalFunction parse(const std::string& text) const {
        RationalFunction f = parse_expression(text);
        if (f.degree() > limits_.max_portrait_degree)
            throw ResourceError("degree " + std::to_string(f.degree()) + " of '" + text + "' exceeds --max-degree " +
                                std::to_string(limits_.max_portrait_degree));
        return f;
    }

    Output portrait(const std::string& expr) const {
        RationalFunction f = parse(expr);
        RamificationPortrait p = ramification_portrait(f, limits_);
        Output out;
        out.body["input"] = expr;
        out.body["function"] = report::function(f);
        out.body["portrait"] = report::portrait(p);
        out.rendering.push_back("degree " + std::to_string(p.map_degree));
        for (const auto& c : p.classes) out.rendering.push_back("over " + c.value.to_string() + ": " + list(c.multiplicities));
        return out;
    }

    Output orbifold(const std::string& expr) const {
        RationalFunction f = parse(expr);
        AssociatedOrbifolds o = orbifolds_of_function(f, limits_);
        BigRational chi1 = euler_char(o.source), chi2 = euler_char(o.target);
        bool rh = check_covering_rh(o.source, o.target, f.degree());
        bool minimal = is_minimal_holomorphic_map(f, o.source, o.target).holds;
        Output out;
        out.exit_code = rh && minimal ? 0 : 1;
        out.body["input"] = expr;
        out.body["function"] = report::function(f);
        out.body["source"] = report::signature(o.source);
        out.body["target"] = report::signature(o.target);
        out.body["source_class"] = report::orbifold_class(classify(o.source));
        out.body["target_class"] = report::orbifold_class(classify(o.target));
        Json checks;
        checks["chi_source_equals_degree_times_chi_target"] = rh;
        checks["minimal_holomorphic"] = minimal;
        out.body["checks"] = std::move(checks);
        out.rendering.push_back("O1: " + list(o.source.indices()) + "  chi = " + to_string(chi1));
        out.rendering.push_back("O2: " + list(o.target.indices()) + "  chi = " + to_string(chi2));
        return out;
    }

    Output genus(const std::string& ea, const std::string& eb) const {
        RationalFunction a = parse(ea), b = parse(eb);
        GenusReport g = fried_genus(a, b, limits_);
        Output out;
        out.body["a"] = report::function(a);
        out.body["b"] = report::function(b);
        out.body["genus"] = report::genus(g);
        out.rendering.push_back("genus " + std::to_string(g.genus) + " (irreducibility " + to_string(g.irreducibility) + ")");
        return out;
    }

    Output basis(const std::string& expr) const {
        RationalFunction a = parse(expr);
        BasisVerdict v = is_basis_of_series(a, limits_);
        Output out;
        out.body["input"] = expr;
        out.body["function"] = report::function(a);
        Json verdict = report::basis(v);
        for (auto& [k, val] : verdict.items()) out.body[k] = val;
        out.rendering.push_back(std::string(v.is_basis ? "basis" : "not a basis") + ": chi(O2) = " +
                                to_string(v.chi_target) + ", " + to_string(v.orbifold_class.geometry) + " " +
                                v.orbifold_class.name);
        return out;
    }

    Output family(const std::string& name, const FamilyParams& params) const {
        FamilyInstance inst = make_family(family_from_string(name), params);
        GenusReport g = certify_family(inst, limits_);
        Output out;
        out.exit_code = g.irreducibility == Irreducibility::Proven && g.genus != 0 ? 1 : 0;
        out.body["family"] = report::family(inst, g);
        out.rendering.push_back("A = " + inst.a.to_string("x") + ", B = " + inst.b.to_string("y"));
        out.rendering.push_back("genus " + std::to_string(g.genus) + " (irreducibility " + to_string(g.irreducibility) + ")");
        return out;
    }

    Output series(const std::string& ea, const std::string& er, unsigned k) const {
        RationalFunction a = parse(ea), r = parse(er);
        SeriesCertificate s = generate_series(a, r, k, limits_);
        Output out;
        out.exit_code = s.all_genus_zero ? 0 : 1;
        out.body["a"] = report::function(a);
        out.body["r"] = report::function(r);
        out.body["series"] = report::series(s);
        for (const auto& t : s.terms)
            out.rendering.push_back("l = " + std::to_string(t.l) + ": degrees (" + std::to_string(t.genus.degree_a) +
                                    ", " + std::to_string(t.genus.degree_b) + "), genus " +
                                    std::to_string(t.genus.genus));
        return out;
    }

    Output verify_example(const std::string& name) const {
        if (name != "klein-s4") throw std::invalid_argument("unknown example '" + name + "'; available: klein-s4");
        KleinS4Certificate c = klein_s4_certificate(limits_);
        Output out;
        out.exit_code = c.passed() ? 0 : 1;
        out.body["example"] = name;
        Json cert = report::certificate(c);
        for (auto& [k, val] : cert.items()) out.body[k] = val;
        for (const auto& k : c.checks)
            out.rendering.push_back(std::string(k.passed ? "PASS " : "FAIL ") + (k.informational ? "(info) " : "") +
                                    k.name);
        return out;
    }

    Output bound(long n, long m, const std::string& ea, const std::string& eb) const {
        if (n < 1 || m < 1) throw std::invalid_argument("--n and --m must be >= 1");
        Output out;
        out.body["n"] = n;
        out.body["m"] = m;
        out.body["bound"] = report::rational(genus_lower_bound(n, m));
        out.body["minimum_genus"] = minimum_genus(n, m);
        out.body["genus_at_least_two_from_degree"] = 84 * n + 1;
        out.rendering.push_back("genus > " + to_string(genus_lower_bound(n, m)) + ", so genus >= " +
                                std::to_string(minimum_genus(n, m)));
        if (!ea.empty() || !eb.empty()) {
            if (ea.empty() || eb.empty()) throw std::invalid_argument("--a and --b must be given together");
            RationalFunction a = parse(ea), b = parse(eb);
            if (a.degree() != n || b.degree() != m)
                throw std::invalid_argument("degrees of --a and --b must equal --n and --m");
            HyperbolicBoundCheck c = check_hyperbolic_bound(a, b, limits_);
            out.exit_code = c.verdict == Verdict::Fail ? 1 : 0;
            out.body["check"] = report::bound_check(c);
            out.rendering.push_back("check: " + to_string(c.verdict) + " (" + c.reason + ")");
        }
        return out;
    }

private:
    static std::string list(const Multiplicities& m) { return list(expand(m)); }
    static std::string list(const std::vector<int>& v) {
        std::string s;
        for (int x : v) s += (s.empty() ? "" : " ") + std::to_string(x);
        return s.empty() ? "-" : s;
    }

    Limits limits_;
};

}  // namespace

CommandResult run_command(const std::vector<std::string>& args) {
    CLI::App app{"Separated-variable curves A(x) - B(y) = 0: portraits, orbifolds, genus and series certificates",
                 "sepvar"};
    app.require_subcommand(1);
    app.fallthrough();
    bool json_flag = false, pretty = false;
    int max_degree = 64;
    app.add_flag("--json", json_flag, "Compact JSON output (default)");
    app.add_flag("--pretty", pretty, "Indented JSON with a human-readable rendering");
    app.add_option("--max-degree", max_degree, "Largest degree accepted before expensive operations")
        ->check(CLI::PositiveNumber);

    std::string expr_a, expr_b, name;
    FamilyParams params;
    std::string poly_r, poly_s;
    unsigned k = 1;
    long bound_n = 0, bound_m = 0;

    auto* portrait = app.add_subcommand("portrait", "Ramification portrait of a rational function");
    portrait->add_option("EXPR", expr_a)->required();
    auto* orbifold = app.add_subcommand("orbifold", "Orbifolds O1 and O2 associated with a rational function");
    orbifold->add_option("EXPR", expr_a)->required();
    auto* genus = app.add_subcommand("genus", "Fried genus of A(x) - B(y) = 0");
    genus->add_option("EXPR_A", expr_a)->required();
    genus->add_option("EXPR_B", expr_b)->required();
    auto* basis = app.add_subcommand("basis", "Decide whether A is a basis of a series of genus-zero curves");
    basis->add_option("EXPR", expr_a)->required();
    auto* family = app.add_subcommand("family", "Instantiate and certify a genus-zero family");
    family->add_option("NAME", name, "lau, che, s, che2, last or j")->required();
    family->add_option("--n", params.n);
    family->add_option("--m", params.m);
    family->add_option("--s", params.s);
    family->add_option("--R", poly_r, "Polynomial or Laurent polynomial for lau");
    family->add_option("--S", poly_s, "Polynomial for s");
    auto* series = app.add_subcommand("series", "Certify the curves A(x) - R^l(y) = 0 for l = 1..k");
    series->add_option("EXPR_A", expr_a)->required();
    series->add_option("EXPR_R", expr_b)->required();
    series->add_option("--k", k)->check(CLI::PositiveNumber);
    auto* verify = app.add_subcommand("verify-example", "Run an embedded worked example");
    verify->add_option("NAME", name, "klein-s4")->required();
    auto* bound = app.add_subcommand("bound", "Genus lower bound for hyperbolic A of degree n and B of degree m");
    bound->add_option("--n", bound_n)->required();
    bound->add_option("--m", bound_m)->required();
    bound->add_option("--a", expr_a, "Optional A to check against the bound");
    bound->add_option("--b", expr_b, "Optional B to check against the bound");

    std::vector<std::string> argv_storage{"sepvar"};
    argv_storage.insert(argv_storage.end(), args.begin(), args.end());
    std::vector<char*> argv;
    for (auto& a : argv_storage) argv.push_back(a.data());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        auto subs = app.get_subcommands();
        return {0, subs.empty() ? app.help() : subs.front()->help()};
    } catch (const CLI::CallForAllHelp&) {
        return {0, app.help("", CLI::AppFormatMode::All)};
    } catch (const CLI::ParseError& e) {
        bool wants_pretty = std::find(args.begin(), args.end(), "--pretty") != args.end();
        auto subs = app.get_subcommands();
        return error_result(subs.empty() ? "" : subs.front()->get_name(), "usage", e.what(), 2, wants_pretty);
    }

    CLI::App* chosen = app.get_subcommands().front();
    const std::string command = chosen->get_name();
    try {
        Runner run(max_degree);
        Output out;
        if (chosen == portrait) {
            out = run.portrait(expr_a);
        } else if (chosen == orbifold) {
            out = run.orbifold(expr_a);
        } else if (chosen == genus) {
            out = run.genus(expr_a, expr_b);
        } else if (chosen == basis) {
            out = run.basis(expr_a);
        } else if (chosen == family) {
            if (!poly_r.empty() && !poly_s.empty()) throw std::invalid_argument("give at most one of --R and --S");
            if (!poly_r.empty()) params.poly = run.parse(poly_r);
            if (!poly_s.empty()) params.poly = run.parse(poly_s);
            out = run.family(name, params);
        } else if (chosen == series) {
            out = run.series(expr_a, expr_b, k);
        } else if (chosen == verify) {
            out = run.verify_example(name);
        } else {
            out = run.bound(bound_n, bound_m, expr_a, expr_b);
        }
        Json j = envelope(command);
        for (auto& [key, val] : out.body.items()) j[key] = val;
        if (pretty) j["rendering"] = out.rendering;
        return {out.exit_code, serialize(j, pretty)};
    } catch (const ParseError& e) {
        return error_result(command, "parse", e.what(), 2, pretty, e.position());
    } catch (const DivisionByZero& e) {
        return error_result(command, "division_by_zero", e.what(), 2, pretty);
    } catch (const ResourceError& e) {
        return error_result(command, "resource", e.what(), 2, pretty);
    } catch (const IntegrityError& e) {
        return error_result(command, "integrity", e.what(), 1, pretty);
    } catch (const std::invalid_argument& e) {
        return error_result(command, "usage", e.what(), 2, pretty);
    } catch (const std::domain_error& e) {
        return error_result(command, "domain", e.what(), 2, pretty);
    }
}

}  // namespace sepvar
