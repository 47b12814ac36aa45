#include "germcalc/cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "germcalc/atlas.hpp"
#include "germcalc/dsl.hpp"
#include "germcalc/error.hpp"
#include "germcalc/gates.hpp"
#include "germcalc/ops.hpp"
#include "germcalc/tangent.hpp"

namespace germcalc::cli {

namespace {

using json = nlohmann::ordered_json;

struct Options {
    std::string germ;
    std::string phi;
    std::string other;
    std::string base;
    std::string kind;
    std::string entry;
    std::string output;
    std::vector<std::string> assertions;
    std::optional<int> max_degree;
    std::optional<int> window;
    std::optional<std::size_t> source_dim;
    std::optional<std::size_t> target_dim;
    long param_cap = 3;
    std::size_t params = 1;
    bool json = false;
    bool unchecked = false;
};

void add_common(CLI::App* app, Options& o) {
    app->add_option("--max-degree", o.max_degree, "Degree cap for truncated computations")
        ->check(CLI::Range(1, 64));
    app->add_option("--window", o.window, "Consecutive equal values required to accept a dimension")
        ->check(CLI::Range(1, 16));
    app->add_flag("--json", o.json, "Machine-readable output");
}

void add_germ(CLI::App* app, Options& o, bool required = true) {
    auto* opt = app->add_option("--germ", o.germ, "Germ expression, e.g. \"{(x^3+y*x, y, z); (x, y, z^2)}\"");
    if (required) opt->required();
    app->add_option("--source-dim", o.source_dim, "Force the source dimension")->check(CLI::PositiveNumber);
    app->add_option("--target-dim", o.target_dim, "Check the target dimension")->check(CLI::PositiveNumber);
}

StabilizationPolicy policy_from(const Options& o) {
    StabilizationPolicy p;
    if (const char* env = std::getenv("GERMCALC_MAX_DEGREE"); env && *env) {
        try {
            p.d_max = std::stoi(env);
        } catch (const std::exception&) {
            throw ValidationError("GERMCALC_MAX_DEGREE must be an integer");
        }
    }
    if (o.max_degree) p.d_max = *o.max_degree;
    if (o.window) p.window = *o.window;
    p.validate();
    return p;
}

MultiGerm parse_germ(const std::string& text, const Options& o) {
    ParseOptions po;
    po.source_dim = o.source_dim;
    po.target_dim = o.target_dim;
    return parse_multigerm(text, po);
}

json rational_json(const Rational& q) {
    auto part = [](const mpz_class& z) -> json {
        if (z.fits_slong_p()) return z.get_si();
        return z.get_str();
    };
    return {{"num", part(q.get_num())}, {"den", part(q.get_den())}};
}

json params_json(const ParamMap& params) {
    json j = json::object();
    for (const auto& [k, v] : params) {
        if (std::holds_alternative<long>(v)) j[k] = std::get<long>(v);
        else j[k] = std::get<SimpleFunction>(v).name();
    }
    return j;
}

json verdict_json(const Verdict& v) {
    json j;
    j["kind"] = to_string(v.kind);
    j["gate"] = v.gate;
    j["rule"] = v.rule;
    json ev = json::object();
    for (const auto& [k, q] : v.evidence) ev[k] = rational_json(q);
    j["evidence"] = ev;
    if (v.violated)
        j["violated"] = {{"lhs_label", v.violated->lhs_label},
                         {"lhs", rational_json(v.violated->lhs)},
                         {"relation", ">"},
                         {"rhs_label", v.violated->rhs_label},
                         {"rhs", rational_json(v.violated->rhs)}};
    else
        j["violated"] = nullptr;
    j["asserted_hypotheses"] = v.asserted_hypotheses;
    j["unverified_hypotheses"] = v.unverified_hypotheses;
    return j;
}

json envelope(const std::string& command) {
    json j;
    j["command"] = command;
    j["germ"] = nullptr;
    j["invariants"] = nullptr;
    j["verdict"] = nullptr;
    j["trace"] = nullptr;
    j["degrees_used"] = nullptr;
    return j;
}

std::string verdict_line(const Verdict& v) {
    std::string s = to_string(v.kind) + " [" + v.gate + "] " + v.rule;
    if (v.violated)
        s += " (" + v.violated->lhs_label + " = " + to_string(v.violated->lhs) + " > " + v.violated->rhs_label +
             " = " + to_string(v.violated->rhs) + ")";
    return s;
}

int cmd_eval(const Options& o, std::ostream& out) {
    const StabilizationPolicy pol = policy_from(o);
    const MultiGerm f = parse_germ(o.germ, o);

    std::vector<int> coranks;
    for (std::size_t i = 0; i < f.branch_count(); ++i) coranks.push_back(corank(f, i));
    const bool corank_one = std::all_of(coranks.begin(), coranks.end(), [](int c) { return c <= 1; });
    const long m0 = multiplicity(f, pol);
    const CodimResult ae = ae_codim(f, pol);
    const CodimResult a = a_codim(f, pol);
    const WilsonCheck w = wilson_check(f, pol);
    std::optional<AType> type;
    if (corank_one) type = recognize_type(f, pol);

    if (o.json) {
        json j = envelope("eval");
        j["germ"] = format_multigerm(f);
        json inv;
        inv["n"] = f.source_dim();
        inv["p"] = f.target_dim();
        inv["r"] = f.branch_count();
        inv["m0"] = m0;
        inv["corank"] = *std::max_element(coranks.begin(), coranks.end());
        inv["branch_coranks"] = coranks;
        inv["atype"] = type ? json(type->to_string()) : json(nullptr);
        inv["aecod"] = ae.value;
        inv["acod"] = a.value;
        json wj;
        wj["status"] = to_string(w.status);
        if (w.status != WilsonCheck::Status::NotApplicable) wj["predicted_aecod"] = w.predicted_ae_codim;
        inv["wilson"] = wj;
        j["invariants"] = inv;
        j["degrees_used"] = {{"aecod", ae.degree_used}, {"acod", a.degree_used}};
        out << j.dump(2) << "\n";
        return kOk;
    }
    out << "germ: " << format_multigerm(f) << "\n";
    out << "n, p, r: " << f.source_dim() << ", " << f.target_dim() << ", " << f.branch_count() << "\n";
    out << "m0: " << m0 << "\n";
    out << "corank: " << *std::max_element(coranks.begin(), coranks.end()) << "\n";
    out << "atype: " << (type ? type->to_string() : std::string("-")) << "\n";
    out << "aecod: " << ae.value << " (degree " << ae.degree_used << ")\n";
    out << "acod: " << a.value << " (degree " << a.degree_used << ")\n";
    out << "wilson: " << to_string(w.status);
    if (w.status != WilsonCheck::Status::NotApplicable) out << " (predicted aecod " << w.predicted_ae_codim << ")";
    out << "\n";
    return kOk;
}

Poly parse_phi(const Options& o, std::vector<std::string>& names) {
    if (o.phi.empty()) throw ValidationError("--phi is required here");
    return parse_poly(o.phi, names);
}

int cmd_build(const Options& o, std::ostream& out) {
    ConstructionOptions copt;
    copt.policy = policy_from(o);
    copt.unchecked = o.unchecked;
    const Unfolding u = Unfolding::from_total(parse_germ(o.germ, o), o.params);

    std::optional<MultiGerm> result;
    std::optional<long> predicted;
    if (o.kind == "augment" || o.kind == "augconc") {
        std::vector<std::string> names;
        const Poly phi = parse_phi(o, names);
        if (o.kind == "augment") {
            result = augment(u, phi, names, copt);
        } else {
            result = sim_aug_concat(u, phi, names, copt);
            predicted = predicted_codim_augconc(ae_codim(u.base(), copt.policy).value, tjurina(phi, copt.policy));
        }
    } else if (o.kind == "monic") {
        result = monic_concat(u, copt);
    } else if (o.kind == "binary") {
        if (o.other.empty()) throw ValidationError("binary needs --other <second unfolding>");
        result = binary_concat(u, Unfolding::from_total(parse_multigerm(o.other), 1), copt);
    } else if (o.kind == "genconc") {
        if (o.other.empty()) throw ValidationError("genconc needs --other <stable germ gbar>");
        result = generalised_concat(u, parse_multigerm(o.other), copt);
    }

    if (o.json) {
        json j = envelope("build " + o.kind);
        j["germ"] = format_multigerm(*result);
        j["unchecked"] = o.unchecked;
        if (predicted) j["predicted_aecod"] = *predicted;
        out << j.dump(2) << "\n";
        return kOk;
    }
    out << format_multigerm(*result) << "\n";
    if (predicted) out << "predicted aecod (lower bound, equality for quasi-homogeneous phi): " << *predicted << "\n";
    return kOk;
}

int cmd_gate(const Options& o, std::ostream& out) {
    const StabilizationPolicy pol = policy_from(o);
    const MultiGerm f = parse_germ(o.germ, o);
    ReportOptions ro;
    ro.assertions.insert(o.assertions.begin(), o.assertions.end());
    check_assertions(ro.assertions);
    if (!o.base.empty()) {
        std::vector<std::string> names;
        const Unfolding ub = Unfolding::from_total(parse_multigerm(o.base), o.params);
        ro.augconc = AugconcContext{ae_codim(ub.base(), pol).value, parse_phi(o, names)};
    }
    const SimplicityReport rep = simplicity_report(f, pol, ro);

    if (o.json) {
        json j = envelope("gate");
        j["germ"] = format_multigerm(f);
        j["verdict"] = verdict_json(rep.verdict);
        json tr = json::array();
        for (const auto& v : rep.trace) tr.push_back(verdict_json(v));
        j["trace"] = tr;
        json matches = json::array();
        for (const auto& m : rep.atlas_matches) matches.push_back({{"name", m.entry->name}, {"params", params_json(m.params)}});
        j["atlas_matches"] = matches;
        out << j.dump(2) << "\n";
        return kOk;
    }
    out << "verdict: " << verdict_line(rep.verdict) << "\n";
    if (!rep.verdict.unverified_hypotheses.empty()) {
        out << "unverified:";
        for (const auto& h : rep.verdict.unverified_hypotheses) out << " [" << h << "]";
        out << "\n";
    }
    out << "trace:\n";
    for (const auto& v : rep.trace) out << "  " << verdict_line(v) << "\n";
    return kOk;
}

int cmd_atlas_verify(const Options& o, std::ostream& out) {
    const StabilizationPolicy pol = policy_from(o);
    if (o.param_cap < 1) throw ValidationError("--param-cap must be at least 1");
    VerifyReport rep;
    if (o.entry.empty()) {
        rep = verify_all(o.param_cap, pol);
    } else {
        const AtlasEntry& e = entry(o.entry);
        for (const auto& pm : parameter_grid(e, o.param_cap)) rep.rows.push_back(verify(e, pm, pol));
    }

    if (o.json) {
        json j = envelope("atlas verify");
        json rows = json::array();
        for (const auto& r : rep.rows) {
            json row;
            row["name"] = r.name;
            row["params"] = params_json(r.params);
            row["germ"] = r.germ;
            row["computed"] = r.computed ? json(*r.computed) : json(nullptr);
            row["expected"] = r.expected;
            row["match"] = r.match;
            row["degree_used"] = r.degree_used;
            row["seconds"] = r.seconds;
            if (!r.error.empty()) row["error"] = r.error;
            rows.push_back(std::move(row));
        }
        j["param_cap"] = o.param_cap;
        j["rows"] = rows;
        j["matches"] = rep.matches();
        j["total"] = rep.rows.size();
        j["all_match"] = rep.all_match();
        out << j.dump(2) << "\n";
    } else {
        for (const auto& r : rep.rows) {
            out << (r.match ? "ok       " : "MISMATCH ") << r.name;
            if (!r.params.empty()) out << " (" << to_string(r.params) << ")";
            out << ": computed " << (r.computed ? std::to_string(*r.computed) : std::string("-")) << ", expected "
                << r.expected;
            if (!r.error.empty()) out << " [" << r.error << "]";
            out << "\n";
        }
        out << rep.matches() << "/" << rep.rows.size() << " rows match\n";
    }
    return rep.all_match() ? kOk : kInternalError;
}

int cmd_atlas_lookup(const Options& o, std::ostream& out) {
    const StabilizationPolicy pol = policy_from(o);
    const MultiGerm f = parse_germ(o.germ, o);
    const GermInvariants inv = invariants_for_lookup(f, pol);
    const auto matches = lookup(f, pol);
    if (o.json) {
        json j = envelope("atlas lookup");
        j["germ"] = format_multigerm(f);
        j["invariants"] = {{"n", inv.n}, {"p", inv.p}, {"r", inv.r}, {"atype", inv.type.to_string()},
                           {"m0", inv.m0}, {"aecod", inv.ae_codim}};
        json cands = json::array();
        for (const auto& m : matches) {
            cands.push_back({{"name", m.entry->name},
                             {"params", params_json(m.params)},
                             {"normal_form", format_multigerm(instantiate(*m.entry, m.params))}});
        }
        j["candidates"] = cands;
        out << j.dump(2) << "\n";
        return kOk;
    }
    out << "invariants: n=" << inv.n << " p=" << inv.p << " r=" << inv.r << " type=" << inv.type.to_string()
        << " m0=" << inv.m0 << " aecod=" << inv.ae_codim << "\n";
    if (matches.empty()) out << "no match\n";
    for (const auto& m : matches) {
        out << "candidate: " << m.entry->name;
        if (!m.params.empty()) out << " (" << to_string(m.params) << ")";
        out << "  " << format_multigerm(instantiate(*m.entry, m.params)) << "\n";
    }
    return kOk;
}

int cmd_atlas_export(const Options& o, std::ostream& out) {
    const std::string doc = export_catalog_json();
    if (o.output.empty()) {
        out << doc << "\n";
        return kOk;
    }
    std::ofstream f(o.output);
    if (!f) throw ValidationError("cannot write " + o.output);
    f << doc << "\n";
    return kOk;
}

std::vector<std::string> split_assertions(const std::vector<std::string>& raw) {
    std::vector<std::string> out;
    for (const auto& item : raw) {
        std::stringstream ss(item);
        std::string tok;
        while (std::getline(ss, tok, ',')) {
            tok.erase(0, tok.find_first_not_of(" \t"));
            tok.erase(tok.find_last_not_of(" \t") + 1);
            if (!tok.empty()) out.push_back(tok);
        }
    }
    return out;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    Options o;
    CLI::App app{"germcalc: invariants, constructions and simplicity tests for map germs"};
    app.name("germcalc");
    app.require_subcommand(1);

    auto* eval = app.add_subcommand("eval", "Invariants: m0, corank, A-type, A_e- and A-codimension, Wilson check");
    add_germ(eval, o);
    add_common(eval, o);

    auto* build = app.add_subcommand("build", "Constructions from a stable unfolding given by --germ");
    build->add_option("kind", o.kind, "augment | monic | binary | genconc | augconc")
        ->required()
        ->check(CLI::IsMember({"augment", "monic", "binary", "genconc", "augconc"}));
    add_germ(build, o);
    add_common(build, o);
    build->add_option("--phi", o.phi, "Augmenting function, e.g. \"z^3\"");
    build->add_option("--other", o.other, "Second unfolding (binary) or stable germ gbar (genconc)");
    build->add_option("--params", o.params, "Number of unfolding parameters (last variables and components)")
        ->check(CLI::PositiveNumber);
    build->add_flag("--unchecked", o.unchecked, "Skip the stability checks on the supplied pieces");

    auto* gate = app.add_subcommand("gate", "Simplicity report from every gate and the atlas");
    add_germ(gate, o);
    add_common(gate, o);
    gate->add_option("--assert", o.assertions, "Hypotheses to take on trust: primitive,dz_condition,...")
        ->delimiter(',');
    gate->add_option("--base", o.base, "Stable unfolding whose base was augmented and concatenated");
    gate->add_option("--phi", o.phi, "Augmenting function used with --base");
    gate->add_option("--params", o.params, "Number of parameters of --base")->check(CLI::PositiveNumber);

    auto* atlas = app.add_subcommand("atlas", "Normal-form catalog");
    atlas->require_subcommand(1);
    auto* verify_cmd = atlas->add_subcommand("verify", "Recompute every catalog codimension");
    add_common(verify_cmd, o);
    verify_cmd->add_option("--param-cap", o.param_cap, "Largest parameter value tried");
    verify_cmd->add_option("--entry", o.entry, "Only this catalog entry");
    auto* lookup_cmd = atlas->add_subcommand("lookup", "Catalog entries with the same invariants");
    add_germ(lookup_cmd, o);
    add_common(lookup_cmd, o);
    auto* export_cmd = atlas->add_subcommand("export", "Write the catalog as JSON");
    export_cmd->add_option("--output,-o", o.output, "Output file (default: standard output)");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kOk : kInputError;
    }
    o.assertions = split_assertions(o.assertions);

    try {
        if (*eval) return cmd_eval(o, out);
        if (*build) return cmd_build(o, out);
        if (*gate) return cmd_gate(o, out);
        if (*verify_cmd) return cmd_atlas_verify(o, out);
        if (*lookup_cmd) return cmd_atlas_lookup(o, out);
        if (*export_cmd) return cmd_atlas_export(o, out);
        err << "error: no command\n";
        return kInputError;
    } catch (const NotStabilized& e) {
        err << "error: " << e.what() << "\n";
        return kNotStabilized;
    } catch (const GermError& e) {
        err << "error: " << e.what() << "\n";
        return kInputError;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << "\n";
        return kInternalError;
    }
}

}  // namespace germcalc::cli
