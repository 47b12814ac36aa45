#include "germcalc/atlas.hpp"

#include <algorithm>
#include <cctype>
#include <chrono>

#include "germcalc/dsl.hpp"
#include "germcalc/error.hpp"
#include "germcalc/linalg.hpp"
#include "germcalc/tangent.hpp"

namespace germcalc {

namespace {

using Kind = AtlasParam::Kind;

AtlasEntry row(std::string name, std::string table, std::string k_orbit, std::string tmpl, std::string codim,
               std::vector<AtlasParam> params, std::string provenance, std::string sign_note = {}) {
    return AtlasEntry{std::move(name), std::move(table), std::move(k_orbit), std::move(tmpl), std::move(codim),
                      std::move(params), std::move(provenance), std::move(sign_note)};
}

std::vector<AtlasEntry> build_catalog() {
    const std::string mono = "monogerm";
    const std::string multi = "multigerm";
    const AtlasParam k1{"k", Kind::Integer, 1};
    const AtlasParam k2{"k", Kind::Integer, 2};
    const AtlasParam mu1{"mu", Kind::Integer, 1};
    const std::string mono_src = "corank-1 monogerms (C^3, 0) -> (C^3, 0), normal form table, row ";
    const std::string multi_src = "simple multigerms (C^3, S) -> (C^3, 0), final table, K-orbit ";
    const std::string plus = "real sign +/- taken as +";

    std::vector<AtlasEntry> c;
    c.push_back(row("A1", mono, "A1", "(x, y, z^2)", "0", {}, mono_src + "A1"));
    c.push_back(row("3_mu", mono, "3_mu", "(x, y, z^3+p*z)", "mu(p)", {{"p", Kind::Function, 0}},
                    mono_src + "3_mu(P), P a simple function of x, y"));
    c.push_back(row("4_1^k", mono, "4_1^k", "(x, y, z^4+x*z+y^[k]*z^2)", "k-1", {k1}, mono_src + "4_1^k", plus));
    c.push_back(
        row("4_2^k", mono, "4_2^k", "(x, y, z^4+y^2*z+x^[k]*z+x*z^2)", "k", {k2}, mono_src + "4_2^k", plus));
    c.push_back(row("5_1", mono, "5_1", "(x, y, z^5+x*z+y*z^2)", "1", {}, mono_src + "5_1"));
    c.push_back(row("5_2", mono, "5_2", "(x, y, z^5+x*z+y^2*z^2+y*z^3)", "2", {}, mono_src + "5_2"));

    c.push_back(row("A1A1", multi, "A1A1", "{(x, y, z^2); (x, y, z^2+h)}", "mu(h)", {{"h", Kind::Function, 0}},
                    multi_src + "A1A1, h a simple function of x, y"));
    c.push_back(row("A1A2-a", multi, "A1A2", "{(x^3+y*x, y, z); (x, y^2+z^[k], z)}", "k-1", {k1},
                    multi_src + "A1A2, first normal form"));
    c.push_back(row("A1A2-b", multi, "A1A2", "{(x^3+y*x, y, z); (x^2+z^[k], y, z)}", "2*(k-1)", {k1},
                    multi_src + "A1A2, second normal form"));
    c.push_back(row("A1A3", multi, "A1A3", "{(x^4+y*x+z*x^2, y, z); (x, y^2+z^[k], z)}", "k", {k1},
                    multi_src + "A1A3"));
    // The printed row reads x^3+zx in the first branch; that germ has codimension 2.
    // The codimension-1 binary concatenation named in the text is this one.
    c.push_back(row("A2A2-a", multi, "A2A2", "{(x^3+y*x, y, z); (x, y, z^3+y*z)}", "1", {},
                    multi_src + "A2A2, first normal form (codimension-1 binary concatenation)"));
    c.push_back(row("A2A2-b", multi, "A2A2", "{(x^3+y^2*x+z*x, y, z); (x, y, z^3+y*z)}", "2", {},
                    multi_src + "A2A2, second normal form"));
    c.push_back(row("A2A2-c", multi, "A2A2", "{(x^3+y*x, y, z); (x^3+z*x+x^2*y, y, z)}", "3", {},
                    multi_src + "A2A2, third normal form"));
    c.push_back(row("A2A2-d", multi, "A2A2", "{(x^3+y*x, y, z); (x^3+z*x, y, z)}", "4", {},
                    multi_src + "A2A2, fourth normal form"));
    c.push_back(row("3_muA1-a", multi, "3_muA1", "{(x^3+y^2*x+z^[mu+1]*x, y, z); (x, y, z^2)}", "mu+1", {mu1},
                    multi_src + "3_muA1, first normal form"));
    c.push_back(row("3_muA1-b", multi, "3_muA1", "{(x^3+y^2*x+z^[mu+1]*x, y, z); (x, y^2, z)}", "2*mu", {mu1},
                    multi_src + "3_muA1, second normal form"));
    c.push_back(row("4_1^kA1", multi, "4_1^kA1", "{(x^4+y*x+z^[k]*x^2, y, z); (x, y, z^2)}", "k", {k1},
                    multi_src + "4_1^kA1"));
    c.push_back(row("3_muA2", multi, "3_muA2", "{(x^3+y^2*x+z^[mu+1]*x, y, z); (x, y, z^3+y*z)}", "mu+2", {mu1},
                    multi_src + "3_muA2"));
    c.push_back(row("A1A1A1-a", multi, "A1A1A1", "{(x^2, y, z); (x^2+y+z^[k], y, z); (x, y^2, z)}", "k-1", {k1},
                    multi_src + "A1A1A1, first normal form"));
    c.push_back(row("A1A1A1-b", multi, "A1A1A1", "{(x^2, y, z); (x^2+y^[k]+z^2, y, z); (x, y^2, z)}", "k", {k1},
                    multi_src + "A1A1A1, second normal form"));
    c.push_back(row("A1A1A1-c", multi, "A1A1A1", "{(x^2, y, z); (x^2+y*z+z^[k], y, z); (x, y^2, z)}", "k", {k2},
                    multi_src + "A1A1A1, third normal form"));
    c.push_back(row("A1A1A1-d", multi, "A1A1A1", "{(x^2, y, z); (x^2+y^2+z^3, y, z); (x, y^2, z)}", "4", {},
                    multi_src + "A1A1A1, fourth normal form"));
    c.push_back(row("A1A1A2-a", multi, "A1A1A2", "{(x, y, z^2); (x, y, z^2+y^2+x^[k]); (x^3+y*x, y, z)}", "k+1",
                    {k1}, multi_src + "A1A1A2, first normal form"));
    c.push_back(row("A1A1A2-b", multi, "A1A1A2", "{(x, y, z^2); (x, y^2+z^[k], z); (x^3+y*x, y, z)}", "k", {k1},
                    multi_src + "A1A1A2, second normal form"));
    c.push_back(row("3_muA1A1", multi, "3_muA1A1", "{(x^3+y^2*x+z^[mu+1]*x, y, z); (x, y, z^2); (x, y, z^2+y)}",
                    "mu+2", {mu1}, multi_src + "3_muA1A1"));
    c.push_back(row("A1A1A1A1", multi, "A1A1A1A1", "{(x^2, y, z); (x, y^2, z); (x^2+y+z^[k], y, z); (x, y, z^2)}",
                    "k", {k1}, multi_src + "A1A1A1A1"));
    return c;
}

// Integer expressions: + - * parentheses, integer literals, integer
// parameters and mu(name) for function parameters.
class ExprEval {
public:
    ExprEval(std::string_view text, const ParamMap& params) : s_(text), params_(params) {}

    long run() {
        const long v = sum();
        skip();
        if (pos_ != s_.size()) fail("trailing input");
        return v;
    }

private:
    [[noreturn]] void fail(const std::string& what) const {
        throw ValidationError("bad parameter expression '" + std::string(s_) + "': " + what);
    }

    void skip() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }

    bool eat(char c) {
        skip();
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    long sum() {
        long v = product();
        for (;;) {
            if (eat('+')) v += product();
            else if (eat('-')) v -= product();
            else return v;
        }
    }

    long product() {
        long v = atom();
        while (eat('*')) v *= atom();
        return v;
    }

    long atom() {
        skip();
        if (eat('(')) {
            const long v = sum();
            if (!eat(')')) fail("missing ')'");
            return v;
        }
        if (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
            long v = 0;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])))
                v = v * 10 + (s_[pos_++] - '0');
            return v;
        }
        const std::string id = ident();
        if (id == "mu" && eat('(')) {
            const std::string arg = ident();
            if (!eat(')')) fail("missing ')'");
            const auto it = params_.find(arg);
            if (it == params_.end() || !std::holds_alternative<SimpleFunction>(it->second))
                fail("no function parameter " + arg);
            return std::get<SimpleFunction>(it->second).mu;
        }
        const auto it = params_.find(id);
        if (it == params_.end() || !std::holds_alternative<long>(it->second)) fail("no integer parameter " + id);
        return std::get<long>(it->second);
    }

    std::string ident() {
        skip();
        const std::size_t start = pos_;
        while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
        if (start == pos_) fail("expected a name or number");
        return std::string(s_.substr(start, pos_ - start));
    }

    std::string_view s_;
    const ParamMap& params_;
    std::size_t pos_ = 0;
};

std::string expand_placeholders(const std::string& tmpl, const ParamMap& params) {
    std::string out;
    std::size_t i = 0;
    while (i < tmpl.size()) {
        if (tmpl[i] != '[') {
            out += tmpl[i++];
            continue;
        }
        const std::size_t close = tmpl.find(']', i);
        if (close == std::string::npos) throw ValidationError("unterminated placeholder in template");
        const long v = ExprEval(std::string_view(tmpl).substr(i + 1, close - i - 1), params).run();
        if (v < 1) throw ValidationError("template exponent evaluates to " + std::to_string(v));
        out += std::to_string(v);
        i = close + 1;
    }
    return out;
}

std::size_t index_of(const std::vector<std::string>& names, const std::string& v) {
    const auto it = std::find(names.begin(), names.end(), v);
    if (it == names.end()) throw ValidationError("template has no variable " + v);
    return static_cast<std::size_t>(it - names.begin());
}

// Replaces the placeholder variable by the function's normal form in x, y and
// removes it from the variable list.
MultiGerm substitute_function(const MultiGerm& f, const std::string& placeholder, const SimpleFunction& fn) {
    const auto& names = f.var_names();
    const std::size_t n = names.size();
    const std::size_t hole = index_of(names, placeholder);

    std::vector<std::string> xy{"x", "y"};
    const Poly h2 = parse_poly(fn.text(), xy);
    std::vector<std::string> reduced;
    for (std::size_t v = 0; v < n; ++v)
        if (v != hole) reduced.push_back(names[v]);
    const std::size_t m = reduced.size();
    const std::vector<std::size_t> place{index_of(reduced, "x"), index_of(reduced, "y")};
    const Poly h = h2.embed(m, place);

    std::vector<Poly> assignment;
    for (std::size_t v = 0, k = 0; v < n; ++v) assignment.push_back(v == hole ? h : Poly::variable(m, k++));

    std::vector<Branch> branches;
    for (const Branch& b : f.branches()) {
        Branch nb;
        nb.label = b.label;
        for (const Poly& c : b.components) nb.components.push_back(c.substitute(assignment));
        branches.push_back(std::move(nb));
    }
    return MultiGerm(std::move(reduced), std::move(branches));
}

struct EntryShape {
    std::size_t n = 0;
    std::size_t p = 0;
    std::size_t r = 0;
};

ParamMap minimal_params(const AtlasEntry& e) {
    ParamMap pm;
    for (const auto& prm : e.params) {
        if (prm.kind == Kind::Integer) pm[prm.name] = prm.min;
        else pm[prm.name] = SimpleFunction::up_to(static_cast<int>(prm.min) + 8, static_cast<int>(prm.min)).front();
    }
    return pm;
}

const std::map<std::string, EntryShape>& shapes() {
    static const std::map<std::string, EntryShape> s = [] {
        std::map<std::string, EntryShape> out;
        for (const auto& e : entries()) {
            const MultiGerm g = instantiate(e, minimal_params(e));
            out[e.name] = {g.source_dim(), g.target_dim(), g.branch_count()};
        }
        return out;
    }();
    return s;
}

// Parameter choices for lookup: integers in [min, min + span], functions with
// Milnor number at most `span` above the minimum allowed.
std::vector<ParamMap> search_grid(const AtlasEntry& e, long span) {
    std::vector<ParamMap> grid{ParamMap{}};
    for (const auto& prm : e.params) {
        std::vector<ParamMap> next;
        for (const auto& base : grid) {
            if (prm.kind == Kind::Integer) {
                for (long v = prm.min; v <= prm.min + span; ++v) {
                    ParamMap pm = base;
                    pm[prm.name] = v;
                    next.push_back(std::move(pm));
                }
            } else {
                for (const auto& fn : SimpleFunction::up_to(static_cast<int>(prm.min + span), static_cast<int>(prm.min))) {
                    ParamMap pm = base;
                    pm[prm.name] = fn;
                    next.push_back(std::move(pm));
                }
            }
        }
        grid = std::move(next);
    }
    return grid;
}

// Contact function h of a fold pair written as {(x, y, z^2); (x, y, z^2 + h(x, y))}.
std::optional<Poly> readable_contact_function(const MultiGerm& f) {
    if (f.branch_count() != 2 || f.source_dim() != 3 || f.target_dim() != 3) return std::nullopt;
    const Poly x = Poly::variable(3, 0);
    const Poly y = Poly::variable(3, 1);
    const Poly z2 = Poly::variable(3, 2).pow(2);
    for (std::size_t a = 0; a < 2; ++a) {
        const auto& fa = f.branch(a).components;
        const auto& fb = f.branch(1 - a).components;
        if (!(fa[0] == x && fa[1] == y && fa[2] == z2 && fb[0] == x && fb[1] == y)) continue;
        const Poly h = fb[2] - z2;
        if (h.uses_variable(2)) continue;
        const std::vector<Poly> to_xy{Poly::variable(2, 0), Poly::variable(2, 1), Poly(2)};
        return h.substitute(to_xy);
    }
    return std::nullopt;
}

// Rank of the quadratic part of a function of two variables with no linear part.
int hessian_rank(const Poly& h) {
    const Rational a = h.coefficient(Monomial{2, 0});
    const Rational b = h.coefficient(Monomial{1, 1});
    const Rational c = h.coefficient(Monomial{0, 2});
    return static_cast<int>(dense_rank({{2 * a, b}, {b, 2 * c}}));
}

bool same_function_class(const Poly& h, long mu_h, const SimpleFunction& fn) {
    if (fn.mu != mu_h) return false;
    const bool has_linear = sgn(h.coefficient(Monomial{1, 0})) != 0 || sgn(h.coefficient(Monomial{0, 1})) != 0;
    if (has_linear) return fn.family == 'A' && fn.mu == 0;
    const int rank = hessian_rank(h);
    if (fn.family == 'A') return fn.mu == 1 ? rank == 2 : (fn.mu >= 2 && rank == 1);
    return rank == 0;
}

}  // namespace

std::string SimpleFunction::name() const { return std::string(1, family) + std::to_string(mu); }

std::string SimpleFunction::text() const {
    switch (family) {
        case 'A': return mu == 0 ? "y^2+x" : "y^2+x^" + std::to_string(mu + 1);
        case 'D': return "x^2*y+y^" + std::to_string(mu - 1);
        case 'E':
            if (mu == 6) return "x^3+y^4";
            if (mu == 7) return "x^3+x*y^3";
            return "x^3+y^5";
    }
    throw std::logic_error("unknown simple function family");
}

std::optional<SimpleFunction> SimpleFunction::from_name(std::string_view name) {
    if (name.size() < 2) return std::nullopt;
    const char fam = static_cast<char>(std::toupper(static_cast<unsigned char>(name[0])));
    int mu = 0;
    for (char ch : name.substr(1)) {
        if (!std::isdigit(static_cast<unsigned char>(ch))) return std::nullopt;
        mu = mu * 10 + (ch - '0');
        if (mu > 100000) return std::nullopt;
    }
    if (fam == 'A' && mu >= 0) return SimpleFunction{'A', mu};
    if (fam == 'D' && mu >= 4) return SimpleFunction{'D', mu};
    if (fam == 'E' && mu >= 6 && mu <= 8) return SimpleFunction{'E', mu};
    return std::nullopt;
}

std::vector<SimpleFunction> SimpleFunction::up_to(int max_mu, int min_mu) {
    std::vector<SimpleFunction> out;
    for (int mu = std::max(min_mu, 0); mu <= max_mu; ++mu) {
        out.push_back({'A', mu});
        if (mu >= 4) out.push_back({'D', mu});
        if (mu >= 6 && mu <= 8) out.push_back({'E', mu});
    }
    return out;
}

std::string to_string(const ParamMap& params) {
    std::string s;
    for (const auto& [k, v] : params) {
        if (!s.empty()) s += ",";
        s += k + "=";
        if (std::holds_alternative<long>(v)) s += std::to_string(std::get<long>(v));
        else s += std::get<SimpleFunction>(v).name();
    }
    return s;
}

void AtlasEntry::check_params(const ParamMap& pm) const {
    for (const auto& prm : params) {
        const auto it = pm.find(prm.name);
        if (it == pm.end()) throw ValidationError(name + ": missing parameter " + prm.name);
        if (prm.kind == Kind::Integer) {
            if (!std::holds_alternative<long>(it->second))
                throw ValidationError(name + ": parameter " + prm.name + " must be an integer");
            if (std::get<long>(it->second) < prm.min)
                throw ValidationError(name + ": parameter " + prm.name + " must be >= " + std::to_string(prm.min));
        } else {
            if (!std::holds_alternative<SimpleFunction>(it->second))
                throw ValidationError(name + ": parameter " + prm.name + " must be a simple function");
            if (std::get<SimpleFunction>(it->second).mu < prm.min)
                throw ValidationError(name + ": parameter " + prm.name + " needs Milnor number >= " +
                                      std::to_string(prm.min));
        }
    }
    if (pm.size() != params.size()) throw ValidationError(name + ": unexpected parameter");
}

long AtlasEntry::expected_codim(const ParamMap& pm) const {
    check_params(pm);
    const long v = ExprEval(codim_formula, pm).run();
    if (v < 0) throw ValidationError(name + ": codimension formula is negative here");
    return v;
}

const std::vector<AtlasEntry>& entries() {
    static const std::vector<AtlasEntry> catalog = build_catalog();
    return catalog;
}

const AtlasEntry& entry(std::string_view name) {
    for (const auto& e : entries())
        if (e.name == name) return e;
    throw ValidationError("unknown atlas entry: " + std::string(name));
}

MultiGerm instantiate(const AtlasEntry& e, const ParamMap& params) {
    e.check_params(params);
    MultiGerm g = parse_multigerm(expand_placeholders(e.template_text, params));
    for (const auto& prm : e.params)
        if (prm.kind == Kind::Function)
            g = substitute_function(g, prm.name, std::get<SimpleFunction>(params.at(prm.name)));
    return g;
}

MultiGerm instantiate(std::string_view name, const ParamMap& params) { return instantiate(entry(name), params); }

std::vector<ParamMap> parameter_grid(const AtlasEntry& e, long cap) {
    std::vector<ParamMap> grid{ParamMap{}};
    for (const auto& prm : e.params) {
        std::vector<ParamMap> next;
        for (const auto& base : grid) {
            if (prm.kind == Kind::Integer) {
                for (long v = prm.min; v <= cap; ++v) {
                    ParamMap pm = base;
                    pm[prm.name] = v;
                    next.push_back(std::move(pm));
                }
            } else {
                for (const auto& fn : SimpleFunction::up_to(static_cast<int>(cap), static_cast<int>(prm.min))) {
                    ParamMap pm = base;
                    pm[prm.name] = fn;
                    next.push_back(std::move(pm));
                }
            }
        }
        grid = std::move(next);
    }
    return grid;
}

std::size_t VerifyReport::matches() const {
    return static_cast<std::size_t>(std::count_if(rows.begin(), rows.end(), [](const VerifyRow& r) { return r.match; }));
}

VerifyRow verify(const AtlasEntry& e, const ParamMap& params, const StabilizationPolicy& policy) {
    VerifyRow row;
    row.name = e.name;
    row.params = params;
    row.expected = e.expected_codim(params);
    const MultiGerm g = instantiate(e, params);
    row.germ = format_multigerm(g);
    const auto start = std::chrono::steady_clock::now();
    try {
        const CodimResult r = ae_codim(g, policy);
        row.computed = r.value;
        row.degree_used = r.degree_used;
        row.match = r.value == row.expected;
    } catch (const NotStabilized& err) {
        row.error = err.what();
    }
    row.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return row;
}

VerifyReport verify_all(long cap, const StabilizationPolicy& policy) {
    if (cap < 1) throw ValidationError("parameter cap must be at least 1");
    VerifyReport report;
    for (const auto& e : entries())
        for (const auto& pm : parameter_grid(e, cap)) report.rows.push_back(verify(e, pm, policy));
    return report;
}

GermInvariants invariants_for_lookup(const MultiGerm& f, const StabilizationPolicy& policy) {
    GermInvariants inv;
    inv.n = f.source_dim();
    inv.p = f.target_dim();
    inv.r = f.branch_count();
    inv.type = recognize_type(f, policy);
    inv.m0 = multiplicity(f, policy);
    inv.ae_codim = ae_codim(f, policy).value;
    return inv;
}

std::vector<AtlasMatch> lookup(const MultiGerm& f, const StabilizationPolicy& policy) {
    const GermInvariants inv = invariants_for_lookup(f, policy);
    const std::optional<Poly> contact = readable_contact_function(f);
    std::optional<long> contact_mu;
    if (contact && !contact->is_zero()) contact_mu = milnor(*contact, policy);

    std::vector<AtlasMatch> out;
    for (const auto& e : entries()) {
        const EntryShape& sh = shapes().at(e.name);
        if (sh.n != inv.n || sh.p != inv.p || sh.r != inv.r) continue;
        for (const auto& pm : search_grid(e, inv.ae_codim + 3)) {
            if (e.expected_codim(pm) != inv.ae_codim) continue;
            if (e.name == "A1A1" && contact_mu &&
                !same_function_class(*contact, *contact_mu, std::get<SimpleFunction>(pm.at("h"))))
                continue;
            const MultiGerm g = instantiate(e, pm);
            if (!(recognize_type(g, policy) == inv.type) || multiplicity(g, policy) != inv.m0) continue;
            out.push_back({&e, pm});
        }
    }
    return out;
}

}  // namespace germcalc
