#include "germcalc/ops.hpp"

#include <algorithm>
#include <numeric>

#include "germcalc/error.hpp"
#include "germcalc/tangent.hpp"

namespace germcalc {

namespace {

std::vector<std::size_t> iota_from(std::size_t start, std::size_t count) {
    std::vector<std::size_t> v(count);
    std::iota(v.begin(), v.end(), start);
    return v;
}

std::string unused_name(const std::string& wanted, const std::vector<std::string>& taken) {
    auto free = [&](const std::string& s) { return std::find(taken.begin(), taken.end(), s) == taken.end(); };
    if (free(wanted)) return wanted;
    for (int i = 1;; ++i) {
        std::string s = wanted + std::to_string(i);
        if (free(s)) return s;
    }
}

void require_stable(const MultiGerm& f, const ConstructionOptions& options, const char* what) {
    if (options.unchecked) return;
    const long cod = ae_codim(f, options.policy).value;
    if (cod != 0)
        throw ValidationError(std::string(what) + " is not stable (A_e-codimension " + std::to_string(cod) + ")");
}

void require_single_parameter(const Unfolding& u) {
    if (u.parameter_count() != 1) throw ValidationError("construction needs a 1-parameter unfolding");
}

// Prism on a Morse function along the last target coordinate, or the
// immersion X -> (X, 0) when n = p - 1.
Branch fold_branch(std::size_t n, std::size_t p) {
    Branch b;
    for (std::size_t j = 0; j + 1 < p; ++j) b.components.push_back(Poly::variable(n, j));
    Poly last(n);
    for (std::size_t j = p - 1; j < n; ++j) last += Poly::variable(n, j).pow(2);
    b.components.push_back(std::move(last));
    return b;
}

}  // namespace

MultiGerm Unfolding::restrict_to_base(const MultiGerm& total, std::size_t s) {
    const std::size_t n = total.source_dim();
    const std::size_t p = total.target_dim();
    if (s == 0) throw ValidationError("an unfolding needs at least one parameter");
    if (s >= n || s >= p) throw ValidationError("unfolding has no room for the base germ");

    std::vector<Poly> restriction;
    for (std::size_t v = 0; v < n; ++v)
        restriction.push_back(v < n - s ? Poly::variable(n - s, v) : Poly(n - s));

    std::vector<Branch> base_branches;
    for (std::size_t i = 0; i < total.branch_count(); ++i) {
        const auto& comps = total.branch(i).components;
        for (std::size_t j = 0; j < s; ++j)
            if (!(comps[p - s + j] == Poly::variable(n, n - s + j)))
                throw ValidationError("branch " + std::to_string(i + 1) +
                                      " does not pass the unfolding parameters through");
        Branch b;
        b.label = total.branch(i).label;
        for (std::size_t l = 0; l + s < p; ++l) b.components.push_back(comps[l].substitute(restriction));
        base_branches.push_back(std::move(b));
    }
    std::vector<std::string> names(total.var_names().begin(), total.var_names().end() - static_cast<long>(s));
    return MultiGerm(std::move(names), std::move(base_branches));
}

Unfolding Unfolding::from_total(MultiGerm total, std::size_t s) {
    MultiGerm base = restrict_to_base(total, s);
    return Unfolding(Trusted{}, std::move(base), std::move(total), s);
}

Unfolding::Unfolding(MultiGerm base, MultiGerm total, std::size_t s)
    : base_(std::move(base)), total_(std::move(total)), s_(s) {
    if (total_.source_dim() != base_.source_dim() + s || total_.target_dim() != base_.target_dim() + s)
        throw ValidationError("unfolding dimensions do not match base plus parameters");
    if (total_.branch_count() != base_.branch_count())
        throw ValidationError("unfolding and base have different branch counts");
    const MultiGerm derived = restrict_to_base(total_, s);
    for (std::size_t i = 0; i < base_.branch_count(); ++i)
        if (derived.branch(i).components != base_.branch(i).components)
            throw ValidationError("unfolding does not restrict to the base at zero parameter");
}

MultiGerm augment(const Unfolding& u, const Poly& g, std::vector<std::string> g_vars,
                  const ConstructionOptions& options) {
    require_single_parameter(u);
    const std::size_t q = g.nvars();
    if (q == 0) throw ValidationError("augmenting function needs at least one variable");
    if (sgn(g.constant_term()) != 0) throw ValidationError("augmenting function must vanish at the origin");
    if (g_vars.empty()) {
        if (q == 1) g_vars = {"z"};
        else
            for (std::size_t i = 1; i <= q; ++i) g_vars.push_back("z" + std::to_string(i));
    }
    if (g_vars.size() != q) throw ValidationError("augmenting variable names do not match its arity");
    require_stable(u.total(), options, "unfolding");

    const MultiGerm& base = u.base();
    const std::size_t n = base.source_dim();
    const std::size_t p = base.target_dim();
    const std::size_t m = n + q;

    std::vector<std::string> names = base.var_names();
    for (const auto& v : g_vars) names.push_back(unused_name(v, names));

    const auto g_place = iota_from(n, q);
    std::vector<Poly> assignment;
    for (std::size_t v = 0; v < n; ++v) assignment.push_back(Poly::variable(m, v));
    assignment.push_back(g.embed(m, g_place));

    std::vector<Branch> branches;
    for (const Branch& tb : u.total().branches()) {
        Branch b;
        b.label = tb.label;
        for (std::size_t l = 0; l < p; ++l) b.components.push_back(tb.components[l].substitute(assignment));
        for (std::size_t j = 0; j < q; ++j) b.components.push_back(Poly::variable(m, n + j));
        branches.push_back(std::move(b));
    }
    return MultiGerm(std::move(names), std::move(branches));
}

MultiGerm monic_concat(const Unfolding& u, const ConstructionOptions& options) {
    require_single_parameter(u);
    require_stable(u.total(), options, "unfolding");
    const MultiGerm& t = u.total();
    std::vector<Branch> branches = t.branches();
    branches.push_back(fold_branch(t.source_dim(), t.target_dim()));
    return MultiGerm(t.var_names(), std::move(branches));
}

MultiGerm binary_concat(const Unfolding& u, const Unfolding& v, const ConstructionOptions& options) {
    require_single_parameter(u);
    require_single_parameter(v);
    const std::size_t a = u.base().source_dim();
    const std::size_t b = u.base().target_dim();
    const std::size_t c = v.base().source_dim();
    const std::size_t d = v.base().target_dim();
    if (a + d != b + c)
        throw ValidationError("binary concatenation needs both germs to have the same n - p");
    require_stable(u.total(), options, "first unfolding");
    require_stable(v.total(), options, "second unfolding");

    const std::size_t n = a + d + 1;
    std::vector<Branch> branches;

    // (X, y, u) -> (f_u(y), u, X)
    std::vector<std::size_t> place_u = iota_from(d, a + 1);
    for (const Branch& tb : u.total().branches()) {
        Branch br;
        br.label = tb.label;
        for (std::size_t l = 0; l < b; ++l) br.components.push_back(tb.components[l].embed(n, place_u));
        br.components.push_back(Poly::variable(n, a + d));
        for (std::size_t j = 0; j < d; ++j) br.components.push_back(Poly::variable(n, j));
        branches.push_back(std::move(br));
    }

    // (x, Y, u) -> (Y, u, g_u(x))
    std::vector<std::size_t> place_v = iota_from(0, c);
    place_v.push_back(c + b);
    for (const Branch& tb : v.total().branches()) {
        Branch br;
        br.label = tb.label;
        for (std::size_t j = 0; j < b; ++j) br.components.push_back(Poly::variable(n, c + j));
        br.components.push_back(Poly::variable(n, c + b));
        for (std::size_t l = 0; l < d; ++l) br.components.push_back(tb.components[l].embed(n, place_v));
        branches.push_back(std::move(br));
    }
    return MultiGerm(default_var_names(n), std::move(branches));
}

MultiGerm generalised_concat(const Unfolding& u, const MultiGerm& gbar, const ConstructionOptions& options) {
    const MultiGerm& t = u.total();
    const std::size_t n = t.source_dim();
    const std::size_t p = t.target_dim();
    const std::size_t s = u.parameter_count();
    if (s >= p) throw ValidationError("generalised concatenation needs s < p");
    if (gbar.target_dim() != s || gbar.source_dim() + p != n + s)
        throw ValidationError("second germ must map K^" + std::to_string(n + s - p) + " to K^" + std::to_string(s));
    require_stable(t, options, "unfolding");
    require_stable(gbar, options, "second germ");

    std::vector<Branch> branches = t.branches();
    const auto place = iota_from(p - s, gbar.source_dim());
    for (const Branch& gb : gbar.branches()) {
        Branch br;
        br.label = gb.label;
        for (std::size_t j = 0; j < p - s; ++j) br.components.push_back(Poly::variable(n, j));
        for (const Poly& c : gb.components) br.components.push_back(c.embed(n, place));
        branches.push_back(std::move(br));
    }
    return MultiGerm(t.var_names(), std::move(branches));
}

MultiGerm sim_aug_concat(const Unfolding& u, const Poly& phi, std::vector<std::string> phi_vars,
                         const ConstructionOptions& options) {
    if (phi.nvars() != 1) throw ValidationError("augmenting function must be a function of one variable");
    MultiGerm a = augment(u, phi, std::move(phi_vars), options);
    std::vector<Branch> branches = a.branches();
    branches.push_back(fold_branch(a.source_dim(), a.target_dim()));
    return MultiGerm(a.var_names(), std::move(branches));
}

long predicted_codim_augconc(long cod_f, long tau_phi) {
    if (cod_f < 0 || tau_phi < 0) throw ValidationError("codimensions must be non-negative");
    return cod_f * (tau_phi + 1);
}

}  // namespace germcalc
