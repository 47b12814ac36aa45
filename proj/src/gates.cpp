#include "germcalc/gates.hpp"

#include <algorithm>
#include <functional>

#include "germcalc/error.hpp"
#include "germcalc/tangent.hpp"

namespace germcalc {

namespace {

Rational q(long v) { return Rational(v); }

Verdict unknown(std::string gate, std::string rule, std::vector<std::string> hyps) {
    Verdict v;
    v.gate = std::move(gate);
    v.rule = std::move(rule);
    v.unverified_hypotheses = std::move(hyps);
    return v;
}

Verdict not_simple(std::string gate, std::string rule, Inequality ineq) {
    Verdict v;
    v.kind = VerdictKind::NotSimple;
    v.gate = std::move(gate);
    v.rule = std::move(rule);
    v.violated = std::move(ineq);
    return v;
}

bool corank_at_most_one(const MultiGerm& f) {
    for (std::size_t i = 0; i < f.branch_count(); ++i)
        if (corank(f, i) > 1) return false;
    return true;
}

std::vector<std::size_t> members(unsigned mask, std::size_t r) {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < r; ++i)
        if (mask & (1u << i)) out.push_back(i);
    return out;
}

std::vector<std::size_t> all_but(std::size_t skip, std::size_t r) {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < r; ++i)
        if (i != skip) out.push_back(i);
    return out;
}

// A-type of a stable corank-1 sub-multigerm, nullopt otherwise.
std::optional<AType> stable_type(const MultiGerm& f, const StabilizationPolicy& policy) {
    if (!corank_at_most_one(f)) return std::nullopt;
    if (!is_stable(f, policy)) return std::nullopt;
    return recognize_type(f, policy);
}

bool is_morse_prism_or_immersion(const AType& t, std::size_t n, std::size_t p) {
    if (t.branch_count() != 1) return false;
    return (n == p && t.ks[0] == 1) || (n + 1 == p && t.ks[0] == 0);
}

void append_unique(std::vector<std::string>& to, const std::vector<std::string>& from) {
    for (const auto& h : from)
        if (std::find(to.begin(), to.end(), h) == to.end()) to.push_back(h);
}

Verdict search_aug_cusp(const MultiGerm& f, const StabilizationPolicy& policy) {
    const std::size_t n = f.source_dim();
    const std::size_t p = f.target_dim();
    const std::size_t r = f.branch_count();
    const std::string gate = "aug_cusp";
    if (!(n == p || n + 1 == p) || r < 2 || r > 3)
        return unknown(gate, "no cuspidal-edge, fold-pair or immersion-pair partner",
                       {"decomposition {A_{F,phi}(f), g} with a listed partner g"});
    Verdict last = unknown(gate, "no cuspidal-edge, fold-pair or immersion-pair partner",
                           {"decomposition {A_{F,phi}(f), g} with a listed partner g"});
    for (std::size_t i = 0; i < r; ++i) {
        const MultiGerm aug = f.select({i});
        if (corank(aug, 0) > 1) continue;
        const auto partner = stable_type(f.select(all_but(i, r)), policy);
        if (!partner) continue;
        std::optional<PartnerKind> kind;
        if (n == p && partner->ks == std::vector<int>{2}) kind = PartnerKind::CuspidalEdge;
        if (n == p && partner->ks == std::vector<int>{1, 1}) kind = PartnerKind::TwoFolds;
        if (n + 1 == p && partner->ks == std::vector<int>{0, 0}) kind = PartnerKind::TwoImmersions;
        if (!kind) continue;
        Verdict v = gate_aug_cusp(aug, *kind, policy);
        v.evidence.insert(v.evidence.begin(), {"branch", q(static_cast<long>(i + 1))});
        if (v.kind == VerdictKind::NotSimple) return v;
        last = std::move(v);
    }
    return last;
}

Verdict run_guarded(const char* gate, const std::function<Verdict()>& fn) {
    try {
        return fn();
    } catch (const NotStabilized& e) {
        return unknown(gate, std::string("computation did not settle: ") + e.what(),
                       {"invariants computable below the degree cap"});
    } catch (const NotCorankOne& e) {
        return unknown(gate, std::string("not applicable: ") + e.what(), {"corank at most 1"});
    } catch (const NotStableType& e) {
        return unknown(gate, std::string("not applicable: ") + e.what(), {"stable A-type"});
    } catch (const UnsupportedDimensions& e) {
        return unknown(gate, std::string("not applicable: ") + e.what(), {"supported dimensions"});
    }
}

}  // namespace

std::string to_string(VerdictKind k) {
    switch (k) {
        case VerdictKind::Simple: return "simple";
        case VerdictKind::NotSimple: return "not_simple";
        case VerdictKind::Unknown: return "unknown";
    }
    return "unknown";
}

const std::vector<std::string>& known_assertions() {
    static const std::vector<std::string> names{"primitive", "dz_condition", "augmentation_simple", "transversal"};
    return names;
}

void check_assertions(const Assertions& a) {
    const auto& known = known_assertions();
    for (const auto& name : a)
        if (std::find(known.begin(), known.end(), name) == known.end())
            throw ValidationError("unknown assertion '" + name +
                                  "' (expected primitive, dz_condition, augmentation_simple or transversal)");
}

Rational nishimura_bound(long n, long p, long r) {
    if (n < 1 || p < 1 || r < 1) throw ValidationError("dimensions and branch count must be positive");
    if (n > p) throw UnsupportedDimensions("Nishimura bound needs n <= p");
    if (n * p == 1) throw UnsupportedDimensions("Nishimura bound needs np != 1");
    Rational b(p * p + (n - 1) * r, n * (p - n) + n - 1);
    b.canonicalize();
    return b;
}

Verdict gate_nishimura(const MultiGerm& f, const StabilizationPolicy& policy) {
    const std::string gate = "nishimura";
    const long n = static_cast<long>(f.source_dim());
    const long p = static_cast<long>(f.target_dim());
    const long r = static_cast<long>(f.branch_count());
    if (n > p || n * p == 1) return unknown(gate, "not applicable: needs n <= p and np != 1", {"n <= p"});
    if (!corank_at_most_one(f)) return unknown(gate, "not applicable: some branch has corank above 1", {"minimal corank"});

    const long m0 = multiplicity(f, policy);
    const Rational bound = nishimura_bound(n, p, r);
    if (Rational(m0) > bound) {
        Verdict v = not_simple(gate, "Nishimura bound", {"m0", q(m0), "(p^2+(n-1)r)/(n(p-n)+n-1)", bound});
        v.evidence = {{"m0", q(m0)}, {"bound", bound}};
        return v;
    }
    Verdict v = unknown(gate, "Nishimura bound satisfied (necessary condition only)",
                        {"a sufficient condition for simplicity"});
    v.evidence = {{"m0", q(m0)}, {"bound", bound}};
    return v;
}

Verdict gate_tau_pairing(const MultiGerm& f, const StabilizationPolicy& policy) {
    const std::string gate = "tau_pairing";
    const std::size_t n = f.source_dim();
    const std::size_t p = f.target_dim();
    const std::size_t r = f.branch_count();
    if (!((n == p && n >= 3) || n + 1 == p))
        return unknown(gate, "not applicable: needs n = p >= 3 or n = p - 1", {"dimension range of the pairing test"});
    if (r < 2) return unknown(gate, "not applicable: a monogerm has no bipartition", {"a stable bipartition"});
    if (r > 8) return unknown(gate, "bipartition search limited to 8 branches", {"a stable bipartition"});

    const unsigned full = (1u << r) - 1;
    std::vector<std::optional<int>> stratum(full + 1);
    std::vector<std::optional<AType>> type(full + 1);
    for (unsigned mask = 1; mask < full; ++mask) {
        const MultiGerm sub = f.select(members(mask, r));
        try {
            type[mask] = stable_type(sub, policy);
            if (type[mask]) stratum[mask] = stratum_dim(*type[mask], n, p);
        } catch (const NotStableType&) {
            type[mask].reset();
        }
    }

    const long pl = static_cast<long>(p);
    for (unsigned fs = 1; fs < full; ++fs) {
        const unsigned gs = full ^ fs;
        if (!stratum[fs] || !stratum[gs] || *stratum[fs] != 0) continue;
        const bool paired = *stratum[gs] == pl - 2;
        const bool not_monic = !is_morse_prism_or_immersion(*type[gs], n, p);
        if (!paired && !not_monic) continue;
        const long codim_sum = pl + (pl - *stratum[gs]);
        Verdict v = not_simple(gate,
                               paired ? "stable pair: zero-dimensional stratum with a partner of stratum dimension p-2"
                                      : "stable pair: zero-dimensional stratum with a partner that is neither a "
                                        "Morse prism nor an immersion",
                               {"stratum codimension of fs plus gs", q(codim_sum), "p+1", q(pl + 1)});
        v.evidence = {{"fs_mask", q(fs)},
                      {"gs_mask", q(gs)},
                      {"dim_stratum_fs", q(*stratum[fs])},
                      {"dim_stratum_gs", q(*stratum[gs])}};
        return v;
    }
    return unknown(gate, "no stable bipartition with a zero-dimensional stratum forces non-simplicity",
                   {"a sufficient condition for simplicity"});
}

Verdict gate_branch_count(const MultiGerm& f, const StabilizationPolicy& policy) {
    const std::string gate = "branch_count";
    const long n = static_cast<long>(f.source_dim());
    if (f.source_dim() != f.target_dim())
        return unknown(gate, "not applicable: needs n = p", {"equidimensional germ"});
    const AType t = recognize_type(f, policy);
    std::vector<int> singular;
    for (int k : t.ks)
        if (k >= 1) singular.push_back(k);
    const long r = static_cast<long>(singular.size());
    if (r < 2) return unknown(gate, "not applicable: needs at least two non-submersive branches", {"r > 1"});
    const long k1 = singular.front();
    if (k1 > n) return unknown(gate, "not applicable: k_1 > n", {"k_1 <= n"});
    const long limit = n - k1 + 2;
    if (r > limit) {
        Verdict v = not_simple(gate, "branch count bound for equidimensional A-types", {"r", q(r), "n-k_1+2", q(limit)});
        v.evidence = {{"r", q(r)}, {"k1", q(k1)}, {"limit", q(limit)}};
        return v;
    }
    Verdict v = unknown(gate, "branch count within n-k_1+2 (necessary condition only)",
                        {"a sufficient condition for simplicity"});
    v.evidence = {{"r", q(r)}, {"k1", q(k1)}, {"limit", q(limit)}};
    return v;
}

Verdict gate_primitive_plus_morse(const MultiGerm& f, const StabilizationPolicy& policy,
                                  const Assertions& assertions) {
    const std::string gate = "primitive_plus_morse";
    const std::size_t n = f.source_dim();
    const std::size_t p = f.target_dim();
    const std::size_t r = f.branch_count();
    if (!(n == p || n + 1 == p) || r < 2)
        return unknown(gate, "not applicable: needs {f_0, fold} with n = p or {f_0, immersion} with n = p - 1",
                       {"decomposition {f_0, Morse prism or immersion}"});
    const bool equi = n == p;
    const long threshold = equi ? 2 : 3;
    const bool asserted = assertions.count("primitive") > 0;

    Verdict last = unknown(gate, "no branch is a Morse prism or immersion next to a codimension-1 germ",
                           {"decomposition {f_0, Morse prism or immersion}"});
    for (std::size_t j = 0; j < r; ++j) {
        if (corank(f, j) > 1) continue;
        const AType tj = recognize_type(f.select({j}), policy);
        if (!is_morse_prism_or_immersion(tj, n, p)) continue;
        const MultiGerm f0 = f.select(all_but(j, r));
        const long cod = ae_codim(f0, policy).value;
        if (cod != 1) continue;
        const long nl = static_cast<long>(n);
        if (nl <= threshold) {
            last = unknown(gate, "below the dimension threshold for this corollary",
                           {"a sufficient condition for simplicity"});
            last.evidence = {{"partner_branch", q(static_cast<long>(j + 1))}, {"ae_codim_f0", q(cod)}, {"n", q(nl)}};
            continue;
        }
        if (!asserted) {
            last = unknown(gate, "f_0 has A_e-codimension 1; primitivity not asserted", {"primitive"});
            last.evidence = {{"partner_branch", q(static_cast<long>(j + 1))}, {"ae_codim_f0", q(cod)}, {"n", q(nl)}};
            continue;
        }
        Verdict v = not_simple(gate,
                               equi ? "primitive codimension-1 germ plus a Morse prism"
                                    : "primitive codimension-1 germ plus an immersion",
                               {"n", q(nl), "threshold", q(threshold)});
        v.evidence = {{"partner_branch", q(static_cast<long>(j + 1))}, {"ae_codim_f0", q(cod)}, {"n", q(nl)}};
        v.asserted_hypotheses = {"primitive"};
        return v;
    }
    return last;
}

Verdict gate_augconc(long f_base_cod, const Poly& phi, const Assertions& assertions) {
    const std::string gate = "augconc";
    if (f_base_cod < 0) throw ValidationError("base codimension must be non-negative");
    if (phi.is_zero() || phi.order() < 1)
        return unknown(gate, "augmenting function must be nonzero and vanish at the origin",
                       {"valid augmenting function"});
    if (!is_quasi_homogeneous(phi))
        return unknown(gate, "augmenting function is not quasi-homogeneous", {"quasi-homogeneous augmenting function"});

    const long tau = tjurina(phi);
    std::vector<std::pair<std::string, Rational>> evidence{
        {"base_ae_codim", q(f_base_cod)}, {"tau_phi", q(tau)}, {"predicted_ae_codim", q(f_base_cod * (tau + 1))}};

    auto missing = [&](std::initializer_list<const char*> names) {
        std::vector<std::string> out;
        for (const char* nm : names)
            if (!assertions.count(nm)) out.emplace_back(nm);
        return out;
    };
    auto present = [&](std::initializer_list<const char*> names) {
        std::vector<std::string> out;
        for (const char* nm : names)
            if (assertions.count(nm)) out.emplace_back(nm);
        return out;
    };

    if (f_base_cod == 1) {
        const auto lacking = missing({"dz_condition", "augmentation_simple"});
        if (lacking.empty()) {
            Verdict v;
            v.kind = VerdictKind::Simple;
            v.gate = gate;
            v.rule = "augmentation and concatenation of a codimension-1 germ";
            v.evidence = std::move(evidence);
            v.asserted_hypotheses = {"dz_condition", "augmentation_simple"};
            return v;
        }
        Verdict v = unknown(gate, "codimension-1 base, but hypotheses not asserted", lacking);
        v.evidence = std::move(evidence);
        v.asserted_hypotheses = present({"dz_condition", "augmentation_simple"});
        return v;
    }
    if (f_base_cod >= 2) {
        const auto lacking = missing({"transversal", "dz_condition", "augmentation_simple"});
        if (lacking.empty()) {
            Verdict v = not_simple(gate, "augmentation and concatenation of a base of codimension >= 2, transverse fold",
                                   {"base A_e-codimension", q(f_base_cod), "1", q(1)});
            v.evidence = std::move(evidence);
            v.asserted_hypotheses = {"transversal", "dz_condition", "augmentation_simple"};
            return v;
        }
        Verdict v = unknown(gate, "base codimension >= 2, but hypotheses not asserted", lacking);
        v.evidence = std::move(evidence);
        v.asserted_hypotheses = present({"transversal", "dz_condition", "augmentation_simple"});
        return v;
    }
    Verdict v = unknown(gate, "stable base: the gate only covers codimension >= 1", {"base of positive codimension"});
    v.evidence = std::move(evidence);
    return v;
}

Verdict gate_aug_cusp(const MultiGerm& f_aug, PartnerKind partner, const StabilizationPolicy& policy) {
    const std::string gate = "aug_cusp";
    if (f_aug.branch_count() != 1) throw ValidationError("augmentation must be a monogerm");
    const long n = static_cast<long>(f_aug.source_dim());
    const long p = static_cast<long>(f_aug.target_dim());
    const bool immersions = partner == PartnerKind::TwoImmersions;
    if (immersions ? n + 1 != p : n != p)
        return unknown(gate, "not applicable: partner kind does not fit the dimensions", {"partner kind"});
    if (!immersions && n < 2) return unknown(gate, "not applicable: needs n >= 2", {"n >= 2"});
    if (corank(f_aug, 0) > 1) return unknown(gate, "not applicable: corank above 1", {"minimal corank"});

    Rational bound = immersions ? Rational(n * n + n, 2 * n - 1) : Rational(n * n - n + 1, n - 1);
    bound.canonicalize();
    const long m0 = multiplicity(f_aug, policy);
    if (Rational(m0) > bound) {
        Verdict v = not_simple(gate, "multiplicity bound for an augmentation with a cusp, fold-pair or immersion-pair partner",
                               {"m0(A_{F,phi}(f))", q(m0), immersions ? "(n^2+n)/(2n-1)" : "(n^2-n+1)/(n-1)", bound});
        v.evidence = {{"m0_aug", q(m0)}, {"bound", bound}};
        return v;
    }
    Verdict v = unknown(gate, "multiplicity within the bound (necessary condition only)",
                        {"a sufficient condition for simplicity"});
    v.evidence = {{"m0_aug", q(m0)}, {"bound", bound}};
    return v;
}

SimplicityReport simplicity_report(const MultiGerm& f, const StabilizationPolicy& policy,
                                   const ReportOptions& options) {
    check_assertions(options.assertions);
    SimplicityReport rep;
    rep.trace.push_back(run_guarded("nishimura", [&] { return gate_nishimura(f, policy); }));
    rep.trace.push_back(run_guarded("branch_count", [&] { return gate_branch_count(f, policy); }));
    rep.trace.push_back(run_guarded("tau_pairing", [&] { return gate_tau_pairing(f, policy); }));
    rep.trace.push_back(run_guarded("primitive_plus_morse",
                                    [&] { return gate_primitive_plus_morse(f, policy, options.assertions); }));
    rep.trace.push_back(run_guarded("aug_cusp", [&] { return search_aug_cusp(f, policy); }));
    if (options.augconc) {
        rep.trace.push_back(run_guarded("augconc", [&] {
            return gate_augconc(options.augconc->base_codim, options.augconc->phi, options.assertions);
        }));
    } else {
        rep.trace.push_back(unknown("augconc", "no augmentation data supplied", {"augmentation-and-concatenation data"}));
    }
    rep.trace.push_back(run_guarded("atlas", [&] {
        rep.atlas_matches = lookup(f, policy);
        if (rep.atlas_matches.empty())
            return unknown("atlas", "no catalog entry with the same invariants", {"membership in the catalog"});
        Verdict v;
        v.kind = VerdictKind::Simple;
        v.gate = "atlas";
        std::string names;
        for (const auto& m : rep.atlas_matches) {
            if (!names.empty()) names += " | ";
            names += m.entry->name;
            if (!m.params.empty()) names += " (" + to_string(m.params) + ")";
        }
        v.rule = "catalog match: " + names;
        v.unverified_hypotheses = {"A-equivalence to the normal form (matched by invariants only)"};
        return v;
    }));

    const auto find_kind = [&](VerdictKind k) {
        return std::find_if(rep.trace.begin(), rep.trace.end(), [k](const Verdict& v) { return v.kind == k; });
    };
    if (auto it = find_kind(VerdictKind::NotSimple); it != rep.trace.end()) {
        rep.verdict = *it;
    } else if (auto it2 = find_kind(VerdictKind::Simple); it2 != rep.trace.end()) {
        rep.verdict = *it2;
    } else {
        rep.verdict = unknown("report", "no gate decided", {});
        for (const auto& v : rep.trace) append_unique(rep.verdict.unverified_hypotheses, v.unverified_hypotheses);
    }
    return rep;
}

}  // namespace germcalc
