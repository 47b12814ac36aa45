// One PASS/FAIL line per acceptance criterion. Expected values are frozen
// here from the published tables, independent of the catalog formulas.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <numeric>
#include <random>
#include <sstream>

#include "germcalc/atlas.hpp"
#include "germcalc/dsl.hpp"
#include "germcalc/gates.hpp"
#include "germcalc/ops.hpp"
#include "germcalc/ring.hpp"
#include "germcalc/tangent.hpp"
#include "support.hpp"

using namespace germcalc;
using test_support::G;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t) { return std::chrono::duration<double>(Clock::now() - t).count(); }

struct Outcome {
    bool pass = true;
    std::size_t checked = 0;
    std::vector<std::string> failures;

    void expect(bool ok, const std::string& what) {
        ++checked;
        if (!ok) {
            pass = false;
            failures.push_back(what);
        }
    }
};

SimpleFunction fn(const char* name) { return *SimpleFunction::from_name(name); }

struct TableValue {
    std::string row;
    ParamMap params;
    long expected;
};

void check_rows(const std::vector<TableValue>& values, Outcome& out, double& slowest) {
    for (const auto& v : values) {
        const VerifyRow r = verify(entry(v.row), v.params);
        slowest = std::max(slowest, r.seconds);
        std::ostringstream what;
        what << v.row;
        if (!v.params.empty()) what << " (" << to_string(v.params) << ")";
        what << ": computed " << (r.computed ? std::to_string(*r.computed) : "error " + r.error) << ", table "
             << v.expected;
        out.expect(r.computed && *r.computed == v.expected, what.str());
    }
}

std::vector<TableValue> monogerm_table() {
    std::vector<TableValue> v = {{"A1", {}, 0}};
    for (const char* p : {"A1", "A2", "A3", "A4", "D4"}) v.push_back({"3_mu", {{"p", fn(p)}}, fn(p).mu});
    for (long k = 1; k <= 3; ++k) v.push_back({"4_1^k", {{"k", k}}, k - 1});
    for (long k = 2; k <= 3; ++k) v.push_back({"4_2^k", {{"k", k}}, k});
    v.push_back({"5_1", {}, 1});
    v.push_back({"5_2", {}, 2});
    return v;
}

std::vector<TableValue> multigerm_table() {
    std::vector<TableValue> v;
    for (const auto& h : SimpleFunction::up_to(3, 0)) v.push_back({"A1A1", {{"h", h}}, h.mu});
    auto ladder = [&](const char* row, long from, const std::function<long(long)>& cod, const char* name = "k") {
        for (long k = from; k <= 3; ++k) v.push_back({row, {{name, k}}, cod(k)});
    };
    ladder("A1A2-a", 1, [](long k) { return k - 1; });
    ladder("A1A2-b", 1, [](long k) { return 2 * (k - 1); });
    ladder("A1A3", 1, [](long k) { return k; });
    v.push_back({"A2A2-a", {}, 1});
    v.push_back({"A2A2-b", {}, 2});
    v.push_back({"A2A2-c", {}, 3});
    v.push_back({"A2A2-d", {}, 4});
    ladder("3_muA1-a", 1, [](long m) { return m + 1; }, "mu");
    ladder("3_muA1-b", 1, [](long m) { return 2 * m; }, "mu");
    ladder("4_1^kA1", 1, [](long k) { return k; });
    ladder("3_muA2", 1, [](long m) { return m + 2; }, "mu");
    ladder("A1A1A1-a", 1, [](long k) { return k - 1; });
    ladder("A1A1A1-b", 1, [](long k) { return k; });
    ladder("A1A1A1-c", 2, [](long k) { return k; });
    v.push_back({"A1A1A1-d", {}, 4});
    ladder("A1A1A2-a", 1, [](long k) { return k + 1; });
    ladder("A1A1A2-b", 1, [](long k) { return k; });
    ladder("3_muA1A1", 1, [](long m) { return m + 2; }, "mu");
    ladder("A1A1A1A1", 1, [](long k) { return k; });
    return v;
}

void print(int number, const std::string& title, const Outcome& o, const std::string& detail) {
    std::printf("criterion %d (%s): %s [%zu checks, %s]\n", number, title.c_str(), o.pass ? "PASS" : "FAIL", o.checked,
                detail.c_str());
    for (const auto& f : o.failures) std::printf("    failed: %s\n", f.c_str());
    std::fflush(stdout);
}

Outcome criterion_monogerms(std::string& detail) {
    Outcome o;
    double slowest = 0;
    check_rows(monogerm_table(), o, slowest);
    o.expect(slowest < 60.0, "slowest entry took " + std::to_string(slowest) + " s (limit 60 s)");
    detail = "exact integer equality, slowest entry " + std::to_string(slowest) + " s";
    return o;
}

Outcome criterion_multigerms(std::string& detail) {
    Outcome o;
    double slowest = 0;
    const auto t = Clock::now();
    check_rows(multigerm_table(), o, slowest);
    const double total = seconds_since(t);
    o.expect(total < 600.0, "total time " + std::to_string(total) + " s (limit 600 s)");
    detail = "exact integer equality, parameters <= 3, total " + std::to_string(total) + " s";
    return o;
}

Outcome criterion_augconc_equality(std::string& detail) {
    Outcome o;
    const Unfolding u = Unfolding::from_total(G("{(x^2, y, t); (x, y^2, t); (x^2+y+t, y, t)}"), 1);
    const long base_cod = ae_codim(u.base()).value;
    o.expect(base_cod == 1, "base codimension " + std::to_string(base_cod) + ", expected 1");
    for (int k = 2; k <= 3; ++k) {
        std::vector<std::string> names;
        const Poly phi = parse_poly("z^" + std::to_string(k), names);
        const MultiGerm h = sim_aug_concat(u, phi, names);
        const long cod = ae_codim(h).value;
        const long predicted = predicted_codim_augconc(base_cod, tjurina(phi));
        o.expect(cod == k, "phi = z^" + std::to_string(k) + ": computed " + std::to_string(cod) + ", expected " +
                               std::to_string(k));
        o.expect(cod == predicted, "phi = z^" + std::to_string(k) + ": computed " + std::to_string(cod) +
                                       ", cod(f)(tau+1) = " + std::to_string(predicted));
    }
    detail = "codimension-1 fold trigerm in the plane, phi = z^2, z^3";
    return o;
}

Outcome criterion_gate_soundness(std::string& detail) {
    Outcome o;
    std::size_t instances = 0;
    for (const auto& e : entries()) {
        for (const auto& pm : parameter_grid(e, 3)) {
            const SimplicityReport rep = simplicity_report(instantiate(e, pm));
            ++instances;
            for (const auto& v : rep.trace)
                o.expect(v.kind != VerdictKind::NotSimple,
                         e.name + " (" + to_string(pm) + "): gate " + v.gate + " returned not_simple");
        }
    }
    struct Case {
        const char* label;
        const char* germ;
        Rational m0;
        Rational bound;
    };
    const Case cases[] = {
        {"A2A3 bigerm", "{(x, y, z^3+y*z); (x^4+y*x+z*x^2, y, z)}", 7, Rational(13, 2)},
        {"(3,3) fold pentagerm", "{(x^2, y, z); (x, y^2, z); (x, y, z^2); (x^2+y+z, y, z); (x, y^2+x+z, z)}", 10,
         Rational(19, 2)},
        {"(3,4) sextuple point",
         "{(x, y, z, 0); (x, y, 0, z); (x, 0, y, z); (0, x, y, z); (x, y, z, x+y+z); (x, y, z, x+2*y+3*z)}", 6,
         Rational(28, 5)},
    };
    for (const auto& c : cases) {
        const Verdict v = gate_nishimura(G(c.germ));
        const bool ok = v.kind == VerdictKind::NotSimple && v.violated && v.violated->lhs == c.m0 &&
                        v.violated->rhs == c.bound;
        o.expect(ok, std::string(c.label) + ": expected not_simple with m0 = " + c.m0.get_str() + " > " +
                         c.bound.get_str());
    }
    detail = std::to_string(instances) + " atlas instances, 3 Nishimura cases, exact rationals";
    return o;
}

Outcome criterion_properties(std::string& detail) {
    Outcome o;
    const auto t = Clock::now();

    // multiplicity formula on random stable A-type instances
    struct Stable {
        const char* germ;
        std::vector<int> ks;
    };
    const std::vector<Stable> pool = {
        {"(x, y, z^2)", {1}},
        {"(x, y, z^3+y*z)", {2}},
        {"(x, y, z^4+x*z+y*z^2)", {3}},
        {"{(x^2, y, z); (x, y^2, z)}", {1, 1}},
        {"{(x^2, y, z); (x, y^2, z); (x, y, z^2)}", {1, 1, 1}},
        {"{(x, y, z^3+y*z); (x^2, y, z)}", {2, 1}},
        {"(x, y^2, x*y)", {1}},
        {"{(x, y, 0); (x, 0, y); (0, x, y)}", {0, 0, 0}},
        {"{(x^2, y); (x, y^2)}", {1, 1}},
        {"(x, y^3+x*y)", {2}},
    };
    std::mt19937 rng(20240611);
    for (int i = 0; i < 20; ++i) {
        const Stable& s = pool[i % pool.size()];
        const MultiGerm f = test_support::random_linear_change(G(s.germ), rng);
        const long want = std::accumulate(s.ks.begin(), s.ks.end(), 0L) + static_cast<long>(s.ks.size());
        o.expect(ae_codim(f).value == 0, "random instance of " + std::string(s.germ) + " not stable");
        o.expect(multiplicity(f) == want, "m0 formula fails on " + format_multigerm(f));
    }

    // Wilson relation on every non-stable atlas instance
    for (const auto& e : entries()) {
        for (const auto& pm : parameter_grid(e, 3)) {
            const MultiGerm f = instantiate(e, pm);
            const WilsonCheck w = wilson_check(f);
            if (w.status == WilsonCheck::Status::NotApplicable) continue;
            o.expect(w.status == WilsonCheck::Status::Consistent,
                     e.name + " (" + to_string(pm) + "): " + w.details);
        }
    }

    // tau = mu on the quasi-homogeneous ADE normal forms
    for (const auto& h : SimpleFunction::up_to(8, 1)) {
        std::vector<std::string> names = {"x", "y"};
        const Poly f = parse_poly(h.text(), names);
        o.expect(tjurina(f) == milnor(f) && milnor(f) == h.mu, h.name() + ": tau != mu");
    }

    // parser round-trip on the generated corpus
    std::size_t corpus = 0;
    for (const auto& e : entries())
        for (const auto& pm : parameter_grid(e, 3)) {
            const MultiGerm f = instantiate(e, pm);
            ++corpus;
            o.expect(parse_multigerm(format_multigerm(f)) == f, "round-trip fails on " + format_multigerm(f));
        }
    // outside the corpus first-appearance numbering may permute the variables
    for (int i = 0; i < 20; ++i) {
        const MultiGerm f = test_support::random_linear_change(G(pool[i % pool.size()].germ), rng);
        const std::string text = format_multigerm(f);
        o.expect(test_support::same_up_to_variable_order(f, parse_multigerm(text)), "round-trip fails on " + text);
    }

    // invariance under linear coordinate changes
    const char* samples[] = {"(x, y^3+x^2*y)", "{(x^3+y*x, y, z); (x, y^2+z^2, z)}", "(x, y, z^4+x*z+y^2*z^2)",
                             "{(x^2, y, z); (x^2+y^2+z^2, y, z); (x, y^2, z)}", "(x, y^2, y^5+x^2*y)"};
    for (int i = 0; i < 10; ++i) {
        const MultiGerm f = G(samples[i % 5]);
        const MultiGerm g = test_support::random_linear_change(f, rng);
        o.expect(multiplicity(g) == multiplicity(f) && ae_codim(g).value == ae_codim(f).value,
                 "invariants change under " + format_multigerm(g));
    }

    const double total = seconds_since(t);
    o.expect(total < 300.0, "total time " + std::to_string(total) + " s (limit 300 s)");
    detail = "20 stable instances, Wilson on atlas, ADE tau = mu, " + std::to_string(corpus) +
             " exact round-trips, 20 up to variable order, 10 coordinate changes, " + std::to_string(total) + " s";
    return o;
}

}  // namespace

int main() {
    bool all = true;
    std::string detail;
    auto run = [&](int number, const char* title, Outcome (*fn)(std::string&)) {
        Outcome o;
        try {
            o = fn(detail);
        } catch (const std::exception& e) {
            o.pass = false;
            o.failures.push_back(std::string("exception: ") + e.what());
            detail = "aborted";
        }
        print(number, title, o, detail);
        all = all && o.pass;
    };
    run(1, "monogerm table", criterion_monogerms);
    run(2, "multigerm table", criterion_multigerms);
    run(3, "augmentation-and-concatenation equality", criterion_augconc_equality);
    run(4, "gate soundness", criterion_gate_soundness);
    run(5, "property suites", criterion_properties);
    std::printf("criterion 6 (classification completeness): NOTE out of scope, not evaluated\n");
    return all ? 0 : 1;
}
