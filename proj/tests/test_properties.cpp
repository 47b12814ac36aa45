#include <algorithm>
#include <numeric>
#include <random>

#include "doctest.h"
#include "germcalc/atlas.hpp"
#include "germcalc/ring.hpp"
#include "germcalc/tangent.hpp"
#include "support.hpp"

using namespace germcalc;
using test_support::G;

namespace {

struct StableSample {
    const char* germ;
    std::vector<int> ks;
};

// Stable corank-1 multigerms with their A-type, written down by hand.
const std::vector<StableSample>& stable_pool() {
    static const std::vector<StableSample> pool = {
        {"(x, y, z^2)", {1}},
        {"(x, y, z^3+y*z)", {2}},
        {"(x, y, z^4+x*z+y*z^2)", {3}},
        {"{(x^2, y, z); (x, y^2, z)}", {1, 1}},
        {"{(x^2, y, z); (x, y^2, z); (x, y, z^2)}", {1, 1, 1}},
        {"{(x, y, z^3+y*z); (x^2, y, z)}", {2, 1}},
        {"{(x, y, z); (x^2, y, z)}", {1, 0}},
        {"(x, y^2, x*y)", {1}},
        {"{(x, y, 0); (x, 0, y)}", {0, 0}},
        {"{(x, y, 0); (x, 0, y); (0, x, y)}", {0, 0, 0}},
        {"{(x^2, y); (x, y^2)}", {1, 1}},
        {"(x, y^3+x*y)", {2}},
    };
    return pool;
}

}  // namespace

TEST_CASE("multiplicity equals sum of k_i plus r on random stable A-type instances") {
    std::mt19937 rng(31337);
    const auto& pool = stable_pool();
    for (int trial = 0; trial < 20; ++trial) {
        const StableSample& s = pool[trial % pool.size()];
        const MultiGerm f = test_support::random_linear_change(G(s.germ), rng);
        CAPTURE(s.germ);
        CAPTURE(format_multigerm(f));
        CHECK(ae_codim(f).value == 0);
        const long expected = std::accumulate(s.ks.begin(), s.ks.end(), 0L) + static_cast<long>(s.ks.size());
        CHECK(multiplicity(f) == expected);
        AType want(s.ks);
        CHECK(recognize_type(f) == want);
    }
}

TEST_CASE("linear coordinate changes preserve m0 and A_e-codimension") {
    std::mt19937 rng(4242);
    const std::vector<std::string> samples = {
        "(x, y^3+x^2*y)",
        "{(x^3+y*x, y, z); (x, y^2+z^2, z)}",
        "(x, y, z^4+x*z+y^2*z^2)",
        "{(x^2, y, z); (x^2+y^2+z^2, y, z); (x, y^2, z)}",
        "(x, y^2, y^5+x^2*y)",
    };
    for (int trial = 0; trial < 10; ++trial) {
        const MultiGerm f = G(samples[trial % samples.size()]);
        const MultiGerm g = test_support::random_linear_change(f, rng);
        CAPTURE(format_multigerm(f));
        CAPTURE(format_multigerm(g));
        CHECK(multiplicity(g) == multiplicity(f));
        CHECK(ae_codim(g).value == ae_codim(f).value);
    }
}

TEST_CASE("unimodular generator changes leave quotient dimensions unchanged") {
    std::vector<std::string> xy = {"x", "y"};
    auto P = [&](const char* s) { return test_support::P(s, xy); };
    const std::vector<Poly> gens = {P("x^3+y^2"), P("x*y")};
    const std::vector<Poly> mixed = {gens[0] + gens[1] * P("x+y"), gens[1] * Rational(-3)};
    CHECK(quotient_dim(gens, 2) == quotient_dim(mixed, 2));
    const std::vector<Poly> swapped = {gens[1], gens[0] + gens[1]};
    CHECK(quotient_dim(gens, 2) == quotient_dim(swapped, 2));
}

TEST_CASE("branch order does not change invariants") {
    const MultiGerm f = G("{(x^2, y, z); (x^2+y^2+z^3, y, z); (x, y^2, z)}");
    const long cod = ae_codim(f).value;
    std::vector<std::size_t> order = {0, 1, 2};
    while (std::next_permutation(order.begin(), order.end())) {
        const MultiGerm g = f.select(order);
        CHECK(ae_codim(g).value == cod);
        CHECK(multiplicity(g) == multiplicity(f));
    }
}

TEST_CASE("quasi-homogeneous simple functions have tau = mu") {
    std::vector<std::string> xy = {"x", "y"};
    for (const auto& h : SimpleFunction::up_to(8, 1)) {
        CAPTURE(h.name());
        std::vector<std::string> names = xy;
        const Poly f = parse_poly(h.text(), names);
        CHECK(is_quasi_homogeneous(f));
        CHECK(milnor(f) == h.mu);
        CHECK(tjurina(f) == h.mu);
    }
}

TEST_CASE("the normal-space basis completes the tangent space and is minimal") {
    for (const char* s : {"(x, y^3+x^2*y)", "{(x^3+y*x, y, z); (x^3+z*x, y, z)}", "(x, y^2, y^5+x^2*y)",
                          "{(x^2, y); (x^2+y^3, y)}"}) {
        CAPTURE(s);
        const MultiGerm f = G(s);
        const CodimResult r = ae_codim(f);
        CHECK(static_cast<long>(r.basis.size()) == r.value);
        CHECK(completes_tangent_space(f, TangentKind::Extended, r.degree_used, r.basis));
        for (std::size_t drop = 0; drop < r.basis.size(); ++drop) {
            auto fewer = r.basis;
            fewer.erase(fewer.begin() + static_cast<long>(drop));
            CHECK_FALSE(completes_tangent_space(f, TangentKind::Extended, r.degree_used, fewer));
        }
    }
}

TEST_CASE("Wilson relation on non-stable atlas instances with parameters up to 2") {
    for (const auto& e : entries()) {
        for (const auto& pm : parameter_grid(e, 2)) {
            if (e.expected_codim(pm) == 0) continue;
            const MultiGerm f = instantiate(e, pm);
            CAPTURE(e.name);
            CAPTURE(to_string(pm));
            const WilsonCheck w = wilson_check(f);
            CHECK(w.status == WilsonCheck::Status::Consistent);
        }
    }
}
