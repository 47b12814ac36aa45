#include "doctest.h"
#include "germcalc/error.hpp"
#include "germcalc/tangent.hpp"
#include "support.hpp"

using namespace germcalc;
using test_support::G;

TEST_CASE("stable germs have A_e-codimension 0") {
    for (const char* s : {"(x, y, z^2)", "(x, y, z^3+y*z)", "(x, y, z^4+x*z+y*z^2)", "(x, y^2, x*y)",
                          "{(x^2, y); (x, y^2)}", "{(x, y, 0); (x, 0, y); (0, x, y)}", "(x, y, z)"}) {
        CAPTURE(s);
        CHECK(ae_codim(G(s)).value == 0);
        CHECK(is_stable(G(s)));
    }
}

TEST_CASE("classical codimension-1 and -2 germs") {
    CHECK(ae_codim(G("(x, y^3+x^2*y)")).value == 1);   // lips
    CHECK(ae_codim(G("(x, y^3-x^2*y)")).value == 1);   // beaks
    CHECK(ae_codim(G("(x, y^4+x*y)")).value == 1);     // swallowtail in the plane
    CHECK(ae_codim(G("(x, y^2, y^3+x^2*y)")).value == 1);  // S_1
    CHECK(ae_codim(G("(x, y^2, y^5+x^2*y)")).value == 2);  // B_2
    CHECK(ae_codim(G("(x^2, x^3)")).value == 1);       // plane cusp
    CHECK(ae_codim(G("{(x^2, y); (x^2+y^3, y)}")).value == 2);
}

TEST_CASE("A-codimension and the Wilson relation") {
    const MultiGerm lips = G("(x, y^3+x^2*y)");
    const CodimResult a = a_codim(lips);
    const WilsonCheck w = wilson_check(lips);
    CHECK(w.status == WilsonCheck::Status::Consistent);
    CHECK(w.predicted_ae_codim == 1);
    CHECK(a.value == 1 + 2);
    CHECK(wilson_check(G("(x, y^2)")).status == WilsonCheck::Status::NotApplicable);
    CHECK(to_string(WilsonCheck::Status::Consistent) == "consistent");
}

TEST_CASE("normal-space basis completes the tangent space") {
    const MultiGerm f = G("(x, y, z^5+x*z+y^2*z^2+y*z^3)");
    const CodimResult r = ae_codim(f);
    CHECK(r.value == 2);
    REQUIRE(r.basis.size() == 2);
    CHECK(completes_tangent_space(f, TangentKind::Extended, r.degree_used, r.basis));
    std::vector<Section> partial(r.basis.begin(), r.basis.begin() + 1);
    CHECK_FALSE(completes_tangent_space(f, TangentKind::Extended, r.degree_used, partial));
}

TEST_CASE("truncated codimension is monotone in the degree") {
    const MultiGerm f = G("{(x^3+y*x, y, z); (x, y, z^3+y*z)}");
    long prev = 0;
    for (int d = 1; d <= 8; ++d) {
        const long c = truncated_codim(f, TangentKind::Extended, d);
        CHECK(c >= prev);
        prev = c;
    }
    CHECK(prev == 1);
}

TEST_CASE("non-finite germs raise NotStabilized") {
    StabilizationPolicy pol;
    pol.d_max = 9;
    CHECK_THROWS_AS(ae_codim(G("(x, x*y)"), pol), NotStabilized);
    try {
        ae_codim(G("(x, x*y)"), pol);
    } catch (const NotStabilized& e) {
        CHECK(e.d_max() == 9);
        CHECK_FALSE(e.values().empty());
    }
}

TEST_CASE("a germ of infinite codimension is reported unstable") {
    StabilizationPolicy pol;
    pol.d_max = 9;
    CHECK_FALSE(is_stable(G("{(x, y, 0); (x, 0, y); (x, y, y)}"), pol));
}
