#include "doctest.h"
#include "germcalc/error.hpp"
#include "germcalc/gates.hpp"
#include "germcalc/ops.hpp"
#include "germcalc/tangent.hpp"
#include "support.hpp"

using namespace germcalc;
using test_support::G;

namespace {

const char* kA2A3 = "{(x, y, z^3+y*z); (x^4+y*x+z*x^2, y, z)}";
const char* kFoldPentagerm = "{(x^2, y, z); (x, y^2, z); (x, y, z^2); (x^2+y+z, y, z); (x, y^2+x+z, z)}";
const char* kSextuplePoint =
    "{(x, y, z, 0); (x, y, 0, z); (x, 0, y, z); (0, x, y, z); (x, y, z, x+y+z); (x, y, z, x+2*y+3*z)}";
const char* kQuintuplePoint = "{(x, y, 0); (x, 0, y); (0, x, y); (x, y, x+y); (x, y, 2*x+3*y)}";
const char* kCrossCapTwoImmersions = "{(x, y^2, x*y); (x, y, 0); (x, 0, y)}";

Poly phi_of(const std::string& text) {
    std::vector<std::string> names;
    return parse_poly(text, names);
}

}  // namespace

TEST_CASE("Nishimura bound values") {
    CHECK(nishimura_bound(3, 3, 2) == Rational(13, 2));
    CHECK(nishimura_bound(2, 3, 1) == Rational(10, 3));
    CHECK(nishimura_bound(3, 3, 5) == Rational(19, 2));
    CHECK(nishimura_bound(3, 4, 6) == Rational(28, 5));
    CHECK(nishimura_bound(1, 2, 2) == Rational(4, 1));
    CHECK_THROWS_AS(nishimura_bound(3, 2, 1), UnsupportedDimensions);
    CHECK_THROWS_AS(nishimura_bound(1, 1, 2), UnsupportedDimensions);
}

TEST_CASE("Nishimura gate on the A2A3 bigerm") {
    const Verdict v = gate_nishimura(G(kA2A3));
    CHECK(v.kind == VerdictKind::NotSimple);
    REQUIRE(v.violated.has_value());
    CHECK(v.violated->lhs == 7);
    CHECK(v.violated->rhs == Rational(13, 2));
}

TEST_CASE("Nishimura gate on a fold pentagerm and a sextuple point") {
    const Verdict fold = gate_nishimura(G(kFoldPentagerm));
    CHECK(fold.kind == VerdictKind::NotSimple);
    CHECK(fold.violated->lhs == 10);
    CHECK(fold.violated->rhs == Rational(19, 2));

    const Verdict six = gate_nishimura(G(kSextuplePoint));
    CHECK(six.kind == VerdictKind::NotSimple);
    CHECK(six.violated->lhs == 6);
    CHECK(six.violated->rhs == Rational(28, 5));
}

TEST_CASE("Nishimura gate abstains below the bound and outside its range") {
    const Verdict cc = gate_nishimura(G("(x, y^2, x*y)"));
    CHECK(cc.kind == VerdictKind::Unknown);
    CHECK(gate_nishimura(G("(x, y, z^2+x^2)")).kind == VerdictKind::Unknown);
    CHECK(gate_nishimura(G("(x^2+y^2, x*y)")).kind == VerdictKind::Unknown);
}

TEST_CASE("branch count gate") {
    const Verdict v = gate_branch_count(G("{(x, y, z^3+y*z); (x^2, y, z); (x, y^2, z); (x, y, z^2)}"));
    CHECK(v.kind == VerdictKind::NotSimple);
    CHECK(v.violated->lhs == 4);
    CHECK(v.violated->rhs == 3);
    const Verdict ok = gate_branch_count(G("{(x^2, y, z); (x, y^2, z); (x, y, z^2); (x^2+y+z, y, z)}"));
    CHECK(ok.kind == VerdictKind::Unknown);
    CHECK(gate_branch_count(G("(x, y^2, x*y)")).kind == VerdictKind::Unknown);
}

TEST_CASE("tau pairing finds a zero-dimensional stratum next to a codimension-2 one") {
    const Verdict q5 = gate_tau_pairing(G(kQuintuplePoint));
    CHECK(q5.kind == VerdictKind::NotSimple);
    CHECK(q5.violated->lhs == 5);
    CHECK(q5.violated->rhs == 4);
    CHECK(gate_tau_pairing(G(kCrossCapTwoImmersions)).kind == VerdictKind::NotSimple);
    CHECK(gate_tau_pairing(G(kA2A3)).kind == VerdictKind::NotSimple);
}

TEST_CASE("tau pairing abstains where it does not apply") {
    CHECK(gate_tau_pairing(G("{(x^3+y*x, y, z); (x, y, z^3+y*z)}")).kind == VerdictKind::Unknown);
    CHECK(gate_tau_pairing(G("{(x^2, y); (x, y^2); (x^2+y, y)}")).kind == VerdictKind::Unknown);
    CHECK(gate_tau_pairing(G("(x, y, z^2)")).kind == VerdictKind::Unknown);
}

TEST_CASE("primitive germ plus a fold") {
    const MultiGerm h = G("{(x^5+y*x+z*x^2, y, z); (x, y, z^2+y)}");
    const Verdict plain = gate_primitive_plus_morse(h, {}, {});
    CHECK(plain.kind == VerdictKind::Unknown);
    CHECK(plain.unverified_hypotheses == std::vector<std::string>{"primitive"});
    const Verdict v = gate_primitive_plus_morse(h, {}, {"primitive"});
    CHECK(v.kind == VerdictKind::NotSimple);
    CHECK(v.asserted_hypotheses == std::vector<std::string>{"primitive"});
}

TEST_CASE("primitive germ plus a fold or immersion in low dimensions is left open") {
    CHECK(gate_primitive_plus_morse(G("{(x^4+y*x, y); (x, y^2+x)}"), {}, {"primitive"}).kind ==
          VerdictKind::Unknown);
    CHECK(gate_primitive_plus_morse(G("{(u, v, x^3+u*x, x^4+v*x); (u, u, v, x)}"), {}, {"primitive"}).kind ==
          VerdictKind::Unknown);
}

TEST_CASE("augmentation and concatenation gate") {
    const Verdict s = gate_augconc(1, phi_of("x^3"), {"dz_condition", "augmentation_simple"});
    CHECK(s.kind == VerdictKind::Simple);
    const Verdict open = gate_augconc(1, phi_of("x^3"), {"dz_condition"});
    CHECK(open.kind == VerdictKind::Unknown);
    CHECK(open.unverified_hypotheses == std::vector<std::string>{"augmentation_simple"});

    const Verdict b2 = gate_augconc(2, phi_of("x^2"), {"transversal", "dz_condition", "augmentation_simple"});
    CHECK(b2.kind == VerdictKind::NotSimple);
    CHECK(gate_augconc(2, phi_of("x^2"), {}).kind == VerdictKind::Unknown);

    const Verdict nonqh = gate_augconc(1, phi_of("z^2+z^3"), {"dz_condition", "augmentation_simple"});
    CHECK(nonqh.kind == VerdictKind::Unknown);
    CHECK(gate_augconc(0, phi_of("z^2"), {}).kind == VerdictKind::Unknown);
    CHECK_THROWS_AS(check_assertions({"bogus"}), ValidationError);
}

TEST_CASE("augmentation next to a cuspidal edge") {
    const Verdict v = gate_aug_cusp(G("(x^4+y*x+z^2*x, y, z)"), PartnerKind::CuspidalEdge);
    CHECK(v.kind == VerdictKind::NotSimple);
    CHECK(v.violated->lhs == 4);
    CHECK(v.violated->rhs == Rational(7, 2));
    CHECK(gate_aug_cusp(G("(x^3+y^2*x+z^2*x, y, z)"), PartnerKind::CuspidalEdge).kind == VerdictKind::Unknown);
    CHECK(gate_aug_cusp(G("(x^3+y^2*x+z^2*x, y, z)"), PartnerKind::TwoFolds).kind == VerdictKind::Unknown);

    const Verdict imm = gate_aug_cusp(G("(x, y, z^3+x*z, z^4+y^2*z)"), PartnerKind::TwoImmersions);
    CHECK(imm.kind == VerdictKind::NotSimple);
    CHECK(imm.violated->rhs == Rational(12, 5));
    CHECK(gate_aug_cusp(G("(x, y^2, y^3+x^2*y)"), PartnerKind::TwoImmersions).kind == VerdictKind::Unknown);
    CHECK(gate_aug_cusp(G("(x, y^2, y^3+x^2*y)"), PartnerKind::CuspidalEdge).kind == VerdictKind::Unknown);
}

TEST_CASE("report: any NotSimple wins") {
    const SimplicityReport rep = simplicity_report(G(kA2A3));
    CHECK(rep.verdict.kind == VerdictKind::NotSimple);
    CHECK(rep.verdict.gate == "nishimura");
    REQUIRE(rep.trace.size() == 7);
    CHECK(rep.trace[0].gate == "nishimura");
    CHECK(rep.trace[6].gate == "atlas");
}

TEST_CASE("report: catalog match gives Simple with an unverified hypothesis") {
    const SimplicityReport rep = simplicity_report(G("{(x^3+y*x, y, z); (x, y, z^3+y*z)}"));
    CHECK(rep.verdict.kind == VerdictKind::Simple);
    CHECK(rep.verdict.gate == "atlas");
    CHECK_FALSE(rep.verdict.unverified_hypotheses.empty());
    REQUIRE(rep.atlas_matches.size() == 1);
}

TEST_CASE("report: the cross-cap is left unknown") {
    const SimplicityReport rep = simplicity_report(G("(x, y^2, x*y)"));
    CHECK(rep.verdict.kind == VerdictKind::Unknown);
    CHECK_FALSE(rep.verdict.unverified_hypotheses.empty());
}

TEST_CASE("report: augmentation data feeds the augconc gate") {
    ReportOptions ro;
    ro.assertions = {"transversal", "dz_condition", "augmentation_simple"};
    ro.augconc = AugconcContext{2, phi_of("z^2")};
    const MultiGerm h = G("{(x^3+y^2*x+z^2*x, y, z); (x, y^2, z); (x, y, z^2)}");
    const SimplicityReport rep = simplicity_report(h, {}, ro);
    CHECK(rep.verdict.kind == VerdictKind::NotSimple);
    CHECK(rep.verdict.gate == "augconc");
}

TEST_CASE("report: unknown assertion names are rejected") {
    ReportOptions ro;
    ro.assertions = {"primitve"};
    CHECK_THROWS_AS(simplicity_report(G("(x, y, z^2)"), {}, ro), ValidationError);
}
