#pragma once

#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "germcalc/atlas.hpp"
#include "germcalc/germ.hpp"
#include "germcalc/rational.hpp"
#include "germcalc/ring.hpp"

namespace germcalc {

enum class VerdictKind { Simple, NotSimple, Unknown };

/// "simple", "not_simple", "unknown".
std::string to_string(VerdictKind k);

/// The inequality a NotSimple verdict found violated: lhs > rhs.
struct Inequality {
    std::string lhs_label;
    Rational lhs;
    std::string rhs_label;
    Rational rhs;
};

struct Verdict {
    VerdictKind kind = VerdictKind::Unknown;
    /// Gate that produced the verdict, e.g. "nishimura".
    std::string gate;
    /// The result applied, or why the gate abstained.
    std::string rule;
    std::vector<std::pair<std::string, Rational>> evidence;
    std::optional<Inequality> violated;
    /// Hypotheses the caller asserted and the engine took on trust.
    std::vector<std::string> asserted_hypotheses;
    /// Hypotheses that are neither checked nor asserted.
    std::vector<std::string> unverified_hypotheses;
};

/// Named hypotheses a caller can vouch for: "primitive", "dz_condition",
/// "augmentation_simple", "transversal".
using Assertions = std::set<std::string>;

const std::vector<std::string>& known_assertions();

/// Throws ValidationError on an unknown assertion name.
void check_assertions(const Assertions& a);

/// (p^2 + (n - 1) r) / (n (p - n) + n - 1). Requires n <= p and np != 1.
Rational nishimura_bound(long n, long p, long r);

/// NotSimple when m_0(f) exceeds the Nishimura bound.
Verdict gate_nishimura(const MultiGerm& f, const StabilizationPolicy& policy = {});

/// Searches branch bipartitions {fs, gs} with both halves stable: NotSimple
/// when fs has zero-dimensional stratum and gs has stratum of dimension
/// p - 2, or gs is neither a Morse prism nor an immersion. Only for
/// n = p >= 3 and n = p - 1; exhaustive up to 8 branches.
Verdict gate_tau_pairing(const MultiGerm& f, const StabilizationPolicy& policy = {});

/// Equidimensional A-type: NotSimple when the number of non-submersive
/// branches exceeds n - k_1 + 2.
Verdict gate_branch_count(const MultiGerm& f, const StabilizationPolicy& policy = {});

/// f = {f_0, fold} (n = p > 2) or {f_0, immersion} (n = p - 1 > 3) with
/// f_0 of A_e-codimension 1 (checked) and primitive (asserted): NotSimple.
Verdict gate_primitive_plus_morse(const MultiGerm& f, const StabilizationPolicy& policy,
                                  const Assertions& assertions);

/// Simultaneous augmentation and concatenation of a base of A_e-codimension
/// `f_base_cod` with augmenting function phi.
Verdict gate_augconc(long f_base_cod, const Poly& phi, const Assertions& assertions);

enum class PartnerKind { CuspidalEdge, TwoFolds, TwoImmersions };

/// Multiplicity test for {f_aug, g} with g a cuspidal edge or two
/// transverse folds (n = p), or two transverse immersions (n = p - 1).
Verdict gate_aug_cusp(const MultiGerm& f_aug, PartnerKind partner, const StabilizationPolicy& policy = {});

/// Context for the augmentation-and-concatenation gate, which cannot be read
/// off the germ itself.
struct AugconcContext {
    long base_codim = 0;
    Poly phi;
};

struct ReportOptions {
    Assertions assertions;
    std::optional<AugconcContext> augconc;
};

struct SimplicityReport {
    Verdict verdict;
    /// One verdict per gate, in the fixed gate order.
    std::vector<Verdict> trace;
    std::vector<AtlasMatch> atlas_matches;
};

/// Runs every gate and the atlas lookup. Any NotSimple wins; Simple comes
/// only from an atlas match or the augmentation-and-concatenation gate.
SimplicityReport simplicity_report(const MultiGerm& f, const StabilizationPolicy& policy = {},
                                   const ReportOptions& options = {});

}  // namespace germcalc
