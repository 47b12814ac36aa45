#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "germcalc/germ.hpp"
#include "germcalc/ring.hpp"

namespace germcalc {

/// Simple function germ in two variables x, y: A_mu (mu >= 0, A_0 regular),
/// D_mu (mu >= 4), E_6, E_7, E_8.
struct SimpleFunction {
    char family = 'A';
    int mu = 0;

    /// "A3", "D5", "E6".
    std::string name() const;
    /// Normal form in x, y as germ-expression text, e.g. "y^2+x^4".
    std::string text() const;
    /// Parses a name like "A3"; nullopt when it is not a simple function.
    static std::optional<SimpleFunction> from_name(std::string_view name);
    /// Every simple function with min_mu <= mu <= max_mu, ordered by mu then family.
    static std::vector<SimpleFunction> up_to(int max_mu, int min_mu = 0);

    friend bool operator==(const SimpleFunction&, const SimpleFunction&) = default;
};

using ParamValue = std::variant<long, SimpleFunction>;
using ParamMap = std::map<std::string, ParamValue>;

/// "k=2", "h=A3"; empty for parameterless rows.
std::string to_string(const ParamMap& params);

struct AtlasParam {
    enum class Kind { Integer, Function };

    std::string name;
    Kind kind = Kind::Integer;
    /// Lower bound; for function parameters it bounds the Milnor number.
    long min = 1;
};

/// One row of a normal-form table.
///
/// The template is germ-expression text where "[expr]" is an integer
/// expression in the integer parameters and a function parameter appears as
/// a placeholder variable that is substituted after parsing.
struct AtlasEntry {
    std::string name;
    /// "monogerm" or "multigerm".
    std::string table;
    /// K-orbit label of the row, e.g. "A1A2"; the row name for monogerms.
    std::string k_orbit;
    std::string template_text;
    /// Integer expression; mu(h) is the Milnor number of a function parameter.
    std::string codim_formula;
    std::vector<AtlasParam> params;
    std::string provenance;
    /// Non-empty when a real sign choice was fixed to +.
    std::string sign_note;

    long expected_codim(const ParamMap& params) const;
    /// Throws ValidationError when a parameter is missing or out of range.
    void check_params(const ParamMap& params) const;
};

/// The fixed catalog, monogerm rows first, in table order.
const std::vector<AtlasEntry>& entries();

/// Throws ValidationError for an unknown name.
const AtlasEntry& entry(std::string_view name);

MultiGerm instantiate(const AtlasEntry& e, const ParamMap& params);
MultiGerm instantiate(std::string_view name, const ParamMap& params);

/// Every admissible parameter choice with integer values <= cap and
/// function parameters of Milnor number <= cap.
std::vector<ParamMap> parameter_grid(const AtlasEntry& e, long cap);

struct VerifyRow {
    std::string name;
    ParamMap params;
    std::string germ;
    std::optional<long> computed;
    long expected = 0;
    bool match = false;
    int degree_used = 0;
    double seconds = 0.0;
    /// Set when the computation failed, e.g. did not stabilize.
    std::string error;
};

struct VerifyReport {
    std::vector<VerifyRow> rows;

    std::size_t matches() const;
    bool all_match() const { return matches() == rows.size(); }
};

VerifyRow verify(const AtlasEntry& e, const ParamMap& params, const StabilizationPolicy& policy = {});

/// verify over parameter_grid(e, cap) for every entry, in catalog order.
VerifyReport verify_all(long cap, const StabilizationPolicy& policy = {});

struct AtlasMatch {
    const AtlasEntry* entry = nullptr;
    ParamMap params;
};

/// Invariants used for matching.
struct GermInvariants {
    std::size_t n = 0;
    std::size_t p = 0;
    std::size_t r = 0;
    AType type;
    long m0 = 0;
    long ae_codim = 0;
};

GermInvariants invariants_for_lookup(const MultiGerm& f, const StabilizationPolicy& policy = {});

/// Every (entry, params) whose instantiation has the same n, p, r, A-type,
/// m_0 and A_e-codimension as f. For fold pairs written as
/// {(x, y, z^2); (x, y, z^2 + h(x, y))} the Milnor number and Hessian rank of
/// h further restrict the candidates. Throws NotCorankOne.
std::vector<AtlasMatch> lookup(const MultiGerm& f, const StabilizationPolicy& policy = {});

/// Self-describing JSON document with every entry of the catalog.
std::string export_catalog_json();

}  // namespace germcalc
