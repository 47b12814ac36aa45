#pragma once

#include <string>
#include <vector>

#include "germcalc/germ.hpp"
#include "germcalc/ring.hpp"

namespace germcalc {

/// Element of theta(f): one p-tuple of polynomials per branch.
struct Section {
    std::vector<std::vector<Poly>> entries;  // [branch][component]

    friend bool operator==(const Section& a, const Section& b) { return a.entries == b.entries; }
};

struct CodimResult {
    long value = 0;
    int degree_used = 0;
    /// Monomial sections spanning the normal space at `degree_used`,
    /// graded-lex-least representatives.
    std::vector<Section> basis;
};

enum class TangentKind {
    /// theta(f) / (tf(theta_n) + wf(theta_p))
    Extended,
    /// m_n theta(f) / (tf(m_n theta_n) + wf(m_p theta_p))
    Plain,
};

/// Dimension of the normal space modulo sections of degree > `degree`.
/// When `basis` is non-null it receives the monomial basis of the quotient.
long truncated_codim(const MultiGerm& f, TangentKind kind, int degree,
                     std::vector<Section>* basis = nullptr);

/// True when every section in `extra` together with the tangent generators
/// spans the whole truncated space at `degree`.
bool completes_tangent_space(const MultiGerm& f, TangentKind kind, int degree,
                             const std::vector<Section>& extra);

/// A_e-codimension. Default starting degree m_0(f) + 4.
CodimResult ae_codim(const MultiGerm& f, const StabilizationPolicy& policy = {});

/// A-codimension. Same engine and defaults as ae_codim.
CodimResult a_codim(const MultiGerm& f, const StabilizationPolicy& policy = {});

/// False as soon as any truncated codimension is positive, even if the
/// computation does not settle.
bool is_stable(const MultiGerm& f, const StabilizationPolicy& policy = {});

struct WilsonCheck {
    enum class Status { Consistent, Inconsistent, NotApplicable };

    Status status = Status::NotApplicable;
    long ae_codim = 0;
    long a_codim = 0;
    /// a_codim + r(p - n) - p; only meaningful when applicable.
    long predicted_ae_codim = 0;
    std::string details;
};

/// Compares the two engines through A_e-cod = A-cod + r(p - n) - p.
/// Not applicable to stable germs.
WilsonCheck wilson_check(const MultiGerm& f, const StabilizationPolicy& policy = {});

std::string to_string(WilsonCheck::Status s);

}  // namespace germcalc
