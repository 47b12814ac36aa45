#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "germcalc/germ.hpp"
#include "germcalc/ring.hpp"

namespace germcalc {

/// An s-parameter unfolding F(x, u) = (f_u(x), u) of a multigerm f.
///
/// Coordinates: the parameters are the last s source variables of `total`
/// and its last s components are exactly those variables.
class Unfolding {
public:
    /// Reads the base off `total` by setting the parameters to zero.
    static Unfolding from_total(MultiGerm total, std::size_t s = 1);

    /// Checks that `total` restricts to `base` and passes the parameters through.
    Unfolding(MultiGerm base, MultiGerm total, std::size_t s);

    const MultiGerm& base() const { return base_; }
    const MultiGerm& total() const { return total_; }
    std::size_t parameter_count() const { return s_; }
    /// Index of parameter j among the source variables (and components) of total.
    std::size_t parameter_index(std::size_t j) const { return total_.source_dim() - s_ + j; }

private:
    struct Trusted {};
    Unfolding(Trusted, MultiGerm base, MultiGerm total, std::size_t s)
        : base_(std::move(base)), total_(std::move(total)), s_(s) {}
    static MultiGerm restrict_to_base(const MultiGerm& total, std::size_t s);

    MultiGerm base_;
    MultiGerm total_;
    std::size_t s_;
};

/// How constructions treat the stability requirement on their inputs.
struct ConstructionOptions {
    /// Skip the tangent-space stability checks on supplied stable pieces.
    bool unchecked = false;
    StabilizationPolicy policy;
};

/// A_{F,g}(f): the parameter of U is replaced by g(z) and the q variables of g
/// are appended as pass-through components. `g_vars` names the variables of
/// g; names clashing with the base are renamed.
MultiGerm augment(const Unfolding& u, const Poly& g, std::vector<std::string> g_vars = {},
                  const ConstructionOptions& options = {});

/// {F, g} with g the prism (X, v) -> (X, sum v^2), or the immersion
/// X -> (X, 0) when the total has n = p - 1.
MultiGerm monic_concat(const Unfolding& u, const ConstructionOptions& options = {});

/// Branches (X, y, u) -> (f_u(y), u, X) and (x, Y, u) -> (Y, u, g_u(x)).
/// Both bases must have the same n - p.
MultiGerm binary_concat(const Unfolding& u, const Unfolding& v, const ConstructionOptions& options = {});

/// {F, Id_{p-s} x gbar}, with gbar : (K^{n-p+s}, T) -> (K^s, 0) acting on the
/// last n - p + s source variables of F.
MultiGerm generalised_concat(const Unfolding& u, const MultiGerm& gbar, const ConstructionOptions& options = {});

/// {A_{F,phi}(f), fold or immersion}, the fold acting along the new variable.
/// phi must be a polynomial in one variable.
MultiGerm sim_aug_concat(const Unfolding& u, const Poly& phi, std::vector<std::string> phi_vars = {},
                         const ConstructionOptions& options = {});

/// Lower bound cod_f (tau_phi + 1) for the A_e-codimension of
/// sim_aug_concat; equality holds for quasi-homogeneous phi under the
/// lifting condition on vector fields.
long predicted_codim_augconc(long cod_f, long tau_phi);

}  // namespace germcalc
