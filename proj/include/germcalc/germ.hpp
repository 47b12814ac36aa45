#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "germcalc/poly.hpp"
#include "germcalc/ring.hpp"

namespace germcalc {

/// One branch f_i : (K^n, 0) -> (K^p, 0), already translated to the origin.
struct Branch {
    std::vector<Poly> components;
    std::optional<std::string> label;
};

/// Multigerm f = {f_1, ..., f_r} : (K^n, S) -> (K^p, 0).
///
/// Every branch uses the same source variable names; each branch has its own
/// source point, so the names are local coordinates shared only for display.
class MultiGerm {
public:
    /// Validates: r >= 1, equal arities, components vanish at the origin,
    /// n >= p - 1.
    MultiGerm(std::vector<std::string> var_names, std::vector<Branch> branches);

    /// Convenience: a single-branch germ.
    static MultiGerm monogerm(std::vector<std::string> var_names, std::vector<Poly> components);

    std::size_t source_dim() const { return var_names_.size(); }
    std::size_t target_dim() const { return p_; }
    std::size_t branch_count() const { return branches_.size(); }
    const std::vector<std::string>& var_names() const { return var_names_; }
    const std::vector<Branch>& branches() const { return branches_; }
    const Branch& branch(std::size_t i) const { return branches_.at(i); }

    /// Sub-multigerm made of the listed branches, in the given order.
    MultiGerm select(const std::vector<std::size_t>& indices) const;

    friend bool operator==(const MultiGerm& a, const MultiGerm& b);

private:
    std::vector<std::string> var_names_;
    std::size_t p_ = 0;
    std::vector<Branch> branches_;
};

/// Default coordinate names: x, y, z for n <= 3, else x1 ... xn.
std::vector<std::string> default_var_names(std::size_t n);

/// Label A_{k_1,...,k_r} with k_1 >= ... >= k_r.
struct AType {
    std::vector<int> ks;

    AType() = default;
    explicit AType(std::vector<int> ks);

    std::size_t branch_count() const { return ks.size(); }
    int sum() const;
    /// "A_2", "A_{2,1}", ...
    std::string to_string() const;

    friend bool operator==(const AType& a, const AType& b) { return a.ks == b.ks; }
};

/// Rank defect of the linear part: min(n, p) - rank(df(0)).
int corank(const std::vector<Poly>& components, std::size_t nvars);
int corank(const MultiGerm& f, std::size_t branch);

long branch_multiplicity(const MultiGerm& f, std::size_t branch, const StabilizationPolicy& policy = {});

/// m_0(f) = sum over branches of dim O_n / f_i^*(m_p).
long multiplicity(const MultiGerm& f, const StabilizationPolicy& policy = {});

/// Morin type of each branch, k_i = m_0(f_i) - 1. Throws NotCorankOne.
AType recognize_type(const MultiGerm& f, const StabilizationPolicy& policy = {});

/// Dimension of the analytic stratum of a stable germ of type t.
/// Equidimensional branches have stratum codimension k_i, branches with
/// p = n + 1 have 2k_i + 1. Throws NotStableType when the codimensions
/// exceed p and UnsupportedDimensions outside n = p, n = p - 1.
int stratum_dim(const AType& t, std::size_t n, std::size_t p);

}  // namespace germcalc
