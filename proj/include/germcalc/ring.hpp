#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <unordered_map>
#include <vector>

#include "germcalc/poly.hpp"

namespace germcalc {

/// Controls the truncation-degree search used by every local-algebra and
/// tangent-space dimension.
struct StabilizationPolicy {
    /// Starting degree; when empty each operation picks its own default.
    std::optional<int> d0;
    /// Number of consecutive equal values that counts as stable.
    int window = 2;
    int d_max = 16;

    void validate() const;
};

struct Stabilized {
    long value = 0;
    /// Degree at which the stable run was confirmed.
    int degree = 0;
};

/// Evaluates `dim_at(d)` for d = start, start+1, ... until `window`
/// consecutive values agree. Throws NotStabilized past `d_max`.
Stabilized stabilize(const StabilizationPolicy& policy, int default_d0,
                     const std::function<long(int)>& dim_at);

/// Dense ranking of the monomials of degree <= d in n variables, ascending grlex.
class MonomialIndex {
public:
    MonomialIndex(std::size_t nvars, int max_degree);

    std::size_t size() const { return monomials_.size(); }
    int max_degree() const { return max_degree_; }
    const Monomial& at(std::size_t rank) const { return monomials_[rank]; }
    /// Rank of m; m must have degree <= max_degree.
    std::uint32_t rank(const Monomial& m) const;

private:
    int max_degree_;
    std::vector<Monomial> monomials_;
    std::unordered_map<Monomial, std::uint32_t, MonomialHash> ranks_;
};

/// dim O_n / (I + m^{d+1}) for one fixed truncation degree d.
long truncated_quotient_dim(std::span<const Poly> generators, std::size_t nvars, int degree);

/// dim O_n / I for the ideal generated by `generators`, computed on jets of
/// increasing degree until stable. Zero generators are skipped.
long quotient_dim(std::span<const Poly> generators, std::size_t nvars,
                  const StabilizationPolicy& policy = {});

/// Milnor number: dimension of the local algebra of the Jacobian ideal.
long milnor(const Poly& f, const StabilizationPolicy& policy = {});

/// Tjurina number: dimension of O_n / (f, df).
long tjurina(const Poly& f, const StabilizationPolicy& policy = {});

/// Positive rational weights making every term of f weighted-homogeneous of
/// degree 1, when such a fit is found. Variables not occurring in f get 1.
std::optional<std::vector<Rational>> quasi_homogeneous_weights(const Poly& f);

inline bool is_quasi_homogeneous(const Poly& f) { return quasi_homogeneous_weights(f).has_value(); }

}  // namespace germcalc
