#include "germcalc/ring.hpp"

#include <algorithm>

#include "germcalc/error.hpp"
#include "germcalc/linalg.hpp"

namespace germcalc {

void StabilizationPolicy::validate() const {
    if (window < 1) throw ValidationError("stabilization window must be >= 1");
    if (d_max < 1) throw ValidationError("d_max must be >= 1");
    if (d0 && (*d0 < 1 || *d0 > d_max)) throw ValidationError("d0 must lie in [1, d_max]");
}

Stabilized stabilize(const StabilizationPolicy& policy, int default_d0,
                     const std::function<long(int)>& dim_at) {
    policy.validate();
    const int start = policy.d0 ? *policy.d0 : std::clamp(default_d0, 1, policy.d_max);
    std::vector<long> values;
    int run = 0;
    for (int d = start; d <= policy.d_max; ++d) {
        const long v = dim_at(d);
        run = (!values.empty() && values.back() == v) ? run + 1 : 1;
        values.push_back(v);
        if (run >= policy.window) return {v, d};
    }
    throw NotStabilized(std::move(values), policy.d_max);
}

MonomialIndex::MonomialIndex(std::size_t nvars, int max_degree)
    : max_degree_(max_degree), monomials_(monomials_up_to(nvars, max_degree)) {
    ranks_.reserve(monomials_.size());
    for (std::uint32_t i = 0; i < monomials_.size(); ++i) ranks_.emplace(monomials_[i], i);
}

std::uint32_t MonomialIndex::rank(const Monomial& m) const {
    auto it = ranks_.find(m);
    if (it == ranks_.end()) throw ValidationError("monomial outside truncation range");
    return it->second;
}

long truncated_quotient_dim(std::span<const Poly> generators, std::size_t nvars, int degree) {
    const MonomialIndex index(nvars, degree);
    EchelonBasis basis(index.size());
    for (const Poly& g : generators) {
        if (g.is_zero()) continue;
        if (g.nvars() != nvars) throw ValidationError("generator arity mismatch");
        const int ord = g.order();
        if (ord > degree) continue;
        const Poly jet = g.truncated(degree);
        for (const Monomial& shift : monomials_up_to(nvars, degree - ord)) {
            SparseRow row;
            for (const auto& [m, c] : jet.terms()) {
                if (m.degree() + shift.degree() > degree) continue;
                row.emplace_back(index.rank(m * shift), c);
            }
            normalize_row(row);
            basis.insert(std::move(row));
        }
    }
    return static_cast<long>(index.size() - basis.rank());
}

long quotient_dim(std::span<const Poly> generators, std::size_t nvars,
                  const StabilizationPolicy& policy) {
    std::vector<Poly> gens;
    for (const Poly& g : generators) {
        if (g.nvars() != nvars) throw ValidationError("generator arity mismatch");
        if (!g.is_zero()) gens.push_back(g);
    }
    if (gens.empty()) throw NotStabilized({}, policy.d_max);
    // The truncated dimensions are partial sums of the tangent-cone Hilbert
    // function, so two equal consecutive values mean the sum has terminated.
    return stabilize(policy, 1, [&](int d) { return truncated_quotient_dim(gens, nvars, d); }).value;
}

namespace {

std::vector<Poly> gradient(const Poly& f) {
    std::vector<Poly> out;
    for (std::size_t i = 0; i < f.nvars(); ++i) out.push_back(f.derivative(i));
    return out;
}

}  // namespace

long milnor(const Poly& f, const StabilizationPolicy& policy) {
    return quotient_dim(gradient(f), f.nvars(), policy);
}

long tjurina(const Poly& f, const StabilizationPolicy& policy) {
    std::vector<Poly> gens = gradient(f);
    gens.push_back(f);
    return quotient_dim(gens, f.nvars(), policy);
}

std::optional<std::vector<Rational>> quasi_homogeneous_weights(const Poly& f) {
    if (f.is_zero()) return std::nullopt;
    const std::size_t n = f.nvars();
    // Augmented system: one equation sum_i w_i a_i = 1 per term.
    std::vector<std::vector<Rational>> rows;
    for (const auto& [m, c] : f.terms()) {
        if (m.degree() == 0) return std::nullopt;
        std::vector<Rational> row(n + 1);
        for (std::size_t i = 0; i < n; ++i) row[i] = m[i];
        row[n] = 1;
        rows.push_back(std::move(row));
    }
    // Reduced row echelon form.
    std::vector<std::size_t> pivot_cols;
    std::size_t r = 0;
    for (std::size_t c = 0; c < n && r < rows.size(); ++c) {
        std::size_t sel = r;
        while (sel < rows.size() && sgn(rows[sel][c]) == 0) ++sel;
        if (sel == rows.size()) continue;
        std::swap(rows[r], rows[sel]);
        const Rational lead = rows[r][c];
        for (auto& v : rows[r]) v /= lead;
        for (std::size_t k = 0; k < rows.size(); ++k) {
            if (k == r || sgn(rows[k][c]) == 0) continue;
            const Rational fct = rows[k][c];
            for (std::size_t j = 0; j <= n; ++j) rows[k][j] -= fct * rows[r][j];
        }
        pivot_cols.push_back(c);
        ++r;
    }
    for (std::size_t k = r; k < rows.size(); ++k)
        if (sgn(rows[k][n]) != 0) return std::nullopt;  // inconsistent

    std::vector<bool> is_pivot(n, false);
    for (auto c : pivot_cols) is_pivot[c] = true;
    std::vector<bool> occurs(n, false);
    for (const auto& [m, c] : f.terms())
        for (std::size_t i = 0; i < n; ++i)
            if (m[i] > 0) occurs[i] = true;

    // Free weights are tried at a few common values; a positive solution
    // found this way is a certificate, a miss is reported as "no fit".
    for (const Rational& t : {Rational(1), Rational(1, 2), Rational(1, 3), Rational(1, 4), Rational(1, 6),
                             Rational(1, 12), Rational(2)}) {
        std::vector<Rational> w(n, t);
        for (std::size_t i = 0; i < n; ++i)
            if (!occurs[i]) w[i] = 1;
        for (std::size_t k = 0; k < pivot_cols.size(); ++k) {
            Rational v = rows[k][n];
            for (std::size_t j = 0; j < n; ++j)
                if (!is_pivot[j]) v -= rows[k][j] * w[j];
            w[pivot_cols[k]] = v;
        }
        if (std::all_of(w.begin(), w.end(), [](const Rational& x) { return sgn(x) > 0; })) return w;
    }
    return std::nullopt;
}

}  // namespace germcalc
