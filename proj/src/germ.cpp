#include "germcalc/germ.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

#include "germcalc/error.hpp"
#include "germcalc/linalg.hpp"

namespace germcalc {

MultiGerm::MultiGerm(std::vector<std::string> var_names, std::vector<Branch> branches)
    : var_names_(std::move(var_names)), branches_(std::move(branches)) {
    if (branches_.empty()) throw ValidationError("a multigerm needs at least one branch");
    const std::size_t n = var_names_.size();
    if (n == 0) throw ValidationError("source dimension must be positive");
    p_ = branches_.front().components.size();
    if (p_ == 0) throw ValidationError("target dimension must be positive");
    for (std::size_t i = 0; i < branches_.size(); ++i) {
        const auto& b = branches_[i];
        if (b.components.size() != p_)
            throw ValidationError("branch arity mismatch: branch " + std::to_string(i + 1) + " has " +
                                  std::to_string(b.components.size()) + " components, expected " +
                                  std::to_string(p_));
        for (const Poly& c : b.components) {
            if (c.nvars() != n) throw ValidationError("component variable count mismatch");
            if (sgn(c.constant_term()) != 0)
                throw ValidationError("branch " + std::to_string(i + 1) +
                                      " has a component with nonzero constant term");
        }
    }
    if (n + 1 < p_) throw ValidationError("source dimension must satisfy n >= p - 1");
}

MultiGerm MultiGerm::monogerm(std::vector<std::string> var_names, std::vector<Poly> components) {
    return MultiGerm(std::move(var_names), {Branch{std::move(components), std::nullopt}});
}

MultiGerm MultiGerm::select(const std::vector<std::size_t>& indices) const {
    std::vector<Branch> out;
    for (auto i : indices) out.push_back(branches_.at(i));
    return MultiGerm(var_names_, std::move(out));
}

bool operator==(const MultiGerm& a, const MultiGerm& b) {
    if (a.var_names_ != b.var_names_ || a.branches_.size() != b.branches_.size()) return false;
    for (std::size_t i = 0; i < a.branches_.size(); ++i)
        if (a.branches_[i].components != b.branches_[i].components) return false;
    return true;
}

std::vector<std::string> default_var_names(std::size_t n) {
    if (n <= 3) {
        static const char* xyz[] = {"x", "y", "z"};
        return {xyz, xyz + n};
    }
    std::vector<std::string> out;
    for (std::size_t i = 1; i <= n; ++i) out.push_back("x" + std::to_string(i));
    return out;
}

AType::AType(std::vector<int> k) : ks(std::move(k)) {
    for (int v : ks)
        if (v < 0) throw ValidationError("A-type indices must be non-negative");
    std::sort(ks.begin(), ks.end(), std::greater<>());
}

int AType::sum() const { return std::accumulate(ks.begin(), ks.end(), 0); }

std::string AType::to_string() const {
    if (ks.size() == 1) return "A_" + std::to_string(ks.front());
    std::string s = "A_{";
    for (std::size_t i = 0; i < ks.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(ks[i]);
    }
    return s + "}";
}

int corank(const std::vector<Poly>& components, std::size_t nvars) {
    std::vector<std::vector<Rational>> jac;
    for (const Poly& c : components) {
        std::vector<Rational> row(nvars);
        for (std::size_t j = 0; j < nvars; ++j) row[j] = c.coefficient(Monomial::unit(nvars, j));
        jac.push_back(std::move(row));
    }
    const auto rank = static_cast<int>(dense_rank(std::move(jac)));
    return static_cast<int>(std::min(nvars, components.size())) - rank;
}

int corank(const MultiGerm& f, std::size_t branch) {
    return corank(f.branch(branch).components, f.source_dim());
}

long branch_multiplicity(const MultiGerm& f, std::size_t branch, const StabilizationPolicy& policy) {
    return quotient_dim(f.branch(branch).components, f.source_dim(), policy);
}

long multiplicity(const MultiGerm& f, const StabilizationPolicy& policy) {
    long total = 0;
    for (std::size_t i = 0; i < f.branch_count(); ++i) total += branch_multiplicity(f, i, policy);
    return total;
}

AType recognize_type(const MultiGerm& f, const StabilizationPolicy& policy) {
    std::vector<int> ks;
    for (std::size_t i = 0; i < f.branch_count(); ++i) {
        const int c = corank(f, i);
        if (c >= 2)
            throw NotCorankOne("branch " + std::to_string(i + 1) + " has corank " + std::to_string(c));
        ks.push_back(static_cast<int>(branch_multiplicity(f, i, policy)) - 1);
    }
    return AType(std::move(ks));
}

int stratum_dim(const AType& t, std::size_t n, std::size_t p) {
    int codim = 0;
    if (n == p) {
        codim = t.sum();
    } else if (n + 1 == p) {
        for (int k : t.ks) codim += 2 * k + 1;
    } else {
        throw UnsupportedDimensions("stratum dimension is only defined for n = p and n = p - 1");
    }
    const int dim = static_cast<int>(p) - codim;
    if (dim < 0)
        throw NotStableType(t.to_string() + " is not a stable type in dimensions (" + std::to_string(n) +
                            "," + std::to_string(p) + ")");
    return dim;
}

}  // namespace germcalc
