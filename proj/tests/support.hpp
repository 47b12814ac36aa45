#pragma once

#include <algorithm>
#include <random>
#include <string>
#include <vector>

#include "germcalc/dsl.hpp"
#include "germcalc/germ.hpp"
#include "germcalc/linalg.hpp"
#include "germcalc/poly.hpp"

namespace test_support {

inline germcalc::MultiGerm G(const std::string& text) { return germcalc::parse_multigerm(text); }

/// Polynomial in the variables `names` (extra names are appended if used).
inline germcalc::Poly P(const std::string& text, std::vector<std::string> names = {"x", "y", "z"}) {
    germcalc::Poly p = germcalc::parse_poly(text, names);
    return p;
}

/// Independent oracle for dim O_n / I with I a monomial ideal: counts the
/// monomials outside I (the staircase) by brute-force enumeration.
inline long staircase_size(const std::vector<germcalc::Monomial>& gens, std::size_t nvars, int bound) {
    long count = 0;
    std::vector<int> e(nvars, 0);
    while (true) {
        germcalc::Monomial m(e);
        bool inside = false;
        for (const auto& g : gens)
            if (g.divides(m)) {
                inside = true;
                break;
            }
        if (!inside) ++count;
        std::size_t i = 0;
        while (i < nvars && ++e[i] > bound) e[i++] = 0;
        if (i == nvars) break;
    }
    return count;
}

/// True when g is f with its source variables renumbered, matching them by name.
inline bool same_up_to_variable_order(const germcalc::MultiGerm& f, const germcalc::MultiGerm& g) {
    using namespace germcalc;
    if (f.source_dim() != g.source_dim() || f.branch_count() != g.branch_count()) return false;
    std::vector<std::size_t> placement;
    for (const auto& name : g.var_names()) {
        const auto it = std::find(f.var_names().begin(), f.var_names().end(), name);
        if (it == f.var_names().end()) return false;
        placement.push_back(static_cast<std::size_t>(it - f.var_names().begin()));
    }
    for (std::size_t i = 0; i < f.branch_count(); ++i) {
        const auto& a = f.branch(i).components;
        const auto& b = g.branch(i).components;
        if (a.size() != b.size()) return false;
        for (std::size_t l = 0; l < a.size(); ++l)
            if (!(b[l].embed(f.source_dim(), placement) == a[l])) return false;
    }
    return true;
}

/// Random invertible matrix: a permutation times a diagonal with entries in
/// {-2, -1, 1, 2} times one shear. Kept sparse so that the exact elimination
/// on the transformed germ stays cheap.
inline std::vector<std::vector<germcalc::Rational>> random_invertible(std::size_t n, std::mt19937& rng) {
    std::vector<std::size_t> perm(n);
    for (std::size_t i = 0; i < n; ++i) perm[i] = i;
    std::shuffle(perm.begin(), perm.end(), rng);
    const int scales[] = {-2, -1, 1, 2};
    std::uniform_int_distribution<int> pick(0, 3);
    std::vector<std::vector<germcalc::Rational>> m(n, std::vector<germcalc::Rational>(n, 0));
    for (std::size_t i = 0; i < n; ++i) m[i][perm[i]] = scales[pick(rng)];
    if (n > 1) {
        std::uniform_int_distribution<std::size_t> idx(0, n - 1);
        const std::size_t a = idx(rng);
        std::size_t b = idx(rng);
        if (b == a) b = (a + 1) % n;
        const int c = scales[pick(rng)];
        for (std::size_t j = 0; j < n; ++j) m[a][j] += c * m[b][j];
    }
    return m;
}

/// Applies a random linear change of coordinates in the target and an
/// independent one in the source of every branch.
inline germcalc::MultiGerm random_linear_change(const germcalc::MultiGerm& f, std::mt19937& rng) {
    using namespace germcalc;
    const std::size_t n = f.source_dim();
    const std::size_t p = f.target_dim();
    const auto target = random_invertible(p, rng);
    std::vector<Branch> out;
    for (const Branch& b : f.branches()) {
        const auto source = random_invertible(n, rng);
        std::vector<Poly> assignment;
        for (std::size_t i = 0; i < n; ++i) {
            Poly v(n);
            for (std::size_t j = 0; j < n; ++j) v += Poly::variable(n, j) * source[i][j];
            assignment.push_back(v);
        }
        Branch nb;
        for (std::size_t i = 0; i < p; ++i) {
            Poly c(n);
            for (std::size_t j = 0; j < p; ++j) c += b.components[j].substitute(assignment) * target[i][j];
            nb.components.push_back(c);
        }
        out.push_back(std::move(nb));
    }
    return MultiGerm(f.var_names(), std::move(out));
}

}  // namespace test_support
