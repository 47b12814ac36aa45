#include "germcalc/tangent.hpp"

#include "germcalc/error.hpp"
#include "germcalc/linalg.hpp"

namespace germcalc {

namespace {

// Column layout of the truncated section space: degree-major, so that row
// reduction pivots on the highest-degree terms first and the surviving
// columns are the smallest monomial sections.
class SectionSpace {
public:
    SectionSpace(const MultiGerm& f, TangentKind kind, int degree)
        : index_(f.source_dim(), degree),
          p_(f.target_dim()),
          r_(f.branch_count()),
          min_rank_(kind == TangentKind::Plain ? 1 : 0) {}

    const MonomialIndex& index() const { return index_; }
    std::size_t ncols() const { return index_.size() * p_ * r_; }
    std::size_t ambient_dim() const { return ncols() - static_cast<std::size_t>(min_rank_) * p_ * r_; }

    std::uint32_t column(const Monomial& m, std::size_t component, std::size_t branch) const {
        return static_cast<std::uint32_t>((index_.rank(m) * p_ + component) * r_ + branch);
    }

    bool in_ambient(std::uint32_t col) const { return col >= static_cast<std::uint32_t>(min_rank_ * p_ * r_); }

    // Inverse of column(): (monomial rank, component, branch).
    void decode(std::uint32_t col, std::size_t& rank, std::size_t& component, std::size_t& branch) const {
        branch = col % r_;
        col /= static_cast<std::uint32_t>(r_);
        component = col % p_;
        rank = col / p_;
    }

private:
    MonomialIndex index_;
    std::size_t p_;
    std::size_t r_;
    int min_rank_;
};

SparseRow section_row(const SectionSpace& space, const Section& s, int degree) {
    SparseRow row;
    for (std::size_t i = 0; i < s.entries.size(); ++i)
        for (std::size_t l = 0; l < s.entries[i].size(); ++l)
            for (const auto& [m, c] : s.entries[i][l].terms())
                if (m.degree() <= degree) row.emplace_back(space.column(m, l, i), c);
    normalize_row(row);
    return row;
}

void insert_tangent_generators(const MultiGerm& f, TangentKind kind, int degree,
                               const SectionSpace& space, EchelonBasis& basis) {
    const std::size_t n = f.source_dim();
    const std::size_t p = f.target_dim();
    const std::size_t r = f.branch_count();
    const int min_shift = kind == TangentKind::Plain ? 1 : 0;

    // tf: x^alpha * df_i/dx_j placed in branch i.
    for (std::size_t i = 0; i < r; ++i) {
        const auto& comps = f.branch(i).components;
        for (std::size_t j = 0; j < n; ++j) {
            std::vector<Poly> partial;
            int ord = -1;
            for (const Poly& c : comps) {
                partial.push_back(c.derivative(j).truncated(degree));
                const int o = partial.back().order();
                if (o >= 0 && (ord < 0 || o < ord)) ord = o;
            }
            if (ord < 0 || ord > degree) continue;
            for (const Monomial& shift : monomials_up_to(n, degree - ord, min_shift)) {
                SparseRow row;
                for (std::size_t l = 0; l < p; ++l)
                    for (const auto& [m, c] : partial[l].terms())
                        if (m.degree() + shift.degree() <= degree)
                            row.emplace_back(space.column(m * shift, l, i), c);
                normalize_row(row);
                basis.insert(std::move(row));
            }
        }
    }

    // wf: (y^beta o f_1, ..., y^beta o f_r) in component l, shared across branches.
    const MonomialIndex targets(p, degree);
    std::vector<std::vector<Poly>> powers(targets.size());  // [beta rank][branch]
    for (std::size_t b = 0; b < targets.size(); ++b) {
        const Monomial& beta = targets.at(b);
        if (beta.degree() == 0) {
            powers[b].assign(r, Poly::constant(n, Rational(1)));
        } else {
            std::size_t last = p;
            while (beta[last - 1] == 0) --last;
            std::vector<int> prev = beta.exponents();
            prev[last - 1] -= 1;
            const auto& base = powers[targets.rank(Monomial(std::move(prev)))];
            powers[b].reserve(r);
            for (std::size_t i = 0; i < r; ++i)
                powers[b].push_back(
                    Poly::multiply_truncated(base[i], f.branch(i).components[last - 1], degree));
        }
        if (beta.degree() < min_shift) continue;
        for (std::size_t l = 0; l < p; ++l) {
            SparseRow row;
            for (std::size_t i = 0; i < r; ++i)
                for (const auto& [m, c] : powers[b][i].terms()) row.emplace_back(space.column(m, l, i), c);
            normalize_row(row);
            basis.insert(std::move(row));
        }
    }
}

CodimResult stabilized_codim(const MultiGerm& f, TangentKind kind, const StabilizationPolicy& policy) {
    StabilizationPolicy ring_policy;
    ring_policy.d_max = policy.d_max;
    const long m0 = multiplicity(f, ring_policy);
    const auto s = stabilize(policy, static_cast<int>(m0) + 4,
                             [&](int d) { return truncated_codim(f, kind, d); });
    CodimResult out;
    out.value = s.value;
    out.degree_used = s.degree;
    truncated_codim(f, kind, s.degree, &out.basis);
    return out;
}

}  // namespace

long truncated_codim(const MultiGerm& f, TangentKind kind, int degree, std::vector<Section>* basis_out) {
    if (degree < 0) throw ValidationError("truncation degree must be non-negative");
    const SectionSpace space(f, kind, degree);
    EchelonBasis basis(space.ncols());
    insert_tangent_generators(f, kind, degree, space, basis);

    const long value = static_cast<long>(space.ambient_dim() - basis.rank());
    if (basis_out) {
        basis_out->clear();
        const std::size_t n = f.source_dim();
        for (std::uint32_t col = 0; col < space.ncols(); ++col) {
            if (!space.in_ambient(col) || basis.is_pivot(col)) continue;
            std::size_t rank = 0;
            std::size_t comp = 0;
            std::size_t br = 0;
            space.decode(col, rank, comp, br);
            Section s;
            s.entries.assign(f.branch_count(), std::vector<Poly>(f.target_dim(), Poly(n)));
            s.entries[br][comp] = Poly::term(space.index().at(rank), Rational(1));
            basis_out->push_back(std::move(s));
        }
        if (static_cast<long>(basis_out->size()) != value)
            throw std::logic_error("normal-space basis size disagrees with codimension");
    }
    return value;
}

bool completes_tangent_space(const MultiGerm& f, TangentKind kind, int degree,
                             const std::vector<Section>& extra) {
    const SectionSpace space(f, kind, degree);
    EchelonBasis basis(space.ncols());
    insert_tangent_generators(f, kind, degree, space, basis);
    for (const Section& s : extra) {
        if (s.entries.size() != f.branch_count()) throw ValidationError("section shape mismatch");
        basis.insert(section_row(space, s, degree));
    }
    return basis.rank() == space.ambient_dim();
}

CodimResult ae_codim(const MultiGerm& f, const StabilizationPolicy& policy) {
    return stabilized_codim(f, TangentKind::Extended, policy);
}

CodimResult a_codim(const MultiGerm& f, const StabilizationPolicy& policy) {
    return stabilized_codim(f, TangentKind::Plain, policy);
}

bool is_stable(const MultiGerm& f, const StabilizationPolicy& policy) {
    try {
        return ae_codim(f, policy).value == 0;
    } catch (const NotStabilized& e) {
        // truncated codimensions are lower bounds, so one positive value settles it
        for (long v : e.values())
            if (v > 0) return false;
        throw;
    }
}

WilsonCheck wilson_check(const MultiGerm& f, const StabilizationPolicy& policy) {
    WilsonCheck w;
    w.ae_codim = ae_codim(f, policy).value;
    if (w.ae_codim == 0) {
        w.status = WilsonCheck::Status::NotApplicable;
        w.details = "germ is stable";
        return w;
    }
    w.a_codim = a_codim(f, policy).value;
    const long r = static_cast<long>(f.branch_count());
    const long n = static_cast<long>(f.source_dim());
    const long p = static_cast<long>(f.target_dim());
    w.predicted_ae_codim = w.a_codim + r * (p - n) - p;
    if (w.predicted_ae_codim == w.ae_codim) {
        w.status = WilsonCheck::Status::Consistent;
    } else {
        w.status = WilsonCheck::Status::Inconsistent;
        w.details = "A_e-cod " + std::to_string(w.ae_codim) + " but A-cod + r(p-n) - p = " +
                    std::to_string(w.predicted_ae_codim);
    }
    return w;
}

std::string to_string(WilsonCheck::Status s) {
    switch (s) {
        case WilsonCheck::Status::Consistent: return "consistent";
        case WilsonCheck::Status::Inconsistent: return "inconsistent";
        case WilsonCheck::Status::NotApplicable: return "not_applicable";
    }
    return "unknown";
}

}  // namespace germcalc
