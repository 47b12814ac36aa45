#include "germcalc/poly.hpp"

#include <algorithm>
#include <numeric>

#include "germcalc/error.hpp"

namespace germcalc {

Monomial::Monomial(std::vector<int> exps) : exps_(std::move(exps)) {
    for (int e : exps_) {
        if (e < 0) throw ValidationError("negative exponent in monomial");
        degree_ += e;
    }
}

Monomial Monomial::unit(std::size_t nvars, std::size_t var, int power) {
    std::vector<int> e(nvars, 0);
    e.at(var) = power;
    return Monomial(std::move(e));
}

Monomial Monomial::operator*(const Monomial& other) const {
    Monomial r = *this;
    for (std::size_t i = 0; i < exps_.size(); ++i) r.exps_[i] += other.exps_[i];
    r.degree_ += other.degree_;
    return r;
}

bool Monomial::divides(const Monomial& other) const {
    for (std::size_t i = 0; i < exps_.size(); ++i)
        if (exps_[i] > other.exps_[i]) return false;
    return true;
}

bool GrlexLess::operator()(const Monomial& a, const Monomial& b) const {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    // Same degree: compare exponents lexicographically, first variable heaviest.
    return a.exponents() < b.exponents();
}

std::size_t MonomialHash::operator()(const Monomial& m) const {
    std::size_t h = 1469598103934665603ULL;
    for (int e : m.exponents()) {
        h ^= static_cast<std::size_t>(e) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    }
    return h;
}

namespace {

void enumerate_degree(std::size_t nvars, int degree, std::vector<int>& cur, std::size_t pos,
                      std::vector<Monomial>& out) {
    if (pos + 1 == nvars) {
        cur[pos] = degree;
        out.emplace_back(cur);
        return;
    }
    // Ascending lex: small first exponent first.
    for (int e = 0; e <= degree; ++e) {
        cur[pos] = e;
        enumerate_degree(nvars, degree - e, cur, pos + 1, out);
    }
    cur[pos] = 0;
}

}  // namespace

std::vector<Monomial> monomials_up_to(std::size_t nvars, int max_degree, int min_degree) {
    std::vector<Monomial> out;
    if (nvars == 0) {
        if (min_degree <= 0 && max_degree >= 0) out.emplace_back(std::vector<int>{});
        return out;
    }
    std::vector<int> cur(nvars, 0);
    for (int d = std::max(min_degree, 0); d <= max_degree; ++d) enumerate_degree(nvars, d, cur, 0, out);
    return out;
}

Poly Poly::constant(std::size_t nvars, const Rational& c) {
    Poly p(nvars);
    p.add_term(Monomial(nvars), c);
    return p;
}

Poly Poly::variable(std::size_t nvars, std::size_t var) {
    Poly p(nvars);
    p.add_term(Monomial::unit(nvars, var), Rational(1));
    return p;
}

Poly Poly::term(const Monomial& m, const Rational& c) {
    Poly p(m.nvars());
    p.add_term(m, c);
    return p;
}

Rational Poly::coefficient(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Rational(0) : it->second;
}

Rational Poly::constant_term() const { return coefficient(Monomial(nvars_)); }

int Poly::degree() const { return terms_.empty() ? -1 : terms_.begin()->first.degree(); }

int Poly::order() const { return terms_.empty() ? -1 : terms_.rbegin()->first.degree(); }

bool Poly::uses_variable(std::size_t var) const {
    return std::any_of(terms_.begin(), terms_.end(),
                       [var](const auto& t) { return t.first[var] > 0; });
}

void Poly::add_term(const Monomial& m, const Rational& c) {
    if (m.nvars() != nvars_) throw ValidationError("monomial arity does not match polynomial");
    if (sgn(c) == 0) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (sgn(it->second) == 0) terms_.erase(it);
    }
}

void Poly::check_same_ring(const Poly& other) const {
    if (other.nvars_ != nvars_) throw ValidationError("polynomials live in different variable sets");
}

Poly& Poly::operator+=(const Poly& other) {
    check_same_ring(other);
    for (const auto& [m, c] : other.terms_) add_term(m, c);
    return *this;
}

Poly& Poly::operator-=(const Poly& other) {
    check_same_ring(other);
    for (const auto& [m, c] : other.terms_) add_term(m, -c);
    return *this;
}

Poly& Poly::operator*=(const Rational& c) {
    if (sgn(c) == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [m, coeff] : terms_) coeff *= c;
    return *this;
}

Poly Poly::operator-() const {
    Poly r = *this;
    for (auto& [m, c] : r.terms_) c = -c;
    return r;
}

Poly operator*(const Poly& a, const Poly& b) {
    a.check_same_ring(b);
    Poly r(a.nvars_);
    for (const auto& [ma, ca] : a.terms_)
        for (const auto& [mb, cb] : b.terms_) r.add_term(ma * mb, ca * cb);
    return r;
}

Poly Poly::multiply_truncated(const Poly& a, const Poly& b, int max_degree) {
    a.check_same_ring(b);
    Poly r(a.nvars_);
    const int ob = b.order();
    for (const auto& [ma, ca] : a.terms_) {
        if (ma.degree() + ob > max_degree) continue;
        for (const auto& [mb, cb] : b.terms_) {
            if (ma.degree() + mb.degree() > max_degree) continue;
            r.add_term(ma * mb, ca * cb);
        }
    }
    return r;
}

Poly Poly::times_monomial(const Monomial& m) const {
    Poly r(nvars_);
    for (const auto& [t, c] : terms_) r.terms_.emplace_hint(r.terms_.end(), t * m, c);
    return r;
}

Poly Poly::truncated(int max_degree) const {
    Poly r(nvars_);
    for (const auto& [m, c] : terms_)
        if (m.degree() <= max_degree) r.terms_.emplace_hint(r.terms_.end(), m, c);
    return r;
}

Poly Poly::pow(int e) const {
    if (e < 0) throw ValidationError("negative power");
    Poly result = Poly::constant(nvars_, Rational(1));
    Poly base = *this;
    while (e > 0) {
        if (e & 1) result = result * base;
        e >>= 1;
        if (e > 0) base = base * base;
    }
    return result;
}

Poly Poly::derivative(std::size_t var) const {
    if (var >= nvars_) throw ValidationError("derivative variable out of range");
    Poly r(nvars_);
    for (const auto& [m, c] : terms_) {
        const int e = m[var];
        if (e == 0) continue;
        std::vector<int> exps = m.exponents();
        exps[var] -= 1;
        r.add_term(Monomial(std::move(exps)), c * e);
    }
    return r;
}

Poly Poly::substitute(std::span<const Poly> assignment) const {
    if (assignment.size() != nvars_)
        throw ValidationError("substitution arity mismatch: expected " + std::to_string(nvars_) +
                              " polynomials, got " + std::to_string(assignment.size()));
    if (assignment.empty()) return *this;
    const std::size_t target = assignment.front().nvars();
    for (const Poly& a : assignment)
        if (a.nvars() != target)
            throw ValidationError("substituted polynomials must share one variable set");

    // Cache powers per variable; most substitutions reuse low powers.
    std::vector<std::vector<Poly>> powers(nvars_);
    auto power_of = [&](std::size_t var, int e) -> const Poly& {
        auto& cache = powers[var];
        if (cache.empty()) cache.push_back(Poly::constant(target, Rational(1)));
        while (static_cast<int>(cache.size()) <= e) cache.push_back(cache.back() * assignment[var]);
        return cache[e];
    };

    Poly r(target);
    for (const auto& [m, c] : terms_) {
        Poly t = Poly::constant(target, c);
        for (std::size_t v = 0; v < nvars_; ++v)
            if (m[v] > 0) t = t * power_of(v, m[v]);
        r += t;
    }
    return r;
}

Poly Poly::embed(std::size_t new_nvars, std::span<const std::size_t> placement) const {
    if (placement.size() != nvars_) throw ValidationError("embedding arity mismatch");
    Poly r(new_nvars);
    for (const auto& [m, c] : terms_) {
        std::vector<int> e(new_nvars, 0);
        for (std::size_t v = 0; v < nvars_; ++v) e.at(placement[v]) += m[v];
        r.add_term(Monomial(std::move(e)), c);
    }
    return r;
}

}  // namespace germcalc
