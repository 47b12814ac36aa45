#pragma once

#include <cstddef>
#include <functional>
#include <initializer_list>
#include <map>
#include <span>
#include <vector>

#include "germcalc/rational.hpp"

namespace germcalc {

/// Exponent vector of a monomial in a fixed number of variables.
class Monomial {
public:
    Monomial() = default;
    explicit Monomial(std::size_t nvars) : exps_(nvars, 0) {}
    explicit Monomial(std::vector<int> exps);
    Monomial(std::initializer_list<int> exps) : Monomial(std::vector<int>(exps)) {}

    static Monomial unit(std::size_t nvars, std::size_t var, int power = 1);

    std::size_t nvars() const { return exps_.size(); }
    int degree() const { return degree_; }
    int operator[](std::size_t i) const { return exps_[i]; }
    const std::vector<int>& exponents() const { return exps_; }

    Monomial operator*(const Monomial& other) const;
    bool divides(const Monomial& other) const;

    friend bool operator==(const Monomial& a, const Monomial& b) { return a.exps_ == b.exps_; }

private:
    std::vector<int> exps_;
    int degree_ = 0;
};

/// Graded lexicographic order, first variable largest.
struct GrlexLess {
    bool operator()(const Monomial& a, const Monomial& b) const;
};

struct GrlexGreater {
    bool operator()(const Monomial& a, const Monomial& b) const { return GrlexLess{}(b, a); }
};

struct MonomialHash {
    std::size_t operator()(const Monomial& m) const;
};

/// All monomials in `nvars` variables of degree in [min_degree, max_degree],
/// ascending in graded lexicographic order.
std::vector<Monomial> monomials_up_to(std::size_t nvars, int max_degree, int min_degree = 0);

/// Sparse multivariate polynomial with exact rational coefficients.
///
/// Terms are kept in descending graded lexicographic order and never store a
/// zero coefficient.
class Poly {
public:
    using TermMap = std::map<Monomial, Rational, GrlexGreater>;

    Poly() = default;
    explicit Poly(std::size_t nvars) : nvars_(nvars) {}

    static Poly constant(std::size_t nvars, const Rational& c);
    static Poly variable(std::size_t nvars, std::size_t var);
    static Poly term(const Monomial& m, const Rational& c);

    std::size_t nvars() const { return nvars_; }
    const TermMap& terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }

    Rational coefficient(const Monomial& m) const;
    Rational constant_term() const;
    /// Largest total degree; -1 for the zero polynomial.
    int degree() const;
    /// Smallest total degree of a term; -1 for the zero polynomial.
    int order() const;
    bool uses_variable(std::size_t var) const;

    void add_term(const Monomial& m, const Rational& c);

    Poly& operator+=(const Poly& other);
    Poly& operator-=(const Poly& other);
    Poly& operator*=(const Rational& c);
    Poly operator-() const;

    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(const Poly& a, const Poly& b);
    friend Poly operator*(Poly a, const Rational& c) { return a *= c; }
    friend Poly operator*(const Rational& c, Poly a) { return a *= c; }
    friend bool operator==(const Poly& a, const Poly& b) {
        return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
    }

    /// Product with every term of degree above `max_degree` discarded.
    static Poly multiply_truncated(const Poly& a, const Poly& b, int max_degree);
    Poly times_monomial(const Monomial& m) const;
    Poly truncated(int max_degree) const;
    Poly pow(int e) const;
    Poly derivative(std::size_t var) const;

    /// Composition: variable i is replaced by assignment[i]. All assignment
    /// polynomials must share one variable count, which becomes the result's.
    Poly substitute(std::span<const Poly> assignment) const;

    /// Same polynomial viewed in a larger variable set; variable i moves to
    /// position placement[i].
    Poly embed(std::size_t new_nvars, std::span<const std::size_t> placement) const;

private:
    void check_same_ring(const Poly& other) const;

    std::size_t nvars_ = 0;
    TermMap terms_;
};

}  // namespace germcalc
