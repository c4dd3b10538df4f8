#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hf/monomial.hpp"
#include "hf/numeric.hpp"

namespace hf {

/// Multivariate polynomial with rational coefficients. Terms are kept in
/// descending graded-lex order (x0 > x1 > ...) and never store a zero
/// coefficient.
class Poly {
public:
    using TermMap = std::map<Monomial, Rational, GrlexGreater>;

    Poly() : n_vars_(0) {}
    explicit Poly(int n_vars) : n_vars_(n_vars) {}

    static Poly variable(int n_vars, int i);
    static Poly constant(int n_vars, const Rational& c);
    static Poly monomial_term(const Monomial& m, const Rational& c);

    int n_vars() const { return n_vars_; }
    bool is_zero() const { return terms_.empty(); }
    const TermMap& terms() const { return terms_; }

    /// Max total degree of a term; -1 for the zero polynomial.
    int degree() const;
    bool is_homogeneous() const;
    /// Degree if homogeneous and nonzero, nullopt otherwise.
    std::optional<int> homogeneous_degree() const;

    void add_term(const Monomial& m, const Rational& c);
    Rational coeff(const Monomial& m) const;

    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const;
    Poly operator-() const;
    Poly operator*(const Poly& o) const;
    Poly operator*(const Rational& c) const;
    bool operator==(const Poly& o) const { return n_vars_ == o.n_vars_ && terms_ == o.terms_; }

    Poly derivative(int var) const;

    /// Substitute x_var := replacement (a polynomial in the same ring).
    Poly substitute(int var, const Poly& replacement) const;

    /// Remove variable `var` (which must not occur) and renumber the later
    /// variables down by one.
    Poly drop_variable(int var) const;

    Rational evaluate(const std::vector<Rational>& point) const;

private:
    int n_vars_;
    TermMap terms_;
};

/// Parses the shared polynomial text format: terms joined by + / -, each term
/// `[coef][*]x<i>[^e]...` with integer or p/q coefficients.
/// Example: "3/2*x0^2*x1 - x2*x3^2".
Poly parse_poly(const std::string& text, int n_vars);

std::string format_poly(const Poly& p);

}  // namespace hf
