#pragma once

#include <cstddef>
#include <string>
#include <unordered_map>
#include <vector>

namespace hf {

/// Exponent vector of a monomial in a fixed number of variables x0, x1, ...
struct Monomial {
    std::vector<int> e;

    Monomial() = default;
    explicit Monomial(int n_vars) : e(static_cast<size_t>(n_vars), 0) {}
    explicit Monomial(std::vector<int> exps) : e(std::move(exps)) {}

    int n_vars() const { return static_cast<int>(e.size()); }
    int degree() const;

    bool operator==(const Monomial& o) const { return e == o.e; }

    /// Divisibility: every exponent of d bounded by this monomial's.
    bool divisible_by(const Monomial& d) const;

    Monomial times_var(int i) const;      // multiply by x_i
    Monomial divided_by_var(int i) const; // divide by x_i (exponent must be positive)
};

/// Lexicographic order with x0 > x1 > ... ; within a fixed degree this is the
/// global graded-lex order restricted to that degree.
bool lex_greater(const Monomial& a, const Monomial& b);

/// Graded lex: compare by total degree first, ties by lex.
bool grlex_greater(const Monomial& a, const Monomial& b);

struct GrlexGreater {
    bool operator()(const Monomial& a, const Monomial& b) const { return grlex_greater(a, b); }
};

struct MonomialHash {
    size_t operator()(const Monomial& m) const;
};

/// All monomials of the given degree, in descending lex order (x0^k first).
std::vector<Monomial> monomials_of_degree(int n_vars, int k);

/// Basis of one graded piece of the polynomial ring: the degree-k monomials in
/// descending lex order plus an index lookup. Column i of any coordinate
/// vector refers to list[i].
class DegreeBasis {
public:
    DegreeBasis(int n_vars, int degree);

    int n_vars() const { return n_vars_; }
    int degree() const { return degree_; }
    int dim() const { return static_cast<int>(list_.size()); }
    const std::vector<Monomial>& monomials() const { return list_; }
    const Monomial& at(int i) const { return list_[static_cast<size_t>(i)]; }
    int index_of(const Monomial& m) const;  // -1 if not of this degree/ring

private:
    int n_vars_;
    int degree_;
    std::vector<Monomial> list_;
    std::unordered_map<Monomial, int, MonomialHash> index_;
};

std::string format_monomial(const Monomial& m);  // "x0^2*x1", "1" for the unit

}  // namespace hf
