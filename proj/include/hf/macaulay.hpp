#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hf/hvector.hpp"
#include "hf/numeric.hpp"

namespace hf::macaulay {

/// Macaulay d-expansion of a nonnegative integer: coefficients
/// (eps_d, ..., eps_1), nonincreasing with floor -1, such that
/// C = sum_i binom(i + eps_i, i).
struct Expansion {
    int base = 0;                 // d
    std::vector<Int> eps;         // eps[0] = eps_d, ..., eps[d-1] = eps_1

    const Int& eps_at(int i) const { return eps[static_cast<size_t>(base - i)]; }  // eps_i, 1 <= i <= d
    Int reconstruct() const;
};

/// Unique greedy expansion; total for C >= 0, d >= 1.
Expansion macaulay_expansion(const Int& C, int d);

/// C^<d> = sum binom(i + eps_i + 1, i + 1).
Int upper_growth(const Int& C, int d);

/// C_{*d} = sum_{i=2..d} binom(i + eps_i - 1, i - 1); `strict` reports whether
/// eps_1 >= 0 (then the lower bound h(d-1) >= C_{*d} is strict).
struct Shadow {
    Int value;
    bool strict;
};
Shadow lower_shadow(const Int& C, int d);  // requires d >= 2

struct OSeqCheck {
    bool ok;
    std::optional<size_t> first_violation;  // smallest failing index
};

/// Macaulay growth test: h_0 = 1 and h_{k+1} <= h_k^<k> for all k >= 1.
/// No constraint is imposed between h_0 and h_1.
OSeqCheck is_o_sequence(const HVector& h);
/// Same test on a raw integer sequence; a negative entry fails at its index.
OSeqCheck is_o_sequence(const std::vector<Int>& seq);

/// Lower bound for h_I(k) given h_I(d) = h, for the three ranges h <= d,
/// d+1 <= h <= 2d, h = 2d+1. Rejects h > 2d+1.
Int lower_bound_profile(const Int& h, int d, int k);

/// Gotzmann persistence data for an ideal generated in degree d with
/// h(d) = C (caller must have verified h(d+1) = C^<d>): the expansion, the
/// persistence polynomial p(t) = sum binom(t + eps_i, t) and the dimension
/// eps_d of the zero locus (-1 for the empty expansion of 0).
struct GotzmannData {
    Expansion expansion;
    Int dimension;
    std::vector<Rational> poly_coeffs;  // p(t) = sum poly_coeffs[j] * t^j
};
GotzmannData gotzmann_polynomial(const Int& C, int d);

std::string format_persistence_poly(const std::vector<Rational>& coeffs);

}  // namespace hf::macaulay
