#pragma once

#include <vector>

#include "hf/linalg.hpp"
#include "hf/poly.hpp"

namespace hf {

/// dim S_k for a polynomial ring in n_vars variables: binom(k + n - 1, n - 1).
Int graded_dim(int n_vars, int k);

/// An ordered basis of a subspace of S_k.
struct GradedPiece {
    int degree = 0;
    int n_vars = 0;
    std::vector<Poly> basis;

    int dim() const { return static_cast<int>(basis.size()); }
};

/// Coordinates of a homogeneous degree-k polynomial in the monomial basis.
SparseRow poly_to_row(const Poly& p, const DegreeBasis& basis);
Poly row_to_poly(const SparseRow& r, const DegreeBasis& basis);

/// Basis of the degree-k piece of the ideal generated by `gens`:
/// span{ m * g : g in gens, m monomial of degree k - deg g }. Generators of
/// degree > k are ignored. Deterministic echelon basis.
GradedPiece multiply_span(const std::vector<Poly>& gens, int k);

/// Echelon form of the same span, for callers needing reductions.
SpanEchelon multiply_span_echelon(const std::vector<Poly>& gens, int k,
                                  const DegreeBasis& basis,
                                  const std::vector<Poly>& extra = {});

/// Exact check of sum_j x_j dF/dx_j == deg(F) * F.
bool euler_check(const Poly& f);

}  // namespace hf
