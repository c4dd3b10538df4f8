#pragma once

#include <map>
#include <memory>
#include <optional>
#include <vector>

#include "hf/graded.hpp"
#include "hf/hvector.hpp"
#include "hf/poly.hpp"

namespace hf::ideals {

/// Homogeneous ideal presented by generators plus, optionally, directly
/// stored graded pieces (subspaces of single degrees). The degree-k piece is
/// span(multiply_span(generators of degree <= k) union stored_k); when
/// full_from is set, every degree >= full_from is all of S_k.
class GradedIdeal {
public:
    explicit GradedIdeal(int n_vars) : n_vars_(n_vars) {}
    GradedIdeal(int n_vars, std::vector<Poly> gens);

    int n_vars() const { return n_vars_; }
    const std::vector<Poly>& generators() const { return generators_; }
    void add_generator(const Poly& g);
    void store_piece(int degree, std::vector<Poly> basis);
    void set_full_from(int degree) { full_from_ = degree; }
    std::optional<int> full_from() const { return full_from_; }
    const std::map<int, std::vector<Poly>>& stored_pieces() const { return stored_; }

    int max_generator_degree() const;

    /// Dimension of the degree-k piece.
    int piece_dim(int k) const;
    /// Echelon of the degree-k piece (cached).
    const SpanEchelon& piece(int k) const;
    const DegreeBasis& degree_basis(int k) const;

    /// dim (S/I)_k.
    Int quotient_dim(int k) const;

private:
    int n_vars_;
    std::vector<Poly> generators_;
    std::map<int, std::vector<Poly>> stored_;
    std::optional<int> full_from_;

    struct CacheEntry {
        std::unique_ptr<DegreeBasis> basis;
        std::unique_ptr<SpanEchelon> echelon;
    };
    mutable std::map<int, CacheEntry> cache_;

    const CacheEntry& entry(int k) const;
};

/// Hilbert function h_I(k) = dim (S/I)_k for 0 <= k <= k_max.
HVector hilbert_function(const GradedIdeal& I, int k_max);

/// Image of I in S/(l), eliminating the variable of largest index with a
/// nonzero coefficient in l. Also reports, per degree 1 <= t <= k_max,
/// whether h_{(I,l)}(t) = h_I(t) - h_I(t-1).
struct SectionResult {
    GradedIdeal ideal;              // in one fewer variable
    int eliminated_var = -1;
    std::vector<bool> identity_holds;  // index t-1 for degree t = 1..k_max
    bool identity_all() const;
};
SectionResult hyperplane_section(const GradedIdeal& I, const Poly& ell, int k_max);

/// Dimension of the projective zero locus of the generators of degree <= t
/// (plus stored pieces of degree <= t), read off from the eventual Hilbert
/// polynomial of S/(I_{<=t}): -1 empty, 0 points, etc. Throws
/// IndeterminateError when stabilization is not detected within the window.
int base_locus_dim(const GradedIdeal& I, int t);

/// d_k = min{t : dim Bs|I_t| <= k} for k = n_vars-2, ..., 0, -1, plus the
/// check sum d_k >= N + n + 1 (with n+1 = n_vars).
struct DkProfile {
    std::vector<int> d_values;  // ordered d_{n-1}, ..., d_0, d_{-1}
    int socle_degree = 0;
    Int sum;
    bool lemma_check = false;
};
DkProfile dk_profile(const GradedIdeal& I, int N);

}  // namespace hf::ideals
