#pragma once

#include <map>
#include <vector>

#include "hf/hvector.hpp"
#include "hf/ideals.hpp"
#include "hf/poly.hpp"

namespace hf::gorenstein {

/// A nonzero linear functional on S_e, given by its values on the degree-e
/// monomials. Its kernel is the codimension-1 subspace W of the apolar
/// construction.
struct DualFunctional {
    int n_vars = 0;
    int degree_e = 0;
    std::map<Monomial, Rational, GrlexGreater> coeffs;  // monomial -> lambda(monomial)

    bool is_zero() const;
    /// lambda applied to a homogeneous degree-e polynomial.
    Rational apply(const Poly& p) const;
};

/// Apolar ideal of lambda: I_k = {g in S_k : lambda(g * m) = 0 for every
/// monomial m of degree e-k} for k <= e, and I_k = S_k beyond. Each piece is
/// the kernel of the multiplication-pairing (catalecticant) matrix. The
/// returned ideal stores every piece 0..e and is full from e+1 on.
struct ApolarResult {
    ideals::GradedIdeal ideal;
    HVector h;
};
ApolarResult apolar_ideal(const DualFunctional& lambda);

/// Socle dimensions of S/I per degree k <= N: dim{g in (S/I)_k : x_i * g in
/// I_{k+1} for all i}. Gorenstein iff 0 below N and exactly 1 at N.
struct SocleResult {
    bool is_gorenstein = false;
    std::vector<int> socle_dims;  // index k = 0..N
};
SocleResult socle_check(const ideals::GradedIdeal& I, int N);

bool is_symmetric(const HVector& h);  // h_k == h_{e-k}, e the socle degree
bool is_unimodal(const HVector& h);   // never strictly increases after a strict decrease

/// Stanley's characterization for h_1 <= 3: symmetric and the first
/// difference up to floor(e/2) is an O-sequence. Vectors with h_1 > 3 are
/// outside the theorem's scope.
enum class StanleyVerdict { Admissible, NotAdmissible, Inapplicable };
StanleyVerdict stanley_admissible(const HVector& h);

/// Multidegree of a length-n_vars regular sequence.
struct CIDegrees {
    std::vector<int> degrees;

    int n_vars() const { return static_cast<int>(degrees.size()); }
};

/// Coefficients of prod (1 - t^{d_i}) / (1 - t)^{n_vars}.
HVector ci_hilbert_series(const CIDegrees& cid);

/// sum (d_i - 1); equals the top nonzero index of the series.
int ci_socle_degree(const CIDegrees& cid);

/// For a regular sequence of n_vars forms with artinian quotient: checks that
/// the Jacobian determinant has degree N = sum(deg g_i - 1), that
/// dim (S/I)_N = 1 and that det is not in I_N (so it spans the socle).
bool tate_socle_check(const std::vector<Poly>& gens);

/// Determinant of the Jacobian matrix of the given polynomials.
Poly jacobian_determinant(const std::vector<Poly>& gens);

}  // namespace hf::gorenstein
