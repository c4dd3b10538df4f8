#include "hf/gorenstein.hpp"

#include <algorithm>

#include "hf/errors.hpp"
#include "hf/macaulay.hpp"

namespace hf::gorenstein {

bool DualFunctional::is_zero() const {
    return std::all_of(coeffs.begin(), coeffs.end(),
                       [](const auto& t) { return t.second == 0; });
}

Rational DualFunctional::apply(const Poly& p) const {
    Rational total(0);
    for (const auto& [m, c] : p.terms()) {
        auto it = coeffs.find(m);
        if (it != coeffs.end()) total += c * it->second;
    }
    return total;
}

ApolarResult apolar_ideal(const DualFunctional& lambda) {
    if (lambda.n_vars < 1) throw InputError("apolar_ideal: bad ring");
    if (lambda.is_zero()) throw InputError("apolar_ideal: functional is zero");
    const int n = lambda.n_vars;
    const int e = lambda.degree_e;

    ideals::GradedIdeal I(n);
    HVector h;
    for (int k = 0; k <= e; ++k) {
        DegreeBasis cols(n, k);        // candidate g
        DegreeBasis rows(n, e - k);    // pairing monomials m
        QMat pairing;
        pairing.reserve(static_cast<size_t>(rows.dim()));
        for (int r = 0; r < rows.dim(); ++r) {
            QVec row(static_cast<size_t>(cols.dim()));
            for (int c = 0; c < cols.dim(); ++c) {
                Monomial prod = rows.at(r);
                for (size_t i = 0; i < prod.e.size(); ++i) prod.e[i] += cols.at(c).e[i];
                auto it = lambda.coeffs.find(prod);
                row[static_cast<size_t>(c)] = it == lambda.coeffs.end() ? Rational(0) : it->second;
            }
            pairing.push_back(std::move(row));
        }
        QMat kernel = kernel_basis(pairing, cols.dim());
        std::vector<Poly> piece;
        piece.reserve(kernel.size());
        for (const QVec& v : kernel) {
            Poly p(n);
            for (int c = 0; c < cols.dim(); ++c) p.add_term(cols.at(c), v[static_cast<size_t>(c)]);
            piece.push_back(std::move(p));
        }
        h.v.push_back(Int(cols.dim()) - static_cast<long>(piece.size()));
        I.store_piece(k, std::move(piece));
    }
    I.set_full_from(e + 1);
    return ApolarResult{std::move(I), std::move(h)};
}

SocleResult socle_check(const ideals::GradedIdeal& I, int N) {
    SocleResult out;
    const int n = I.n_vars();
    for (int k = 0; k <= N; ++k) {
        const DegreeBasis& bk = I.degree_basis(k);
        const DegreeBasis& bk1 = I.degree_basis(k + 1);
        const SpanEchelon& ech_k = I.piece(k);
        const SpanEchelon& ech_k1 = I.piece(k + 1);
        std::vector<int> std_k = ech_k.free_cols();

        // Columns: standard monomials of degree k. Rows: coordinates of the
        // residue of x_i * u modulo I_{k+1} on the standard monomials of
        // degree k+1, stacked over the variables.
        QMat constraints;
        const int ncols = static_cast<int>(std_k.size());
        std::vector<int> std_k1 = ech_k1.free_cols();
        std::vector<int> col_of_monomial(static_cast<size_t>(bk1.dim()), -1);
        for (size_t i = 0; i < std_k1.size(); ++i)
            col_of_monomial[static_cast<size_t>(std_k1[i])] = static_cast<int>(i);

        constraints.assign(static_cast<size_t>(n) * std_k1.size(),
                           QVec(static_cast<size_t>(ncols), Rational(0)));
        for (int c = 0; c < ncols; ++c) {
            const Monomial& u = bk.at(std_k[static_cast<size_t>(c)]);
            for (int i = 0; i < n; ++i) {
                SparseRow row;
                row.nz.emplace_back(bk1.index_of(u.times_var(i)), Rational(1));
                ech_k1.normal_form(row);
                for (const auto& [col, val] : row.nz) {
                    int sc = col_of_monomial[static_cast<size_t>(col)];
                    constraints[static_cast<size_t>(i) * std_k1.size() + static_cast<size_t>(sc)]
                               [static_cast<size_t>(c)] = val;
                }
            }
        }
        int rank = constraints.empty() ? 0 : exact_rank(constraints);
        out.socle_dims.push_back(ncols - rank);
    }
    out.is_gorenstein = true;
    for (int k = 0; k < N; ++k)
        if (out.socle_dims[static_cast<size_t>(k)] != 0) out.is_gorenstein = false;
    if (out.socle_dims[static_cast<size_t>(N)] != 1) out.is_gorenstein = false;
    return out;
}

bool is_symmetric(const HVector& h) {
    int e = h.socle_degree();
    if (e < 0) throw InputError("is_symmetric: zero vector");
    for (int k = 0; k <= e; ++k)
        if (h.at(static_cast<size_t>(k)) != h.at(static_cast<size_t>(e - k))) return false;
    return true;
}

bool is_unimodal(const HVector& h) {
    bool decreasing = false;
    for (size_t k = 0; k + 1 < h.v.size(); ++k) {
        if (h.v[k + 1] < h.v[k]) decreasing = true;
        else if (h.v[k + 1] > h.v[k] && decreasing) return false;
    }
    return true;
}

StanleyVerdict stanley_admissible(const HVector& h) {
    int e = h.socle_degree();
    if (e < 0) throw InputError("stanley_admissible: zero vector");
    if (h.at(1) > 3) return StanleyVerdict::Inapplicable;
    if (!is_symmetric(h)) return StanleyVerdict::NotAdmissible;
    int t = e / 2;
    std::vector<Int> diff;
    diff.reserve(static_cast<size_t>(t) + 1);
    diff.push_back(h.at(0));
    for (int k = 1; k <= t; ++k)
        diff.push_back(h.at(static_cast<size_t>(k)) - h.at(static_cast<size_t>(k) - 1));
    return macaulay::is_o_sequence(diff).ok ? StanleyVerdict::Admissible
                                            : StanleyVerdict::NotAdmissible;
}

HVector ci_hilbert_series(const CIDegrees& cid) {
    if (cid.degrees.empty()) throw InputError("ci_hilbert_series: empty multidegree");
    // prod (1 - t^{d_i}) / (1 - t)^{n} = prod (1 + t + ... + t^{d_i - 1})
    std::vector<Int> acc{Int(1)};
    for (int d : cid.degrees) {
        if (d < 1) throw InputError("ci_hilbert_series: degrees must be positive");
        std::vector<Int> next(acc.size() + static_cast<size_t>(d) - 1, Int(0));
        for (size_t i = 0; i < acc.size(); ++i)
            for (int j = 0; j < d; ++j) next[i + static_cast<size_t>(j)] += acc[i];
        acc = std::move(next);
    }
    return HVector(std::move(acc));
}

int ci_socle_degree(const CIDegrees& cid) {
    int s = 0;
    for (int d : cid.degrees) s += d - 1;
    return s;
}

Poly jacobian_determinant(const std::vector<Poly>& gens) {
    const int n = static_cast<int>(gens.size());
    if (n == 0) throw InputError("jacobian_determinant: no polynomials");
    for (const Poly& g : gens)
        if (g.n_vars() != n)
            throw InputError("jacobian_determinant: need as many polynomials as variables");
    std::vector<std::vector<Poly>> jac(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) jac[static_cast<size_t>(i)].push_back(gens[static_cast<size_t>(i)].derivative(j));

    // Leibniz expansion; n is at most 5 or 6 at the scales used here.
    Poly det(n);
    std::vector<int> perm(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) perm[static_cast<size_t>(i)] = i;
    do {
        int sign = 1;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                if (perm[static_cast<size_t>(i)] > perm[static_cast<size_t>(j)]) sign = -sign;
        Poly term = Poly::constant(n, Rational(sign));
        for (int i = 0; i < n; ++i) term = term * jac[static_cast<size_t>(i)][static_cast<size_t>(perm[static_cast<size_t>(i)])];
        det = det + term;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return det;
}

bool tate_socle_check(const std::vector<Poly>& gens) {
    const int n = static_cast<int>(gens.size());
    if (n == 0) throw InputError("tate_socle_check: no generators");
    if (gens.front().n_vars() != n)
        throw InputError("tate_socle_check: need n_vars generators");
    int N = 0;
    for (const Poly& g : gens) {
        auto d = g.homogeneous_degree();
        if (!d) throw InputError("tate_socle_check: generators must be homogeneous and nonzero");
        N += *d - 1;
    }
    ideals::GradedIdeal I(n, gens);
    if (I.quotient_dim(N + 1) != 0)
        throw InputError("tate_socle_check: quotient is not artinian with the expected socle degree");

    Poly det = jacobian_determinant(gens);
    if (det.is_zero()) throw InputError("tate_socle_check: Jacobian determinant vanishes");
    if (N == 0) return I.quotient_dim(0) == 1 && det.degree() == 0;
    if (det.degree() != N) return false;
    if (I.quotient_dim(N) != 1) return false;
    return !I.piece(N).contains(poly_to_row(det, I.degree_basis(N)));
}

}  // namespace hf::gorenstein
