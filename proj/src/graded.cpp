#include "hf/graded.hpp"

#include "hf/errors.hpp"

namespace hf {

Int graded_dim(int n_vars, int k) {
    if (n_vars < 1) throw InputError("graded_dim: need at least one variable");
    if (k < 0) return 0;
    return binomial(Int(k) + n_vars - 1, static_cast<unsigned long>(n_vars - 1));
}

SparseRow poly_to_row(const Poly& p, const DegreeBasis& basis) {
    SparseRow r;
    r.nz.reserve(p.terms().size());
    for (const auto& [m, c] : p.terms()) {
        int idx = basis.index_of(m);
        if (idx < 0) throw InputError("poly_to_row: term of wrong degree");
        r.nz.emplace_back(idx, c);
    }
    // grlex-descending term order maps to ascending column indices already,
    // but sort defensively against future term-order changes.
    std::sort(r.nz.begin(), r.nz.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    return r;
}

Poly row_to_poly(const SparseRow& r, const DegreeBasis& basis) {
    Poly p(basis.n_vars());
    for (const auto& [col, c] : r.nz) p.add_term(basis.at(col), c);
    return p;
}

SpanEchelon multiply_span_echelon(const std::vector<Poly>& gens, int k,
                                  const DegreeBasis& basis,
                                  const std::vector<Poly>& extra) {
    SpanEchelon ech(basis.dim());
    for (const Poly& g : gens) {
        if (g.is_zero()) continue;
        auto dg = g.homogeneous_degree();
        if (!dg) throw InputError("multiply_span: generators must be homogeneous");
        if (*dg > k) continue;
        for (const Monomial& m : monomials_of_degree(basis.n_vars(), k - *dg)) {
            Poly prod = g * Poly::monomial_term(m, Rational(1));
            ech.insert(poly_to_row(prod, basis));
        }
    }
    for (const Poly& p : extra) {
        if (p.is_zero()) continue;
        if (p.homogeneous_degree() != k)
            throw InputError("multiply_span: stored piece of wrong degree");
        ech.insert(poly_to_row(p, basis));
    }
    return ech;
}

GradedPiece multiply_span(const std::vector<Poly>& gens, int k) {
    if (gens.empty()) throw InputError("multiply_span: no generators");
    int n_vars = gens.front().n_vars();
    DegreeBasis basis(n_vars, k);
    SpanEchelon ech = multiply_span_echelon(gens, k, basis);
    GradedPiece piece;
    piece.degree = k;
    piece.n_vars = n_vars;
    piece.basis.reserve(static_cast<size_t>(ech.dim()));
    for (const SparseRow& r : ech.rows()) piece.basis.push_back(row_to_poly(r, basis));
    return piece;
}

bool euler_check(const Poly& f) {
    Poly lhs(f.n_vars());
    for (int i = 0; i < f.n_vars(); ++i)
        lhs = lhs + Poly::variable(f.n_vars(), i) * f.derivative(i);
    return lhs == f * Rational(Int(std::max(f.degree(), 0)));
}

}  // namespace hf
