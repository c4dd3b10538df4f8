#include "hf/ideals.hpp"

#include <algorithm>

#include "hf/errors.hpp"

namespace hf::ideals {

GradedIdeal::GradedIdeal(int n_vars, std::vector<Poly> gens) : n_vars_(n_vars) {
    for (auto& g : gens) add_generator(g);
}

void GradedIdeal::add_generator(const Poly& g) {
    if (g.is_zero()) return;
    if (g.n_vars() != n_vars_) throw InputError("generator in wrong ring");
    if (!g.is_homogeneous()) throw InputError("generators must be homogeneous");
    generators_.push_back(g);
    cache_.clear();
}

void GradedIdeal::store_piece(int degree, std::vector<Poly> basis) {
    for (const Poly& p : basis) {
        if (p.is_zero()) continue;
        if (p.n_vars() != n_vars_) throw InputError("stored piece in wrong ring");
        if (p.homogeneous_degree() != degree)
            throw InputError("stored piece element of wrong degree");
        stored_[degree].push_back(p);
    }
    cache_.erase(degree);
}

int GradedIdeal::max_generator_degree() const {
    int d = 0;
    for (const Poly& g : generators_) d = std::max(d, g.degree());
    for (const auto& [deg, _] : stored_) d = std::max(d, deg);
    return d;
}

const GradedIdeal::CacheEntry& GradedIdeal::entry(int k) const {
    auto it = cache_.find(k);
    if (it != cache_.end()) return it->second;

    CacheEntry e;
    e.basis = std::make_unique<DegreeBasis>(n_vars_, k);
    if (full_from_ && k >= *full_from_) {
        auto ech = std::make_unique<SpanEchelon>(e.basis->dim());
        for (int c = 0; c < e.basis->dim(); ++c) {
            SparseRow r;
            r.nz.emplace_back(c, Rational(1));
            ech->insert(std::move(r));
        }
        e.echelon = std::move(ech);
    } else {
        std::vector<Poly> extra;
        auto st = stored_.find(k);
        if (st != stored_.end()) extra = st->second;
        e.echelon = std::make_unique<SpanEchelon>(
            multiply_span_echelon(generators_, k, *e.basis, extra));
    }
    return cache_.emplace(k, std::move(e)).first->second;
}

int GradedIdeal::piece_dim(int k) const { return entry(k).echelon->dim(); }

const SpanEchelon& GradedIdeal::piece(int k) const { return *entry(k).echelon; }

const DegreeBasis& GradedIdeal::degree_basis(int k) const { return *entry(k).basis; }

Int GradedIdeal::quotient_dim(int k) const {
    if (k < 0) return 0;
    return graded_dim(n_vars_, k) - piece_dim(k);
}

HVector hilbert_function(const GradedIdeal& I, int k_max) {
    HVector h;
    h.v.reserve(static_cast<size_t>(k_max) + 1);
    for (int k = 0; k <= k_max; ++k) h.v.push_back(I.quotient_dim(k));
    return h;
}

bool SectionResult::identity_all() const {
    return std::all_of(identity_holds.begin(), identity_holds.end(), [](bool b) { return b; });
}

SectionResult hyperplane_section(const GradedIdeal& I, const Poly& ell, int k_max) {
    if (ell.is_zero()) throw InputError("hyperplane_section: zero linear form");
    if (ell.homogeneous_degree() != 1) throw InputError("hyperplane_section: form must be linear");
    if (ell.n_vars() != I.n_vars()) throw InputError("hyperplane_section: wrong ring");
    if (I.n_vars() < 2) throw InputError("hyperplane_section: need at least two variables");

    // Eliminate the variable of largest index appearing in ell.
    int var = -1;
    Rational cvar;
    for (int i = I.n_vars() - 1; i >= 0; --i) {
        Monomial m(I.n_vars());
        m.e[static_cast<size_t>(i)] = 1;
        Rational c = ell.coeff(m);
        if (c != 0) {
            var = i;
            cvar = c;
            break;
        }
    }
    // x_var := x_var - ell / cvar  (so that ell maps to 0)
    Poly replacement = Poly::variable(I.n_vars(), var) - ell * (Rational(1) / cvar);

    SectionResult out{GradedIdeal(I.n_vars() - 1), var, {},};
    auto project = [&](const Poly& p) {
        return p.substitute(var, replacement).drop_variable(var);
    };
    for (const Poly& g : I.generators()) {
        Poly q = project(g);
        if (!q.is_zero()) out.ideal.add_generator(q);
    }
    for (const auto& [deg, polys] : I.stored_pieces()) {
        std::vector<Poly> img;
        for (const Poly& p : polys) {
            Poly q = project(p);
            if (!q.is_zero()) img.push_back(q);
        }
        if (!img.empty()) out.ideal.store_piece(deg, std::move(img));
    }
    if (I.full_from()) out.ideal.set_full_from(*I.full_from());

    HVector h = hilbert_function(I, k_max);
    HVector hs = hilbert_function(out.ideal, k_max);
    out.identity_holds.reserve(static_cast<size_t>(k_max));
    for (int t = 1; t <= k_max; ++t) {
        out.identity_holds.push_back(hs.at(static_cast<size_t>(t)) ==
                                     h.at(static_cast<size_t>(t)) - h.at(static_cast<size_t>(t) - 1));
    }
    return out;
}

int base_locus_dim(const GradedIdeal& I, int t) {
    if (t < 1) throw InputError("base_locus_dim: degree must be at least 1");
    if (I.full_from() && *I.full_from() <= t) return -1;

    GradedIdeal trunc(I.n_vars());
    for (const Poly& g : I.generators())
        if (g.degree() <= t) trunc.add_generator(g);
    for (const auto& [deg, polys] : I.stored_pieces())
        if (deg <= t) trunc.store_piece(deg, polys);

    const int window = 2 * (I.n_vars() + I.max_generator_degree());
    std::vector<Int> vals;
    vals.reserve(static_cast<size_t>(window) + 1);
    for (int j = 0; j <= window; ++j) {
        Int v = trunc.quotient_dim(t + j);
        if (v == 0) return -1;  // zero propagates: the locus is empty
        vals.push_back(std::move(v));
    }

    // Degree of the eventual polynomial: smallest r whose (r+1)-st finite
    // differences vanish on the tail half of the window.
    std::vector<Int> diff = vals;
    for (int r = 0; r < I.n_vars(); ++r) {
        std::vector<Int> next(diff.size() - 1);
        for (size_t i = 0; i + 1 < diff.size(); ++i) next[i] = diff[i + 1] - diff[i];
        size_t tail = std::max<size_t>(3, next.size() / 2);
        if (next.size() >= tail) {
            bool zero = true;
            for (size_t i = next.size() - tail; i < next.size(); ++i)
                if (next[i] != 0) zero = false;
            if (zero) return r;
        }
        diff = std::move(next);
    }
    throw IndeterminateError("base_locus_dim: no stabilization within probe window (degree " +
                             std::to_string(t) + ")");
}

DkProfile dk_profile(const GradedIdeal& I, int N) {
    DkProfile out;
    out.socle_degree = N;
    const int n_proj = I.n_vars() - 1;          // ambient projective dimension
    const int t_limit = N + I.n_vars() + 2;

    std::vector<int> d_values(static_cast<size_t>(n_proj) + 1, -1);  // k = n_proj-1..-1
    int found = 0;
    int current_dim = n_proj;  // dim of the empty system's locus: all of P^{n-1}
    for (int t = 1; t <= t_limit && found <= n_proj; ++t) {
        current_dim = base_locus_dim(I, t);
        for (int k = n_proj - 1; k >= -1; --k) {
            size_t idx = static_cast<size_t>(n_proj - 1 - k);
            if (d_values[idx] == -1 && current_dim <= k) {
                d_values[idx] = t;
                ++found;
            }
        }
        if (current_dim == -1) break;
    }
    if (current_dim != -1)
        throw IndeterminateError("dk_profile: base locus never became empty up to degree " +
                                 std::to_string(t_limit) + "; quotient not artinian?");
    out.d_values = std::move(d_values);
    out.sum = 0;
    for (int d : out.d_values) out.sum += d;
    out.lemma_check = out.sum >= Int(N) + I.n_vars();
    return out;
}

}  // namespace hf::ideals
