#include "hf/macaulay.hpp"

#include "hf/errors.hpp"

namespace hf {

const Int& HVector::at(size_t k) const {
    static const Int zero(0);
    return k < v.size() ? v[k] : zero;
}

Int HVector::sum() const {
    Int s(0);
    for (const auto& x : v) s += x;
    return s;
}

int HVector::socle_degree() const {
    for (size_t i = v.size(); i-- > 0;)
        if (v[i] != 0) return static_cast<int>(i);
    return -1;
}

bool HVector::operator==(const HVector& o) const {
    size_t n = std::max(v.size(), o.v.size());
    for (size_t i = 0; i < n; ++i)
        if (at(i) != o.at(i)) return false;
    return true;
}

std::string format_hvector(const HVector& h) {
    std::string s = "(";
    for (size_t i = 0; i < h.v.size(); ++i) {
        if (i) s += ",";
        s += h.v[i].get_str();
    }
    return s + ")";
}

HVector parse_hvector(const std::vector<std::string>& tokens) {
    if (tokens.empty()) throw InputError("empty h-vector");
    HVector h;
    for (const auto& t : tokens) {
        Int x;
        if (mpz_set_str(x.get_mpz_t(), t.c_str(), 10) != 0)
            throw InputError("malformed h-vector entry: '" + t + "'");
        if (x < 0) throw InputError("h-vector entries must be nonnegative: '" + t + "'");
        h.v.push_back(std::move(x));
    }
    return h;
}

}  // namespace hf

namespace hf::macaulay {

Int Expansion::reconstruct() const {
    Int s(0);
    for (int i = base; i >= 1; --i)
        s += binomial(Int(i) + eps_at(i), static_cast<unsigned long>(i));
    return s;
}

namespace {

// Largest eps with binom(i + eps, i) <= rem; rem >= 0, i >= 1.
Int greedy_coefficient(const Int& rem, int i) {
    if (rem == 0) return Int(-1);
    if (i == 1) return rem - 1;  // binom(1 + eps, 1) = 1 + eps
    Int lo(0), hi(1);
    while (binomial(Int(i) + hi, static_cast<unsigned long>(i)) <= rem) hi *= 2;
    // invariant: binom(i+lo,i) <= rem < binom(i+hi,i)
    while (hi - lo > 1) {
        Int mid = (lo + hi) / 2;
        if (binomial(Int(i) + mid, static_cast<unsigned long>(i)) <= rem)
            lo = mid;
        else
            hi = mid;
    }
    return lo;
}

}  // namespace

Expansion macaulay_expansion(const Int& C, int d) {
    if (C < 0) throw InputError("macaulay_expansion: C must be nonnegative");
    if (d < 1) throw InputError("macaulay_expansion: base must be positive");
    Expansion ex;
    ex.base = d;
    ex.eps.reserve(static_cast<size_t>(d));
    Int rem = C;
    for (int i = d; i >= 1; --i) {
        Int e = greedy_coefficient(rem, i);
        rem -= binomial(Int(i) + e, static_cast<unsigned long>(i));
        ex.eps.push_back(std::move(e));
    }
    return ex;
}

Int upper_growth(const Int& C, int d) {
    Expansion ex = macaulay_expansion(C, d);
    Int s(0);
    for (int i = d; i >= 1; --i)
        s += binomial(Int(i) + ex.eps_at(i) + 1, static_cast<unsigned long>(i) + 1);
    return s;
}

Shadow lower_shadow(const Int& C, int d) {
    if (d < 2) throw InputError("lower_shadow: base must be at least 2");
    Expansion ex = macaulay_expansion(C, d);
    Int s(0);
    for (int i = d; i >= 2; --i)
        s += binomial(Int(i) + ex.eps_at(i) - 1, static_cast<unsigned long>(i) - 1);
    return Shadow{s, ex.eps_at(1) >= 0};
}

OSeqCheck is_o_sequence(const std::vector<Int>& seq) {
    if (seq.empty()) throw InputError("is_o_sequence: empty sequence");
    if (seq[0] != 1) return {false, 0};
    for (size_t k = 1; k < seq.size(); ++k) {
        if (seq[k] < 0) return {false, k};
        if (k + 1 < seq.size()) {
            if (seq[k + 1] < 0) return {false, k + 1};
            if (seq[k + 1] > upper_growth(seq[k], static_cast<int>(k)))
                return {false, k + 1};
        }
    }
    return {true, std::nullopt};
}

OSeqCheck is_o_sequence(const HVector& h) {
    return is_o_sequence(h.v);
}

Int lower_bound_profile(const Int& h, int d, int k) {
    if (d < 2) throw InputError("lower_bound_profile: d must be at least 2");
    if (k < 0 || k > d) throw InputError("lower_bound_profile: k must lie in [0, d]");
    if (h > 2 * Int(d) + 1)
        throw InputError("lower_bound_profile: h exceeds 2d+1, outside the stated cases");
    Int kk(k);
    if (h <= d) return std::min(h, kk + 1);
    if (h <= 2 * Int(d)) return std::min(kk + (h - d), 2 * kk + 1);
    return 2 * kk + 1;  // h == 2d+1
}

GotzmannData gotzmann_polynomial(const Int& C, int d) {
    GotzmannData g;
    g.expansion = macaulay_expansion(C, d);
    g.dimension = g.expansion.eps_at(d);

    // p(t) = sum_i binom(t + eps_i, eps_i), a polynomial in t. Terms with
    // eps_i = -1 vanish; eps_i >= 0 contributes prod_{j=1..e} (t + j) / e!.
    std::vector<Rational> total{Rational(0)};
    for (int i = d; i >= 1; --i) {
        const Int& e = g.expansion.eps_at(i);
        if (e < 0) continue;
        unsigned long eu = e.get_ui();
        std::vector<Rational> term{Rational(1)};
        Int fact(1);
        for (unsigned long j = 1; j <= eu; ++j) {
            // multiply by (t + j)
            std::vector<Rational> next(term.size() + 1, Rational(0));
            for (size_t a = 0; a < term.size(); ++a) {
                next[a] += term[a] * Rational(Int(j));
                next[a + 1] += term[a];
            }
            term = std::move(next);
            fact *= Int(j);
        }
        Rational inv = make_rational(Int(1), fact);
        if (term.size() > total.size()) total.resize(term.size(), Rational(0));
        for (size_t a = 0; a < term.size(); ++a) total[a] += term[a] * inv;
    }
    while (total.size() > 1 && total.back() == 0) total.pop_back();
    g.poly_coeffs = std::move(total);
    return g;
}

std::string format_persistence_poly(const std::vector<Rational>& coeffs) {
    std::string out;
    for (size_t j = coeffs.size(); j-- > 0;) {
        const Rational& c = coeffs[j];
        if (c == 0) continue;
        Rational a = c;
        if (out.empty()) {
            if (a < 0) {
                out += "-";
                a = -a;
            }
        } else {
            out += (a < 0) ? " - " : " + ";
            if (a < 0) a = -a;
        }
        if (j == 0) {
            out += format_rational(a);
        } else {
            std::string t = (j == 1) ? "t" : "t^" + std::to_string(j);
            out += (a == 1) ? t : format_rational(a) + "*" + t;
        }
    }
    return out.empty() ? "0" : out;
}

}  // namespace hf::macaulay
