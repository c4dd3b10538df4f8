#include "hf/monomial.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

#include "hf/errors.hpp"

namespace hf {

int Monomial::degree() const {
    return std::accumulate(e.begin(), e.end(), 0);
}

bool Monomial::divisible_by(const Monomial& d) const {
    if (d.e.size() != e.size()) return false;
    for (size_t i = 0; i < e.size(); ++i)
        if (e[i] < d.e[i]) return false;
    return true;
}

Monomial Monomial::times_var(int i) const {
    Monomial m = *this;
    m.e[static_cast<size_t>(i)] += 1;
    return m;
}

Monomial Monomial::divided_by_var(int i) const {
    Monomial m = *this;
    m.e[static_cast<size_t>(i)] -= 1;
    return m;
}

bool lex_greater(const Monomial& a, const Monomial& b) {
    return a.e > b.e;  // vector<int> lexicographic, x0 exponent dominates
}

bool grlex_greater(const Monomial& a, const Monomial& b) {
    int da = a.degree(), db = b.degree();
    if (da != db) return da > db;
    return lex_greater(a, b);
}

size_t MonomialHash::operator()(const Monomial& m) const {
    size_t h = 1469598103934665603ull;
    for (int v : m.e) {
        h ^= static_cast<size_t>(v) + 0x9e3779b97f4a7c15ull;
        h *= 1099511628211ull;
    }
    return h;
}

std::vector<Monomial> monomials_of_degree(int n_vars, int k) {
    std::vector<Monomial> out;
    Monomial cur(n_vars);
    // Descending lex: the first variable takes the largest exponent first.
    std::function<void(int, int)> rec = [&](int var, int rem) {
        if (var == n_vars - 1) {
            cur.e[static_cast<size_t>(var)] = rem;
            out.push_back(cur);
            return;
        }
        for (int j = rem; j >= 0; --j) {
            cur.e[static_cast<size_t>(var)] = j;
            rec(var + 1, rem - j);
        }
        cur.e[static_cast<size_t>(var)] = 0;
    };
    if (n_vars <= 0) throw InputError("monomials_of_degree: need at least one variable");
    rec(0, k);
    return out;
}

DegreeBasis::DegreeBasis(int n_vars, int degree)
    : n_vars_(n_vars), degree_(degree), list_(monomials_of_degree(n_vars, degree)) {
    index_.reserve(list_.size());
    for (size_t i = 0; i < list_.size(); ++i)
        index_.emplace(list_[i], static_cast<int>(i));
}

int DegreeBasis::index_of(const Monomial& m) const {
    auto it = index_.find(m);
    return it == index_.end() ? -1 : it->second;
}

std::string format_monomial(const Monomial& m) {
    std::string s;
    for (size_t i = 0; i < m.e.size(); ++i) {
        if (m.e[i] == 0) continue;
        if (!s.empty()) s += "*";
        s += "x" + std::to_string(i);
        if (m.e[i] > 1) s += "^" + std::to_string(m.e[i]);
    }
    return s.empty() ? "1" : s;
}

}  // namespace hf
