#include "hf/poly.hpp"

#include <cctype>

#include "hf/errors.hpp"

namespace hf {

Poly Poly::variable(int n_vars, int i) {
    if (i < 0 || i >= n_vars) throw InputError("variable index out of range");
    Monomial m(n_vars);
    m.e[static_cast<size_t>(i)] = 1;
    return monomial_term(m, Rational(1));
}

Poly Poly::constant(int n_vars, const Rational& c) {
    Poly p(n_vars);
    p.add_term(Monomial(n_vars), c);
    return p;
}

Poly Poly::monomial_term(const Monomial& m, const Rational& c) {
    Poly p(m.n_vars());
    p.add_term(m, c);
    return p;
}

int Poly::degree() const {
    if (terms_.empty()) return -1;
    return terms_.begin()->first.degree();  // grlex order: first term has max degree
}

bool Poly::is_homogeneous() const {
    if (terms_.empty()) return true;
    int d = terms_.begin()->first.degree();
    return terms_.rbegin()->first.degree() == d;
}

std::optional<int> Poly::homogeneous_degree() const {
    if (terms_.empty() || !is_homogeneous()) return std::nullopt;
    return degree();
}

void Poly::add_term(const Monomial& m, const Rational& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

Rational Poly::coeff(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Rational(0) : it->second;
}

Poly Poly::operator+(const Poly& o) const {
    Poly r = *this;
    for (const auto& [m, c] : o.terms_) r.add_term(m, c);
    return r;
}

Poly Poly::operator-(const Poly& o) const {
    Poly r = *this;
    for (const auto& [m, c] : o.terms_) r.add_term(m, -c);
    return r;
}

Poly Poly::operator-() const {
    Poly r(n_vars_);
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
    return r;
}

Poly Poly::operator*(const Poly& o) const {
    Poly r(n_vars_);
    for (const auto& [m1, c1] : terms_) {
        for (const auto& [m2, c2] : o.terms_) {
            Monomial m = m1;
            for (size_t i = 0; i < m.e.size(); ++i) m.e[i] += m2.e[i];
            r.add_term(m, c1 * c2);
        }
    }
    return r;
}

Poly Poly::operator*(const Rational& c) const {
    Poly r(n_vars_);
    if (c == 0) return r;
    for (const auto& [m, k] : terms_) r.terms_.emplace(m, k * c);
    return r;
}

Poly Poly::derivative(int var) const {
    Poly r(n_vars_);
    for (const auto& [m, c] : terms_) {
        int e = m.e[static_cast<size_t>(var)];
        if (e == 0) continue;
        r.add_term(m.divided_by_var(var), c * Rational(e));
    }
    return r;
}

Poly Poly::substitute(int var, const Poly& replacement) const {
    Poly r(n_vars_);
    for (const auto& [m, c] : terms_) {
        int e = m.e[static_cast<size_t>(var)];
        Monomial rest = m;
        rest.e[static_cast<size_t>(var)] = 0;
        Poly t = Poly::monomial_term(rest, c);
        for (int j = 0; j < e; ++j) t = t * replacement;
        r = r + t;
    }
    return r;
}

Poly Poly::drop_variable(int var) const {
    Poly r(n_vars_ - 1);
    for (const auto& [m, c] : terms_) {
        if (m.e[static_cast<size_t>(var)] != 0)
            throw InputError("drop_variable: variable still occurs");
        Monomial m2(n_vars_ - 1);
        for (int i = 0, j = 0; i < n_vars_; ++i) {
            if (i == var) continue;
            m2.e[static_cast<size_t>(j++)] = m.e[static_cast<size_t>(i)];
        }
        r.add_term(m2, c);
    }
    return r;
}

Rational Poly::evaluate(const std::vector<Rational>& point) const {
    if (static_cast<int>(point.size()) != n_vars_)
        throw InputError("evaluate: wrong point dimension");
    Rational total(0);
    for (const auto& [m, c] : terms_) {
        Rational v = c;
        for (size_t i = 0; i < m.e.size(); ++i) {
            for (int j = 0; j < m.e[i]; ++j) v *= point[i];
        }
        total += v;
    }
    return total;
}

namespace {

struct PolyLexer {
    const std::string& s;
    size_t pos = 0;

    explicit PolyLexer(const std::string& text) : s(text) {}

    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }
    bool done() {
        skip_ws();
        return pos >= s.size();
    }
    char peek() {
        skip_ws();
        return pos < s.size() ? s[pos] : '\0';
    }
    // Unsigned integer literal as a string.
    std::string number() {
        skip_ws();
        size_t start = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (pos == start) throw InputError("polynomial parse: expected digits near '" + s.substr(start, 8) + "'");
        return s.substr(start, pos - start);
    }
};

}  // namespace

Poly parse_poly(const std::string& text, int n_vars) {
    PolyLexer lx(text);
    Poly result(n_vars);
    bool first = true;
    while (!lx.done()) {
        int sign = 1;
        char c = lx.peek();
        if (c == '+' || c == '-') {
            sign = (c == '-') ? -1 : 1;
            ++lx.pos;
        } else if (!first) {
            throw InputError("polynomial parse: expected '+' or '-' near '" + text.substr(lx.pos, 8) + "'");
        }
        first = false;

        Rational coef(sign);
        bool saw_factor = false;
        if (std::isdigit(static_cast<unsigned char>(lx.peek()))) {
            std::string num = lx.number();
            std::string frac = num;
            if (lx.peek() == '/') {
                ++lx.pos;
                frac += "/" + lx.number();
            }
            coef *= parse_rational(frac);
            saw_factor = true;
            if (lx.peek() == '*') ++lx.pos;
        }

        Monomial m(n_vars);
        while (lx.peek() == 'x') {
            ++lx.pos;
            long idx = std::stol(lx.number());
            if (idx < 0 || idx >= n_vars)
                throw InputError("polynomial parse: variable x" + std::to_string(idx) +
                                 " out of range for " + std::to_string(n_vars) + " variables");
            long exp = 1;
            if (lx.peek() == '^') {
                ++lx.pos;
                exp = std::stol(lx.number());
                if (exp < 0) throw InputError("polynomial parse: negative exponent");
            }
            m.e[static_cast<size_t>(idx)] += static_cast<int>(exp);
            saw_factor = true;
            if (lx.peek() == '*') ++lx.pos;
        }
        if (!saw_factor)
            throw InputError("polynomial parse: empty term near position " + std::to_string(lx.pos));
        result.add_term(m, coef);
    }
    return result;
}

std::string format_poly(const Poly& p) {
    if (p.is_zero()) return "0";
    std::string out;
    for (const auto& [m, c] : p.terms()) {
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
        std::string mono = format_monomial(m);
        if (mono == "1") {
            out += format_rational(a);
        } else if (a == 1) {
            out += mono;
        } else {
            out += format_rational(a) + "*" + mono;
        }
    }
    return out;
}

}  // namespace hf
