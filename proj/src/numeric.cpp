#include "hf/numeric.hpp"

#include "hf/errors.hpp"

namespace hf {

Int binomial(const Int& a, unsigned long b) {
    if (a < 0 || a < Int(b)) return 0;
    Int r;
    mpz_bin_ui(r.get_mpz_t(), a.get_mpz_t(), b);
    return r;
}

Rational make_rational(const Int& num, const Int& den) {
    if (den == 0) throw InputError("rational with zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

Rational parse_rational(const std::string& s) {
    Rational q;
    if (mpq_set_str(q.get_mpq_t(), s.c_str(), 10) != 0)
        throw InputError("malformed rational: '" + s + "'");
    if (mpz_sgn(mpq_denref(q.get_mpq_t())) == 0)
        throw InputError("rational with zero denominator: '" + s + "'");
    q.canonicalize();
    return q;
}

std::string format_rational(const Rational& q) {
    return q.get_str();
}

}  // namespace hf
