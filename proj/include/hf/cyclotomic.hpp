#pragma once

#include <array>
#include <string>
#include <vector>

#include "hf/linalg.hpp"
#include "hf/numeric.hpp"

namespace hf {

/// Element of Q(zeta_5), coordinates on the basis 1, z, z^2, z^3 with
/// z^4 = -(1 + z + z^2 + z^3). Exact arithmetic; the only field extension in
/// the project, used for node coordinates involving fifth roots of unity.
struct Cyc {
    std::array<Rational, 4> c{Rational(0), Rational(0), Rational(0), Rational(0)};

    Cyc() = default;
    explicit Cyc(const Rational& r) { c[0] = r; }
    static Cyc zeta_power(int k);  // z^k, any integer k

    bool is_zero() const;
    bool is_rational() const;

    Cyc operator+(const Cyc& o) const;
    Cyc operator-(const Cyc& o) const;
    Cyc operator*(const Cyc& o) const;
    bool operator==(const Cyc& o) const { return c == o.c; }

    Cyc conj() const;      // z -> z^4 (complex conjugation in the standard embedding)
    Cyc inverse() const;   // requires nonzero

    /// |alpha|^2 in the standard embedding, an element a + b*sqrt(5) of the
    /// real quadratic subfield, returned as the pair (a, b).
    std::pair<Rational, Rational> abs_squared() const;
};

/// Exact sign of a + b*sqrt(5).
int sign_quadratic(const Rational& a, const Rational& b);

/// Exact comparison of |x| and |y|: -1, 0, 1.
int compare_abs(const Cyc& x, const Cyc& y);

/// Columns of the multiplication-by-alpha map on the basis 1, z, z^2, z^3;
/// block[i][j] is the i-th coordinate of alpha * z^j. Restriction of scalars:
/// a K-matrix of rank r maps to a 4x-larger Q-matrix of rank 4r.
std::array<std::array<Rational, 4>, 4> companion_block(const Cyc& a);

std::string format_cyc(const Cyc& a);

}  // namespace hf
