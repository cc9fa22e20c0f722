#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

#include "cyclic/numeric.hpp"

namespace cyclic {

using BigInt = mpz_class;

// Exact integer polynomial, coefficients ascending by degree, canonical
// form (no trailing zeros; the zero polynomial is the empty list).
class IntPoly {
public:
    IntPoly() = default;
    explicit IntPoly(std::vector<BigInt> coeffs);
    static IntPoly constant(const BigInt& c);
    static IntPoly monomial(const BigInt& c, std::size_t degree);

    const std::vector<BigInt>& coeffs() const { return coeff_; }
    bool is_zero() const { return coeff_.empty(); }
    // Degree of the zero polynomial is -1 by convention.
    i64 degree() const { return static_cast<i64>(coeff_.size()) - 1; }
    const BigInt& operator[](std::size_t i) const;
    BigInt leading() const;
    bool is_monic() const;
    bool is_palindromic() const;

    IntPoly operator+(const IntPoly& other) const;
    IntPoly operator-(const IntPoly& other) const;
    IntPoly operator*(const IntPoly& other) const;
    IntPoly operator-() const;
    bool operator==(const IntPoly& other) const = default;

    // Exact division; throws logic_error on a nonzero remainder.
    IntPoly divide_exact(const IntPoly& divisor) const;

    // Exact value at a rational point.
    mpq_class evaluate(const mpq_class& x) const;

private:
    std::vector<BigInt> coeff_;
    void trim();
};

// Monic Chebyshev-type polynomial with R(n, 2 cos t) = 2 cos(n t):
// R(0) = 2, R(1) = x, R(n) = x R(n-1) - R(n-2).
IntPoly chebyshev_R(i64 n);

// n-th cyclotomic polynomial, via the Moebius product of z^d - 1 factors.
IntPoly cyclotomic(i64 n);

// For palindromic p of even degree 2d, the polynomial q with
// p(z) / z^d = q(z + 1/z), assembled from z^j + z^{-j} = R(j, x).
IntPoly fold_palindromic(const IntPoly& p);

// Minimal polynomial of 2 cos(pi/n): the palindromic fold of the (2n)-th
// cyclotomic polynomial under z^j + z^{-j} = R(j, x); x + 2 for n = 1.
IntPoly minimal_poly_C(i64 n);

// Minimal polynomial of 2 cos(2 pi/n), degree sigma*(n): the fold of the
// n-th cyclotomic polynomial.
IntPoly mpr2(i64 n);

// Same polynomial from the product over RRS*(n) of (x - R(2 r_j, rho))
// reduced mod C(n); throws if the product fails to collapse to integers.
IntPoly mpr2_via_product(i64 n);

// Element of Z[rho(n)] = Z[x]/(C(n, x)) in the power basis; exactly
// delta(n) coordinates.
struct RhoElement {
    i64 n = 0;
    std::vector<BigInt> coeff;
    bool is_constant() const;
    bool operator==(const RhoElement& other) const = default;
};

// Arithmetic context for Z[rho(n)]; reduction is schoolbook division by
// the monic modulus C(n, x).
class RhoRing {
public:
    explicit RhoRing(i64 n);

    i64 n() const { return n_; }
    i64 degree() const { return degree_; }
    const IntPoly& modulus() const { return modulus_; }

    RhoElement from_int(const BigInt& c) const;
    RhoElement zero() const { return from_int(0); }
    RhoElement one() const { return from_int(1); }
    RhoElement rho() const;
    RhoElement reduce(const IntPoly& p) const;

    RhoElement add(const RhoElement& u, const RhoElement& v) const;
    RhoElement sub(const RhoElement& u, const RhoElement& v) const;
    RhoElement mul(const RhoElement& u, const RhoElement& v) const;
    RhoElement neg(const RhoElement& u) const;

    // R(m, rho) by the Chebyshev recurrence inside the ring.
    RhoElement chebyshev_of_rho(i64 m) const;

private:
    i64 n_ = 0;
    i64 degree_ = 0;
    IntPoly modulus_;
    void check(const RhoElement& u) const;
};

// Product of two elements that carry the same ring index n.
RhoElement rho_mul(const RhoElement& u, const RhoElement& v);

// Monic polynomial over Z[rho(b)], coefficients ascending by degree.
struct RhoPoly {
    i64 b = 0;
    std::vector<RhoElement> coeff;
    i64 degree() const { return static_cast<i64>(coeff.size()) - 1; }
};

// P*(b, x): monic of degree sigma*(b) with roots 2 cos(pi r/b), r in
// RRS*(b), computed as the product of (x - R(r, rho)) mod C(b).
RhoPoly p_star(i64 b);

// Exact value of p at the double-precision approximation of
// 2 cos(pi num/den), returned as a double. The abscissa is a dyadic
// rational, so only the final narrowing rounds; monomial Horner in plain
// double loses the root entirely beyond degree ~30.
double evaluate_at_cos(const IntPoly& p, i64 num, i64 den);

} // namespace cyclic
