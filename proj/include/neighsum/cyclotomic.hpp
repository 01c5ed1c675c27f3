#pragma once

#include <string>
#include <vector>

#include "neighsum/bigint.hpp"

namespace neighsum {

/// Dense integer polynomial, coefficients listed lowest degree first.
/// The zero polynomial has an empty coefficient list.
struct IntPoly {
    std::vector<Int> coeffs;

    IntPoly() = default;
    explicit IntPoly(std::vector<Int> coeffs);

    static IntPoly monomial(long degree, Int coefficient = Int(1));

    bool is_zero() const { return coeffs.empty(); }
    long degree() const { return static_cast<long>(coeffs.size()) - 1; }
    void trim();

    bool operator==(const IntPoly& other) const = default;
};

IntPoly operator+(const IntPoly& a, const IntPoly& b);
IntPoly operator-(const IntPoly& a, const IntPoly& b);
IntPoly operator*(const IntPoly& a, const IntPoly& b);

/// Quotient of an exact division by a monic divisor; throws if the division
/// leaves a remainder.
IntPoly divide_exact_monic(const IntPoly& numerator, const IntPoly& divisor);

/// Remainder of division by a monic divisor.
IntPoly mod_monic(const IntPoly& p, const IntPoly& divisor);

long euler_phi(long n);
std::vector<std::pair<long, int>> factorize(long n);
bool is_prime(long n);

/// The N-th cyclotomic polynomial, computed by iterated exact division of
/// X^N - 1 by the cyclotomic polynomials of the proper divisors of N.
/// Results are memoized process-wide.
const IntPoly& cyclotomic_poly(long N);

/// Element of Z[X]/(Phi_N(X)): an exact representative of an algebraic
/// number in the N-th cyclotomic field, stored as the canonical residue.
class CycloElement {
public:
    CycloElement(long conductor, const Int& constant);
    static CycloElement from_poly(long conductor, const IntPoly& p);

    long conductor() const { return conductor_; }
    const std::vector<Int>& coeffs() const { return coeffs_; }

    CycloElement operator+(const CycloElement& other) const;
    CycloElement operator-(const CycloElement& other) const;
    CycloElement operator*(const CycloElement& other) const;
    bool operator==(const CycloElement& other) const = default;

    bool equals_integer(const Int& value) const;

private:
    long conductor_;
    std::vector<Int> coeffs_;  // length euler_phi(conductor), low degree first
};

/// Residue of 1 + X^p + X^(N-p) mod Phi_N: represents 1 + 2 cos(2 pi p / N).
CycloElement lambda_element(long N, long p);

/// True iff the product of lambda_element(N, e) over the exponent list
/// equals the integer target in Z[X]/(Phi_N). Entirely exact.
bool product_equals(long N, const std::vector<long>& exps, const Int& target);

/// Value of the 2-adic valuation used throughout: either infinite or a
/// nonnegative rational whose denominator is a power of two.
class Valuation {
public:
    static Valuation infinity();
    static Valuation finite(Rat value);

    bool is_infinite() const { return infinite_; }
    const Rat& value() const;  // throws when infinite

    Valuation operator+(const Valuation& other) const;  // infinity absorbs
    bool operator==(const Valuation& other) const = default;

    std::string str() const;  // "inf" or the exact fraction

private:
    Valuation() = default;
    bool infinite_ = false;
    Rat value_;
};

/// v(eta + 1 + eta^-1) for eta a primitive m-th root of unity, normalized so
/// v(2) = 1: infinity for m = 3, 1/2^k for m = 3 * 2^(k+1), otherwise 0.
Valuation valuation_eta(long m);

/// v(omega - 1) for omega a primitive l-th root of unity: infinity for l = 1,
/// 1/2^k for l = 2^(k+1), otherwise 0.
Valuation valuation_omega(long l);

/// a + b*zeta with zeta a primitive cube root of unity (zeta^2 = -1 - zeta).
struct EisensteinInt {
    Int a;
    Int b;

    EisensteinInt operator+(const EisensteinInt& other) const;
    EisensteinInt operator*(const EisensteinInt& other) const;
    EisensteinInt operator-() const;
    bool operator==(const EisensteinInt& other) const = default;

    static EisensteinInt zeta_power(long k);
};

/// The integer norm-style product of (1 + 2 cos(2 pi a / m)) over reduced
/// residues a < m/2, evaluated exactly through the cyclotomic polynomial at
/// a cube root of unity. Requires m >= 4; the zeta component of the exact
/// evaluation must vanish (anything else signals a bug).
Int g_norm(long m);

/// Standard Legendre symbol via Euler's criterion; p must be an odd prime.
int legendre(const Int& a, const Int& p);

}  // namespace neighsum
