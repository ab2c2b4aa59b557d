#pragma once

#include <gmpxx.h>

#include <map>
#include <string>
#include <vector>

namespace ribbontab {

// Sparse exact Laurent polynomial in q over the rationals.
struct LaurentPoly {
    std::map<int, mpq_class> terms;  // exponent -> nonzero coefficient

    LaurentPoly() = default;
    explicit LaurentPoly(const mpq_class& c) {
        if (c != 0) terms[0] = c;
    }
    static LaurentPoly monomial(int exp, const mpq_class& c = 1) {
        LaurentPoly p;
        if (c != 0) p.terms[exp] = c;
        return p;
    }

    bool is_zero() const { return terms.empty(); }
    void add_term(int exp, const mpq_class& c);

    LaurentPoly& operator+=(const LaurentPoly& o);
    LaurentPoly& operator-=(const LaurentPoly& o);
    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
    friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
    LaurentPoly& operator*=(const LaurentPoly& o) { return *this = *this * o; }
    LaurentPoly operator-() const;
    bool operator==(const LaurentPoly& o) const { return terms == o.terms; }

    // q -> q^(-1)
    LaurentPoly invert_q() const;
    // q -> q^k (k may be negative)
    LaurentPoly substitute_power(int k) const;
    mpq_class evaluate_at_one() const;
    mpq_class coeff(int exp) const;

    // renders like "1 + q + 2*q^2 - q^-1"
    std::string to_string() const;
};

// Monic integer polynomial used as a modulus (1 - q^k stored as q^k - 1).
struct ModulusPoly {
    std::vector<mpz_class> coeffs;  // coeffs[i] multiplies q^i; monic, degree >= 1

    int degree() const { return static_cast<int>(coeffs.size()) - 1; }
    std::string to_string() const;
};

// q^k - 1 (the ideal of "mod 1 - q^k").
ModulusPoly q_power_minus_one(int k);

// Cyclotomic polynomial Phi_k by exact division of q^k - 1.
ModulusPoly cyclotomic(int k);

// Canonical representative with exponents in [0, deg m); requires q invertible
// mod m (constant term of m is a unit).
LaurentPoly reduce_mod(const LaurentPoly& p, const ModulusPoly& m);

// Von Sterneck / Ramanujan sum c(k, n) via Hoelder's formula.
long ramanujan_c(long k, long n);

long euler_phi(long n);
int moebius(long n);

}  // namespace ribbontab
