#pragma once

#include <map>
#include <optional>
#include <string>

#include "ribbontab/laurent.hpp"
#include "ribbontab/partition.hpp"

namespace ribbontab {

enum class Basis { schur, monomial, complete, elementary, powersum };

std::string basis_name(Basis b);
Basis basis_from_string(const std::string& s);

// A symmetric function with Laurent-polynomial coefficients, stored on a
// single basis. May mix degrees.
struct SymFunc {
    Basis basis = Basis::schur;
    std::map<Partition, LaurentPoly> coeffs;

    SymFunc() = default;
    explicit SymFunc(Basis b) : basis(b) {}

    static SymFunc single(Basis b, const Partition& p, LaurentPoly c = LaurentPoly(mpq_class(1)));

    void add_term(const Partition& p, const LaurentPoly& c);
    bool is_zero() const { return coeffs.empty(); }
    SymFunc& operator+=(const SymFunc& o);
    SymFunc& operator-=(const SymFunc& o);
    SymFunc operator+(const SymFunc& o) const;
    SymFunc operator-(const SymFunc& o) const;
    SymFunc operator*(const SymFunc& o) const;  // result on the left basis
    SymFunc scaled(const LaurentPoly& c) const;
    bool operator==(const SymFunc& o) const = default;

    // apply f to every coefficient, dropping zeros
    template <typename F>
    SymFunc map_coeffs(F f) const {
        SymFunc out(basis);
        for (const auto& [p, c] : coeffs) out.add_term(p, f(c));
        return out;
    }
};

SymFunc convert(const SymFunc& f, Basis target);
LaurentPoly scalar_product(const SymFunc& f, const SymFunc& g);
SymFunc omega(const SymFunc& f);

// z_mu = prod i^{m_i} m_i!
mpz_class z_stat(const Partition& mu);

// Murnaghan-Nakayama character value chi^lambda_mu
long mn_character(const Partition& lambda, const Partition& mu);

// Kostka-Foulkes polynomial K_{lambda,mu}(q) via charge
LaurentPoly kostka_foulkes(const Partition& lambda, const Partition& mu);

// Straighten s_alpha for an arbitrary nonnegative integer sequence alpha;
// nullopt means the term vanishes.
std::optional<std::pair<Partition, int>> muir_reduce(const std::vector<int>& alpha);

// s_nu * m_alpha expanded on the Schur basis by Muir's rule
SymFunc schur_times_monomial(const Partition& nu, const Partition& alpha);

SymFunc hall_littlewood_qprime(const Partition& mu);
SymFunc qprime_tilde(const Partition& mu);

// K_{lambda/nu, alpha}(q) = <s_{lambda/nu}, Q'_alpha>
LaurentPoly skew_kostka_foulkes(const Partition& lambda, const Partition& nu,
                                const Partition& alpha);

// p_k plethysm: p_mu -> p_{k mu}, coefficients untouched
SymFunc plethysm_power(const SymFunc& f, int k);

// g o f for g with q-free powersum expansion (p_mu o f = prod psi^{mu_i}(f))
SymFunc plethysm_compose(const SymFunc& g, const SymFunc& f);

// sum over k-ribbon tableaux: sum_lambda eps_k(lambda) K^(k)_{lambda,mu} s_lambda
SymFunc pk_h_via_ribbons(const Partition& mu, int k);

// Littlewood's phi_k on a Schur function: signed product of quotient Schurs
SymFunc phi_k_schur(const Partition& lambda, int k);

// cyclic character l_k^(r) on the powersum basis
SymFunc cyclic_character(int k, int r);

std::string symfunc_to_string(const SymFunc& f);

}  // namespace ribbontab
