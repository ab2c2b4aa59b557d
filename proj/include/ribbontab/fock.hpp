#pragma once

#include <map>

#include "ribbontab/laurent.hpp"
#include "ribbontab/partition.hpp"
#include "ribbontab/symfunc.hpp"

namespace ribbontab {

// A vector of the level-1 q-Fock space of U_q(sl^_n), basis |lambda>.
struct FockVector {
    int n = 1;
    std::map<Partition, LaurentPoly> coeffs;

    explicit FockVector(int n_ = 1) : n(n_) {}
    static FockVector vacuum(int n_);

    void add_term(const Partition& p, const LaurentPoly& c);
    bool is_zero() const { return coeffs.empty(); }
    FockVector scaled(const LaurentPoly& c) const;
    FockVector operator+(const FockVector& o) const;
    FockVector operator-(const FockVector& o) const;
    bool operator==(const FockVector& o) const = default;
};

int residue(int row, int col, int n);

FockVector f_action(int i, const FockVector& v);
FockVector e_action(int i, const FockVector& v);
FockVector qh_action(int i, const FockVector& v);
FockVector qd_action(const FockVector& v);

// V_k: add one horizontal n-ribbon strip of weight k, coefficient (-q)^{-2s}
FockVector v_op(int k, const FockVector& v);
// U_k: the adjoint of V_k (strip removal)
FockVector u_op(int k, const FockVector& v);

// highest weight vector psi^n_q(h_mu) = V_{mu_r} ... V_{mu_1} |0>
FockVector psi_q(int n, const Partition& mu);

bool is_highest_weight(const FockVector& v);

// adjoint map: <phi(F), h_mu> = <F, psi^n_q(h_mu)>; monomial-basis output
SymFunc phi_q_adjoint(int n, const SymFunc& f);

}  // namespace ribbontab
