#pragma once

#include <string>
#include <vector>

#include "ribbontab/partition.hpp"
#include "ribbontab/symfunc.hpp"

namespace ribbontab {

// spin generating function of a shape with empty k-core, normalized by
// cospin: coefficient of m_nu is sum over ribbon tableaux of q^{s* - s}
SymFunc gfun_tilde(const Partition& lambda, int k);

// same shape family restricted to k*mu, normalized by spin
SymFunc hfun(const Partition& mu, int k, Basis basis);
SymFunc hfun_tilde(const Partition& mu, int k, Basis basis);

struct IdentityReport {
    std::string id;
    std::string bounds;
    bool pass = true;
    std::vector<std::string> counterexamples;
};

// exhaustive check of a named identity within the given bounds; k <= 0
// selects the identity's default level range
IdentityReport verify(const std::string& id, int max_size, int k = 0);

const std::vector<std::string>& identity_names();

}  // namespace ribbontab
