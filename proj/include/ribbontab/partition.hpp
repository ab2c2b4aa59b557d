#pragma once

#include <string>
#include <utility>
#include <vector>

namespace ribbontab {

// A partition is a weakly decreasing vector of positive ints (no trailing
// zeros). A composition is an arbitrary vector of nonnegative ints.
using Partition = std::vector<int>;
using Composition = std::vector<int>;

// Canonical form: sort descending, drop zeros.
Partition make_partition(std::vector<int> parts);
bool is_partition(const std::vector<int>& parts);

int size_of(const Partition& p);

Partition conjugate(const Partition& p);

// Dominance order; requires |a| == |b|.
bool dominance_leq(const Partition& a, const Partition& b);

// n(mu) = sum (i-1)*mu_i.
long n_stat(const Partition& mu);

// Reordered concatenation a v b.
Partition join(const Partition& a, const Partition& b);

// (k*mu_1, ..., k*mu_r).
Partition dilate(const Partition& mu, int k);

// mu^k = mu v mu v ... (k factors).
Partition repeat_join(const Partition& mu, int k);

bool contains(const Partition& outer, const Partition& inner);

// Beta numbers: n distinct values lambda_i + n - i (i = 1..n), descending.
std::vector<int> beta_numbers(const Partition& p, int n);
Partition from_beta_numbers(std::vector<int> bs);

struct CoreQuotient {
    Partition core;
    std::vector<Partition> quotient;  // k components
};

// Abacus decomposition with N = smallest multiple of k covering l(lambda);
// runner r holds beta numbers congruent to r mod k.
CoreQuotient core_quotient(const Partition& p, int k);

// Inverse of core_quotient (m: beads per runner, auto-sized when <= 0).
Partition from_core_quotient(const Partition& core, const std::vector<Partition>& quotient);

// Product of (-1)^(h-1) over the ribbons of any k-ribbon tiling of
// outer/inner; throws if the skew shape is not tileable.
int k_sign(const Partition& outer, const Partition& inner, int k);

// All partitions of n, descending-lex order.
std::vector<Partition> partitions_of(int n);
// All partitions of n with at most max_len parts.
std::vector<Partition> partitions_of(int n, int max_len);

std::string partition_to_string(const Partition& p);
Partition partition_from_string(const std::string& s);
Composition composition_from_string(const std::string& s);

}  // namespace ribbontab
