#pragma once

#include <vector>

#include "ribbontab/laurent.hpp"
#include "ribbontab/partition.hpp"
#include "ribbontab/ribbon.hpp"
#include "ribbontab/tableaux.hpp"

namespace ribbontab {

// Rows are stored bottom-up (rows[0] is the lowest row) and each row is
// weakly increasing left to right.
struct Tabloid {
    std::vector<std::vector<int>> rows;

    Composition shape() const;
    Composition weight() const;
    // concatenation of the rows, top row first
    Word reading_word() const;
    bool operator==(const Tabloid& o) const = default;
};

// all tabloids of shape nu and weight mu, in a fixed deterministic order
std::vector<Tabloid> enumerate_tabloids(const Composition& nu, const Composition& mu);

// cell dimension d via the two-letter recursion; requires a partition shape
long dim_d(const Tabloid& t);

// cell dimension e: same recursion without reordering; any composition shape
long dim_e(const Tabloid& t);

// inversion-count formula for e
long e_inversions(const Tabloid& t);
// per-cell inversion counts, same layout as rows
std::vector<std::vector<int>> e_inversion_counts(const Tabloid& t);

// row swap action on two-letter tabloids; i is the 0-based lower row index
Tabloid sigma_action(const Tabloid& t, int i);

// the k-ribbon tableau whose quotient components are the rows read as
// single-row tableaux (top row on runner 0); k = number of rows
RibbonTableau tabloid_to_ribbon(const Tabloid& t);

int cospin2_of(const RibbonTableau& T);  // max spin2 minus spin2
long cospin_of(const RibbonTableau& T);  // half of the above

struct PoincarePolys {
    LaurentPoly d;  // over the sorted (partition) shape
    LaurentPoly e;
    LaurentPoly c;  // cocharge of reading words; zero unless weight is a partition
};

PoincarePolys poincare_polys(const Composition& nu, const Composition& mu);

}  // namespace ribbontab
