#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "ribbontab/partition.hpp"
#include "ribbontab/tableaux.hpp"

namespace ribbontab {

// Cells are (row, col), both 1-based, row 1 at the bottom (French).
using Cell = std::pair<int, int>;

struct Ribbon {
    std::vector<Cell> cells;  // k cells, starting at the initial cell
    int height() const;
    int width() const;
    Cell initial() const { return cells.front(); }
    int spin2() const { return height() - 1; }  // 2 * spin
};

// A k-ribbon tableau as a chain of partitions; step i adds a horizontal
// k-ribbon strip of weight mu_i (mu = weight of the tableau).
struct RibbonTableau {
    int k = 1;
    std::vector<Partition> chain;  // chain.front() = inner, chain.back() = shape

    const Partition& shape() const { return chain.back(); }
    const Partition& inner() const { return chain.front(); }
    Composition weight() const;  // strip sizes divided by k
    int spin2() const;
    bool operator==(const RibbonTableau& o) const = default;
};

// The unique tiling of outer/inner by k-ribbons whose initial cells lie at
// the bottoms of the columns of the skew shape; nullopt if no tiling exists.
std::optional<std::vector<Ribbon>> horizontal_strip_tiling(const Partition& inner,
                                                           const Partition& outer, int k);

// All tilings found by the exhaustive placement oracle (test aid; the
// uniqueness theorem says size() <= 1).
std::vector<std::vector<Ribbon>> all_strip_tilings(const Partition& inner, const Partition& outer,
                                                   int k);

// All outer shapes with outer/inner a horizontal k-ribbon strip of weight m,
// paired with 2*spin of the strip. Canonical (sorted) order.
std::vector<std::pair<Partition, int>> enumerate_strips(const Partition& inner, int k, int m);

// Direct candidate-generation variant (oracle for enumerate_strips).
std::vector<std::pair<Partition, int>> enumerate_strips_direct(const Partition& inner, int k,
                                                               int m);

std::vector<RibbonTableau> enumerate_ribbon_tableaux(const Partition& outer,
                                                     const Partition& inner, int k,
                                                     const Composition& weight);

// Maximum of 2*spin over standard ribbon tableaux of shape lambda; requires
// an empty k-core.
int max_spin2(const Partition& lambda, int k);

// Stanton-White correspondence: chain -> k-tuple of (skew) tableaux whose
// shapes form the k-quotient of the outer shape. Requires inner = k-core.
std::vector<Tableau> stanton_white(const RibbonTableau& T);

// Inverse: k tableaux (entries 1..r) and a core -> ribbon tableau chain.
RibbonTableau stanton_white_inverse(const std::vector<Tableau>& tuple, const Partition& core);

// Domino column reading (k = 2): columns left to right, top to bottom;
// horizontal dominoes are read at their left column.
Word column_reading(const RibbonTableau& T);

// Domino tableaux of the given shape and weight whose column reading is
// Yamanouchi, paired with 2*spin.
std::vector<std::pair<RibbonTableau, int>> enumerate_yamanouchi_domino(const Partition& outer,
                                                                       const Composition& weight);

}  // namespace ribbontab
