#pragma once

#include <string>
#include <vector>

#include "ribbontab/partition.hpp"

namespace ribbontab {

using Word = std::vector<int>;

// Semistandard tableau of skew shape outer/inner, stored as the entries of
// each outer row (inner cells omitted). Row 1 is the bottom row, but entries
// follow the usual matrix layout: rows[i] belongs to outer[i].
struct Tableau {
    Partition outer;
    Partition inner;
    std::vector<std::vector<int>> rows;  // rows[i].size() == outer[i] - inner[i]

    Composition weight() const;
    Word row_reading_word() const;  // left to right, top row first
    bool operator==(const Tableau& o) const = default;
};

// All SSYT of shape outer/inner and given weight, lexicographic order.
std::vector<Tableau> enumerate_ssyt(const Partition& outer, const Partition& inner,
                                    const Composition& weight);

long kostka_number(const Partition& lambda, const Composition& mu);

// Lascoux-Schutzenberger charge; requires partition weight.
long charge(const Word& w);
long cocharge(const Word& w);

bool is_yamanouchi(const Word& w);

std::string word_to_string(const Word& w);
Word word_from_string(const std::string& s);

}  // namespace ribbontab
