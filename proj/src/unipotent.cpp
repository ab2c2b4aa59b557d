#include "ribbontab/unipotent.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

namespace ribbontab {

Composition Tabloid::shape() const {
    Composition out;
    for (const auto& r : rows) out.push_back(static_cast<int>(r.size()));
    return out;
}

Composition Tabloid::weight() const {
    Composition out;
    for (const auto& r : rows)
        for (int x : r) {
            if (x > static_cast<int>(out.size())) out.resize(x, 0);
            out[x - 1]++;
        }
    return out;
}

Word Tabloid::reading_word() const {
    Word w;
    for (auto it = rows.rbegin(); it != rows.rend(); ++it)
        w.insert(w.end(), it->begin(), it->end());
    return w;
}

namespace {

void fill_rows(const Composition& nu, size_t i, std::vector<int>& avail,
               std::vector<std::vector<int>>& cur, std::vector<Tabloid>& out) {
    if (i == nu.size()) {
        out.push_back(Tabloid{cur});
        return;
    }
    // choose the row's weakly increasing word letter by letter, smallest first
    int need = nu[i];
    std::vector<int> row;
    auto rec = [&](auto&& self, int min_letter) -> void {
        if (static_cast<int>(row.size()) == need) {
            cur.push_back(row);
            fill_rows(nu, i + 1, avail, cur, out);
            cur.pop_back();
            return;
        }
        for (int a = min_letter; a <= static_cast<int>(avail.size()); ++a) {
            if (avail[a - 1] == 0) continue;
            avail[a - 1]--;
            row.push_back(a);
            self(self, a);
            row.pop_back();
            avail[a - 1]++;
        }
    };
    rec(rec, 1);
}

}  // namespace

std::vector<Tabloid> enumerate_tabloids(const Composition& nu, const Composition& mu) {
    int total = std::accumulate(nu.begin(), nu.end(), 0);
    int wtot = std::accumulate(mu.begin(), mu.end(), 0);
    std::vector<Tabloid> out;
    if (total != wtot) return out;
    std::vector<int> avail(mu);
    std::vector<std::vector<int>> cur;
    fill_rows(nu, 0, avail, cur, out);
    return out;
}

namespace {

// two-letter case of the d recursion; entries of rows are 1 or 2
long dim_d2(const std::vector<std::vector<int>>& rows) {
    int n = static_cast<int>(rows.size());
    std::vector<int> special(n, -1);  // column of the rightmost 1 in each row
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < static_cast<int>(rows[i].size()); ++j)
            if (rows[i][j] == 1) special[i] = j;
    long tot = 0;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < static_cast<int>(rows[i].size()); ++j) {
            if (rows[i][j] != 2) continue;
            for (int i2 = 0; i2 < n; ++i2) {
                if (j >= static_cast<int>(rows[i2].size()) || rows[i2][j] != 1) continue;
                if (special[i2] == j) {
                    if (i2 < i) ++tot;
                } else {
                    ++tot;
                }
            }
        }
    return tot;
}

long dim_rec(std::vector<std::vector<int>> rows, bool resort) {
    std::set<int> letters;
    for (const auto& r : rows)
        for (int x : r) letters.insert(x);
    if (letters.size() <= 1) return 0;
    if (letters.size() == 2) {
        int a = *letters.begin();
        for (auto& r : rows)
            for (int& x : r) x = (x == a) ? 1 : 2;
        return dim_d2(rows);
    }
    int k = *letters.rbegin();
    std::vector<std::vector<int>> t1, t2;
    for (const auto& r : rows) {
        std::vector<int> r1, r2;
        for (int x : r) {
            r1.push_back(x == k ? 2 : 1);
            if (x != k) r2.push_back(x);
        }
        t1.push_back(r1);
        if (!r2.empty()) t2.push_back(r2);
    }
    if (resort)
        std::stable_sort(t2.begin(), t2.end(),
                         [](const auto& a, const auto& b) { return a.size() > b.size(); });
    return dim_rec(std::move(t1), resort) + dim_rec(std::move(t2), resort);
}

}  // namespace

long dim_d(const Tabloid& t) {
    auto sh = t.shape();
    for (size_t i = 1; i < sh.size(); ++i)
        if (sh[i] > sh[i - 1]) throw std::invalid_argument("dim_d: shape is not a partition");
    return dim_rec(t.rows, true);
}

long dim_e(const Tabloid& t) { return dim_rec(t.rows, false); }

std::vector<std::vector<int>> e_inversion_counts(const Tabloid& t) {
    const auto& rows = t.rows;
    int n = static_cast<int>(rows.size());
    std::vector<std::vector<int>> out;
    for (int i = 0; i < n; ++i) {
        std::vector<int> cnt;
        for (int r = 0; r < static_cast<int>(rows[i].size()); ++r) {
            int y = rows[i][r];
            int c = 0;
            for (int j = 0; j < n; ++j) {
                if (j == i || r >= static_cast<int>(rows[j].size())) continue;
                if (rows[j][r] >= y) continue;
                if (i > j) {
                    ++c;
                } else {
                    for (int s = r + 1; s < static_cast<int>(rows[j].size()); ++s)
                        if (rows[j][s] < y) {
                            ++c;
                            break;
                        }
                }
            }
            cnt.push_back(c);
        }
        out.push_back(cnt);
    }
    return out;
}

long e_inversions(const Tabloid& t) {
    long tot = 0;
    for (const auto& r : e_inversion_counts(t))
        for (int c : r) tot += c;
    return tot;
}

Tabloid sigma_action(const Tabloid& t, int i) {
    if (i < 0 || i + 1 >= static_cast<int>(t.rows.size()))
        throw std::invalid_argument("sigma_action: row index out of range");
    for (const auto& r : t.rows)
        for (int x : r)
            if (x != 1 && x != 2)
                throw std::invalid_argument("sigma_action: entries must be 1 or 2");
    Tabloid out = t;
    const auto& lo = t.rows[i];
    const auto& up = t.rows[i + 1];
    auto ones = [](const std::vector<int>& r) {
        return static_cast<int>(std::count(r.begin(), r.end(), 1));
    };
    int olo = ones(lo), oup = ones(up);
    if (oup < olo && static_cast<int>(up.size()) >= olo) {
        // lower row 1^a 2^s with a = olo; upper row carries a 2 in column a
        std::vector<int> nup(up.begin(), up.begin() + olo);
        nup.insert(nup.end(), lo.size() - olo, 2);
        std::vector<int> nlo(olo, 1);
        nlo.insert(nlo.end(), up.size() - olo, 2);
        out.rows[i] = nlo;
        out.rows[i + 1] = nup;
    } else if (olo < oup && static_cast<int>(lo.size()) >= oup) {
        std::vector<int> nup(oup, 1);
        nup.insert(nup.end(), lo.size() - oup, 2);
        std::vector<int> nlo(lo.begin(), lo.begin() + oup);
        nlo.insert(nlo.end(), up.size() - oup, 2);
        out.rows[i] = nlo;
        out.rows[i + 1] = nup;
    } else {
        out.rows[i] = up;
        out.rows[i + 1] = lo;
    }
    return out;
}

RibbonTableau tabloid_to_ribbon(const Tabloid& t) {
    int k = static_cast<int>(t.rows.size());
    std::vector<Tableau> tuple(k);
    for (int r = 0; r < k; ++r) {
        // runner 0 takes the top row
        const auto& row = t.rows[k - 1 - r];
        Tableau tab;
        if (!row.empty()) {
            tab.outer = {static_cast<int>(row.size())};
            tab.rows = {row};
        }
        tuple[r] = tab;
    }
    return stanton_white_inverse(tuple, {});
}

int cospin2_of(const RibbonTableau& T) { return max_spin2(T.shape(), T.k) - T.spin2(); }

long cospin_of(const RibbonTableau& T) {
    int c2 = cospin2_of(T);
    if (c2 % 2 != 0) throw std::logic_error("cospin_of: odd cospin");
    return c2 / 2;
}

PoincarePolys poincare_polys(const Composition& nu, const Composition& mu) {
    PoincarePolys out;
    for (const auto& t : enumerate_tabloids(nu, mu)) out.e += LaurentPoly::monomial(dim_e(t));
    Partition sorted_nu = make_partition(nu);
    for (const auto& t : enumerate_tabloids(sorted_nu, mu))
        out.d += LaurentPoly::monomial(static_cast<int>(dim_d(t)));
    std::vector<int> mu_clean(mu);
    while (!mu_clean.empty() && mu_clean.back() == 0) mu_clean.pop_back();
    if (is_partition(mu_clean) && std::find(mu_clean.begin(), mu_clean.end(), 0) == mu_clean.end())
        for (const auto& t : enumerate_tabloids(nu, mu))
            out.c += LaurentPoly::monomial(static_cast<int>(cocharge(t.reading_word())));
    return out;
}

}  // namespace ribbontab
