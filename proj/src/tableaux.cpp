#include "ribbontab/tableaux.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

namespace ribbontab {

Composition Tableau::weight() const {
    int mx = 0;
    for (const auto& r : rows)
        for (int x : r) mx = std::max(mx, x);
    Composition w(mx, 0);
    for (const auto& r : rows)
        for (int x : r) w[x - 1]++;
    return w;
}

Word Tableau::row_reading_word() const {
    // highest row first (row 1 is the bottom row and comes last)
    Word w;
    for (auto it = rows.rbegin(); it != rows.rend(); ++it)
        w.insert(w.end(), it->begin(), it->end());
    return w;
}

namespace {

struct SsytBuilder {
    const Partition& outer;
    const Partition& inner;
    Composition remaining;
    int max_letter;
    std::vector<std::vector<int>> rows;
    std::vector<Tableau> out;

    int inner_at(int i) const { return i < static_cast<int>(inner.size()) ? inner[i] : 0; }

    // entry directly below cell (row i, absolute column c), or 0 if none
    int below(int i, int c) const {
        if (i == 0) return 0;
        int lo = inner_at(i - 1);
        if (c < lo || c >= outer[i - 1]) return 0;
        return rows[i - 1][c - lo];
    }

    void fill(int i, int j) {
        if (i == static_cast<int>(outer.size())) {
            Tableau t;
            t.outer = outer;
            t.inner = inner;
            t.rows = rows;
            out.push_back(std::move(t));
            return;
        }
        int lo = inner_at(i);
        if (lo + j == outer[i]) {
            fill(i + 1, 0);
            return;
        }
        int c = lo + j;
        int lb = 1;
        if (j > 0) lb = std::max(lb, rows[i][j - 1]);
        lb = std::max(lb, below(i, c) + 1);
        for (int v = lb; v <= max_letter; ++v) {
            if (remaining[v - 1] == 0) continue;
            remaining[v - 1]--;
            rows[i].push_back(v);
            fill(i, j + 1);
            rows[i].pop_back();
            remaining[v - 1]++;
        }
    }
};

}  // namespace

std::vector<Tableau> enumerate_ssyt(const Partition& outer, const Partition& inner,
                                    const Composition& weight) {
    if (!contains(outer, inner)) throw std::invalid_argument("enumerate_ssyt: inner not in outer");
    int total = 0;
    for (int x : weight) total += x;
    if (size_of(outer) - size_of(inner) != total)
        throw std::invalid_argument("enumerate_ssyt: size mismatch");
    SsytBuilder b{outer, inner, weight, static_cast<int>(weight.size()), {}, {}};
    b.rows.resize(outer.size());
    for (auto& r : b.rows) r.clear();
    b.fill(0, 0);
    return b.out;
}

long kostka_number(const Partition& lambda, const Composition& mu) {
    static std::map<std::pair<Partition, Composition>, long> cache;
    auto key = std::make_pair(lambda, mu);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
    long v = static_cast<long>(enumerate_ssyt(lambda, {}, mu).size());
    cache[key] = v;
    return v;
}

long charge(const Word& w) {
    int n = static_cast<int>(w.size());
    Composition wt;
    for (int x : w) {
        if (x < 1) throw std::invalid_argument("charge: letters must be positive");
        if (x > static_cast<int>(wt.size())) wt.resize(x, 0);
        wt[x - 1]++;
    }
    if (!is_partition(wt)) throw std::invalid_argument("charge: weight is not a partition");
    std::vector<char> used(n, 0);
    Composition left = wt;
    long total = 0;
    int remaining = n;
    while (remaining > 0) {
        // extract one standard subword, scanning right to left cyclically
        std::vector<int> sel;
        int need = 1;
        int i = n - 1;
        while (need <= static_cast<int>(left.size()) && left[need - 1] > 0) {
            if (!used[i] && w[i] == need) {
                used[i] = 1;
                left[need - 1]--;
                sel.push_back(i);
                ++need;
            }
            i = (i == 0) ? n - 1 : i - 1;
        }
        remaining -= static_cast<int>(sel.size());
        long index = 0;
        for (size_t r = 1; r < sel.size(); ++r) {
            if (sel[r] > sel[r - 1]) ++index;
            total += index;
        }
    }
    return total;
}

long cocharge(const Word& w) {
    Composition wt;
    for (int x : w) {
        if (x > static_cast<int>(wt.size())) wt.resize(x, 0);
        wt[x - 1]++;
    }
    return n_stat(wt) - charge(w);
}

bool is_yamanouchi(const Word& w) {
    int mx = 0;
    for (int x : w) mx = std::max(mx, x);
    std::vector<int> cnt(mx + 1, 0);
    for (auto it = w.rbegin(); it != w.rend(); ++it) {
        cnt[*it]++;
        for (int j = 1; j < mx; ++j)
            if (cnt[j] < cnt[j + 1]) return false;
    }
    return true;
}

std::string word_to_string(const Word& w) {
    bool digits = true;
    for (int x : w)
        if (x > 9) digits = false;
    std::ostringstream os;
    for (size_t i = 0; i < w.size(); ++i) {
        if (!digits && i) os << ',';
        os << w[i];
    }
    return os.str();
}

Word word_from_string(const std::string& s) {
    Word w;
    if (s.find(',') != std::string::npos) {
        std::stringstream ss(s);
        std::string tok;
        while (std::getline(ss, tok, ','))
            if (!tok.empty()) w.push_back(std::stoi(tok));
    } else {
        for (char c : s) {
            if (c < '1' || c > '9') throw std::invalid_argument("bad word: " + s);
            w.push_back(c - '0');
        }
    }
    return w;
}

}  // namespace ribbontab
