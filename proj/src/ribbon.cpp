#include "ribbontab/ribbon.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace ribbontab {

int Ribbon::height() const {
    std::set<int> rows;
    for (const auto& [r, c] : cells) rows.insert(r);
    return static_cast<int>(rows.size());
}

int Ribbon::width() const {
    std::set<int> cols;
    for (const auto& [r, c] : cells) cols.insert(c);
    return static_cast<int>(cols.size());
}

Composition RibbonTableau::weight() const {
    Composition w;
    for (size_t i = 1; i < chain.size(); ++i)
        w.push_back((size_of(chain[i]) - size_of(chain[i - 1])) / k);
    return w;
}

namespace {

std::set<Cell> skew_cells(const Partition& outer, const Partition& inner) {
    std::set<Cell> out;
    for (int r = 1; r <= static_cast<int>(outer.size()); ++r) {
        int lo = r <= static_cast<int>(inner.size()) ? inner[r - 1] : 0;
        for (int c = lo + 1; c <= outer[r - 1]; ++c) out.insert({r, c});
    }
    return out;
}

// cells of the skew shape with no skew cell below them
std::set<Cell> column_bottom_cells(const std::set<Cell>& th) {
    std::set<Cell> res;
    for (const auto& [r, c] : th)
        if (!th.count({r - 1, c})) res.insert({r, c});
    return res;
}

// all k-ribbons starting at init, moving left or up (content decreasing)
void ribbon_paths(Cell init, int k, std::vector<std::vector<Cell>>& out) {
    std::vector<Cell> path{init};
    struct Rec {
        int k;
        std::vector<std::vector<Cell>>& out;
        void go(std::vector<Cell>& p) {
            if (static_cast<int>(p.size()) == k) {
                out.push_back(p);
                return;
            }
            auto [r, c] = p.back();
            if (c > 1) {
                p.push_back({r, c - 1});
                go(p);
                p.pop_back();
            }
            p.push_back({r + 1, c});
            go(p);
            p.pop_back();
        }
    } rec{k, out};
    rec.go(path);
}

void strip_tilings_rec(std::set<Cell>& remaining, const std::set<Cell>& bottoms, int k,
                       std::vector<Ribbon>& cur, std::vector<std::vector<Ribbon>>& out,
                       bool first_only) {
    if (remaining.empty()) {
        out.push_back(cur);
        return;
    }
    if (first_only && !out.empty()) return;
    // initial cell: maximal content, tie broken by smaller row
    Cell init = *remaining.begin();
    long best = -1000000;
    for (const auto& rc : remaining) {
        long key = static_cast<long>(rc.second - rc.first) * 10000 - rc.first;
        if (key > best) {
            best = key;
            init = rc;
        }
    }
    if (!bottoms.count(init)) return;
    std::vector<std::vector<Cell>> paths;
    ribbon_paths(init, k, paths);
    for (const auto& p : paths) {
        bool ok = true;
        for (const auto& rc : p)
            if (!remaining.count(rc)) {
                ok = false;
                break;
            }
        if (!ok) continue;
        for (const auto& rc : p) remaining.erase(rc);
        cur.push_back(Ribbon{p});
        strip_tilings_rec(remaining, bottoms, k, cur, out, first_only);
        cur.pop_back();
        for (const auto& rc : p) remaining.insert(rc);
    }
}

std::vector<std::vector<Ribbon>> strip_tilings(const Partition& inner, const Partition& outer,
                                               int k, bool first_only) {
    std::vector<std::vector<Ribbon>> out;
    if (!contains(outer, inner)) return out;
    std::set<Cell> th = skew_cells(outer, inner);
    if (th.size() % k != 0) return out;
    std::set<Cell> bottoms = column_bottom_cells(th);
    std::vector<Ribbon> cur;
    strip_tilings_rec(th, bottoms, k, cur, out, first_only);
    return out;
}

int strip_spin2(const std::vector<Ribbon>& tiling) {
    int s = 0;
    for (const auto& r : tiling) s += r.spin2();
    return s;
}

// ordinary horizontal strips: all b >= a with b/a a horizontal strip of m cells
void horizontal_strips(const Partition& a, int m, std::vector<Partition>& out) {
    int rows = static_cast<int>(a.size()) + 1;
    Partition b;
    struct Rec {
        const Partition& a;
        int rows;
        std::vector<Partition>& out;
        void go(Partition& b, int i, int rem) {
            if (i == rows) {
                if (rem == 0) {
                    Partition r = b;
                    while (!r.empty() && r.back() == 0) r.pop_back();
                    out.push_back(r);
                }
                return;
            }
            int ai = i < static_cast<int>(a.size()) ? a[i] : 0;
            int hi = i == 0 ? ai + rem : std::min(a[i - 1], ai + rem);
            for (int v = ai; v <= hi; ++v) {
                if (v - ai > rem) break;
                if (i > 0 && !b.empty() && v > b[i - 1]) break;
                b.push_back(v);
                go(b, i + 1, rem - (v - ai));
                b.pop_back();
            }
        }
    } rec{a, rows, out};
    rec.go(b, 0, m);
}

using StripKey = std::tuple<Partition, int, int>;
std::map<StripKey, std::vector<std::pair<Partition, int>>> strip_cache;

}  // namespace

std::optional<std::vector<Ribbon>> horizontal_strip_tiling(const Partition& inner,
                                                           const Partition& outer, int k) {
    auto ts = strip_tilings(inner, outer, k, true);
    if (ts.empty()) return std::nullopt;
    return ts.front();
}

std::vector<std::vector<Ribbon>> all_strip_tilings(const Partition& inner, const Partition& outer,
                                                   int k) {
    return strip_tilings(inner, outer, k, false);
}

std::vector<std::pair<Partition, int>> enumerate_strips(const Partition& inner, int k, int m) {
    StripKey key{inner, k, m};
    auto it = strip_cache.find(key);
    if (it != strip_cache.end()) return it->second;
    std::vector<std::pair<Partition, int>> res;
    if (m == 0) {
        res.push_back({inner, 0});
    } else {
        CoreQuotient cq = core_quotient(inner, k);
        // distribute m cells over the k quotient components as horizontal strips
        struct Rec {
            const CoreQuotient& cq;
            int k;
            std::vector<Partition> cur;
            std::vector<std::pair<Partition, int>>& res;
            int kk;
            void go(int r, int rem) {
                if (r == k) {
                    if (rem != 0) return;
                    res.push_back({from_core_quotient(cq.core, cur), 0});
                    return;
                }
                for (int take = 0; take <= rem; ++take) {
                    std::vector<Partition> opts;
                    horizontal_strips(cq.quotient[r], take, opts);
                    for (auto& b : opts) {
                        cur.push_back(b);
                        go(r + 1, rem - take);
                        cur.pop_back();
                    }
                }
            }
        } rec{cq, k, {}, res, k};
        rec.go(0, m);
        // fill in spins from the unique tiling
        for (auto& [outer, s2] : res) {
            auto t = horizontal_strip_tiling(inner, outer, k);
            if (!t) throw std::logic_error("enumerate_strips: quotient candidate not tileable");
            s2 = strip_spin2(*t);
        }
        std::sort(res.begin(), res.end());
    }
    strip_cache[key] = res;
    return res;
}

std::vector<std::pair<Partition, int>> enumerate_strips_direct(const Partition& inner, int k,
                                                               int m) {
    std::vector<std::pair<Partition, int>> res;
    if (m == 0) return {{inner, 0}};
    int total = size_of(inner) + k * m;
    for (const auto& outer : partitions_of(total)) {
        if (!contains(outer, inner)) continue;
        auto ts = all_strip_tilings(inner, outer, k);
        if (ts.size() > 1) throw std::logic_error("non-unique strip tiling");
        if (ts.size() == 1) res.push_back({outer, strip_spin2(ts.front())});
    }
    std::sort(res.begin(), res.end());
    return res;
}

std::vector<RibbonTableau> enumerate_ribbon_tableaux(const Partition& outer,
                                                     const Partition& inner, int k,
                                                     const Composition& weight) {
    int total = 0;
    for (int x : weight) total += x;
    if (size_of(outer) - size_of(inner) != k * total)
        throw std::invalid_argument("enumerate_ribbon_tableaux: size mismatch");
    std::vector<RibbonTableau> res;
    std::vector<Partition> chain{inner};
    struct Rec {
        const Partition& outer;
        int k;
        const Composition& weight;
        std::vector<RibbonTableau>& res;
        void go(std::vector<Partition>& chain, size_t i) {
            if (i == weight.size()) {
                if (chain.back() == outer) res.push_back(RibbonTableau{k, chain});
                return;
            }
            for (const auto& [nxt, s2] : enumerate_strips(chain.back(), k, weight[i])) {
                if (!contains(outer, nxt)) continue;
                chain.push_back(nxt);
                go(chain, i + 1);
                chain.pop_back();
            }
        }
    } rec{outer, k, weight, res};
    rec.go(chain, 0);
    return res;
}

int RibbonTableau::spin2() const {
    int tot = 0;
    for (size_t i = 1; i < chain.size(); ++i) {
        if (chain[i] == chain[i - 1]) continue;
        auto t = horizontal_strip_tiling(chain[i - 1], chain[i], k);
        if (!t) throw std::logic_error("RibbonTableau: bad chain step");
        tot += strip_spin2(*t);
    }
    return tot;
}

namespace {
std::map<std::pair<Partition, int>, int> max_spin_cache;
}

int max_spin2(const Partition& lambda, int k) {
    if (lambda.empty()) return 0;
    auto key = std::make_pair(lambda, k);
    auto it = max_spin_cache.find(key);
    if (it != max_spin_cache.end()) return it->second;
    int n = ((static_cast<int>(lambda.size()) + k - 1) / k) * k;
    if (n == 0) n = k;
    std::vector<int> bs = beta_numbers(lambda, n);
    std::set<int> sbs(bs.begin(), bs.end());
    int best = -1;
    for (int b : bs) {
        if (b < k || sbs.count(b - k)) continue;
        std::vector<int> nb;
        for (int x : bs) nb.push_back(x == b ? b - k : x);
        Partition inner = from_beta_numbers(nb);
        int between = 0;
        for (int x : sbs)
            if (x > b - k && x < b) ++between;
        int v = between + max_spin2(inner, k);
        best = std::max(best, v);
    }
    if (best < 0) throw std::invalid_argument("max_spin2: nonempty k-core");
    max_spin_cache[key] = best;
    return best;
}

std::vector<Tableau> stanton_white(const RibbonTableau& T) {
    int k = T.k;
    CoreQuotient base = core_quotient(T.inner(), k);
    if (base.core != T.inner())
        throw std::invalid_argument("stanton_white: inner shape must be the k-core");
    std::vector<std::vector<std::vector<int>>> rows(k);  // per component, per row
    std::vector<Partition> prev(k);                      // empty shapes
    for (size_t i = 1; i < T.chain.size(); ++i) {
        CoreQuotient cq = core_quotient(T.chain[i], k);
        for (int r = 0; r < k; ++r) {
            const Partition& a = prev[r];
            const Partition& b = cq.quotient[r];
            for (size_t row = 0; row < b.size(); ++row) {
                int lo = row < a.size() ? a[row] : 0;
                if (rows[r].size() <= row) rows[r].resize(row + 1);
                for (int c = lo; c < b[row]; ++c) rows[r][row].push_back(static_cast<int>(i));
            }
            prev[r] = b;
        }
    }
    std::vector<Tableau> out;
    for (int r = 0; r < k; ++r) {
        Tableau t;
        t.outer = prev[r];
        t.inner = {};
        t.rows = rows[r];
        out.push_back(std::move(t));
    }
    return out;
}

RibbonTableau stanton_white_inverse(const std::vector<Tableau>& tuple, const Partition& core) {
    int k = static_cast<int>(tuple.size());
    if (k < 1) throw std::invalid_argument("stanton_white_inverse: empty tuple");
    int r_max = 0;
    for (const auto& t : tuple)
        for (const auto& row : t.rows)
            for (int x : row) r_max = std::max(r_max, x);
    RibbonTableau T;
    T.k = k;
    for (int i = 0; i <= r_max; ++i) {
        std::vector<Partition> comps(k);
        for (int r = 0; r < k; ++r) {
            Partition shape;
            for (const auto& row : tuple[r].rows) {
                int cnt = 0;
                for (int x : row)
                    if (x <= i) ++cnt;
                shape.push_back(cnt);
            }
            while (!shape.empty() && shape.back() == 0) shape.pop_back();
            if (!is_partition(shape))
                throw std::invalid_argument("stanton_white_inverse: bad tableau component");
            comps[r] = shape;
        }
        T.chain.push_back(from_core_quotient(core, comps));
    }
    return T;
}

Word column_reading(const RibbonTableau& T) {
    if (T.k != 2) throw std::invalid_argument("column_reading: requires k = 2");
    // collect labeled dominoes from the chain
    struct Dom {
        std::vector<Cell> cells;
        int label;
    };
    std::vector<Dom> doms;
    for (size_t i = 1; i < T.chain.size(); ++i) {
        if (T.chain[i] == T.chain[i - 1]) continue;
        auto t = horizontal_strip_tiling(T.chain[i - 1], T.chain[i], 2);
        if (!t) throw std::logic_error("column_reading: bad chain");
        for (const auto& rib : *t) doms.push_back({rib.cells, static_cast<int>(i)});
    }
    std::map<Cell, int> owner;
    for (size_t d = 0; d < doms.size(); ++d)
        for (const auto& rc : doms[d].cells) owner[rc] = static_cast<int>(d);
    const Partition& shape = T.shape();
    int ncols = shape.empty() ? 0 : shape[0];
    int nrows = static_cast<int>(shape.size());
    Word w;
    for (int c = 1; c <= ncols; ++c) {
        for (int r = nrows; r >= 1; --r) {
            if (shape[r - 1] < c) continue;
            int d = owner.at({r, c});
            const auto& cells = doms[d].cells;
            bool vertical = cells[0].second == cells[1].second;
            if (vertical) {
                int top = std::max(cells[0].first, cells[1].first);
                if (r == top) w.push_back(doms[d].label);
            } else {
                int left = std::min(cells[0].second, cells[1].second);
                if (c == left) w.push_back(doms[d].label);
            }
        }
    }
    return w;
}

std::vector<std::pair<RibbonTableau, int>> enumerate_yamanouchi_domino(const Partition& outer,
                                                                      const Composition& weight) {
    std::vector<std::pair<RibbonTableau, int>> out;
    for (const auto& T : enumerate_ribbon_tableaux(outer, {}, 2, weight))
        if (is_yamanouchi(column_reading(T))) out.push_back({T, T.spin2()});
    return out;
}

}  // namespace ribbontab
