#include "ribbontab/partition.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace ribbontab {

Partition make_partition(std::vector<int> parts) {
    std::sort(parts.begin(), parts.end(), std::greater<int>());
    while (!parts.empty() && parts.back() == 0) parts.pop_back();
    for (int x : parts)
        if (x < 0) throw std::invalid_argument("negative part");
    return parts;
}

bool is_partition(const std::vector<int>& parts) {
    for (size_t i = 0; i < parts.size(); ++i) {
        if (parts[i] <= 0) return false;
        if (i + 1 < parts.size() && parts[i] < parts[i + 1]) return false;
    }
    return true;
}

int size_of(const Partition& p) {
    return std::accumulate(p.begin(), p.end(), 0);
}

Partition conjugate(const Partition& p) {
    Partition out;
    if (p.empty()) return out;
    out.resize(p[0]);
    for (int c = 0; c < p[0]; ++c) {
        int cnt = 0;
        for (int row : p)
            if (row > c) ++cnt;
        out[c] = cnt;
    }
    return out;
}

bool dominance_leq(const Partition& a, const Partition& b) {
    if (size_of(a) != size_of(b)) throw std::invalid_argument("dominance_leq: size mismatch");
    int sa = 0, sb = 0;
    size_t n = std::max(a.size(), b.size());
    for (size_t i = 0; i < n; ++i) {
        sa += i < a.size() ? a[i] : 0;
        sb += i < b.size() ? b[i] : 0;
        if (sa > sb) return false;
    }
    return true;
}

long n_stat(const Partition& mu) {
    long s = 0;
    for (size_t i = 0; i < mu.size(); ++i) s += static_cast<long>(i) * mu[i];
    return s;
}

Partition join(const Partition& a, const Partition& b) {
    Partition out = a;
    out.insert(out.end(), b.begin(), b.end());
    return make_partition(std::move(out));
}

Partition dilate(const Partition& mu, int k) {
    Partition out = mu;
    for (int& x : out) x *= k;
    return out;
}

Partition repeat_join(const Partition& mu, int k) {
    Partition out;
    for (int i = 0; i < k; ++i) out.insert(out.end(), mu.begin(), mu.end());
    return make_partition(std::move(out));
}

bool contains(const Partition& outer, const Partition& inner) {
    if (inner.size() > outer.size()) return false;
    for (size_t i = 0; i < inner.size(); ++i)
        if (inner[i] > outer[i]) return false;
    return true;
}

std::vector<int> beta_numbers(const Partition& p, int n) {
    std::vector<int> bs;
    bs.reserve(n);
    for (int i = 1; i <= n; ++i) {
        int part = i <= static_cast<int>(p.size()) ? p[i - 1] : 0;
        bs.push_back(part + n - i);
    }
    return bs;  // strictly decreasing
}

Partition from_beta_numbers(std::vector<int> bs) {
    std::sort(bs.begin(), bs.end(), std::greater<int>());
    int n = static_cast<int>(bs.size());
    Partition p;
    for (int i = 1; i <= n; ++i) {
        int part = bs[i - 1] - (n - i);
        if (part < 0) throw std::invalid_argument("bad beta numbers");
        if (part > 0) p.push_back(part);
    }
    if (!is_partition(p)) throw std::invalid_argument("bad beta numbers");
    return p;
}

CoreQuotient core_quotient(const Partition& p, int k) {
    if (k < 1) throw std::invalid_argument("core_quotient: k must be positive");
    int n = ((static_cast<int>(p.size()) + k - 1) / k) * k;
    if (n == 0) n = k;
    std::vector<int> bs = beta_numbers(p, n);
    std::vector<std::vector<int>> runners(k);
    for (int b : bs) runners[b % k].push_back(b / k);
    CoreQuotient cq;
    cq.quotient.resize(k);
    std::vector<int> core_bs;
    for (int r = 0; r < k; ++r) {
        std::sort(runners[r].begin(), runners[r].end(), std::greater<int>());
        cq.quotient[r] = from_beta_numbers(runners[r]);
        // push beads down runner r: positions j*k + r for j < count
        for (int j = 0; j < static_cast<int>(runners[r].size()); ++j)
            core_bs.push_back(j * k + r);
    }
    cq.core = from_beta_numbers(core_bs);
    return cq;
}

Partition from_core_quotient(const Partition& core, const std::vector<Partition>& quotient) {
    int k = static_cast<int>(quotient.size());
    if (k < 1) throw std::invalid_argument("from_core_quotient: empty quotient");
    // beads per runner for the core, with enough rows for every component
    int n = ((static_cast<int>(core.size()) + k - 1) / k) * k;
    if (n == 0) n = k;
    // grow the abacus until every runner has enough beads for its component
    int m = n / k;
    std::vector<int> counts(k, 0);
    std::vector<int> bs;
    for (;;) {
        n = m * k;
        bs = beta_numbers(core, n);
        std::fill(counts.begin(), counts.end(), 0);
        for (int b : bs) counts[b % k]++;
        bool ok = true;
        for (int r = 0; r < k; ++r)
            if (counts[r] < static_cast<int>(quotient[r].size())) ok = false;
        if (ok) break;
        ++m;
    }
    // a valid k-core has its beads pushed down on every runner
    for (int b : bs)
        if (b / k >= counts[b % k]) throw std::invalid_argument("from_core_quotient: not a core");
    std::vector<int> out;
    for (int r = 0; r < k; ++r) {
        std::vector<int> qb = beta_numbers(quotient[r], counts[r]);
        for (int j : qb) out.push_back(j * k + r);
    }
    return from_beta_numbers(out);
}

// Remove one k-ribbon: beta move b -> b-k; height-1 = number of beta values
// strictly between. Searches any removal order keeping the shape over inner.
static bool k_sign_search(const Partition& cur, const Partition& inner, int k, int& sign) {
    if (cur == inner) return true;
    int n = std::max(static_cast<int>(cur.size()), static_cast<int>(inner.size())) + 1;
    std::vector<int> bs = beta_numbers(cur, n);
    for (size_t i = 0; i < bs.size(); ++i) {
        int b = bs[i];
        if (b < k) continue;
        if (std::find(bs.begin(), bs.end(), b - k) != bs.end()) continue;
        int between = 0;
        for (int x : bs)
            if (x > b - k && x < b) ++between;
        std::vector<int> nb = bs;
        nb[i] = b - k;
        Partition next = from_beta_numbers(nb);
        if (!contains(next, inner)) continue;
        int s = (between % 2 == 0) ? 1 : -1;
        if (k_sign_search(next, inner, k, sign)) {
            sign *= s;
            return true;
        }
    }
    return false;
}

int k_sign(const Partition& outer, const Partition& inner, int k) {
    if (!contains(outer, inner)) throw std::invalid_argument("k_sign: inner not contained in outer");
    if ((size_of(outer) - size_of(inner)) % k != 0)
        throw std::invalid_argument("k_sign: size difference not divisible by k");
    int sign = 1;
    if (!k_sign_search(outer, inner, k, sign)) throw std::invalid_argument("k_sign: not tileable");
    return sign;
}

static void gen_parts(int n, int maxpart, Partition& cur, std::vector<Partition>& out, int max_len) {
    if (n == 0) {
        out.push_back(cur);
        return;
    }
    if (max_len >= 0 && static_cast<int>(cur.size()) >= max_len) return;
    for (int i = std::min(n, maxpart); i >= 1; --i) {
        cur.push_back(i);
        gen_parts(n - i, i, cur, out, max_len);
        cur.pop_back();
    }
}

std::vector<Partition> partitions_of(int n) { return partitions_of(n, -1); }

std::vector<Partition> partitions_of(int n, int max_len) {
    std::vector<Partition> out;
    Partition cur;
    if (n >= 0) gen_parts(n, n == 0 ? 1 : n, cur, out, max_len);
    return out;
}

std::string partition_to_string(const Partition& p) {
    std::ostringstream os;
    for (size_t i = 0; i < p.size(); ++i) {
        if (i) os << ',';
        os << p[i];
    }
    return os.str();
}

static std::vector<int> ints_from_string(const std::string& s) {
    std::vector<int> out;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        if (tok.empty()) continue;
        out.push_back(std::stoi(tok));
    }
    return out;
}

Partition partition_from_string(const std::string& s) {
    std::vector<int> v = ints_from_string(s);
    if (!is_partition(v)) throw std::invalid_argument("not a partition: " + s);
    return v;
}

Composition composition_from_string(const std::string& s) {
    std::vector<int> v = ints_from_string(s);
    for (int x : v)
        if (x < 0) throw std::invalid_argument("negative composition part: " + s);
    return v;
}

}  // namespace ribbontab
