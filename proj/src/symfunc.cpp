#include "ribbontab/symfunc.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

#include "ribbontab/ribbon.hpp"
#include "ribbontab/tableaux.hpp"

namespace ribbontab {

std::string basis_name(Basis b) {
    switch (b) {
        case Basis::schur: return "schur";
        case Basis::monomial: return "monomial";
        case Basis::complete: return "complete";
        case Basis::elementary: return "elementary";
        case Basis::powersum: return "powersum";
    }
    return "?";
}

Basis basis_from_string(const std::string& s) {
    if (s == "schur") return Basis::schur;
    if (s == "monomial") return Basis::monomial;
    if (s == "complete") return Basis::complete;
    if (s == "elementary") return Basis::elementary;
    if (s == "powersum") return Basis::powersum;
    throw std::invalid_argument("unknown basis: " + s);
}

SymFunc SymFunc::single(Basis b, const Partition& p, LaurentPoly c) {
    SymFunc f(b);
    f.add_term(p, c);
    return f;
}

void SymFunc::add_term(const Partition& p, const LaurentPoly& c) {
    if (c.is_zero()) return;
    auto it = coeffs.find(p);
    if (it == coeffs.end()) {
        coeffs.emplace(p, c);
        return;
    }
    it->second += c;
    if (it->second.is_zero()) coeffs.erase(it);
}

SymFunc& SymFunc::operator+=(const SymFunc& o) {
    if (o.basis != basis) return *this += convert(o, basis);
    for (const auto& [p, c] : o.coeffs) add_term(p, c);
    return *this;
}

SymFunc& SymFunc::operator-=(const SymFunc& o) {
    if (o.basis != basis) return *this -= convert(o, basis);
    for (const auto& [p, c] : o.coeffs) add_term(p, -c);
    return *this;
}

SymFunc SymFunc::operator+(const SymFunc& o) const {
    SymFunc r = *this;
    r += o;
    return r;
}

SymFunc SymFunc::operator-(const SymFunc& o) const {
    SymFunc r = *this;
    r -= o;
    return r;
}

SymFunc SymFunc::scaled(const LaurentPoly& c) const {
    SymFunc out(basis);
    for (const auto& [p, v] : coeffs) out.add_term(p, v * c);
    return out;
}

mpz_class z_stat(const Partition& mu) {
    mpz_class z = 1;
    size_t i = 0;
    while (i < mu.size()) {
        size_t j = i;
        while (j < mu.size() && mu[j] == mu[i]) ++j;
        for (size_t r = 1; r <= j - i; ++r) z *= static_cast<long>(r) * mu[i];
        i = j;
    }
    return z;
}

namespace {

// border-strip removals of size r: (smaller shape, height)
std::vector<std::pair<Partition, int>> strip_removals(const Partition& p, int r) {
    std::vector<std::pair<Partition, int>> out;
    int n = static_cast<int>(p.size());
    if (n == 0) return out;
    std::vector<int> bs = beta_numbers(p, n);
    std::set<int> sbs(bs.begin(), bs.end());
    for (int b : bs) {
        if (b - r < 0 || sbs.count(b - r)) continue;
        std::vector<int> nb;
        for (int x : bs) nb.push_back(x == b ? b - r : x);
        int between = 0;
        for (int x : sbs)
            if (x > b - r && x < b) ++between;
        out.push_back({from_beta_numbers(nb), between + 1});
    }
    return out;
}

}  // namespace

long mn_character(const Partition& lambda, const Partition& mu) {
    static std::map<std::pair<Partition, Partition>, long> cache;
    if (size_of(lambda) != size_of(mu))
        throw std::invalid_argument("mn_character: size mismatch");
    if (lambda.empty()) return 1;
    auto key = std::make_pair(lambda, mu);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
    int r = mu[0];
    Partition rest(mu.begin() + 1, mu.end());
    long v = 0;
    for (const auto& [sm, h] : strip_removals(lambda, r))
        v += (h % 2 == 1 ? 1 : -1) * mn_character(sm, rest);
    cache[key] = v;
    return v;
}

namespace {

using Row = std::map<Partition, mpq_class>;

// Schur expansion rows of the classical bases, cached per index partition.

const Row& complete_to_schur(const Partition& nu) {
    static std::map<Partition, Row> cache;
    auto it = cache.find(nu);
    if (it != cache.end()) return it->second;
    Row row;
    for (const auto& lam : partitions_of(size_of(nu))) {
        long k = kostka_number(lam, nu);
        if (k != 0) row[lam] = k;
    }
    return cache.emplace(nu, std::move(row)).first->second;
}

const Row& schur_to_monomial_row(const Partition& lam) {
    static std::map<Partition, Row> cache;
    auto it = cache.find(lam);
    if (it != cache.end()) return it->second;
    Row row;
    for (const auto& mu : partitions_of(size_of(lam))) {
        long k = kostka_number(lam, mu);
        if (k != 0) row[mu] = k;
    }
    return cache.emplace(lam, std::move(row)).first->second;
}

const Row& monomial_to_schur(const Partition& nu) {
    static std::map<Partition, Row> cache;
    auto it = cache.find(nu);
    if (it != cache.end()) return it->second;
    // unitriangular elimination: the lex-largest remaining monomial index is
    // also dominance-maximal, so peel it with the matching Schur row
    Row work{{nu, 1}};
    Row res;
    while (!work.empty()) {
        auto top = std::prev(work.end());
        Partition lam = top->first;
        mpq_class c = top->second;
        work.erase(top);
        if (c == 0) continue;
        res[lam] += c;
        for (const auto& [mu, k] : schur_to_monomial_row(lam)) {
            if (mu == lam) continue;
            work[mu] -= c * k;
            if (work[mu] == 0) work.erase(mu);
        }
    }
    for (auto it2 = res.begin(); it2 != res.end();)
        it2 = it2->second == 0 ? res.erase(it2) : std::next(it2);
    return cache.emplace(nu, std::move(res)).first->second;
}

const Row& powersum_to_schur(const Partition& mu) {
    static std::map<Partition, Row> cache;
    auto it = cache.find(mu);
    if (it != cache.end()) return it->second;
    Row row;
    for (const auto& lam : partitions_of(size_of(mu))) {
        long chi = mn_character(lam, mu);
        if (chi != 0) row[lam] = chi;
    }
    return cache.emplace(mu, std::move(row)).first->second;
}

SymFunc to_schur(const SymFunc& f) {
    if (f.basis == Basis::schur) return f;
    SymFunc out(Basis::schur);
    for (const auto& [p, c] : f.coeffs) {
        switch (f.basis) {
            case Basis::complete:
                for (const auto& [lam, k] : complete_to_schur(p))
                    out.add_term(lam, c * LaurentPoly(k));
                break;
            case Basis::elementary:
                for (const auto& [lam, k] : complete_to_schur(p))
                    out.add_term(conjugate(lam), c * LaurentPoly(k));
                break;
            case Basis::monomial:
                for (const auto& [lam, k] : monomial_to_schur(p))
                    out.add_term(lam, c * LaurentPoly(k));
                break;
            case Basis::powersum:
                for (const auto& [lam, chi] : powersum_to_schur(p))
                    out.add_term(lam, c * LaurentPoly(chi));
                break;
            case Basis::schur:
                break;
        }
    }
    return out;
}

SymFunc schur_to(const SymFunc& f, Basis target) {
    if (target == Basis::schur) return f;
    SymFunc out(target);
    switch (target) {
        case Basis::monomial:
            for (const auto& [lam, c] : f.coeffs)
                for (const auto& [mu, k] : schur_to_monomial_row(lam))
                    out.add_term(mu, c * LaurentPoly(k));
            break;
        case Basis::powersum:
            for (const auto& [lam, c] : f.coeffs) {
                for (const auto& mu : partitions_of(size_of(lam))) {
                    long chi = mn_character(lam, mu);
                    if (chi == 0) continue;
                    out.add_term(mu, c * LaurentPoly(mpq_class(chi) / mpq_class(z_stat(mu))));
                }
            }
            break;
        case Basis::complete: {
            // coefficient of h_nu is <f, m_nu>
            std::set<int> degrees;
            for (const auto& [lam, c] : f.coeffs) degrees.insert(size_of(lam));
            for (int n : degrees)
                for (const auto& nu : partitions_of(n)) {
                    LaurentPoly c;
                    for (const auto& [lam, k] : monomial_to_schur(nu)) {
                        auto it = f.coeffs.find(lam);
                        if (it != f.coeffs.end()) c += it->second * LaurentPoly(k);
                    }
                    out.add_term(nu, c);
                }
            break;
        }
        case Basis::elementary: {
            SymFunc conj(Basis::schur);
            for (const auto& [lam, c] : f.coeffs) conj.add_term(conjugate(lam), c);
            SymFunc h = schur_to(conj, Basis::complete);
            out.coeffs = h.coeffs;
            break;
        }
        case Basis::schur:
            break;
    }
    return out;
}

}  // namespace

SymFunc convert(const SymFunc& f, Basis target) {
    if (f.basis == target) return f;
    return schur_to(to_schur(f), target);
}

SymFunc SymFunc::operator*(const SymFunc& o) const {
    SymFunc a = convert(*this, Basis::powersum);
    SymFunc b = convert(o, Basis::powersum);
    SymFunc prod(Basis::powersum);
    for (const auto& [p, c] : a.coeffs)
        for (const auto& [r, d] : b.coeffs) prod.add_term(join(p, r), c * d);
    return convert(prod, basis);
}

LaurentPoly scalar_product(const SymFunc& f, const SymFunc& g) {
    SymFunc a = to_schur(f);
    SymFunc b = to_schur(g);
    LaurentPoly out;
    for (const auto& [p, c] : a.coeffs) {
        auto it = b.coeffs.find(p);
        if (it != b.coeffs.end()) out += c * it->second;
    }
    return out;
}

SymFunc omega(const SymFunc& f) {
    switch (f.basis) {
        case Basis::schur: {
            SymFunc out(Basis::schur);
            for (const auto& [p, c] : f.coeffs) out.add_term(conjugate(p), c);
            return out;
        }
        case Basis::complete: {
            SymFunc out = f;
            out.basis = Basis::elementary;
            return out;
        }
        case Basis::elementary: {
            SymFunc out = f;
            out.basis = Basis::complete;
            return out;
        }
        case Basis::powersum: {
            SymFunc out(Basis::powersum);
            for (const auto& [p, c] : f.coeffs) {
                int sgn = (size_of(p) - static_cast<int>(p.size())) % 2 ? -1 : 1;
                out.add_term(p, c * LaurentPoly(sgn));
            }
            return out;
        }
        case Basis::monomial:
            return convert(omega(to_schur(f)), Basis::monomial);
    }
    return f;
}

LaurentPoly kostka_foulkes(const Partition& lambda, const Partition& mu) {
    static std::map<std::pair<Partition, Partition>, LaurentPoly> cache;
    auto key = std::make_pair(lambda, mu);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
    LaurentPoly out;
    if (size_of(lambda) == size_of(mu) && dominance_leq(mu, lambda))
        for (const auto& t : enumerate_ssyt(lambda, {}, mu))
            out.add_term(static_cast<int>(charge(t.row_reading_word())), 1);
    cache[key] = out;
    return out;
}

std::optional<std::pair<Partition, int>> muir_reduce(const std::vector<int>& alpha) {
    int n = static_cast<int>(alpha.size());
    std::vector<int> b(n);
    for (int i = 0; i < n; ++i) b[i] = alpha[i] + (n - 1 - i);
    // straighten: sort the shifted sequence, tracking the permutation sign
    int sign = 1;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            if (b[i] == b[j]) return std::nullopt;
            if (b[i] < b[j]) sign = -sign;
        }
    std::sort(b.begin(), b.end(), std::greater<int>());
    Partition lam;
    for (int i = 0; i < n; ++i) {
        int part = b[i] - (n - 1 - i);
        if (part < 0) return std::nullopt;
        if (part > 0) lam.push_back(part);
    }
    return std::make_pair(lam, sign);
}

SymFunc schur_times_monomial(const Partition& nu, const Partition& alpha) {
    SymFunc out(Basis::schur);
    if (alpha.empty()) {
        out.add_term(nu, LaurentPoly(mpq_class(1)));
        return out;
    }
    int n = static_cast<int>(nu.size()) + size_of(alpha);
    std::vector<int> beta(n, 0);
    std::copy(alpha.begin(), alpha.end(), beta.begin());
    std::sort(beta.begin(), beta.end());
    do {
        std::vector<int> gamma(n, 0);
        for (int i = 0; i < n; ++i)
            gamma[i] = (i < static_cast<int>(nu.size()) ? nu[i] : 0) + beta[i];
        auto red = muir_reduce(gamma);
        if (red) out.add_term(red->first, LaurentPoly(mpq_class(red->second)));
    } while (std::next_permutation(beta.begin(), beta.end()));
    return out;
}

SymFunc hall_littlewood_qprime(const Partition& mu) {
    static std::map<Partition, SymFunc> cache;
    auto it = cache.find(mu);
    if (it != cache.end()) return it->second;
    SymFunc out(Basis::schur);
    for (const auto& lam : partitions_of(size_of(mu)))
        out.add_term(lam, kostka_foulkes(lam, mu));
    cache[mu] = out;
    return out;
}

SymFunc qprime_tilde(const Partition& mu) {
    LaurentPoly shift = LaurentPoly::monomial(static_cast<int>(n_stat(mu)));
    return hall_littlewood_qprime(mu).map_coeffs(
        [&](const LaurentPoly& c) { return shift * c.invert_q(); });
}

LaurentPoly skew_kostka_foulkes(const Partition& lambda, const Partition& nu,
                                const Partition& alpha) {
    if (!contains(lambda, nu)) throw std::invalid_argument("skew_kostka_foulkes: nu not in lambda");
    int m = size_of(lambda) - size_of(nu);
    SymFunc skew(Basis::monomial);
    for (const auto& tau : partitions_of(m)) {
        long cnt = static_cast<long>(enumerate_ssyt(lambda, nu, tau).size());
        if (cnt) skew.add_term(tau, LaurentPoly(cnt));
    }
    return scalar_product(skew, hall_littlewood_qprime(alpha));
}

SymFunc plethysm_power(const SymFunc& f, int k) {
    if (k < 1) throw std::invalid_argument("plethysm_power: k must be positive");
    SymFunc p = convert(f, Basis::powersum);
    SymFunc out(Basis::powersum);
    for (const auto& [mu, c] : p.coeffs) out.add_term(dilate(mu, k), c);
    return convert(out, f.basis);
}

SymFunc plethysm_compose(const SymFunc& g, const SymFunc& f) {
    SymFunc gp = convert(g, Basis::powersum);
    SymFunc out(Basis::powersum);
    for (const auto& [mu, c] : gp.coeffs) {
        SymFunc term = SymFunc::single(Basis::powersum, {}, c);
        for (int part : mu) term = term * plethysm_power(convert(f, Basis::powersum), part);
        out += term;
    }
    return out;
}

SymFunc pk_h_via_ribbons(const Partition& mu, int k) {
    SymFunc out(Basis::schur);
    if (mu.empty()) {
        out.add_term({}, LaurentPoly(mpq_class(1)));
        return out;
    }
    int total = k * size_of(mu);
    for (const auto& lam : partitions_of(total)) {
        if (!core_quotient(lam, k).core.empty()) continue;
        long cnt = static_cast<long>(enumerate_ribbon_tableaux(lam, {}, k, mu).size());
        if (cnt == 0) continue;
        int sgn = k_sign(lam, {}, k);
        out.add_term(lam, LaurentPoly(mpq_class(sgn * cnt)));
    }
    return out;
}

SymFunc phi_k_schur(const Partition& lambda, int k) {
    SymFunc out(Basis::schur);
    CoreQuotient cq = core_quotient(lambda, k);
    if (!cq.core.empty()) return out;
    int sgn = lambda.empty() ? 1 : k_sign(lambda, {}, k);
    out.add_term({}, LaurentPoly(mpq_class(sgn)));
    for (const auto& comp : cq.quotient) {
        if (comp.empty()) continue;
        out = out * SymFunc::single(Basis::schur, comp);
    }
    return out;
}

SymFunc cyclic_character(int k, int r) {
    SymFunc out(Basis::powersum);
    for (int d = 1; d <= k; ++d) {
        if (k % d) continue;
        long c = ramanujan_c(r, d);
        if (c == 0) continue;
        Partition mu(k / d, d);
        mpq_class coeff(c, k);
        coeff.canonicalize();
        out.add_term(mu, LaurentPoly(coeff));
    }
    return out;
}

std::string symfunc_to_string(const SymFunc& f) {
    if (f.coeffs.empty()) return "0";
    const char* letter = "smhep";
    std::ostringstream os;
    bool first = true;
    for (const auto& [p, c] : f.coeffs) {
        if (!first) os << " + ";
        first = false;
        os << "(" << c.to_string() << ")*" << letter[static_cast<int>(f.basis)] << "["
           << partition_to_string(p) << "]";
    }
    return os.str();
}

}  // namespace ribbontab
