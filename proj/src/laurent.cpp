#include "ribbontab/laurent.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

namespace ribbontab {

void LaurentPoly::add_term(int exp, const mpq_class& c) {
    if (c == 0) return;
    auto it = terms.find(exp);
    if (it == terms.end()) {
        terms.emplace(exp, c);
    } else {
        it->second += c;
        if (it->second == 0) terms.erase(it);
    }
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
    for (const auto& [e, c] : o.terms) add_term(e, c);
    return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
    for (const auto& [e, c] : o.terms) add_term(e, -c);
    return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    LaurentPoly out;
    for (const auto& [ea, ca] : a.terms)
        for (const auto& [eb, cb] : b.terms) out.add_term(ea + eb, ca * cb);
    return out;
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly out;
    for (const auto& [e, c] : terms) out.terms[e] = -c;
    return out;
}

LaurentPoly LaurentPoly::invert_q() const { return substitute_power(-1); }

LaurentPoly LaurentPoly::substitute_power(int k) const {
    LaurentPoly out;
    for (const auto& [e, c] : terms) out.add_term(e * k, c);
    return out;
}

mpq_class LaurentPoly::evaluate_at_one() const {
    mpq_class s = 0;
    for (const auto& [e, c] : terms) s += c;
    return s;
}

mpq_class LaurentPoly::coeff(int exp) const {
    auto it = terms.find(exp);
    return it == terms.end() ? mpq_class(0) : it->second;
}

static std::string coeff_str(const mpq_class& c) {
    std::ostringstream os;
    os << c;
    return os.str();
}

std::string LaurentPoly::to_string() const {
    if (terms.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms) {
        mpq_class a = c;
        if (first) {
            if (a < 0) {
                os << "-";
                a = -a;
            }
        } else {
            os << (a < 0 ? " - " : " + ");
            if (a < 0) a = -a;
        }
        first = false;
        if (e == 0) {
            os << coeff_str(a);
        } else {
            if (a != 1) os << coeff_str(a) << "*";
            os << "q";
            if (e != 1) os << "^" << e;
        }
    }
    return os.str();
}

std::string ModulusPoly::to_string() const {
    LaurentPoly p;
    for (size_t i = 0; i < coeffs.size(); ++i)
        if (coeffs[i] != 0) p.terms[static_cast<int>(i)] = mpq_class(coeffs[i]);
    return p.to_string();
}

ModulusPoly q_power_minus_one(int k) {
    if (k < 1) throw std::invalid_argument("q_power_minus_one: k must be positive");
    ModulusPoly m;
    m.coeffs.assign(k + 1, 0);
    m.coeffs[0] = -1;
    m.coeffs[k] = 1;
    return m;
}

// exact division of integer polynomials, remainder must vanish
static std::vector<mpz_class> poly_divide(std::vector<mpz_class> num, const std::vector<mpz_class>& den) {
    int dn = static_cast<int>(num.size()) - 1;
    int dd = static_cast<int>(den.size()) - 1;
    std::vector<mpz_class> quot(dn - dd + 1, 0);
    for (int i = dn; i >= dd; --i) {
        if (num[i] == 0) continue;
        mpz_class f = num[i] / den[dd];
        if (f * den[dd] != num[i]) throw std::logic_error("poly_divide: not exact");
        quot[i - dd] = f;
        for (int j = 0; j <= dd; ++j) num[i - dd + j] -= f * den[j];
    }
    for (const auto& c : num)
        if (c != 0) throw std::logic_error("poly_divide: nonzero remainder");
    return quot;
}

ModulusPoly cyclotomic(int k) {
    if (k < 1) throw std::invalid_argument("cyclotomic: k must be positive");
    std::vector<mpz_class> num = q_power_minus_one(k).coeffs;
    for (int d = 1; d < k; ++d) {
        if (k % d != 0) continue;
        std::vector<mpz_class> phi_d = cyclotomic(d).coeffs;
        num = poly_divide(std::move(num), phi_d);
    }
    ModulusPoly m;
    m.coeffs = std::move(num);
    return m;
}

// q^(-1) mod m, valid when the constant term of m is a unit
static LaurentPoly q_inverse_mod(const ModulusPoly& m) {
    const mpz_class& c0 = m.coeffs[0];
    if (c0 != 1 && c0 != -1) throw std::invalid_argument("reduce_mod: q not invertible");
    LaurentPoly inv;
    mpq_class scale = -mpq_class(1) / mpq_class(c0);
    for (size_t i = 1; i < m.coeffs.size(); ++i)
        if (m.coeffs[i] != 0) inv.add_term(static_cast<int>(i) - 1, scale * mpq_class(m.coeffs[i]));
    return inv;
}

static LaurentPoly reduce_nonneg(const LaurentPoly& p, const ModulusPoly& m) {
    int d = m.degree();
    std::map<int, mpq_class> work(p.terms);
    LaurentPoly out;
    while (!work.empty()) {
        auto it = std::prev(work.end());
        int e = it->first;
        mpq_class c = it->second;
        work.erase(it);
        if (c == 0) continue;
        if (e < d) {
            out.add_term(e, c);
            continue;
        }
        // q^e = q^(e-d) * (q^d mod m)
        for (int j = 0; j < d; ++j) {
            if (m.coeffs[j] == 0) continue;
            mpq_class add = -c * mpq_class(m.coeffs[j]);
            int ne = e - d + j;
            auto w = work.find(ne);
            if (w == work.end())
                work.emplace(ne, add);
            else {
                w->second += add;
                if (w->second == 0) work.erase(w);
            }
        }
    }
    return out;
}

LaurentPoly reduce_mod(const LaurentPoly& p, const ModulusPoly& m) {
    if (m.degree() < 1) throw std::invalid_argument("reduce_mod: modulus degree must be >= 1");
    LaurentPoly nonneg, shifted;
    int min_exp = 0;
    for (const auto& [e, c] : p.terms) min_exp = std::min(min_exp, e);
    if (min_exp < 0) {
        LaurentPoly qinv = q_inverse_mod(m);
        LaurentPoly acc;
        // split off negative exponents and fold them through q^(-1) powers
        LaurentPoly qinv_pow{mpq_class(1)};
        int cur = 0;
        std::map<int, LaurentPoly> by_neg;
        for (const auto& [e, c] : p.terms) {
            if (e >= 0)
                nonneg.add_term(e, c);
            else
                by_neg[-e] += LaurentPoly(c);
        }
        for (const auto& [t, c] : by_neg) {
            while (cur < t) {
                qinv_pow = reduce_nonneg(qinv_pow * qinv, m);
                ++cur;
            }
            acc += c * qinv_pow;
        }
        nonneg += acc;
    } else {
        nonneg = p;
    }
    return reduce_nonneg(nonneg, m);
}

long euler_phi(long n) {
    long result = n;
    for (long p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            while (n % p == 0) n /= p;
            result -= result / p;
        }
    }
    if (n > 1) result -= result / n;
    return result;
}

int moebius(long n) {
    int result = 1;
    for (long p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            n /= p;
            if (n % p == 0) return 0;
            result = -result;
        }
    }
    if (n > 1) result = -result;
    return result;
}

long ramanujan_c(long k, long n) {
    if (n < 1) throw std::invalid_argument("ramanujan_c: n must be positive");
    long d = std::gcd(k, n);
    long m = n / d;
    int mu = moebius(m);
    if (mu == 0) return 0;
    return mu * (euler_phi(n) / euler_phi(m));
}

}  // namespace ribbontab
