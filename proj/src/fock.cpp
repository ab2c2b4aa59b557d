#include "ribbontab/fock.hpp"

#include <set>
#include <stdexcept>

#include "ribbontab/ribbon.hpp"

namespace ribbontab {

FockVector FockVector::vacuum(int n_) {
    FockVector v(n_);
    v.coeffs[{}] = LaurentPoly(mpq_class(1));
    return v;
}

void FockVector::add_term(const Partition& p, const LaurentPoly& c) {
    if (c.is_zero()) return;
    auto it = coeffs.find(p);
    if (it == coeffs.end()) {
        coeffs.emplace(p, c);
        return;
    }
    it->second += c;
    if (it->second.is_zero()) coeffs.erase(it);
}

FockVector FockVector::scaled(const LaurentPoly& c) const {
    FockVector out(n);
    for (const auto& [p, v] : coeffs) out.add_term(p, v * c);
    return out;
}

FockVector FockVector::operator+(const FockVector& o) const {
    if (n != o.n) throw std::invalid_argument("FockVector: modulus mismatch");
    FockVector out = *this;
    for (const auto& [p, c] : o.coeffs) out.add_term(p, c);
    return out;
}

FockVector FockVector::operator-(const FockVector& o) const {
    if (n != o.n) throw std::invalid_argument("FockVector: modulus mismatch");
    FockVector out = *this;
    for (const auto& [p, c] : o.coeffs) out.add_term(p, -c);
    return out;
}

int residue(int row, int col, int n) {
    int r = (col - row) % n;
    return r < 0 ? r + n : r;
}

namespace {

// addable cells (row, col), row 1 holding the largest part
std::vector<Cell> addable_cells(const Partition& p) {
    std::vector<Cell> out;
    for (int r = 1; r <= static_cast<int>(p.size()) + 1; ++r) {
        int cur = r <= static_cast<int>(p.size()) ? p[r - 1] : 0;
        if (r == 1 || cur < p[r - 2]) out.push_back({r, cur + 1});
    }
    return out;
}

std::vector<Cell> removable_cells(const Partition& p) {
    std::vector<Cell> out;
    for (int r = 1; r <= static_cast<int>(p.size()); ++r) {
        int nxt = r < static_cast<int>(p.size()) ? p[r] : 0;
        if (p[r - 1] > nxt) out.push_back({r, p[r - 1]});
    }
    return out;
}

Partition with_cell(const Partition& p, Cell rc, int delta) {
    std::vector<int> lam(p);
    if (rc.first > static_cast<int>(lam.size())) lam.resize(rc.first, 0);
    lam[rc.first - 1] += delta;
    return make_partition(std::move(lam));
}

}  // namespace

FockVector f_action(int i, const FockVector& v) {
    FockVector out(v.n);
    for (const auto& [lam, coef] : v.coeffs) {
        std::vector<Cell> adds, rems;
        for (const auto& rc : addable_cells(lam))
            if (residue(rc.first, rc.second, v.n) == i) adds.push_back(rc);
        for (const auto& rc : removable_cells(lam))
            if (residue(rc.first, rc.second, v.n) == i) rems.push_back(rc);
        for (const auto& g : adds) {
            int nr = 0;
            for (const auto& a : adds)
                if (a.second > g.second) ++nr;
            for (const auto& a : rems)
                if (a.second > g.second) --nr;
            out.add_term(with_cell(lam, g, +1), coef * LaurentPoly::monomial(nr));
        }
    }
    return out;
}

FockVector e_action(int i, const FockVector& v) {
    FockVector out(v.n);
    for (const auto& [nu, coef] : v.coeffs) {
        for (const auto& g : removable_cells(nu)) {
            if (residue(g.first, g.second, v.n) != i) continue;
            Partition lam = with_cell(nu, g, -1);
            int nl = 0;
            for (const auto& a : addable_cells(lam))
                if (residue(a.first, a.second, v.n) == i && a.second < g.second) ++nl;
            for (const auto& a : removable_cells(lam))
                if (residue(a.first, a.second, v.n) == i && a.second < g.second) --nl;
            out.add_term(lam, coef * LaurentPoly::monomial(-nl));
        }
    }
    return out;
}

FockVector qh_action(int i, const FockVector& v) {
    FockVector out(v.n);
    for (const auto& [lam, coef] : v.coeffs) {
        int ni = 0;
        for (const auto& rc : addable_cells(lam))
            if (residue(rc.first, rc.second, v.n) == i) ++ni;
        for (const auto& rc : removable_cells(lam))
            if (residue(rc.first, rc.second, v.n) == i) --ni;
        out.add_term(lam, coef * LaurentPoly::monomial(ni));
    }
    return out;
}

FockVector qd_action(const FockVector& v) {
    FockVector out(v.n);
    for (const auto& [lam, coef] : v.coeffs) {
        int n0 = 0;
        for (int r = 1; r <= static_cast<int>(lam.size()); ++r)
            for (int c = 1; c <= lam[r - 1]; ++c)
                if (residue(r, c, v.n) == 0) ++n0;
        out.add_term(lam, coef * LaurentPoly::monomial(-n0));
    }
    return out;
}

FockVector v_op(int k, const FockVector& v) {
    FockVector out(v.n);
    for (const auto& [lam, coef] : v.coeffs)
        for (const auto& [outer, s2] : enumerate_strips(lam, v.n, k)) {
            int sgn = s2 % 2 ? -1 : 1;
            out.add_term(outer, coef * LaurentPoly::monomial(-s2, sgn));
        }
    return out;
}

FockVector u_op(int k, const FockVector& v) {
    FockVector out(v.n);
    for (const auto& [nu, coef] : v.coeffs) {
        int small = size_of(nu) - v.n * k;
        if (small < 0) continue;
        for (const auto& lam : partitions_of(small)) {
            if (!contains(nu, lam)) continue;
            auto t = horizontal_strip_tiling(lam, nu, v.n);
            if (!t) continue;
            int s2 = 0;
            for (const auto& r : *t) s2 += r.spin2();
            int sgn = s2 % 2 ? -1 : 1;
            out.add_term(lam, coef * LaurentPoly::monomial(-s2, sgn));
        }
    }
    return out;
}

FockVector psi_q(int n, const Partition& mu) {
    FockVector v = FockVector::vacuum(n);
    for (auto it = mu.rbegin(); it != mu.rend(); ++it) v = v_op(*it, v);
    return v;
}

bool is_highest_weight(const FockVector& v) {
    for (int i = 0; i < v.n; ++i)
        if (!e_action(i, v).is_zero()) return false;
    return true;
}

SymFunc phi_q_adjoint(int n, const SymFunc& f) {
    SymFunc s = convert(f, Basis::schur);
    SymFunc out(Basis::monomial);
    std::set<int> degrees;
    for (const auto& [lam, c] : s.coeffs) degrees.insert(size_of(lam));
    for (int deg : degrees) {
        if (deg % n != 0) continue;
        for (const auto& mu : partitions_of(deg / n)) {
            FockVector psi = psi_q(n, mu);
            LaurentPoly c;
            for (const auto& [lam, v] : psi.coeffs) {
                auto it = s.coeffs.find(lam);
                if (it != s.coeffs.end()) c += it->second * v;
            }
            out.add_term(mu, c);
        }
    }
    return out;
}

}  // namespace ribbontab
