#ifndef WREP_KL_HPP
#define WREP_KL_HPP

#include <map>
#include <vector>

#include "wrep/perm.hpp"

namespace wrep {

/// Integer polynomial in q, coefficient vector with c[i] the q^i coefficient.
using IntPoly = std::vector<long long>;

inline void ipoly_trim(IntPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}
inline int ipoly_deg(const IntPoly& p) { return (int)p.size() - 1; }
inline long long ipoly_coeff(const IntPoly& p, int i) { return (i >= 0 && i < (int)p.size()) ? p[i] : 0; }
inline IntPoly ipoly_add(IntPoly a, const IntPoly& b) {
    if (a.size() < b.size()) a.resize(b.size(), 0);
    for (std::size_t i = 0; i < b.size(); ++i) a[i] += b[i];
    ipoly_trim(a);
    return a;
}
inline IntPoly ipoly_sub(IntPoly a, const IntPoly& b) {
    if (a.size() < b.size()) a.resize(b.size(), 0);
    for (std::size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
    ipoly_trim(a);
    return a;
}
inline IntPoly ipoly_shift(const IntPoly& a, int s) {  // multiply by q^s
    if (a.empty()) return {};
    IntPoly r(a.size() + s, 0);
    for (std::size_t i = 0; i < a.size(); ++i) r[i + s] = a[i];
    return r;
}
inline IntPoly ipoly_mul(const IntPoly& a, const IntPoly& b) {
    if (a.empty() || b.empty()) return {};
    IntPoly r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    ipoly_trim(r);
    return r;
}
inline long long ipoly_eval1(const IntPoly& p) {
    long long s = 0;
    for (long long c : p) s += c;
    return s;
}
inline std::string ipoly_to_string(const IntPoly& p) {
    if (p.empty()) return "0";
    std::string s;
    for (int i = 0; i < (int)p.size(); ++i) {
        if (p[i] == 0) continue;
        if (!s.empty()) s += p[i] > 0 ? " + " : " - ";
        else if (p[i] < 0) s += "-";
        long long c = p[i] > 0 ? p[i] : -p[i];
        if (c != 1 || i == 0) s += std::to_string(c);
        if (i >= 1) {
            if (c != 1) s += "*";
            s += "q";
            if (i > 1) s += "^" + std::to_string(i);
        }
    }
    return s;
}

/// Kazhdan-Lusztig polynomials P_{x,y}(q) for the symmetric group, computed
/// by the classical recursion with a memo table. The pivot is the smallest
/// left descent of y, fixed for reproducibility. Desk-scale bound N <= 8.
class KLTable {
public:
    explicit KLTable(int n) : n_(n) {
        if (n_ < 1 || n_ > 8) throw Error("size_limit", "KL tables are limited to S_N with N <= 8");
    }

    int rank() const { return n_; }

    const IntPoly& poly(const Perm& x, const Perm& y) {
        if ((int)x.size() != n_ || (int)y.size() != n_)
            throw Error("shape_mismatch", "permutation size does not match the table rank");
        auto key = std::make_pair(x, y);
        auto it = memo_.find(key);
        if (it != memo_.end()) return it->second;
        IntPoly r = compute(x, y);
        return memo_.emplace(std::move(key), std::move(r)).first->second;
    }

    long long at_one(const Perm& x, const Perm& y) { return ipoly_eval1(poly(x, y)); }

    /// mu(x,y): coefficient of q^{(l(y)-l(x)-1)/2} in P_{x,y}.
    long long mu(const Perm& x, const Perm& y) {
        int d = perm_length(y) - perm_length(x);
        if (d <= 0 || d % 2 == 0) return 0;
        return ipoly_coeff(poly(x, y), (d - 1) / 2);
    }

private:
    IntPoly compute(const Perm& x, const Perm& y) {
        if (x == y) return IntPoly{1};
        if (!bruhat_leq_perm(x, y)) return IntPoly{};
        int s = 0;
        for (int i = 1; i < n_; ++i)
            if (has_left_descent(y, i)) { s = i; break; }
        Perm sy = left_mul_s(s, y);
        Perm sx = left_mul_s(s, x);
        if (perm_length(sx) > perm_length(x)) return poly(sx, y);
        // sx < x: P_{x,y} = P_{sx,sy} + q P_{x,sy} - sum mu(z,sy) q^{(l(y)-l(z))/2} P_{x,z}
        IntPoly r = ipoly_add(poly(sx, sy), ipoly_shift(poly(x, sy), 1));
        if (perms_.empty()) perms_ = all_perms(n_);
        int lx = perm_length(x), ly = perm_length(y);
        for (const Perm& z : perms_) {
            int lz = perm_length(z);
            if (lz < lx || lz >= ly - 1 || (ly - lz) % 2 != 0) continue;
            if (!has_left_descent(z, s)) continue;
            if (!bruhat_leq_perm(x, z) || !bruhat_leq_perm(z, sy)) continue;
            long long m = mu(z, sy);
            if (m == 0) continue;
            IntPoly term = ipoly_shift(poly(x, z), (ly - lz) / 2);
            for (auto& c : term) c *= m;
            r = ipoly_sub(r, term);
        }
        return r;
    }

    int n_;
    std::map<std::pair<Perm, Perm>, IntPoly> memo_;
    std::vector<Perm> perms_;
};

} // namespace wrep

#endif // WREP_KL_HPP
