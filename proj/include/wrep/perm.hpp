#ifndef WREP_PERM_HPP
#define WREP_PERM_HPP

#include <algorithm>
#include <numeric>
#include <vector>

#include "wrep/rational.hpp"

namespace wrep {

/// Permutation of {1..N} in one-line notation: w[i-1] = w(i).
using Perm = std::vector<int>;

inline Perm perm_identity(int n) {
    Perm w(n);
    std::iota(w.begin(), w.end(), 1);
    return w;
}

inline Perm longest_element(int n) {
    Perm w(n);
    for (int i = 0; i < n; ++i) w[i] = n - i;
    return w;
}

inline Perm perm_inverse(const Perm& w) {
    Perm v(w.size());
    for (int i = 0; i < (int)w.size(); ++i) v[w[i] - 1] = i + 1;
    return v;
}

/// (xy)(i) = x(y(i)).
inline Perm perm_mul(const Perm& x, const Perm& y) {
    if (x.size() != y.size()) throw Error("shape_mismatch", "permutation sizes differ");
    Perm z(x.size());
    for (int i = 0; i < (int)x.size(); ++i) z[i] = x[y[i] - 1];
    return z;
}

inline int perm_length(const Perm& w) {
    int inv = 0;
    for (std::size_t i = 0; i < w.size(); ++i)
        for (std::size_t j = i + 1; j < w.size(); ++j)
            if (w[i] > w[j]) ++inv;
    return inv;
}

/// Left multiplication by the simple transposition s_i (swaps values i, i+1).
inline Perm left_mul_s(int i, const Perm& w) {
    Perm z = w;
    for (auto& v : z) {
        if (v == i) v = i + 1;
        else if (v == i + 1) v = i;
    }
    return z;
}

/// l(s_i w) < l(w), i.e. the value i appears to the right of i+1 in w.
inline bool has_left_descent(const Perm& w, int i) {
    Perm wi = perm_inverse(w);
    return wi[i - 1] > wi[i];
}

/// Bruhat order via the tableau criterion: x <= y iff for every prefix length
/// the decreasingly sorted prefix of x is dominated entrywise by that of y.
inline bool bruhat_leq_perm(const Perm& x, const Perm& y) {
    if (x.size() != y.size()) throw Error("shape_mismatch", "permutation sizes differ");
    std::vector<int> px, py;
    for (std::size_t i = 0; i < x.size(); ++i) {
        px.insert(std::upper_bound(px.begin(), px.end(), x[i], std::greater<int>()), x[i]);
        py.insert(std::upper_bound(py.begin(), py.end(), y[i], std::greater<int>()), y[i]);
        for (std::size_t t = 0; t <= i; ++t)
            if (px[t] > py[t]) return false;
    }
    return true;
}

/// The minimal-length permutation d with alpha . d^{-1} weakly increasing,
/// where S_N acts on the right by place permutation. Computed by a stable
/// sort: if pi stably sorts alpha then d = pi^{-1}.
template <typename T>
inline Perm d_of_weight(const std::vector<T>& alpha) {
    int n = (int)alpha.size();
    Perm pi = perm_identity(n);
    std::stable_sort(pi.begin(), pi.end(), [&](int a, int b) { return alpha[a - 1] < alpha[b - 1]; });
    return perm_inverse(pi);
}

/// Right place-permutation action: (alpha . w)_j = alpha_{w(j)}.
template <typename T>
inline std::vector<T> act_right(const std::vector<T>& alpha, const Perm& w) {
    std::vector<T> b(alpha.size());
    for (std::size_t j = 0; j < alpha.size(); ++j) b[j] = alpha[w[j] - 1];
    return b;
}

inline std::vector<Perm> all_perms(int n) {
    std::vector<Perm> out;
    Perm w = perm_identity(n);
    do out.push_back(w);
    while (std::next_permutation(w.begin(), w.end()));
    return out;
}

} // namespace wrep

#endif // WREP_PERM_HPP
