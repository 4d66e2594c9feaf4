#ifndef WREP_BASES_HPP
#define WREP_BASES_HPP

#include <algorithm>
#include <map>
#include <vector>

#include "wrep/kl.hpp"
#include "wrep/tableau.hpp"

namespace wrep {

/// Finitely supported integer vector over Z^N monomials M_alpha.
using TensorVector = std::map<std::vector<long long>, long long>;

/// Finitely supported integer vector over Row_0(pi) monomials or dual
/// canonical vectors; keys are row readings (each row block sorted).
using SymVector = std::map<std::vector<long long>, long long>;

inline void prune(TensorVector& v) {
    for (auto it = v.begin(); it != v.end();)
        it = it->second == 0 ? v.erase(it) : std::next(it);
}

inline TensorVector tv_add(TensorVector a, const TensorVector& b, long long scale = 1) {
    for (const auto& [k, c] : b) a[k] += scale * c;
    prune(a);
    return a;
}

/// All distinct rearrangements of alpha (its S_N-orbit), with a cap guarding
/// against runaway orbit sizes.
inline std::vector<std::vector<long long>> weight_orbit(std::vector<long long> alpha,
                                                        std::size_t max_orbit = 5040) {
    std::sort(alpha.begin(), alpha.end());
    std::vector<std::vector<long long>> out;
    do {
        out.push_back(alpha);
        if (out.size() > max_orbit) throw Error("size_limit", "weight orbit exceeds the configured cap");
    } while (std::next_permutation(alpha.begin(), alpha.end()));
    return out;
}

/// M_alpha = sum_beta P_{d(alpha)w0, d(beta)w0}(1) L_beta over rearrangements
/// beta of alpha.
inline TensorVector expand_M_in_L(const std::vector<long long>& alpha, KLTable& kl,
                                  std::size_t max_orbit = 5040) {
    int n = (int)alpha.size();
    if (n != kl.rank()) throw Error("shape_mismatch", "weight length must match the KL table rank");
    Perm w0 = longest_element(n);
    Perm da = perm_mul(d_of_weight(alpha), w0);
    TensorVector out;
    for (const auto& beta : weight_orbit(alpha, max_orbit)) {
        long long c = kl.at_one(da, perm_mul(d_of_weight(beta), w0));
        if (c != 0) out[beta] = c;
    }
    return out;
}

/// L_alpha in the monomial basis, by unitriangular inversion over the orbit.
inline TensorVector expand_L_in_M(const std::vector<long long>& alpha, KLTable& kl,
                                  std::size_t max_orbit = 5040) {
    // L_a = M_a - sum_{b != a} c_{a,b} L_b with c from the forward expansion;
    // the recursion terminates because the coefficients point strictly up the
    // Bruhat order on d(beta)w0.
    struct Solver {
        KLTable& kl;
        std::size_t cap;
        std::map<std::vector<long long>, TensorVector> memo;
        const TensorVector& solve(const std::vector<long long>& a) {
            auto it = memo.find(a);
            if (it != memo.end()) return it->second;
            TensorVector fwd = expand_M_in_L(a, kl, cap);
            TensorVector r;
            r[a] = 1;
            for (const auto& [b, c] : fwd) {
                if (b == a) continue;  // unit diagonal
                r = tv_add(std::move(r), solve(b), -c);
            }
            return memo.emplace(a, std::move(r)).first->second;
        }
    } s{kl, max_orbit, {}};
    return s.solve(alpha);
}

/// Key manipulation: split a Z^N weight into blocks of the given sizes and
/// sort each block, i.e. pass to the row class.
inline std::vector<long long> block_sort(const std::vector<long long>& key, const std::vector<int>& sizes) {
    std::size_t total = 0;
    for (int s : sizes) total += s;
    if (total != key.size()) throw Error("shape_mismatch", "block sizes do not sum to the key length");
    std::vector<long long> out;
    out.reserve(key.size());
    std::size_t pos = 0;
    for (int s : sizes) {
        std::vector<long long> blk(key.begin() + pos, key.begin() + pos + s);
        std::sort(blk.begin(), blk.end());
        out.insert(out.end(), blk.begin(), blk.end());
        pos += s;
    }
    return out;
}

/// Canonical quotient T^N -> S^pi: sort the row blocks of every key.
inline SymVector project_to_S(const TensorVector& v, const Pyramid& p) {
    std::vector<int> sizes;
    for (int i = 1; i <= p.rows(); ++i) sizes.push_back(p.row_length(i));
    SymVector out;
    for (const auto& [k, c] : v) {
        if ((int)k.size() != p.boxes()) throw Error("shape_mismatch", "key length mismatch");
        out[block_sort(k, sizes)] += c;
    }
    prune(out);
    return out;
}

/// The map V: T^N -> S^pi sending M_{gamma(A)} to M_{row class of A}. Keys
/// are reinterpreted as column readings (blocks q_1..q_l) and row-classed.
inline SymVector v_map(const TensorVector& v, const Pyramid& p) {
    SymVector out;
    for (const auto& [k, c] : v) {
        if ((int)k.size() != p.boxes()) throw Error("shape_mismatch", "key length mismatch");
        std::vector<std::vector<long long>> rows(p.rows());
        for (int b = 1; b <= p.boxes(); ++b) rows[p.box_row(b) - 1].push_back(k[b - 1]);
        std::vector<long long> key;
        for (auto& r : rows) {
            std::sort(r.begin(), r.end());
            key.insert(key.end(), r.begin(), r.end());
        }
        out[key] += c;
    }
    prune(out);
    return out;
}

inline std::vector<long long> integral_gamma(const Tableau& t) {
    std::vector<long long> g;
    for (const Entry& e : column_reading(t)) g.push_back(e.to_ll());
    return g;
}

inline std::vector<long long> integral_rho(const RowTabloid& t) {
    std::vector<long long> r;
    for (const Entry& e : row_reading(t)) r.push_back(e.to_ll());
    return r;
}

/// N_A = sum over column rearrangements B of A of (-1)^{l(A,B)} M_{gamma(B)}.
inline TensorVector wedge_N(const Tableau& a) {
    if (!is_column_strict(a)) throw Error("not_column_strict", "exterior monomials need column strict tableaux");
    const Pyramid& p = a.pyramid();
    // Per column, all permutations with sign; combine across columns.
    TensorVector out;
    std::vector<std::vector<std::pair<std::vector<long long>, int>>> cols;
    for (int c = 1; c <= p.levels(); ++c) {
        std::vector<long long> base;
        for (const Entry& e : a.column(c)) base.push_back(e.to_ll());
        std::vector<std::pair<std::vector<long long>, int>> arr;
        std::vector<int> idx(base.size());
        for (std::size_t i = 0; i < base.size(); ++i) idx[i] = (int)i;
        std::sort(idx.begin(), idx.end());
        do {
            int inv = 0;
            for (std::size_t i = 0; i < idx.size(); ++i)
                for (std::size_t j = i + 1; j < idx.size(); ++j)
                    if (idx[i] > idx[j]) ++inv;
            std::vector<long long> v;
            for (int t : idx) v.push_back(base[t]);
            arr.push_back({std::move(v), inv % 2 == 0 ? 1 : -1});
        } while (std::next_permutation(idx.begin(), idx.end()));
        cols.push_back(std::move(arr));
    }
    std::vector<int> pick(cols.size(), 0);
    while (true) {
        std::vector<long long> key;
        int sign = 1;
        for (std::size_t c = 0; c < cols.size(); ++c) {
            key.insert(key.end(), cols[c][pick[c]].first.begin(), cols[c][pick[c]].first.end());
            sign *= cols[c][pick[c]].second;
        }
        out[key] += sign;
        int c = (int)cols.size() - 1;
        while (c >= 0 && pick[c] + 1 == (int)cols[c].size()) pick[c--] = 0;
        if (c < 0) break;
        ++pick[c];
    }
    prune(out);
    return out;
}

/// K_A = L_{gamma(A)} expanded into tensor monomials.
inline TensorVector wedge_K(const Tableau& a, KLTable& kl, std::size_t max_orbit = 5040) {
    if (!is_column_strict(a)) throw Error("not_column_strict", "dual canonical wedge needs column strict tableaux");
    return expand_L_in_M(integral_gamma(a), kl, max_orbit);
}

/// M_A = sum_B P_{d(rho(A))w0, d(rho(B))w0}(1) L_B over Row_0(pi) of the same
/// content; the S^pi analogue of the tensor expansion.
inline SymVector expand_MA_in_LB(const std::vector<long long>& rhoA, const Pyramid& p, KLTable& kl,
                                 std::size_t max_orbit = 5040) {
    std::vector<int> sizes;
    for (int i = 1; i <= p.rows(); ++i) sizes.push_back(p.row_length(i));
    Perm w0 = longest_element((int)rhoA.size());
    Perm da = perm_mul(d_of_weight(rhoA), w0);
    SymVector out;
    for (const auto& beta : weight_orbit(rhoA, max_orbit)) {
        if (block_sort(beta, sizes) != beta) continue;  // not a row reading
        long long c = kl.at_one(da, perm_mul(d_of_weight(beta), w0));
        if (c != 0) out[beta] = c;
    }
    return out;
}

/// Rewrite a tensor vector from the monomial basis into the dual canonical
/// basis: each M_alpha is replaced by its known L-expansion.
inline TensorVector tensor_to_L(const TensorVector& v, KLTable& kl, std::size_t max_orbit = 5040) {
    TensorVector out;
    for (const auto& [a, m] : v)
        for (const auto& [b, c] : expand_M_in_L(a, kl, max_orbit)) out[b] += m * c;
    prune(out);
    return out;
}

/// Rewrite a vector of S^pi from the monomial basis into the dual canonical
/// basis: each M_A is replaced by its known L-expansion.
inline SymVector sym_to_L(const SymVector& v, const Pyramid& p, KLTable& kl, std::size_t max_orbit = 5040) {
    SymVector out;
    for (const auto& [a, m] : v)
        for (const auto& [b, c] : expand_MA_in_LB(a, p, kl, max_orbit)) out[b] += m * c;
    prune(out);
    return out;
}

/// L_A in the monomial basis of S^pi, by unitriangular inversion.
inline SymVector expand_LA_in_MB(const std::vector<long long>& rhoA, const Pyramid& p, KLTable& kl,
                                 std::size_t max_orbit = 5040) {
    struct Solver {
        const Pyramid& p;
        KLTable& kl;
        std::size_t cap;
        std::map<std::vector<long long>, SymVector> memo;
        const SymVector& solve(const std::vector<long long>& a) {
            auto it = memo.find(a);
            if (it != memo.end()) return it->second;
            SymVector fwd = expand_MA_in_LB(a, p, kl, cap);
            SymVector r;
            r[a] = 1;
            for (const auto& [b, c] : fwd) {
                if (b == a) continue;
                r = tv_add(std::move(r), solve(b), -c);
            }
            return memo.emplace(a, std::move(r)).first->second;
        }
    } s{p, kl, max_orbit, {}};
    return s.solve(rhoA);
}

/// Coefficients of the standard monomial vector V_A = V(N_A) in the dual
/// canonical basis {L_B : B dominant}; these are the decomposition numbers
/// [V(A) : L(B)]. Keys are row readings of the dominant tabloids.
inline SymVector decompose_standard(const Tableau& a, KLTable& kl, std::size_t max_orbit = 5040) {
    return sym_to_L(v_map(wedge_N(a), a.pyramid()), a.pyramid(), kl, max_orbit);
}

/// Chevalley lowering operator on tensor monomials: one entry i becomes i+1,
/// summed over positions.
inline TensorVector chevalley_f(const TensorVector& v, long long i) {
    TensorVector out;
    for (const auto& [k, c] : v)
        for (std::size_t j = 0; j < k.size(); ++j)
            if (k[j] == i) {
                auto b = k;
                b[j] += 1;
                out[b] += c;
            }
    prune(out);
    return out;
}

/// Chevalley raising operator on tensor monomials: one entry i+1 becomes i.
inline TensorVector chevalley_e(const TensorVector& v, long long i) {
    TensorVector out;
    for (const auto& [k, c] : v)
        for (std::size_t j = 0; j < k.size(); ++j)
            if (k[j] == i + 1) {
                auto b = k;
                b[j] -= 1;
                out[b] += c;
            }
    prune(out);
    return out;
}

/// Chevalley operators on the monomial basis of S^pi: an entry i of row r
/// moves to i+1 with multiplicity the number of i's in that row.
inline SymVector chevalley_f_sym(const SymVector& v, long long i, const Pyramid& p) {
    SymVector out;
    for (const auto& [k, c] : v) {
        std::size_t pos = 0;
        for (int r = 1; r <= p.rows(); ++r) {
            int len = p.row_length(r);
            long long cnt = std::count(k.begin() + pos, k.begin() + pos + len, i);
            if (cnt > 0) {
                auto b = k;
                auto it = std::find(b.begin() + pos, b.begin() + pos + len, i);
                *it = i + 1;
                std::sort(b.begin() + pos, b.begin() + pos + len);
                out[b] += c * cnt;
            }
            pos += len;
        }
    }
    prune(out);
    return out;
}

inline SymVector chevalley_e_sym(const SymVector& v, long long i, const Pyramid& p) {
    SymVector out;
    for (const auto& [k, c] : v) {
        std::size_t pos = 0;
        for (int r = 1; r <= p.rows(); ++r) {
            int len = p.row_length(r);
            long long cnt = std::count(k.begin() + pos, k.begin() + pos + len, i + 1);
            if (cnt > 0) {
                auto b = k;
                auto it = std::find(b.begin() + pos, b.begin() + pos + len, i + 1);
                *it = i;
                std::sort(b.begin() + pos, b.begin() + pos + len);
                out[b] += c * cnt;
            }
            pos += len;
        }
    }
    prune(out);
    return out;
}

} // namespace wrep

#endif // WREP_BASES_HPP
