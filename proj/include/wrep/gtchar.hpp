#ifndef WREP_GTCHAR_HPP
#define WREP_GTCHAR_HPP

#include <climits>
#include <functional>
#include <map>
#include <vector>

#include "wrep/poly.hpp"
#include "wrep/tableau.hpp"

namespace wrep {

/// Laurent monomial in the variables y_{i,a}: finitely supported exponent
/// map. The variable y_{i,1-i} is the identity of the underlying group and is
/// pruned, so equal group elements always have equal representations. The
/// companion variables satisfy x_{i,a} = y_{i,a+1} * y_{i,a}^{-1}.
class GTMonomial {
public:
    using Key = std::pair<int, Rational>;  // (row index i, spectral parameter a)

    struct KeyLess {
        bool operator()(const Key& p, const Key& q) const {
            if (p.first != q.first) return p.first < q.first;
            return canonical_less(p.second, q.second);
        }
    };
    using Map = std::map<Key, long long, KeyLess>;

    GTMonomial() = default;

    void mul_y(int i, const Rational& a, long long e) {
        if (e == 0) return;
        if (a == Rational(1 - i)) return;  // identity variable
        auto it = m_.find({i, a});
        if (it == m_.end()) m_.emplace(Key{i, a}, e);
        else {
            it->second += e;
            if (it->second == 0) m_.erase(it);
        }
    }

    void mul_x(int i, const Rational& a, long long e) {
        mul_y(i, a + Rational(1), e);
        mul_y(i, a, -e);
    }

    GTMonomial operator*(const GTMonomial& o) const {
        GTMonomial r = *this;
        for (const auto& [k, e] : o.m_) r.mul_y(k.first, k.second, e);
        return r;
    }

    const Map& exponents() const { return m_; }
    bool is_one() const { return m_.empty(); }

    friend bool operator==(const GTMonomial& a, const GTMonomial& b) { return a.m_ == b.m_; }
    friend bool operator<(const GTMonomial& a, const GTMonomial& b) {
        return std::lexicographical_compare(
            a.m_.begin(), a.m_.end(), b.m_.begin(), b.m_.end(), [](const auto& p, const auto& q) {
                KeyLess kl;
                if (kl(p.first, q.first)) return true;
                if (kl(q.first, p.first)) return false;
                return p.second < q.second;
            });
    }

    std::string to_string() const {
        if (m_.empty()) return "1";
        std::string s;
        for (const auto& [k, e] : m_) {
            if (!s.empty()) s += " ";
            s += "y[" + std::to_string(k.first) + "," + k.second.to_string() + "]";
            if (e != 1) s += "^" + std::to_string(e);
        }
        return s;
    }

private:
    Map m_;
};

/// Formal integer combination of Gelfand-Tsetlin monomials with a truncation
/// tag: depth_exact for finite characters, otherwise the bound on the total
/// lowering used to produce it. Mixed-depth equality is refused.
class GTCharacter {
public:
    static constexpr int depth_exact = INT_MAX;

    explicit GTCharacter(int depth = depth_exact) : depth_(depth) {}

    int depth() const { return depth_; }
    bool exact() const { return depth_ == depth_exact; }
    const std::map<GTMonomial, long long>& terms() const { return t_; }

    void add(const GTMonomial& m, long long c) {
        if (c == 0) return;
        auto it = t_.find(m);
        if (it == t_.end()) t_.emplace(m, c);
        else {
            it->second += c;
            if (it->second == 0) t_.erase(it);
        }
    }

    long long coeff(const GTMonomial& m) const {
        auto it = t_.find(m);
        return it == t_.end() ? 0 : it->second;
    }

    /// Sum of coefficients; the dimension when this is a module character.
    long long dimension() const {
        long long s = 0;
        for (const auto& [m, c] : t_) s += c;
        return s;
    }

    long long max_coeff() const {
        long long s = 0;
        for (const auto& [m, c] : t_) s = std::max(s, c);
        return s;
    }

    friend GTCharacter operator*(const GTCharacter& a, const GTCharacter& b) {
        GTCharacter r(std::min(a.depth_, b.depth_));
        for (const auto& [ma, ca] : a.t_)
            for (const auto& [mb, cb] : b.t_) r.add(ma * mb, ca * cb);
        return r;
    }

    friend GTCharacter operator+(const GTCharacter& a, const GTCharacter& b) {
        GTCharacter r(std::min(a.depth_, b.depth_));
        r.t_ = a.t_;
        for (const auto& [m, c] : b.t_) r.add(m, c);
        return r;
    }

    bool equal_same_depth(const GTCharacter& o) const {
        if (depth_ != o.depth_) throw Error("depth_mismatch", "characters carry different truncation depths");
        return t_ == o.t_;
    }

    friend bool operator==(const GTCharacter& a, const GTCharacter& b) { return a.equal_same_depth(b); }

private:
    int depth_;
    std::map<GTMonomial, long long> t_;
};

/// Character of the generalized Verma module of type A, truncated to total
/// lowering depth D: the sum over tuples c = (c_{i,j,k}) of naturals with
/// sum(c) <= D of the product
///   prod_{i,j} y_{i, a_ij - (c_{ij,i+1}+...+c_{ijn})}
///              prod_{k>i} y_{k, a_ij - (c_{ij,k+1}+..)} / y_{k, a_ij - (c_{ijk}+..)}.
inline GTCharacter verma_character(const RowTabloid& a, int depth) {
    int n = a.pyramid().rows();
    // Slots (i, j) with i < n in lexicographic order; each owns n-i counters.
    struct Slot {
        int i;
        Rational entry;
    };
    std::vector<Slot> slots;
    for (int i = 1; i < n; ++i)
        for (const Entry& e : a.row(i)) slots.push_back({i, e});

    GTCharacter ch(depth);

    // Recursive enumeration over slots with a shared remaining budget; each
    // slot (i,j) owns counters c_{i,j,k} for k = i+1..n.
    std::function<void(std::size_t, int, GTMonomial)> rec = [&](std::size_t s, int budget, GTMonomial acc) {
        if (s == slots.size()) {
            for (const Entry& e : a.row(n)) acc.mul_y(n, e, 1);
            ch.add(acc, 1);
            return;
        }
        int i = slots[s].i;
        const Rational& aij = slots[s].entry;
        int parts = n - i;
        std::vector<int> cur;
        std::function<void(int, int)> inner = [&](int t, int used) {
            if (t == parts) {
                GTMonomial m = acc;
                // suf[t] = c_{i,j,i+1+t} + ... + c_{i,j,n}
                std::vector<int> suf(parts + 1, 0);
                for (int u = parts - 1; u >= 0; --u) suf[u] = suf[u + 1] + cur[u];
                m.mul_y(i, aij - Rational(suf[0]), 1);
                for (int k = i + 1; k <= n; ++k) {
                    int idx = k - i - 1;
                    m.mul_y(k, aij - Rational(suf[idx + 1]), 1);
                    m.mul_y(k, aij - Rational(suf[idx]), -1);
                }
                rec(s + 1, budget - used, std::move(m));
                return;
            }
            for (int v = 0; used + v <= budget; ++v) {
                cur.push_back(v);
                inner(t + 1, used + v);
                cur.pop_back();
            }
        };
        inner(0, 0);
    };
    rec(0, depth, GTMonomial{});
    return ch;
}

/// The same character computed by the tabloid reformulation: rows (i,j) carry
/// a weakly increasing tail of entries from {i+1..n} in the final boxes,
/// columns a_ij - m .. a_ij - 1; at most D boxes differ from the default.
inline GTCharacter verma_character_tabloids(const RowTabloid& a, int depth) {
    int n = a.pyramid().rows();
    struct Slot {
        int i;
        Rational entry;
    };
    std::vector<Slot> slots;
    for (int i = 1; i < n; ++i)
        for (const Entry& e : a.row(i)) slots.push_back({i, e});

    GTCharacter ch(depth);
    std::function<void(std::size_t, int, GTMonomial)> rec = [&](std::size_t s, int budget, GTMonomial acc) {
        if (s == slots.size()) {
            for (const Entry& e : a.row(n)) acc.mul_y(n, e, 1);
            ch.add(acc, 1);
            return;
        }
        int i = slots[s].i;
        const Rational& aij = slots[s].entry;
        // Choose the non-default suffix values k_1 <= ... <= k_m from {i+1..n}.
        std::vector<int> tail;
        std::function<void(int)> choose = [&](int used) {
            GTMonomial m = acc;
            int mlen = (int)tail.size();
            m.mul_y(i, aij - Rational(mlen), 1);  // infinite default prefix
            for (int t = 0; t < mlen; ++t) m.mul_x(tail[t], aij - Rational(mlen - t), 1);
            rec(s + 1, budget - used, std::move(m));
            for (int k = tail.empty() ? i + 1 : tail.back(); k <= n; ++k) {
                if (used + 1 > budget) break;
                tail.push_back(k);
                choose(used + 1);
                tail.pop_back();
            }
        };
        choose(0);
    };
    rec(0, depth, GTMonomial{});
    return ch;
}

/// Graded pieces of the Verma character: piece d holds the terms produced by
/// tuples of total lowering exactly d.
inline std::vector<GTCharacter> verma_character_graded(const RowTabloid& a, int depth) {
    std::vector<GTCharacter> pieces;
    GTCharacter prev(0);
    for (int d = 0; d <= depth; ++d) {
        GTCharacter cur = verma_character(a, d);
        GTCharacter piece(d);
        for (const auto& [m, c] : cur.terms()) piece.add(m, c);
        if (d > 0)
            for (const auto& [m, c] : prev.terms()) piece.add(m, -c);
        prev = std::move(cur);
        pieces.push_back(std::move(piece));
    }
    return pieces;
}

/// Product of Verma characters truncated by the total lowering across all
/// factors; this is the depth-consistent right hand side of the column
/// factorization of Verma characters.
inline GTCharacter verma_product_truncated(const std::vector<RowTabloid>& columns, int depth) {
    // acc[d] = depth-d piece of the partial product
    std::vector<GTCharacter> acc;
    for (int d = 0; d <= depth; ++d) acc.emplace_back(d);
    acc[0].add(GTMonomial{}, 1);
    for (const auto& col : columns) {
        auto pieces = verma_character_graded(col, depth);
        std::vector<GTCharacter> next;
        for (int d = 0; d <= depth; ++d) next.emplace_back(d);
        for (int d1 = 0; d1 <= depth; ++d1)
            for (int d2 = 0; d1 + d2 <= depth; ++d2)
                for (const auto& [m1, c1] : acc[d1].terms())
                    for (const auto& [m2, c2] : pieces[d2].terms()) next[d1 + d2].add(m1 * m2, c1 * c2);
        acc = std::move(next);
    }
    GTCharacter out(depth);
    for (const auto& piece : acc)
        for (const auto& [m, c] : piece.terms()) out.add(m, c);
    return out;
}

/// Exact character of a single-column module: entries a_1 > ... > a_m top to
/// bottom, normalized with c = a_m + m - 1; semistandard fillings of the
/// residue diagram of the partition (a_i + i - 1 - c) give the monomials.
inline GTCharacter single_column_character(const std::vector<Entry>& col, int n) {
    int m = (int)col.size();
    for (int i = 0; i + 1 < m; ++i)
        if (!field_gt(col[i], col[i + 1]))
            throw Error("not_column_strict", "single column must strictly decrease downwards");
    Rational cshift = col[m - 1] + Rational(m - 1);
    std::vector<long long> b(m);
    for (int i = 0; i < m; ++i) b[i] = (col[i] + Rational(i) - cshift).to_ll();

    GTMonomial lead;
    for (int t = 1; t <= m; ++t) lead.mul_y(n - m + t, cshift - Rational(t - 1), 1);

    GTCharacter ch(GTCharacter::depth_exact);
    // Fill the diagram row by row; rows weakly increase, columns strictly
    // increase downwards. filled[r][j] is the entry in row r+1, column j+1.
    std::vector<std::vector<int>> filled(m);
    std::function<void(int, GTMonomial)> fill_row = [&](int r, GTMonomial acc) {
        if (r == m || (r < m && b[r] == 0)) {
            bool rest_empty = true;
            for (int t = r; t < m; ++t) rest_empty &= b[t] == 0;
            if (!rest_empty) throw Error("internal", "partition not weakly decreasing");
            ch.add(acc, 1);
            return;
        }
        std::vector<int> row(b[r]);
        std::function<void(int, GTMonomial)> fill_box = [&](int j, GTMonomial acc2) {
            if (j == (int)row.size()) {
                filled[r] = row;
                fill_row(r + 1, std::move(acc2));
                return;
            }
            int lo = 1;
            if (j > 0) lo = std::max(lo, row[j - 1]);                       // weakly increasing rows
            if (r > 0 && j < (int)filled[r - 1].size()) lo = std::max(lo, filled[r - 1][j] + 1);  // strict columns
            for (int t = lo; t <= m; ++t) {
                row[j] = t;
                GTMonomial m2 = acc2;
                m2.mul_x(n - m + t, cshift + Rational(j - r), 1);
                fill_box(j + 1, std::move(m2));
            }
        };
        fill_box(0, std::move(acc));
    };
    fill_row(0, lead);
    return ch;
}

/// Exact character of the standard module V(A): product over columns of the
/// single-column characters.
inline GTCharacter standard_character(const Tableau& a) {
    if (!is_column_strict(a)) throw Error("not_column_strict", "standard modules need column strict tableaux");
    GTCharacter ch(GTCharacter::depth_exact);
    ch.add(GTMonomial{}, 1);
    for (int c = 1; c <= a.pyramid().levels(); ++c)
        ch = ch * single_column_character(a.column(c), a.pyramid().rows());
    return ch;
}

/// Check that every monomial substitutes to prod_{i,j} (u + a_ij) under
/// y_{i,a} -> (u+a). Implied identity factors (u+1-i) from the pruned
/// variables are restored from the row degrees before comparing.
inline bool central_substitute(const GTCharacter& chi, const RowTabloid& a) {
    const Pyramid& p = a.pyramid();
    std::map<Rational, long long, CanonicalEntryLess> target;
    for (int i = 1; i <= p.rows(); ++i)
        for (const Entry& e : a.row(i)) ++target[e];
    for (const auto& [m, c] : chi.terms()) {
        std::map<Rational, long long, CanonicalEntryLess> got;
        std::vector<long long> degree(p.rows() + 1, 0);
        for (const auto& [k, e] : m.exponents()) {
            got[k.second] += e;
            degree[k.first] += e;
        }
        for (int i = 1; i <= p.rows(); ++i) {
            long long identity_exp = p.row_length(i) - degree[i];
            if (identity_exp != 0) got[Rational(1 - i)] += identity_exp;
        }
        for (auto it = got.begin(); it != got.end();)
            it = it->second == 0 ? got.erase(it) : std::next(it);
        if (got != target) return false;
    }
    return true;
}

} // namespace wrep

#endif // WREP_GTCHAR_HPP
