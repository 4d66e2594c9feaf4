#ifndef WREP_CRYSTAL_HPP
#define WREP_CRYSTAL_HPP

#include <array>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "wrep/tableau.hpp"

namespace wrep {

/// Integer weight in Z^N, the underlying set of the tensor-power crystal.
using CrystalWeight = std::vector<long long>;

struct Signature {
    std::vector<int> raw;      // +1, -1, 0
    std::vector<int> reduced;  // after cancelling all (- ... +) pairs
};

/// i-signature of alpha: + where an entry equals i, - where it equals i+1,
/// reduced by matching each - with a later + (0s transparent). A single
/// bracket-matching pass, equivalent to the repeated rewriting.
inline Signature signature(const CrystalWeight& alpha, long long i) {
    Signature s;
    s.raw.reserve(alpha.size());
    for (long long a : alpha) s.raw.push_back(a == i ? 1 : (a == i + 1 ? -1 : 0));
    s.reduced = s.raw;
    std::vector<int> open;  // positions of unmatched '-'
    for (int j = 0; j < (int)s.reduced.size(); ++j) {
        if (s.reduced[j] == -1) open.push_back(j);
        else if (s.reduced[j] == 1 && !open.empty()) {
            s.reduced[open.back()] = 0;
            s.reduced[j] = 0;
            open.pop_back();
        }
    }
    return s;
}

inline int eps(const CrystalWeight& alpha, long long i) {
    Signature s = signature(alpha, i);
    int c = 0;
    for (int v : s.reduced) c += v == -1;
    return c;
}

inline int phi(const CrystalWeight& alpha, long long i) {
    Signature s = signature(alpha, i);
    int c = 0;
    for (int v : s.reduced) c += v == 1;
    return c;
}

/// Raising operator: the leftmost surviving - becomes an i (entry i+1 -> i).
inline std::optional<CrystalWeight> e_tilde(const CrystalWeight& alpha, long long i) {
    Signature s = signature(alpha, i);
    for (int j = 0; j < (int)s.reduced.size(); ++j)
        if (s.reduced[j] == -1) {
            CrystalWeight b = alpha;
            b[j] -= 1;
            return b;
        }
    return std::nullopt;
}

/// Lowering operator: the rightmost surviving + becomes an i+1.
inline std::optional<CrystalWeight> f_tilde(const CrystalWeight& alpha, long long i) {
    Signature s = signature(alpha, i);
    for (int j = (int)s.reduced.size() - 1; j >= 0; --j)
        if (s.reduced[j] == 1) {
            CrystalWeight b = alpha;
            b[j] += 1;
            return b;
        }
    return std::nullopt;
}

inline CrystalWeight to_weight(const std::vector<Entry>& v) {
    CrystalWeight w;
    w.reserve(v.size());
    for (const auto& e : v) {
        if (!e.is_integer()) throw Error("integral_only", "crystal operators need integral entries");
        w.push_back(e.to_ll());
    }
    return w;
}

inline std::vector<Entry> from_weight(const CrystalWeight& w) {
    std::vector<Entry> v;
    v.reserve(w.size());
    for (long long x : w) v.push_back(Rational(x));
    return v;
}

/// Operators induced on row classes through the row reading.
inline std::optional<RowTabloid> f_tilde_row(const RowTabloid& a, long long i) {
    auto b = f_tilde(to_weight(row_reading(a)), i);
    if (!b) return std::nullopt;
    auto entries = from_weight(*b);
    std::vector<std::vector<Entry>> rows;
    std::size_t pos = 0;
    for (int r = 1; r <= a.pyramid().rows(); ++r) {
        rows.emplace_back(entries.begin() + pos, entries.begin() + pos + a.pyramid().row_length(r));
        pos += a.pyramid().row_length(r);
    }
    return RowTabloid(a.pyramid(), std::move(rows));
}

inline std::optional<RowTabloid> e_tilde_row(const RowTabloid& a, long long i) {
    auto b = e_tilde(to_weight(row_reading(a)), i);
    if (!b) return std::nullopt;
    auto entries = from_weight(*b);
    std::vector<std::vector<Entry>> rows;
    std::size_t pos = 0;
    for (int r = 1; r <= a.pyramid().rows(); ++r) {
        rows.emplace_back(entries.begin() + pos, entries.begin() + pos + a.pyramid().row_length(r));
        pos += a.pyramid().row_length(r);
    }
    return RowTabloid(a.pyramid(), std::move(rows));
}

/// Operators induced on tableaux through the column reading.
inline std::optional<Tableau> f_tilde_col(const Tableau& a, long long i) {
    auto b = f_tilde(to_weight(column_reading(a)), i);
    if (!b) return std::nullopt;
    return Tableau(a.pyramid(), from_weight(*b));
}

inline std::optional<Tableau> e_tilde_col(const Tableau& a, long long i) {
    auto b = e_tilde(to_weight(column_reading(a)), i);
    if (!b) return std::nullopt;
    return Tableau(a.pyramid(), from_weight(*b));
}

inline int eps_row(const RowTabloid& a, long long i) { return eps(to_weight(row_reading(a)), i); }
inline int phi_row(const RowTabloid& a, long long i) { return phi(to_weight(row_reading(a)), i); }
inline int eps_col(const Tableau& a, long long i) { return eps(to_weight(column_reading(a)), i); }
inline int phi_col(const Tableau& a, long long i) { return phi(to_weight(column_reading(a)), i); }

struct CrystalGraph {
    // Nodes are canonical readings, kept sorted for deterministic output.
    std::vector<CrystalWeight> nodes;
    std::vector<std::array<long long, 3>> edges;  // (from index, to index, i)
};

/// Crystal graph of the Z^N crystal generated by the seeds under f-arrows
/// for i in [imin, imax]. Throws when the node budget is exceeded.
inline CrystalGraph crystal_graph(const std::vector<CrystalWeight>& seeds, long long imin, long long imax,
                                  std::size_t budget = 5040) {
    std::set<CrystalWeight> seen(seeds.begin(), seeds.end());
    std::vector<CrystalWeight> frontier(seen.begin(), seen.end());
    std::map<std::array<CrystalWeight, 2>, long long> label;
    while (!frontier.empty()) {
        std::vector<CrystalWeight> next;
        for (const auto& a : frontier)
            for (long long i = imin; i <= imax; ++i) {
                auto b = f_tilde(a, i);
                if (!b) continue;
                label[{a, *b}] = i;
                if (seen.insert(*b).second) {
                    if (seen.size() > budget) throw Error("budget_exceeded", "crystal graph node budget exceeded");
                    next.push_back(*b);
                }
            }
        frontier = std::move(next);
    }
    CrystalGraph g;
    g.nodes.assign(seen.begin(), seen.end());
    std::map<CrystalWeight, long long> index;
    for (std::size_t t = 0; t < g.nodes.size(); ++t) index[g.nodes[t]] = (long long)t;
    for (const auto& [k, i] : label) g.edges.push_back({index[k[0]], index[k[1]], i});
    return g;
}

} // namespace wrep

#endif // WREP_CRYSTAL_HPP
