#ifndef WREP_TABLEAU_HPP
#define WREP_TABLEAU_HPP

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <vector>

#include "wrep/pyramid.hpp"
#include "wrep/rational.hpp"

namespace wrep {

using Entry = Rational;

struct CanonicalEntryLess {
    bool operator()(const Entry& a, const Entry& b) const { return canonical_less(a, b); }
};

/// Content of a tableau: multiset of its entries, an element of the group P.
using Content = std::map<Entry, int, CanonicalEntryLess>;

/// A filling of the pyramid's boxes by field elements, stored in box order
/// (down columns, leftmost column first).
class Tableau {
public:
    Tableau(Pyramid pyr, std::vector<Entry> entries) : pyr_(std::move(pyr)), e_(std::move(entries)) {
        if ((int)e_.size() != pyr_.boxes())
            throw Error("length_mismatch", "tableau needs one entry per box");
    }

    const Pyramid& pyramid() const { return pyr_; }
    const Entry& box(int b) const { return e_[b - 1]; }
    Entry& box(int b) { return e_[b - 1]; }
    const std::vector<Entry>& boxes() const { return e_; }

    const Entry& at(int row, int col) const {
        int b = pyr_.box_at(row, col);
        if (b == 0) throw Error("shape_mismatch", "no box at that position");
        return e_[b - 1];
    }

    /// Entries of column c, top to bottom.
    std::vector<Entry> column(int c) const {
        std::vector<Entry> v;
        for (int i = pyr_.rows() - pyr_.height(c) + 1; i <= pyr_.rows(); ++i) v.push_back(at(i, c));
        return v;
    }

    /// Entries of row i, left to right (empty when p_i = 0).
    std::vector<Entry> row(int i) const {
        std::vector<Entry> v;
        int c0 = pyr_.row_first_col(i);
        for (int j = 0; j < pyr_.row_length(i); ++j) v.push_back(at(i, c0 + j));
        return v;
    }

    friend bool operator==(const Tableau& a, const Tableau& b) { return a.pyr_ == b.pyr_ && a.e_ == b.e_; }
    friend bool operator<(const Tableau& a, const Tableau& b) {
        if (!(a.pyr_ == b.pyr_)) throw Error("shape_mismatch", "comparing tableaux of different shapes");
        return std::lexicographical_compare(a.e_.begin(), a.e_.end(), b.e_.begin(), b.e_.end());
    }

private:
    Pyramid pyr_;
    std::vector<Entry> e_;
};

/// A row symmetrized tableau: the multiset of entries of each row, stored in
/// canonical sorted order so that equal classes compare equal.
class RowTabloid {
public:
    RowTabloid(Pyramid pyr, std::vector<std::vector<Entry>> rows) : pyr_(std::move(pyr)), rows_(std::move(rows)) {
        if ((int)rows_.size() != pyr_.rows()) throw Error("shape_mismatch", "need one multiset per row");
        for (int i = 1; i <= pyr_.rows(); ++i) {
            if ((int)rows_[i - 1].size() != pyr_.row_length(i))
                throw Error("shape_mismatch", "row size must equal the row length");
            std::sort(rows_[i - 1].begin(), rows_[i - 1].end(), CanonicalEntryLess{});
        }
    }

    const Pyramid& pyramid() const { return pyr_; }
    const std::vector<Entry>& row(int i) const { return rows_[i - 1]; }
    const std::vector<std::vector<Entry>>& rows() const { return rows_; }

    friend bool operator==(const RowTabloid& a, const RowTabloid& b) {
        return a.pyr_ == b.pyr_ && a.rows_ == b.rows_;
    }
    friend bool operator!=(const RowTabloid& a, const RowTabloid& b) { return !(a == b); }
    friend bool operator<(const RowTabloid& a, const RowTabloid& b) { return a.rows_ < b.rows_; }

    std::string to_string() const {
        std::string s;
        for (std::size_t i = 0; i < rows_.size(); ++i) {
            if (i) s += ";";
            for (std::size_t j = 0; j < rows_[i].size(); ++j) s += (j ? "," : "") + rows_[i][j].to_string();
        }
        return s;
    }

private:
    Pyramid pyr_;
    std::vector<std::vector<Entry>> rows_;
};

inline RowTabloid row_class(const Tableau& t) {
    std::vector<std::vector<Entry>> rows;
    for (int i = 1; i <= t.pyramid().rows(); ++i) rows.push_back(t.row(i));
    return RowTabloid(t.pyramid(), std::move(rows));
}

/// Column reading: entries down columns, leftmost column first.
inline std::vector<Entry> column_reading(const Tableau& t) { return t.boxes(); }

/// Row reading: each row in weakly increasing order, top row first.
inline std::vector<Entry> row_reading(const RowTabloid& t) {
    std::vector<Entry> w;
    for (const auto& r : t.rows()) w.insert(w.end(), r.begin(), r.end());
    return w;
}

inline Content content(const std::vector<Entry>& entries) {
    Content c;
    for (const auto& e : entries) ++c[e];
    return c;
}
inline Content content(const Tableau& t) { return content(t.boxes()); }
inline Content content(const RowTabloid& t) { return content(row_reading(t)); }

/// Column strict: entries strictly increase up each column, i.e. each entry
/// exceeds the one below it by a positive integer.
inline bool is_column_strict(const Tableau& t) {
    const Pyramid& p = t.pyramid();
    for (int c = 1; c <= p.levels(); ++c)
        for (int i = p.rows() - p.height(c) + 1; i < p.rows(); ++i)
            if (!field_gt(t.at(i, c), t.at(i + 1, c))) return false;
    return true;
}

/// Ground-state tableau: every entry on row i equals 1-i.
inline Tableau ground_state(const Pyramid& p) {
    std::vector<Entry> e;
    for (int b = 1; b <= p.boxes(); ++b) e.push_back(Rational(1 - p.box_row(b)));
    return Tableau(p, std::move(e));
}

/// One step of the row ordering: all tabloids obtained from A by swapping an
/// entry x in a higher row with a smaller entry y in a lower row.
inline std::vector<RowTabloid> bruhat_lower_moves(const RowTabloid& a) {
    std::vector<RowTabloid> out;
    int n = a.pyramid().rows();
    for (int i = 1; i < n; ++i)
        for (int j = i + 1; j <= n; ++j)
            for (std::size_t xi = 0; xi < a.row(i).size(); ++xi)
                for (std::size_t yj = 0; yj < a.row(j).size(); ++yj) {
                    const Entry& x = a.row(i)[xi];
                    const Entry& y = a.row(j)[yj];
                    if (!field_gt(x, y)) continue;
                    auto rows = a.rows();
                    rows[i - 1][xi] = y;
                    rows[j - 1][yj] = x;
                    out.emplace_back(a.pyramid(), std::move(rows));
                }
    return out;
}

/// Bruhat comparison B <= A, by breadth-first search over downward swaps
/// within the (finite) set of tabloids of the same content.
inline bool bruhat_leq(const RowTabloid& b, const RowTabloid& a) {
    if (!(a.pyramid() == b.pyramid())) throw Error("shape_mismatch", "tabloids on different pyramids");
    if (a == b) return true;
    if (content(a) != content(b)) return false;
    std::set<RowTabloid> seen{a};
    std::vector<RowTabloid> frontier{a};
    while (!frontier.empty()) {
        std::vector<RowTabloid> next;
        for (const auto& t : frontier)
            for (auto& m : bruhat_lower_moves(t)) {
                if (m == b) return true;
                if (seen.insert(m).second) next.push_back(std::move(m));
            }
        frontier = std::move(next);
    }
    return false;
}

/// Full lower set {B : B <= A} of the row ordering.
inline std::set<RowTabloid> bruhat_lower_set(const RowTabloid& a) {
    std::set<RowTabloid> seen{a};
    std::vector<RowTabloid> frontier{a};
    while (!frontier.empty()) {
        std::vector<RowTabloid> next;
        for (const auto& t : frontier)
            for (auto& m : bruhat_lower_moves(t))
                if (seen.insert(m).second) next.push_back(std::move(m));
        frontier = std::move(next);
    }
    return seen;
}

/// Row insertion of the weight w into the shape: bottom-row bumping. Returns
/// the resulting row class, or nothing when some row overflows its length.
inline std::optional<RowTabloid> row_insert(const std::vector<Entry>& w, const Pyramid& p) {
    if ((int)w.size() != p.boxes()) throw Error("length_mismatch", "weight length must be the number of boxes");
    int n = p.rows();
    std::vector<std::vector<Entry>> rows(n);
    for (const Entry& a0 : w) {
        Entry a = a0;
        for (int i = n; i >= 1; --i) {
            auto& row = rows[i - 1];
            // smallest entry strictly larger than a (all such share a's coset)
            int pick = -1;
            for (int t = 0; t < (int)row.size(); ++t)
                if (field_gt(row[t], a) && (pick < 0 || row[t] < row[pick])) pick = t;
            if (pick < 0) {
                row.push_back(a);
                if ((int)row.size() > p.row_length(i)) return std::nullopt;
                break;
            }
            std::swap(a, row[pick]);
            if (i == 1) return std::nullopt;  // bumped out of the top
        }
    }
    for (int i = 1; i <= n; ++i)
        if ((int)rows[i - 1].size() != p.row_length(i)) return std::nullopt;
    return RowTabloid(p, std::move(rows));
}

inline bool is_standard(const Tableau& t) {
    if (!is_column_strict(t)) throw Error("not_column_strict", "standardness is defined for column strict tableaux");
    return row_insert(column_reading(t), t.pyramid()).has_value();
}

/// Rectification R(A): the row class computed by inserting the column reading.
inline RowTabloid rectify(const Tableau& t) {
    if (!is_column_strict(t)) throw Error("not_column_strict", "rectification needs a column strict tableau");
    auto r = row_insert(column_reading(t), t.pyramid());
    if (!r) throw Error("not_standard", "column reading is not admissible");
    return *r;
}

/// Equivalence by shuffling equal-height columns while preserving the
/// relative order of columns in each coset of F mod Z.
inline bool parallel_equiv(const Tableau& a, const Tableau& b) {
    if (!(a.pyramid() == b.pyramid())) throw Error("shape_mismatch", "tableaux on different pyramids");
    if (!is_column_strict(a) || !is_column_strict(b))
        throw Error("not_column_strict", "the shuffle equivalence is defined on column strict tableaux");
    const Pyramid& p = a.pyramid();
    // Bucket columns by coset (the common coset of a column's entries); within
    // each bucket the sequences of (height, content) must agree exactly.
    std::map<Entry, std::vector<std::vector<Entry>>, CanonicalEntryLess> ca, cb;
    for (int c = 1; c <= p.levels(); ++c) {
        ca[a.column(c).front().frac()].push_back(a.column(c));
        cb[b.column(c).front().frac()].push_back(b.column(c));
    }
    return ca == cb;
}

namespace detail {

/// Backtracking search for a column strict arrangement of the given row
/// multisets, processing rows top to bottom. prev holds the values placed in
/// the previous row, indexed by column.
inline bool dominant_search(const Pyramid& p, const std::vector<std::vector<Entry>>& rows, int i,
                            std::map<int, Entry>& prev, std::vector<Entry>& out) {
    if (i > p.rows()) return true;
    std::vector<Entry> r = rows[i - 1];
    std::sort(r.begin(), r.end(), CanonicalEntryLess{});
    int c0 = p.row_first_col(i);
    do {
        bool ok = true;
        for (int j = 0; j < (int)r.size() && ok; ++j) {
            auto it = prev.find(c0 + j);
            if (it != prev.end() && !field_gt(it->second, r[j])) ok = false;
        }
        if (ok) {
            std::map<int, Entry> cur;
            for (int j = 0; j < (int)r.size(); ++j) cur.emplace(c0 + j, r[j]);
            std::size_t mark = out.size();
            out.insert(out.end(), r.begin(), r.end());
            if (dominant_search(p, rows, i + 1, cur, out)) return true;
            out.resize(mark);
        }
    } while (std::next_permutation(r.begin(), r.end(), CanonicalEntryLess{}));
    return false;
}

} // namespace detail

/// A column strict representative of the row class, when one exists.
inline std::optional<Tableau> dominant_representative(const RowTabloid& a) {
    const Pyramid& p = a.pyramid();
    std::map<int, Entry> prev;
    std::vector<Entry> placed;  // row by row, left to right
    if (!detail::dominant_search(p, a.rows(), 1, prev, placed)) return std::nullopt;
    // Reassemble into box order.
    std::vector<Entry> boxes(p.boxes(), Rational(0));
    std::size_t idx = 0;
    for (int i = 1; i <= p.rows(); ++i) {
        int c0 = p.row_first_col(i);
        for (int j = 0; j < p.row_length(i); ++j) boxes[p.box_at(i, c0 + j) - 1] = placed[idx++];
    }
    Tableau t(p, std::move(boxes));
    if (!is_column_strict(t)) throw Error("internal", "dominant search produced a bad tableau");
    return t;
}

inline bool is_dominant(const RowTabloid& a) { return dominant_representative(a).has_value(); }

namespace detail {

inline void multisets_from_range(int size, long long lo, long long hi, std::vector<std::vector<Entry>>& out) {
    std::vector<long long> cur(size, lo);
    if (size == 0) { out.push_back({}); return; }
    while (true) {
        std::vector<Entry> v;
        for (long long x : cur) v.push_back(Rational(x));
        out.push_back(std::move(v));
        int i = size - 1;
        while (i >= 0 && cur[i] == hi) --i;
        if (i < 0) break;
        ++cur[i];
        for (int j = i + 1; j < size; ++j) cur[j] = cur[i];  // weakly increasing => multiset once
    }
}

} // namespace detail

/// Exhaustive enumeration of integral tabloids with entries in [lo, hi],
/// optionally filtered by content.
inline std::vector<RowTabloid> enumerate_row0(const Pyramid& p, long long lo, long long hi,
                                              const std::optional<Content>& filter = std::nullopt) {
    if (lo > hi) throw Error("range_required", "empty entry range");
    std::vector<std::vector<std::vector<Entry>>> per_row;
    for (int i = 1; i <= p.rows(); ++i) {
        std::vector<std::vector<Entry>> ms;
        detail::multisets_from_range(p.row_length(i), lo, hi, ms);
        per_row.push_back(std::move(ms));
    }
    std::vector<RowTabloid> out;
    std::vector<int> pick(p.rows(), 0);
    while (true) {
        std::vector<std::vector<Entry>> rows;
        for (int i = 0; i < p.rows(); ++i) rows.push_back(per_row[i][pick[i]]);
        RowTabloid t(p, std::move(rows));
        if (!filter || content(t) == *filter) out.push_back(std::move(t));
        int i = p.rows() - 1;
        while (i >= 0 && pick[i] + 1 == (int)per_row[i].size()) pick[i--] = 0;
        if (i < 0) break;
        ++pick[i];
    }
    return out;
}

/// Exhaustive enumeration of integral column strict tableaux with entries in
/// [lo, hi].
inline std::vector<Tableau> enumerate_col0(const Pyramid& p, long long lo, long long hi,
                                           const std::optional<Content>& filter = std::nullopt) {
    if (lo > hi) throw Error("range_required", "empty entry range");
    // Per column: strictly decreasing downward sequences = subsets of the range.
    std::vector<std::vector<std::vector<Entry>>> per_col;
    for (int c = 1; c <= p.levels(); ++c) {
        int h = p.height(c);
        std::vector<std::vector<Entry>> cols;
        std::vector<long long> comb(h);
        for (int i = 0; i < h; ++i) comb[i] = lo + i;
        if (hi - lo + 1 >= h) {
            while (true) {
                std::vector<Entry> col;  // top to bottom = decreasing
                for (int i = h - 1; i >= 0; --i) col.push_back(Rational(comb[i]));
                cols.push_back(std::move(col));
                int i = h - 1;
                while (i >= 0 && comb[i] == hi - (h - 1 - i)) --i;
                if (i < 0) break;
                ++comb[i];
                for (int j = i + 1; j < h; ++j) comb[j] = comb[j - 1] + 1;
            }
        }
        per_col.push_back(std::move(cols));
    }
    std::vector<Tableau> out;
    for (const auto& cols : per_col)
        if (cols.empty()) return out;
    std::vector<int> pick(p.levels(), 0);
    while (true) {
        std::vector<Entry> boxes;
        for (int c = 0; c < p.levels(); ++c)
            boxes.insert(boxes.end(), per_col[c][pick[c]].begin(), per_col[c][pick[c]].end());
        Tableau t(p, std::move(boxes));
        if (!filter || content(t) == *filter) out.push_back(std::move(t));
        int c = p.levels() - 1;
        while (c >= 0 && pick[c] + 1 == (int)per_col[c].size()) pick[c--] = 0;
        if (c < 0) break;
        ++pick[c];
    }
    return out;
}

inline std::vector<Tableau> enumerate_std0(const Pyramid& p, long long lo, long long hi,
                                           const std::optional<Content>& filter = std::nullopt) {
    std::vector<Tableau> out;
    for (auto& t : enumerate_col0(p, lo, hi, filter))
        if (is_standard(t)) out.push_back(std::move(t));
    return out;
}

inline std::vector<RowTabloid> enumerate_dom0(const Pyramid& p, long long lo, long long hi,
                                              const std::optional<Content>& filter = std::nullopt) {
    std::vector<RowTabloid> out;
    for (auto& t : enumerate_row0(p, lo, hi, filter))
        if (is_dominant(t)) out.push_back(std::move(t));
    return out;
}

} // namespace wrep

#endif // WREP_TABLEAU_HPP
