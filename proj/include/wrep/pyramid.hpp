#ifndef WREP_PYRAMID_HPP
#define WREP_PYRAMID_HPP

#include <algorithm>
#include <string>
#include <vector>

#include "wrep/rational.hpp"

namespace wrep {

/// A pyramid: column heights q_1..q_l, unimodal about the split index k,
/// drawn with n rows numbered 1..n from top to bottom so that row n is full.
/// Boxes are numbered 1..N down columns, leftmost column first; every lookup
/// of (row, col) goes through the tables built here.
class Pyramid {
public:
    Pyramid(std::vector<int> q, int k, int n) : q_(std::move(q)), k_(k), n_(n) {
        int l = (int)q_.size();
        if (l == 0) throw Error("invalid_pyramid", "need at least one column");
        if (k_ < 0 || k_ > l) throw Error("invalid_pyramid", "split index k out of range");
        for (int c = 0; c < l; ++c)
            if (q_[c] <= 0) throw Error("invalid_pyramid", "column heights must be positive");
        for (int c = 1; c < k_; ++c)
            if (q_[c - 1] > q_[c]) throw Error("invalid_pyramid", "columns 1..k must be weakly increasing");
        for (int c = k_ + 1; c < l; ++c)
            if (q_[c - 1] < q_[c]) throw Error("invalid_pyramid", "columns k+1..l must be weakly decreasing");
        int h = *std::max_element(q_.begin(), q_.end());
        if (n_ < h) throw Error("height_too_small", "n < height of pyramid");

        p_.assign(n_ + 1, 0);
        for (int i = 1; i <= n_; ++i)
            for (int c = 0; c < l; ++c)
                if (q_[c] >= n_ - i + 1) ++p_[i];

        sigma_.assign(n_ + 1, std::vector<int>(n_ + 1, 0));
        for (int i = 1; i <= n_; ++i)
            for (int j = 1; j <= n_; ++j) {
                int s = 0;
                if (i >= j) {
                    for (int c = 1; c <= k_; ++c)
                        if (i > n_ - q_[c - 1] && n_ - q_[c - 1] >= j) ++s;
                } else {
                    for (int c = k_ + 1; c <= l; ++c)
                        if (i <= n_ - q_[c - 1] && n_ - q_[c - 1] < j) ++s;
                }
                sigma_[i][j] = s;
            }
        // p_i = l - s_{n,i} - s_{i,n} must come out of the counting formula.
        for (int i = 1; i <= n_; ++i)
            if (p_[i] != l - sigma_[n_][i] - sigma_[i][n_])
                throw Error("invalid_pyramid", "row length / shift matrix mismatch");

        box_row_.push_back(0);  // boxes are 1-based
        box_col_.push_back(0);
        for (int c = 1; c <= l; ++c)
            for (int i = n_ - q_[c - 1] + 1; i <= n_; ++i) {
                box_row_.push_back(i);
                box_col_.push_back(c);
            }
    }

    int levels() const { return (int)q_.size(); }          // l
    int rows() const { return n_; }                        // n
    int split() const { return k_; }
    int boxes() const { return (int)box_row_.size() - 1; } // N
    int height(int col) const { return q_[col - 1]; }      // q_c, 1-based
    const std::vector<int>& heights() const { return q_; }
    int row_length(int row) const { return p_[row]; }      // p_i, 1-based
    std::vector<int> row_lengths() const { return std::vector<int>(p_.begin() + 1, p_.end()); }

    int shift(int i, int j) const { return sigma_[i][j]; }              // s_{i,j}
    int big_shift(int i, int j) const { return sigma_[i][j] + p_[std::min(i, j)]; } // S_{i,j}

    int box_row(int b) const { return box_row_[b]; }
    int box_col(int b) const { return box_col_[b]; }

    /// Leftmost column of row i (1-based); rows occupy contiguous column runs.
    int row_first_col(int i) const {
        for (int c = 1; c <= levels(); ++c)
            if (q_[c - 1] >= n_ - i + 1) return c;
        return levels() + 1;
    }

    /// Box index at (row, col), or 0 when that cell is outside the diagram.
    int box_at(int row, int col) const {
        if (col < 1 || col > levels()) return 0;
        if (row <= n_ - q_[col - 1] || row > n_) return 0;
        int b = 0;
        for (int c = 1; c < col; ++c) b += q_[c - 1];
        return b + (row - (n_ - q_[col - 1]));
    }

    bool left_justified() const {
        for (int c = 1; c < levels(); ++c)
            if (q_[c - 1] < q_[c]) return false;
        return true;
    }

    friend bool operator==(const Pyramid& a, const Pyramid& b) {
        return a.q_ == b.q_ && a.k_ == b.k_ && a.n_ == b.n_;
    }
    friend bool operator!=(const Pyramid& a, const Pyramid& b) { return !(a == b); }

    std::string to_string() const {
        std::string s = "pi=(";
        for (std::size_t i = 0; i < q_.size(); ++i) s += (i ? "," : "") + std::to_string(q_[i]);
        s += ") k=" + std::to_string(k_) + " n=" + std::to_string(n_);
        return s;
    }

private:
    std::vector<int> q_;
    int k_, n_;
    std::vector<int> p_;                    // p_[1..n]
    std::vector<std::vector<int>> sigma_;   // sigma_[1..n][1..n]
    std::vector<int> box_row_, box_col_;    // 1..N
};

/// Default split index: length of the maximal weakly increasing prefix. For
/// any valid unimodal shape this choice satisfies the shape condition.
inline int default_split(const std::vector<int>& q) {
    int k = 1;
    while (k < (int)q.size() && q[k - 1] <= q[k]) ++k;
    return k;
}

} // namespace wrep

#endif // WREP_PYRAMID_HPP
