#ifndef WREP_MATRIX_HPP
#define WREP_MATRIX_HPP

#include <vector>

#include "wrep/rational.hpp"

namespace wrep {

/// Dense matrix of exact rationals.
class RatMat {
public:
    RatMat() : r_(0), c_(0) {}
    RatMat(int rows, int cols) : r_(rows), c_(cols), a_(std::size_t(rows) * cols, Rational(0)) {}

    static RatMat identity(int n) {
        RatMat m(n, n);
        for (int i = 0; i < n; ++i) m.at(i, i) = Rational(1);
        return m;
    }

    int rows() const { return r_; }
    int cols() const { return c_; }
    Rational& at(int i, int j) { return a_[std::size_t(i) * c_ + j]; }
    const Rational& at(int i, int j) const { return a_[std::size_t(i) * c_ + j]; }

    bool is_zero() const {
        for (const auto& x : a_)
            if (!x.is_zero()) return false;
        return true;
    }

    bool is_diagonal() const {
        for (int i = 0; i < r_; ++i)
            for (int j = 0; j < c_; ++j)
                if (i != j && !at(i, j).is_zero()) return false;
        return true;
    }

    friend RatMat operator+(const RatMat& a, const RatMat& b) {
        RatMat r(a.r_, a.c_);
        for (std::size_t i = 0; i < a.a_.size(); ++i) r.a_[i] = a.a_[i] + b.a_[i];
        return r;
    }
    friend RatMat operator-(const RatMat& a, const RatMat& b) {
        RatMat r(a.r_, a.c_);
        for (std::size_t i = 0; i < a.a_.size(); ++i) r.a_[i] = a.a_[i] - b.a_[i];
        return r;
    }
    friend RatMat operator*(const RatMat& a, const RatMat& b) {
        if (a.c_ != b.r_) throw Error("shape_mismatch", "matrix product shape mismatch");
        RatMat r(a.r_, b.c_);
        for (int i = 0; i < a.r_; ++i)
            for (int k = 0; k < a.c_; ++k) {
                const Rational& x = a.at(i, k);
                if (x.is_zero()) continue;
                for (int j = 0; j < b.c_; ++j) {
                    const Rational& y = b.at(k, j);
                    if (!y.is_zero()) r.at(i, j) += x * y;
                }
            }
        return r;
    }
    friend RatMat operator*(const Rational& s, const RatMat& a) {
        RatMat r(a.r_, a.c_);
        for (std::size_t i = 0; i < a.a_.size(); ++i) r.a_[i] = s * a.a_[i];
        return r;
    }
    friend bool operator==(const RatMat& a, const RatMat& b) {
        return a.r_ == b.r_ && a.c_ == b.c_ && a.a_ == b.a_;
    }

    RatMat operator-() const { return Rational(-1) * *this; }

    friend RatMat kron(const RatMat& a, const RatMat& b) {
        RatMat r(a.r_ * b.r_, a.c_ * b.c_);
        for (int i = 0; i < a.r_; ++i)
            for (int j = 0; j < a.c_; ++j) {
                if (a.at(i, j).is_zero()) continue;
                for (int p = 0; p < b.r_; ++p)
                    for (int q = 0; q < b.c_; ++q)
                        r.at(i * b.r_ + p, j * b.c_ + q) = a.at(i, j) * b.at(p, q);
            }
        return r;
    }

    std::vector<Rational> apply(const std::vector<Rational>& v) const {
        std::vector<Rational> w(r_, Rational(0));
        for (int i = 0; i < r_; ++i)
            for (int j = 0; j < c_; ++j)
                if (!at(i, j).is_zero()) w[i] += at(i, j) * v[j];
        return w;
    }

private:
    int r_, c_;
    std::vector<Rational> a_;
};

/// Row echelon reduction in place; returns pivot column indices.
inline std::vector<int> row_reduce(std::vector<std::vector<Rational>>& m) {
    std::vector<int> pivots;
    if (m.empty()) return pivots;
    int rows = (int)m.size(), cols = (int)m[0].size();
    int rank = 0;
    for (int col = 0; col < cols && rank < rows; ++col) {
        int piv = -1;
        for (int i = rank; i < rows; ++i)
            if (!m[i][col].is_zero()) { piv = i; break; }
        if (piv < 0) continue;
        std::swap(m[rank], m[piv]);
        Rational inv = Rational(1) / m[rank][col];
        for (int j = col; j < cols; ++j) m[rank][j] = m[rank][j] * inv;
        for (int i = 0; i < rows; ++i) {
            if (i == rank || m[i][col].is_zero()) continue;
            Rational f = m[i][col];
            for (int j = col; j < cols; ++j) m[i][j] = m[i][j] - f * m[rank][j];
        }
        pivots.push_back(col);
        ++rank;
    }
    m.resize(rank);
    return pivots;
}

/// Nullspace basis (as rows) of the matrix given by rows.
inline std::vector<std::vector<Rational>> nullspace(std::vector<std::vector<Rational>> m, int cols) {
    std::vector<int> pivots = row_reduce(m);
    std::vector<bool> is_pivot(cols, false);
    for (int c : pivots) is_pivot[c] = true;
    std::vector<std::vector<Rational>> basis;
    for (int free = 0; free < cols; ++free) {
        if (is_pivot[free]) continue;
        std::vector<Rational> v(cols, Rational(0));
        v[free] = Rational(1);
        for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -m[r][free];
        basis.push_back(std::move(v));
    }
    return basis;
}

inline int rank_of(std::vector<std::vector<Rational>> m) { return (int)(row_reduce(m), m.size()); }

/// Basis (as rows) of the union of kernels of all powers of y, computed by
/// the stabilizing preimage chain K_{t+1} = y^{-1}(K_t); never forms matrix
/// powers, which keeps the exact arithmetic small.
inline std::vector<std::vector<Rational>> generalized_kernel(const RatMat& y) {
    int k = y.rows();
    std::vector<std::vector<Rational>> kernel;  // rows spanning K_t
    while (true) {
        // solve y v in span(K_t): nullspace of [y ; -K] in variables (v, c)
        std::vector<std::vector<Rational>> sys(k, std::vector<Rational>(k + kernel.size(), Rational(0)));
        for (int i = 0; i < k; ++i) {
            for (int j = 0; j < k; ++j) sys[i][j] = y.at(i, j);
            for (std::size_t t = 0; t < kernel.size(); ++t) sys[i][k + t] = -kernel[t][i];
        }
        auto ns = nullspace(std::move(sys), k + (int)kernel.size());
        std::vector<std::vector<Rational>> next;
        for (auto& v : ns) next.emplace_back(v.begin(), v.begin() + k);
        // drop the zero rows that come from pure combination variables
        std::vector<int> lead;
        std::vector<std::vector<Rational>> ech;
        for (auto v : next) {
            for (std::size_t t = 0; t < ech.size(); ++t) {
                if (v[lead[t]].is_zero()) continue;
                Rational f = v[lead[t]];
                for (int j = 0; j < k; ++j) v[j] -= f * ech[t][j];
            }
            int pv = -1;
            for (int j = 0; j < k; ++j)
                if (!v[j].is_zero()) { pv = j; break; }
            if (pv < 0) continue;
            Rational inv = Rational(1) / v[pv];
            for (int j = 0; j < k; ++j) v[j] *= inv;
            ech.push_back(std::move(v));
            lead.push_back(pv);
        }
        if (ech.size() == kernel.size()) return kernel;
        kernel = std::move(ech);
        if ((int)kernel.size() == k) return kernel;
    }
}

/// Truncated power series in u^{-1} with matrix coefficients c[0..bound].
class MatSeries {
public:
    MatSeries() = default;
    MatSeries(int dim, int bound) : c_(bound + 1, RatMat(dim, dim)) {}

    static MatSeries one(int dim, int bound) {
        MatSeries s(dim, bound);
        s.c_[0] = RatMat::identity(dim);
        return s;
    }

    int bound() const { return (int)c_.size() - 1; }
    int dim() const { return c_.empty() ? 0 : c_[0].rows(); }
    RatMat& operator[](int r) { return c_[r]; }
    const RatMat& operator[](int r) const { return c_[r]; }

    friend MatSeries operator+(const MatSeries& a, const MatSeries& b) {
        MatSeries r(a.dim(), a.bound());
        for (int i = 0; i <= a.bound(); ++i) r.c_[i] = a.c_[i] + b.c_[i];
        return r;
    }
    friend MatSeries operator-(const MatSeries& a, const MatSeries& b) {
        MatSeries r(a.dim(), a.bound());
        for (int i = 0; i <= a.bound(); ++i) r.c_[i] = a.c_[i] - b.c_[i];
        return r;
    }
    friend MatSeries operator*(const MatSeries& a, const MatSeries& b) {
        MatSeries r(a.dim(), a.bound());
        for (int i = 0; i <= a.bound(); ++i)
            for (int j = 0; i + j <= a.bound(); ++j) {
                if (a.c_[i].is_zero() || b.c_[j].is_zero()) continue;
                r.c_[i + j] = r.c_[i + j] + a.c_[i] * b.c_[j];
            }
        return r;
    }

    MatSeries operator-() const {
        MatSeries r(dim(), bound());
        for (int i = 0; i <= bound(); ++i) r.c_[i] = -c_[i];
        return r;
    }

    bool is_zero() const {
        for (const auto& m : c_)
            if (!m.is_zero()) return false;
        return true;
    }

    /// Inverse of a series whose constant term is the identity.
    MatSeries inverse_unit() const {
        if (!(c_[0] == RatMat::identity(dim())))
            throw Error("internal", "series inverse needs unit constant term");
        MatSeries r(dim(), bound());
        r.c_[0] = RatMat::identity(dim());
        for (int k = 1; k <= bound(); ++k) {
            RatMat acc(dim(), dim());
            for (int j = 1; j <= k; ++j) acc = acc + c_[j] * r.c_[k - j];
            r.c_[k] = -acc;
        }
        return r;
    }

    /// Kronecker convolution: coefficient r of X(u) tensor Y(u).
    friend MatSeries kron_series(const MatSeries& x, const MatSeries& y) {
        MatSeries r(x.dim() * y.dim(), x.bound());
        for (int i = 0; i <= x.bound(); ++i)
            for (int j = 0; i + j <= x.bound(); ++j) {
                if (x[i].is_zero() || y[j].is_zero()) continue;
                r.c_[i + j] = r.c_[i + j] + kron(x[i], y[j]);
            }
        return r;
    }

private:
    std::vector<RatMat> c_;
};

} // namespace wrep

#endif // WREP_MATRIX_HPP
