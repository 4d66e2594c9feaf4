#ifndef WREP_YANGIAN2_HPP
#define WREP_YANGIAN2_HPP

#include <algorithm>
#include <map>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "wrep/gtchar.hpp"
#include "wrep/matrix.hpp"
#include "wrep/poly.hpp"
#include "wrep/tableau.hpp"

namespace wrep {

/// Action of the n = 2 generator series on a finite dimensional module: the
/// coefficient matrices of D_1(u), D_2(u), E_1(u), F_1(u) up to the degree
/// bound, together with the shift pair recording which coefficients are
/// genuine generators (E exists in degrees > s12, F in degrees > s21).
struct SeriesAction {
    int dim = 0;
    int bound = 0;
    int s12 = 0, s21 = 0;
    int p1 = 0, p2 = 0;  // row lengths of the underlying pyramid
    MatSeries D1, D2, E, F;

    MatSeries D1_tilde() const { return -D1.inverse_unit(); }
};

/// Series action of a single column of height one (a one dimensional module)
/// or two (the irreducible of highest weight (a, b+1), dimension a - b).
/// The normalization is fixed by the highest weight identities
///   u^{p_1} D_1(u) v+ = prod (u + a_{1,j}) v+,
///   (u-1)^{p_2} D_2(u-1) v+ = prod (u + a_{2,j}) v+,
/// which are validated at construction rather than trusted.
inline SeriesAction column_action(const std::vector<Rational>& col, int bound) {
    SeriesAction s;
    s.bound = bound;
    if (col.size() == 1) {
        const Rational& b = col[0];
        s.dim = 1;
        s.p1 = 0;
        s.p2 = 1;
        s.D1 = MatSeries::one(1, bound);
        s.D2 = MatSeries::one(1, bound);
        s.D2[1].at(0, 0) = b + Rational(1);
        s.E = MatSeries(1, bound);
        s.F = MatSeries(1, bound);
    } else if (col.size() == 2) {
        const Rational& a = col[0];
        const Rational& b = col[1];
        Rational diff = a - b;
        if (!diff.is_natural() || diff.is_zero())
            throw Error("not_column_strict", "height-2 column needs a > b");
        int d = (int)diff.to_ll();
        s.dim = d;
        s.p1 = 1;
        s.p2 = 1;
        // gl_2 on basis w_r = f^(r) v+, r = 0..d-1:
        //   e11 w_r = (a - r) w_r,      e22 w_r = (b + 1 + r) w_r,
        //   f w_r = (r+1) w_{r+1},      e w_r = (a - b - r) w_{r-1}.
        RatMat e11(d, d), e22(d, d), e12(d, d), e21(d, d);
        for (int r = 0; r < d; ++r) {
            e11.at(r, r) = a - Rational(r);
            e22.at(r, r) = b + Rational(1 + r);
            if (r + 1 < d) e21.at(r + 1, r) = Rational(r + 1);
            if (r >= 1) e12.at(r - 1, r) = a - b - Rational(r);
        }
        // Evaluation: T_{ij}(u) = delta_ij + e_ij u^{-1}; the Gauss
        // factorization of that matrix gives the generator series.
        s.D1 = MatSeries::one(d, bound);
        s.D1[1] = e11;
        MatSeries d1inv = s.D1.inverse_unit();
        MatSeries t12(d, bound), t21(d, bound);
        t12[1] = e12;
        t21[1] = e21;
        s.E = d1inv * t12;
        s.F = t21 * d1inv;
        MatSeries t22 = MatSeries::one(d, bound);
        t22[1] = e22;
        s.D2 = t22 - s.F * s.D1 * s.E;
    } else {
        throw Error("size_limit", "the explicit engine is limited to columns of height <= 2");
    }
    // Validate the highest weight identities on v+ = first basis vector.
    auto check_hw = [&](const MatSeries& D, int p, const std::vector<Rational>& want, int arg_shift) {
        // (u - arg_shift)^p D(u - arg_shift) v+ = prod (u + want_j) v+ as a
        // polynomial identity in u of degree p.
        Poly lhs;  // coefficients of v+ only; off-v+ components must vanish
        Poly rhs = Poly::constant(Rational(1));
        for (const Rational& w : want) rhs = rhs * Poly::monic_linear(w);
        // D(v)v+ coefficients: D[r] column 0; require zero beyond degree p and
        // scalar on v+.
        std::vector<Rational> dv(bound + 1, Rational(0));
        for (int r = 0; r <= bound; ++r) {
            for (int i = 1; i < s.dim; ++i)
                if (!D[r].at(i, 0).is_zero())
                    throw Error("internal", "highest weight vector is not a D eigenvector");
            dv[r] = D[r].at(0, 0);
            if (r > p && !dv[r].is_zero())
                throw Error("internal", "D series does not truncate at the row length");
        }
        // v^p D(v) = sum dv[r] v^{p-r}; substitute v = u - arg_shift.
        std::vector<Rational> c(p + 1, Rational(0));
        for (int r = 0; r <= p; ++r) c[p - r] = dv[r];
        lhs = Poly(std::move(c)).shift_arg(Rational(-arg_shift));
        if (!(lhs == rhs)) throw Error("internal", "highest weight identity failed on a column module");
    };
    std::vector<Rational> row1, row2;
    if (col.size() == 2) row1 = {col[0]};
    row2 = {col.back()};
    check_hw(s.D1, s.p1, row1, 0);
    check_hw(s.D2, s.p2, row2, 1);
    for (int r = 1; r <= bound; ++r)
        for (int i = 0; i < s.dim; ++i)
            if (!s.E[r].at(i, 0).is_zero()) throw Error("internal", "E does not kill the highest weight vector");
    return s;
}

/// Comultiplication of the n = 2 series, applied to a pair of module
/// actions: D1 -> D1 ox D1 + D1 E ox F D1, and the partner formulas with the
/// alternating sums over powers of E and F. The result is masked to the
/// combined shift, zeroing coefficients that are not genuine generators.
inline SeriesAction tensor_action(const SeriesAction& l, const SeriesAction& r, int mask_s12, int mask_s21) {
    if (l.bound != r.bound) throw Error("shape_mismatch", "series bounds differ");
    int bound = l.bound;
    SeriesAction t;
    t.dim = l.dim * r.dim;
    t.bound = bound;
    t.s12 = mask_s12;
    t.s21 = mask_s21;
    t.p1 = l.p1 + r.p1;
    t.p2 = l.p2 + r.p2;

    MatSeries lD1t = l.D1_tilde();
    MatSeries rD1t = r.D1_tilde();

    t.D1 = kron_series(l.D1, r.D1) + kron_series(l.D1 * l.E, r.F * r.D1);

    t.D2 = kron_series(l.D2, r.D2);
    {
        MatSeries le = l.D2, rf = r.D2;  // D2 E^k and F^k D2 accumulated
        int sign = 1;
        for (int k = 1; k <= bound; ++k) {
            le = le * l.E;
            rf = r.F * rf;
            sign = -sign;
            if (le.is_zero() || rf.is_zero()) break;
            MatSeries term = kron_series(le, rf);
            t.D2 = sign > 0 ? t.D2 + term : t.D2 - term;
        }
    }

    t.E = kron_series(MatSeries::one(l.dim, bound), r.E);
    {
        MatSeries ek = MatSeries::one(l.dim, bound);
        int sign = 1;
        for (int k = 1; k <= bound; ++k) {
            ek = ek * l.E;
            sign = -sign;
            if (ek.is_zero()) break;
            // D1_tilde F^{k-1} D2 on the right factor
            MatSeries rhs = rD1t;
            for (int j = 0; j < k - 1; ++j) rhs = rhs * r.F;
            rhs = rhs * r.D2;
            MatSeries term = kron_series(ek, rhs);
            t.E = sign > 0 ? t.E + term : t.E - term;
        }
    }

    t.F = kron_series(l.F, MatSeries::one(r.dim, bound));
    {
        MatSeries fk = MatSeries::one(r.dim, bound);
        int sign = 1;
        for (int k = 1; k <= bound; ++k) {
            fk = fk * r.F;
            sign = -sign;
            if (fk.is_zero()) break;
            MatSeries lhs = l.D2;
            for (int j = 0; j < k - 1; ++j) lhs = lhs * l.E;
            lhs = lhs * lD1t;
            MatSeries term = kron_series(lhs, fk);
            t.F = sign > 0 ? t.F + term : t.F - term;
        }
    }

    for (int rr = 0; rr <= bound; ++rr) {
        if (rr <= t.s12) t.E[rr] = RatMat(t.dim, t.dim);
        if (rr <= t.s21) t.F[rr] = RatMat(t.dim, t.dim);
    }
    return t;
}

/// Realize the standard module V(A) of a two-row pyramid: column modules
/// combined left to right, masking each partial product to the shift matrix
/// of the corresponding prefix of the pyramid.
inline SeriesAction standard_module_action(const Tableau& a, int bound) {
    const Pyramid& p = a.pyramid();
    if (p.rows() != 2) throw Error("size_limit", "the explicit engine handles two-row pyramids only");
    if (!is_column_strict(a)) throw Error("not_column_strict", "standard modules need column strict tableaux");
    std::optional<SeriesAction> acc;
    for (int c = 1; c <= p.levels(); ++c) {
        SeriesAction col = column_action(a.column(c), bound);
        if (!acc) {
            Pyramid sub(std::vector<int>(p.heights().begin(), p.heights().begin() + 1), std::min(p.split(), 1), 2);
            col.s12 = sub.shift(1, 2);
            col.s21 = sub.shift(2, 1);
            acc = std::move(col);
        } else {
            Pyramid sub(std::vector<int>(p.heights().begin(), p.heights().begin() + c), std::min(p.split(), c), 2);
            acc = tensor_action(*acc, col, sub.shift(1, 2), sub.shift(2, 1));
        }
    }
    return *acc;
}

/// One failed relation instance, for the verification report.
struct RelationReport {
    std::vector<std::string> violations;
    bool ok() const { return violations.empty(); }
};

/// Check the defining relations of the shifted Yangian (all instances with
/// superscripts up to the given degree), the truncation of D_1 beyond p_1,
/// and the vanishing of the higher Gauss coefficients T_{i,j}^{(r)}.
inline RelationReport verify_relations(const SeriesAction& s, int max_degree = 0) {
    RelationReport rep;
    int R = max_degree > 0 ? std::min(max_degree, s.bound) : s.bound;
    auto comm = [](const RatMat& x, const RatMat& y) { return x * y - y * x; };
    auto fail = [&](const std::string& what) { rep.violations.push_back(what); };

    MatSeries d1t = s.D1_tilde();

    // [D_i^(r), D_j^(s)] = 0
    for (int r = 1; r <= R; ++r)
        for (int q = 1; q <= R; ++q) {
            if (!comm(s.D1[r], s.D1[q]).is_zero()) fail("[D1^" + std::to_string(r) + ",D1^" + std::to_string(q) + "] != 0");
            if (!comm(s.D1[r], s.D2[q]).is_zero()) fail("[D1^" + std::to_string(r) + ",D2^" + std::to_string(q) + "] != 0");
            if (!comm(s.D2[r], s.D2[q]).is_zero()) fail("[D2^" + std::to_string(r) + ",D2^" + std::to_string(q) + "] != 0");
        }

    // [E^(r), F^(q)] = sum_{t=0}^{r+q-1} D1_tilde^(t) D2^(r+q-1-t)
    for (int r = s.s12 + 1; r <= R; ++r)
        for (int q = s.s21 + 1; q <= R; ++q) {
            if (r + q - 1 > R) continue;
            RatMat rhs(s.dim, s.dim);
            for (int t = 0; t <= r + q - 1; ++t) rhs = rhs + d1t[t] * s.D2[r + q - 1 - t];
            if (!(comm(s.E[r], s.F[q]) == rhs))
                fail("[E^" + std::to_string(r) + ",F^" + std::to_string(q) + "] != sum Dt D2");
        }

    // [D_i^(r), E^(q)] and [D_i^(r), F^(q)]
    for (int r = 1; r <= R; ++r)
        for (int q = s.s12 + 1; q <= R; ++q) {
            if (r + q - 1 > R) continue;
            RatMat rhs1(s.dim, s.dim), rhs2(s.dim, s.dim);
            for (int t = 0; t <= r - 1; ++t) {
                rhs1 = rhs1 + s.D1[t] * s.E[r + q - 1 - t];
                rhs2 = rhs2 + s.D2[t] * s.E[r + q - 1 - t];
            }
            if (!(comm(s.D1[r], s.E[q]) == rhs1)) fail("[D1^" + std::to_string(r) + ",E^" + std::to_string(q) + "] mismatch");
            if (!(comm(s.D2[r], s.E[q]) == -rhs2)) fail("[D2^" + std::to_string(r) + ",E^" + std::to_string(q) + "] mismatch");
        }
    for (int r = 1; r <= R; ++r)
        for (int q = s.s21 + 1; q <= R; ++q) {
            if (r + q - 1 > R) continue;
            RatMat rhs1(s.dim, s.dim), rhs2(s.dim, s.dim);
            for (int t = 0; t <= r - 1; ++t) {
                rhs1 = rhs1 + s.F[r + q - 1 - t] * s.D1[t];
                rhs2 = rhs2 + s.F[r + q - 1 - t] * s.D2[t];
            }
            if (!(comm(s.D1[r], s.F[q]) == -rhs1)) fail("[D1^" + std::to_string(r) + ",F^" + std::to_string(q) + "] mismatch");
            if (!(comm(s.D2[r], s.F[q]) == rhs2)) fail("[D2^" + std::to_string(r) + ",F^" + std::to_string(q) + "] mismatch");
        }

    // [E^(r), E^(q+1)] - [E^(r+1), E^(q)] = E^(r) E^(q) + E^(q) E^(r)
    for (int r = s.s12 + 1; r + 1 <= R; ++r)
        for (int q = s.s12 + 1; q + 1 <= R; ++q) {
            RatMat lhs = comm(s.E[r], s.E[q + 1]) - comm(s.E[r + 1], s.E[q]);
            RatMat rhs = s.E[r] * s.E[q] + s.E[q] * s.E[r];
            if (!(lhs == rhs)) fail("E Serre-type relation failed at (" + std::to_string(r) + "," + std::to_string(q) + ")");
        }
    for (int r = s.s21 + 1; r + 1 <= R; ++r)
        for (int q = s.s21 + 1; q + 1 <= R; ++q) {
            RatMat lhs = comm(s.F[r + 1], s.F[q]) - comm(s.F[r], s.F[q + 1]);
            RatMat rhs = s.F[r] * s.F[q] + s.F[q] * s.F[r];
            if (!(lhs == rhs)) fail("F Serre-type relation failed at (" + std::to_string(r) + "," + std::to_string(q) + ")");
        }

    // Truncation: D_1^(r) = 0 for r > p_1, and the Gauss products T_{i,j}
    // vanish beyond S_{i,j}.
    for (int r = s.p1 + 1; r <= R; ++r)
        if (!s.D1[r].is_zero()) fail("D1^" + std::to_string(r) + " != 0 beyond p1");
    MatSeries t12 = s.D1 * s.E;
    MatSeries t21 = s.F * s.D1;
    MatSeries t22 = s.F * s.D1 * s.E + s.D2;
    for (int r = s.s12 + s.p1 + 1; r <= R; ++r)
        if (!t12[r].is_zero()) fail("T12^" + std::to_string(r) + " != 0 beyond S12");
    for (int r = s.s21 + s.p1 + 1; r <= R; ++r)
        if (!t21[r].is_zero()) fail("T21^" + std::to_string(r) + " != 0 beyond S21");
    for (int r = s.p2 + 1; r <= R; ++r)
        if (!t22[r].is_zero()) fail("T22^" + std::to_string(r) + " != 0 beyond S22");
    return rep;
}

namespace detail {

/// Indices of basis vectors grouped by weight, read off the diagonal degree-1
/// coefficients of D_1 and D_2.
inline std::map<std::pair<Rational, Rational>, std::vector<int>, bool (*)(const std::pair<Rational, Rational>&,
                                                                          const std::pair<Rational, Rational>&)>
weight_blocks(const SeriesAction& s) {
    auto less = +[](const std::pair<Rational, Rational>& a, const std::pair<Rational, Rational>& b) {
        if (a.first != b.first) return a.first < b.first;
        return a.second < b.second;
    };
    if (!s.D1[1].is_diagonal() || !s.D2[1].is_diagonal())
        throw Error("internal", "degree-1 D coefficients should be diagonal");
    std::map<std::pair<Rational, Rational>, std::vector<int>, decltype(less)> blocks(less);
    for (int i = 0; i < s.dim; ++i) blocks[{s.D1[1].at(i, i), s.D2[1].at(i, i)}].push_back(i);
    return blocks;
}

/// Restrict an operator to the span of the given basis vectors (columns);
/// the span must be invariant.
inline RatMat restrict_to(const RatMat& op, const std::vector<std::vector<Rational>>& basis) {
    int k = (int)basis.size();
    int n = op.rows();
    // Solve op * basis_j = sum_i basis_i x_{ij} column by column.
    std::vector<std::vector<Rational>> aug((std::size_t)n, std::vector<Rational>(k + k, Rational(0)));
    // Left block: basis as columns. Right block: images.
    for (int j = 0; j < k; ++j)
        for (int i = 0; i < n; ++i) aug[i][j] = basis[j][i];
    for (int j = 0; j < k; ++j) {
        std::vector<Rational> img(n, Rational(0));
        for (int i = 0; i < n; ++i)
            for (int t = 0; t < n; ++t)
                if (!op.at(i, t).is_zero()) img[i] += op.at(i, t) * basis[j][t];
        for (int i = 0; i < n; ++i) aug[i][k + j] = img[i];
    }
    std::vector<int> piv = row_reduce(aug);
    RatMat x(k, k);
    for (std::size_t r = 0; r < piv.size(); ++r) {
        if (piv[r] >= k) throw Error("internal", "subspace is not invariant under the operator");
        for (int j = 0; j < k; ++j) x.at(piv[r], j) = aug[r][k + j];
    }
    return x;
}

/// Exact characteristic polynomial by the Faddeev-LeVerrier recursion.
inline Poly char_poly(const RatMat& m) {
    int n = m.rows();
    std::vector<Rational> c(n + 1, Rational(0));
    c[n] = Rational(1);
    RatMat mk = RatMat::identity(n);
    for (int k = 1; k <= n; ++k) {
        mk = m * mk;
        Rational tr(0);
        for (int i = 0; i < n; ++i) tr += mk.at(i, i);
        c[n - k] = -(tr / Rational(k));
        for (int i = 0; i < n; ++i) mk.at(i, i) += c[n - k];
    }
    return Poly(std::move(c));
}

/// All rational roots with multiplicity; throws if the polynomial does not
/// split over the rationals.
inline std::vector<Rational> rational_roots(Poly p) {
    auto to_ll_abs = [](Rational::Int v) {
        if (v < 0) v = -v;
        if (v > (Rational::Int)INT64_MAX) throw Error("overflow", "root candidate too large");
        return (long long)v;
    };
    std::vector<Rational> roots;
    while (p.degree() > 0) {
        long long den_lcm = 1;
        for (const Rational& c : p.coeffs()) {
            long long d = to_ll_abs(c.den());
            den_lcm = den_lcm / std::gcd(den_lcm, d) * d;
        }
        std::vector<Rational> ic;
        for (const Rational& c : p.coeffs()) ic.push_back(c * Rational(den_lcm));
        auto divisors = [&](const Rational& v) {
            Rational::Int a = v.num() < 0 ? -v.num() : v.num();
            std::vector<long long> d;
            // trial division on 128-bit values, keeping cofactors that fit;
            // genuinely huge candidates cannot be eigenvalues here
            for (long long i = 1; (Rational::Int)i * i <= a && i <= 2000000; ++i)
                if (a % i == 0) {
                    d.push_back(i);
                    Rational::Int co = a / i;
                    if (co != i && co <= (Rational::Int)INT64_MAX) d.push_back((long long)co);
                }
            return d;
        };
        bool found = false;
        if (ic[0].is_zero()) {
            roots.push_back(Rational(0));
            p = p.divide_linear(Rational(0));
            found = true;
        } else {
            std::vector<Rational> cands;
            for (long long sn : divisors(ic[0]))
                for (long long tn : divisors(ic.back())) {
                    cands.emplace_back(sn, tn);
                    cands.emplace_back(-sn, tn);
                }
            // actual eigenvalues are small; try candidates by magnitude and
            // treat arithmetic overflow on absurd ones as a non-root
            std::sort(cands.begin(), cands.end(), [](const Rational& a, const Rational& b) {
                Rational aa = a < Rational(0) ? -a : a, bb = b < Rational(0) ? -b : b;
                if (aa != bb) return aa < bb;
                return a < b;
            });
            cands.erase(std::unique(cands.begin(), cands.end()), cands.end());
            for (const Rational& cand : cands) {
                bool zero = false;
                try {
                    zero = p.eval(cand).is_zero();
                } catch (const Error&) {
                    continue;
                }
                if (zero) {
                    roots.push_back(cand);
                    p = p.divide_linear(-cand);
                    found = true;
                    break;
                }
            }
        }
        if (!found) throw Error("internal", "polynomial has an irrational eigenvalue");
    }
    return roots;
}

struct GTBlock {
    std::vector<std::vector<Rational>> basis;           // vectors in ambient coordinates
    std::vector<std::vector<Rational>> eigen1, eigen2;  // eigenvalue of D_i^(r), r = 1..bound
};

/// Joint generalized eigenspace decomposition of the commuting D operators,
/// refined weight block by weight block. Eigenvalue series of the D's are
/// rational functions whose numerator and denominator degrees are bounded by
/// the row lengths, so splitting up to degree p1 + p2 + p1 already separates
/// distinct Gelfand-Tsetlin subspaces; past that the blocks are single
/// generalized eigenspaces and the eigenvalue is the normalized trace.
inline std::vector<GTBlock> gt_blocks(const SeriesAction& s) {
    int cap = std::min(s.bound, 2 * s.p1 + s.p2);
    std::vector<GTBlock> blocks;
    for (const auto& [wt, idx] : weight_blocks(s)) {
        GTBlock seed;
        for (int i : idx) {
            std::vector<Rational> v(s.dim, Rational(0));
            v[i] = Rational(1);
            seed.basis.push_back(std::move(v));
        }
        std::vector<GTBlock> cur{std::move(seed)};
        for (int which = 0; which < 2; ++which) {
            const MatSeries& D = which == 0 ? s.D1 : s.D2;
            for (int r = 1; r <= cap; ++r) {
                std::vector<GTBlock> next;
                for (GTBlock& b : cur) {
                    RatMat x = restrict_to(D[r], b.basis);
                    // single-eigenvalue fast path: the eigenvalue must be the
                    // normalized trace, and the block survives whole exactly
                    // when its generalized kernel is everything
                    {
                        int k = (int)b.basis.size();
                        Rational tr(0);
                        for (int i = 0; i < k; ++i) tr += x.at(i, i);
                        Rational lam0 = tr / Rational(k);
                        RatMat sh = x;
                        for (int i = 0; i < k; ++i) sh.at(i, i) = sh.at(i, i) - lam0;
                        if ((int)generalized_kernel(sh).size() == k) {
                            auto& tgt = which == 0 ? b.eigen1 : b.eigen2;
                            if ((int)tgt.size() < 1) tgt.resize(1);
                            tgt[0].push_back(lam0);
                            next.push_back(std::move(b));
                            continue;
                        }
                    }
                    std::vector<Rational> roots = rational_roots(char_poly(x));
                    std::sort(roots.begin(), roots.end());
                    roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
                    for (const Rational& lam : roots) {
                        // generalized eigenspace as a stabilized preimage
                        // chain of ker(x - lam); avoids powering the matrix
                        int k = (int)b.basis.size();
                        RatMat sh = x;
                        for (int i = 0; i < k; ++i) sh.at(i, i) = sh.at(i, i) - lam;
                        auto ns = generalized_kernel(sh);
                        if (ns.empty()) continue;
                        GTBlock nb;
                        for (const auto& coeffs : ns) {
                            std::vector<Rational> v(s.dim, Rational(0));
                            for (int t = 0; t < k; ++t)
                                for (int i = 0; i < s.dim; ++i) v[i] += coeffs[t] * b.basis[t][i];
                            nb.basis.push_back(std::move(v));
                        }
                        nb.eigen1 = b.eigen1;
                        nb.eigen2 = b.eigen2;
                        auto& tgt = which == 0 ? nb.eigen1 : nb.eigen2;
                        if ((int)tgt.size() < 1) tgt.resize(1);
                        tgt[0].push_back(lam);
                        next.push_back(std::move(nb));
                    }
                }
                cur = std::move(next);
            }
            // beyond the separating degree the restriction has one eigenvalue
            for (int r = cap + 1; r <= s.bound; ++r)
                for (GTBlock& b : cur) {
                    RatMat x = restrict_to(D[r], b.basis);
                    Rational tr(0);
                    for (int i = 0; i < x.rows(); ++i) tr += x.at(i, i);
                    auto& tgt = which == 0 ? b.eigen1 : b.eigen2;
                    if ((int)tgt.size() < 1) tgt.resize(1);
                    tgt[0].push_back(tr / Rational((long long)b.basis.size()));
                }
        }
        for (auto& b : cur) blocks.push_back(std::move(b));
    }
    return blocks;
}

} // namespace detail

/// Exact Pade reconstruction: write the series 1 + c_1 v + ... + c_R v^R as
/// Num(v)/Den(v) with Num(0) = Den(0) = 1 and deg Num + deg Den minimal,
/// verified against every available coefficient with at least two to spare.
/// Throws when the bound leaves no certification margin.
inline std::pair<Poly, Poly> pade_unit(const std::vector<Rational>& c) {
    int R = (int)c.size() - 1;
    for (int total = 0; total <= R - 2; ++total)
        for (int k = 0; k <= total; ++k) {
            int m = total - k;  // numerator degree
            // Solve c_t + sum_{j=1..k} d_j c_{t-j} = 0 for t = m+1..R.
            std::vector<std::vector<Rational>> aug;
            for (int t = m + 1; t <= R; ++t) {
                std::vector<Rational> row;
                for (int j = 1; j <= k; ++j) row.push_back(t - j >= 0 ? c[t - j] : Rational(0));
                row.push_back(-c[t]);
                aug.push_back(std::move(row));
            }
            std::vector<int> piv = row_reduce(aug);
            if (!piv.empty() && piv.back() >= k) continue;  // inconsistent
            std::vector<Rational> d(k + 1, Rational(0));
            d[0] = Rational(1);
            for (std::size_t t = 0; t < piv.size(); ++t) d[piv[t] + 1] = aug[t][k];
            // Numerator from the convolution; then verify all R coefficients.
            std::vector<Rational> num(m + 1, Rational(0));
            bool ok = true;
            for (int t = 0; t <= R && ok; ++t) {
                Rational conv(0);
                for (int j = 0; j <= k && j <= t; ++j) conv += d[j] * c[t - j];
                if (t <= m) num[t] = conv;
                else if (!conv.is_zero()) ok = false;
            }
            if (!ok) continue;
            return {Poly(std::move(num)), Poly(std::move(d))};
        }
    throw Error("size_limit", "series bound too small to certify the eigenvalue data; increase the degree bound");
}

namespace detail {

/// Convert a block eigenvalue series for row i into y-variable factors.
inline void eigen_series_to_monomial(GTMonomial& m, int i, const std::vector<Rational>& lam, int bound) {
    std::vector<Rational> c(bound + 1, Rational(0));
    c[0] = Rational(1);
    for (int r = 1; r <= bound; ++r) c[r] = lam[r - 1];
    auto [num, den] = pade_unit(c);
    // roots v0 of Num with Num(0)=1: factors (1 - v/v0) = (1 + (a+i-1)u^{-1})
    // with a + i - 1 = -1/v0.
    for (const Rational& v0 : rational_roots(num)) {
        if (v0.is_zero()) throw Error("internal", "unit polynomial with zero root");
        m.mul_y(i, Rational(-1) / v0 - Rational(i - 1), 1);
    }
    for (const Rational& v0 : rational_roots(den)) {
        if (v0.is_zero()) throw Error("internal", "unit polynomial with zero root");
        m.mul_y(i, Rational(-1) / v0 - Rational(i - 1), -1);
    }
}

} // namespace detail

/// Gelfand-Tsetlin character of the module: dimensions of the joint
/// generalized eigenspaces of the commuting D series, as a sum of monomials
/// in the y variables. Eigenvalue series are rational functions of u and are
/// recovered exactly by Pade reconstruction from the truncated series.
inline GTCharacter gt_character(const SeriesAction& s) {
    GTCharacter ch(GTCharacter::depth_exact);
    for (const auto& b : detail::gt_blocks(s)) {
        GTMonomial m;
        detail::eigen_series_to_monomial(m, 1, b.eigen1[0], s.bound);
        detail::eigen_series_to_monomial(m, 2, b.eigen2[0], s.bound);
        ch.add(m, (long long)b.basis.size());
    }
    return ch;
}

/// Highest weight vectors: the joint kernel of the genuine E coefficients
/// intersected with joint D eigenvectors, with the type read off the
/// eigenvalue polynomials.
inline std::vector<std::pair<std::vector<Rational>, RowTabloid>> highest_weight_vectors(const SeriesAction& s,
                                                                                        const Pyramid& p) {
    // Kernel of all E^(r), r > s12.
    std::vector<std::vector<Rational>> rows;
    for (int r = s.s12 + 1; r <= s.bound; ++r)
        for (int i = 0; i < s.dim; ++i) {
            std::vector<Rational> row(s.dim);
            for (int j = 0; j < s.dim; ++j) row[j] = s.E[r].at(i, j);
            rows.push_back(std::move(row));
        }
    auto kernel = nullspace(std::move(rows), s.dim);
    std::vector<std::pair<std::vector<Rational>, RowTabloid>> out;
    if (kernel.empty()) return out;

    // Refine the kernel into joint true eigenspaces of all D^(r); on highest
    // weight vectors the eigenvalue series truncate at the row lengths, so
    // splitting up to p_i suffices and the tail must restrict to zero.
    std::vector<std::vector<std::vector<Rational>>> subs{kernel};
    std::vector<std::vector<std::pair<int, Rational>>> eigs{{}};  // (which*bound+r, lambda) per subspace
    for (int which = 0; which < 2; ++which) {
        const MatSeries& D = which == 0 ? s.D1 : s.D2;
        int plen = which == 0 ? s.p1 : s.p2;
        for (int r = 1; r <= std::min(s.bound, plen); ++r) {
            std::vector<std::vector<std::vector<Rational>>> nsubs;
            std::vector<std::vector<std::pair<int, Rational>>> neigs;
            for (std::size_t t = 0; t < subs.size(); ++t) {
                RatMat x = detail::restrict_to(D[r], subs[t]);
                auto roots = detail::rational_roots(detail::char_poly(x));
                std::sort(roots.begin(), roots.end());
                roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
                for (const Rational& lam : roots) {
                    int k = (int)subs[t].size();
                    std::vector<std::vector<Rational>> rows2(k, std::vector<Rational>(k));
                    for (int i = 0; i < k; ++i)
                        for (int j = 0; j < k; ++j) rows2[i][j] = x.at(i, j) - (i == j ? lam : Rational(0));
                    auto ns = nullspace(std::move(rows2), k);
                    if (ns.empty()) continue;
                    std::vector<std::vector<Rational>> basis;
                    for (const auto& coeffs : ns) {
                        std::vector<Rational> v(s.dim, Rational(0));
                        for (int q = 0; q < k; ++q)
                            for (int i = 0; i < s.dim; ++i) v[i] += coeffs[q] * subs[t][q][i];
                        basis.push_back(std::move(v));
                    }
                    auto e = eigs[t];
                    e.push_back({which * (s.bound + 1) + r, lam});
                    nsubs.push_back(std::move(basis));
                    neigs.push_back(std::move(e));
                }
            }
            subs = std::move(nsubs);
            eigs = std::move(neigs);
        }
        // the eigenvalue series of a highest weight vector truncates at the
        // row length, so intersect with the kernel of every tail coefficient
        std::vector<std::vector<std::vector<Rational>>> nsubs;
        std::vector<std::vector<std::pair<int, Rational>>> neigs;
        for (std::size_t t = 0; t < subs.size(); ++t) {
            int k = (int)subs[t].size();
            std::vector<std::vector<Rational>> rows2;
            for (int r = plen + 1; r <= s.bound; ++r) {
                RatMat x = detail::restrict_to(D[r], subs[t]);
                for (int i = 0; i < k; ++i) {
                    std::vector<Rational> row(k);
                    for (int j = 0; j < k; ++j) row[j] = x.at(i, j);
                    rows2.push_back(std::move(row));
                }
            }
            auto ns = nullspace(std::move(rows2), k);
            if (ns.empty()) continue;
            std::vector<std::vector<Rational>> basis;
            for (const auto& coeffs : ns) {
                std::vector<Rational> v(s.dim, Rational(0));
                for (int q = 0; q < k; ++q)
                    for (int i = 0; i < s.dim; ++i) v[i] += coeffs[q] * subs[t][q][i];
                basis.push_back(std::move(v));
            }
            nsubs.push_back(std::move(basis));
            neigs.push_back(eigs[t]);
        }
        subs = std::move(nsubs);
        eigs = std::move(neigs);
    }

    for (std::size_t t = 0; t < subs.size(); ++t) {
        // Type: factor the eigenvalue polynomials of D_1, D_2.
        std::vector<std::vector<Entry>> rows_of_type(2);
        for (int which = 0; which < 2; ++which) {
            int i = which + 1;
            int plen = which == 0 ? s.p1 : s.p2;
            std::vector<Rational> c(plen + 1, Rational(0));
            c[plen] = Rational(1);
            for (const auto& [key, lam] : eigs[t]) {
                if (key / (s.bound + 1) != which) continue;
                int r = key % (s.bound + 1);
                if (r <= plen) c[plen - r] = lam;
                else if (!lam.is_zero())
                    throw Error("internal", "eigenvalue series does not truncate");
            }
            // roots v of v^p A_i(v) correspond to entries a = 1 - i - v
            for (const Rational& root : detail::rational_roots(Poly(std::move(c))))
                rows_of_type[which].push_back(Rational(1 - i) - root);
        }
        for (auto& v : subs[t]) out.push_back({v, RowTabloid(p, rows_of_type)});
    }
    return out;
}

/// Span of the module generated by a vector under the genuine generator
/// coefficients; used for the irreducibility test. Maintains an echelon
/// basis and reduces each new image against it.
inline int generated_dimension(const SeriesAction& s, const std::vector<Rational>& seed) {
    std::vector<std::vector<Rational>> ech;  // echelon rows
    std::vector<int> lead;                   // pivot column of each row
    auto insert = [&](std::vector<Rational> v) -> bool {
        for (std::size_t t = 0; t < ech.size(); ++t) {
            if (v[lead[t]].is_zero()) continue;
            Rational f = v[lead[t]];
            for (int j = 0; j < s.dim; ++j) v[j] -= f * ech[t][j];
        }
        int pv = -1;
        for (int j = 0; j < s.dim; ++j)
            if (!v[j].is_zero()) { pv = j; break; }
        if (pv < 0) return false;
        Rational inv = Rational(1) / v[pv];
        for (int j = 0; j < s.dim; ++j) v[j] *= inv;
        ech.push_back(std::move(v));
        lead.push_back(pv);
        return true;
    };
    std::vector<std::vector<Rational>> queue;
    if (insert(seed)) queue.push_back(seed);
    std::vector<const RatMat*> gens;
    for (int r = 1; r <= s.bound; ++r) {
        gens.push_back(&s.D1[r]);
        gens.push_back(&s.D2[r]);
        if (r > s.s12) gens.push_back(&s.E[r]);
        if (r > s.s21) gens.push_back(&s.F[r]);
    }
    while (!queue.empty() && (int)ech.size() < s.dim) {
        auto v = queue.back();
        queue.pop_back();
        for (const RatMat* g : gens) {
            auto w = g->apply(v);
            if (insert(w)) queue.push_back(std::move(w));
        }
    }
    return (int)ech.size();
}

/// Exact irreducibility: the highest weight space is one dimensional and the
/// canonical highest weight vector generates everything. Any nonzero
/// submodule contains a highest weight vector, so both conditions together
/// are equivalent to irreducibility.
inline bool is_irreducible(const SeriesAction& s, const Pyramid& p) {
    auto hw = highest_weight_vectors(s, p);
    if (hw.size() != 1) return false;
    std::vector<Rational> vplus(s.dim, Rational(0));
    vplus[0] = Rational(1);
    return generated_dimension(s, vplus) == s.dim;
}

/// Dimension of the two-row irreducible L(B) from its tensor factorization:
/// greedily pair rows so that each paired difference is the minimal positive
/// integer difference among the remaining entries, then multiply the paired
/// differences. Valid exactly for dominant B.
inline long long two_row_irreducible_dim(const RowTabloid& b) {
    if (b.pyramid().rows() != 2) throw Error("size_limit", "two-row tabloids only");
    std::vector<Rational> top = b.row(1), bot = b.row(2);
    long long dim = 1;
    while (!top.empty()) {
        int bi = -1, ti = -1;
        Rational best(0);
        for (std::size_t t = 0; t < top.size(); ++t)
            for (std::size_t u = 0; u < bot.size(); ++u)
                if (field_gt(top[t], bot[u])) {
                    Rational d = top[t] - bot[u];
                    if (bi < 0 || d < best) { best = d; ti = (int)t; bi = (int)u; }
                }
        if (ti < 0) throw Error("not_dominant", "no positive pairing remains");
        dim *= best.to_ll();
        top.erase(top.begin() + ti);
        bot.erase(bot.begin() + bi);
    }
    return dim;
}

} // namespace wrep

#endif // WREP_YANGIAN2_HPP
