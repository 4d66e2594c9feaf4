#include <doctest.h>

#include <random>

#include "wrep/gtchar.hpp"

using namespace wrep;

namespace {
std::vector<Entry> ints(const std::vector<long long>& v) {
    std::vector<Entry> e;
    for (long long x : v) e.push_back(Rational(x));
    return e;
}
}

TEST_CASE("one-row Verma characters are a single monomial") {
    Pyramid p({1, 1, 1}, 0, 1);
    RowTabloid a(p, {ints({4, 2, 7})});
    GTCharacter ch = verma_character(a, 5);
    CHECK(ch.terms().size() == 1);
    GTMonomial m;
    for (long long x : {4, 2, 7}) m.mul_y(1, Rational(x), 1);
    CHECK(ch.coeff(m) == 1);
}

TEST_CASE("depth-1 summand for a 1x1 two-row shape") {
    Pyramid p({2}, 0, 2);
    Rational a(5), b(2);
    RowTabloid t(p, {{a}, {b}});
    GTCharacter ch = verma_character(t, 1);
    // top monomial
    GTMonomial top;
    top.mul_y(1, a, 1);
    top.mul_y(2, b, 1);
    CHECK(ch.coeff(top) == 1);
    // c = 1 term: y_{1,a-1} y_{2,a} y_{2,a-1}^{-1} y_{2,b}
    GTMonomial m;
    m.mul_y(1, a - Rational(1), 1);
    m.mul_y(2, a, 1);
    m.mul_y(2, a - Rational(1), -1);
    m.mul_y(2, b, 1);
    CHECK(ch.coeff(m) == 1);
    CHECK(ch.terms().size() == 2);
}

TEST_CASE("top monomial has coefficient one at any depth") {
    Pyramid p({2, 1}, 0, 2);
    RowTabloid t(p, {ints({3}), ints({0, 1})});
    GTCharacter ch = verma_character(t, 3);
    GTMonomial top;
    top.mul_y(1, Rational(3), 1);
    top.mul_y(2, Rational(0), 1);
    top.mul_y(2, Rational(1), 1);
    CHECK(ch.coeff(top) == 1);
}

TEST_CASE("non-top monomials sit strictly lower in the dominance order") {
    // weight of a monomial: row i component is the sum of (a + i - 1) over
    // its y_{i,a} factors (identity factors contribute zero). Every summand
    // lies below the top in the dominance order: partial sums of the weight
    // difference down the rows are non-negative, with total zero.
    Pyramid p({2, 2, 1}, 0, 2);
    RowTabloid t(p, {ints({1, 3}), ints({0, 1, 2})});
    GTCharacter ch = verma_character(t, 3);
    int n = p.rows();
    auto weight = [&](const GTMonomial& m) {
        std::vector<Rational> w(n + 1, Rational(0));
        for (const auto& [k, e] : m.exponents()) w[k.first] += Rational(e) * (k.second + Rational(k.first - 1));
        return w;
    };
    GTMonomial top;
    for (int i = 1; i <= n; ++i)
        for (const Entry& e : t.row(i)) top.mul_y(i, e, 1);
    auto wt_top = weight(top);
    REQUIRE(ch.coeff(top) == 1);
    for (const auto& [m, c] : ch.terms()) {
        auto w = weight(m);
        Rational partial(0);
        for (int i = 1; i <= n; ++i) {
            partial += wt_top[i] - w[i];
            CHECK(partial >= Rational(0));
        }
        CHECK(partial == Rational(0));
        if (!(m == top)) {
            bool strictly_lower = false;
            Rational run(0);
            for (int i = 1; i < n; ++i) {
                run += wt_top[i] - w[i];
                if (run > Rational(0)) strictly_lower = true;
            }
            CHECK(strictly_lower);
        }
    }
}

TEST_CASE("tuple and tabloid algorithms agree") {
    std::mt19937 rng(20240817);
    for (int trial = 0; trial < 30; ++trial) {
        int n = 2 + (int)(rng() % 2);
        std::vector<int> q;
        int N = 0;
        for (int c = 0; c < 2; ++c) {
            int h = 1 + (int)(rng() % n);
            q.push_back(h);
            N += h;
        }
        std::sort(q.begin(), q.end(), std::greater<int>());
        Pyramid p(q, 0, n);
        std::vector<std::vector<Entry>> rows;
        for (int i = 1; i <= n; ++i) {
            std::vector<Entry> r;
            for (int j = 0; j < p.row_length(i); ++j) r.push_back(Rational((long long)(rng() % 5) - 2));
            rows.push_back(std::move(r));
        }
        RowTabloid t(p, rows);
        for (int d = 0; d <= 4; ++d) CHECK(verma_character(t, d) == verma_character_tabloids(t, d));
    }
}

TEST_CASE("central substitution holds for Verma characters") {
    Pyramid p({2, 2, 1}, 0, 2);
    RowTabloid t(p, {ints({1, 4}), ints({0, 1, 2})});
    GTCharacter ch = verma_character(t, 4);
    CHECK(central_substitute(ch, t));
    // and fails on a perturbed tabloid
    RowTabloid wrong(p, {ints({1, 3}), ints({0, 1, 2})});
    CHECK(!central_substitute(ch, wrong));
}

TEST_CASE("column factorization at fixed depth") {
    // ch M(A) equals the product of the column Verma characters; with the
    // graded product both sides truncate identically
    Pyramid p({2, 1}, 0, 2);
    for (auto rows : {std::vector<std::vector<Entry>>{ints({2}), ints({0, 3})},
                      std::vector<std::vector<Entry>>{ints({0}), ints({1, 0})}}) {
        RowTabloid t(p, rows);
        int depth = 4;
        std::vector<RowTabloid> cols;
        // any representative works; row-permutation invariance is part of the claim
        Tableau rep = [&] {
            auto d = dominant_representative(t);
            if (d) return *d;
            std::vector<Entry> boxes;
            // fall back to an arbitrary arrangement in box order
            std::vector<std::vector<Entry>> rr = t.rows();
            std::vector<Entry> flat(p.boxes(), Rational(0));
            for (int i = 1; i <= p.rows(); ++i) {
                int c0 = p.row_first_col(i);
                for (int j = 0; j < p.row_length(i); ++j) flat[p.box_at(i, c0 + j) - 1] = rr[i - 1][j];
            }
            return Tableau(p, flat);
        }();
        for (int c = 1; c <= p.levels(); ++c) {
            Pyramid pc({p.height(c)}, 0, p.rows());
            std::vector<std::vector<Entry>> colrows(p.rows());
            auto col = rep.column(c);
            for (int i = 0; i < (int)col.size(); ++i) colrows[p.rows() - (int)col.size() + i] = {col[i]};
            cols.emplace_back(pc, colrows);
        }
        CHECK(verma_character(t, depth) == verma_product_truncated(cols, depth));
    }
}

TEST_CASE("coefficient bound from the tabloid count") {
    Pyramid p({2, 2}, 0, 2);
    RowTabloid t(p, {ints({1, 1}), ints({0, 0})});
    GTCharacter ch = verma_character(t, 4);
    long long bound = 2;  // p_1! = 2 for two rows of lengths (2,2)
    CHECK(ch.max_coeff() <= bound);
}

TEST_CASE("natural representation character") {
    for (int n : {1, 2, 3}) {
        std::vector<Entry> col{Rational(1)};
        for (int i = 2; i <= n; ++i) col.push_back(Rational(1 - i));
        GTCharacter ch = single_column_character(col, n);
        GTCharacter want(GTCharacter::depth_exact);
        for (int i = 1; i <= n; ++i) {
            GTMonomial m;
            m.mul_x(i, Rational(0), 1);
            want.add(m, 1);
        }
        CHECK(ch == want);
        CHECK(ch.dimension() == n);
    }
}

TEST_CASE("height-1 columns are one dimensional") {
    GTCharacter ch = single_column_character({Rational(7)}, 2);
    CHECK(ch.dimension() == 1);
    GTMonomial m;
    m.mul_y(2, Rational(7), 1);
    CHECK(ch.coeff(m) == 1);
}

namespace {

// Independent dimension oracle: count Gelfand-Tsetlin patterns with top row
// lambda, i.e. triangular arrays with interlacing rows.
long long gt_pattern_count(std::vector<long long> lambda) {
    if (lambda.size() == 1) return 1;
    // enumerate the next row mu with lambda_{i+1} <= mu_i <= lambda_i
    std::vector<long long> mu(lambda.size() - 1);
    long long total = 0;
    std::function<void(std::size_t)> rec = [&](std::size_t i) {
        if (i == mu.size()) {
            total += gt_pattern_count(mu);
            return;
        }
        for (long long v = lambda[i + 1]; v <= lambda[i]; ++v) {
            mu[i] = v;
            rec(i + 1);
        }
    };
    rec(0);
    return total;
}

} // namespace

TEST_CASE("single column dimensions match the pattern count") {
    for (int m : {1, 2, 3}) {
        for (long long spread : {1, 2, 3}) {
            std::vector<Entry> col;
            for (int i = 0; i < m; ++i) col.push_back(Rational((m - i) * spread));
            GTCharacter ch = single_column_character(col, m);
            std::vector<long long> lambda;
            Rational c = col[m - 1] + Rational(m - 1);
            for (int i = 0; i < m; ++i) lambda.push_back((col[i] + Rational(i) - c).to_ll());
            CHECK(ch.dimension() == gt_pattern_count(lambda));
        }
    }
}

TEST_CASE("standard characters multiply over columns and substitute centrally") {
    Pyramid p({2, 1}, 0, 2);
    Tableau a(p, {Rational(3), Rational(0), Rational(1)});
    GTCharacter ch = standard_character(a);
    CHECK(ch == single_column_character({Rational(3), Rational(0)}, 2) * single_column_character({Rational(1)}, 2));
    CHECK(central_substitute(ch, row_class(a)));
    CHECK(ch.dimension() == 3 * 1);
}

TEST_CASE("multiplying by the trivial character is the identity") {
    GTCharacter one(GTCharacter::depth_exact);
    one.add(GTMonomial{}, 1);
    GTCharacter ch = single_column_character({Rational(2), Rational(0)}, 2);
    CHECK(ch * one == ch);
}

TEST_CASE("mixed depth comparison is refused") {
    Pyramid p({1}, 0, 1);
    RowTabloid t(p, {ints({0})});
    GTCharacter a = verma_character(t, 2), b = verma_character(t, 3);
    CHECK_THROWS_AS((void)(a == b), Error);
}
