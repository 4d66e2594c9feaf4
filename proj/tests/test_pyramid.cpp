#include <doctest.h>

#include "wrep/pyramid.hpp"

using namespace wrep;

TEST_CASE("worked example pyramid (1,2,4,3,1)") {
    Pyramid p({1, 2, 4, 3, 1}, 2, 4);
    CHECK(p.boxes() == 11);
    CHECK(p.row_lengths() == std::vector<int>{1, 2, 3, 5});
    // box 7 is the bottom of column 3
    CHECK(p.box_row(7) == 4);
    CHECK(p.box_col(7) == 3);
    // numbering goes down columns, left to right
    CHECK(p.box_row(1) == 4);
    CHECK(p.box_col(1) == 1);
    CHECK(p.box_row(4) == 1);
    CHECK(p.box_col(4) == 3);
    CHECK(p.box_at(4, 3) == 7);
}

TEST_CASE("left-justified shift matrix is p_j - p_i above the diagonal") {
    Pyramid p({3, 3, 2, 1}, 0, 3);
    CHECK(p.row_lengths() == std::vector<int>{2, 3, 4});
    for (int i = 1; i <= 3; ++i)
        for (int j = 1; j <= 3; ++j) {
            if (i <= j) CHECK(p.shift(i, j) == p.row_length(j) - p.row_length(i));
            else CHECK(p.shift(i, j) == 0);
        }
}

TEST_CASE("rectangle has zero shift") {
    Pyramid p({2, 2}, 0, 2);
    CHECK(p.row_lengths() == std::vector<int>{2, 2});
    for (int i = 1; i <= 2; ++i)
        for (int j = 1; j <= 2; ++j) {
            CHECK(p.shift(i, j) == 0);
            CHECK(p.big_shift(i, j) == 2);
        }
}

TEST_CASE("shift matrix satisfies the additivity constraint") {
    Pyramid p({1, 2, 4, 3, 1}, 2, 4);
    int n = p.rows();
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j)
            for (int k = 1; k <= n; ++k)
                if (std::abs(i - j) + std::abs(j - k) == std::abs(i - k))
                    CHECK(p.shift(i, j) + p.shift(j, k) == p.shift(i, k));
}

TEST_CASE("shape validation") {
    CHECK_THROWS_AS(Pyramid({2, 1, 2}, 1, 2), Error);   // not unimodal
    CHECK_THROWS_AS(Pyramid({1, 2}, 2, 1), Error);      // n below the height
    CHECK_THROWS_AS(Pyramid({}, 0, 1), Error);
    CHECK_THROWS_AS(Pyramid({1, 2, 1}, 5, 2), Error);   // k out of range
    CHECK_NOTHROW(Pyramid({1, 2, 1}, 1, 2));
    CHECK_NOTHROW(Pyramid({1, 2, 1}, 2, 3));
}

TEST_CASE("default split picks the increasing prefix") {
    CHECK(default_split({1, 2, 4, 3, 1}) == 3);
    CHECK(default_split({3, 2, 1}) == 1);
    CHECK(default_split({1, 1, 2}) == 3);
}
