#include <catch2/catch_amalgamated.hpp>

#include "grassbwb/weights.hpp"

using namespace grassbwb;

TEST_CASE("rho is the staircase") {
    CHECK(rho(6) == Weight{6, 5, 4, 3, 2, 1});
    CHECK(rho(1) == Weight{1});
    CHECK(rho(4) == Weight{4, 3, 2, 1});
}

TEST_CASE("dominance predicate") {
    CHECK(is_dominant(Weight{3, 3, 0, -1}));
    CHECK(is_dominant(Weight{}));
    CHECK_FALSE(is_dominant(Weight{0, 1}));
    CHECK_FALSE(is_dominant(Weight{2, 3, 1}));
}

TEST_CASE("weight arithmetic") {
    CHECK(Weight{1, 2} + Weight{3, -1} == Weight{4, 1});
    CHECK(Weight{1, 2} - Weight{3, -1} == Weight{-2, 3});
    CHECK(shifted(Weight{4, 0, -2}, 2) == Weight{6, 2, 0});
    CHECK(dual_weight(Weight{3, 1, 0}) == Weight{0, -1, -3});
    CHECK_THROWS_AS((Weight{1} + Weight{1, 2}), std::invalid_argument);
}

TEST_CASE("sort_regular on regular vectors") {
    auto r = sort_regular(Weight{3, -1, 4, 2, 1, 0});
    REQUIRE(r.regular);
    CHECK(r.sorted == Weight{4, 3, 2, 1, 0, -1});
    CHECK(r.length == 5);

    auto r2 = sort_regular(Weight{6, -1, 4, 3, 2, 1});
    REQUIRE(r2.regular);
    CHECK(r2.sorted == Weight{6, 4, 3, 2, 1, -1});
    CHECK(r2.length == 4);

    auto r3 = sort_regular(Weight{0, -1, 7, 5, 4, 3});
    REQUIRE(r3.regular);
    CHECK(r3.sorted == Weight{7, 5, 4, 3, 0, -1});
    CHECK(r3.length == 8);

    auto sorted_already = sort_regular(Weight{6, 5, 4, 2, 1, 0});
    REQUIRE(sorted_already.regular);
    CHECK(sorted_already.length == 0);
}

TEST_CASE("sort_regular flags repeated entries") {
    CHECK_FALSE(sort_regular(Weight{7, 4, 4, 3, 2, 1}).regular);
    CHECK_FALSE(sort_regular(Weight{3, -1, 7, 5, 4, 3}).regular);
    CHECK_FALSE(sort_regular(Weight{0, 0}).regular);
}

TEST_CASE("length counts inversions") {
    // One inversion per out-of-order pair.
    CHECK(sort_regular(Weight{1, 2}).length == 1);
    CHECK(sort_regular(Weight{1, 2, 3}).length == 3);
    CHECK(sort_regular(Weight{5, 0, 4, 2, 1, -1}).length == 3);
}

TEST_CASE("weyl_dimension on frozen examples") {
    CHECK(weyl_dimension(Weight{0, 0, 0, -1, -1, -1}) == 20);
    CHECK(weyl_dimension(Weight{1, 0, 0, 0, -2, -2}) == 560);
    CHECK(weyl_dimension(Weight{0, -1, -1, -1, -1, -2}) == 35);
    CHECK(weyl_dimension(Weight{1, 1, 1, 1, 1, 1}) == 1);
    CHECK(weyl_dimension(Weight{-1, -1, -1, -1, -1, -1}) == 1);
    CHECK(weyl_dimension(Weight{-2, -2, -2, -2, -2, -5}) == 56);
    CHECK(weyl_dimension(Weight{-2, -2, -2, -2, -3, -4}) == 70);
    CHECK(weyl_dimension(Weight{-2, -2, -2, -2, -4, -6}) == 1134);
}

TEST_CASE("weyl_dimension small ranks") {
    CHECK(weyl_dimension(Weight{0}) == 1);
    CHECK(weyl_dimension(Weight{7}) == 1);
    CHECK(weyl_dimension(Weight{1, 0}) == 2);
    CHECK(weyl_dimension(Weight{3, 0}) == 4);     // Sym^3 of the standard rep
    CHECK(weyl_dimension(Weight{1, 1, 0, 0}) == 6);  // wedge^2 C^4
    // Runs of equal entries force intermediate fractions; the full-product
    // evaluation must still land on the exact integer.
    CHECK(weyl_dimension(Weight{3, 2, 0}) == 15);
}

TEST_CASE("weyl_dimension is twist- and dual-invariant") {
    const Weight lam{4, 1, 0, -2};
    const i64 d = weyl_dimension(lam);
    CHECK(weyl_dimension(shifted(lam, 3)) == d);
    CHECK(weyl_dimension(shifted(lam, -5)) == d);
    CHECK(weyl_dimension(dual_weight(lam)) == d);
}

TEST_CASE("weyl_dimension rejects bad input") {
    CHECK_THROWS_AS(weyl_dimension(Weight{0, 1}), std::invalid_argument);
    CHECK_THROWS_AS(weyl_dimension(Weight{}), std::invalid_argument);
    // Exceeds the signed-64-bit range: refused rather than wrapped.
    CHECK_THROWS_AS(weyl_dimension(Weight{100000, 0, 0, 0, 0, 0, 0, 0, 0, 0}),
                    hard_error);
}
