#include <catch2/catch_amalgamated.hpp>

#include <map>

#include "grassbwb/bwb.hpp"
#include "grassbwb/expr.hpp"

using namespace grassbwb;

namespace {

CharElement irr2(const Weight& w) { return CharElement::irreducible(2, w); }
CharElement irr4(const Weight& w) { return CharElement::irreducible(4, w); }

}  // namespace

TEST_CASE("bundle atoms") {
    const auto u = parse_bundle("U", 2, 6);
    CHECK(u.sub_part == irr2({0, -1}));
    CHECK(u.quot_part == CharElement::trivial(4));

    const auto q = parse_bundle("Q", 2, 6);
    CHECK(q.sub_part == CharElement::trivial(2));
    CHECK(q.quot_part == irr4({0, 0, 0, -1}));

    const auto o = parse_bundle("O", 2, 6);
    CHECK(o.sub_part == CharElement::trivial(2));
    CHECK(o.quot_part == CharElement::trivial(4));

    // A bare twist folds into the sub block: O(1) = det U*.
    CHECK(parse_bundle("H(1)", 2, 6).sub_part == irr2({1, 1}));
    CHECK(parse_bundle("H(-2)", 2, 6).sub_part == irr2({-2, -2}));
    CHECK(parse_bundle(" H( 3 ) ", 2, 6).sub_part == irr2({3, 3}));
}

TEST_CASE("dual sym wedge and twist folding") {
    CHECK(parse_bundle("dual(U)", 2, 6).sub_part == irr2({1, 0}));
    CHECK(parse_bundle("dual(dual(U))", 2, 6).sub_part == irr2({0, -1}));
    CHECK(parse_bundle("sym(3,U)", 2, 6).sub_part == irr2({0, -3}));
    CHECK(parse_bundle("sym(2,U)", 2, 6).sub_part == irr2({0, -2}));

    CharElement wedge2 = irr2({-1, -5});
    wedge2 += irr2({-3, -3});
    CHECK(parse_bundle("wedge(2,sym(3,U))", 2, 6).sub_part == wedge2);
    CHECK(parse_bundle("wedge(3,sym(3,U))", 2, 6).sub_part == irr2({-3, -6}));
    CHECK(parse_bundle("wedge(4,sym(3,U))", 2, 6).sub_part == irr2({-6, -6}));

    // When the quotient block is nontrivial the twist folds there instead.
    const auto qsh = parse_bundle("dual(Q) * H(1)", 2, 6);
    CHECK(qsh.sub_part == CharElement::trivial(2));
    CHECK(qsh.quot_part == irr4({0, -1, -1, -1}));
    CHECK(parse_bundle("dual(Q) * H(-2)", 2, 6).quot_part == irr4({3, 2, 2, 2}));

    // sym/wedge of a twisted line bundle multiplies the twist.
    CHECK(parse_bundle("sym(2,H(1))", 2, 6).sub_part == irr2({2, 2}));
    CHECK(parse_bundle("wedge(1,H(2))", 2, 6).sub_part == irr2({2, 2}));
    CHECK(parse_bundle("sym(3,dual(U) * H(1))", 2, 6).sub_part == irr2({6, 3}));

    // wedge of a line bundle beyond degree one is the zero bundle.
    const auto z = parse_bundle("wedge(2,O)", 2, 6);
    CHECK(z.sub_part.is_zero());
    CHECK(bwb_bundle(z).aggregated.empty());

    // Degree zero and one are identity-like.
    CHECK(parse_bundle("wedge(0,U)", 2, 6).sub_part == CharElement::trivial(2));
    CHECK(parse_bundle("sym(0,Q)", 2, 6).quot_part == CharElement::trivial(4));
    CHECK(parse_bundle("wedge(1,U)", 2, 6).sub_part == irr2({0, -1}));
}

TEST_CASE("products parentheses and whitespace") {
    const auto a = parse_bundle("sym(2,U) * dual(Q)", 2, 6);
    CHECK(a.sub_part == irr2({0, -2}));
    CHECK(a.quot_part == irr4({1, 0, 0, 0}));

    const auto b = parse_bundle("( sym(2,U) ) * ( H(1) * O )", 2, 6);
    CHECK(b.sub_part == irr2({1, -1}));

    // The contract example: single nonzero group, degree 4, dimension 36.
    const auto e = parse_bundle("wedge(2,sym(3,U)) * sym(2,U) * H(1)", 2, 6);
    const auto r = bwb_bundle(e);
    CHECK(r.aggregated == std::map<int, i64>{{4, 36}});
}

TEST_CASE("bundle grammar on other grassmannians") {
    const auto u = parse_bundle("dual(U)", 1, 4);
    CHECK(u.sub_part == CharElement::irreducible(1, {1}));
    CHECK(u.quot_part == CharElement::trivial(3));
    // O(1) on P^3 has 4 sections.
    CHECK(bwb_bundle(parse_bundle("H(1)", 1, 4)).aggregated ==
          std::map<int, i64>{{0, 4}});
}

TEST_CASE("bundle parse errors") {
    CHECK_THROWS_AS(parse_bundle("sym(2,X)", 2, 6), std::invalid_argument);
    CHECK_THROWS_AS(parse_bundle("U *", 2, 6), std::invalid_argument);
    CHECK_THROWS_AS(parse_bundle("U Q", 2, 6), std::invalid_argument);
    CHECK_THROWS_AS(parse_bundle("sym(2 U)", 2, 6), std::invalid_argument);
    CHECK_THROWS_AS(parse_bundle("H()", 2, 6), std::invalid_argument);
    CHECK_THROWS_AS(parse_bundle("wedge(-1,U)", 2, 6), std::invalid_argument);
    CHECK_THROWS_AS(parse_bundle("", 2, 6), std::invalid_argument);
    CHECK_THROWS_AS(parse_bundle("(U", 2, 6), std::invalid_argument);
    CHECK_THROWS_AS(parse_bundle("U", 0, 6), std::invalid_argument);
    CHECK_THROWS_AS(parse_bundle("U", 6, 6), std::invalid_argument);
    // sym/wedge of a genuinely mixed bundle is not a single Schur functor.
    CHECK_THROWS_AS(parse_bundle("sym(2,U * Q)", 2, 6), std::invalid_argument);
}

TEST_CASE("class atoms and arithmetic") {
    CHECK(parse_class("s1") == sigma(2, 6, {1}));
    CHECK(parse_class("s[3,1]") == sigma(2, 6, {3, 1}));
    CHECK(parse_class("s[2]") == sigma(2, 6, {2}));
    CHECK(parse_class("s[1,0]") == sigma(2, 6, {1}));
    CHECK(parse_class("s0") == sigma(2, 6, {}));
    CHECK(parse_class("7") == sigma(2, 6, {}, i64(7)));
    CHECK(parse_class("classS") == class_of_S());
    CHECK(parse_class("classF") == class_of_F());

    CHECK(parse_class("s1 + s2") == sigma(2, 6, {1}) + sigma(2, 6, {2}));
    CHECK(parse_class("s1 - s1").is_zero());
    CHECK(parse_class("-s1") == sigma(2, 6, {1}, i64(-1)));
    CHECK(parse_class("3*s2") == sigma(2, 6, {2}, i64(3)));
    CHECK(parse_class("s1*s1") == parse_class("s1^2"));
    CHECK(parse_class("s1^2") == sigma(2, 6, {2}) + sigma(2, 6, {1, 1}));
    CHECK(parse_class("s1^0") == sigma(2, 6, {}));

    // Precedence: ^ binds before *, * before +/-.
    CHECK(parse_class("2*s1^2 - s2") ==
          sigma(2, 6, {2}) + sigma(2, 6, {1, 1}, i64(2)));
    CHECK(parse_class("(s1 + s2) * s1") ==
          product(sigma(2, 6, {1}) + sigma(2, 6, {2}), sigma(2, 6, {1})));
}

TEST_CASE("class fixtures") {
    CHECK(integrate(parse_class("s1^4 * classF")) == 108);
    CHECK(integrate(parse_class("s2^2 * classF")) == 45);
    CHECK(integrate(parse_class("s1^8")) == 14);
    CHECK(parse_class("27*s2^2 - 9*s1*s3 - 18*s4") == class_of_F());
    CHECK(parse_class("18*s[3,1] + 27*s[2,2]") == class_of_F());
    // Classes above the box truncate to zero.
    CHECK(parse_class("s4 * s4 * s1").is_zero());
}

TEST_CASE("class parse errors") {
    CHECK_THROWS_AS(parse_class("s5"), std::invalid_argument);   // row beyond the box
    CHECK_THROWS_AS(parse_class("s[5]"), std::invalid_argument);
    CHECK_THROWS_AS(parse_class("s[1,2]"), std::invalid_argument);
    CHECK_THROWS_AS(parse_class("sigma"), std::invalid_argument);
    CHECK_THROWS_AS(parse_class("s1 +"), std::invalid_argument);
    CHECK_THROWS_AS(parse_class("s1^-1"), std::invalid_argument);
    CHECK_THROWS_AS(parse_class("(s1"), std::invalid_argument);
    CHECK_THROWS_AS(parse_class(""), std::invalid_argument);
    CHECK_THROWS_AS(parse_class("s1 s2"), std::invalid_argument);
}
