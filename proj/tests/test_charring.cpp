#include <catch2/catch_amalgamated.hpp>

#include "grassbwb/charring.hpp"

using namespace grassbwb;

namespace {

CharElement irr2(const Weight& w, i64 m = 1) { return CharElement::irreducible(2, w, m); }

}  // namespace

TEST_CASE("CharElement validation") {
    CHECK_THROWS_AS(CharElement::irreducible(2, Weight{0, 1}), std::invalid_argument);
    CHECK_THROWS_AS(CharElement::irreducible(2, Weight{1, 0, 0}), std::invalid_argument);
    CharElement a = irr2({1, 0});
    CharElement b(3);
    CHECK_THROWS_AS(a += b, std::invalid_argument);

    CharElement c = irr2({2, 0});
    c.add({2, 0}, -1);
    CHECK(c.is_zero());

    CharElement d = irr2({2, 0}, -1);
    CHECK_FALSE(d.is_genuine());
    CHECK(irr2({2, 0}, 3).is_genuine());
}

TEST_CASE("char_dimension") {
    CHECK(char_dimension(CharElement::trivial(2)) == 1);
    CHECK(char_dimension(irr2({3, 0})) == 4);
    CHECK(char_dimension(irr2({0, -3})) == 4);
    CharElement x = irr2({3, 0});
    x.add({1, 1}, 2);
    CHECK(char_dimension(x) == 6);
}

TEST_CASE("determinant twist and dual") {
    CHECK(twist_by_determinant(irr2({3, 0}), -3) == irr2({0, -3}));
    CHECK(dual(irr2({3, 0})) == irr2({0, -3}));
    CHECK(dual(irr2({2, -1})) == irr2({1, -2}));
    CharElement x(3);
    x.add({2, 1, 0}, 1);
    x.add({1, 1, 1}, 4);
    CHECK(dual(dual(x)) == x);
    CHECK(twist_by_determinant(twist_by_determinant(x, 5), -5) == x);
}

TEST_CASE("schur_to_monomials on frozen shapes") {
    // Sym^3 of the rank-2 standard representation: four weight-monomials.
    auto m = schur_to_monomials(irr2({3, 0}));
    REQUIRE(m.coeffs.size() == 4);
    CHECK(m.coeffs.at(Exponents{3, 0}) == 1);
    CHECK(m.coeffs.at(Exponents{2, 1}) == 1);
    CHECK(m.coeffs.at(Exponents{1, 2}) == 1);
    CHECK(m.coeffs.at(Exponents{0, 3}) == 1);

    // Negative weights go through a determinant shift.
    auto mn = schur_to_monomials(irr2({0, -3}));
    REQUIRE(mn.coeffs.size() == 4);
    CHECK(mn.coeffs.at(Exponents{0, -3}) == 1);
    CHECK(mn.coeffs.at(Exponents{-2, -1}) == 1);

    // Kostka number K_{(2,1,0),(1,1,1)} = 2.
    auto m3 = schur_to_monomials(CharElement::irreducible(3, {2, 1, 0}));
    CHECK(m3.coeffs.at(Exponents{1, 1, 1}) == 2);
    i64 total = 0;
    for (const auto& [e, c] : m3.coeffs) total += c;
    CHECK(total == 8);
}

TEST_CASE("monomials_to_schur recovers the Schur basis") {
    // x1^2 + 2 x1 x2 + x2^2 = Sigma_(2,0) + Sigma_(1,1).
    MonomialCharacter sq;
    sq.rank = 2;
    sq.coeffs = {{{2, 0}, 1}, {{1, 1}, 2}, {{0, 2}, 1}};
    CharElement expect = irr2({2, 0});
    expect.add({1, 1}, 1);
    CHECK(monomials_to_schur(sq) == expect);
}

TEST_CASE("monomial round-trip is the identity") {
    std::vector<CharElement> samples;
    samples.push_back(irr2({3, 0}));
    samples.push_back(irr2({0, -3}));
    samples.push_back(irr2({5, -2}, 3));
    CharElement mixed(3);
    mixed.add({4, 2, -1}, 2);
    mixed.add({1, 1, 1}, 1);
    mixed.add({3, 0, -3}, 5);
    samples.push_back(mixed);
    for (const auto& x : samples)
        CHECK(monomials_to_schur(schur_to_monomials(x)) == x);
}

TEST_CASE("monomials_to_schur rejects asymmetric input") {
    MonomialCharacter bad;
    bad.rank = 2;
    bad.coeffs = {{{2, 0}, 1}};
    CHECK_THROWS_AS(monomials_to_schur(bad), std::invalid_argument);
}

TEST_CASE("lr_expand base cases") {
    auto p = lr_expand({2, 1}, {}, 4);
    REQUIRE(p.size() == 1);
    CHECK(p.at(Weight{2, 1}) == 1);

    auto q = lr_expand({}, {3}, 4);
    REQUIRE(q.size() == 1);
    CHECK(q.at(Weight{3}) == 1);

    auto e = lr_expand({}, {}, 4);
    REQUIRE(e.size() == 1);
    CHECK(e.at(Weight{}) == 1);

    CHECK_THROWS_AS(lr_expand({1, 2}, {}, 4), std::invalid_argument);
    CHECK_THROWS_AS(lr_expand({2, -1}, {}, 4), std::invalid_argument);
}

TEST_CASE("lr_expand classical products") {
    // Pieri: (2,1) * (1) = (3,1) + (2,2) + (2,1,1).
    auto p = lr_expand({2, 1}, {1}, 4);
    REQUIRE(p.size() == 3);
    CHECK(p.at(Weight{3, 1}) == 1);
    CHECK(p.at(Weight{2, 2}) == 1);
    CHECK(p.at(Weight{2, 1, 1}) == 1);

    // (2,1)^2 with no row bound: the classical eight-term expansion.
    auto sq = lr_expand({2, 1}, {2, 1}, 6);
    CHECK(sq.at(Weight{4, 2}) == 1);
    CHECK(sq.at(Weight{4, 1, 1}) == 1);
    CHECK(sq.at(Weight{3, 3}) == 1);
    CHECK(sq.at(Weight{3, 2, 1}) == 2);
    CHECK(sq.at(Weight{3, 1, 1, 1}) == 1);
    CHECK(sq.at(Weight{2, 2, 2}) == 1);
    CHECK(sq.at(Weight{2, 2, 1, 1}) == 1);
    i64 total = 0;
    for (const auto& [nu, c] : sq) total += c;
    CHECK(total == 8);

    // Row bound 2 keeps only the two-row shapes.
    auto sq2 = lr_expand({2, 1}, {2, 1}, 2);
    REQUIRE(sq2.size() == 2);
    CHECK(sq2.at(Weight{4, 2}) == 1);
    CHECK(sq2.at(Weight{3, 3}) == 1);

    // The lattice condition prunes: (2) * (1,1) = (3,1) + (2,1,1) only.
    auto mix = lr_expand({2}, {1, 1}, 4);
    REQUIRE(mix.size() == 2);
    CHECK(mix.at(Weight{3, 1}) == 1);
    CHECK(mix.at(Weight{2, 1, 1}) == 1);
}

TEST_CASE("multiply matches hand values") {
    auto std_sq = multiply(irr2({1, 0}), irr2({1, 0}));
    CharElement expect = irr2({2, 0});
    expect.add({1, 1}, 1);
    CHECK(std_sq == expect);

    // Negative weights: Sigma_(0,-1)^2 = Sigma_(0,-2) + Sigma_(-1,-1).
    auto neg_sq = multiply(irr2({0, -1}), irr2({0, -1}));
    CharElement expect_neg = irr2({0, -2});
    expect_neg.add({-1, -1}, 1);
    CHECK(neg_sq == expect_neg);

    // Rank 3: (2,1,0) x (1,0,0) = (3,1,0) + (2,2,0) + (2,1,1).
    auto r3 = multiply(CharElement::irreducible(3, {2, 1, 0}),
                       CharElement::irreducible(3, {1, 0, 0}));
    CharElement expect3(3);
    expect3.add({3, 1, 0}, 1);
    expect3.add({2, 2, 0}, 1);
    expect3.add({2, 1, 1}, 1);
    CHECK(r3 == expect3);
}

TEST_CASE("multiply agrees with the monomial oracle over a weight box") {
    // All pairs of rank-2 dominant weights with entries in [-2, 2].
    std::vector<Weight> ws;
    for (int a = -2; a <= 2; ++a)
        for (int b = -2; b <= a; ++b) ws.push_back({a, b});
    for (const auto& u : ws)
        for (const auto& v : ws) {
            auto lr = multiply(irr2(u), irr2(v));
            auto oracle = multiply_via_monomials(irr2(u), irr2(v));
            INFO("u=(" << u[0] << "," << u[1] << ") v=(" << v[0] << "," << v[1] << ")");
            CHECK(lr == oracle);
        }
}

TEST_CASE("multiply agrees with the monomial oracle at rank 3") {
    std::vector<Weight> ws = {{2, 1, 0}, {1, 1, 0}, {2, 0, -1}, {3, 1, 1}, {0, -1, -2}};
    for (const auto& u : ws)
        for (const auto& v : ws) {
            auto x = CharElement::irreducible(3, u);
            auto y = CharElement::irreducible(3, v);
            CHECK(multiply(x, y) == multiply_via_monomials(x, y));
        }
}

TEST_CASE("multiply is commutative and dimension-multiplicative") {
    CharElement x = irr2({3, -1});
    x.add({1, 1}, 2);
    CharElement y = irr2({2, 0});
    y.add({0, -2}, 1);
    CHECK(multiply(x, y) == multiply(y, x));
    CHECK(char_dimension(multiply(x, y)) == char_dimension(x) * char_dimension(y));

    // Associativity on a sample.
    CharElement z = irr2({1, -1});
    CHECK(multiply(multiply(x, y), z) == multiply(x, multiply(y, z)));
}

TEST_CASE("exterior powers of Sym^3 of the rank-2 standard rep") {
    // Highest weight (3,0), dimension 4.
    const CharElement s3 = irr2({3, 0});
    CHECK(exterior_power(0, s3) == CharElement::trivial(2));
    CHECK(exterior_power(1, s3) == s3);

    CharElement w2 = irr2({5, 1});
    w2.add({3, 3}, 1);
    CHECK(exterior_power(2, s3) == w2);

    CHECK(exterior_power(3, s3) == irr2({6, 3}));
    CHECK(exterior_power(4, s3) == irr2({6, 6}));
    CHECK(exterior_power(5, s3).is_zero());
}

TEST_CASE("exterior powers of Sym^3 of the dual tautological weight") {
    // Same bundle twisted: highest weight (0,-3).
    const CharElement s3 = irr2({0, -3});
    CharElement w2 = irr2({-1, -5});
    w2.add({-3, -3}, 1);
    CHECK(exterior_power(2, s3) == w2);
    CHECK(exterior_power(3, s3) == irr2({-3, -6}));
    CHECK(exterior_power(4, s3) == irr2({-6, -6}));
}

TEST_CASE("exterior power dimensions are binomial") {
    CharElement x = CharElement::irreducible(3, {2, 1, 0});  // dim 8
    for (int p = 0; p <= 9; ++p) {
        i64 expect = 1;
        // C(8,p)
        for (int i = 0; i < p; ++i) expect = expect * (8 - i) / (i + 1);
        if (p > 8) expect = 0;
        CHECK(char_dimension(exterior_power(p, x)) == expect);
    }
}

TEST_CASE("symmetric powers") {
    const CharElement std2 = irr2({1, 0});
    CHECK(symmetric_power(0, std2) == CharElement::trivial(2));
    CHECK(symmetric_power(3, std2) == irr2({3, 0}));
    CHECK(symmetric_power(2, irr2({0, -1})) == irr2({0, -2}));
    CHECK(symmetric_power(3, irr2({0, -1})) == irr2({0, -3}));

    // Sym^2 Sym^3 C^2 = Sigma_(6,0) + Sigma_(4,2)  (dimensions 7 + 3 = 10).
    CharElement expect = irr2({6, 0});
    expect.add({4, 2}, 1);
    CHECK(symmetric_power(2, irr2({3, 0})) == expect);
    CHECK(char_dimension(symmetric_power(2, irr2({3, 0}))) == 10);
}

TEST_CASE("plethysm rejects virtual characters") {
    CHECK_THROWS_AS(exterior_power(2, irr2({2, 0}, -1)), std::invalid_argument);
    CHECK_THROWS_AS(symmetric_power(2, irr2({2, 0}, -1)), std::invalid_argument);
}

TEST_CASE("twist commutes with plethysm") {
    // wedge^p (x (x) det^t) = (wedge^p x) (x) det^{pt}
    const CharElement s3 = irr2({3, 0});
    for (int p = 1; p <= 4; ++p)
        CHECK(exterior_power(p, twist_by_determinant(s3, -3)) ==
              twist_by_determinant(exterior_power(p, s3), -3 * p));
}
