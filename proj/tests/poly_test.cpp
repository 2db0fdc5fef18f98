#include "mutant/laurent.hpp"

#include <doctest.h>

using namespace mutant;

TEST_CASE("polynomial arithmetic and exact division") {
    Poly x = Poly::variable(2, 0), y = Poly::variable(2, 1);
    Poly one = Poly::constant(2, 1);
    Poly p = (x + y) * (x - y);
    CHECK(p == x * x - y * y);
    CHECK(p.pow(0) == one);
    CHECK(p.pow(2) == p * p);
    auto q = (x * x - y * y).divided_by(x + y);
    REQUIRE(q.has_value());
    CHECK(*q == x - y);
    CHECK_FALSE((x * x + y).divided_by(x + y).has_value());
    // Laurent division: x / x^{-1} = x^2
    Poly xinv = Poly::monomial({-1, 0}, 1);
    auto r = x.divided_by(xinv);
    REQUIRE(r.has_value());
    CHECK(*r == Poly::monomial({2, 0}, 1));
    // coefficients must divide
    CHECK_FALSE(x.divided_by(x + x).has_value());
    CHECK((x + x).divided_by(x).value() == Poly::constant(2, 2));
}

TEST_CASE("exact rank") {
    CHECK(exact_rank({{Int(1), Int(2)}, {Int(2), Int(4)}}) == 1);
    CHECK(exact_rank({{Int(1), Int(0)}, {Int(0), Int(1)}, {Int(1), Int(1)}}) == 2);
    CHECK(exact_rank({{Int(0), Int(0)}}) == 0);
}

TEST_CASE("tropical semifield") {
    TropSemifield p{{"p"}};
    CHECK(trop_add({2}, {5}) == TropElem{2});  // p^2 (+) p^5 = p^2
    CHECK(trop_add({0}, {0}) == TropElem{0});
    TropSemifield p2{{"p1", "p2"}};
    CHECK(trop_add({1, -1}, {0, 1}) == TropElem{0, -1});
    CHECK(trop_mul({1, 2}, {3, -1}) == TropElem{4, 1});
    CHECK(trop_str(p2, {1, -2}) == "p1p2^-2");
    CHECK(trop_str(p2, {0, 0}) == "1");
}

TEST_CASE("coefficient pair normalization") {
    auto c1 = normalize_ratio({1});  // u = p: (p, 1)
    CHECK(c1.plus == TropElem{1});
    CHECK(c1.minus == TropElem{0});
    auto c2 = normalize_ratio({-1});  // u = 1/p: (1, p)
    CHECK(c2.plus == TropElem{0});
    CHECK(c2.minus == TropElem{1});
    auto c3 = normalize_ratio({0});
    CHECK(c3.plus == TropElem{0});
    CHECK(c3.minus == TropElem{0});
    CHECK(c1.is_normalized());
    CHECK_FALSE(CoefficientPair{{1}, {1}}.is_normalized());
}

TEST_CASE("laurent strings") {
    // (1+x2)/x1
    Laurent x1 = Laurent::variable(2, 0, 0), x2 = Laurent::variable(2, 0, 1);
    Laurent one = Laurent::one(2, 0);
    Laurent v = (one + x2).divided_by(x1);
    CHECK(v.str() == "(1+x2)/x1");
    Laurent w = (one + x1 + x2).divided_by(x1 * x2);
    CHECK(w.str() == "(1+x1+x2)/(x1x2)");
    CHECK((x1 * x1).str() == "x1^2");
    CHECK(Laurent::zero(2, 0).str() == "0");
    CHECK((one - x1).str() == "1-x1");
    Laurent c = Laurent::coefficient(1, TropElem{2}, 3);
    CHECK(c.str() == "3p1^2");
}

TEST_CASE("denominator vectors") {
    Laurent x1 = Laurent::variable(2, 0, 0), x2 = Laurent::variable(2, 0, 1);
    Laurent one = Laurent::one(2, 0);
    CHECK(x1.denominator_vector() == std::vector<long long>{-1, 0});
    CHECK((one + x2).divided_by(x1).denominator_vector() == std::vector<long long>{1, 0});
    CHECK((one + x1 + x2).divided_by(x1 * x2).denominator_vector() ==
          std::vector<long long>{1, 1});
    // no normal form: x1/x2 + x2/x1 has no constant corner
    Laurent bad = x1.divided_by(x2) + x2.divided_by(x1);
    CHECK_THROWS_AS(bad.denominator_vector(), DomainError);
}

TEST_CASE("positivity check") {
    Laurent x1 = Laurent::variable(1, 1, 0);
    Laurent p = Laurent::coefficient(1, TropElem{1});
    CHECK((x1 + p).is_positive());
    CHECK_FALSE((x1 - p).is_positive());
    CHECK_FALSE(Laurent::coefficient(1, TropElem{-1}).is_positive());
}
