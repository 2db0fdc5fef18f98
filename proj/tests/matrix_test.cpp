#include "mutant/matrix.hpp"

#include <doctest.h>

#include <random>

using namespace mutant;

namespace {

ExchangeMatrix random_sss(std::mt19937& rng, int n) {
    std::uniform_int_distribution<int> mag(1, 3), coin(0, 1), edge(0, 2);
    ExchangeMatrix b(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            if (edge(rng) == 0) continue;
            int s = coin(rng) ? 1 : -1;
            b(i, j) = s * mag(rng);
            b(j, i) = -s * mag(rng);
        }
    return b;
}

ExchangeMatrix random_skewable(std::mt19937& rng, int n) {
    std::uniform_int_distribution<int> mag(1, 3), coin(0, 1), edge(0, 2);
    std::vector<long long> d(n);
    for (auto& x : d) x = mag(rng);
    ExchangeMatrix b(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            if (edge(rng) == 0) continue;
            long long m = mag(rng) * (coin(rng) ? 1 : -1);
            long long g = std::gcd(d[i], d[j]);
            b(i, j) = Int(m * d[j] / g);
            b(j, i) = Int(-m * d[i] / g);
        }
    return b;
}

} // namespace

TEST_CASE("matrix mutation follows the exchange rule") {
    // generic cyclic 3x3 instance, checked against the closed form of mu_2
    for (long long a1 : {1, 2})
        for (long long b1 : {1, 3})
            for (long long c2 : {1, 2}) {
                long long a2 = 2, b2 = 1, c1 = 3;
                auto b = ExchangeMatrix::from_rows(
                    {{0, a1, -c2}, {-a2, 0, b1}, {c1, -b2, 0}});
                auto expect = ExchangeMatrix::from_rows({{0, -a1, a1 * b1 - c2},
                                                         {a2, 0, -b1},
                                                         {c1 - a2 * b2, b2, 0}});
                CHECK(mutate(b, 1) == expect);
            }
    auto b = ExchangeMatrix::from_rows({{0, 1, -1}, {-1, 0, 1}, {1, -1, 0}});
    auto expect = ExchangeMatrix::from_rows({{0, -1, 0}, {1, 0, -1}, {0, 1, 0}});
    CHECK(mutate(b, 1) == expect);
}

TEST_CASE("mutation is an involution") {
    std::mt19937 rng(7);
    std::uniform_int_distribution<int> size(2, 6);
    for (int it = 0; it < 200; ++it) {
        ExchangeMatrix b = random_sss(rng, size(rng));
        for (int k = 0; k < b.size(); ++k) CHECK(mutate(mutate(b, k), k) == b);
    }
}

TEST_CASE("cartan counterpart") {
    auto a = cartan_counterpart(ExchangeMatrix::from_rows({{0, 1}, {-1, 0}}));
    CHECK(a(0, 0) == 2);
    CHECK(a(0, 1) == -1);
    CHECK(a(1, 0) == -1);
    auto single = cartan_counterpart(ExchangeMatrix::from_rows({{0}}));
    CHECK(single(0, 0) == 2);
    auto c2 = cartan_counterpart(ExchangeMatrix::from_rows({{0, 2}, {-1, 0}}));
    CHECK(c2(0, 1) == -2);
    CHECK(c2(1, 0) == -1);
}

TEST_CASE("sign-skew-symmetry") {
    CHECK(is_sign_skew_symmetric(ExchangeMatrix::from_rows({{0, 1}, {-1, 0}})));
    CHECK_FALSE(is_sign_skew_symmetric(ExchangeMatrix::from_rows({{0, 1}, {0, 0}})));
    CHECK(is_sign_skew_symmetric(
        ExchangeMatrix::from_rows({{0, 1, -1}, {-1, 0, 1}, {1, -1, 0}})));
}

TEST_CASE("skew symmetrizer") {
    auto d1 = skew_symmetrizer(ExchangeMatrix::from_rows({{0, 1}, {-1, 0}}));
    REQUIRE(d1.has_value());
    CHECK(*d1 == std::vector<Int>{1, 1});
    auto d2 = skew_symmetrizer(ExchangeMatrix::from_rows({{0, 2}, {-1, 0}}));
    REQUIRE(d2.has_value());
    CHECK(*d2 == std::vector<Int>{1, 2});
    CHECK_FALSE(skew_symmetrizer(ExchangeMatrix::from_rows({{0, 1}, {1, 0}})).has_value());
    // decomposable: gcd 1 per connected block
    auto d3 = skew_symmetrizer(
        ExchangeMatrix::from_rows({{0, 2, 0}, {-1, 0, 0}, {0, 0, 0}}));
    REQUIRE(d3.has_value());
    CHECK(*d3 == std::vector<Int>{1, 2, 1});
    // cycle condition: a non-skew-symmetrizable sign-skew-symmetric matrix
    auto bad = ExchangeMatrix::from_rows({{0, 1, -1}, {-1, 0, 1}, {2, -1, 0}});
    CHECK(is_sign_skew_symmetric(bad));
    CHECK_FALSE(skew_symmetrizer(bad).has_value());
}

TEST_CASE("mutation preserves the skew-symmetrizer") {
    std::mt19937 rng(11);
    std::uniform_int_distribution<int> size(2, 6);
    for (int it = 0; it < 100; ++it) {
        ExchangeMatrix b = random_skewable(rng, size(rng));
        auto d = skew_symmetrizer(b);
        REQUIRE(d.has_value());
        for (int k = 0; k < b.size(); ++k) {
            ExchangeMatrix m = mutate(b, k);
            for (int i = 0; i < b.size(); ++i)
                for (int j = 0; j < b.size(); ++j)
                    CHECK((*d)[i] * m(i, j) == -(*d)[j] * m(j, i));
        }
    }
}

TEST_CASE("symmetrized matrix") {
    auto s = symmetrized(ExchangeMatrix::from_rows({{0, 2}, {-1, 0}}));
    CHECK(s(0, 1) == Surd(1, 2));
    CHECK(s(1, 0) == Surd(-1, 2));
    // skew-symmetric input is its own symmetrization
    auto b = ExchangeMatrix::from_rows({{0, 1, -2}, {-1, 0, 1}, {2, -1, 0}});
    auto sb = symmetrized(b);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) CHECK(sb(i, j) == Surd::of_int(b(i, j)));
    CHECK_THROWS_AS(symmetrized(ExchangeMatrix::from_rows({{0, 1}, {1, 0}})), DomainError);
}

TEST_CASE("symmetrization commutes with mutation") {
    std::mt19937 rng(13);
    std::uniform_int_distribution<int> size(2, 6);
    for (int it = 0; it < 1000; ++it) {
        ExchangeMatrix b = random_skewable(rng, size(rng));
        for (int k = 0; k < b.size(); ++k)
            CHECK(symmetrized(mutate(b, k)) == mutate(symmetrized(b), k));
    }
}

TEST_CASE("the symmetrizer of B symmetrizes its Cartan counterpart") {
    std::mt19937 rng(17);
    std::uniform_int_distribution<int> size(2, 6);
    for (int it = 0; it < 100; ++it) {
        ExchangeMatrix b = random_skewable(rng, size(rng));
        auto d = skew_symmetrizer(b);
        REQUIRE(d.has_value());
        CartanMatrix a = cartan_counterpart(b);
        for (int i = 0; i < b.size(); ++i)
            for (int j = 0; j < b.size(); ++j)
                CHECK((*d)[i] * a(i, j) == (*d)[j] * a(j, i));
    }
}

TEST_CASE("equality up to relabeling") {
    auto b1 = ExchangeMatrix::from_rows({{0, 1, 0}, {-1, 0, 1}, {0, -1, 0}});
    auto b2 = ExchangeMatrix::from_rows({{0, -1, 0}, {1, 0, -1}, {0, 1, 0}});
    // reversing the path is the permutation (1 3)
    CHECK(equal_up_to_relabeling(b1, b2));
    auto b3 = ExchangeMatrix::from_rows({{0, 2}, {-1, 0}});
    auto b4 = ExchangeMatrix::from_rows({{0, -1}, {2, 0}});
    CHECK(equal_up_to_relabeling(b3, b4));
    CHECK_FALSE(equal_up_to_relabeling(b3, ExchangeMatrix::from_rows({{0, 1}, {-1, 0}})));
}
