#include "mutant/surd.hpp"

#include <doctest.h>

using namespace mutant;

TEST_CASE("surd arithmetic") {
    Surd two = Surd::of_int(2);
    CHECK(two == Surd(1, 4));
    CHECK((Surd(1, 2) * Surd(1, 2)) == Surd(1, 4));
    CHECK((Surd(1, 2) * Surd(-1, 8)) == Surd(-1, 16));
    CHECK((Surd(1, 2) + Surd(1, 8)) == Surd(1, 18));   // sqrt2 + 2 sqrt2 = 3 sqrt2
    CHECK((Surd(1, 8) + Surd(-1, 2)) == Surd(1, 2));   // 2 sqrt2 - sqrt2
    CHECK((Surd(1, 3) + Surd(-1, 3)).is_zero());
    CHECK((Surd() + Surd(1, 5)) == Surd(1, 5));
    CHECK_THROWS_AS(Surd(1, 2) + Surd(1, 3), DomainError);
    CHECK(to_string(Surd(-1, 4)) == "-2");
    CHECK(to_string(Surd(1, 2)) == "sqrt(2)");
}
