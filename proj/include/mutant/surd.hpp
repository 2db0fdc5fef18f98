#pragma once

#include "mutant/base.hpp"

namespace mutant {

/// Exact value of the form sign * sqrt(radicand), radicand a nonnegative
/// integer. Closed under the operations needed by mutation of symmetrized
/// matrices: negation, products, and sums of commensurable surds.
/// The representation is unique: radicand == value^2, sign == sgn(value).
struct Surd {
    int sign = 0;   // -1, 0, +1
    Int rad = 0;    // value^2; zero iff sign == 0

    Surd() = default;
    Surd(int s, Int r) : sign(s), rad(std::move(r)) {
        if (rad == 0) sign = 0;
        if (sign == 0) rad = 0;
    }
    static Surd of_int(const Int& v) { return Surd(sgn(v), v * v); }

    bool is_zero() const { return sign == 0; }
    bool operator==(const Surd& o) const { return sign == o.sign && rad == o.rad; }
    bool operator!=(const Surd& o) const { return !(*this == o); }
};

Surd operator-(const Surd& a);
Surd operator*(const Surd& a, const Surd& b);
Surd abs(const Surd& a);

/// Sum of two surds. Defined only when the result is again sign*sqrt(int),
/// i.e. when the radicand product is a perfect square; otherwise throws
/// DomainError. This is exactly the realizability condition for diagram
/// mutation (the triangle weight product must be a perfect square).
Surd operator+(const Surd& a, const Surd& b);

std::string to_string(const Surd& a);

} // namespace mutant
