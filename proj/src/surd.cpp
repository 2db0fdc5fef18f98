#include "mutant/surd.hpp"

namespace mutant {

Surd operator-(const Surd& a) { return Surd(-a.sign, a.rad); }

Surd abs(const Surd& a) { return Surd(a.sign == 0 ? 0 : 1, a.rad); }

Surd operator*(const Surd& a, const Surd& b) {
    if (a.is_zero() || b.is_zero()) return Surd();
    return Surd(a.sign * b.sign, a.rad * b.rad);
}

Surd operator+(const Surd& a, const Surd& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    bool exact = false;
    Int k = isqrt(a.rad * b.rad, &exact);
    if (!exact)
        throw DomainError("incommensurable surds: sqrt(" + a.rad.str() +
                          ") + sqrt(" + b.rad.str() + ")");
    if (a.sign == b.sign) return Surd(a.sign, a.rad + b.rad + 2 * k);
    // a.sign != b.sign: |result| = |sqrt(ra) - sqrt(rb)|
    if (a.rad == b.rad) return Surd();
    int s = (a.rad > b.rad) ? a.sign : b.sign;
    return Surd(s, a.rad + b.rad - 2 * k);
}

std::string to_string(const Surd& a) {
    if (a.is_zero()) return "0";
    bool exact = false;
    Int r = isqrt(a.rad, &exact);
    std::string mag = exact ? r.str() : ("sqrt(" + a.rad.str() + ")");
    return (a.sign < 0 ? "-" : "") + mag;
}

} // namespace mutant
