#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <stdexcept>
#include <string>

namespace mutant {

/// Exact integers. Mutation sequences on 2-infinite inputs blow up entries,
/// so matrix arithmetic never uses fixed-width types.
using Int = boost::multiprecision::cpp_int;

/// Raised when an operation leaves its mathematical domain: a diagram that is
/// not realizable along a mutation path, a non-exact exchange division, a
/// matrix that is not skew-symmetrizable, an indeterminate equivalence test.
class DomainError : public std::runtime_error {
public:
    explicit DomainError(const std::string& what) : std::runtime_error(what) {}
};

inline int sgn(const Int& x) { return x.sign(); }
inline Int iabs(const Int& x) { return abs(x); }

/// Floor of sqrt for nonnegative integers, with exactness flag.
inline Int isqrt(const Int& x, bool* exact = nullptr) {
    Int r = sqrt(x);
    if (exact) *exact = (r * r == x);
    return r;
}

inline long long to_ll(const Int& x, const char* what = "integer") {
    if (x > std::numeric_limits<long long>::max() ||
        x < std::numeric_limits<long long>::min())
        throw DomainError(std::string(what) + " out of machine range");
    return static_cast<long long>(x);
}

} // namespace mutant
