#pragma once

#include "mutant/poly.hpp"

#include <string>
#include <vector>

namespace mutant {

/// Free tropical semifield Trop(p_j): elements are integer exponent vectors
/// over the generators, multiplication adds exponents and the auxiliary
/// addition takes componentwise minima.
struct TropSemifield {
    std::vector<std::string> gens;

    int size() const { return int(gens.size()); }
    bool operator==(const TropSemifield& o) const = default;
};

using TropElem = std::vector<int>;

TropElem trop_one(const TropSemifield& p);
TropElem trop_mul(const TropElem& a, const TropElem& b);
TropElem trop_div(const TropElem& a, const TropElem& b);
TropElem trop_pow(const TropElem& a, long long k);
/// Auxiliary addition: componentwise min.
TropElem trop_add(const TropElem& a, const TropElem& b);
std::string trop_str(const TropSemifield& p, const TropElem& a);

/// Normalized pair (p+, p-): componentwise min of the two exponent vectors
/// is zero, i.e. p+ (+) p- = 1.
struct CoefficientPair {
    TropElem plus, minus;
    bool operator==(const CoefficientPair& o) const = default;
    bool is_normalized() const;
};

/// The unique normalized pair with ratio u: p = u/(1+u), q = 1/(1+u).
CoefficientPair normalize_ratio(const TropElem& u);

/// Exact Laurent polynomial in the initial cluster variables x_1..x_nx with
/// coefficients in the group ring Z[Trop(p_1..p_np)]: a sum of terms
/// c * p^a * x^b with integer c. Backed by a flat sparse polynomial over
/// nx + np exponents (x part first).
class Laurent {
public:
    Laurent() = default;
    Laurent(int nx, int np) : nx_(nx), np_(np), poly_(nx + np) {}

    static Laurent zero(int nx, int np) { return Laurent(nx, np); }
    static Laurent one(int nx, int np);
    static Laurent variable(int nx, int np, int i);
    /// c * p^a as a Laurent expression (empty x part).
    static Laurent coefficient(int nx, const TropElem& a, Int c = 1);
    static Laurent from_poly(int nx, int np, Poly p);

    int nx() const { return nx_; }
    int np() const { return np_; }
    const Poly& poly() const { return poly_; }
    bool is_zero() const { return poly_.is_zero(); }

    bool operator==(const Laurent& o) const = default;
    bool operator<(const Laurent& o) const { return poly_ < o.poly_; }

    Laurent operator+(const Laurent& o) const;
    Laurent operator-(const Laurent& o) const;
    Laurent operator*(const Laurent& o) const;
    Laurent pow(long long k) const;

    /// Exact division; throws DomainError when the quotient is not a Laurent
    /// polynomial over Z[P].
    Laurent divided_by(const Laurent& o) const;

    /// Denominator vector: the vector a with *this = N(x)/x^a where N has a
    /// nonzero constant term in x. Throws when no such normal form exists.
    std::vector<long long> denominator_vector() const;

    /// All integer coefficients nonnegative and all semifield exponents
    /// nonnegative.
    bool is_positive() const;

    /// Canonical display form, e.g. "(1+x2)/x1".
    std::string str(const TropSemifield& p) const;
    std::string str() const;  // generators named p1, p2, ...

private:
    int nx_ = 0, np_ = 0;
    Poly poly_;
};

} // namespace mutant
