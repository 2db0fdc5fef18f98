#pragma once

#include "mutant/base.hpp"

#include <optional>
#include <vector>

namespace mutant {

/// Sparse multivariate polynomial with exact integer coefficients and
/// integer (possibly negative, i.e. Laurent) exponent vectors. Terms are
/// kept sorted lexicographically by exponent vector with zero coefficients
/// dropped, so equality is structural.
class Poly {
public:
    struct Term {
        std::vector<int> e;
        Int c;
        bool operator==(const Term& o) const { return e == o.e && c == o.c; }
    };

    Poly() = default;
    explicit Poly(int nvars) : nvars_(nvars) {}

    static Poly constant(int nvars, Int c);
    static Poly monomial(std::vector<int> e, Int c);
    static Poly variable(int nvars, int i);

    int nvars() const { return nvars_; }
    bool is_zero() const { return terms_.empty(); }
    const std::vector<Term>& terms() const { return terms_; }

    bool operator==(const Poly& o) const { return nvars_ == o.nvars_ && terms_ == o.terms_; }
    bool operator!=(const Poly& o) const { return !(*this == o); }
    bool operator<(const Poly& o) const;  // arbitrary total order for keys

    Poly operator-() const;
    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const;
    Poly operator*(const Poly& o) const;
    Poly pow(long long k) const;  // k >= 0

    /// Exact division in the Laurent ring; nullopt when not divisible.
    std::optional<Poly> divided_by(const Poly& d) const;

    /// Componentwise minimum of exponents over all terms (zero vector for 0).
    std::vector<int> min_exponents() const;

    /// Build from unsorted term list (used by parsers and tests).
    static Poly from_terms(int nvars, std::vector<Term> terms);

private:
    int nvars_ = 0;
    std::vector<Term> terms_;
    void normalize();
};

/// Rank of an exact integer matrix (fraction-free elimination).
int exact_rank(std::vector<std::vector<Int>> m);

} // namespace mutant
