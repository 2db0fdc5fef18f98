#pragma once

#include "mutant/base.hpp"
#include "mutant/surd.hpp"

#include <optional>
#include <string>
#include <vector>

namespace mutant {

/// Labeled square integer matrix B = (b_ij), the exchange matrix of a seed.
/// Row/column order is significant only up to simultaneous relabeling;
/// equal_up_to_relabeling is the corresponding relation.
class ExchangeMatrix {
public:
    ExchangeMatrix() = default;
    explicit ExchangeMatrix(int n) : n_(n), labels_(default_labels(n)), e_(size_t(n) * n, Int(0)) {}
    ExchangeMatrix(std::vector<std::string> labels, std::vector<Int> entries);

    /// Convenience: dense rows of machine ints (tests, literals).
    static ExchangeMatrix from_rows(const std::vector<std::vector<long long>>& rows);

    int size() const { return n_; }
    const std::vector<std::string>& labels() const { return labels_; }
    const Int& operator()(int i, int j) const { return e_[size_t(i) * n_ + j]; }
    Int& operator()(int i, int j) { return e_[size_t(i) * n_ + j]; }

    bool operator==(const ExchangeMatrix& o) const { return n_ == o.n_ && e_ == o.e_; }
    bool operator!=(const ExchangeMatrix& o) const { return !(*this == o); }

    /// Principal submatrix on the given index set (labels kept).
    ExchangeMatrix submatrix(const std::vector<int>& idx) const;

    static std::vector<std::string> default_labels(int n);

private:
    int n_ = 0;
    std::vector<std::string> labels_;
    std::vector<Int> e_;
};

/// Generalized Cartan matrix: a_ii = 2, a_ij <= 0 off the diagonal.
struct CartanMatrix {
    int n = 0;
    std::vector<Int> e;  // row-major

    CartanMatrix() = default;
    explicit CartanMatrix(int nn) : n(nn), e(size_t(nn) * nn, Int(0)) {}
    const Int& operator()(int i, int j) const { return e[size_t(i) * n + j]; }
    Int& operator()(int i, int j) { return e[size_t(i) * n + j]; }
    bool operator==(const CartanMatrix& o) const { return n == o.n && e == o.e; }
};

/// Skew-symmetric matrix of exact quadratic surds, S(B) = H B H^-1.
struct SymmetrizedMatrix {
    int n = 0;
    std::vector<Surd> e;

    SymmetrizedMatrix() = default;
    explicit SymmetrizedMatrix(int nn) : n(nn), e(size_t(nn) * nn) {}
    const Surd& operator()(int i, int j) const { return e[size_t(i) * n + j]; }
    Surd& operator()(int i, int j) { return e[size_t(i) * n + j]; }
    bool operator==(const SymmetrizedMatrix& o) const { return n == o.n && e == o.e; }
};

/// Matrix mutation in direction k:
///   b'_ij = -b_ij                         if i == k or j == k,
///   b'_ij = b_ij + (|b_ik| b_kj + b_ik |b_kj|) / 2   otherwise.
/// Involutive and total on integer matrices.
ExchangeMatrix mutate(const ExchangeMatrix& b, int k);

/// Mutation of a surd matrix by the same rule; throws DomainError if a
/// required surd sum is incommensurable.
SymmetrizedMatrix mutate(const SymmetrizedMatrix& s, int k);

/// Cartan counterpart A(B): a_ii = 2, a_ij = -|b_ij| for i != j.
CartanMatrix cartan_counterpart(const ExchangeMatrix& b);

/// True iff for every i, j either b_ij = b_ji = 0 or b_ij b_ji < 0.
bool is_sign_skew_symmetric(const ExchangeMatrix& b);

/// Smallest positive integer diagonal D with D B skew-symmetric, if any.
/// Normalized per connected block: entries of each block have gcd 1.
std::optional<std::vector<Int>> skew_symmetrizer(const ExchangeMatrix& b);

bool is_skew_symmetrizable(const ExchangeMatrix& b);

/// S(B) with s_ij = sgn(b_ij) sqrt(|b_ij b_ji|). Requires B
/// skew-symmetrizable (throws DomainError otherwise).
SymmetrizedMatrix symmetrized(const ExchangeMatrix& b);

/// Equality modulo a simultaneous permutation of rows and columns
/// (labels ignored).
bool equal_up_to_relabeling(const ExchangeMatrix& a, const ExchangeMatrix& b);

/// Connected components of the support graph (b_ij != 0 or b_ji != 0).
std::vector<std::vector<int>> support_components(const ExchangeMatrix& b);

} // namespace mutant
