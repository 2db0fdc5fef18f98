#pragma once

#include "mutant/dynkin.hpp"

#include <map>
#include <optional>
#include <utility>
#include <vector>

namespace mutant {

/// Integer coefficient vector over the simple-root basis.
using RootVec = std::vector<long long>;

std::string root_str(const RootVec& v);

/// Finite root system with the combinatorial data of its cluster complex:
/// bipartition sign, Coxeter numbers, almost positive roots
/// (negative simples followed by the positive roots sorted by height then
/// lexicographically), invariant form, and the full compatibility table.
/// Built once, immutable afterwards; queries are pure.
class RootSystem {
public:
    explicit RootSystem(const CartanKillingType& type, bool parallel_tables = true);

    const CartanKillingType& type() const { return type_; }
    int rank() const { return n_; }
    long long cartan(int i, int j) const { return a_[size_t(i) * n_ + j]; }

    const std::vector<std::vector<int>>& components() const { return components_; }
    int component_of(int i) const { return component_of_[i]; }
    int coxeter_number(int comp) const { return h_[comp]; }
    int max_coxeter_number() const { return h_max_; }

    /// Bipartition sign: +1 on I_+, -1 on I_-. I_+ holds the lowest index of
    /// each Coxeter-graph component.
    int sign(int i) const { return eps_[i]; }

    /// Minimal positive integer symmetrizer of the Cartan matrix (gcd 1 per
    /// component); (a_i, a_i) is proportional to d_i.
    long long sym_d(int i) const { return d_[i]; }

    /// W-invariant form, normalized so (a_i, a_j) = d_i a_ij.
    long long form(const RootVec& x, const RootVec& y) const;

    const std::vector<RootVec>& positive_roots() const { return positive_; }

    /// Almost positive roots. Indices 0..n-1 are -a_1..-a_n, then the
    /// positive roots in their sorted order.
    const std::vector<RootVec>& almost_positive() const { return apr_; }
    int apr_count() const { return int(apr_.size()); }
    const RootVec& apr(int idx) const { return apr_[idx]; }
    int apr_index(const RootVec& v) const;
    bool is_almost_positive(const RootVec& v) const;

    int compatibility(int a, int b) const { return compat_[size_t(a) * apr_.size() + b]; }

private:
    CartanKillingType type_;
    int n_ = 0;
    std::vector<long long> a_;
    std::vector<std::vector<int>> components_;
    std::vector<int> component_of_;
    std::vector<int> h_;
    int h_max_ = 0;
    std::vector<int> eps_;
    std::vector<long long> d_;
    std::vector<RootVec> positive_;
    std::vector<RootVec> apr_;
    std::map<RootVec, int> apr_index_;
    std::vector<int> compat_;
};

/// tau_eps as a piecewise-linear involution of the whole root lattice:
///   [tau_eps g : a_i] = -[g : a_i] - sum_{j != i} a_ij max([g : a_j], 0)
/// for i in I_eps, identity on the other coordinates.
RootVec tau(const RootSystem& rs, int eps, const RootVec& g);

/// Alternating product tau_{...} tau_{-eps} tau_eps with k factors, applied
/// to g (rightmost factor first).
RootVec tau_alternating(const RootSystem& rs, int eps, int k, const RootVec& g);

/// Smallest k >= 0 such that the (k+1)-st alternating step fixes the image
/// and that image is a negative simple root.
int k_epsilon(const RootSystem& rs, int eps, const RootVec& beta);

/// Compatibility degree (a || b), computed by tau-reduction of the first
/// argument to a negative simple (at most h+1 steps) and
/// (-a_i || b) = max([b : a_i], 0).
int compatibility_degree(const RootSystem& rs, const RootVec& a, const RootVec& b);

/// Full table over almost positive roots; the parallel flag selects the
/// OpenMP kernel, the serial variant is the testing reference.
std::vector<int> compatibility_table(const RootSystem& rs, bool parallel);
std::vector<int> compatibility_table_serial(const RootSystem& rs);

bool are_exchangeable(const RootSystem& rs, int a, int b);

/// The sign eps with k_eps(beta) < k_eps(beta'); defined for exchangeable
/// (more generally incompatible) pairs.
int sign_eps(const RootSystem& rs, int beta, int beta_prime);

/// beta (+) beta': the second distinguished lattice vector attached to an
/// exchangeable pair, the one other than beta + beta'. Zero in rank one.
RootVec subplus(const RootSystem& rs, int beta, int beta_prime);

/// All clusters: maximal sets of pairwise compatible almost positive roots,
/// as sorted index vectors, lexicographically ordered.
std::vector<std::vector<int>> clusters(const RootSystem& rs);

/// Unique cluster expansion of g: coefficients of a nonnegative combination
/// of mutually compatible almost positive roots.
std::map<int, long long> cluster_expansion(const RootSystem& rs, const RootVec& g);
std::map<int, long long> cluster_expansion(const RootSystem& rs, const RootVec& g,
                                           const std::vector<std::vector<int>>& cls);

/// Independent greedy tau-reduction oracle for cluster expansions, kept for
/// cross-checking the scan-based implementation.
std::map<int, long long> cluster_expansion_greedy(const RootSystem& rs, const RootVec& g);

/// The unique root beta' != beta with C - {beta} + {beta'} a cluster.
std::pair<std::vector<int>, int> adjacent_cluster(const RootSystem& rs,
                                                  const std::vector<int>& cluster, int beta);

/// Root-theoretic exchange matrix of a cluster:
///   b_{a b}(C) = eps(b, b') ([b + b' : a]_clus - [b (+) b' : a]_clus).
ExchangeMatrix b_matrix_of_cluster(const RootSystem& rs, const std::vector<int>& cluster);
ExchangeMatrix b_matrix_of_cluster(const RootSystem& rs, const std::vector<int>& cluster,
                                   const std::vector<std::vector<int>>& cls);

/// Bipartite seed matrix at the all-negative cluster: b_ij = -eps(j) a_ij
/// off the diagonal; identical to b_matrix_of_cluster there.
ExchangeMatrix initial_bipartite_matrix(const RootSystem& rs);

struct ComplexGraph {
    /// Clusters as sorted apr-index vectors, in lexicographic order.
    std::vector<std::vector<int>> clusters;
    struct Edge {
        int u, v;          // cluster ids, u < v
        int beta_u, beta_v;  // exchanged pair: clusters[u] loses beta_u, gains beta_v
        bool operator==(const Edge& o) const = default;
    };
    std::vector<Edge> edges;
};

/// Dual graph of the cluster complex, edges labeled by exchanged pairs.
ComplexGraph complex_exchange_graph(const RootSystem& rs);

struct GeodesicLoop {
    std::vector<int> fixed;  // the n-2 roots common to the loop
    int length = 0;
    long long weight = 0;  // |b_ab b_ba| along the loop
};

/// All geodesic loops: links of (n-2)-subsets of clusters, with their
/// lengths and rank-2 weights.
std::vector<GeodesicLoop> geodesic_loops(const RootSystem& rs);

/// Positive roots admitting no exchangeable negative simple partner, i.e.
/// no j with [a : a_j] = 1 and (a, a) = (a_j, a_j).
std::vector<RootVec> exceptional_roots(const RootSystem& rs);

} // namespace mutant
