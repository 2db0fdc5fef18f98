#pragma once

#include "mutant/laurent.hpp"
#include "mutant/matrix.hpp"
#include "mutant/rootsys.hpp"

#include <map>
#include <string>
#include <vector>

namespace mutant {

/// Normalized seed: cluster variables as exact Laurent expressions in the
/// initial cluster, one normalized coefficient pair per position, and the
/// exchange matrix aligned with the positions.
struct Seed {
    TropSemifield semifield;
    std::vector<Laurent> cluster;
    std::vector<CoefficientPair> coeffs;
    ExchangeMatrix matrix;

    int rank() const { return int(cluster.size()); }
    bool operator==(const Seed& o) const = default;
};

/// Seed with cluster (x_1..x_n), the given coefficient pairs, and matrix b.
/// Checks normalization and sign-skew-symmetry.
Seed initial_seed(const ExchangeMatrix& b, const TropSemifield& p,
                  const std::vector<CoefficientPair>& coeffs);

/// Trivial coefficients over Trop() (empty generator set).
Seed initial_seed(const ExchangeMatrix& b);

/// One exchange relation as recorded along an edge of the exchange graph:
/// z zbar = p_plus * M+ + p_minus * M- with the monomials written over the
/// canonical string forms of the participating cluster variables.
struct Relation {
    std::string z, zbar;
    TropElem p_plus, p_minus;
    std::vector<std::pair<std::string, long long>> m_plus, m_minus;  // sorted
    bool operator==(const Relation& o) const = default;
};

/// Seed mutation in direction z: new variable by the exchange relation
/// (exact division), coefficients by ratio-then-normalize, matrix by matrix
/// mutation. Throws DomainError when the division is not exact or the
/// mutated matrix is not sign-skew-symmetric.
Seed seed_mutate(const Seed& s, int z);
Seed seed_mutate(const Seed& s, int z, Relation* rel);

struct EngineGraph {
    std::vector<Seed> seeds;  // deduplicated, BFS layer order
    struct Edge {
        int u, v;
        Relation rel;
    };
    std::vector<Edge> edges;
    std::vector<Laurent> variables;  // sorted
    bool closed = false;
};

struct EngineOptions {
    size_t seed_cap = 100000;
    bool parallel = true;
};

/// BFS over seed mutations; seeds are deduplicated modulo simultaneous
/// relabeling of positions. closed = true iff the graph closes within
/// seed_cap seeds.
EngineGraph build_exchange_graph(const Seed& s0, const EngineOptions& opt = {});
EngineGraph build_exchange_graph_serial(const Seed& s0, const EngineOptions& opt = {});

/// Denominator vector of a computed cluster variable (wrapper around
/// Laurent::denominator_vector; the result is a root-lattice vector).
RootVec denominator_vector(const Laurent& v);

/// Positivity in the sharpened sense: all integer coefficients of the
/// numerator nonnegative and all semifield exponents nonnegative.
bool check_positivity(const Laurent& v);

/// Root labels for the variables of a closed finite-type run: variable
/// string -> almost positive root index, via denominator vectors.
std::map<std::string, int> root_labels(const EngineGraph& g, const RootSystem& rs);

/// Exchange-relation data per exchangeable root pair, in root form:
/// x[beta] x[beta'] = p^eps x[beta+beta'] + p^-eps x[beta (+) beta'].
struct RootRelation {
    TropElem coeff_plus;   // coefficient on x[beta+beta']
    TropElem coeff_minus;  // coefficient on x[beta (+) beta']
    std::map<int, long long> mono_plus;   // cluster expansion of beta+beta'
    std::map<int, long long> mono_minus;  // cluster expansion of beta (+) beta'
    bool operator==(const RootRelation& o) const = default;
};

/// Collects the relation attached to every ordered exchangeable pair
/// realized in the run, asserting that all seeds realizing the same pair
/// agree exactly, and that the monomials match the cluster expansions of
/// beta+beta' and beta (+) beta'. Throws DomainError on any inconsistency.
std::map<std::pair<int, int>, RootRelation> exchange_pair_data(const EngineGraph& g,
                                                               const RootSystem& rs);

} // namespace mutant
