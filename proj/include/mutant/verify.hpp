#pragma once

#include "mutant/dynkin.hpp"

#include <string>
#include <vector>

namespace mutant::verify {

struct Check {
    std::string name;
    bool pass = false;
    std::string detail;  // counterexample or summary
};

/// mutate twice at every index is the identity, on random
/// sign-skew-symmetric integer matrices.
Check involution(int iterations = 1000, unsigned seed = 20030206);

/// diagram_of(mutate(B,k)) == diagram_mutate(diagram_of(B),k) on random
/// skew-symmetrizable matrices.
Check commutation(int iterations = 500, unsigned seed = 20030206);

/// Every orientation of every Dynkin diagram of rank <= max_rank recognized
/// with its type; every extended Dynkin tree (G2^(1) weights 1..3) and every
/// non-cyclically-oriented cycle rejected as 2-infinite. When data_dir is
/// nonempty the bundled corpus files are used for the positive/negative
/// diagram lists.
Check dynkin_recognition(int max_rank = 8, const std::string& data_dir = "");

/// S^s_{p,q,r} mutation equivalent to T_{p+r-1,q,s} for all instances with
/// at most max_vertices vertices.
Check crown_reduction(int max_vertices = 9);

/// Rank-2 exchange graphs are 4/5/6/8-gons; cluster counts A3 = 14, D4 = 50
/// against brute-force enumeration of maximal compatible sets.
Check small_counts();

/// Every geodesic loop has length h+2 per the rank-2 weight table, for the
/// given types.
Check geodesic_loop_law(const std::vector<CartanKillingType>& types = {
                            CartanKillingType('A', 3), CartanKillingType('B', 3),
                            CartanKillingType('D', 4)});

/// Engine runs from the bipartite seed close with |Phi_{>=-1}| variables and
/// exchange graph isomorphic to the dual graph of the cluster complex
/// (A3, B3, D4).
Check engine_closure();

/// Denominator vectors of those runs biject onto the almost positive roots;
/// every numerator has a nonzero constant term.
Check denominator_bijection();

/// All numerator coefficients nonnegative, in the trivial-coefficient runs
/// and in the special-coefficient A3/B3 model runs.
Check positivity();

/// Orders of tau_- tau_+ on the almost positive roots.
Check tau_orders();

/// k_+(beta) + k_-(beta) = h+1 across irreducible types of rank <= 4 plus
/// G2 and F4.
Check k_identity();

/// Exceptional positive roots: exactly the five across E8/F4/G2, empty for
/// every other irreducible type of rank <= 8.
Check exceptional_roots_check();

/// Symbolic identity suites: A (m <= 8), B/C (n <= 4), D (n = 4).
Check geometric_identities();

/// Type-A hexagon flip graph isomorphic to the Delta(A3) dual graph and to
/// the engine exchange graph, with matched edge labels.
Check model_coherence();

/// All fourteen acceptance checks in order.
std::vector<Check> acceptance_suite(const std::string& data_dir = "");

} // namespace mutant::verify
