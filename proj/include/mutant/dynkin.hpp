#pragma once

#include "mutant/diagram.hpp"

#include <optional>
#include <string>
#include <vector>

namespace mutant {

/// One irreducible Cartan-Killing factor.
struct TypeComponent {
    char family = 'A';  // A B C D E F G
    int rank = 0;

    auto operator<=>(const TypeComponent& o) const = default;
    std::string str() const { return family + std::to_string(rank); }
};

/// Multiset of irreducible components. Reporting conventions:
/// A: n>=1, B: n>=2 (B2 = C2 is reported as B2), C: n>=3, D: n>=4,
/// E: 6..8, F: 4, G: 2.
struct CartanKillingType {
    std::vector<TypeComponent> components;  // kept sorted

    CartanKillingType() = default;
    CartanKillingType(char f, int r) : components{{f, r}} {}
    explicit CartanKillingType(std::vector<TypeComponent> comps);

    int rank() const;
    bool operator==(const CartanKillingType& o) const = default;
    std::string str() const;

    /// Parse "A3", "B2 x A1", ...
    static CartanKillingType parse(const std::string& s);
};

/// Cartan matrix of the given finite type, in the convention where the
/// simple reflections act by s_i(a_j) = a_j - a_ij a_i. Families B/C/F/G fix
/// a_{n-1,n} = -r, a_{n,n-1} = -2/r with r = 1 for B and r = 2 for C.
CartanMatrix cartan_matrix_of(const CartanKillingType& t);

/// Orientation of the Dynkin diagram of an irreducible type: linear chains
/// directed low-to-high index.
Diagram dynkin_diagram(const TypeComponent& c);

/// All orientations of the Dynkin diagram of an irreducible type, one
/// diagram per assignment of edge directions (2^edges of them).
std::vector<Diagram> dynkin_orientations(const TypeComponent& c);

/// Extended Dynkin tree diagrams: B^(1)_n (n>=3), C^(1)_n (n>=2),
/// D^(1)_n (n>=4), E^(1)_6..8, F4^(1), and G2^(1) with second weight a.
Diagram extended_dynkin_tree(char family, int n, int g2_weight = 1);

/// T_{p,q,r}: three chains of lengths p, q, r attached to a central vertex,
/// unit weights.
Diagram t_diagram(int p, int q, int r);

/// S^s_{p,q,r}: chains of lengths p-1, q-1, r-1 attached to three
/// consecutive vertices of a cyclically oriented (s+3)-cycle, unit weights.
Diagram crown_diagram(int p, int q, int r, int s);

/// Cyclically oriented n-cycle with the given weights (w[i] on edge
/// i -> i+1 mod n).
Diagram oriented_cycle(const std::vector<long long>& weights);

/// Cartan-Killing type recognition for diagrams. Returns the type (one
/// component per connected component of the diagram) when the diagram is
/// 2-finite, and nullopt otherwise. A diagram does not see the difference
/// between B_n and C_n, so that family is reported as B_n.
std::optional<CartanKillingType> recognize_type(const Diagram& g);

/// Recognition for matrices: as recognize_type of the diagram, but the
/// B_n / C_n ambiguity is settled by the skew-symmetrizer of the matrix
/// (one short root for B_n, one long root for C_n).
std::optional<CartanKillingType> recognize_matrix_type(const ExchangeMatrix& b);

} // namespace mutant
