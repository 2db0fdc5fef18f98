#pragma once

#include "mutant/engine.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace mutant {

/// One almost positive root in a polygon model: a Theta-orbit of diagonals
/// of a regular polygon. In type A the orbit is a single diagonal; in types
/// B/C it is a diameter or a centrally symmetric pair; in type D diameters
/// carry one of two colors.
struct ThetaOrbit {
    enum Kind { Pair, Diameter, DiameterTilde };
    Kind kind = Pair;
    int a = 0, b = 0;  // normalized representative, 1-based vertices, a < b

    auto operator<=>(const ThetaOrbit& o) const = default;
    std::string str() const;
};

/// Triangulation: a maximal set of pairwise noncrossing orbits, stored as
/// sorted orbit indices. Always of size n.
using Triangulation = std::vector<int>;

/// Combinatorial polygon model of the cluster complex of one classical type:
/// A_n on an (n+3)-gon, B_n/C_n on Theta-orbits of a (2n+2)-gon, D_n on a
/// 2n-gon with colored diameters. All crossing computations are index
/// arithmetic; vertices are numbered counterclockwise from 1.
class PolygonModel {
public:
    PolygonModel(char family, int n);

    char family() const { return family_; }
    int n() const { return n_; }
    /// Number of polygon vertices.
    int gon() const { return m_; }
    /// Antipodal vertex (types B/C/D).
    int antipode(int v) const;

    const std::vector<ThetaOrbit>& orbits() const { return orbits_; }
    int orbit_index(const ThetaOrbit& o) const;
    /// Orbit of the diagonal or colored diameter through vertices u, v.
    int orbit_of(int u, int v, bool tilde = false) const;

    /// Snake: orbit representing -a_i (0-based i).
    const std::vector<int>& snake() const { return snake_; }

    /// Model-side compatibility degree (crossing count per the type's rule).
    int crossing_degree(int orb_a, int orb_b) const;

    /// Root represented by an orbit (coefficients over simple roots),
    /// computed purely from crossing counts against the snake.
    const RootVec& root_of_orbit(int orb) const { return root_of_orbit_[orb]; }
    int orbit_of_root(const RootVec& v) const;

    /// All triangulations, sorted.
    std::vector<Triangulation> triangulations() const;
    /// The unique exchange of d inside T.
    std::pair<Triangulation, int> flip(const Triangulation& t, int orb) const;

    /// Side generators: one per Theta-orbit of polygon sides, in order.
    const TropSemifield& side_semifield() const { return sides_; }
    /// Semifield generator index of the side orbit through (u, u+1), if any.
    std::optional<int> side_index(int u, int v) const;

private:
    char family_;
    int n_, m_, half_;
    std::vector<ThetaOrbit> orbits_;
    std::map<ThetaOrbit, int> orbit_index_;
    std::vector<int> snake_;
    std::vector<RootVec> root_of_orbit_;
    std::map<RootVec, int> root_index_;
    std::vector<int> compat_;
    TropSemifield sides_;
    std::map<std::pair<int, int>, int> side_index_;

    int raw_crossing_degree(int orb_a, int orb_b) const;
};

/// Exchange relation of the model, with the special coefficient system:
/// x[z] x[zbar] = c1 * m1 + c2 * m2, monomials over orbit variables and
/// coefficients over the side generators. The two right-hand terms are in a
/// canonical order (m1 < m2 as maps).
struct ModelRelation {
    int z, zbar;
    std::map<int, long long> m1, m2;
    TropElem c1, c2;
    bool operator==(const ModelRelation& o) const = default;
};

ModelRelation model_exchange_relation(const PolygonModel& pm, int orb_a, int orb_b);

/// The normalized coefficient pair of a relation instance.
CoefficientPair special_coefficients(const ModelRelation& rel);

/// Exchange matrix of a type-A triangulation: b_{de} = +-1 when the
/// diagonals d, e are two sides of a triangle, sign by orientation.
ExchangeMatrix b_matrix_of_triangulation(const PolygonModel& pm, const Triangulation& t);

/// Seed for the engine: positions are the snake orbits, matrix the bipartite
/// seed matrix, coefficients the special system read off the snake flips.
Seed model_initial_seed(const PolygonModel& pm, const RootSystem& rs);

/// Compatible monomials of total degree <= deg are linearly independent as
/// Laurent expressions over the initial cluster (type A, trivial
/// coefficients).
bool compatible_monomial_independence(int n, int deg);

} // namespace mutant
