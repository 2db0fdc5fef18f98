#pragma once

#include "mutant/poly.hpp"

#include <string>
#include <vector>

namespace mutant {

struct IdentityReport {
    std::string name;
    bool ok = false;
    std::string detail;  // offending instance when ok is false
};

/// Symbolic verification, over generic 2 x m matrix entries z_ij, of the
/// exchange-relation identities satisfied by the classical realizations:
/// type A Grassmann-Pluecker relations on m = n+3 columns; type B the six
/// identities with r = 1 and the barred coordinates
/// D_{a b~} = D_{a,n+2} D_{b,n+2} - D_{ab}; type C the six identities with
/// r = 2, D_{ab} = z_1a z_2b - z_1b z_2a and D_{a b~} = z_1a z_1b + z_2a z_2b;
/// type D the identities in the quotient by D_{n+1,n+2} = 0, realized by
/// substituting column n+2 = t * (column n+1).
std::vector<IdentityReport> verify_geometric_identities(char family, int n);

bool all_hold(const std::vector<IdentityReport>& reports);

} // namespace mutant
