#pragma once

// Middle-homology lattice of the A_m Milnor fiber: the antisymmetric
// intersection form, Dehn-twist transvections, and the induced
// anti-homomorphism from the braid group on m+1 strands.
//
// Conventions (fixed project-wide, the most error-prone part of the build):
//  - matrices act on coordinate COLUMNS; "image of e_j" is column j;
//  - for a braid word g_1 g_2 ... g_r the leftmost letter acts first, so
//    rho(w) = T(g_r) * ... * T(g_1), making rho an anti-homomorphism.

#include "qpfill/abelian.hpp"
#include "qpfill/braid.hpp"

#include <vector>

namespace qpfill::milnor {

// Z^rank with the antisymmetric A_m form <e_i, e_{i+1}> = 1 and the
// transvection sign s = (-1)^n baked into the lattice.
struct MilnorLattice {
    int rank;       // m, the Milnor number
    int dim_param;  // n >= 2; the fiber has dimension 4n-2, middle degree 2n-1
    int sign;       // s in {+1, -1}

    MilnorLattice(int rank_, int n);
    // Explicit sign, for the sign-equivariance tests; must be +1 or -1.
    MilnorLattice(int rank_, int n, int sign_);

    bool operator==(const MilnorLattice&) const = default;
};

struct HomologyClass {
    MilnorLattice lattice;
    std::vector<Int> coords;  // in the basis e_1, ..., e_rank

    HomologyClass(MilnorLattice lattice_, std::vector<Int> coords_);

    bool operator==(const HomologyClass&) const = default;
};

HomologyClass basis_class(const MilnorLattice& lattice, int j);  // e_j, 1-based

// The matrix of the A_m form (for tests and preservation checks).
IntMatrix intersection_form(const MilnorLattice& lattice);

// c^T * Omega * d
Int intersection(const HomologyClass& c, const HomologyClass& d);

// Iterated transvection: c + power * s * <c, b> * b. Valid for every
// integer power since <b, b> = 0.
HomologyClass class_twist_apply(const HomologyClass& c, const HomologyClass& b,
                                long power);

// Matrix of c -> c + power * s * <c, b> * b.
IntMatrix transvection_matrix(const HomologyClass& b, long power = 1);

// Transvection along the basis class e_j.
IntMatrix dehn_twist_matrix(int j, const MilnorLattice& lattice, long power = 1);

// Homology image of a braid word under the anti-homomorphism; requires
// strands = rank + 1. Inverse letters contribute inverse transvections.
IntMatrix rho_matrix(const braid::BraidWord& w, const MilnorLattice& lattice);

// Product of the transvections along the given classes, FIRST list element
// applied first (its matrix is rightmost).
IntMatrix monodromy_of_classes(const MilnorLattice& lattice,
                               const std::vector<HomologyClass>& cycles);

HomologyClass apply_matrix(const IntMatrix& m, const HomologyClass& c);

}  // namespace qpfill::milnor
