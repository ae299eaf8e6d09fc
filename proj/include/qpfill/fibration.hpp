#pragma once

// Homology of fillings presented by abstract Weinstein Lefschetz fibration
// data, and of open-book boundaries from monodromy, gated by the Brieskorn
// homotopy-sphere criterion.

#include "qpfill/abelian.hpp"
#include "qpfill/braid.hpp"
#include "qpfill/milnor.hpp"

#include <vector>

namespace qpfill::fibration {

// Fiber lattice plus ordered vanishing-cycle classes.
struct LefschetzModel {
    milnor::MilnorLattice lattice;
    std::vector<milnor::HomologyClass> cycles;
};

// Fiber lattice plus the monodromy action on middle homology.
struct OpenBookModel {
    milnor::MilnorLattice lattice;
    IntMatrix monodromy;
};

struct BrieskornExponents {
    std::vector<long long> exponents;  // each >= 2, at least two of them

    explicit BrieskornExponents(std::vector<long long> exponents_);
};

// Graph on labeled vertices with an edge between i and j iff gcd > 1.
struct BrieskornGraph {
    std::vector<long long> labels;
    std::vector<std::pair<std::size_t, std::size_t>> edges;  // i < j, 0-based
    std::vector<std::size_t> component;                      // component id per vertex
};

BrieskornGraph brieskorn_graph(const BrieskornExponents& a);

// Sufficient criterion only: never answers "no".
enum class SphereVerdict { yes, unknown };

// Requires at least 4 exponents (the criterion is stated in that range).
SphereVerdict is_homotopy_sphere(const BrieskornExponents& a);

// Middle homology of the filling: Z^rank modulo the cycle classes.
AbelianInvariants filling_homology(const LefschetzModel& model);

// Middle homology of the open-book boundary: coker(monodromy - id).
// Refuses (std::domain_error) unless the fiber boundary is certified a
// homotopy sphere by the Brieskorn criterion, i.e. unless rank is even.
AbelianInvariants boundary_homology(const OpenBookModel& model);

// Cycle classes from a factorization of syntactic conjugates of generators:
// entry gamma^{-1} sigma_i gamma contributes rho(gamma) applied to e_i.
// Requires f.strands = lattice.rank + 1.
LefschetzModel model_from_factorization(const braid::Factorization& f,
                                        const milnor::MilnorLattice& lattice);

}  // namespace qpfill::fibration
