#pragma once

// The two infinite families driving the verification report: Stein fillings
// W(k, l) of a fixed contact boundary, presented by twisted quasipositive
// factorizations in B_4, and the open-book boundaries M(l).
//
// Expected values come from closed-form expressions in (k, l, s) frozen here
// independently of the computation routes they check.

#include "qpfill/abelian.hpp"
#include "qpfill/fibration.hpp"

#include <string>
#include <vector>

namespace qpfill::families {

// Lattice (m = 4, dimension parameter n) with the implied sign.
milnor::MilnorLattice family_lattice(int n);

// Vanishing-cycle classes (B1(k), B2(k), B3(k), e_2 x l, e_4) obtained by
// iterated transvections of basis classes.
std::vector<milnor::HomologyClass> twisted_cycles(long k, long l,
                                                  const milnor::MilnorLattice& lattice);

fibration::LefschetzModel build_filling_model(long k, long l, int n);
fibration::OpenBookModel build_boundary_model(long l, int n);

// Closed-form rows for the three twisted classes.
std::vector<milnor::HomologyClass> expected_twisted_classes(
    long k, const milnor::MilnorLattice& lattice);

// Closed-form monodromy matrix of the boundary family in l and the sign.
IntMatrix expected_boundary_monodromy(long l, const milnor::MilnorLattice& lattice);

AbelianInvariants expected_filling_invariants(long k);   // Z for k = 0, Z/k else
AbelianInvariants expected_boundary_invariants(long l);  // Z + Z/l

// rho of the braid word of beta_kl(k, l) extended by sigma_4 in B_5 equals
// the transvection product over the twisted cycle classes.
bool consistency_rho_vs_classes(long k, long l, int n);

struct ReportCell {
    long k, l;
    int n;
    AbelianInvariants filling_computed, filling_expected;
    AbelianInvariants boundary_computed, boundary_expected;
    bool filling_ok, boundary_ok, monodromy_ok, consistency_ok;

    bool pass() const
    {
        return filling_ok && boundary_ok && monodromy_ok && consistency_ok;
    }
};

struct VerificationReport {
    long k_max, l_max;
    std::vector<int> n_values;
    std::vector<ReportCell> cells;  // sorted by (k, l, n)
    bool centralizer_ok;            // twist commutes with b1 b2 b3
    bool products_ok;               // product(beta_kl) independent of k
    bool distinct_ok;               // invariants separate k and l

    bool all_pass() const;
};

// Runs every check on the grid k in 0..k_max, l in 1..l_max, n in n_set;
// never aborts early, mismatches mark the cell failed.
VerificationReport verify_families(long k_max, long l_max, std::vector<int> n_set);

// Deterministic JSON rendering (sorted keys, fixed formatting).
std::string report_to_json(const VerificationReport& report);

}  // namespace qpfill::families
