#include "qpfill/families.hpp"

#include <algorithm>
#include <set>

#include "json.hpp"

namespace qpfill::families {

using milnor::HomologyClass;
using milnor::MilnorLattice;

MilnorLattice family_lattice(int n)
{
    return MilnorLattice(4, n);
}

std::vector<HomologyClass> twisted_cycles(long k, long l, const MilnorLattice& lattice)
{
    const HomologyClass e1 = basis_class(lattice, 1);
    const HomologyClass e2 = basis_class(lattice, 2);
    const HomologyClass e3 = basis_class(lattice, 3);
    const HomologyClass e4 = basis_class(lattice, 4);

    const HomologyClass b1 =
        class_twist_apply(class_twist_apply(e2, e1, 1), e3, k + 2);
    const HomologyClass b2 = class_twist_apply(e2, e3, k);
    const HomologyClass b3 =
        class_twist_apply(class_twist_apply(e2, e1, -1), e3, k - 2);

    std::vector<HomologyClass> cycles{b1, b2, b3};
    for (long i = 0; i < l; ++i) cycles.push_back(e2);
    cycles.push_back(e4);
    return cycles;
}

fibration::LefschetzModel build_filling_model(long k, long l, int n)
{
    const MilnorLattice lattice = family_lattice(n);
    return {lattice, twisted_cycles(k, l, lattice)};
}

fibration::OpenBookModel build_boundary_model(long l, int n)
{
    const MilnorLattice lattice = family_lattice(n);
    return {lattice, monodromy_of_classes(lattice, twisted_cycles(0, l, lattice))};
}

std::vector<HomologyClass> expected_twisted_classes(long k, const MilnorLattice& lattice)
{
    const Int s = lattice.sign;
    return {HomologyClass(lattice, {-s, 1, (k + 2) * s, 0}),
            HomologyClass(lattice, {0, 1, k * s, 0}),
            HomologyClass(lattice, {s, 1, (k - 2) * s, 0})};
}

IntMatrix expected_boundary_monodromy(long l, const MilnorLattice& lattice)
{
    const Int s = lattice.sign;
    IntMatrix m(4, 4);
    // Column j is the image of e_j.
    const Int col[4][4] = {{1, s * l, 0, 0},
                           {3 * s, 9 * l + 1, -6 * s, -6},
                           {0, -s * l, 1, s},
                           {-2 * s, -6 * l, 4 * s, 5}};
    for (std::size_t j = 0; j < 4; ++j)
        for (std::size_t i = 0; i < 4; ++i) m.at(i, j) = col[j][i];
    return m;
}

AbelianInvariants expected_filling_invariants(long k)
{
    if (k == 0) return {1, {}};
    if (k == 1) return {0, {}};  // Z/1 is trivial
    return {0, {Int(k)}};
}

AbelianInvariants expected_boundary_invariants(long l)
{
    if (l == 1 || l == -1) return {1, {}};
    return {1, {abs(Int(l))}};
}

bool consistency_rho_vs_classes(long k, long l, int n)
{
    const MilnorLattice lattice(4, n);
    // beta_kl lives in B_4; push it into B_5 and append sigma_4.
    braid::BraidWord word(5, braid::product(braid::beta_kl(k, l)).letters);
    word.letters.push_back(4);
    return rho_matrix(word, lattice) ==
           monodromy_of_classes(lattice, twisted_cycles(k, l, lattice));
}

bool VerificationReport::all_pass() const
{
    if (!centralizer_ok || !products_ok || !distinct_ok) return false;
    return std::all_of(cells.begin(), cells.end(),
                       [](const ReportCell& c) { return c.pass(); });
}

VerificationReport verify_families(long k_max, long l_max, std::vector<int> n_set)
{
    if (k_max < 1 || l_max < 1)
        throw std::invalid_argument("verify_families: k_max and l_max must be >= 1");
    std::sort(n_set.begin(), n_set.end());
    n_set.erase(std::unique(n_set.begin(), n_set.end()), n_set.end());

    VerificationReport report{k_max, l_max, n_set, {}, true, true, true};

    const braid::BetaGenerators g = braid::beta_generators();
    const braid::BraidWord chain = concat(concat(g.b1, g.b2), g.b3);
    report.centralizer_ok =
        braids_equal(concat(g.twist, chain), concat(chain, g.twist));

    for (long l = 1; l <= l_max; ++l) {
        const braid::BraidWord base = product(braid::beta_kl(0, l));
        for (long k = 1; k <= k_max; ++k)
            if (!braids_equal(product(braid::beta_kl(k, l)), base))
                report.products_ok = false;
    }

    for (long k = 0; k <= k_max; ++k)
        for (long l = 1; l <= l_max; ++l)
            for (int n : n_set) {
                const MilnorLattice lattice = family_lattice(n);
                ReportCell cell{k, l, n, {}, {}, {}, {}, false, false, false, false};
                cell.filling_computed = filling_homology(build_filling_model(k, l, n));
                cell.filling_expected = expected_filling_invariants(k);
                cell.filling_ok = cell.filling_computed == cell.filling_expected;

                const fibration::OpenBookModel boundary = build_boundary_model(l, n);
                cell.boundary_computed = boundary_homology(boundary);
                cell.boundary_expected = expected_boundary_invariants(l);
                cell.boundary_ok = cell.boundary_computed == cell.boundary_expected;

                cell.monodromy_ok =
                    boundary.monodromy == expected_boundary_monodromy(l, lattice);
                cell.consistency_ok = consistency_rho_vs_classes(k, l, n);
                report.cells.push_back(std::move(cell));
            }

    // Distinctness: filling invariants separate k (fixed l, n), boundary
    // invariants separate l (fixed n).
    for (int n : n_set) {
        for (long l = 1; l <= l_max; ++l) {
            std::set<std::pair<std::size_t, std::vector<Int>>> seen;
            for (long k = 0; k <= k_max; ++k) {
                const AbelianInvariants inv =
                    filling_homology(build_filling_model(k, l, n));
                if (!seen.insert({inv.free_rank, inv.torsion}).second)
                    report.distinct_ok = false;
            }
        }
        std::set<std::pair<std::size_t, std::vector<Int>>> seen;
        for (long l = 1; l <= l_max; ++l) {
            const AbelianInvariants inv = boundary_homology(build_boundary_model(l, n));
            if (!seen.insert({inv.free_rank, inv.torsion}).second)
                report.distinct_ok = false;
        }
    }
    return report;
}

namespace {

nlohmann::json invariants_to_json(const AbelianInvariants& g)
{
    nlohmann::json torsion = nlohmann::json::array();
    for (const Int& d : g.torsion) torsion.push_back(static_cast<long long>(d));
    return {{"free_rank", g.free_rank}, {"torsion", torsion}};
}

}  // namespace

std::string report_to_json(const VerificationReport& report)
{
    nlohmann::json cells = nlohmann::json::array();
    for (const ReportCell& c : report.cells)
        cells.push_back({{"k", c.k},
                         {"l", c.l},
                         {"n", c.n},
                         {"pass", c.pass()},
                         {"filling", invariants_to_json(c.filling_computed)},
                         {"filling_expected", invariants_to_json(c.filling_expected)},
                         {"boundary", invariants_to_json(c.boundary_computed)},
                         {"boundary_expected", invariants_to_json(c.boundary_expected)},
                         {"monodromy_ok", c.monodromy_ok},
                         {"consistency_ok", c.consistency_ok}});
    const nlohmann::json j = {{"k_max", report.k_max},
                              {"l_max", report.l_max},
                              {"n", report.n_values},
                              {"cells", cells},
                              {"centralizer_ok", report.centralizer_ok},
                              {"products_ok", report.products_ok},
                              {"distinct_ok", report.distinct_ok},
                              {"all_pass", report.all_pass()}};
    return j.dump(2) + "\n";
}

}  // namespace qpfill::families
