#include "qpfill/fibration.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace qpfill::fibration {

BrieskornExponents::BrieskornExponents(std::vector<long long> exponents_)
    : exponents(std::move(exponents_))
{
    if (exponents.size() < 2)
        throw std::invalid_argument("BrieskornExponents: need at least two exponents");
    for (long long a : exponents)
        if (a < 2) throw std::invalid_argument("BrieskornExponents: exponents must be >= 2");
}

BrieskornGraph brieskorn_graph(const BrieskornExponents& a)
{
    const std::size_t n = a.exponents.size();
    BrieskornGraph g;
    g.labels = a.exponents;
    std::vector<std::size_t> parent(n);
    std::iota(parent.begin(), parent.end(), std::size_t{0});
    auto find = [&](std::size_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (std::gcd(a.exponents[i], a.exponents[j]) > 1) {
                g.edges.emplace_back(i, j);
                parent[find(i)] = find(j);
            }
    // Renumber components in first-appearance order so output is stable.
    g.component.assign(n, 0);
    std::vector<std::size_t> root_to_id(n, n);
    std::size_t next = 0;
    for (std::size_t i = 0; i < n; ++i) {
        const std::size_t r = find(i);
        if (root_to_id[r] == n) root_to_id[r] = next++;
        g.component[i] = root_to_id[r];
    }
    return g;
}

SphereVerdict is_homotopy_sphere(const BrieskornExponents& a)
{
    if (a.exponents.size() < 4)
        throw std::invalid_argument("is_homotopy_sphere: criterion requires at least 4 exponents");
    const BrieskornGraph g = brieskorn_graph(a);
    const std::size_t n = g.labels.size();
    const std::size_t ncomp =
        *std::max_element(g.component.begin(), g.component.end()) + 1;
    std::vector<std::vector<std::size_t>> members(ncomp);
    for (std::size_t i = 0; i < n; ++i) members[g.component[i]].push_back(i);

    std::size_t isolated = 0;
    for (const auto& comp : members)
        if (comp.size() == 1) ++isolated;
    if (isolated >= 2) return SphereVerdict::yes;  // condition (1)

    // Condition (2): an isolated point plus a disjoint odd component whose
    // members have pairwise gcd exactly 2.
    if (isolated >= 1) {
        for (const auto& comp : members) {
            if (comp.size() == 1 || comp.size() % 2 == 0) continue;
            bool all_two = true;
            for (std::size_t x = 0; x < comp.size() && all_two; ++x)
                for (std::size_t y = x + 1; y < comp.size() && all_two; ++y)
                    if (std::gcd(g.labels[comp[x]], g.labels[comp[y]]) != 2)
                        all_two = false;
            if (all_two) return SphereVerdict::yes;
        }
    }
    return SphereVerdict::unknown;
}

AbelianInvariants filling_homology(const LefschetzModel& model)
{
    const std::size_t m = model.lattice.rank;
    IntMatrix relations(model.cycles.size(), m);
    for (std::size_t i = 0; i < model.cycles.size(); ++i) {
        if (!(model.cycles[i].lattice == model.lattice))
            throw std::invalid_argument("filling_homology: cycle lattice mismatch");
        for (std::size_t j = 0; j < m; ++j)
            relations.at(i, j) = model.cycles[i].coords[j];
    }
    return cokernel_invariants(relations);
}

AbelianInvariants boundary_homology(const OpenBookModel& model)
{
    const std::size_t m = model.lattice.rank;
    if (model.monodromy.rows() != m || model.monodromy.cols() != m)
        throw std::invalid_argument("boundary_homology: monodromy dimension mismatch");

    // The boundary formula is only derived when the fiber boundary, the
    // Brieskorn sphere Sigma(2, ..., 2, m+1) with 2n-1 twos, is certified a
    // homotopy sphere; that is exactly the even-rank case.
    std::vector<long long> exps(2 * model.lattice.dim_param - 1, 2);
    exps.push_back(model.lattice.rank + 1);
    if (is_homotopy_sphere(BrieskornExponents(std::move(exps))) != SphereVerdict::yes)
        throw std::domain_error(
            "boundary_homology: formula not established for this fiber (rank is odd)");

    const IntMatrix omega = milnor::intersection_form(model.lattice);
    if (model.monodromy.transposed() * omega * model.monodromy != omega ||
        model.monodromy.determinant() != 1)
        throw std::invalid_argument(
            "boundary_homology: monodromy must preserve the intersection form with determinant 1");

    const IntMatrix diff = model.monodromy - IntMatrix::identity(m);
    // Relation j is the coordinate vector of monodromy(e_j) - e_j, i.e.
    // column j of the difference; rows-as-relations wants the transpose.
    return cokernel_invariants(diff.transposed());
}

LefschetzModel model_from_factorization(const braid::Factorization& f,
                                        const milnor::MilnorLattice& lattice)
{
    if (f.strands != lattice.rank + 1)
        throw std::invalid_argument("model_from_factorization: need strands = lattice rank + 1");
    LefschetzModel model{lattice, {}};
    model.cycles.reserve(f.entries.size());
    for (std::size_t i = 0; i < f.entries.size(); ++i) {
        const auto shape = braid::quasipositive_shape(f.entries[i]);
        if (!shape) {
            std::ostringstream os;
            os << "model_from_factorization: entry " << i + 1
               << " is not a syntactic conjugate of a generator: "
               << braid::to_text(f.entries[i]);
            throw std::invalid_argument(os.str());
        }
        model.cycles.push_back(milnor::apply_matrix(
            milnor::rho_matrix(shape->conjugator, lattice),
            milnor::basis_class(lattice, shape->generator)));
    }
    return model;
}

}  // namespace qpfill::fibration
