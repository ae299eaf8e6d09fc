#include "qpfill/milnor.hpp"

namespace qpfill::milnor {

namespace {

void check_same_lattice(const MilnorLattice& a, const MilnorLattice& b)
{
    if (!(a == b)) throw std::invalid_argument("milnor: lattice mismatch");
}

}  // namespace

MilnorLattice::MilnorLattice(int rank_, int n)
    : MilnorLattice(rank_, n, n % 2 == 0 ? 1 : -1)
{
}

MilnorLattice::MilnorLattice(int rank_, int n, int sign_)
    : rank(rank_), dim_param(n), sign(sign_)
{
    if (rank < 1) throw std::invalid_argument("MilnorLattice: rank must be >= 1");
    if (n < 2) throw std::invalid_argument("MilnorLattice: dimension parameter must be >= 2");
    if (sign != 1 && sign != -1)
        throw std::invalid_argument("MilnorLattice: sign must be +1 or -1");
}

HomologyClass::HomologyClass(MilnorLattice lattice_, std::vector<Int> coords_)
    : lattice(lattice_), coords(std::move(coords_))
{
    if (coords.size() != static_cast<std::size_t>(lattice.rank))
        throw std::invalid_argument("HomologyClass: coordinate length must equal lattice rank");
}

HomologyClass basis_class(const MilnorLattice& lattice, int j)
{
    if (j < 1 || j > lattice.rank)
        throw std::invalid_argument("basis_class: index out of range");
    std::vector<Int> coords(lattice.rank);
    coords[j - 1] = 1;
    return HomologyClass(lattice, std::move(coords));
}

IntMatrix intersection_form(const MilnorLattice& lattice)
{
    const std::size_t m = lattice.rank;
    IntMatrix omega(m, m);
    for (std::size_t i = 0; i + 1 < m; ++i) {
        omega.at(i, i + 1) = 1;
        omega.at(i + 1, i) = -1;
    }
    return omega;
}

Int intersection(const HomologyClass& c, const HomologyClass& d)
{
    check_same_lattice(c.lattice, d.lattice);
    Int sum = 0;
    const std::size_t m = c.coords.size();
    for (std::size_t i = 0; i + 1 < m; ++i)
        sum += c.coords[i] * d.coords[i + 1] - c.coords[i + 1] * d.coords[i];
    return sum;
}

HomologyClass class_twist_apply(const HomologyClass& c, const HomologyClass& b,
                                long power)
{
    check_same_lattice(c.lattice, b.lattice);
    const Int factor = Int(power) * c.lattice.sign * intersection(c, b);
    HomologyClass out = c;
    for (std::size_t i = 0; i < out.coords.size(); ++i)
        out.coords[i] += factor * b.coords[i];
    return out;
}

IntMatrix transvection_matrix(const HomologyClass& b, long power)
{
    const std::size_t m = b.coords.size();
    IntMatrix t = IntMatrix::identity(m);
    for (std::size_t k = 0; k < m; ++k) {
        // <e_k, b> in 0-based coordinates
        Int pairing = 0;
        if (k + 1 < m) pairing += b.coords[k + 1];
        if (k >= 1) pairing -= b.coords[k - 1];
        if (pairing == 0) continue;
        const Int factor = Int(power) * b.lattice.sign * pairing;
        for (std::size_t r = 0; r < m; ++r) t.at(r, k) += factor * b.coords[r];
    }
    return t;
}

IntMatrix dehn_twist_matrix(int j, const MilnorLattice& lattice, long power)
{
    return transvection_matrix(basis_class(lattice, j), power);
}

IntMatrix rho_matrix(const braid::BraidWord& w, const MilnorLattice& lattice)
{
    if (w.strands != lattice.rank + 1)
        throw std::invalid_argument("rho_matrix: need strands = lattice rank + 1");
    IntMatrix acc = IntMatrix::identity(lattice.rank);
    for (int letter : w.letters) {
        const int j = letter > 0 ? letter : -letter;
        acc = dehn_twist_matrix(j, lattice, letter > 0 ? 1 : -1) * acc;
    }
    return acc;
}

IntMatrix monodromy_of_classes(const MilnorLattice& lattice,
                               const std::vector<HomologyClass>& cycles)
{
    IntMatrix acc = IntMatrix::identity(lattice.rank);
    for (const HomologyClass& c : cycles) {
        check_same_lattice(lattice, c.lattice);
        acc = transvection_matrix(c) * acc;
    }
    return acc;
}

HomologyClass apply_matrix(const IntMatrix& m, const HomologyClass& c)
{
    const std::size_t n = c.coords.size();
    if (m.rows() != n || m.cols() != n)
        throw std::invalid_argument("apply_matrix: dimension mismatch");
    std::vector<Int> out(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            out[i] += m.at(i, j) * c.coords[j];
    return HomologyClass(c.lattice, std::move(out));
}

}  // namespace qpfill::milnor
