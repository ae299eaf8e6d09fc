#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "qpfill/milnor.hpp"

#include <random>

using namespace qpfill;
using namespace qpfill::milnor;

namespace {

braid::BraidWord random_word(std::mt19937& rng, int strands, std::size_t max_len)
{
    std::uniform_int_distribution<std::size_t> len(0, max_len);
    std::uniform_int_distribution<int> gen(1, strands - 1);
    std::uniform_int_distribution<int> sign(0, 1);
    std::vector<int> letters;
    const std::size_t n = len(rng);
    for (std::size_t i = 0; i < n; ++i) {
        const int g = gen(rng);
        letters.push_back(sign(rng) ? g : -g);
    }
    return braid::BraidWord(strands, std::move(letters));
}

IntMatrix matrix_power(const IntMatrix& m, long p)
{
    IntMatrix acc = IntMatrix::identity(m.rows());
    for (long i = 0; i < (p >= 0 ? p : -p); ++i) acc = acc * m;
    return acc;
}

}  // namespace

TEST_CASE("lattice sign is determined by the dimension parameter")
{
    CHECK(MilnorLattice(4, 2).sign == 1);
    CHECK(MilnorLattice(4, 3).sign == -1);
    CHECK(MilnorLattice(4, 4).sign == 1);
    CHECK(MilnorLattice(4, 3, 1).sign == 1);  // explicit override
    CHECK_THROWS_AS(MilnorLattice(4, 1), std::invalid_argument);
    CHECK_THROWS_AS(MilnorLattice(4, 2, 0), std::invalid_argument);
}

TEST_CASE("intersection form values")
{
    const MilnorLattice lat(4, 2);
    CHECK(intersection(basis_class(lat, 1), basis_class(lat, 2)) == 1);
    CHECK(intersection(basis_class(lat, 2), basis_class(lat, 1)) == -1);
    CHECK(intersection(basis_class(lat, 1), basis_class(lat, 3)) == 0);

    std::mt19937 rng(99);
    std::uniform_int_distribution<int> entry(-5, 5);
    for (int iter = 0; iter < 100; ++iter) {
        std::vector<Int> coords(4);
        for (Int& v : coords) v = entry(rng);
        const HomologyClass c(lat, coords);
        CHECK(intersection(c, c) == 0);
    }

    const MilnorLattice other(5, 2);
    CHECK_THROWS_AS(intersection(basis_class(lat, 1), basis_class(other, 1)),
                    std::invalid_argument);
}

TEST_CASE("class twist basics")
{
    const MilnorLattice lat(4, 2);  // s = +1
    const HomologyClass e1 = basis_class(lat, 1);
    const HomologyClass e2 = basis_class(lat, 2);
    const HomologyClass e4 = basis_class(lat, 4);

    CHECK(class_twist_apply(e2, e4, 3) == e2);  // orthogonal pair
    CHECK(class_twist_apply(e2, e1, 1) ==
          HomologyClass(lat, {-1, 1, 0, 0}));  // <e2,e1> = -1
}

TEST_CASE("iterated twists produce the displayed twisted class")
{
    for (int n : {2, 3}) {
        const MilnorLattice lat(4, n);
        const Int s = lat.sign;
        for (long k : {0L, 1L, 5L}) {
            const HomologyClass b1 = class_twist_apply(
                class_twist_apply(basis_class(lat, 2), basis_class(lat, 1), 1),
                basis_class(lat, 3), k + 2);
            CHECK(b1 == HomologyClass(lat, {-s, 1, (k + 2) * s, 0}));
        }
    }
}

TEST_CASE("dehn twist matrix on the rank-2 lattice")
{
    const MilnorLattice lat(2, 2);
    const IntMatrix t = dehn_twist_matrix(1, lat);
    CHECK(t == IntMatrix(2, 2, {Int(1), Int(-1), Int(0), Int(1)}));
    CHECK_THROWS_AS(dehn_twist_matrix(3, lat), std::invalid_argument);
}

TEST_CASE("twist matrices are unipotent symplectic transvections")
{
    for (int m = 2; m <= 6; ++m)
        for (int n : {2, 3}) {
            const MilnorLattice lat(m, n);
            const IntMatrix omega = intersection_form(lat);
            for (int j = 1; j <= m; ++j) {
                const IntMatrix t = dehn_twist_matrix(j, lat);
                const IntMatrix nil = t - IntMatrix::identity(m);
                CHECK((nil * nil) == IntMatrix(m, m));
                CHECK(t.transposed() * omega * t == omega);
                CHECK(dehn_twist_matrix(j, lat, -1) * t == IntMatrix::identity(m));
            }
        }
}

TEST_CASE("class_twist_apply agrees with iterated matrix application")
{
    std::mt19937 rng(2718);
    std::uniform_int_distribution<int> entry(-3, 3);
    std::uniform_int_distribution<long> pw(-10, 10);
    for (int iter = 0; iter < 200; ++iter) {
        const MilnorLattice lat(4, iter % 2 == 0 ? 2 : 3);
        std::vector<Int> cc(4), bc(4);
        for (Int& v : cc) v = entry(rng);
        for (Int& v : bc) v = entry(rng);
        const HomologyClass c(lat, cc), b(lat, bc);
        const long p = pw(rng);
        CHECK(class_twist_apply(c, b, p) ==
              apply_matrix(matrix_power(transvection_matrix(b), p >= 0 ? p : 0) *
                               matrix_power(transvection_matrix(b, -1), p < 0 ? -p : 0),
                           c));
    }
}

TEST_CASE("rho is an anti-homomorphism preserving the form")
{
    std::mt19937 rng(31415);
    for (int m = 2; m <= 5; ++m) {
        const MilnorLattice lat(m, 2);
        const IntMatrix omega = intersection_form(lat);
        for (int iter = 0; iter < 100; ++iter) {
            const braid::BraidWord u = random_word(rng, m + 1, 6);
            const braid::BraidWord v = random_word(rng, m + 1, 6);
            const IntMatrix mu = rho_matrix(u, lat);
            const IntMatrix mv = rho_matrix(v, lat);
            CHECK(rho_matrix(concat(u, v), lat) == mv * mu);
            CHECK(mu.transposed() * omega * mu == omega);
            CHECK(mu.determinant() == 1);
            CHECK(rho_matrix(inverse(u), lat) * mu == IntMatrix::identity(m));
        }
    }
}

TEST_CASE("rho respects the braid relation")
{
    const MilnorLattice lat(4, 3);
    for (int j = 1; j <= 2; ++j)
        CHECK(rho_matrix(braid::BraidWord(5, {j, j + 1, j}), lat) ==
              rho_matrix(braid::BraidWord(5, {j + 1, j, j + 1}), lat));
    CHECK(rho_matrix(braid::BraidWord(5), lat) == IntMatrix::identity(4));
    CHECK_THROWS_AS(rho_matrix(braid::BraidWord(4, {1}), lat), std::invalid_argument);
}

TEST_CASE("conjugation identity at the matrix level")
{
    std::mt19937 rng(161803);
    const MilnorLattice lat(4, 2);
    for (int iter = 0; iter < 200; ++iter) {
        const braid::BraidWord gamma = random_word(rng, 5, 6);
        std::uniform_int_distribution<int> pick(1, 4);
        const int j = pick(rng);
        const IntMatrix phi = rho_matrix(gamma, lat);
        const IntMatrix lhs =
            rho_matrix(conjugate(braid::BraidWord(5, {j}), gamma), lat);
        CHECK(lhs * phi == phi * dehn_twist_matrix(j, lat));
        // Equivalently, lhs is the transvection along phi(e_j).
        CHECK(lhs == transvection_matrix(apply_matrix(phi, basis_class(lat, j))));
    }
}

TEST_CASE("monodromy of classes composes first-to-last")
{
    const MilnorLattice lat(4, 2);
    CHECK(monodromy_of_classes(lat, {basis_class(lat, 2)}) ==
          dehn_twist_matrix(2, lat));
    CHECK(monodromy_of_classes(lat, {basis_class(lat, 1), basis_class(lat, 2)}) ==
          dehn_twist_matrix(2, lat) * dehn_twist_matrix(1, lat));
    // Orthogonal cycles commute.
    CHECK(monodromy_of_classes(lat, {basis_class(lat, 1), basis_class(lat, 4)}) ==
          monodromy_of_classes(lat, {basis_class(lat, 4), basis_class(lat, 1)}));
    CHECK(monodromy_of_classes(lat, {}) == IntMatrix::identity(4));
}

TEST_CASE("opposite signs are conjugate by the alternating diagonal")
{
    // D = diag((-1)^i) intertwines the two sign conventions, so downstream
    // abelian invariants cannot depend on the sign.
    for (int m = 2; m <= 5; ++m) {
        const MilnorLattice plus(m, 2, 1), minus(m, 2, -1);
        IntMatrix d(m, m);
        for (int i = 0; i < m; ++i) d.at(i, i) = (i % 2 == 0) ? -1 : 1;
        std::mt19937 rng(55);
        for (int iter = 0; iter < 50; ++iter) {
            const braid::BraidWord w = random_word(rng, m + 1, 8);
            CHECK(rho_matrix(w, minus) * d == d * rho_matrix(w, plus));
        }
    }
}
