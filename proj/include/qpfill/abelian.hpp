#pragma once

// Exact integer matrix algebra and classification of finitely presented
// abelian groups via Smith normal form.
//
// Convention used everywhere in this project: a finitely presented abelian
// group is given by a relation matrix whose ROWS are relations among the
// standard generators of Z^cols.

#include <boost/multiprecision/cpp_int.hpp>

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace qpfill {

using Int = boost::multiprecision::cpp_int;

// Thrown when a configurable resource cap (word length, orbit size) is hit.
class ResourceError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Dense matrix over Z with arbitrary-precision entries, row-major.
class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), entries_(rows * cols) {}
    IntMatrix(std::size_t rows, std::size_t cols, std::vector<Int> entries)
        : rows_(rows), cols_(cols), entries_(std::move(entries))
    {
        if (entries_.size() != rows_ * cols_)
            throw std::invalid_argument("IntMatrix: entry count does not match dimensions");
    }

    static IntMatrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Int& at(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
    const Int& at(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }

    IntMatrix operator*(const IntMatrix& rhs) const;
    IntMatrix operator-(const IntMatrix& rhs) const;
    IntMatrix transposed() const;

    // Fraction-free (Bareiss) determinant; square matrices only.
    Int determinant() const;

    bool is_identity() const;

    bool operator==(const IntMatrix&) const = default;

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<Int> entries_;
};

// U * input * V = d with U, V unimodular and d diagonal, d_1 | d_2 | ...,
// every diagonal entry >= 0.
struct SmithDecomposition {
    IntMatrix d;
    IntMatrix u;  // row operations, rows x rows
    IntMatrix v;  // column operations, cols x cols
};

SmithDecomposition smith_normal_form(const IntMatrix& m);

// Isomorphism class of a finitely generated abelian group:
// Z^free_rank + Z/d_1 + ... with d_1 | d_2 | ..., every d_i >= 2.
struct AbelianInvariants {
    std::size_t free_rank = 0;
    std::vector<Int> torsion;

    bool is_trivial() const { return free_rank == 0 && torsion.empty(); }
    bool operator==(const AbelianInvariants&) const = default;
};

// Invariants of Z^cols modulo the row span of `relations`.
AbelianInvariants cokernel_invariants(const IntMatrix& relations);

bool groups_isomorphic(const AbelianInvariants& a, const AbelianInvariants& b);

std::string to_string(const AbelianInvariants& g);

}  // namespace qpfill
