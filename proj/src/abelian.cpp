#include "qpfill/abelian.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

namespace qpfill {

IntMatrix IntMatrix::identity(std::size_t n)
{
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

IntMatrix IntMatrix::operator*(const IntMatrix& rhs) const
{
    if (cols_ != rhs.rows_)
        throw std::invalid_argument("IntMatrix: dimension mismatch in product");
    IntMatrix out(rows_, rhs.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            const Int& a = at(i, k);
            if (a == 0) continue;
            for (std::size_t j = 0; j < rhs.cols_; ++j)
                out.at(i, j) += a * rhs.at(k, j);
        }
    return out;
}

IntMatrix IntMatrix::operator-(const IntMatrix& rhs) const
{
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_)
        throw std::invalid_argument("IntMatrix: dimension mismatch in difference");
    IntMatrix out(rows_, cols_);
    for (std::size_t i = 0; i < entries_.size(); ++i)
        out.entries_[i] = entries_[i] - rhs.entries_[i];
    return out;
}

IntMatrix IntMatrix::transposed() const
{
    IntMatrix out(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            out.at(j, i) = at(i, j);
    return out;
}

Int IntMatrix::determinant() const
{
    if (rows_ != cols_)
        throw std::invalid_argument("IntMatrix: determinant of non-square matrix");
    const std::size_t n = rows_;
    if (n == 0) return 1;
    IntMatrix a = *this;
    Int prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a.at(k, k) == 0) {
            std::size_t p = k + 1;
            while (p < n && a.at(p, k) == 0) ++p;
            if (p == n) return 0;
            for (std::size_t j = 0; j < n; ++j) std::swap(a.at(k, j), a.at(p, j));
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j)
                a.at(i, j) = (a.at(i, j) * a.at(k, k) - a.at(i, k) * a.at(k, j)) / prev;
        prev = a.at(k, k);
    }
    return sign > 0 ? a.at(n - 1, n - 1) : -a.at(n - 1, n - 1);
}

bool IntMatrix::is_identity() const
{
    if (rows_ != cols_) return false;
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            if (at(i, j) != (i == j ? 1 : 0)) return false;
    return true;
}

namespace {

// Elementary operations applied in lockstep to the working matrix and the
// accumulated unimodular factor.
struct SnfState {
    IntMatrix d, u, v;

    void row_swap(std::size_t i, std::size_t j)
    {
        for (std::size_t c = 0; c < d.cols(); ++c) std::swap(d.at(i, c), d.at(j, c));
        for (std::size_t c = 0; c < u.cols(); ++c) std::swap(u.at(i, c), u.at(j, c));
    }
    void col_swap(std::size_t i, std::size_t j)
    {
        for (std::size_t r = 0; r < d.rows(); ++r) std::swap(d.at(r, i), d.at(r, j));
        for (std::size_t r = 0; r < v.rows(); ++r) std::swap(v.at(r, i), v.at(r, j));
    }
    // row_i += q * row_j
    void row_addmul(std::size_t i, std::size_t j, const Int& q)
    {
        for (std::size_t c = 0; c < d.cols(); ++c) d.at(i, c) += q * d.at(j, c);
        for (std::size_t c = 0; c < u.cols(); ++c) u.at(i, c) += q * u.at(j, c);
    }
    // col_i += q * col_j
    void col_addmul(std::size_t i, std::size_t j, const Int& q)
    {
        for (std::size_t r = 0; r < d.rows(); ++r) d.at(r, i) += q * d.at(r, j);
        for (std::size_t r = 0; r < v.rows(); ++r) v.at(r, i) += q * v.at(r, j);
    }
    void row_negate(std::size_t i)
    {
        for (std::size_t c = 0; c < d.cols(); ++c) d.at(i, c) = -d.at(i, c);
        for (std::size_t c = 0; c < u.cols(); ++c) u.at(i, c) = -u.at(i, c);
    }
};

}  // namespace

SmithDecomposition smith_normal_form(const IntMatrix& m)
{
    const std::size_t nrows = m.rows(), ncols = m.cols();
    SnfState s{m, IntMatrix::identity(nrows), IntMatrix::identity(ncols)};

    const std::size_t bound = std::min(nrows, ncols);
    for (std::size_t t = 0; t < bound; ++t) {
        // Pick the nonzero entry of smallest magnitude in the trailing block
        // to keep intermediate growth down (Kannan-Bachem style pivoting).
        std::size_t pr = t, pc = t;
        bool found = false;
        for (std::size_t i = t; i < nrows; ++i)
            for (std::size_t j = t; j < ncols; ++j) {
                const Int& e = s.d.at(i, j);
                if (e == 0) continue;
                if (!found || abs(e) < abs(s.d.at(pr, pc))) {
                    pr = i;
                    pc = j;
                    found = true;
                }
            }
        if (!found) break;
        if (pr != t) s.row_swap(pr, t);
        if (pc != t) s.col_swap(pc, t);

        for (;;) {
            // Euclidean clearing of column t below the pivot.
            for (std::size_t i = t + 1; i < nrows; ++i)
                while (s.d.at(i, t) != 0) {
                    Int q = s.d.at(i, t) / s.d.at(t, t);
                    s.row_addmul(i, t, -q);
                    if (s.d.at(i, t) != 0) s.row_swap(i, t);
                }
            // Euclidean clearing of row t to the right of the pivot.
            for (std::size_t j = t + 1; j < ncols; ++j)
                while (s.d.at(t, j) != 0) {
                    Int q = s.d.at(t, j) / s.d.at(t, t);
                    s.col_addmul(j, t, -q);
                    if (s.d.at(t, j) != 0) s.col_swap(j, t);
                }
            // Column swaps above may have reintroduced entries in column t.
            bool dirty = false;
            for (std::size_t i = t + 1; i < nrows && !dirty; ++i)
                if (s.d.at(i, t) != 0) dirty = true;
            if (dirty) continue;

            // Force the pivot to divide the whole trailing block so that the
            // diagonal comes out as a divisibility chain.
            bool fixed = false;
            for (std::size_t i = t + 1; i < nrows && !fixed; ++i)
                for (std::size_t j = t + 1; j < ncols && !fixed; ++j)
                    if (s.d.at(i, j) % s.d.at(t, t) != 0) {
                        s.row_addmul(t, i, 1);
                        fixed = true;
                    }
            if (!fixed) break;
        }
    }
    for (std::size_t t = 0; t < bound; ++t)
        if (s.d.at(t, t) < 0) s.row_negate(t);

    return {std::move(s.d), std::move(s.u), std::move(s.v)};
}

AbelianInvariants cokernel_invariants(const IntMatrix& relations)
{
    const SmithDecomposition snf = smith_normal_form(relations);
    const std::size_t bound = std::min(relations.rows(), relations.cols());
    AbelianInvariants out;
    std::size_t rank = 0;
    for (std::size_t t = 0; t < bound; ++t) {
        const Int& d = snf.d.at(t, t);
        if (d == 0) break;
        ++rank;
        if (d > 1) out.torsion.push_back(d);
    }
    out.free_rank = relations.cols() - rank;
    return out;
}

bool groups_isomorphic(const AbelianInvariants& a, const AbelianInvariants& b)
{
    return a == b;
}

std::string to_string(const AbelianInvariants& g)
{
    std::ostringstream os;
    if (g.is_trivial()) return "0";
    bool first = true;
    if (g.free_rank > 0) {
        os << "Z";
        if (g.free_rank > 1) os << "^" << g.free_rank;
        first = false;
    }
    for (const Int& d : g.torsion) {
        if (!first) os << " + ";
        os << "Z/" << d;
        first = false;
    }
    return os.str();
}

}  // namespace qpfill
