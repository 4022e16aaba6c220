#pragma once

// Gaussian elimination, exact solving and subspace arithmetic.
//
// Subspaces are stored as the reduced row-echelon form of a spanning set,
// which is unique for the subspace; equality of subspaces is equality of
// their RREF matrices.

#include "entwine/matrix.hpp"

#include <optional>
#include <vector>

namespace entwine {

struct Rref {
    Matrix reduced;
    std::vector<std::size_t> pivots; // pivot column of each nonzero row
};

inline Rref rref(Matrix m)
{
    const Field f = m.field();
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
        std::size_t p = r;
        while (p < m.rows() && m(p, c) == 0)
            ++p;
        if (p == m.rows())
            continue;
        if (p != r)
            for (std::size_t j = 0; j < m.cols(); ++j) {
                Scalar t = m(r, j);
                m.set(r, j, m(p, j));
                m.set(p, j, t);
            }
        Scalar inv = f.inv(m(r, c));
        for (std::size_t j = c; j < m.cols(); ++j)
            if (m(r, j) != 0)
                m.set(r, j, f.mul(m(r, j), inv));
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == r || m(i, c) == 0)
                continue;
            Scalar factor = m(i, c);
            for (std::size_t j = c; j < m.cols(); ++j)
                if (m(r, j) != 0)
                    m.set(i, j, f.sub(m(i, j), f.mul(factor, m(r, j))));
        }
        pivots.push_back(c);
        ++r;
    }
    Matrix reduced = m.block(0, 0, r, m.cols());
    return {std::move(reduced), std::move(pivots)};
}

inline std::size_t rank(const Matrix &m) { return rref(m).pivots.size(); }

class Subspace {
public:
    /// The zero subspace of the given ambient dimension.
    Subspace(Field f, std::size_t ambient) : basis_(f, 0, ambient) {}

    /// Span of the rows of `rows`.
    static Subspace row_span(const Matrix &rows)
    {
        Rref r = rref(rows);
        Subspace s(rows.field(), rows.cols());
        s.basis_ = std::move(r.reduced);
        s.pivots_ = std::move(r.pivots);
        return s;
    }

    /// Span of the columns of `cols`.
    static Subspace column_span(const Matrix &cols) { return row_span(cols.transpose()); }

    static Subspace full(Field f, std::size_t n) { return row_span(Matrix::identity(f, n)); }

    Field field() const { return basis_.field(); }
    std::size_t ambient() const { return basis_.cols(); }
    std::size_t dim() const { return basis_.rows(); }

    /// RREF basis, one vector per row.
    const Matrix &basis() const { return basis_; }
    /// Same basis as columns: the inclusion map into the ambient space.
    Matrix inclusion() const { return basis_.transpose(); }
    const std::vector<std::size_t> &pivots() const { return pivots_; }

    friend bool operator==(const Subspace &a, const Subspace &b) { return a.basis_ == b.basis_; }

    /// Coordinates of a column vector with respect to basis(); nullopt when v
    /// is not in the subspace.
    std::optional<Matrix> coordinates(const Matrix &v) const
    {
        if (v.rows() != ambient() || v.cols() != 1)
            throw input_error("coordinates: vector of size " + v.shape() + " in ambient " +
                              std::to_string(ambient()));
        Matrix c(field(), dim(), 1);
        for (std::size_t i = 0; i < dim(); ++i)
            c.set(i, 0, v(pivots_[i], 0));
        if (!(inclusion() * c == v))
            return std::nullopt;
        return c;
    }

    bool contains(const Matrix &v) const { return coordinates(v).has_value(); }

    /// Coordinates of every column of m, or nullopt if some column escapes.
    std::optional<Matrix> coordinates_of_columns(const Matrix &m) const
    {
        Matrix c(field(), dim(), m.cols());
        for (std::size_t j = 0; j < m.cols(); ++j) {
            auto cj = coordinates(m.column(j));
            if (!cj)
                return std::nullopt;
            c.set_column(j, *cj);
        }
        return c;
    }

    bool contains_columns(const Matrix &m) const { return coordinates_of_columns(m).has_value(); }

private:
    Matrix basis_;
    std::vector<std::size_t> pivots_;
};

/// {x : m x = 0}
inline Subspace kernel(const Matrix &m)
{
    const Field f = m.field();
    Rref r = rref(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (std::size_t p : r.pivots)
        is_pivot[p] = true;
    std::size_t nfree = m.cols() - r.pivots.size();
    Matrix vecs(f, nfree, m.cols());
    std::size_t k = 0;
    for (std::size_t c = 0; c < m.cols(); ++c) {
        if (is_pivot[c])
            continue;
        vecs.set(k, c, f.one());
        for (std::size_t i = 0; i < r.pivots.size(); ++i)
            if (r.reduced(i, c) != 0)
                vecs.set(k, r.pivots[i], f.neg(r.reduced(i, c)));
        ++k;
    }
    return Subspace::row_span(vecs);
}

/// Column space of m.
inline Subspace image(const Matrix &m) { return Subspace::column_span(m); }

inline Subspace sum(const Subspace &a, const Subspace &b)
{
    if (a.ambient() != b.ambient())
        throw input_error("subspace sum: ambient mismatch");
    return Subspace::row_span(vstack(a.basis(), b.basis()));
}

inline Subspace intersect(const Subspace &a, const Subspace &b)
{
    if (a.ambient() != b.ambient())
        throw input_error("intersect: ambient mismatch");
    // x = A^T u = B^T v  <=>  [A^T | -B^T] (u, v) = 0
    Matrix sys = hstack(a.inclusion(), -b.inclusion());
    Subspace k = kernel(sys);
    if (k.dim() == 0)
        return Subspace(a.field(), a.ambient());
    Matrix u = k.basis().block(0, 0, k.dim(), a.dim()).transpose();
    return Subspace::column_span(a.inclusion() * u);
}

/// {x : m x in v}
inline Subspace preimage(const Matrix &m, const Subspace &v)
{
    if (m.rows() != v.ambient())
        throw input_error("preimage: map codomain " + std::to_string(m.rows()) +
                          " vs ambient " + std::to_string(v.ambient()));
    // annihilator of v: rows phi with phi . b = 0 for every basis vector b
    Subspace ann = kernel(v.basis());
    if (ann.dim() == 0)
        return Subspace::full(m.field(), m.cols());
    return kernel(ann.basis() * m);
}

struct Solution {
    bool consistent = false;
    Matrix particular; // free variables set to zero
    Subspace kernel;   // of the coefficient matrix
};

/// Solves a X = b column by column.
inline Solution solve_linear(const Matrix &a, const Matrix &b)
{
    if (a.rows() != b.rows())
        throw input_error("solve_linear: " + a.shape() + " against right side " + b.shape());
    const Field f = a.field();
    Rref r = rref(hstack(a, b));
    Solution s{false, Matrix(f, a.cols(), b.cols()), kernel(a)};
    for (std::size_t p : r.pivots)
        if (p >= a.cols())
            return s;
    s.consistent = true;
    for (std::size_t i = 0; i < r.pivots.size(); ++i)
        for (std::size_t j = 0; j < b.cols(); ++j)
            s.particular.set(r.pivots[i], j, r.reduced(i, a.cols() + j));
    return s;
}

inline std::optional<Matrix> inverse(const Matrix &m)
{
    if (m.rows() != m.cols())
        return std::nullopt;
    Solution s = solve_linear(m, Matrix::identity(m.field(), m.rows()));
    if (!s.consistent || s.kernel.dim() != 0)
        return std::nullopt;
    return s.particular;
}

} // namespace entwine
