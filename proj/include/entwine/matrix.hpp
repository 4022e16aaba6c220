#pragma once

// Dense exact matrices and the tensor-index conventions used everywhere.
//
// A linear map f: V -> W is a (dim W) x (dim V) matrix whose column j is
// f(e_j). A tensor basis vector e_i (x) e_j of V (x) W has index
// i * dim W + j, and longer tensors nest the same way (row-major).

#include "entwine/scalar.hpp"

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <numeric>
#include <span>
#include <string>
#include <vector>

namespace entwine {

class Matrix {
public:
    Matrix() : field_(Field::rationals()) {}

    Matrix(Field f, std::size_t rows, std::size_t cols)
        : field_(f), rows_(rows), cols_(cols), data_(rows * cols)
    {
    }

    static Matrix identity(Field f, std::size_t n)
    {
        Matrix m(f, n, n);
        for (std::size_t i = 0; i < n; ++i)
            m.data_[i * n + i] = 1;
        return m;
    }

    /// Small literal matrices, entries reduced into the field.
    static Matrix from_rows(Field f, std::initializer_list<std::initializer_list<long>> rows)
    {
        std::size_t r = rows.size();
        std::size_t c = r ? rows.begin()->size() : 0;
        Matrix m(f, r, c);
        std::size_t i = 0;
        for (auto &row : rows) {
            if (row.size() != c)
                throw input_error("ragged matrix literal");
            std::size_t j = 0;
            for (long v : row)
                m.set(i, j++, f.from_int(v));
            ++i;
        }
        return m;
    }

    /// Column vector.
    static Matrix vector(Field f, std::span<const Scalar> v)
    {
        Matrix m(f, v.size(), 1);
        for (std::size_t i = 0; i < v.size(); ++i)
            m.set(i, 0, v[i]);
        return m;
    }

    static Matrix unit_vector(Field f, std::size_t n, std::size_t i)
    {
        Matrix m(f, n, 1);
        m.data_.at(i) = 1;
        return m;
    }

    Field field() const { return field_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool empty() const { return rows_ == 0 || cols_ == 0; }

    const Scalar &operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    void set(std::size_t i, std::size_t j, const Scalar &v)
    {
        data_[i * cols_ + j] = field_.is_rational() ? v : field_.reduce(v);
    }

    void add(std::size_t i, std::size_t j, const Scalar &v)
    {
        Scalar &e = data_[i * cols_ + j];
        e = field_.add(e, v);
    }

    bool is_zero() const
    {
        return std::all_of(data_.begin(), data_.end(), [](const Scalar &s) { return s == 0; });
    }

    friend bool operator==(const Matrix &a, const Matrix &b)
    {
        return a.field_ == b.field_ && a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }

    Matrix transpose() const
    {
        Matrix t(field_, cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j)
                t.data_[j * rows_ + i] = data_[i * cols_ + j];
        return t;
    }

    Matrix column(std::size_t j) const
    {
        Matrix c(field_, rows_, 1);
        for (std::size_t i = 0; i < rows_; ++i)
            c.data_[i] = (*this)(i, j);
        return c;
    }

    Matrix row(std::size_t i) const
    {
        Matrix r(field_, 1, cols_);
        for (std::size_t j = 0; j < cols_; ++j)
            r.data_[j] = (*this)(i, j);
        return r;
    }

    /// Rows [r0, r0+nr) x columns [c0, c0+nc).
    Matrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const
    {
        Matrix b(field_, nr, nc);
        for (std::size_t i = 0; i < nr; ++i)
            for (std::size_t j = 0; j < nc; ++j)
                b.data_[i * nc + j] = (*this)(r0 + i, c0 + j);
        return b;
    }

    void set_column(std::size_t j, const Matrix &v)
    {
        for (std::size_t i = 0; i < rows_; ++i)
            data_[i * cols_ + j] = v(i, 0);
    }

    /// Flattens row-major into a column vector (Hom(V,W) ~ W (x) V*).
    Matrix vec() const
    {
        Matrix v(field_, rows_ * cols_, 1);
        v.data_ = data_;
        return v;
    }

    /// Inverse of vec().
    static Matrix unvec(const Matrix &v, std::size_t rows, std::size_t cols)
    {
        if (v.rows() * v.cols() != rows * cols)
            throw input_error("unvec: size mismatch");
        Matrix m(v.field_, rows, cols);
        m.data_ = v.data_;
        return m;
    }

    Matrix operator+(const Matrix &o) const
    {
        check_same_shape(o, "+");
        Matrix r(field_, rows_, cols_);
        for (std::size_t k = 0; k < data_.size(); ++k)
            r.data_[k] = field_.add(data_[k], o.data_[k]);
        return r;
    }

    Matrix operator-(const Matrix &o) const
    {
        check_same_shape(o, "-");
        Matrix r(field_, rows_, cols_);
        for (std::size_t k = 0; k < data_.size(); ++k)
            r.data_[k] = field_.sub(data_[k], o.data_[k]);
        return r;
    }

    Matrix operator-() const
    {
        Matrix r(field_, rows_, cols_);
        for (std::size_t k = 0; k < data_.size(); ++k)
            r.data_[k] = field_.neg(data_[k]);
        return r;
    }

    Matrix scaled(const Scalar &s) const
    {
        Matrix r(field_, rows_, cols_);
        for (std::size_t k = 0; k < data_.size(); ++k)
            r.data_[k] = field_.mul(data_[k], s);
        return r;
    }

    // Zero entries are skipped; most structure-constant matrices are sparse.
    Matrix operator*(const Matrix &o) const
    {
        if (!(field_ == o.field_))
            throw input_error("matrix product across different fields");
        if (cols_ != o.rows_)
            throw input_error("matrix product: " + shape() + " * " + o.shape());
        Matrix r(field_, rows_, o.cols_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t k = 0; k < cols_; ++k) {
                const Scalar &a = data_[i * cols_ + k];
                if (a == 0)
                    continue;
                for (std::size_t j = 0; j < o.cols_; ++j) {
                    const Scalar &b = o.data_[k * o.cols_ + j];
                    if (b == 0)
                        continue;
                    Scalar &e = r.data_[i * o.cols_ + j];
                    e = field_.add(e, field_.mul(a, b));
                }
            }
        return r;
    }

    std::string shape() const { return std::to_string(rows_) + "x" + std::to_string(cols_); }

private:
    void check_same_shape(const Matrix &o, const char *op) const
    {
        if (!(field_ == o.field_) || rows_ != o.rows_ || cols_ != o.cols_)
            throw input_error(std::string("matrix ") + op + ": " + shape() + " vs " + o.shape());
    }

    Field field_;
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Scalar> data_;
};

inline Matrix kron(const Matrix &a, const Matrix &b)
{
    if (!(a.field() == b.field()))
        throw input_error("kron across different fields");
    Matrix r(a.field(), a.rows() * b.rows(), a.cols() * b.cols());
    const Field f = a.field();
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) {
            const Scalar &x = a(i, j);
            if (x == 0)
                continue;
            for (std::size_t k = 0; k < b.rows(); ++k)
                for (std::size_t l = 0; l < b.cols(); ++l)
                    if (b(k, l) != 0)
                        r.set(i * b.rows() + k, j * b.cols() + l, f.mul(x, b(k, l)));
        }
    return r;
}

inline Matrix kron(std::initializer_list<Matrix> factors)
{
    auto it = factors.begin();
    Matrix r = *it++;
    for (; it != factors.end(); ++it)
        r = kron(r, *it);
    return r;
}

inline Matrix hstack(const Matrix &a, const Matrix &b)
{
    if (a.rows() != b.rows())
        throw input_error("hstack: row mismatch");
    Matrix r(a.field(), a.rows(), a.cols() + b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j)
            r.set(i, j, a(i, j));
        for (std::size_t j = 0; j < b.cols(); ++j)
            r.set(i, a.cols() + j, b(i, j));
    }
    return r;
}

inline Matrix vstack(const Matrix &a, const Matrix &b)
{
    if (a.cols() != b.cols())
        throw input_error("vstack: column mismatch");
    Matrix r(a.field(), a.rows() + b.rows(), a.cols());
    for (std::size_t j = 0; j < a.cols(); ++j) {
        for (std::size_t i = 0; i < a.rows(); ++i)
            r.set(i, j, a(i, j));
        for (std::size_t i = 0; i < b.rows(); ++i)
            r.set(a.rows() + i, j, b(i, j));
    }
    return r;
}

/// Mixed-radix index for V_0 (x) ... (x) V_{k-1}.
struct TensorShape {
    std::vector<std::size_t> dims;

    std::size_t size() const
    {
        return std::accumulate(dims.begin(), dims.end(), std::size_t{1}, std::multiplies<>());
    }

    std::size_t encode(std::span<const std::size_t> idx) const
    {
        std::size_t r = 0;
        for (std::size_t k = 0; k < dims.size(); ++k)
            r = r * dims[k] + idx[k];
        return r;
    }

    std::vector<std::size_t> decode(std::size_t flat) const
    {
        std::vector<std::size_t> idx(dims.size());
        for (std::size_t k = dims.size(); k-- > 0;) {
            idx[k] = flat % dims[k];
            flat /= dims[k];
        }
        return idx;
    }
};

/// The map V_0 (x) ... (x) V_{k-1} -> V_{perm[0]} (x) ... (x) V_{perm[k-1]}
/// that reorders tensor factors.
inline Matrix permute_factors(Field f, std::vector<std::size_t> dims, std::vector<std::size_t> perm)
{
    if (perm.size() != dims.size())
        throw input_error("permute_factors: arity mismatch");
    TensorShape in{dims};
    TensorShape out;
    for (std::size_t p : perm)
        out.dims.push_back(dims.at(p));
    Matrix m(f, out.size(), in.size());
    std::vector<std::size_t> oidx(perm.size());
    for (std::size_t flat = 0; flat < in.size(); ++flat) {
        auto idx = in.decode(flat);
        for (std::size_t k = 0; k < perm.size(); ++k)
            oidx[k] = idx[perm[k]];
        m.set(out.encode(oidx), flat, f.one());
    }
    return m;
}

/// V (x) W -> W (x) V.
inline Matrix swap_factors(Field f, std::size_t dv, std::size_t dw)
{
    return permute_factors(f, {dv, dw}, {1, 0});
}

/// 1 x 1 matrix holding s.
inline Matrix scalar_matrix(Field f, const Scalar &s)
{
    Matrix m(f, 1, 1);
    m.set(0, 0, s);
    return m;
}

} // namespace entwine
