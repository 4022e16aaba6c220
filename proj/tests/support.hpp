#pragma once

// Shared helpers for the test suites: random instances and small oracles
// written independently of the library's own constructions.

#include "entwine/catalog.hpp"

#include <random>

namespace testing_support {

using namespace entwine;

inline Matrix random_matrix(Field f, std::mt19937 &rng, std::size_t r, std::size_t c)
{
    Matrix m(f, r, c);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j)
            m.set(i, j, f.random(rng));
    return m;
}

inline Matrix random_invertible(Field f, std::mt19937 &rng, std::size_t n)
{
    for (;;) {
        Matrix m = random_matrix(f, rng, n, n);
        if (inverse(m))
            return m;
    }
}

/// k^n with grouplike basis.
inline Coalgebra grouplike_coalgebra(Field f, std::size_t n)
{
    std::vector<Triple> t;
    for (std::size_t i = 0; i < n; ++i)
        t.push_back({i, i, i, 1});
    return make_coalgebra(f, n, t, std::vector<Scalar>(n, Scalar(1)));
}

/// Functions on C_n: Delta(d_x) = sum_{y+z=x} d_y (x) d_z, eps(d_x) = [x = 0].
inline Coalgebra cyclic_function_coalgebra(Field f, std::size_t n)
{
    std::vector<Triple> t;
    for (std::size_t y = 0; y < n; ++y)
        for (std::size_t z = 0; z < n; ++z)
            t.push_back({(y + z) % n, y, z, 1});
    std::vector<Scalar> eps(n, Scalar(0));
    eps[0] = 1;
    return make_coalgebra(f, n, t, eps);
}

/// Divided powers: Delta(d_n) = sum_{i+j=n} d_i (x) d_j.
inline Coalgebra divided_power_coalgebra(Field f, std::size_t n)
{
    std::vector<Triple> t;
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t i = 0; i <= k; ++i)
            t.push_back({k, i, k - i, 1});
    std::vector<Scalar> eps(n, Scalar(0));
    eps[0] = 1;
    return make_coalgebra(f, n, t, eps);
}

inline Coalgebra random_small_coalgebra(Field f, std::mt19937 &rng, std::size_t max_dim)
{
    std::uniform_int_distribution<int> kind(0, 2);
    std::uniform_int_distribution<std::size_t> dim(1, max_dim);
    std::size_t n = dim(rng);
    switch (kind(rng)) {
    case 0: return grouplike_coalgebra(f, n);
    case 1: return cyclic_function_coalgebra(f, n);
    default: return divided_power_coalgebra(f, n);
    }
}

/// Transports an algebra along a change of basis t (new basis vectors are the
/// columns of t in old coordinates).
inline Algebra change_basis(const Algebra &a, const Matrix &t)
{
    Matrix ti = *inverse(t);
    return {ti * a.mul * kron(t, t), ti * a.unit};
}

/// Product algebra A x k.
inline Algebra times_field(const Algebra &a)
{
    const Field f = a.field();
    const std::size_t n = a.dim(), m = n + 1;
    Matrix mul(f, m, m * m);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k)
                mul.set(k, i * m + j, a.mul(k, i * n + j));
    mul.set(n, n * m + n, Scalar(1));
    Matrix unit(f, m, 1);
    for (std::size_t i = 0; i < n; ++i)
        unit.set(i, 0, a.unit(i, 0));
    unit.set(n, 0, Scalar(1));
    return {mul, unit};
}

/// A measuring pairing (A, C) with the alpha-condition: A is C* (optionally
/// times k, which the pairing ignores) in a random basis.
struct RandomPairing {
    Pairing pairing;
    bool extra_factor = false;
};

inline RandomPairing random_alpha_pairing(Field f, std::mt19937 &rng, std::size_t max_dim)
{
    std::bernoulli_distribution coin(0.5);
    RandomPairing out;
    out.extra_factor = coin(rng);
    Coalgebra c = random_small_coalgebra(f, rng, out.extra_factor ? max_dim - 1 : max_dim);
    Algebra a = dual_algebra(c);
    Matrix pm = Matrix::identity(f, c.dim());
    if (out.extra_factor) {
        a = times_field(a);
        pm = vstack(pm, Matrix(f, 1, c.dim()));
    }
    Matrix t = random_invertible(f, rng, a.dim());
    out.pairing = {change_basis(a, t), c, t.transpose() * pm};
    return out;
}

/// Left regular A-module A^r (r copies) in a random basis.
inline Action random_left_module(const Algebra &a, std::mt19937 &rng, std::size_t copies)
{
    const Field f = a.field();
    const std::size_t n = a.dim(), dm = n * copies;
    Action act{Side::left, Matrix(f, dm, n * dm)};
    for (std::size_t r = 0; r < copies; ++r)
        for (std::size_t x = 0; x < n; ++x)
            for (std::size_t m = 0; m < n; ++m)
                for (std::size_t t = 0; t < n; ++t)
                    act.map.set(r * n + t, x * dm + r * n + m, a.mul(t, x * n + m));
    Matrix b = random_invertible(f, rng, dm), bi = *inverse(b);
    act.map = bi * act.map * kron(Matrix::identity(f, n), b);
    return act;
}

/// Oracle for injectivity of alpha_M : M (x) C -> Hom(A, M),
/// m (x) c |-> (a |-> <a, c> m), built entry by entry.
inline bool alpha_injective_oracle(const Matrix &p, std::size_t dim_m)
{
    const Field f = p.field();
    const std::size_t na = p.rows(), nc = p.cols();
    Matrix alpha(f, dim_m * na, dim_m * nc);
    for (std::size_t m = 0; m < dim_m; ++m)
        for (std::size_t c = 0; c < nc; ++c)
            for (std::size_t a = 0; a < na; ++a)
                alpha.set(m * na + a, m * nc + c, p(a, c));
    return rank(alpha) == dim_m * nc;
}

/// Basis of A-linear maps M -> L (left actions), by brute-force kernel.
inline Subspace left_linear_maps(const Action &m, std::size_t dm, const Action &l, std::size_t dl, std::size_t na)
{
    const Field f = m.map.field();
    const std::size_t n = dl * dm;
    Matrix constraints(f, dl * dm * na, n);
    for (std::size_t k = 0; k < n; ++k) {
        Matrix g = Matrix::unvec(Matrix::unit_vector(f, n, k), dl, dm);
        Matrix diff = g * m.map - l.map * kron(Matrix::identity(f, na), g);
        constraints.set_column(k, diff.vec());
    }
    return kernel(constraints);
}

} // namespace testing_support
