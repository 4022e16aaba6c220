#pragma once

// Entwining structures (A, C, psi) with psi : C (x) A -> A (x) C, the coring
// A (x) C, the smash ring on Hom(C, A), the isomorphism between the smash
// ring and the left dual of the coring, and entwined modules.
//
// Sweedler-style notation used below: psi(c (x) a) = sum a_psi (x) c^psi.

#include "entwine/pairing.hpp"

namespace entwine {

struct Entwining {
    Algebra algebra;
    Coalgebra coalgebra;
    Matrix psi; // C (x) A -> A (x) C

    Field field() const { return psi.field(); }
    std::size_t dim_a() const { return algebra.dim(); }
    std::size_t dim_c() const { return coalgebra.dim(); }
};

/// psi(c (x) a) = a (x) c.
inline Entwining flip_entwining(const Algebra &a, const Coalgebra &c)
{
    return {a, c, swap_factors(a.field(), c.dim(), a.dim())};
}

inline void check_entwining_shape(const Entwining &e)
{
    std::size_t n = e.dim_a() * e.dim_c();
    if (e.psi.rows() != n || e.psi.cols() != n)
        throw input_error("psi has shape " + e.psi.shape() + ", expected " + std::to_string(n) + "x" +
                          std::to_string(n));
    if (!(e.algebra.field() == e.coalgebra.field()) || !(e.psi.field() == e.algebra.field()))
        throw input_error("entwining components live over different fields");
}

inline Report verify_entwining(const Entwining &e)
{
    check_entwining_shape(e);
    Report r("entwining");
    const Field f = e.field();
    const std::size_t na = e.dim_a(), nc = e.dim_c();
    const Algebra &A = e.algebra;
    const Coalgebra &C = e.coalgebra;
    Matrix ia = eye(f, na), ic = eye(f, nc);
    if (!r.expect_equal("entwining.multiplicative", e.psi * kron(ic, A.mul),
                        kron(A.mul, ic) * kron(ia, e.psi) * kron(e.psi, ia), {{nc, na, na}}, {{na, nc}}))
        return r;
    if (!r.expect_equal("entwining.unital", e.psi * kron(ic, A.unit), kron(A.unit, ic), {{nc}}, {{na, nc}}))
        return r;
    if (!r.expect_equal("entwining.comultiplicative", kron(ia, C.comul) * e.psi,
                        kron(e.psi, ic) * kron(ic, e.psi) * kron(C.comul, ia), {{nc, na}}, {{na, nc, nc}}))
        return r;
    r.expect_equal("entwining.counital", kron(ia, C.counit) * e.psi, kron(C.counit, ia), {{nc, na}}, {{na}});
    return r;
}

/// gamma : A -> B algebra map, delta : C -> D coalgebra map with
/// (gamma (x) delta) psi = Psi (delta (x) gamma).
inline Report verify_entwining_morphism(const Entwining &e, const Entwining &g, const Matrix &gamma,
                                        const Matrix &delta)
{
    Report r("entwining morphism");
    if (!r.absorb(verify_algebra_morphism(e.algebra, g.algebra, gamma), "gamma."))
        return r;
    if (!r.absorb(verify_coalgebra_morphism(e.coalgebra, g.coalgebra, delta), "delta."))
        return r;
    r.expect_equal("entwining_morphism.intertwines", kron(gamma, delta) * e.psi, g.psi * kron(delta, gamma),
                   {{e.dim_c(), e.dim_a()}}, {{g.dim_a(), g.dim_c()}});
    return r;
}

// ---------------------------------------------------------------------------
// Coring A (x) C

struct Coring {
    Algebra base;
    std::size_t dim_c = 0;
    Action left;        // a (a~ (x) c) = a a~ (x) c
    Action right;       // (a~ (x) c) a = sum a~ a_psi (x) c^psi
    Matrix comul_plain; // a (x) c |-> a (x) c_1 (x) 1 (x) c_2 on the plain tensor square
    Matrix balance;     // the balancing map (A (x) C) (x) (A (x) C) -> A (x) C (x) C
    Matrix comul;       // over A, in coordinates A (x) C (x) C
    Matrix counit;      // a (x) c |-> a eps(c)
    Report report{"coring"};

    std::size_t dim() const { return base.dim() * dim_c; }
};

/// Right A-action on the coring: (mu (x) I_C)(I_A (x) psi).
inline Matrix coring_right_action(const Entwining &e)
{
    const Field f = e.field();
    return kron(e.algebra.mul, eye(f, e.dim_c())) * kron(eye(f, e.dim_a()), e.psi);
}

inline Coring build_coring(const Entwining &e)
{
    check_entwining_shape(e);
    const Field f = e.field();
    const std::size_t na = e.dim_a(), nc = e.dim_c(), n = na * nc;
    const Algebra &A = e.algebra;
    const Coalgebra &C = e.coalgebra;
    Matrix ia = eye(f, na), ic = eye(f, nc), in = eye(f, n);

    Coring k;
    k.base = A;
    k.dim_c = nc;
    k.left = {Side::left, kron(A.mul, ic)};
    k.right = {Side::right, coring_right_action(e)};
    k.comul_plain = kron(ia, kron({ic, A.unit, ic}) * C.comul);
    k.balance = kron(k.right.map, ic);
    k.comul = k.balance * k.comul_plain;
    k.counit = kron(ia, C.counit);
    Report &r = k.report;

    if (!r.absorb(verify_module(A, k.left, n), "left_action."))
        return k;
    if (!r.absorb(verify_module(A, k.right, n), "right_action."))
        return k;
    if (!r.expect_equal("coring.bimodule", k.right.map * kron(k.left.map, ia), k.left.map * kron(ia, k.right.map),
                        {{na, na, nc, na}}, {{na, nc}}))
        return k;

    // A acts on A (x) C (x) C, the coordinates of the tensor square over A,
    // from the left on the first factor and from the right through psi on
    // the last C factor.
    Matrix left3 = kron({A.mul, ic, ic});
    Matrix right3 = kron(k.right.map, ic) * kron({ia, ic, e.psi});
    if (!r.expect_equal("coring.comul_left_linear", k.comul * k.left.map, left3 * kron(ia, k.comul), {{na, na, nc}},
                        {{na, nc, nc}}))
        return k;
    if (!r.expect_equal("coring.comul_right_linear", k.comul * k.right.map, right3 * kron(k.comul, ia),
                        {{na, nc, na}}, {{na, nc, nc}}))
        return k;

    // Coassociativity in the triple tensor product over A, coordinates A (x) C^3.
    Matrix lhs = kron(k.comul, ic) * k.comul;
    Matrix from_unit = k.comul * kron(A.unit, ic); // c' |-> Delta_coring(1 (x) c')
    Matrix rhs = kron({k.right.map, ic, ic}) * kron({ia, ic, from_unit}) * k.comul;
    if (!r.expect_equal("coring.coassociative", lhs, rhs, {{na, nc}}, {{na, nc, nc, nc}}))
        return k;

    if (!r.expect_equal("coring.counit_left_linear", k.counit * k.left.map, A.mul * kron(ia, k.counit),
                        {{na, na, nc}}, {{na}}))
        return k;
    if (!r.expect_equal("coring.counit_right_linear", k.counit * k.right.map, A.mul * kron(k.counit, ia),
                        {{na, nc, na}}, {{na}}))
        return k;
    // (eps (x)_A id) Delta: a~ (x) c (x) c' |-> a~ eps(c) . (1 (x) c')
    Matrix eps_left = k.left.map * kron({ia, C.counit, A.unit, ic});
    // (id (x)_A eps) Delta: a~ (x) c (x) c' |-> (a~ (x) c) . eps(c') 1
    Matrix eps_right = k.right.map * kron({ia, ic, A.unit * C.counit});
    if (!r.expect_equal("coring.left_counit", eps_left * k.comul, in, {{na, nc}}, {{na, nc}}))
        return k;
    r.expect_equal("coring.right_counit", eps_right * k.comul, in, {{na, nc}}, {{na, nc}});
    return k;
}

// ---------------------------------------------------------------------------
// Smash ring on Hom(C, A). A map f : C -> A is an A x C matrix, flattened
// row-major, so the basis map E_(i,j) sends c_j to a_i.

struct SmashRing {
    Algebra ring;
    Action left;  // (a f)(c) = sum a_psi f(c^psi)
    Action right; // (f a)(c) = f(c) a
    Matrix iota;  // a |-> [c |-> eps(c) a]
    Report report{"smash ring"};

    std::size_t dim() const { return ring.dim(); }
};

/// (f . g)(c) = sum f(c_2)_psi g(c_1^psi), with f, g given as A x C matrices.
inline Matrix smash_product(const Entwining &e, const Matrix &f, const Matrix &g)
{
    const Field fld = e.field();
    return e.algebra.mul * kron(eye(fld, e.dim_a()), g) * e.psi * kron(eye(fld, e.dim_c()), f) * e.coalgebra.comul;
}

inline SmashRing build_smash(const Entwining &e)
{
    check_entwining_shape(e);
    const Field fld = e.field();
    const std::size_t na = e.dim_a(), nc = e.dim_c(), n = na * nc;
    const Matrix &mu = e.algebra.mul;
    const Matrix &delta = e.coalgebra.comul;
    const Matrix &psi = e.psi;

    // (E_(i,j) . E_(k,l))(c_m) = sum_{u,s} Delta[(u,j),m] psi[(s,l),(u,i)] a_s a_k
    Matrix mul(fld, n, n * n);
    for (std::size_t i = 0; i < na; ++i)
        for (std::size_t j = 0; j < nc; ++j)
            for (std::size_t m = 0; m < nc; ++m)
                for (std::size_t u = 0; u < nc; ++u) {
                    const Scalar &d = delta(u * nc + j, m);
                    if (d == 0)
                        continue;
                    for (std::size_t s = 0; s < na; ++s)
                        for (std::size_t l = 0; l < nc; ++l) {
                            const Scalar &p = psi(s * nc + l, u * na + i);
                            if (p == 0)
                                continue;
                            Scalar dp = fld.mul(d, p);
                            for (std::size_t k = 0; k < na; ++k)
                                for (std::size_t t = 0; t < na; ++t)
                                    if (mu(t, s * na + k) != 0)
                                        mul.add(t * nc + m, (i * nc + j) * n + k * nc + l, fld.mul(dp, mu(t, s * na + k)));
                        }
                }

    SmashRing s;
    s.ring = {mul, (e.algebra.unit * e.coalgebra.counit).vec()};
    s.iota = Matrix(fld, n, na);
    for (std::size_t i = 0; i < na; ++i)
        s.iota.set_column(i, (Matrix::unit_vector(fld, na, i) * e.coalgebra.counit).vec());

    // (a_k f)(c_m) for f = E_(i,j): sum psi[(s,l),(m,k)] [l == j] a_s a_i
    s.left = {Side::left, Matrix(fld, n, na * n)};
    s.right = {Side::right, Matrix(fld, n, n * na)};
    for (std::size_t k = 0; k < na; ++k)
        for (std::size_t i = 0; i < na; ++i)
            for (std::size_t j = 0; j < nc; ++j) {
                for (std::size_t m = 0; m < nc; ++m)
                    for (std::size_t sidx = 0; sidx < na; ++sidx) {
                        const Scalar &p = psi(sidx * nc + j, m * na + k);
                        if (p == 0)
                            continue;
                        for (std::size_t t = 0; t < na; ++t)
                            if (mu(t, sidx * na + i) != 0)
                                s.left.map.add(t * nc + m, k * n + i * nc + j, fld.mul(p, mu(t, sidx * na + i)));
                    }
                // (E_(i,j) a_k)(c_j) = a_i a_k
                for (std::size_t t = 0; t < na; ++t)
                    if (mu(t, i * na + k) != 0)
                        s.right.map.add(t * nc + j, (i * nc + j) * na + k, mu(t, i * na + k));
            }

    Report &r = s.report;
    if (!r.absorb(verify_algebra(s.ring), "ring."))
        return s;
    if (!r.absorb(verify_algebra_morphism(e.algebra, s.ring, s.iota), "iota."))
        return s;
    Matrix in = eye(fld, n);
    if (!r.expect_equal("smash.left_action_via_iota", s.left.map, mul * kron(s.iota, in), {{na, n}}, {{n}}))
        return s;
    r.expect_equal("smash.right_action_via_iota", s.right.map, mul * kron(in, s.iota), {{n, na}}, {{n}});
    return s;
}

// ---------------------------------------------------------------------------
// nu : Hom(C, A) -> Hom_A(A (x) C, A), f |-> [a (x) c |-> a f(c)]

struct NuIso {
    Matrix nu;          // Hom(C,A) -> Hom(A (x) C, A), both flattened row-major
    Matrix nu_inverse;  // h |-> [c |-> h(1 (x) c)]
    Subspace left_dual{Field::rationals(), 0}; // left A-linear maps inside Hom(A (x) C, A)
    Report report{"nu isomorphism"};
};

/// h, k in Hom(A (x) C, A): (h *_l k) = k o right_action o (I (x) h) o comul_plain.
inline Matrix left_dual_product(const Coring &k, const Matrix &h, const Matrix &g)
{
    return g * k.right.map * kron(eye(k.base.field(), k.dim()), h) * k.comul_plain;
}

inline NuIso nu_iso(const Entwining &e)
{
    check_entwining_shape(e);
    const Field f = e.field();
    const std::size_t na = e.dim_a(), nc = e.dim_c(), n = na * nc, amb = na * n;
    const Matrix &mu = e.algebra.mul;
    NuIso out;
    out.nu = Matrix(f, amb, n);
    out.nu_inverse = Matrix(f, n, amb);
    // nu(E_(k,l))(a_j (x) c_l) = a_j a_k
    for (std::size_t k = 0; k < na; ++k)
        for (std::size_t l = 0; l < nc; ++l)
            for (std::size_t j = 0; j < na; ++j)
                for (std::size_t i = 0; i < na; ++i)
                    if (mu(i, j * na + k) != 0)
                        out.nu.set(i * n + j * nc + l, k * nc + l, mu(i, j * na + k));
    for (std::size_t i = 0; i < na; ++i)
        for (std::size_t l = 0; l < nc; ++l)
            for (std::size_t j = 0; j < na; ++j)
                if (e.algebra.unit(j, 0) != 0)
                    out.nu_inverse.set(i * nc + l, i * n + j * nc + l, e.algebra.unit(j, 0));

    Coring k = build_coring(e);
    Report &r = out.report;
    if (!r.absorb(k.report, "coring."))
        return out;
    SmashRing s = build_smash(e);
    if (!r.absorb(s.report, "smash."))
        return out;

    // Left A-linearity h(b x) = b h(x) as a homogeneous system in h.
    Matrix constraint(f, na * amb, amb);
    for (std::size_t t = 0; t < amb; ++t) {
        Matrix h = Matrix::unvec(Matrix::unit_vector(f, amb, t), na, n);
        constraint.set_column(t, (h * k.left.map - mu * kron(eye(f, na), h)).vec());
    }
    out.left_dual = kernel(constraint);
    r.fact("left_dual_dim", std::to_string(out.left_dual.dim()));

    if (!(image(out.nu) == out.left_dual))
        return r.fail("nu does not map onto the left A-linear maps"), out;
    r.checked.push_back("nu.onto_left_dual");
    if (!r.expect_equal("nu.inverse_after_nu", out.nu_inverse * out.nu, eye(f, n), {{na, nc}}, {{na, nc}}))
        return out;
    Matrix incl = out.left_dual.inclusion();
    if (!r.expect_equal("nu.nu_after_inverse", out.nu * out.nu_inverse * incl, incl, {{out.left_dual.dim()}},
                        {{na, na, nc}}))
        return out;

    auto nu_of = [&](const Matrix &v) { return Matrix::unvec(out.nu * v, na, n); };
    if (!r.expect_equal("nu.unital", nu_of(s.ring.unit), k.counit, {{na, nc}}, {{na}}))
        return out;

    Matrix lhs(f, amb, n * n), rhs(f, amb, n * n);
    for (std::size_t p = 0; p < n; ++p) {
        Matrix ep = Matrix::unit_vector(f, n, p);
        Matrix np = nu_of(ep);
        for (std::size_t q = 0; q < n; ++q) {
            Matrix eq = Matrix::unit_vector(f, n, q);
            lhs.set_column(p * n + q, out.nu * s.ring.mul * kron(ep, eq));
            rhs.set_column(p * n + q, left_dual_product(k, np, nu_of(eq)).vec());
        }
    }
    if (!r.expect_equal("nu.multiplicative", lhs, rhs, {{n, n}}, {{na, na, nc}}))
        return out;

    // Canonical bimodule on the left dual: (a h)(x) = h(x a), (h a)(x) = h(x) a.
    Matrix la(f, amb, na * n), ra(f, amb, n * na), lb(f, amb, na * n), rb(f, amb, n * na);
    for (std::size_t a = 0; a < na; ++a) {
        Matrix ea = Matrix::unit_vector(f, na, a);
        for (std::size_t p = 0; p < n; ++p) {
            Matrix ep = Matrix::unit_vector(f, n, p);
            Matrix h = nu_of(ep);
            la.set_column(a * n + p, out.nu * s.left.map * kron(ea, ep));
            lb.set_column(a * n + p, (h * k.right.map * kron(eye(f, n), ea)).vec());
            ra.set_column(p * na + a, out.nu * s.right.map * kron(ep, ea));
            rb.set_column(p * na + a, (mu * kron(h, ea)).vec());
        }
    }
    if (!r.expect_equal("nu.left_linear", la, lb, {{na, n}}, {{na, na, nc}}))
        return out;
    r.expect_equal("nu.right_linear", ra, rb, {{n, na}}, {{na, na, nc}});
    return out;
}

// ---------------------------------------------------------------------------
// Entwined modules: a right A-action and a right C-coaction.

inline void require_entwined_shape(const ModulePresentation &m)
{
    if (!m.action || !m.coaction || m.action->side != Side::right || m.coaction->side != Side::right)
        throw input_error("an entwined module needs a right action and a right coaction");
}

inline Report verify_entwined_module(const Entwining &e, const ModulePresentation &m)
{
    check_entwining_shape(e);
    require_entwined_shape(m);
    Report r("entwined module");
    if (!r.absorb(verify_module(e.algebra, *m.action, m.dim), "action."))
        return r;
    if (!r.absorb(verify_comodule(e.coalgebra, *m.coaction, m.dim), "coaction."))
        return r;
    const Field f = e.field();
    const std::size_t na = e.dim_a(), nc = e.dim_c(), dm = m.dim;
    const Matrix &act = m.action->map, &co = m.coaction->map;
    r.expect_equal("entwined.compatibility", co * act,
                   kron(act, eye(f, nc)) * kron(eye(f, dm), e.psi) * kron(co, eye(f, na)), {{dm, na}}, {{dm, nc}});
    return r;
}

/// m . f = sum m_0 f(m_1), a right action of the smash ring.
inline Action entwined_to_smash(const Entwining &e, const ModulePresentation &m)
{
    require_entwined_shape(m);
    const Field f = e.field();
    const std::size_t na = e.dim_a(), nc = e.dim_c(), n = na * nc, dm = m.dim;
    const Matrix &act = m.action->map, &co = m.coaction->map;
    Action out{Side::right, Matrix(f, dm, dm * n)};
    for (std::size_t i = 0; i < dm; ++i)
        for (std::size_t j = 0; j < dm; ++j)
            for (std::size_t l = 0; l < nc; ++l) {
                const Scalar &v = co(j * nc + l, i);
                if (v == 0)
                    continue;
                for (std::size_t k = 0; k < na; ++k)
                    for (std::size_t t = 0; t < dm; ++t)
                        if (act(t, j * na + k) != 0)
                            out.map.add(t, i * n + k * nc + l, f.mul(v, act(t, j * na + k)));
            }
    return out;
}

/// alpha^psi_M : M (x) C -> Hom(#, M), m (x) c |-> [f |-> m f(c)], for the
/// A-action on M given by `act`.
inline Matrix smash_alpha(const Entwining &e, const Matrix &act, std::size_t dm)
{
    const Field f = e.field();
    const std::size_t na = e.dim_a(), nc = e.dim_c(), n = na * nc;
    Matrix alpha(f, dm * n, dm * nc);
    for (std::size_t j = 0; j < dm; ++j)
        for (std::size_t l = 0; l < nc; ++l)
            for (std::size_t k = 0; k < na; ++k)
                for (std::size_t t = 0; t < dm; ++t)
                    if (act(t, j * na + k) != 0)
                        alpha.set(t * n + k * nc + l, j * nc + l, act(t, j * na + k));
    return alpha;
}

/// Recovers the entwined structure of a #-rational right smash module:
/// the A-action through iota and the coaction (alpha^psi)^{-1} o rho.
inline ModulePresentation smash_to_entwined(const Entwining &e, const Action &smash_action, std::size_t dm)
{
    check_entwining_shape(e);
    const Field f = e.field();
    const std::size_t na = e.dim_a(), nc = e.dim_c(), n = na * nc;
    if (smash_action.side != Side::right || smash_action.map.rows() != dm || smash_action.map.cols() != dm * n)
        throw input_error("smash_to_entwined: expected a right action of shape " + std::to_string(dm) + "x" +
                          std::to_string(dm * n));
    SmashRing s = build_smash(e);
    Matrix act = smash_action.map * kron(eye(f, dm), s.iota);
    Matrix rho = module_to_hom(smash_action, dm, n);
    Matrix alpha = smash_alpha(e, act, dm);
    Solution sol = solve_linear(alpha, rho);
    if (!sol.consistent)
        throw hypothesis_error("smash module is not #-rational");
    if (sol.kernel.dim() != 0)
        throw hypothesis_error("alpha^psi is not injective on this module");
    ModulePresentation out;
    out.dim = dm;
    out.action = Action{Side::right, act};
    out.coaction = Coaction{Side::right, sol.particular};
    return out;
}

/// A-linear and C-colinear.
inline Report hom_entwined(const Entwining &e, const ModulePresentation &m, const ModulePresentation &n,
                           const Matrix &f)
{
    require_entwined_shape(m);
    require_entwined_shape(n);
    if (f.rows() != n.dim || f.cols() != m.dim)
        throw input_error("hom_entwined: map has shape " + f.shape() + ", expected " + std::to_string(n.dim) + "x" +
                          std::to_string(m.dim));
    Report r("entwined morphism");
    const Field fld = e.field();
    const std::size_t na = e.dim_a(), nc = e.dim_c();
    if (!r.expect_equal("morphism.A_linear", f * m.action->map, n.action->map * kron(f, eye(fld, na)), {{m.dim, na}},
                        {{n.dim}}))
        return r;
    r.expect_equal("morphism.C_colinear", n.coaction->map * f, kron(f, eye(fld, nc)) * m.coaction->map, {{m.dim}},
                   {{n.dim, nc}});
    return r;
}

/// Basis of the maps M -> N satisfying all the given linear conditions,
/// each condition mapping f to a residual that must vanish.
template <class... Residual>
Subspace solve_hom_space(Field f, std::size_t rows, std::size_t cols, Residual... residual)
{
    const std::size_t n = rows * cols;
    std::vector<Matrix> columns;
    Matrix stacked;
    bool first = true;
    for (std::size_t t = 0; t < n; ++t) {
        Matrix basis = Matrix::unvec(Matrix::unit_vector(f, n, t), rows, cols);
        Matrix col(f, 0, 1);
        ((col = vstack(col, residual(basis).vec())), ...);
        if (first) {
            stacked = Matrix(f, col.rows(), n);
            first = false;
        }
        stacked.set_column(t, col);
    }
    if (first)
        return Subspace(f, 0);
    return kernel(stacked);
}

/// Hom_A^C(M, N) as a subspace of flattened N x M matrices.
inline Subspace hom_entwined_space(const Entwining &e, const ModulePresentation &m, const ModulePresentation &n)
{
    require_entwined_shape(m);
    require_entwined_shape(n);
    const Field fld = e.field();
    const std::size_t na = e.dim_a(), nc = e.dim_c();
    return solve_hom_space(
        fld, n.dim, m.dim,
        [&](const Matrix &f) { return f * m.action->map - n.action->map * kron(f, eye(fld, na)); },
        [&](const Matrix &f) { return n.coaction->map * f - kron(f, eye(fld, nc)) * m.coaction->map; });
}

/// Regular entwined module A (x) C: (a~ (x) c) a = coring right action,
/// coaction a (x) c |-> a (x) c_1 (x) c_2.
inline ModulePresentation free_entwined_module(const Entwining &e)
{
    const Field f = e.field();
    ModulePresentation m;
    m.dim = e.dim_a() * e.dim_c();
    m.action = Action{Side::right, coring_right_action(e)};
    m.coaction = Coaction{Side::right, kron(eye(f, e.dim_a()), e.coalgebra.comul)};
    return m;
}

} // namespace entwine
