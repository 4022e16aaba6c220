#pragma once

// Algebras, coalgebras, bialgebras and Hopf algebras given by structure
// constants, together with modules and comodules over them.

#include "entwine/linsolve.hpp"
#include "entwine/report.hpp"

#include <optional>
#include <span>
#include <string>
#include <vector>

namespace entwine {

enum class Kind { algebra, coalgebra, bialgebra, hopf };
enum class Side { left, right };

inline const char *to_string(Kind k)
{
    switch (k) {
    case Kind::algebra: return "algebra";
    case Kind::coalgebra: return "coalgebra";
    case Kind::bialgebra: return "bialgebra";
    case Kind::hopf: return "hopf";
    }
    return "?";
}

inline const char *to_string(Side s) { return s == Side::left ? "left" : "right"; }

struct Algebra {
    Matrix mul;  // A (x) A -> A
    Matrix unit; // k -> A
    std::size_t dim() const { return unit.rows(); }
    Field field() const { return unit.field(); }
};

struct Coalgebra {
    Matrix comul;  // C -> C (x) C
    Matrix counit; // C -> k
    std::size_t dim() const { return counit.cols(); }
    Field field() const { return counit.field(); }
};

/// Sparse structure constant: for a product, e_i e_j gains c e_k; for a
/// coproduct, Delta(e_i) gains c e_j (x) e_k.
struct Triple {
    std::size_t i, j, k;
    Scalar c;
};

struct Structure {
    Kind kind = Kind::algebra;
    std::vector<std::string> labels;
    std::optional<Algebra> algebra;
    std::optional<Coalgebra> coalgebra;
    std::optional<Matrix> antipode;

    std::size_t dim() const { return algebra ? algebra->dim() : coalgebra->dim(); }
    Field field() const { return algebra ? algebra->field() : coalgebra->field(); }

    const Algebra &alg() const
    {
        if (!algebra)
            throw input_error(std::string("a ") + to_string(kind) + " has no multiplication");
        return *algebra;
    }

    const Coalgebra &coalg() const
    {
        if (!coalgebra)
            throw input_error(std::string("a ") + to_string(kind) + " has no comultiplication");
        return *coalgebra;
    }
};

inline void check_index(std::size_t i, std::size_t n, const char *what)
{
    if (i >= n)
        throw input_error(std::string(what) + " index " + std::to_string(i) + " out of range [0," +
                          std::to_string(n) + ")");
}

inline Algebra make_algebra(Field f, std::size_t n, std::span<const Triple> mul,
                            std::span<const Scalar> unit)
{
    if (unit.size() != n)
        throw input_error("unit vector has " + std::to_string(unit.size()) + " entries, dim is " +
                          std::to_string(n));
    Algebra a{Matrix(f, n, n * n), Matrix(f, n, 1)};
    for (auto &t : mul) {
        check_index(t.i, n, "mul");
        check_index(t.j, n, "mul");
        check_index(t.k, n, "mul");
        a.mul.add(t.k, t.i * n + t.j, f.reduce(t.c));
    }
    for (std::size_t i = 0; i < n; ++i)
        a.unit.set(i, 0, f.reduce(unit[i]));
    return a;
}

inline Coalgebra make_coalgebra(Field f, std::size_t n, std::span<const Triple> comul,
                                std::span<const Scalar> counit)
{
    if (counit.size() != n)
        throw input_error("counit vector has " + std::to_string(counit.size()) + " entries, dim is " +
                          std::to_string(n));
    Coalgebra c{Matrix(f, n * n, n), Matrix(f, 1, n)};
    for (auto &t : comul) {
        check_index(t.i, n, "comul");
        check_index(t.j, n, "comul");
        check_index(t.k, n, "comul");
        c.comul.add(t.j * n + t.k, t.i, f.reduce(t.c));
    }
    for (std::size_t i = 0; i < n; ++i)
        c.counit.set(0, i, f.reduce(counit[i]));
    return c;
}

inline Matrix eye(Field f, std::size_t n) { return Matrix::identity(f, n); }

// ---------------------------------------------------------------------------
// Axiom checks

inline Report verify_algebra(const Algebra &a)
{
    Report r("algebra");
    const std::size_t n = a.dim();
    const Field f = a.field();
    if (a.mul.rows() != n || a.mul.cols() != n * n)
        throw input_error("multiplication has shape " + a.mul.shape() + " for dim " + std::to_string(n));

    // (e_i e_j) e_k against e_i (e_j e_k), one triple at a time so that the
    // n^3-dimensional domain is never materialized.
    Matrix lhs(f, n, n * n * n), rhs(f, n, n * n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) {
                std::size_t col = (i * n + j) * n + k;
                for (std::size_t l = 0; l < n; ++l) {
                    const Scalar &ij = a.mul(l, i * n + j);
                    if (ij != 0)
                        for (std::size_t m = 0; m < n; ++m)
                            if (a.mul(m, l * n + k) != 0)
                                lhs.add(m, col, f.mul(ij, a.mul(m, l * n + k)));
                    const Scalar &jk = a.mul(l, j * n + k);
                    if (jk != 0)
                        for (std::size_t m = 0; m < n; ++m)
                            if (a.mul(m, i * n + l) != 0)
                                rhs.add(m, col, f.mul(jk, a.mul(m, i * n + l)));
                }
            }
    if (!r.expect_equal("algebra.associativity", lhs, rhs, {{n, n, n}}, {{n}}))
        return r;
    Matrix id = eye(f, n);
    if (!r.expect_equal("algebra.left_unit", a.mul * kron(a.unit, id), id, {{n}}, {{n}}))
        return r;
    r.expect_equal("algebra.right_unit", a.mul * kron(id, a.unit), id, {{n}}, {{n}});
    return r;
}

inline Report verify_coalgebra(const Coalgebra &c)
{
    Report r("coalgebra");
    const std::size_t n = c.dim();
    const Field f = c.field();
    if (c.comul.rows() != n * n || c.comul.cols() != n)
        throw input_error("comultiplication has shape " + c.comul.shape() + " for dim " + std::to_string(n));
    Matrix id = eye(f, n);
    if (!r.expect_equal("coalgebra.coassociativity", kron(c.comul, id) * c.comul,
                        kron(id, c.comul) * c.comul, {{n}}, {{n, n, n}}))
        return r;
    if (!r.expect_equal("coalgebra.left_counit", kron(c.counit, id) * c.comul, id, {{n}}, {{n}}))
        return r;
    r.expect_equal("coalgebra.right_counit", kron(id, c.counit) * c.comul, id, {{n}}, {{n}});
    return r;
}

/// Delta and epsilon are algebra maps (assumes both halves already verified).
inline Report verify_bialgebra_compat(const Algebra &a, const Coalgebra &c)
{
    Report r("bialgebra");
    const std::size_t n = a.dim();
    const Field f = a.field();
    if (c.dim() != n)
        throw input_error("bialgebra: algebra and coalgebra dimensions differ");
    Matrix mid = kron({eye(f, n), swap_factors(f, n, n), eye(f, n)});
    if (!r.expect_equal("bialgebra.comul_multiplicative", c.comul * a.mul,
                        kron(a.mul, a.mul) * mid * kron(c.comul, c.comul), {{n, n}}, {{n, n}}))
        return r;
    if (!r.expect_equal("bialgebra.comul_unital", c.comul * a.unit, kron(a.unit, a.unit), {{1}}, {{n, n}}))
        return r;
    if (!r.expect_equal("bialgebra.counit_multiplicative", c.counit * a.mul, kron(c.counit, c.counit),
                        {{n, n}}, {{1}}))
        return r;
    r.expect_equal("bialgebra.counit_unital", c.counit * a.unit, Matrix::identity(f, 1), {{1}}, {{1}});
    return r;
}

inline Report verify_antipode(const Algebra &a, const Coalgebra &c, const Matrix &s)
{
    Report r("antipode");
    const std::size_t n = a.dim();
    const Field f = a.field();
    if (s.rows() != n || s.cols() != n)
        throw input_error("antipode has shape " + s.shape());
    Matrix unit = a.unit * c.counit;
    if (!r.expect_equal("hopf.left_antipode", a.mul * kron(s, eye(f, n)) * c.comul, unit, {{n}}, {{n}}))
        return r;
    r.expect_equal("hopf.right_antipode", a.mul * kron(eye(f, n), s) * c.comul, unit, {{n}}, {{n}});
    return r;
}

inline Report verify_structure(const Structure &s)
{
    Report r(std::string("verify ") + to_string(s.kind));
    bool needs_alg = s.kind != Kind::coalgebra;
    bool needs_coalg = s.kind != Kind::algebra;
    if (needs_alg != s.algebra.has_value() || needs_coalg != s.coalgebra.has_value() ||
        (s.kind == Kind::hopf) != s.antipode.has_value())
        throw input_error(std::string("fields present do not match kind ") + to_string(s.kind));
    if (s.algebra && !r.absorb(verify_algebra(*s.algebra)))
        return r;
    if (s.coalgebra && !r.absorb(verify_coalgebra(*s.coalgebra)))
        return r;
    if (needs_alg && needs_coalg && !r.absorb(verify_bialgebra_compat(*s.algebra, *s.coalgebra)))
        return r;
    if (s.antipode)
        r.absorb(verify_antipode(*s.algebra, *s.coalgebra, *s.antipode));
    return r;
}

// ---------------------------------------------------------------------------
// Morphisms

inline Report verify_algebra_morphism(const Algebra &a, const Algebra &b, const Matrix &f)
{
    Report r("algebra morphism");
    if (f.rows() != b.dim() || f.cols() != a.dim())
        throw input_error("algebra morphism has shape " + f.shape());
    std::size_t n = a.dim();
    if (!r.expect_equal("algebra_morphism.multiplicative", f * a.mul, b.mul * kron(f, f), {{n, n}},
                        {{b.dim()}}))
        return r;
    r.expect_equal("algebra_morphism.unital", f * a.unit, b.unit, {{1}}, {{b.dim()}});
    return r;
}

inline Report verify_coalgebra_morphism(const Coalgebra &c, const Coalgebra &d, const Matrix &f)
{
    Report r("coalgebra morphism");
    if (f.rows() != d.dim() || f.cols() != c.dim())
        throw input_error("coalgebra morphism has shape " + f.shape());
    if (!r.expect_equal("coalgebra_morphism.comultiplicative", d.comul * f, kron(f, f) * c.comul,
                        {{c.dim()}}, {{d.dim(), d.dim()}}))
        return r;
    r.expect_equal("coalgebra_morphism.counital", d.counit * f, c.counit, {{c.dim()}}, {{1}});
    return r;
}

inline Report verify_bialgebra_morphism(const Structure &h, const Structure &k, const Matrix &f)
{
    Report r("bialgebra morphism");
    if (!r.absorb(verify_algebra_morphism(h.alg(), k.alg(), f)))
        return r;
    r.absorb(verify_coalgebra_morphism(h.coalg(), k.coalg(), f));
    return r;
}

// ---------------------------------------------------------------------------
// Modules and comodules

/// Right: M (x) A -> M. Left: A (x) M -> M.
struct Action {
    Side side = Side::right;
    Matrix map;
};

/// Right: M -> M (x) C. Left: M -> C (x) M.
struct Coaction {
    Side side = Side::right;
    Matrix map;
};

struct ModulePresentation {
    std::size_t dim = 0;
    std::optional<Action> action;
    std::optional<Coaction> coaction;
};

/// Sparse action constant: m_i . a_j gains c m_k (the index order is the
/// same for left actions, a_j . m_i).
struct ActionEntry {
    std::size_t m, a, target;
    Scalar c;
};

/// Sparse coaction constant: rho(m_i) gains c m_j (x) c_k (or c_k (x) m_j).
struct CoactionEntry {
    std::size_t m, target, c_index;
    Scalar c;
};

inline Action make_action(Field f, Side side, std::size_t dim_m, std::size_t dim_a,
                          std::span<const ActionEntry> entries)
{
    Action act{side, Matrix(f, dim_m, dim_m * dim_a)};
    for (auto &e : entries) {
        check_index(e.m, dim_m, "action module");
        check_index(e.target, dim_m, "action module");
        check_index(e.a, dim_a, "action algebra");
        std::size_t col = side == Side::right ? e.m * dim_a + e.a : e.a * dim_m + e.m;
        act.map.add(e.target, col, f.reduce(e.c));
    }
    return act;
}

inline Coaction make_coaction(Field f, Side side, std::size_t dim_m, std::size_t dim_c,
                              std::span<const CoactionEntry> entries)
{
    Coaction co{side, Matrix(f, dim_m * dim_c, dim_m)};
    for (auto &e : entries) {
        check_index(e.m, dim_m, "coaction module");
        check_index(e.target, dim_m, "coaction module");
        check_index(e.c_index, dim_c, "coaction coalgebra");
        std::size_t row = side == Side::right ? e.target * dim_c + e.c_index : e.c_index * dim_m + e.target;
        co.map.add(row, e.m, f.reduce(e.c));
    }
    return co;
}

inline Report verify_module(const Algebra &a, const Action &act, std::size_t dim_m)
{
    const Field f = a.field();
    const std::size_t n = a.dim();
    Report r(std::string(to_string(act.side)) + " module");
    if (act.map.rows() != dim_m || act.map.cols() != dim_m * n)
        throw input_error("action has shape " + act.map.shape() + " for module dim " +
                          std::to_string(dim_m) + " over algebra dim " + std::to_string(n));
    Matrix im = eye(f, dim_m), ia = eye(f, n);
    if (act.side == Side::right) {
        if (!r.expect_equal("module.associativity", act.map * kron(act.map, ia), act.map * kron(im, a.mul),
                            {{dim_m, n, n}}, {{dim_m}}))
            return r;
        r.expect_equal("module.unit", act.map * kron(im, a.unit), im, {{dim_m}}, {{dim_m}});
    } else {
        if (!r.expect_equal("module.associativity", act.map * kron(ia, act.map), act.map * kron(a.mul, im),
                            {{n, n, dim_m}}, {{dim_m}}))
            return r;
        r.expect_equal("module.unit", act.map * kron(a.unit, im), im, {{dim_m}}, {{dim_m}});
    }
    return r;
}

inline Report verify_comodule(const Coalgebra &c, const Coaction &co, std::size_t dim_m)
{
    const Field f = c.field();
    const std::size_t n = c.dim();
    Report r(std::string(to_string(co.side)) + " comodule");
    if (co.map.rows() != dim_m * n || co.map.cols() != dim_m)
        throw input_error("coaction has shape " + co.map.shape() + " for comodule dim " +
                          std::to_string(dim_m) + " over coalgebra dim " + std::to_string(n));
    Matrix im = eye(f, dim_m), ic = eye(f, n);
    if (co.side == Side::right) {
        if (!r.expect_equal("comodule.coassociativity", kron(co.map, ic) * co.map, kron(im, c.comul) * co.map,
                            {{dim_m}}, {{dim_m, n, n}}))
            return r;
        r.expect_equal("comodule.counit", kron(im, c.counit) * co.map, im, {{dim_m}}, {{dim_m}});
    } else {
        if (!r.expect_equal("comodule.coassociativity", kron(ic, co.map) * co.map, kron(c.comul, im) * co.map,
                            {{dim_m}}, {{n, n, dim_m}}))
            return r;
        r.expect_equal("comodule.counit", kron(c.counit, im) * co.map, im, {{dim_m}}, {{dim_m}});
    }
    return r;
}

inline Report verify_module_presentation(const Algebra *a, const Coalgebra *c, const ModulePresentation &m)
{
    Report r("verify module");
    if (m.action) {
        if (!a)
            throw input_error("module has an action but no algebra");
        if (!r.absorb(verify_module(*a, *m.action, m.dim), "action."))
            return r;
    }
    if (m.coaction) {
        if (!c)
            throw input_error("module has a coaction but no coalgebra");
        r.absorb(verify_comodule(*c, *m.coaction, m.dim), "coaction.");
    }
    return r;
}

/// Right A-module M gives a left A-module on M* via (a.phi)(m) = phi(m.a),
/// and a left module gives a right one via (phi.a)(m) = phi(a.m).
inline Action contragredient(const Action &act, std::size_t dim_m, std::size_t dim_a)
{
    const Field f = act.map.field();
    Action out{act.side == Side::right ? Side::left : Side::right, Matrix(f, dim_m, dim_m * dim_a)};
    for (std::size_t i = 0; i < dim_m; ++i)     // phi = delta_i
        for (std::size_t j = 0; j < dim_a; ++j) // a_j
            for (std::size_t k = 0; k < dim_m; ++k) {
                const Scalar &v = act.side == Side::right ? act.map(i, k * dim_a + j) : act.map(i, j * dim_m + k);
                if (v == 0)
                    continue;
                std::size_t col = out.side == Side::left ? j * dim_m + i : i * dim_a + j;
                out.map.set(k, col, v);
            }
    return out;
}

// ---------------------------------------------------------------------------
// Convolution

/// (f * g)(c) = sum f(c_1) g(c_2) for f, g : C -> A.
inline Matrix convolution(const Coalgebra &c, const Algebra &a, const Matrix &f, const Matrix &g)
{
    if (f.rows() != a.dim() || f.cols() != c.dim() || g.rows() != a.dim() || g.cols() != c.dim())
        throw input_error("convolution: maps must be " + std::to_string(a.dim()) + "x" +
                          std::to_string(c.dim()) + ", got " + f.shape() + " and " + g.shape());
    return a.mul * kron(f, g) * c.comul;
}

inline Matrix convolution_unit(const Coalgebra &c, const Algebra &a) { return a.unit * c.counit; }

struct ConvolutionInverse {
    std::optional<Matrix> inverse; // set only when two-sided
    bool right_invertible = false;
    bool left_invertible = false;
};

/// Finds g with f * g = unit by an exact solve in Hom(C, A), then checks
/// g * f = unit as well.
inline ConvolutionInverse convolution_inverse(const Coalgebra &c, const Algebra &a, const Matrix &f)
{
    const Field fld = a.field();
    const std::size_t na = a.dim(), nc = c.dim(), n = na * nc;
    if (f.rows() != na || f.cols() != nc)
        throw input_error("convolution_inverse: map has shape " + f.shape());
    Matrix left_mult(fld, n, n), right_mult(fld, n, n);
    for (std::size_t k = 0; k < n; ++k) {
        Matrix basis = Matrix::unvec(Matrix::unit_vector(fld, n, k), na, nc);
        left_mult.set_column(k, convolution(c, a, f, basis).vec());
        right_mult.set_column(k, convolution(c, a, basis, f).vec());
    }
    Matrix unit = convolution_unit(c, a).vec();
    Solution right = solve_linear(left_mult, unit);
    Solution left = solve_linear(right_mult, unit);
    ConvolutionInverse out;
    out.right_invertible = right.consistent;
    out.left_invertible = left.consistent;
    if (right.consistent) {
        Matrix g = Matrix::unvec(right.particular, na, nc);
        if (convolution(c, a, g, f) == convolution_unit(c, a))
            out.inverse = g;
    }
    return out;
}

/// The convolution inverse of the identity, when it exists.
inline std::optional<Matrix> compute_antipode(const Algebra &a, const Coalgebra &c)
{
    return convolution_inverse(c, a, eye(a.field(), a.dim())).inverse;
}

inline std::optional<Matrix> compute_antipode(const Structure &h)
{
    if (h.kind != Kind::bialgebra && h.kind != Kind::hopf)
        throw input_error("antipode requires a bialgebra");
    return compute_antipode(h.alg(), h.coalg());
}

/// Promotes a bialgebra to a Hopf algebra if it has an antipode.
inline std::optional<Structure> with_antipode(Structure h)
{
    auto s = compute_antipode(h);
    if (!s)
        return std::nullopt;
    h.kind = Kind::hopf;
    h.antipode = *s;
    return h;
}

// ---------------------------------------------------------------------------
// Duals. In finite dimension the finite dual is the full dual, and the dual
// structure maps are transposes under the dual-basis identification
// (V (x) W)* = V* (x) W*.

inline Coalgebra dual_coalgebra(const Algebra &a) { return {a.mul.transpose(), a.unit.transpose()}; }
inline Algebra dual_algebra(const Coalgebra &c) { return {c.comul.transpose(), c.counit.transpose()}; }

inline std::vector<std::string> dual_labels(const std::vector<std::string> &labels)
{
    std::vector<std::string> out;
    for (auto &l : labels)
        out.push_back("d(" + l + ")");
    return out;
}

inline Structure dualize_structure(const Structure &s)
{
    Structure d;
    switch (s.kind) {
    case Kind::algebra: d.kind = Kind::coalgebra; break;
    case Kind::coalgebra: d.kind = Kind::algebra; break;
    default: d.kind = s.kind;
    }
    d.labels = dual_labels(s.labels);
    if (s.algebra)
        d.coalgebra = dual_coalgebra(*s.algebra);
    if (s.coalgebra)
        d.algebra = dual_algebra(*s.coalgebra);
    if (s.antipode)
        d.antipode = s.antipode->transpose();
    return d;
}

/// Transposition duality on modules: an A-action on M becomes an
/// A*-coaction on M*, and a C-coaction becomes a C*-action, same side.
inline ModulePresentation dualize_module(const ModulePresentation &m)
{
    ModulePresentation d;
    d.dim = m.dim;
    if (m.action)
        d.coaction = Coaction{m.action->side, m.action->map.transpose()};
    if (m.coaction)
        d.action = Action{m.coaction->side, m.coaction->map.transpose()};
    return d;
}

} // namespace entwine
