#pragma once

// Doi-Koppinen data (H, A, C): a bialgebra H, a right H-comodule algebra A
// and a right H-module coalgebra C. They entwine through
//
//     psi(c (x) a) = sum a_0 (x) c . a_1,
//
// and dualize to (H*, C*, A*). Also: the alternative (Schauenburg) form,
// Long dimodules, Hopf-Galois style extensions with integrals and
// coextensions with cointegrals.

#include "entwine/duality.hpp"

namespace entwine {

// ---------------------------------------------------------------------------
// Compatibility of H-(co)module (co)algebras

namespace detail {

inline void require_bialgebra(const Structure &h, const char *what)
{
    if (h.kind != Kind::bialgebra && h.kind != Kind::hopf)
        throw input_error(std::string(what) + ": H must be a bialgebra or Hopf algebra");
}

// A (x) B (x) C (x) D -> A (x) C (x) B (x) D
inline Matrix middle_swap(Field f, std::size_t a, std::size_t b, std::size_t c, std::size_t d)
{
    return permute_factors(f, {a, b, c, d}, {0, 2, 1, 3});
}

} // namespace detail

/// h(ab) = (h_1 a)(h_2 b), h1 = eps(h)1, or the mirror image for right actions.
inline Report verify_module_algebra(const Structure &h, const Algebra &a, const Action &act)
{
    detail::require_bialgebra(h, "module algebra");
    Report r(std::string(to_string(act.side)) + " H-module algebra");
    const Field f = a.field();
    const Coalgebra &HC = h.coalg();
    const std::size_t na = a.dim(), nh = h.dim();
    if (!r.absorb(verify_module(h.alg(), act, na), "module."))
        return r;
    Matrix ia = eye(f, na), ih = eye(f, nh);
    if (act.side == Side::left) {
        Matrix lhs = act.map * kron(ih, a.mul);
        Matrix rhs = a.mul * kron(act.map, act.map) * detail::middle_swap(f, nh, nh, na, na) * kron({HC.comul, ia, ia});
        if (!r.expect_equal("module_algebra.multiplicative", lhs, rhs, {{nh, na, na}}, {{na}}))
            return r;
        r.expect_equal("module_algebra.unital", act.map * kron(ih, a.unit), a.unit * HC.counit, {{nh}}, {{na}});
    } else {
        Matrix lhs = act.map * kron(a.mul, ih);
        Matrix rhs = a.mul * kron(act.map, act.map) * detail::middle_swap(f, na, na, nh, nh) * kron({ia, ia, HC.comul});
        if (!r.expect_equal("module_algebra.multiplicative", lhs, rhs, {{na, na, nh}}, {{na}}))
            return r;
        r.expect_equal("module_algebra.unital", act.map * kron(a.unit, ih), a.unit * HC.counit, {{nh}}, {{na}});
    }
    return r;
}

/// Delta(c.h) = c_1 h_1 (x) c_2 h_2, eps(c.h) = eps(c) eps(h), or mirrored.
inline Report verify_module_coalgebra(const Structure &h, const Coalgebra &c, const Action &act)
{
    detail::require_bialgebra(h, "module coalgebra");
    Report r(std::string(to_string(act.side)) + " H-module coalgebra");
    const Field f = c.field();
    const Coalgebra &HC = h.coalg();
    const std::size_t nc = c.dim(), nh = h.dim();
    if (!r.absorb(verify_module(h.alg(), act, nc), "module."))
        return r;
    if (act.side == Side::left) {
        Matrix rhs = kron(act.map, act.map) * detail::middle_swap(f, nh, nh, nc, nc) * kron(HC.comul, c.comul);
        if (!r.expect_equal("module_coalgebra.comultiplicative", c.comul * act.map, rhs, {{nh, nc}}, {{nc, nc}}))
            return r;
        r.expect_equal("module_coalgebra.counital", c.counit * act.map, kron(HC.counit, c.counit), {{nh, nc}}, {{1}});
    } else {
        Matrix rhs = kron(act.map, act.map) * detail::middle_swap(f, nc, nc, nh, nh) * kron(c.comul, HC.comul);
        if (!r.expect_equal("module_coalgebra.comultiplicative", c.comul * act.map, rhs, {{nc, nh}}, {{nc, nc}}))
            return r;
        r.expect_equal("module_coalgebra.counital", c.counit * act.map, kron(c.counit, HC.counit), {{nc, nh}}, {{1}});
    }
    return r;
}

/// rho(ab) = a_0 b_0 (x) a_1 b_1, rho(1) = 1 (x) 1, or mirrored.
inline Report verify_comodule_algebra(const Structure &h, const Algebra &a, const Coaction &co)
{
    detail::require_bialgebra(h, "comodule algebra");
    Report r(std::string(to_string(co.side)) + " H-comodule algebra");
    const Field f = a.field();
    const Algebra &H = h.alg();
    const std::size_t na = a.dim(), nh = h.dim();
    if (!r.absorb(verify_comodule(h.coalg(), co, na), "comodule."))
        return r;
    if (co.side == Side::left) {
        Matrix rhs = kron(H.mul, a.mul) * detail::middle_swap(f, nh, na, nh, na) * kron(co.map, co.map);
        if (!r.expect_equal("comodule_algebra.multiplicative", co.map * a.mul, rhs, {{na, na}}, {{nh, na}}))
            return r;
        r.expect_equal("comodule_algebra.unital", co.map * a.unit, kron(H.unit, a.unit), {{1}}, {{nh, na}});
    } else {
        Matrix rhs = kron(a.mul, H.mul) * detail::middle_swap(f, na, nh, na, nh) * kron(co.map, co.map);
        if (!r.expect_equal("comodule_algebra.multiplicative", co.map * a.mul, rhs, {{na, na}}, {{na, nh}}))
            return r;
        r.expect_equal("comodule_algebra.unital", co.map * a.unit, kron(a.unit, H.unit), {{1}}, {{na, nh}});
    }
    return r;
}

/// (Delta (x) I) rho(c) = c_1,0 (x) c_2,0 (x) c_1,1 c_2,1, eps(c_0) c_1 = eps(c) 1,
/// or mirrored.
inline Report verify_comodule_coalgebra(const Structure &h, const Coalgebra &c, const Coaction &co)
{
    detail::require_bialgebra(h, "comodule coalgebra");
    Report r(std::string(to_string(co.side)) + " H-comodule coalgebra");
    const Field f = c.field();
    const Algebra &H = h.alg();
    const std::size_t nc = c.dim(), nh = h.dim();
    if (!r.absorb(verify_comodule(h.coalg(), co, nc), "comodule."))
        return r;
    Matrix ic = eye(f, nc), ih = eye(f, nh);
    if (co.side == Side::left) {
        Matrix lhs = kron(ih, c.comul) * co.map;
        Matrix rhs = kron({H.mul, ic, ic}) * detail::middle_swap(f, nh, nc, nh, nc) * kron(co.map, co.map) * c.comul;
        if (!r.expect_equal("comodule_coalgebra.comultiplicative", lhs, rhs, {{nc}}, {{nh, nc, nc}}))
            return r;
        r.expect_equal("comodule_coalgebra.counital", kron(ih, c.counit) * co.map, H.unit * c.counit, {{nc}}, {{nh}});
    } else {
        Matrix lhs = kron(c.comul, ih) * co.map;
        Matrix rhs = kron({ic, ic, H.mul}) * detail::middle_swap(f, nc, nh, nc, nh) * kron(co.map, co.map) * c.comul;
        if (!r.expect_equal("comodule_coalgebra.comultiplicative", lhs, rhs, {{nc}}, {{nc, nc, nh}}))
            return r;
        r.expect_equal("comodule_coalgebra.counital", kron(c.counit, ih) * co.map, H.unit * c.counit, {{nc}}, {{nh}});
    }
    return r;
}

// ---------------------------------------------------------------------------
// Doi-Koppinen structures

struct DKStructure {
    Structure bialgebra;
    Algebra algebra;
    Coaction algebra_coaction; // right, A -> A (x) H
    Coalgebra coalgebra;
    Action coalgebra_action;   // right, C (x) H -> C
};

/// H acts on A and coacts on C instead.
struct AltDKStructure {
    Structure bialgebra;
    Algebra algebra;
    Action algebra_action;       // right, A (x) H -> A
    Coalgebra coalgebra;
    Coaction coalgebra_coaction; // right, C -> C (x) H
};

inline Report verify_dk(const DKStructure &s)
{
    Report r("Doi-Koppinen structure");
    if (s.algebra_coaction.side != Side::right || s.coalgebra_action.side != Side::right)
        throw input_error("Doi-Koppinen structure: the coaction on A and the action on C must be right-handed");
    if (!r.absorb(verify_structure(s.bialgebra), "H."))
        return r;
    detail::require_bialgebra(s.bialgebra, "Doi-Koppinen structure");
    if (!r.absorb(verify_algebra(s.algebra), "A."))
        return r;
    if (!r.absorb(verify_coalgebra(s.coalgebra), "C."))
        return r;
    if (!r.absorb(verify_comodule_algebra(s.bialgebra, s.algebra, s.algebra_coaction), "A."))
        return r;
    r.absorb(verify_module_coalgebra(s.bialgebra, s.coalgebra, s.coalgebra_action), "C.");
    return r;
}

inline Report verify_alt_dk(const AltDKStructure &s)
{
    Report r("alternative Doi-Koppinen structure");
    if (s.algebra_action.side != Side::right || s.coalgebra_coaction.side != Side::right)
        throw input_error("alternative Doi-Koppinen structure: the action on A and the coaction on C must be right-handed");
    if (!r.absorb(verify_structure(s.bialgebra), "H."))
        return r;
    detail::require_bialgebra(s.bialgebra, "alternative Doi-Koppinen structure");
    if (!r.absorb(verify_algebra(s.algebra), "A."))
        return r;
    if (!r.absorb(verify_coalgebra(s.coalgebra), "C."))
        return r;
    if (!r.absorb(verify_module_algebra(s.bialgebra, s.algebra, s.algebra_action), "A."))
        return r;
    r.absorb(verify_comodule_coalgebra(s.bialgebra, s.coalgebra, s.coalgebra_coaction), "C.");
    return r;
}

/// psi(c (x) a) = sum a_0 (x) c . a_1
inline Entwining dk_entwining(const DKStructure &s)
{
    const Field f = s.algebra.field();
    const std::size_t na = s.algebra.dim(), nc = s.coalgebra.dim(), nh = s.bialgebra.dim();
    Matrix psi = kron(eye(f, na), s.coalgebra_action.map) * permute_factors(f, {nc, na, nh}, {1, 0, 2}) *
                 kron(eye(f, nc), s.algebra_coaction.map);
    return {s.algebra, s.coalgebra, psi};
}

/// psi(c (x) a) = sum a . c_1 (x) c_0
inline Entwining alt_dk_entwining(const AltDKStructure &s)
{
    const Field f = s.algebra.field();
    const std::size_t na = s.algebra.dim(), nc = s.coalgebra.dim(), nh = s.bialgebra.dim();
    Matrix psi = kron(s.algebra_action.map, eye(f, nc)) * permute_factors(f, {nc, nh, na}, {2, 1, 0}) *
                 kron(s.coalgebra_coaction.map, eye(f, na));
    return {s.algebra, s.coalgebra, psi};
}

/// Structure constants of the Koppinen smash product on Hom(C, A),
/// (f.g)(c) = sum f(c_2)_0 g(c_1 f(c_2)_1), computed by direct summation over
/// the Sweedler indices. Column (i*nc+j)*n + (k*nc+l) is E_ij . E_kl where
/// E_ij sends c_j to a_i.
inline Matrix koppinen_product(const DKStructure &s)
{
    const Field f = s.algebra.field();
    const std::size_t na = s.algebra.dim(), nc = s.coalgebra.dim(), nh = s.bialgebra.dim(), n = na * nc;
    const Matrix &comul = s.coalgebra.comul, &rho = s.algebra_coaction.map, &act = s.coalgebra_action.map;
    const Matrix &mul = s.algebra.mul;
    Matrix out(f, n, n * n);
    for (std::size_t i = 0; i < na; ++i)
        for (std::size_t j = 0; j < nc; ++j)
            for (std::size_t k = 0; k < na; ++k)
                for (std::size_t l = 0; l < nc; ++l) {
                    std::size_t col = (i * nc + j) * n + (k * nc + l);
                    for (std::size_t m = 0; m < nc; ++m)         // evaluate at c_m
                        for (std::size_t u = 0; u < nc; ++u) {   // c_1 = c_u, c_2 = c_j
                            Scalar d = comul(u * nc + j, m);
                            if (d == 0)
                                continue;
                            for (std::size_t sa = 0; sa < na; ++sa) // f(c_2)_0 = a_sa
                                for (std::size_t h = 0; h < nh; ++h) {
                                    Scalar r = rho(sa * nh + h, i);
                                    if (r == 0)
                                        continue;
                                    Scalar g = act(l, u * nh + h); // coefficient of c_l in c_u . h
                                    if (g == 0)
                                        continue;
                                    Scalar w = f.mul(f.mul(d, r), g);
                                    for (std::size_t t = 0; t < na; ++t) {
                                        Scalar p = mul(t, sa * na + k);
                                        if (p != 0)
                                            out.add(t * nc + m, col, f.mul(w, p));
                                    }
                                }
                        }
                }
    return out;
}

// ---------------------------------------------------------------------------
// Dualizing the ingredients

struct DualIngredient {
    Algebra algebra;           // the algebra side of the dual pair
    std::optional<Coalgebra> coalgebra;
    std::optional<Action> action;
    std::optional<Coaction> coaction;
    Report report{"dual ingredient"};
};

/// A right H-comodule algebra is a left H*-module algebra via
/// f -> a = sum a_0 f(a_1); its dual coalgebra is a right H*-module coalgebra.
inline DualIngredient dualize_comodule_algebra(const Structure &h, const Algebra &a, const Coaction &co)
{
    DualIngredient out;
    Report &r = out.report;
    if (!r.absorb(verify_comodule_algebra(h, a, co), "source."))
        return out;
    Structure u = dualize_structure(h);
    out.algebra = a;
    out.action = module_from_comodule(canonical_pairing(h.coalg()), co, a.dim());
    if (!r.absorb(verify_module_algebra(u, a, *out.action), "module_algebra."))
        return out;
    out.coalgebra = dual_coalgebra(a);
    Action dual_act{co.side, co.map.transpose()};
    r.absorb(verify_module_coalgebra(u, *out.coalgebra, dual_act), "dual_module_coalgebra.");
    return out;
}

/// A right H-module coalgebra C makes C* a left H-module algebra,
/// (h f)(c) = f(c h), and Rat^{H*}(_H C*) a right H*-comodule algebra.
inline DualIngredient dualize_module_coalgebra(const Structure &h, const Coalgebra &c, const Action &act)
{
    DualIngredient out;
    Report &r = out.report;
    if (!r.absorb(verify_module_coalgebra(h, c, act), "source."))
        return out;
    out.algebra = dual_algebra(c);
    out.action = contragredient(act, c.dim(), h.dim());
    if (!r.absorb(verify_module_algebra(h, out.algebra, *out.action), "module_algebra."))
        return out;
    RationalPart rat = rational_submodule(evaluation_pairing(h.alg()), *out.action, c.dim());
    r.fact("rational_dim", std::to_string(rat.dim()));
    if (rat.dim() != c.dim())
        return r.fail("rational part is proper in finite dimension"), out;
    out.coaction = rat.coaction;
    r.absorb(verify_comodule_algebra(dualize_structure(h), out.algebra, *out.coaction), "comodule_algebra.");
    return out;
}

/// A right H-comodule coalgebra C is a left H*-module coalgebra and C* a
/// right H*-module algebra.
inline DualIngredient dualize_comodule_coalgebra(const Structure &h, const Coalgebra &c, const Coaction &co)
{
    DualIngredient out;
    Report &r = out.report;
    if (!r.absorb(verify_comodule_coalgebra(h, c, co), "source."))
        return out;
    Structure u = dualize_structure(h);
    Action on_c = module_from_comodule(canonical_pairing(h.coalg()), co, c.dim());
    if (!r.absorb(verify_module_coalgebra(u, c, on_c), "module_coalgebra."))
        return out;
    out.coalgebra = c;
    out.algebra = dual_algebra(c);
    out.action = contragredient(on_c, c.dim(), u.dim());
    r.absorb(verify_module_algebra(u, out.algebra, *out.action), "dual_module_algebra.");
    return out;
}

/// A right H-module algebra A gives a left H-module structure on A*,
/// (h f)(a) = f(a h).
inline Action dualize_module_algebra(const Structure &h, const Algebra &a, const Action &act)
{
    Report r = verify_module_algebra(h, a, act);
    if (!r)
        throw hypothesis_error("dualize_module_algebra: " + r.message);
    return contragredient(act, a.dim(), h.dim());
}

struct DualDK {
    DKStructure dual;
    DualEntwining entwining; // full dual of the source entwining
    Report report{"dual Doi-Koppinen structure"};
};

/// (H, A, C) -> (H*, C*, A*): C* is a right H*-comodule algebra (the rational
/// part of the left H-module C*) and A* a right H*-module coalgebra.
inline DualDK dual_dk(const DKStructure &s)
{
    DualDK out;
    Report &r = out.report;
    if (!r.absorb(verify_dk(s), "source."))
        return out;
    r.fact("finite_dual", "full dual (finite-dimensional regime)");
    DualIngredient c0 = dualize_module_coalgebra(s.bialgebra, s.coalgebra, s.coalgebra_action);
    if (!r.absorb(c0.report, "C*."))
        return out;
    out.dual.bialgebra = dualize_structure(s.bialgebra);
    out.dual.algebra = c0.algebra;
    out.dual.algebra_coaction = *c0.coaction;
    out.dual.coalgebra = dual_coalgebra(s.algebra);
    out.dual.coalgebra_action = Action{Side::right, s.algebra_coaction.map.transpose()};
    if (!r.absorb(verify_dk(out.dual), "dual."))
        return out;
    out.entwining = dual_entwining(dk_entwining(s));
    if (!r.absorb(out.entwining.report, "dual_entwining."))
        return out;
    r.expect_equal("dual_dk.entwining_matches_dual_entwining", dk_entwining(out.dual).psi, out.entwining.dual.psi,
                   {{s.algebra.dim(), s.coalgebra.dim()}}, {{s.coalgebra.dim(), s.algebra.dim()}});
    return out;
}

[[noreturn]] inline void dualize_alt_dk(const AltDKStructure &)
{
    throw input_error("not supported: the dual of an alternative Doi-Koppinen structure need not be one "
                      "(the dual coaction on A* can fail to exist)");
}

/// Doi-Koppinen modules dualize through the dual entwining: up = false gives
/// M* rational over A*, up = true treats M as a module over the dual and
/// returns its rational part over C.
inline DualModule dk_dual_module(const DKStructure &s, const ModulePresentation &m, bool up = false)
{
    DualEntwining d = dual_entwining(dk_entwining(s));
    if (!d.report)
        throw consistency_error("dk_dual_module: " + d.report.message);
    return up ? dual_module_upper_r(d, m) : dual_module_r(d, m);
}

// ---------------------------------------------------------------------------
// Morphisms

/// (beta, gamma, delta) : (H, A, C) -> (K, B, D) with beta a bialgebra map,
/// gamma an algebra map, delta a coalgebra map and
/// gamma(a_0) (x) delta(c a_1) = gamma(a)_0 (x) delta(c) gamma(a)_1.
inline Report verify_dk_morphism(const DKStructure &s, const DKStructure &t, const Matrix &beta, const Matrix &gamma,
                                 const Matrix &delta)
{
    Report r("Doi-Koppinen morphism");
    if (!r.absorb(verify_bialgebra_morphism(s.bialgebra, t.bialgebra, beta), "beta."))
        return r;
    r.absorb(verify_entwining_morphism(dk_entwining(s), dk_entwining(t), gamma, delta));
    return r;
}

/// The dual triple (beta*, delta*, gamma*) : (K*, D*, B*) -> (H*, C*, A*).
inline Report dual_dk_morphism(const DKStructure &s, const DKStructure &t, const Matrix &beta, const Matrix &gamma,
                               const Matrix &delta)
{
    Report r("dual Doi-Koppinen morphism");
    if (!r.absorb(verify_dk_morphism(s, t, beta, gamma, delta), "source."))
        return r;
    DualDK ds = dual_dk(s), dt = dual_dk(t);
    if (!r.absorb(ds.report, "dual_source.") || !r.absorb(dt.report, "dual_target."))
        return r;
    r.absorb(verify_dk_morphism(dt.dual, ds.dual, beta.transpose(), delta.transpose(), gamma.transpose()), "dual.");
    return r;
}

// ---------------------------------------------------------------------------
// Long dimodules: rho(m a) = m_0 a (x) m_1 for a right A-module, right
// C-comodule M. These are the entwined modules of the flip.

inline Report long_dimodule_check(const Algebra &a, const Coalgebra &c, const ModulePresentation &m)
{
    Report r("Long dimodule");
    require_entwined_shape(m);
    const Field f = a.field();
    const std::size_t na = a.dim(), nc = c.dim(), dm = m.dim;
    if (!r.absorb(verify_module(a, *m.action, dm), "action."))
        return r;
    if (!r.absorb(verify_comodule(c, *m.coaction, dm), "coaction."))
        return r;
    Matrix lhs = m.coaction->map * m.action->map;
    Matrix rhs = kron(m.action->map, eye(f, nc)) * kron(eye(f, dm), swap_factors(f, nc, na)) *
                 kron(m.coaction->map, eye(f, na));
    r.expect_equal("long.compatibility", lhs, rhs, {{dm, na}}, {{dm, nc}});
    bool entwined = static_cast<bool>(verify_entwined_module(flip_entwining(a, c), m));
    if (entwined != r.pass)
        throw consistency_error("Long dimodule check disagrees with the flip entwining");
    return r;
}

// ---------------------------------------------------------------------------
// Extensions: B a right H-comodule algebra, B^{co H} = {b : rho(b) = b (x) 1}.

struct Extension {
    Structure bialgebra;
    Algebra algebra;
    Coaction coaction;
};

inline Subspace coinvariants(const Extension &x)
{
    const Field f = x.algebra.field();
    const std::size_t nb = x.algebra.dim();
    return kernel(x.coaction.map - kron(eye(f, nb), x.bialgebra.alg().unit));
}

struct IntegralCheck {
    bool colinear = false;
    bool total = false;
    bool cleft = false;
    std::optional<Matrix> inverse;
    Report report{"integral"};
};

/// gamma : H -> B is an integral when colinear, total when gamma(1) = 1 and
/// cleft when convolution invertible. The report passes for a cleft total
/// integral.
inline IntegralCheck check_integral(const Extension &x, const Matrix &gamma)
{
    IntegralCheck out;
    Report &r = out.report;
    const Structure &h = x.bialgebra;
    const std::size_t nb = x.algebra.dim(), nh = h.dim();
    if (gamma.rows() != nb || gamma.cols() != nh)
        throw input_error("check_integral: map has shape " + gamma.shape() + ", expected " + std::to_string(nb) +
                          "x" + std::to_string(nh));
    if (!r.absorb(verify_comodule_algebra(h, x.algebra, x.coaction), "extension."))
        return out;
    out.colinear = x.coaction.map * gamma == kron(gamma, eye(gamma.field(), nh)) * h.coalg().comul;
    out.total = gamma * h.alg().unit == x.algebra.unit;
    ConvolutionInverse inv = convolution_inverse(h.coalg(), x.algebra, gamma);
    out.cleft = inv.inverse.has_value();
    out.inverse = inv.inverse;
    r.fact("colinear", out.colinear ? "yes" : "no");
    r.fact("total", out.total ? "yes" : "no");
    r.fact("cleft", out.cleft ? "yes" : "no");
    if (!out.colinear)
        r.fail("not H-colinear");
    else if (!out.total)
        r.fail("not total");
    else if (!out.cleft)
        r.fail("not convolution invertible");
    return out;
}

// ---------------------------------------------------------------------------
// Coextensions: D a right H-module coalgebra, C = D / D H+.

struct Coextension {
    Structure bialgebra;
    Coalgebra coalgebra; // D
    Action action;       // D (x) H -> D
    Subspace ideal{Field::rationals(), 0}; // D H+
    Coalgebra quotient;  // C
    Matrix projection;   // D -> C
    Matrix lift;         // C -> D, projection * lift = I
    Report report{"coextension"};
};

inline Coextension coextension_quotient(const Structure &h, const Coalgebra &d, const Action &act)
{
    Coextension out;
    out.bialgebra = h;
    out.coalgebra = d;
    out.action = act;
    Report &r = out.report;
    if (!r.absorb(verify_module_coalgebra(h, d, act), "D."))
        return out;
    const Field f = d.field();
    const std::size_t nd = d.dim();
    Subspace hplus = kernel(h.coalg().counit);
    out.ideal = image(act.map * kron(eye(f, nd), hplus.inclusion()));
    const std::size_t k = out.ideal.dim(), nq = nd - k;
    r.fact("ideal_dim", std::to_string(k));

    Matrix incl = out.ideal.inclusion();
    Subspace coideal_target = sum(image(kron(incl, eye(f, nd))), image(kron(eye(f, nd), incl)));
    if (!coideal_target.contains_columns(d.comul * incl))
        return r.fail("D H+ is not a coideal"), out;
    if (!(d.counit * incl).is_zero())
        return r.fail("counit does not vanish on D H+"), out;
    r.checked.push_back("coextension.coideal");

    // Complement spanned by the non-pivot unit vectors of the RREF basis.
    const auto &piv = out.ideal.pivots();
    std::vector<std::size_t> free_cols;
    for (std::size_t j = 0; j < nd; ++j)
        if (std::find(piv.begin(), piv.end(), j) == piv.end())
            free_cols.push_back(j);
    out.projection = Matrix(f, nq, nd);
    out.lift = Matrix(f, nd, nq);
    for (std::size_t q = 0; q < nq; ++q) {
        out.projection.set(q, free_cols[q], Scalar(1));
        out.lift.set(free_cols[q], q, Scalar(1));
    }
    const Matrix &basis = out.ideal.basis();
    for (std::size_t row = 0; row < k; ++row)
        for (std::size_t q = 0; q < nq; ++q)
            if (basis(row, free_cols[q]) != 0)
                out.projection.set(q, piv[row], f.neg(basis(row, free_cols[q])));
    if (!(out.projection * incl).is_zero())
        throw consistency_error("coextension projection does not kill D H+");

    out.quotient = {kron(out.projection, out.projection) * d.comul * out.lift, d.counit * out.lift};
    if (!r.absorb(verify_coalgebra(out.quotient), "C."))
        return out;
    r.absorb(verify_coalgebra_morphism(d, out.quotient, out.projection), "projection.");
    return out;
}

struct CointegralCheck {
    bool linear = false;
    bool total = false;
    bool cocleft = false;
    std::optional<Matrix> inverse;
    Report report{"cointegral"};
};

/// omega : D -> H is a cointegral when H-linear, total when
/// eps_H omega = eps_D, cocleft when convolution invertible. When H has an
/// antipode the inverse satisfies omega^-1(d h) = S(h) omega^-1(d).
inline CointegralCheck check_cointegral(const Coextension &x, const Matrix &omega)
{
    CointegralCheck out;
    Report &r = out.report;
    const Structure &h = x.bialgebra;
    const Field f = omega.field();
    const std::size_t nd = x.coalgebra.dim(), nh = h.dim();
    if (omega.rows() != nh || omega.cols() != nd)
        throw input_error("check_cointegral: map has shape " + omega.shape() + ", expected " + std::to_string(nh) +
                          "x" + std::to_string(nd));
    if (!r.absorb(x.report, "coextension."))
        return out;
    out.linear = omega * x.action.map == h.alg().mul * kron(omega, eye(f, nh));
    out.total = h.coalg().counit * omega == x.coalgebra.counit;
    ConvolutionInverse inv = convolution_inverse(x.coalgebra, h.alg(), omega);
    out.cocleft = inv.inverse.has_value();
    out.inverse = inv.inverse;
    r.fact("linear", out.linear ? "yes" : "no");
    r.fact("total", out.total ? "yes" : "no");
    r.fact("cocleft", out.cocleft ? "yes" : "no");
    if (!out.linear)
        return r.fail("not H-linear"), out;
    if (!out.total)
        return r.fail("not total"), out;
    if (!out.cocleft)
        return r.fail("not convolution invertible"), out;
    std::optional<Matrix> s = h.antipode ? h.antipode : compute_antipode(h);
    if (s) {
        Matrix lhs = *out.inverse * x.action.map;
        Matrix rhs = h.alg().mul * kron(*s, *out.inverse) * swap_factors(f, nd, nh);
        r.expect_equal("cointegral.inverse_antilinear", lhs, rhs, {{nd, nh}}, {{nh}});
    }
    return out;
}

struct DualCoextension {
    Extension extension;             // (H*, D*, coaction)
    Subspace coinvariants{Field::rationals(), 0};
    std::optional<IntegralCheck> integral; // for omega* when a cointegral is given
    Report report{"dual coextension"};
};

/// D* is a right H*-comodule algebra whose coinvariants are C*; a cocleft
/// cointegral omega dualizes to a cleft integral omega* with inverse
/// (omega^-1)*. Requires a bijective antipode.
inline DualCoextension dualize_coextension(const Coextension &x, const std::optional<Matrix> &omega = std::nullopt)
{
    DualCoextension out;
    Report &r = out.report;
    if (!r.absorb(x.report, "coextension."))
        return out;
    const Structure &h = x.bialgebra;
    std::optional<Matrix> s = h.antipode ? h.antipode : compute_antipode(h);
    if (!s)
        throw hypothesis_error("dualize_coextension: H has no antipode");
    if (!inverse(*s))
        throw hypothesis_error("dualize_coextension: the antipode of H is not bijective");
    r.checked.push_back("coextension.bijective_antipode");

    DualIngredient d0 = dualize_module_coalgebra(h, x.coalgebra, x.action);
    if (!r.absorb(d0.report, "D*."))
        return out;
    if (!(d0.coaction->map == x.action.map.transpose()))
        throw consistency_error("rational coaction on D* differs from the transposed action");
    out.extension = {dualize_structure(h), d0.algebra, *d0.coaction};
    out.coinvariants = coinvariants(out.extension);
    r.fact("coinvariants_dim", std::to_string(out.coinvariants.dim()));
    if (!(out.coinvariants == image(x.projection.transpose())))
        return r.fail("coinvariants of D* differ from C*"), out;
    r.checked.push_back("dual_coextension.coinvariants_are_quotient_dual");
    if (omega) {
        CointegralCheck co = check_cointegral(x, *omega);
        out.integral = check_integral(out.extension, omega->transpose());
        r.fact("dual_integral_cleft", out.integral->cleft ? "yes" : "no");
        if (co.cocleft != out.integral->cleft)
            return r.fail("cocleftness of omega and cleftness of its dual disagree"), out;
        if (co.cocleft && !(out.integral->inverse == std::optional<Matrix>(co.inverse->transpose())))
            return r.fail("dual of the inverse is not the inverse of the dual"), out;
        r.checked.push_back("dual_coextension.integral_transfer");
    }
    return out;
}

} // namespace entwine
