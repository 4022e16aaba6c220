#pragma once

// Dual entwining structures. Given (A, C, psi), a subalgebra A~ of C*
// containing eps_C and a subcoalgebra C~ of A*, the transpose of psi
// restricts to phi : C~ (x) A~ -> A~ (x) C~ whenever
// psi*(C~ (x) A~) lies in A~ (x) C~:
//
//     phi(f (x) g)(c (x) a) = sum f(a_psi) g(c^psi).
//
// Dual entwined modules M_r = Rat^{C~}(_A M*) and K^r = Rat^C(_{A~} K*), and
// the natural bijection Hom(M, K^r) ~ Hom(K, M_r).
//
// Subspaces of a dual space are stored by RREF row bases; all coordinates on
// A~, C~, M_r and K^r refer to those bases.

#include "entwine/entwining.hpp"

namespace entwine {

struct DualEntwining {
    Entwining source;
    Subspace a_tilde{Field::rationals(), 0}; // inside C*
    Subspace c_tilde{Field::rationals(), 0}; // inside A*
    Entwining dual;                          // (A~, C~, phi)
    Pairing a_tilde_with_c;                  // (A~, C)
    Pairing a_with_c_tilde;                  // (A, C~)
    Report report{"dual entwining"};

    bool full() const
    {
        return a_tilde.dim() == source.dim_c() && c_tilde.dim() == source.dim_a();
    }
};

namespace detail {

/// Solves incl * x = target column by column; nullopt with the first bad
/// column index when some column is outside the span.
inline std::optional<Matrix> coordinates_in(const Matrix &incl, const Matrix &target, std::size_t *bad = nullptr)
{
    Matrix out(incl.field(), incl.cols(), target.cols());
    for (std::size_t j = 0; j < target.cols(); ++j) {
        Solution s = solve_linear(incl, target.column(j));
        if (!s.consistent) {
            if (bad)
                *bad = j;
            return std::nullopt;
        }
        out.set_column(j, s.particular);
    }
    return out;
}

} // namespace detail

/// Builds (A~, C~, phi). Defaults are the full duals. Closure failures are
/// reported in `report` with the offending basis indices.
inline DualEntwining dual_entwining(const Entwining &e, std::optional<Subspace> a_tilde = std::nullopt,
                                    std::optional<Subspace> c_tilde = std::nullopt)
{
    check_entwining_shape(e);
    const Field f = e.field();
    const std::size_t na = e.dim_a(), nc = e.dim_c();
    DualEntwining d;
    d.source = e;
    d.a_tilde = a_tilde ? *a_tilde : Subspace::full(f, nc);
    d.c_tilde = c_tilde ? *c_tilde : Subspace::full(f, na);
    if (d.a_tilde.ambient() != nc || d.c_tilde.ambient() != na)
        throw input_error("dual_entwining: subspaces must live in C* (dim " + std::to_string(nc) + ") and A* (dim " +
                          std::to_string(na) + ")");
    Report &r = d.report;
    r.fact("finite_dual", "full dual (finite-dimensional regime)");
    const std::size_t da = d.a_tilde.dim(), dc = d.c_tilde.dim();
    Matrix ia = d.a_tilde.inclusion(), ic = d.c_tilde.inclusion();

    // A~ as a subalgebra of the convolution algebra C*.
    Algebra cstar = dual_algebra(e.coalgebra);
    auto unit = d.a_tilde.coordinates(cstar.unit);
    if (!unit)
        return r.fail("dual.unit_in_subalgebra: eps_C is not in the chosen subalgebra"), d;
    std::size_t bad = 0;
    auto amul = detail::coordinates_in(ia, cstar.mul * kron(ia, ia), &bad);
    if (!amul) {
        r.fail("dual.subalgebra_closed violated");
        r.witness = Witness{"dual.subalgebra_closed", TensorShape{{da, da}}.decode(bad), {}, "product", "outside"};
        return d;
    }
    r.checked.push_back("dual.unit_in_subalgebra");
    r.checked.push_back("dual.subalgebra_closed");

    // C~ as a subcoalgebra of A*.
    Coalgebra astar = dual_coalgebra(e.algebra);
    auto ccomul = detail::coordinates_in(kron(ic, ic), astar.comul * ic, &bad);
    if (!ccomul) {
        r.fail("dual.subcoalgebra_closed violated");
        r.witness = Witness{"dual.subcoalgebra_closed", {bad}, {}, "coproduct", "outside"};
        return d;
    }
    r.checked.push_back("dual.subcoalgebra_closed");

    d.dual.algebra = {*amul, *unit};
    d.dual.coalgebra = {*ccomul, astar.counit * ic};
    d.a_tilde_with_c = {d.dual.algebra, e.coalgebra, d.a_tilde.basis()};
    d.a_with_c_tilde = {e.algebra, d.dual.coalgebra, d.c_tilde.basis().transpose()};

    // psi^T maps (A (x) C)* = A* (x) C* to (C (x) A)* = C* (x) A*.
    auto phi = detail::coordinates_in(kron(ia, ic), e.psi.transpose() * kron(ic, ia), &bad);
    if (!phi) {
        r.fail("closure violated: psi* does not map C~ (x) A~ into A~ (x) C~");
        r.witness = Witness{"dual.closure", TensorShape{{dc, da}}.decode(bad), {}, "psi*(f (x) g)", "outside A~ (x) C~"};
        return d;
    }
    r.checked.push_back("dual.closure");
    d.dual.psi = *phi;

    if (!r.absorb(verify_entwining(d.dual), "dual."))
        return d;
    if (d.full()) {
        // Double dual: dualizing (C*, A*, psi^T) again returns psi under the
        // evaluation identification. Reported, not required.
        r.fact("double_dual_matches", d.dual.psi.transpose() == e.psi ? "yes" : "no");
    }
    return d;
}

/// Sends M* of an entwined module to its left A-action and right A~-action.
struct DualSpaceActions {
    Action left;  // from the right action on the source
    Action right; // from the coaction paired against the other side
};

inline DualSpaceActions dual_space_actions(const Algebra &acting, const Pairing &coaction_pairing,
                                           const ModulePresentation &m)
{
    require_entwined_shape(m);
    DualSpaceActions out;
    out.left = contragredient(*m.action, m.dim, acting.dim());
    // g.m = sum m_0 g(m_1) is a left action on M; its contragredient is the
    // right action on M*.
    Action on_m = module_from_comodule(coaction_pairing, *m.coaction, m.dim);
    out.right = contragredient(on_m, m.dim, coaction_pairing.algebra.dim());
    return out;
}

struct DualModule {
    Subspace subspace{Field::rationals(), 0}; // inside the dual space of the source module
    ModulePresentation module;
    Report report{"dual module"};
};

namespace detail {

inline DualModule dual_module(const Algebra &left_algebra, const Pairing &rat_pairing, const Algebra &right_algebra,
                              const Pairing &coaction_pairing, const Entwining &target, const ModulePresentation &m,
                              const char *name)
{
    DualModule out;
    out.report = Report(name);
    DualSpaceActions acts = dual_space_actions(left_algebra, coaction_pairing, m);
    RationalPart rat = rational_submodule(rat_pairing, acts.left, m.dim);
    out.subspace = rat.subspace;
    out.module.dim = rat.dim();
    out.module.action = restrict_action(acts.right, rat.subspace, right_algebra.dim());
    out.module.coaction = rat.coaction;
    out.report.fact("dim", std::to_string(rat.dim()));
    out.report.absorb(verify_entwined_module(target, out.module));
    return out;
}

} // namespace detail

/// M_r = Rat^{C~}(_A M*) for M entwined over the source.
inline DualModule dual_module_r(const DualEntwining &d, const ModulePresentation &m)
{
    if (!d.report)
        throw hypothesis_error("dual_module_r: the dual entwining is not available");
    return detail::dual_module(d.source.algebra, d.a_with_c_tilde, d.dual.algebra, d.a_tilde_with_c, d.dual, m,
                               "dual module M_r");
}

/// K^r = Rat^C(_{A~} K*) for K entwined over the dual.
inline DualModule dual_module_upper_r(const DualEntwining &d, const ModulePresentation &k)
{
    if (!d.report)
        throw hypothesis_error("dual_module_upper_r: the dual entwining is not available");
    require_alpha(d.a_tilde_with_c, "dual_module_upper_r");
    return detail::dual_module(d.dual.algebra, d.a_tilde_with_c, d.source.algebra, d.a_with_c_tilde, d.source, k,
                               "dual module K^r");
}

/// f* restricted to dual submodules: for f : M -> N, the map N' -> M' where
/// N' and M' are subspaces of N* and M*.
inline Matrix restricted_transpose(const Matrix &f, const Subspace &target_sub, const Subspace &source_sub)
{
    auto c = source_sub.coordinates_of_columns(f.transpose() * target_sub.inclusion());
    if (!c)
        throw consistency_error("transpose does not map between the rational parts");
    return *c;
}

struct AdjunctionResult {
    DualModule m_r;
    DualModule k_r;
    Subspace hom_mk{Field::rationals(), 0}; // Hom_A^C(M, K^r)
    Subspace hom_km{Field::rationals(), 0}; // Hom_{A~}^{C~}(K, M_r)
    Matrix lambda;                          // Hom(M, K^r) -> Hom(K, M_r), in hom-space coordinates
    Matrix gamma;                           // the reverse direction
    Report report{"adjunction"};
};

inline AdjunctionResult adjunction_check(const DualEntwining &d, const ModulePresentation &m,
                                         const ModulePresentation &k)
{
    AdjunctionResult out;
    Report &r = out.report;
    if (!r.absorb(verify_entwined_module(d.source, m), "M."))
        return out;
    if (!r.absorb(verify_entwined_module(d.dual, k), "K."))
        return out;
    out.m_r = dual_module_r(d, m);
    if (!r.absorb(out.m_r.report, "M_r."))
        return out;
    out.k_r = dual_module_upper_r(d, k);
    if (!r.absorb(out.k_r.report, "K^r."))
        return out;
    const Field f = d.source.field();
    const ModulePresentation &mr = out.m_r.module, &kr = out.k_r.module;
    out.hom_mk = hom_entwined_space(d.source, m, kr);
    out.hom_km = hom_entwined_space(d.dual, k, mr);
    r.fact("dim_hom_M_Kr", std::to_string(out.hom_mk.dim()));
    r.fact("dim_hom_K_Mr", std::to_string(out.hom_km.dim()));

    // lambda_K(k) = evaluation at k, i.e. the basis matrix of K^r; same for M.
    const Matrix &lambda_k = out.k_r.subspace.basis();
    const Matrix &lambda_m = out.m_r.subspace.basis();

    // lambda_M(M) lies in (M_r)^r and lambda_K(K) in (K^r)_r.
    DualModule mrr = dual_module_upper_r(d, mr);
    if (!mrr.subspace.contains_columns(lambda_m))
        return r.fail("lambda_M(M) is not inside (M_r)^r"), out;
    r.checked.push_back("adjunction.lambda_M_lands_in_double_dual");
    DualModule krr = dual_module_r(d, kr);
    if (!krr.subspace.contains_columns(lambda_k))
        return r.fail("lambda_K(K) is not inside (K^r)_r"), out;
    r.checked.push_back("adjunction.lambda_K_lands_in_double_dual");

    const std::size_t n1 = out.hom_mk.dim(), n2 = out.hom_km.dim();
    out.lambda = Matrix(f, n2, n1);
    out.gamma = Matrix(f, n1, n2);
    for (std::size_t t = 0; t < n1; ++t) {
        Matrix fm = Matrix::unvec(out.hom_mk.basis().row(t).transpose(), kr.dim, m.dim);
        auto g = out.m_r.subspace.coordinates_of_columns(fm.transpose() * lambda_k);
        if (!g)
            return r.fail("Lambda(f) does not land in M_r"), out;
        auto c = out.hom_km.coordinates(g->vec());
        if (!c)
            return r.fail("Lambda(f) is not a morphism of dual entwined modules"), out;
        out.lambda.set_column(t, *c);
    }
    r.checked.push_back("adjunction.Lambda_well_defined");
    for (std::size_t t = 0; t < n2; ++t) {
        Matrix gk = Matrix::unvec(out.hom_km.basis().row(t).transpose(), mr.dim, k.dim);
        auto fm = out.k_r.subspace.coordinates_of_columns(gk.transpose() * lambda_m);
        if (!fm)
            return r.fail("Gamma(g) does not land in K^r"), out;
        auto c = out.hom_mk.coordinates(fm->vec());
        if (!c)
            return r.fail("Gamma(g) is not a morphism of entwined modules"), out;
        out.gamma.set_column(t, *c);
    }
    r.checked.push_back("adjunction.Gamma_well_defined");
    if (n1 != n2)
        return r.fail("Hom spaces have different dimensions"), out;
    if (!r.expect_equal("adjunction.Gamma_after_Lambda", out.gamma * out.lambda, eye(f, n1), {{n1}}, {{n1}}))
        return out;
    r.expect_equal("adjunction.Lambda_after_Gamma", out.lambda * out.gamma, eye(f, n2), {{n2}}, {{n2}});
    return out;
}

/// (f)_r = f* : N_r -> M_r for an entwined morphism f : M -> N.
inline Matrix dual_morphism_r(const DualEntwining &d, const ModulePresentation &m, const ModulePresentation &n,
                              const Matrix &f)
{
    if (!hom_entwined(d.source, m, n, f))
        throw hypothesis_error("dual_morphism_r: not a morphism of entwined modules");
    return restricted_transpose(f, dual_module_r(d, n).subspace, dual_module_r(d, m).subspace);
}

/// For (gamma, delta) : (A, C, psi) -> (B, D, Psi), checks that
/// (delta*, gamma*) : (B~, D~, Phi) -> (A~, C~, phi) is a morphism.
inline Report dual_entwining_morphism(const DualEntwining &de, const DualEntwining &df, const Matrix &gamma,
                                      const Matrix &delta)
{
    Report r("dual entwining morphism");
    if (!r.absorb(verify_entwining_morphism(de.source, df.source, gamma, delta), "source."))
        return r;
    if (!de.report || !df.report)
        return r.fail("dual entwining structures are not available"), r;
    std::size_t bad = 0;
    auto dstar = detail::coordinates_in(de.a_tilde.inclusion(), delta.transpose() * df.a_tilde.inclusion(), &bad);
    if (!dstar) {
        r.fail("delta*(B~) is not inside A~");
        r.witness = Witness{"dual_morphism.delta_inclusion", {bad}, {}, "delta*(g)", "outside A~"};
        return r;
    }
    r.checked.push_back("dual_morphism.delta_inclusion");
    auto gstar = detail::coordinates_in(de.c_tilde.inclusion(), gamma.transpose() * df.c_tilde.inclusion(), &bad);
    if (!gstar) {
        r.fail("gamma*(D~) is not inside C~");
        r.witness = Witness{"dual_morphism.gamma_inclusion", {bad}, {}, "gamma*(f)", "outside C~"};
        return r;
    }
    r.checked.push_back("dual_morphism.gamma_inclusion");
    r.absorb(verify_entwining_morphism(df.dual, de.dual, *dstar, *gstar), "dual.");
    return r;
}

} // namespace entwine
