#pragma once

// Measuring pairings <-, ->: A x C -> k, the actions they induce on C, the
// alpha-condition and rational submodules.
//
// An A-module M is rational when its action factors through a C-coaction:
// a.m = sum m_0 <a, m_1> for a left module, m.a = sum <a, m_-1> m_0 for a
// right module.

#include "entwine/structures.hpp"

namespace entwine {

/// Signals that a required hypothesis (e.g. the alpha-condition) does not hold for the given data.
class hypothesis_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct Pairing {
    Algebra algebra;
    Coalgebra coalgebra;
    Matrix matrix; // (i, j) = <a_i, c_j>

    Field field() const { return matrix.field(); }
    /// a |-> <a, -> as a map A -> C*.
    Matrix kappa() const { return matrix.transpose(); }
};

/// Evaluation pairing of C* against C.
inline Pairing canonical_pairing(const Coalgebra &c)
{
    return {dual_algebra(c), c, Matrix::identity(c.field(), c.dim())};
}

/// Evaluation pairing of A against A*.
inline Pairing evaluation_pairing(const Algebra &a)
{
    return {a, dual_coalgebra(a), Matrix::identity(a.field(), a.dim())};
}

inline void check_pairing_shape(const Pairing &p)
{
    if (p.matrix.rows() != p.algebra.dim() || p.matrix.cols() != p.coalgebra.dim())
        throw input_error("pairing matrix has shape " + p.matrix.shape() + ", expected " +
                          std::to_string(p.algebra.dim()) + "x" + std::to_string(p.coalgebra.dim()));
}

inline Report verify_measuring_pairing(const Pairing &p)
{
    check_pairing_shape(p);
    Report r("measuring pairing");
    Algebra dual = dual_algebra(p.coalgebra);
    Matrix k = p.kappa();
    std::size_t na = p.algebra.dim(), nc = p.coalgebra.dim();
    if (!r.expect_equal("pairing.multiplicative", k * p.algebra.mul, dual.mul * kron(k, k), {{na, na}}, {{nc}}))
        return r;
    r.expect_equal("pairing.unital", k * p.algebra.unit, dual.unit, {{1}}, {{nc}});
    return r;
}

enum class Harpoon {
    left_action, // a -> c = sum c_1 <a, c_2>, a left A-action on C
    right_action // c <- a = sum <a, c_1> c_2, a right A-action on C
};

inline Action pairing_action(const Pairing &p, Harpoon side)
{
    check_pairing_shape(p);
    const Field f = p.field();
    const std::size_t na = p.algebra.dim(), nc = p.coalgebra.dim();
    const Matrix &d = p.coalgebra.comul;
    Action act{side == Harpoon::left_action ? Side::left : Side::right, Matrix(f, nc, nc * na)};
    for (std::size_t i = 0; i < na; ++i)
        for (std::size_t j = 0; j < nc; ++j)
            for (std::size_t k = 0; k < nc; ++k)
                for (std::size_t l = 0; l < nc; ++l) {
                    const Scalar &coef = d(k * nc + l, j);
                    if (coef == 0)
                        continue;
                    if (side == Harpoon::left_action) {
                        if (p.matrix(i, l) != 0)
                            act.map.add(k, i * nc + j, f.mul(coef, p.matrix(i, l)));
                    } else if (p.matrix(i, k) != 0) {
                        act.map.add(l, j * na + i, f.mul(coef, p.matrix(i, k)));
                    }
                }
    return act;
}

/// a -> c (or c <- a) for basis elements a_i, c_j.
inline Matrix pairing_action(const Pairing &p, Harpoon side, std::size_t a, std::size_t c)
{
    check_index(a, p.algebra.dim(), "pairing algebra");
    check_index(c, p.coalgebra.dim(), "pairing coalgebra");
    Action act = pairing_action(p, side);
    std::size_t col = side == Harpoon::left_action ? a * p.coalgebra.dim() + c : c * p.algebra.dim() + a;
    return act.map.column(col);
}

// ---------------------------------------------------------------------------
// alpha-condition

/// alpha_M : M (x) C -> Hom(A, M) for M = k^dim_m, m (x) c |-> [a |-> m <a, c>].
/// Hom(A, M) is vectorized row-major as an M x A matrix. With `c_first`,
/// the domain is C (x) M instead.
inline Matrix alpha_map(const Pairing &p, std::size_t dim_m, bool c_first = false)
{
    const Field f = p.field();
    const std::size_t na = p.algebra.dim(), nc = p.coalgebra.dim();
    Matrix alpha(f, dim_m * na, dim_m * nc);
    for (std::size_t m = 0; m < dim_m; ++m)
        for (std::size_t l = 0; l < nc; ++l)
            for (std::size_t j = 0; j < na; ++j)
                if (p.matrix(j, l) != 0)
                    alpha.set(m * na + j, c_first ? l * dim_m + m : m * nc + l, p.matrix(j, l));
    return alpha;
}

/// Finite-dimensional criterion: the pairing separates the points of C.
inline Report check_alpha_condition(const Pairing &p)
{
    check_pairing_shape(p);
    Report r("alpha condition");
    std::size_t rk = rank(p.matrix);
    r.fact("pairing_rank", std::to_string(rk));
    r.fact("coalgebra_dim", std::to_string(p.coalgebra.dim()));
    if (rk == p.coalgebra.dim())
        r.checked.push_back("alpha.rank_equals_coalgebra_dim");
    else
        r.fail("alpha condition fails: rank " + std::to_string(rk) + " < dim C " +
               std::to_string(p.coalgebra.dim()));
    return r;
}

/// Direct test: alpha_M has zero kernel.
inline bool alpha_injective(const Pairing &p, std::size_t dim_m = 1)
{
    check_pairing_shape(p);
    return kernel(alpha_map(p, dim_m)).dim() == 0;
}

inline void require_alpha(const Pairing &p, const std::string &context)
{
    if (!check_alpha_condition(p))
        throw hypothesis_error(context + ": alpha condition fails (pairing rank " +
                               std::to_string(rank(p.matrix)) + " < dim C " +
                               std::to_string(p.coalgebra.dim()) + ")");
}

// ---------------------------------------------------------------------------
// Rational submodules

struct RationalPart {
    Subspace subspace;  // Rat inside M
    Action action;      // restricted action in subspace coordinates
    Coaction coaction;  // induced coaction in subspace coordinates
    std::size_t dim() const { return subspace.dim(); }
};

/// rho_M : M -> Hom(A, M), rho(m)(a) = a.m (or m.a).
inline Matrix module_to_hom(const Action &act, std::size_t dim_m, std::size_t dim_a)
{
    const Field f = act.map.field();
    Matrix rho(f, dim_m * dim_a, dim_m);
    for (std::size_t i = 0; i < dim_m; ++i)
        for (std::size_t j = 0; j < dim_a; ++j) {
            std::size_t col = act.side == Side::left ? j * dim_m + i : i * dim_a + j;
            for (std::size_t k = 0; k < dim_m; ++k)
                if (act.map(k, col) != 0)
                    rho.set(k * dim_a + j, i, act.map(k, col));
        }
    return rho;
}

/// Restricts an action to an invariant subspace, in its coordinates.
inline Action restrict_action(const Action &act, const Subspace &sub, std::size_t dim_a)
{
    const Field f = act.map.field();
    const std::size_t dm = sub.ambient(), d = sub.dim();
    Matrix incl = sub.inclusion();
    Matrix full = act.side == Side::left ? act.map * kron(eye(f, dim_a), incl) : act.map * kron(incl, eye(f, dim_a));
    auto coords = sub.coordinates_of_columns(full);
    if (!coords)
        throw consistency_error("restrict_action: subspace is not invariant");
    (void)dm;
    (void)d;
    return {act.side, *coords};
}

/// Rat^C(_A M) for a left module (right coaction), or ^C Rat(M_A) for a right
/// module (left coaction). The coaction is alpha^{-1} o rho restricted.
inline RationalPart rational_submodule(const Pairing &p, const Action &act, std::size_t dim_m)
{
    check_pairing_shape(p);
    require_alpha(p, "rational_submodule");
    const Field f = p.field();
    const std::size_t na = p.algebra.dim(), nc = p.coalgebra.dim();
    if (act.map.rows() != dim_m || act.map.cols() != dim_m * na)
        throw input_error("rational_submodule: action has shape " + act.map.shape());
    bool left = act.side == Side::left;
    Matrix rho = module_to_hom(act, dim_m, na);
    Matrix alpha = alpha_map(p, dim_m, !left);
    Subspace rat = preimage(rho, image(alpha));

    Matrix incl = rat.inclusion();
    Solution sol = solve_linear(alpha, rho * incl);
    if (!sol.consistent || sol.kernel.dim() != 0)
        throw consistency_error("rational_submodule: alpha is not injective on the rational part");
    // sol.particular column r is the element of M (x) C (or C (x) M) that
    // rho sends the r-th basis vector of Rat to; rewrite in Rat coordinates.
    const std::size_t d = rat.dim();
    Matrix co(f, d * nc, d);
    for (std::size_t r = 0; r < d; ++r) {
        Matrix x = sol.particular.column(r);
        for (std::size_t l = 0; l < nc; ++l) {
            Matrix slice(f, dim_m, 1);
            for (std::size_t m = 0; m < dim_m; ++m)
                slice.set(m, 0, left ? x(m * nc + l, 0) : x(l * dim_m + m, 0));
            auto c = rat.coordinates(slice);
            if (!c)
                throw consistency_error("rational_submodule: coaction leaves the rational part");
            for (std::size_t s = 0; s < d; ++s)
                if ((*c)(s, 0) != 0)
                    co.set(left ? s * nc + l : l * d + s, r, (*c)(s, 0));
        }
    }
    return {rat, restrict_action(act, rat, na), Coaction{left ? Side::right : Side::left, co}};
}

/// Intersection of the left and right rational parts of a bimodule.
inline Subspace birational_submodule(const Pairing &left_pairing, const Action &left_act,
                                     const Pairing &right_pairing, const Action &right_act, std::size_t dim_m)
{
    if (left_act.side != Side::left || right_act.side != Side::right)
        throw input_error("birational_submodule: expects a left and a right action");
    return intersect(rational_submodule(left_pairing, left_act, dim_m).subspace,
                     rational_submodule(right_pairing, right_act, dim_m).subspace);
}

/// A right C-comodule becomes a left A-module (a.m = sum m_0 <a, m_1>); a
/// left comodule becomes a right module (m.a = sum <a, m_-1> m_0).
inline Action module_from_comodule(const Pairing &p, const Coaction &co, std::size_t dim_m)
{
    check_pairing_shape(p);
    const Field f = p.field();
    const std::size_t na = p.algebra.dim(), nc = p.coalgebra.dim();
    if (co.map.rows() != dim_m * nc || co.map.cols() != dim_m)
        throw input_error("module_from_comodule: coaction has shape " + co.map.shape());
    bool right = co.side == Side::right;
    Action act{right ? Side::left : Side::right, Matrix(f, dim_m, dim_m * na)};
    for (std::size_t i = 0; i < dim_m; ++i)
        for (std::size_t k = 0; k < dim_m; ++k)
            for (std::size_t l = 0; l < nc; ++l) {
                const Scalar &v = right ? co.map(k * nc + l, i) : co.map(l * dim_m + k, i);
                if (v == 0)
                    continue;
                for (std::size_t j = 0; j < na; ++j)
                    if (p.matrix(j, l) != 0)
                        act.map.add(k, right ? j * dim_m + i : i * na + j, f.mul(v, p.matrix(j, l)));
            }
    return act;
}

// ---------------------------------------------------------------------------
// Adjoint pairs of morphisms

/// <xi(a), d>_Q = <a, theta(d)>_P, then the transfer of morphism properties.
inline Report check_adjoint_pair(const Pairing &p, const Pairing &q, const Matrix &xi, const Matrix &theta)
{
    check_pairing_shape(p);
    check_pairing_shape(q);
    const std::size_t na = p.algebra.dim(), nc = p.coalgebra.dim();
    const std::size_t nb = q.algebra.dim(), nd = q.coalgebra.dim();
    if (xi.rows() != nb || xi.cols() != na)
        throw input_error("check_adjoint_pair: xi has shape " + xi.shape());
    if (theta.rows() != nc || theta.cols() != nd)
        throw input_error("check_adjoint_pair: theta has shape " + theta.shape());
    Report r("adjoint pair");
    if (!r.absorb(verify_measuring_pairing(p), "P.") || !r.absorb(verify_measuring_pairing(q), "Q."))
        return r;
    if (!r.expect_equal("adjoint.pairing_identity", xi.transpose() * q.matrix, p.matrix * theta, {{nd}}, {{na}}))
        return r;

    Report xi_alg = verify_algebra_morphism(p.algebra, q.algebra, xi);
    Report theta_coalg = verify_coalgebra_morphism(q.coalgebra, p.coalgebra, theta);
    r.fact("xi_algebra_morphism", xi_alg ? "yes" : "no");
    r.fact("theta_coalgebra_morphism", theta_coalg ? "yes" : "no");
    // C (x) C -> (A (x) A)* is injective iff <,>_P separates C.
    bool p_separates = rank(p.matrix) == nc;
    // B -> D* is injective iff <,>_Q separates B.
    bool q_separates = rank(q.matrix) == nb;
    if (p_separates && xi_alg && !theta_coalg) {
        r.absorb(theta_coalg, "theta.");
        r.message = "xi is an algebra morphism but theta is not a coalgebra morphism";
        return r;
    }
    if (q_separates && theta_coalg && !xi_alg) {
        r.absorb(xi_alg, "xi.");
        r.message = "theta is a coalgebra morphism but xi is not an algebra morphism";
        return r;
    }
    if (p_separates)
        r.checked.push_back("adjoint.algebra_to_coalgebra_transfer");
    if (q_separates)
        r.checked.push_back("adjoint.coalgebra_to_algebra_transfer");
    return r;
}

} // namespace entwine
