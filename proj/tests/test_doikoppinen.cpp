#include "support.hpp"

#include <gtest/gtest.h>

using namespace entwine;
using namespace testing_support;

namespace {

const Field Q = Field::rationals();

DKStructure dk_of(const std::string &name) { return catalog_get(name).document.dk(name); }

Structure structure_of(const std::string &name) { return catalog_get(name).document.structure(name); }

Coextension coextension_of(const std::string &name)
{
    Document d = catalog_get(name).document;
    const auto &x = d.get_as<CoextensionObject>(name);
    return coextension_quotient(d.structure(x.bialgebra), d.coalgebra(x.coalgebra), x.action);
}

Matrix square_map(std::size_t n)
{
    Matrix m(Q, n, n);
    for (std::size_t i = 0; i < n; ++i)
        m.set((2 * i) % n, i, Scalar(1));
    return m;
}

} // namespace

TEST(DoiKoppinen, CatalogStructuresVerify)
{
    for (auto n : {"dk_hopf_qc2", "dk_hopf_qc3", "dk_hopf_sweedler4", "dk_hopf_f5c5", "dk_long_qc2_qc3"})
        EXPECT_TRUE(verify_dk(dk_of(n))) << n;
    EXPECT_TRUE(verify_alt_dk(catalog_get("altdk_schauenburg_qc3").document.alt_dk("altdk_schauenburg_qc3")));
}

TEST(DoiKoppinen, CompatibilityChecks)
{
    Structure h = structure_of("sweedler4");
    EXPECT_TRUE(verify_comodule_algebra(h, h.alg(), Coaction{Side::right, h.coalg().comul}));
    EXPECT_TRUE(verify_module_coalgebra(h, h.coalg(), Action{Side::right, h.alg().mul}));
    // The right regular action is not a module-algebra structure: (ab).h != (a.h_1)(b.h_2) in general.
    EXPECT_FALSE(verify_module_algebra(h, h.alg(), Action{Side::right, h.alg().mul}));
    // Delta is never a comodule-coalgebra structure (g -> g (x) g (x) g versus g (x) g (x) g^2);
    // the trivial coaction c -> c (x) 1 always is.
    EXPECT_FALSE(verify_comodule_coalgebra(h, h.coalg(), Coaction{Side::right, h.coalg().comul}));
    Structure g = structure_of("qc3");
    EXPECT_FALSE(verify_comodule_coalgebra(g, g.coalg(), Coaction{Side::right, g.coalg().comul}));
    EXPECT_TRUE(verify_comodule_coalgebra(g, g.coalg(), Coaction{Side::right, kron(Matrix::identity(Q, 3), g.alg().unit)}));
}

TEST(DoiKoppinen, CorruptedCoalgebraActionDetected)
{
    DKStructure s = dk_of("dk_hopf_qc2");
    s.coalgebra_action.map.set(0, 0, Scalar(0));
    EXPECT_FALSE(verify_dk(s));
}

TEST(DoiKoppinen, LongStructureGivesTheFlip)
{
    DKStructure s = dk_of("dk_long_qc2_qc3");
    EXPECT_EQ(dk_entwining(s).psi, flip_entwining(s.algebra, s.coalgebra).psi);
}

TEST(DoiKoppinen, KoppinenProductEqualsSmashProduct)
{
    for (auto n : {"dk_hopf_qc2", "dk_hopf_qc3", "dk_hopf_sweedler4", "dk_long_qc2_qc3"}) {
        DKStructure s = dk_of(n);
        SmashRing r = build_smash(dk_entwining(s));
        ASSERT_TRUE(r.report);
        EXPECT_EQ(koppinen_product(s), r.ring.mul) << n;
    }
}

TEST(DoiKoppinen, DualStructure)
{
    for (auto n : {"dk_hopf_qc2", "dk_hopf_qc3", "dk_hopf_sweedler4", "dk_long_qc2_qc3"}) {
        DKStructure s = dk_of(n);
        DualDK d = dual_dk(s);
        ASSERT_TRUE(d.report) << n << ": " << d.report.message;
        EXPECT_EQ(d.dual.algebra.dim(), s.coalgebra.dim());
        EXPECT_EQ(d.dual.coalgebra.dim(), s.algebra.dim());
        DualDK dd = dual_dk(d.dual);
        ASSERT_TRUE(dd.report) << n;
        EXPECT_EQ(dd.dual.algebra.mul, s.algebra.mul) << n;
        EXPECT_EQ(dd.dual.algebra_coaction.map, s.algebra_coaction.map) << n;
        EXPECT_EQ(dd.dual.coalgebra.comul, s.coalgebra.comul) << n;
        EXPECT_EQ(dd.dual.coalgebra_action.map, s.coalgebra_action.map) << n;
    }
}

TEST(DoiKoppinen, DualIngredients)
{
    Structure h = structure_of("sweedler4");
    DualIngredient a = dualize_comodule_algebra(h, h.alg(), Coaction{Side::right, h.coalg().comul});
    EXPECT_TRUE(a.report) << a.report.message;
    DualIngredient c = dualize_module_coalgebra(h, h.coalg(), Action{Side::right, h.alg().mul});
    EXPECT_TRUE(c.report) << c.report.message;
    EXPECT_TRUE(verify_comodule_algebra(dualize_structure(h), c.algebra, *c.coaction));
    Structure g = structure_of("qc3");
    DualIngredient cc =
        dualize_comodule_coalgebra(g, g.coalg(), Coaction{Side::right, kron(Matrix::identity(Q, 3), g.alg().unit)});
    EXPECT_TRUE(cc.report) << cc.report.message;
}

TEST(DoiKoppinen, AlternativeDualUnsupported)
{
    AltDKStructure s = catalog_get("altdk_schauenburg_qc3").document.alt_dk("altdk_schauenburg_qc3");
    try {
        dualize_alt_dk(s);
        FAIL() << "expected input_error";
    } catch (const input_error &e) {
        EXPECT_NE(std::string(e.what()).find("not supported"), std::string::npos);
    }
}

TEST(DoiKoppinen, Morphisms)
{
    DKStructure s = dk_of("dk_hopf_qc3");
    Matrix id = Matrix::identity(Q, 3), sq = square_map(3);
    EXPECT_TRUE(verify_dk_morphism(s, s, id, id, id));
    EXPECT_TRUE(verify_dk_morphism(s, s, sq, sq, sq));
    EXPECT_TRUE(dual_dk_morphism(s, s, sq, sq, sq));
    EXPECT_FALSE(verify_dk_morphism(s, s, sq, sq, id));
    Matrix not_bialgebra = Matrix::from_rows(Q, {{1, 1, 0}, {0, 0, 0}, {0, 0, 1}});
    EXPECT_FALSE(verify_dk_morphism(s, s, not_bialgebra, id, id));
}

TEST(DoiKoppinen, ModulesDualize)
{
    Document d = catalog_get("hopfmodule_sweedler4").document;
    Structure h = d.structure("sweedler4");
    DKStructure s{h, h.alg(), Coaction{Side::right, h.coalg().comul}, h.coalg(), Action{Side::right, h.alg().mul}};
    DualModule m = dk_dual_module(s, d.get_as<ModuleObject>("hopfmodule_sweedler4").module);
    ASSERT_TRUE(m.report) << m.report.message;
    EXPECT_EQ(m.subspace.dim(), 4u);
    DualModule back = dk_dual_module(s, m.module, true);
    ASSERT_TRUE(back.report);
    EXPECT_EQ(back.module.action->map, h.alg().mul);
}

TEST(LongDimodules, FreeModuleOverFlip)
{
    Document d = catalog_get("free_flip_qc2_qc3").document;
    ModulePresentation m = d.get_as<ModuleObject>("free_flip_qc2_qc3").module;
    EXPECT_TRUE(long_dimodule_check(d.algebra("qc2"), d.coalgebra("qc3"), m));
}

TEST(LongDimodules, GradedModuleAndViolation)
{
    // k^2 as a QC2-module (g swaps) and a QC3-comodule.
    Algebra a = structure_of("qc2").alg();
    Coalgebra c = structure_of("qc3").coalg();
    Matrix act(Q, 2, 4); // e_i . g^j
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 2; ++j)
            act.set((i + j) % 2, i * 2 + j, Scalar(1));
    ModulePresentation m;
    m.dim = 2;
    m.action = Action{Side::right, act};
    // Both basis vectors in degree 1: compatible.
    Matrix co(Q, 6, 2);
    co.set(0 * 3 + 1, 0, Scalar(1));
    co.set(1 * 3 + 1, 1, Scalar(1));
    m.coaction = Coaction{Side::right, co};
    EXPECT_TRUE(long_dimodule_check(a, c, m));
    // Different degrees: the swap does not preserve the grading.
    Matrix co2(Q, 6, 2);
    co2.set(0 * 3 + 0, 0, Scalar(1));
    co2.set(1 * 3 + 1, 1, Scalar(1));
    m.coaction = Coaction{Side::right, co2};
    Report r = long_dimodule_check(a, c, m);
    EXPECT_FALSE(r);
    EXPECT_EQ(r.witness->axiom, "long.compatibility");
}

TEST(Extensions, CleftWithIdentityIntegral)
{
    for (auto n : {"cleft_qc2", "cleft_sweedler4"}) {
        Document d = catalog_get(n).document;
        Extension x = d.extension(n);
        EXPECT_EQ(coinvariants(x).dim(), 1u) << n;
        IntegralCheck c = check_integral(x, Matrix::identity(Q, x.algebra.dim()));
        EXPECT_TRUE(c.report) << n;
        ASSERT_TRUE(c.inverse);
        // The convolution inverse of the identity is the antipode.
        EXPECT_EQ(*c.inverse, *compute_antipode(x.bialgebra)) << n;
    }
}

TEST(Extensions, MonoidBialgebraIsNotCleft)
{
    Extension x = catalog_get("cleft_qm2").document.extension("cleft_qm2");
    IntegralCheck c = check_integral(x, Matrix::identity(Q, 2));
    EXPECT_TRUE(c.colinear);
    EXPECT_TRUE(c.total);
    EXPECT_FALSE(c.cleft);
    EXPECT_FALSE(c.report);
}

TEST(Extensions, AntipodeExistsExactlyWhenIdentityIsCleft)
{
    for (auto h : {"qc2", "qc3", "sweedler4", "qm2", "trivial"}) {
        Structure s = structure_of(h);
        Extension x{s, s.alg(), Coaction{Side::right, s.coalg().comul}};
        bool cleft = check_integral(x, Matrix::identity(s.field(), s.dim())).cleft;
        EXPECT_EQ(cleft, compute_antipode(s).has_value()) << h;
    }
}

TEST(Extensions, NonColinearMapRejected)
{
    Extension x = catalog_get("cleft_qc2").document.extension("cleft_qc2");
    Matrix gamma = Matrix::from_rows(Q, {{1, 1}, {0, 0}});
    IntegralCheck c = check_integral(x, gamma);
    EXPECT_FALSE(c.colinear);
    EXPECT_FALSE(c.report);
}

TEST(Coextensions, QuotientAndCointegral)
{
    for (auto n : {"cocleft_qc2", "cocleft_sweedler4"}) {
        Coextension x = coextension_of(n);
        ASSERT_TRUE(x.report) << n;
        // H / H H+ is one-dimensional.
        EXPECT_EQ(x.quotient.dim(), 1u);
        EXPECT_EQ(x.projection * x.lift, Matrix::identity(Q, 1));
        CointegralCheck c = check_cointegral(x, Matrix::identity(Q, x.coalgebra.dim()));
        EXPECT_TRUE(c.report) << n << ": " << c.report.message;
        EXPECT_TRUE(c.cocleft);
        ASSERT_TRUE(c.inverse);
        EXPECT_EQ(*c.inverse, *compute_antipode(x.bialgebra));
    }
}

TEST(Coextensions, DualIsCleftExtension)
{
    for (auto n : {"cocleft_qc2", "cocleft_sweedler4"}) {
        Coextension x = coextension_of(n);
        const std::size_t dim = x.coalgebra.dim();
        DualCoextension d = dualize_coextension(x, Matrix::identity(Q, dim));
        ASSERT_TRUE(d.report) << n << ": " << d.report.message;
        EXPECT_EQ(d.coinvariants.dim(), x.quotient.dim());
        ASSERT_TRUE(d.integral);
        EXPECT_TRUE(d.integral->cleft);
        EXPECT_TRUE(verify_comodule_algebra(d.extension.bialgebra, d.extension.algebra, d.extension.coaction));
    }
}

TEST(Coextensions, ZeroMapIsNotCocleft)
{
    Coextension x = coextension_of("cocleft_qc2");
    CointegralCheck c = check_cointegral(x, Matrix(Q, 2, 2));
    EXPECT_FALSE(c.cocleft);
    EXPECT_FALSE(c.report);
}
