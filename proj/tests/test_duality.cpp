#include "support.hpp"

#include <gtest/gtest.h>

using namespace entwine;
using namespace testing_support;

namespace {

const Field Q = Field::rationals();

Entwining entwining_of(const std::string &name) { return catalog_get(name).document.entwining(name); }

struct LoadedModule {
    Entwining entwining;
    ModulePresentation module;
};

LoadedModule module_of(const std::string &name)
{
    Document d = catalog_get(name).document;
    const auto &m = d.get_as<ModuleObject>(name);
    return {d.entwining(m.entwining), m.module};
}

// Functions on C3 spanned by eps and delta_0: a two-dimensional subalgebra.
Subspace eps_and_delta0() { return Subspace::row_span(Matrix::from_rows(Q, {{1, 1, 1}, {1, 0, 0}})); }

Matrix hom_element(const Subspace &hom, std::size_t k, std::size_t rows, std::size_t cols)
{
    return Matrix::unvec(hom.basis().row(k).transpose(), rows, cols);
}

} // namespace

TEST(DualEntwining, FullDualIsTranspose)
{
    for (auto n : {"flip_qc2", "flip_qc2_qc3", "hopfmod_qc2", "hopfmod_qc3", "hopfmod_sweedler4", "schauenburg_qc3",
                   "flip_qm2"}) {
        Entwining e = entwining_of(n);
        DualEntwining d = dual_entwining(e);
        ASSERT_TRUE(d.report) << n << ": " << d.report.message;
        EXPECT_TRUE(d.full());
        EXPECT_EQ(d.dual.psi, e.psi.transpose()) << n;
        EXPECT_EQ(d.dual.algebra.mul, e.coalgebra.comul.transpose());
        EXPECT_EQ(d.dual.coalgebra.comul, e.algebra.mul.transpose());
        EXPECT_EQ(d.report.fact_value("double_dual_matches"), "yes");
        DualEntwining dd = dual_entwining(d.dual);
        ASSERT_TRUE(dd.report);
        EXPECT_EQ(dd.dual.psi, e.psi) << n;
    }
}

TEST(DualEntwining, PairingsAreMeasuring)
{
    DualEntwining d = dual_entwining(entwining_of("hopfmod_sweedler4"));
    EXPECT_TRUE(verify_measuring_pairing(d.a_tilde_with_c));
    EXPECT_TRUE(verify_measuring_pairing(d.a_with_c_tilde));
    EXPECT_TRUE(check_alpha_condition(d.a_tilde_with_c));
}

TEST(DualEntwining, ProperSubalgebraOfFlip)
{
    DualEntwining d = dual_entwining(entwining_of("flip_qc3"), eps_and_delta0());
    ASSERT_TRUE(d.report) << d.report.message;
    EXPECT_FALSE(d.full());
    EXPECT_EQ(d.dual.dim_a(), 2u);
    EXPECT_FALSE(d.report.fact_value("double_dual_matches"));
    // The pairing of the small subalgebra with C = QC3 has rank 2 < 3.
    EXPECT_FALSE(check_alpha_condition(d.a_tilde_with_c));
    LoadedModule k{d.dual, free_entwined_module(d.dual)};
    ASSERT_TRUE(verify_entwined_module(d.dual, k.module));
    EXPECT_THROW(dual_module_upper_r(d, k.module), hypothesis_error);
}

TEST(DualEntwining, MissingUnitReported)
{
    Subspace no_unit = Subspace::row_span(Matrix::from_rows(Q, {{1, 0, 0}}));
    DualEntwining d = dual_entwining(entwining_of("flip_qc3"), no_unit);
    EXPECT_FALSE(d.report);
    EXPECT_NE(d.report.message.find("dual.unit_in_subalgebra"), std::string::npos);
}

TEST(DualEntwining, NonClosedSubalgebraReported)
{
    Subspace s = Subspace::row_span(Matrix::from_rows(Q, {{1, 1, 1}, {1, 2, 0}}));
    DualEntwining d = dual_entwining(entwining_of("flip_qc3"), s);
    EXPECT_FALSE(d.report);
    ASSERT_TRUE(d.report.witness);
    EXPECT_EQ(d.report.witness->axiom, "dual.subalgebra_closed");
}

TEST(DualEntwining, NonSubcoalgebraReported)
{
    // Inside (QC3)*, span{d_1} is not a subcoalgebra: d_1 o mul has d_2 (x) d_2 terms.
    Subspace s = Subspace::row_span(Matrix::from_rows(Q, {{0, 1, 0}}));
    DualEntwining d = dual_entwining(entwining_of("flip_qc3"), std::nullopt, s);
    EXPECT_FALSE(d.report);
    ASSERT_TRUE(d.report.witness);
    EXPECT_EQ(d.report.witness->axiom, "dual.subcoalgebra_closed");
}

TEST(DualEntwining, ClosureViolatedReported)
{
    // psi*(d^A_1 (x) d^C_0) = d^C_2 (x) d^A_1 leaves span{eps, d_0} (x) A*.
    DualEntwining d = dual_entwining(entwining_of("hopfmod_qc3"), eps_and_delta0());
    EXPECT_FALSE(d.report);
    ASSERT_TRUE(d.report.witness);
    EXPECT_EQ(d.report.witness->axiom, "dual.closure");
    EXPECT_THROW(dual_module_r(d, module_of("hopfmodule_qc3").module), hypothesis_error);
}

TEST(DualEntwining, WrongAmbientIsInputError)
{
    EXPECT_THROW(dual_entwining(entwining_of("flip_qc2"), Subspace::full(Q, 3)), input_error);
}

TEST(DualEntwining, MorphismsDualize)
{
    Entwining e = entwining_of("hopfmod_qc3");
    DualEntwining d = dual_entwining(e);
    Matrix sq(Q, 3, 3);
    for (std::size_t i = 0; i < 3; ++i)
        sq.set((2 * i) % 3, i, Scalar(1));
    EXPECT_TRUE(dual_entwining_morphism(d, d, sq, sq));
    Matrix id = Matrix::identity(Q, 3);
    EXPECT_FALSE(dual_entwining_morphism(d, d, sq, id));
}

TEST(DualModules, FullDualStructureMaps)
{
    // With the full dual, M_r = M* and the structure maps are transposes:
    // f_0(m) f_1(a) = f(m a) and (f x)(m) = f(m_0) x(m_1).
    for (auto n : {"hopfmodule_qc2", "hopfmodule_sweedler4", "free_hopfmod_qc2"}) {
        LoadedModule m = module_of(n);
        DualEntwining d = dual_entwining(m.entwining);
        DualModule mr = dual_module_r(d, m.module);
        ASSERT_TRUE(mr.report) << n << ": " << mr.report.message;
        ASSERT_EQ(mr.subspace.dim(), m.module.dim);
        ASSERT_EQ(mr.subspace.basis(), Matrix::identity(Q, m.module.dim));
        EXPECT_EQ(mr.module.coaction->map, m.module.action->map.transpose()) << n;
        EXPECT_EQ(mr.module.action->map, m.module.coaction->map.transpose()) << n;
        EXPECT_TRUE(verify_entwined_module(d.dual, mr.module));
    }
}

TEST(DualModules, UpperDualOfLowerDualRecoversModule)
{
    LoadedModule m = module_of("hopfmodule_sweedler4");
    DualEntwining d = dual_entwining(m.entwining);
    DualModule mr = dual_module_r(d, m.module);
    DualModule mrr = dual_module_upper_r(d, mr.module);
    ASSERT_TRUE(mrr.report);
    EXPECT_EQ(mrr.module.action->map, m.module.action->map);
    EXPECT_EQ(mrr.module.coaction->map, m.module.coaction->map);
}

TEST(DualModules, Functoriality)
{
    for (auto h : {"qc2", "sweedler4"}) {
        LoadedModule m = module_of(std::string("hopfmodule_") + h);
        LoadedModule n = module_of(std::string("free_hopfmod_") + h);
        DualEntwining d = dual_entwining(m.entwining);
        const std::size_t dm = m.module.dim, dn = n.module.dim;
        EXPECT_EQ(dual_morphism_r(d, m.module, m.module, Matrix::identity(Q, dm)), Matrix::identity(Q, dm));
        Subspace hom_mn = hom_entwined_space(d.source, m.module, n.module);
        Subspace hom_nm = hom_entwined_space(d.source, n.module, m.module);
        ASSERT_GT(hom_mn.dim(), 0u);
        ASSERT_GT(hom_nm.dim(), 0u);
        for (std::size_t i = 0; i < hom_mn.dim(); ++i)
            for (std::size_t j = 0; j < hom_nm.dim(); ++j) {
                Matrix f = hom_element(hom_mn, i, dn, dm), g = hom_element(hom_nm, j, dm, dn);
                Matrix composite = dual_morphism_r(d, m.module, m.module, g * f);
                EXPECT_EQ(composite,
                          dual_morphism_r(d, m.module, n.module, f) * dual_morphism_r(d, n.module, m.module, g));
            }
    }
}

TEST(DualModules, NonMorphismRejected)
{
    LoadedModule m = module_of("hopfmodule_qc2");
    DualEntwining d = dual_entwining(m.entwining);
    EXPECT_THROW(dual_morphism_r(d, m.module, m.module, Matrix::from_rows(Q, {{1, 0}, {0, 2}})), hypothesis_error);
}

TEST(Adjunction, HopfModulesAgainstTheirDuals)
{
    for (auto h : {"qc2", "qc3", "sweedler4"}) {
        LoadedModule m = module_of(std::string("hopfmodule_") + h);
        DualEntwining d = dual_entwining(m.entwining);
        ModulePresentation k = dual_module_r(d, m.module).module;
        AdjunctionResult a = adjunction_check(d, m.module, k);
        EXPECT_TRUE(a.report) << h << ": " << a.report.message;
        EXPECT_EQ(a.hom_mk.dim(), a.hom_km.dim());
        EXPECT_EQ(a.lambda * a.gamma, Matrix::identity(Q, a.hom_km.dim()));
    }
}

TEST(Adjunction, MixedPairs)
{
    for (auto h : {"qc2", "sweedler4"}) {
        LoadedModule m = module_of(std::string("hopfmodule_") + h);
        LoadedModule n = module_of(std::string("free_hopfmod_") + h);
        DualEntwining d = dual_entwining(m.entwining);
        ModulePresentation k = dual_module_r(d, n.module).module;
        AdjunctionResult a = adjunction_check(d, m.module, k);
        EXPECT_TRUE(a.report) << h << ": " << a.report.message;
        // Hom(H, (H (x) H)^*) and Hom((H (x) H)^*, H^*) are both nonzero here.
        EXPECT_GT(a.hom_mk.dim(), 0u);
        AdjunctionResult b = adjunction_check(d, n.module, dual_module_r(d, m.module).module);
        EXPECT_TRUE(b.report) << h << ": " << b.report.message;
    }
}

TEST(Adjunction, FlipWithDifferentDimensions)
{
    Document doc = catalog_get("free_flip_qc2_qc3").document;
    Entwining e = doc.entwining("flip_qc2_qc3");
    ModulePresentation m = doc.get_as<ModuleObject>("free_flip_qc2_qc3").module;
    DualEntwining d = dual_entwining(e);
    AdjunctionResult a = adjunction_check(d, m, dual_module_r(d, m).module);
    EXPECT_TRUE(a.report) << a.report.message;
}

TEST(Adjunction, BadModuleReported)
{
    LoadedModule m = module_of("hopfmodule_qc2");
    DualEntwining d = dual_entwining(m.entwining);
    ModulePresentation k = dual_module_r(d, m.module).module;
    m.module.action->map.set(0, 0, Scalar(3));
    AdjunctionResult a = adjunction_check(d, m.module, k);
    EXPECT_FALSE(a.report);
}
