/*
   Copyright 2026 The lrsmash Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include <gtest/gtest.h>

#include "test_util.hpp"

using namespace lrsmash;
using lrsmash::fixtures::map_from;
using lrsmash::test::int_entry;

namespace {

const Field Q = Field::rationals();
const Field F2 = Field::prime(2);

/// tensor-product algebra on D (x) H, for comparisons
LinMap tensor_mult(const AlgebraData& d, const BialgebraData& h) {
    const Field& f = d.field();
    return compose(tensor(d.mult, h.mult()),
                   select_blocks({d.carrier, h.carrier(), d.carrier, h.carrier()}, {0, 2, 1, 3},
                                 f));
}

LinMap tensor_comult(const CoalgebraData& d, const BialgebraData& h) {
    const Field& f = d.field();
    return compose(select_blocks({d.carrier, d.carrier, h.carrier(), h.carrier()}, {0, 2, 1, 3},
                                 f),
                   tensor(d.comult, h.comult()));
}

}  // namespace

TEST(SmashProduct, TrivialActionsGiveTensorAlgebra) {
    auto t = fixtures::trivial_candidate(Q);
    BialgebraData h = fixtures::kc2(Q);
    AlgebraData d = fixtures::nil_line_algebra(Q, "D");
    AlgebraData smash = smash_product_algebra(h, d, trivial_actions(h, d.carrier));
    EXPECT_EQ(smash.mult, tensor_mult(d, h));
    EXPECT_EQ(smash.unit, tensor(d.unit, h.unit()));
}

TEST(SmashProduct, SweedlerValues) {
    auto c = fixtures::sweedler_candidate(Q);
    AlgebraData smash = smash_product_algebra(c.hopf, c.algebra, c.actions);
    // (x#1)(1#g) = x#g
    EXPECT_EQ(int_entry(smash.mult, "x,g", "x,1,1,g"), 1);
    // (1#g)(x#1) = -x#g
    EXPECT_EQ(int_entry(smash.mult, "x,g", "1,g,x,1"), -1);
    // (x#1)(x#1) = 0
    for (std::size_t r = 0; r < 4; ++r)
        EXPECT_TRUE(smash.mult.entry(r, *smash.mult.dom().index_of_label("x,1,x,1")).is_zero());
    EXPECT_TRUE(check_algebra(smash).all_pass());
}

TEST(SmashProduct, UnverifiedInputsAreRejected) {
    auto c = fixtures::sweedler_candidate(Q);
    LinMap bad = c.actions.right;
    bad.set(1, 3, Scalar::from_integer(Q, 2));  // x.g = 2x
    try {
        smash_product_algebra(c.hopf, c.algebra, ActionPair{c.actions.left, bad});
        FAIL() << "expected PrerequisiteError";
    } catch (const PrerequisiteError& e) {
        EXPECT_FALSE(e.failing_checks.empty());
        bool names_module = false;
        for (const auto& id : e.failing_checks)
            if (id.find("module") != std::string::npos) names_module = true;
        EXPECT_TRUE(names_module);
    }
}

TEST(SmashCoproduct, TrivialCoactionsGiveTensorCoalgebra) {
    BialgebraData h = fixtures::kc2(Q);
    CoalgebraData d = fixtures::nil_line_coalgebra(Q, "D");
    CoalgebraData smash = smash_coproduct_coalgebra(h, d, trivial_coactions(h, d.carrier));
    EXPECT_EQ(smash.comult, tensor_comult(d, h));
}

TEST(SmashCoproduct, SweedlerValues) {
    auto c = fixtures::sweedler_candidate(Q);
    CoalgebraData smash = smash_coproduct_coalgebra(c.hopf, c.coalgebra, c.coactions);
    // Delta(x#1) = (x#1) (x) (1#1) + (1#g) (x) (x#1)
    EXPECT_EQ(int_entry(smash.comult, "x,1,1,1", "x,1"), 1);
    EXPECT_EQ(int_entry(smash.comult, "1,g,x,1", "x,1"), 1);
    EXPECT_EQ(smash.comult.column(*smash.comult.dom().index_of_label("x,1")).size(), 2u);
    // eps(x#g) = 0
    EXPECT_TRUE(smash.counit.entry(0, *smash.counit.dom().index_of_label("x,g")).is_zero());
    EXPECT_TRUE(check_coalgebra(smash).all_pass());
}

TEST(CheckAdmissible, TrivialAndSweedlerPass) {
    EXPECT_TRUE(check_admissible(fixtures::trivial_candidate(Q)).all_pass());
    AdmissibilityReport r = check_admissible(fixtures::sweedler_candidate(Q));
    EXPECT_TRUE(r.all_pass());
    EXPECT_EQ(r.conditions.entries.size(), 14u);
}

TEST(CheckAdmissible, BrokenRhoFailsPairingConditionOnly) {
    AdmissibilityReport r = check_admissible(fixtures::broken_condition_candidate(14));
    EXPECT_TRUE(r.components.all_pass());
    EXPECT_EQ(r.conditions.failing_ids(), std::vector<std::string>{"1.14"});
    const CheckEntry* e = r.conditions.find("1.14");
    EXPECT_EQ(e->witness->input, "(x,x)");
    EXPECT_EQ(e->witness->residual, "-2*(x,x)");
}

TEST(CheckAdmissible, EachBrokenVariantFailsItsCondition) {
    for (int k = 1; k <= 14; ++k) {
        LRAdmissibleCandidate c = fixtures::broken_condition_candidate(k);
        AdmissibilityReport r = check_admissible(c);
        EXPECT_TRUE(r.components.all_pass()) << "components broken for variant " << k;
        const CheckEntry* e = r.conditions.find("1." + std::to_string(k));
        ASSERT_NE(e, nullptr);
        EXPECT_FALSE(e->pass) << "variant " << k << " does not fail its target condition";
    }
}

TEST(BuildBiproduct, TrivialCandidateGivesHUnderRelabeling) {
    auto t = fixtures::trivial_candidate(Q);
    BiproductResult r = build_biproduct(t);
    EXPECT_TRUE(r.verified);
    const BialgebraData& h = t.hopf;
    BasedSpace th = r.bialgebra.carrier();
    BasedSpace thth = tensor_space(th, th);
    EXPECT_EQ(r.bialgebra.mult(),
              relabel(h.mult(), thth, th));
    EXPECT_EQ(r.bialgebra.comult(), relabel(h.comult(), th, thth));
}

TEST(BuildBiproduct, SweedlerGivesTheFourDimensionalHopfAlgebra) {
    BiproductResult r = build_biproduct(fixtures::sweedler_candidate(Q));
    EXPECT_TRUE(r.verified);
    EXPECT_TRUE(r.verification.all_pass());
    const LinMap& mult = r.bialgebra.mult();
    // G^2 = 1, X^2 = 0, GX = -XG
    EXPECT_EQ(int_entry(mult, "1,1", "1,g,1,g"), 1);
    EXPECT_EQ(int_entry(mult, "x,g", "1,g,x,1"), -1);
    EXPECT_EQ(int_entry(mult, "x,g", "x,1,1,g"), 1);
    // Delta(X) = X (x) 1 + G (x) X
    EXPECT_EQ(int_entry(r.bialgebra.comult(), "x,1,1,1", "x,1"), 1);
    EXPECT_EQ(int_entry(r.bialgebra.comult(), "1,g,x,1", "x,1"), 1);
    auto s = solve_antipode(r.bialgebra);
    ASSERT_TRUE(s.has_value());
    LinMap s2 = compose(*s, *s);
    LinMap id = LinMap::identity(r.bialgebra.carrier(), Q);
    EXPECT_NE(s2, id);
    EXPECT_EQ(compose(s2, s2), id);
}

TEST(BuildBiproduct, NonAdmissibleCandidateIsRejectedUnlessForced) {
    auto broken = fixtures::broken_condition_candidate(14);
    EXPECT_THROW(build_biproduct(broken), PrerequisiteError);
    BiproductResult forced = build_biproduct(broken, BuildOptions{true});
    EXPECT_FALSE(forced.verified);
    EXPECT_FALSE(forced.admissibility.all_pass());
    // the assembled structures do not form a bialgebra here
    EXPECT_FALSE(forced.verification.all_pass());
}

TEST(AuxiliaryIdentities, HoldOnAdmissibleFixtures) {
    EXPECT_TRUE(check_auxiliary_identities(fixtures::trivial_candidate(Q)).all_pass());
    EXPECT_TRUE(check_auxiliary_identities(fixtures::sweedler_candidate(Q)).all_pass());
    EXPECT_TRUE(check_auxiliary_identities(fixtures::zhang_positive(Q)).all_pass());
    EXPECT_TRUE(
        check_auxiliary_identities(induced_lr_structure(fixtures::double8(Q))).all_pass());
}

TEST(AuxiliaryIdentities, BrokenLongConditionPropagates) {
    CheckReport r = check_auxiliary_identities(fixtures::broken_condition_candidate(11));
    const CheckEntry* e = r.find("1.15");
    ASSERT_NE(e, nullptr);
    EXPECT_FALSE(e->pass);
}

TEST(Radford, UnitCandidateCollapsesToH) {
    // B = k: the biproduct carrier is k (x) H = H on the nose
    BialgebraData h = fixtures::kc2(Q);
    BasedSpace k = BasedSpace::scalar();
    YdLeftBialgebra unit_b{YdLeftObject{h, k, h.counit(), h.unit()},
                           AlgebraData(k, LinMap::identity(k, Q), LinMap::identity(k, Q)),
                           CoalgebraData(k, LinMap::identity(k, Q), LinMap::identity(k, Q))};
    BiproductResult r = radford_biproduct(unit_b);
    EXPECT_TRUE(r.verified);
    EXPECT_EQ(r.bialgebra, h);
}

TEST(Radford, SweedlerBiproductMatchesDirectConstruction) {
    BiproductResult r = radford_biproduct(fixtures::braided_line_left(Q));
    EXPECT_TRUE(r.verified);
    EXPECT_TRUE(r.verification.passed("radford-reduction"));
    // same structure constants as the generic smash construction
    BiproductResult generic = build_biproduct(fixtures::sweedler_candidate(Q));
    EXPECT_EQ(r.bialgebra, generic.bialgebra);
    // antipode order 4
    auto s = solve_antipode(r.bialgebra);
    ASSERT_TRUE(s.has_value());
    LinMap s2 = compose(*s, *s);
    EXPECT_NE(s2, LinMap::identity(r.bialgebra.carrier(), Q));
    EXPECT_EQ(compose(s2, s2), LinMap::identity(r.bialgebra.carrier(), Q));
}

TEST(Radford, CharacteristicTwoPrimitiveWithTrivialStructures) {
    // over F2 the nil line is itself a bialgebra; with trivial YD structures
    // the biproduct is the tensor bialgebra
    BialgebraData h = fixtures::kc2(F2);
    AlgebraData alg = fixtures::nil_line_algebra(F2, "B");
    CoalgebraData coalg = fixtures::nil_line_coalgebra(F2, "B");
    YdLeftObject obj{h, alg.carrier, trivial_actions(h, alg.carrier).left,
                     trivial_coactions(h, alg.carrier).left};
    BiproductResult r = radford_biproduct(YdLeftBialgebra{obj, alg, coalg});
    EXPECT_TRUE(r.verified);
    EXPECT_EQ(r.bialgebra.mult(), tensor_mult(alg, h));
    EXPECT_EQ(r.bialgebra.comult(), tensor_comult(coalg, h));
}

TEST(Zhang, CocommutativeActionsPass) {
    auto zp = fixtures::zhang_positive(Q);
    CheckReport r = zhang_check(zp.hopf, BialgebraData(zp.algebra, zp.coalgebra), zp.actions);
    EXPECT_TRUE(r.all_pass());
    EXPECT_TRUE(r.passed("iff-agreement"));
    // trivial action case
    BialgebraData h = fixtures::kc2(Q);
    BialgebraData d = fixtures::cyclic_group_algebra(Q, 2, "D", "d");
    CheckReport triv = zhang_check(h, d, trivial_actions(h, d.carrier()));
    EXPECT_TRUE(triv.all_pass());
}

TEST(Zhang, H4ActionFailsFirstConditionAtXx) {
    auto zn = fixtures::zhang_negative(Q);
    CheckReport r = zhang_check(zn.hopf, BialgebraData(zn.algebra, zn.coalgebra), zn.actions);
    const CheckEntry* lrs1 = r.find("lrs1");
    ASSERT_NE(lrs1, nullptr);
    EXPECT_FALSE(lrs1->pass);
    EXPECT_EQ(lrs1->witness->input, "(X,x)");
    bool suite_failed = false;
    for (const auto& e : r.entries)
        if (e.id.rfind("suite.", 0) == 0 && !e.pass) suite_failed = true;
    EXPECT_TRUE(suite_failed);
    // D is not itself a bialgebra over Q, so the iff gate stays closed
    EXPECT_EQ(r.find("iff-agreement"), nullptr);
}

TEST(Zhang, BiproductCoincidesWithTensorCoalgebraConstruction) {
    auto zp = fixtures::zhang_positive(Q);
    BialgebraData d(zp.algebra, zp.coalgebra);
    BiproductResult r = zhang_biproduct(zp.hopf, d, zp.actions);
    EXPECT_TRUE(r.verified);
    EXPECT_TRUE(r.verification.passed("zhang-coincidence"));
    EXPECT_EQ(r.bialgebra.comult(), tensor_comult(zp.coalgebra, zp.hopf));
    // trivial action on a group algebra gives the plain tensor bialgebra
    BialgebraData d2 = fixtures::cyclic_group_algebra(Q, 2, "D", "m");
    BiproductResult r2 =
        zhang_biproduct(fixtures::kc2(Q), d2, trivial_actions(fixtures::kc2(Q), d2.carrier()));
    EXPECT_EQ(r2.bialgebra.mult(), tensor_mult(d2.algebra, fixtures::kc2(Q)));
}

TEST(Zhang, FailingConditionImpliesFailingSuite) {
    auto zn = fixtures::zhang_negative(Q);
    CheckReport r = zhang_check(zn.hopf, BialgebraData(zn.algebra, zn.coalgebra), zn.actions);
    bool lrs = r.passed("lrs1") && r.passed("lrs2");
    bool suite = true;
    for (const auto& e : r.entries)
        if (e.id.rfind("suite.", 0) == 0 && !e.pass) suite = false;
    EXPECT_FALSE(lrs);
    EXPECT_FALSE(suite);
    EXPECT_THROW(zhang_biproduct(zn.hopf, BialgebraData(zn.algebra, zn.coalgebra), zn.actions),
                 PrerequisiteError);
}

// a candidate with all-pass admissibility always assembles into a bialgebra
TEST(TheoremSuite, AdmissibilityImpliesBialgebra) {
    std::vector<LRAdmissibleCandidate> cands{
        fixtures::trivial_candidate(Q), fixtures::sweedler_candidate(Q),
        fixtures::zhang_positive(Q), induced_lr_structure(fixtures::double8(Q))};
    for (const auto& c : cands) {
        AdmissibilityReport adm = check_admissible(c);
        ASSERT_TRUE(adm.all_pass());
        BiproductResult r = build_biproduct(c);
        EXPECT_TRUE(r.verification.all_pass());
        EXPECT_TRUE(r.verified);
    }
}
