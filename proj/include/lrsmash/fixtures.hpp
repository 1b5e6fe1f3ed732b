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

#pragma once

#include <string>
#include <tuple>
#include <vector>

#include "lrsmash/double_biproduct.hpp"

// Programmatic versions of the shipped fixture library. The .lrs files under
// fixtures/ are generated from these builders, and the tests cross-check the
// parsed files against them.

namespace lrsmash::fixtures {

struct Entry {
    std::string row;
    std::string col;
    long long value;
};

inline LinMap map_from(const BasedSpace& dom, const BasedSpace& cod, const Field& f,
                       const std::vector<Entry>& entries) {
    LinMap m(dom, cod, f);
    for (const auto& e : entries) {
        auto row = cod.index_of_label(e.row);
        auto col = dom.index_of_label(e.col);
        if (!row) throw Error("fixture row label not found: " + e.row);
        if (!col) throw Error("fixture column label not found: " + e.col);
        m.set(*row, *col, Scalar::from_integer(f, e.value));
    }
    return m;
}

/// Group algebra of the cyclic group of order n; labels 1, g, g2, ...
inline BialgebraData cyclic_group_algebra(const Field& f, std::size_t n,
                                          const std::string& space_name,
                                          const std::string& gen = "g") {
    std::vector<std::string> labels{"1"};
    for (std::size_t i = 1; i < n; ++i)
        labels.push_back(i == 1 ? gen : gen + std::to_string(i));
    BasedSpace v = BasedSpace::atom(space_name, labels);
    BasedSpace vv = tensor_space(v, v);
    LinMap mult(vv, v, f);
    LinMap comult(v, vv, f);
    LinMap unit(BasedSpace::scalar(), v, f);
    LinMap counit(v, BasedSpace::scalar(), f);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) mult.set((i + j) % n, i * n + j, Scalar::one(f));
        comult.set(i * n + i, i, Scalar::one(f));
        counit.set(0, i, Scalar::one(f));
    }
    unit.set(0, 0, Scalar::one(f));
    return BialgebraData(AlgebraData(v, mult, unit), CoalgebraData(v, comult, counit));
}

inline BialgebraData kc2(const Field& f) { return cyclic_group_algebra(f, 2, "H"); }
inline BialgebraData kc3(const Field& f) { return cyclic_group_algebra(f, 3, "H3"); }

/// The monoid bialgebra on {1, m} with m idempotent and group-like; it has no
/// antipode.
inline BialgebraData monoid_bialgebra(const Field& f) {
    BasedSpace v = BasedSpace::atom("M", {"1", "m"});
    BasedSpace vv = tensor_space(v, v);
    LinMap mult = map_from(vv, v, f,
                           {{"1", "1,1", 1}, {"m", "1,m", 1}, {"m", "m,1", 1}, {"m", "m,m", 1}});
    LinMap unit = map_from(BasedSpace::scalar(), v, f, {{"1", "()", 1}});
    LinMap comult = map_from(v, vv, f, {{"1,1", "1", 1}, {"m,m", "m", 1}});
    LinMap counit = map_from(v, BasedSpace::scalar(), f, {{"()", "1", 1}, {"()", "m", 1}});
    return BialgebraData(AlgebraData(v, mult, unit), CoalgebraData(v, comult, counit));
}

/// 2-dimensional algebra k[x]/(x^2) with primitive x.
inline AlgebraData nil_line_algebra(const Field& f, const std::string& name,
                                    const std::string& x = "x") {
    BasedSpace v = BasedSpace::atom(name, {"1", x});
    LinMap mult = map_from(tensor_space(v, v), v, f,
                           {{"1", "1,1", 1},
                            {x, "1," + x, 1},
                            {x, x + ",1", 1}});
    LinMap unit = map_from(BasedSpace::scalar(), v, f, {{"1", "()", 1}});
    return AlgebraData(v, mult, unit);
}

inline CoalgebraData nil_line_coalgebra(const Field& f, const std::string& name,
                                        const std::string& x = "x") {
    BasedSpace v = BasedSpace::atom(name, {"1", x});
    LinMap comult = map_from(v, tensor_space(v, v), f,
                             {{"1,1", "1", 1},
                              {x + ",1", x, 1},
                              {"1," + x, x, 1}});
    LinMap counit = map_from(v, BasedSpace::scalar(), f, {{"()", "1", 1}});
    return CoalgebraData(v, comult, counit);
}

/// The sign action of kC2 on a nil line: g.x = -x (left version).
inline LinMap sign_action_left(const BialgebraData& h, const BasedSpace& v, const Field& f,
                               const std::string& x = "x") {
    return map_from(tensor_space(h.carrier(), v), v, f,
                    {{"1", "1,1", 1},
                     {x, "1," + x, 1},
                     {"1", "g,1", 1},
                     {x, "g," + x, -1}});
}

inline LinMap sign_action_right(const BialgebraData& h, const BasedSpace& v, const Field& f,
                                const std::string& x = "x") {
    return map_from(tensor_space(v, h.carrier()), v, f,
                    {{"1", "1,1", 1},
                     {x, x + ",1", 1},
                     {"1", "1,g", 1},
                     {x, x + ",g", -1}});
}

/// Left coaction x |-> g (x) x, 1 |-> 1 (x) 1.
inline LinMap grouplike_coaction_left(const BialgebraData& h, const BasedSpace& v, const Field& f,
                                      const std::string& x = "x") {
    return map_from(v, tensor_space(h.carrier(), v), f,
                    {{"1,1", "1", 1}, {"g," + x, x, 1}});
}

inline LinMap grouplike_coaction_right(const BialgebraData& h, const BasedSpace& v, const Field& f,
                                       const std::string& x = "x") {
    return map_from(v, tensor_space(v, h.carrier()), f,
                    {{"1,1", "1", 1}, {x + ",g", x, 1}});
}

/// The nil line as a left-left Yetter-Drinfeld bialgebra over kC2 (the
/// braided line whose Radford biproduct is the 4-dimensional Hopf algebra
/// with G^2 = 1, X^2 = 0, GX = -XG).
inline YdLeftBialgebra braided_line_left(const Field& f, const std::string& name = "B") {
    BialgebraData h = kc2(f);
    AlgebraData alg = nil_line_algebra(f, name);
    CoalgebraData coalg = nil_line_coalgebra(f, name);
    YdLeftObject obj{h, alg.carrier, sign_action_left(h, alg.carrier, f),
                     grouplike_coaction_left(h, alg.carrier, f)};
    return YdLeftBialgebra{obj, alg, coalg};
}

inline YdRightBialgebra braided_line_right(const Field& f, const std::string& name = "C",
                                           const std::string& x = "y") {
    BialgebraData h = kc2(f);
    AlgebraData alg = nil_line_algebra(f, name, x);
    CoalgebraData coalg = nil_line_coalgebra(f, name, x);
    YdRightObject obj{h, alg.carrier, sign_action_right(h, alg.carrier, f, x),
                      grouplike_coaction_right(h, alg.carrier, f, x)};
    return YdRightBialgebra{obj, alg, coalg};
}

/// The candidate whose biproduct is the 4-dimensional Hopf algebra above:
/// D the nil line, g.x = -x, lambda(x) = g (x) x, right structures trivial.
inline LRAdmissibleCandidate sweedler_candidate(const Field& f) {
    YdLeftBialgebra b = braided_line_left(f);
    const BialgebraData& h = b.object.hopf;
    return LRAdmissibleCandidate(h, b.algebra, b.coalgebra,
                                 ActionPair{b.object.action,
                                            trivial_actions(h, b.object.carrier).right},
                                 CoactionPair{b.object.coaction,
                                              trivial_coactions(h, b.object.carrier).right});
}

/// One-dimensional D with all structures trivial.
inline LRAdmissibleCandidate trivial_candidate(const Field& f) {
    BialgebraData h = kc2(f);
    BasedSpace v = BasedSpace::atom("T", {"1"});
    LinMap mult = map_from(tensor_space(v, v), v, f, {{"1", "1,1", 1}});
    LinMap unit = map_from(BasedSpace::scalar(), v, f, {{"1", "()", 1}});
    LinMap comult = map_from(v, tensor_space(v, v), f, {{"1,1", "1", 1}});
    LinMap counit = map_from(v, BasedSpace::scalar(), f, {{"()", "1", 1}});
    return LRAdmissibleCandidate(h, AlgebraData(v, mult, unit), CoalgebraData(v, comult, counit),
                                 trivial_actions(h, v), trivial_coactions(h, v));
}

/// The 4-dimensional Hopf algebra with basis {1, G, X, GX}, G^2 = 1, X^2 = 0,
/// XG = -GX, Delta(G) = G (x) G, Delta(X) = X (x) 1 + G (x) X.
inline BialgebraData h4(const Field& f) {
    BasedSpace v = BasedSpace::atom("H4", {"1", "G", "X", "GX"});
    BasedSpace vv = tensor_space(v, v);
    LinMap mult = map_from(
        vv, v, f,
        {{"1", "1,1", 1},    {"G", "1,G", 1},   {"X", "1,X", 1},   {"GX", "1,GX", 1},
         {"G", "G,1", 1},    {"1", "G,G", 1},   {"GX", "G,X", 1},  {"X", "G,GX", 1},
         {"X", "X,1", 1},    {"GX", "X,G", -1}, {"GX", "GX,1", 1}, {"X", "GX,G", -1}});
    LinMap unit = map_from(BasedSpace::scalar(), v, f, {{"1", "()", 1}});
    LinMap comult = map_from(v, vv, f,
                             {{"1,1", "1", 1},
                              {"G,G", "G", 1},
                              {"X,1", "X", 1},
                              {"G,X", "X", 1},
                              {"GX,G", "GX", 1},
                              {"1,GX", "GX", 1}});
    LinMap counit =
        map_from(v, BasedSpace::scalar(), f, {{"()", "1", 1}, {"()", "G", 1}});
    return BialgebraData(AlgebraData(v, mult, unit), CoalgebraData(v, comult, counit));
}

/// Zhang-positive input: kC2 acting on kC4 by inversion on both sides, with
/// trivial coactions.
inline LRAdmissibleCandidate zhang_positive(const Field& f) {
    BialgebraData h = kc2(f);
    BialgebraData d = cyclic_group_algebra(f, 4, "D", "m");
    const BasedSpace& ds = d.carrier();
    const BasedSpace& hs = h.carrier();
    LinMap act_l(tensor_space(hs, ds), ds, f);
    LinMap act_r(tensor_space(ds, hs), ds, f);
    for (std::size_t k = 0; k < 4; ++k) {
        act_l.set(k, 0 * 4 + k, Scalar::one(f));          // 1 . m^k = m^k
        act_l.set((4 - k) % 4, 1 * 4 + k, Scalar::one(f));  // g . m^k = m^-k
        act_r.set(k, k * 2 + 0, Scalar::one(f));
        act_r.set((4 - k) % 4, k * 2 + 1, Scalar::one(f));
    }
    return LRAdmissibleCandidate(h, d.algebra, d.coalgebra, ActionPair{act_l, act_r},
                                 trivial_coactions(h, ds));
}

/// Zhang-negative input: the 4-dimensional Hopf algebra acting on the nil
/// line by G.x = -x, X.x = 0; the first commutation condition fails at (X,x).
inline LRAdmissibleCandidate zhang_negative(const Field& f) {
    BialgebraData h = h4(f);
    AlgebraData alg = nil_line_algebra(f, "D");
    CoalgebraData coalg = nil_line_coalgebra(f, "D");
    const BasedSpace& ds = alg.carrier;
    LinMap act_l = map_from(tensor_space(h.carrier(), ds), ds, f,
                            {{"1", "1,1", 1}, {"x", "1,x", 1}, {"1", "G,1", 1}, {"x", "G,x", -1}});
    LinMap act_r = trivial_actions(h, ds).right;
    return LRAdmissibleCandidate(h, alg, coalg, ActionPair{act_l, act_r},
                                 trivial_coactions(h, ds));
}

/// 8-dimensional double-biproduct input: braided lines on both sides, with
/// the pairing-compatible signs.
inline DoubleBiproductInput double8(const Field& f) {
    YdLeftBialgebra a = braided_line_left(f, "A");
    YdRightBialgebra b = braided_line_right(f, "B", "y");
    return DoubleBiproductInput(a.object.hopf, a, b);
}

/// Same but with y <| g = +y, which violates the trivial-pairing condition
/// on (x, y).
inline DoubleBiproductInput double8_broken_pairing(const Field& f) {
    YdLeftBialgebra a = braided_line_left(f, "A");
    BialgebraData h = a.object.hopf;
    AlgebraData alg = nil_line_algebra(f, "B", "y");
    CoalgebraData coalg = nil_line_coalgebra(f, "B", "y");
    LinMap act = map_from(tensor_space(alg.carrier, h.carrier()), alg.carrier, f,
                          {{"1", "1,1", 1}, {"y", "y,1", 1}, {"1", "1,g", 1}, {"y", "y,g", 1}});
    YdRightObject obj{h, alg.carrier, act, grouplike_coaction_right(h, alg.carrier, f, "y")};
    return DoubleBiproductInput(h, a, YdRightBialgebra{obj, alg, coalg});
}

// ---------------------------------------------------------------------------
// category fixtures over kC2
// ---------------------------------------------------------------------------

/// {k, the braided line embedded on the left, its right-handed mirror, and
/// kC2 with both regular actions and trivial coactions}.
inline std::vector<NamedLRObject> category_objects(const Field& f) {
    BialgebraData h = kc2(f);
    std::vector<NamedLRObject> out;
    out.push_back({"unit", lr_unit_object(h)});
    YdLeftBialgebra bl = braided_line_left(f);
    out.push_back({"bl", embed_left_yd(bl.object)});
    YdRightBialgebra br = braided_line_right(f);
    out.push_back({"br", embed_right_yd(br.object)});
    BasedSpace r = BasedSpace::atom("R", {"e", "r"});
    LinMap act_l = map_from(tensor_space(h.carrier(), r), r, f,
                            {{"e", "1,e", 1}, {"r", "1,r", 1}, {"r", "g,e", 1}, {"e", "g,r", 1}});
    LinMap act_r = map_from(tensor_space(r, h.carrier()), r, f,
                            {{"e", "e,1", 1}, {"r", "r,1", 1}, {"r", "e,g", 1}, {"e", "r,g", 1}});
    out.push_back({"reg", LRObject(h, r, ActionPair{act_l, act_r}, trivial_coactions(h, r))});
    return out;
}

/// Morphisms between the category fixtures: unit embeddings, the counit-like
/// projection, a grading-diagonal endomorphism, a zero map, and the averaging
/// endomorphism of the regular object.
inline std::vector<LRMorphism> category_morphisms(const Field& f) {
    BialgebraData h = kc2(f);
    BasedSpace b = BasedSpace::atom("B", {"1", "x"});
    BasedSpace c = BasedSpace::atom("C", {"1", "y"});
    BasedSpace r = BasedSpace::atom("R", {"e", "r"});
    std::vector<LRMorphism> out;
    out.push_back({"unit_to_bl", "unit", "bl",
                   map_from(BasedSpace::scalar(), b, f, {{"1", "()", 1}})});
    out.push_back({"bl_to_unit", "bl", "unit",
                   map_from(b, BasedSpace::scalar(), f, {{"()", "1", 1}})});
    LinMap diag(b, b, f);
    diag.set(0, 0, Scalar::one(f));
    diag.set(1, 1, Scalar::from_integer(f, 2));
    out.push_back({"bl_diagonal", "bl", "bl", diag});
    out.push_back({"bl_to_br_zero", "bl", "br", LinMap::zero(b, c, f)});
    out.push_back({"reg_average", "reg", "reg",
                   map_from(r, r, f, {{"e", "e", 1}, {"r", "e", 1}, {"e", "r", 1}, {"r", "r", 1}})});
    return out;
}

// ---------------------------------------------------------------------------
// one broken variant per admissibility condition
// ---------------------------------------------------------------------------

namespace detail {

/// 3-dimensional D = k[x]/(x^3) with y = x^2; both x and y primitive.
inline std::pair<AlgebraData, CoalgebraData> nil3(const Field& f) {
    BasedSpace v = BasedSpace::atom("D", {"1", "x", "y"});
    BasedSpace vv = tensor_space(v, v);
    LinMap mult = map_from(vv, v, f,
                           {{"1", "1,1", 1}, {"x", "1,x", 1}, {"y", "1,y", 1},
                            {"x", "x,1", 1}, {"y", "y,1", 1}, {"y", "x,x", 1}});
    LinMap unit = map_from(BasedSpace::scalar(), v, f, {{"1", "()", 1}});
    LinMap comult = map_from(v, vv, f,
                             {{"1,1", "1", 1}, {"x,1", "x", 1}, {"1,x", "x", 1},
                              {"y,1", "y", 1}, {"1,y", "y", 1}});
    LinMap counit = map_from(v, BasedSpace::scalar(), f, {{"()", "1", 1}});
    return {AlgebraData(v, mult, unit), CoalgebraData(v, comult, counit)};
}

/// 3-dimensional D with all products of x, y zero; x primitive.
inline std::pair<AlgebraData, CoalgebraData> zero3(const Field& f, bool divided_power_y) {
    BasedSpace v = BasedSpace::atom("D", {"1", "x", "y"});
    BasedSpace vv = tensor_space(v, v);
    LinMap mult = map_from(vv, v, f,
                           {{"1", "1,1", 1}, {"x", "1,x", 1}, {"y", "1,y", 1},
                            {"x", "x,1", 1}, {"y", "y,1", 1}});
    LinMap unit = map_from(BasedSpace::scalar(), v, f, {{"1", "()", 1}});
    std::vector<Entry> centries{{"1,1", "1", 1}, {"x,1", "x", 1}, {"1,x", "x", 1},
                                {"y,1", "y", 1}, {"1,y", "y", 1}};
    if (divided_power_y) centries.push_back({"x,x", "y", 1});
    LinMap comult = map_from(v, vv, f, centries);
    LinMap counit = map_from(v, BasedSpace::scalar(), f, {{"()", "1", 1}});
    return {AlgebraData(v, mult, unit), CoalgebraData(v, comult, counit)};
}

/// Swap action on {x, y} (fixing 1); left version.
inline LinMap swap_action_left(const BialgebraData& h, const BasedSpace& v, const Field& f) {
    return map_from(tensor_space(h.carrier(), v), v, f,
                    {{"1", "1,1", 1}, {"x", "1,x", 1}, {"y", "1,y", 1},
                     {"1", "g,1", 1}, {"y", "g,x", 1}, {"x", "g,y", 1}});
}

inline LinMap swap_action_right(const BialgebraData& h, const BasedSpace& v, const Field& f) {
    return map_from(tensor_space(v, h.carrier()), v, f,
                    {{"1", "1,1", 1}, {"x", "x,1", 1}, {"y", "y,1", 1},
                     {"1", "1,g", 1}, {"y", "x,g", 1}, {"x", "y,g", 1}});
}

}  // namespace detail

/// A candidate that passes every component axiom but fails the numbered
/// admissibility condition `which` (1..14). Each variant is over Q except the
/// coaction-unit breaker, which needs characteristic 2.
inline LRAdmissibleCandidate broken_condition_candidate(int which) {
    const Field q = Field::rationals();
    switch (which) {
        case 1: {
            // x^2 = 1 makes eps_D non-multiplicative
            LRAdmissibleCandidate s = sweedler_candidate(q);
            LinMap mult = s.algebra.mult;
            mult.set(0, 3, Scalar::one(q));  // x.x = 1
            return LRAdmissibleCandidate(s.hopf, AlgebraData(s.algebra.carrier, mult,
                                                             s.algebra.unit),
                                         s.coalgebra, s.actions, s.coactions);
        }
        case 2: {
            // kC2 acting on kC2 by sign: eps_D(g.d) = -1
            BialgebraData h = kc2(q);
            BialgebraData d = cyclic_group_algebra(q, 2, "D", "d");
            LinMap act_l = map_from(tensor_space(h.carrier(), d.carrier()), d.carrier(), q,
                                    {{"1", "1,1", 1}, {"d", "1,d", 1},
                                     {"1", "g,1", 1}, {"d", "g,d", -1}});
            return LRAdmissibleCandidate(h, d.algebra, d.coalgebra,
                                         ActionPair{act_l, trivial_actions(h, d.carrier()).right},
                                         trivial_coactions(h, d.carrier()));
        }
        case 3: {
            // over F2: lambda(1) = 1 (x) 1 + (1+g) (x) x stays a bicomodule
            // but is not unital
            Field f2 = Field::prime(2);
            BialgebraData h = kc2(f2);
            AlgebraData alg = nil_line_algebra(f2, "D");
            CoalgebraData coalg = nil_line_coalgebra(f2, "D");
            LinMap lam = map_from(coalg.carrier, tensor_space(h.carrier(), coalg.carrier), f2,
                                  {{"1,1", "1", 1}, {"1,x", "1", 1}, {"g,x", "1", 1},
                                   {"g,x", "x", 1}});
            return LRAdmissibleCandidate(
                h, alg, coalg, trivial_actions(h, alg.carrier),
                CoactionPair{lam, trivial_coactions(h, alg.carrier).right});
        }
        case 4: {
            // Delta(1) = 1 (x) 1 + x (x) x is still coassociative and counital
            BialgebraData h = kc2(q);
            AlgebraData alg = nil_line_algebra(q, "D");
            CoalgebraData coalg = nil_line_coalgebra(q, "D");
            LinMap comult = coalg.comult;
            comult.set(3, 0, Scalar::one(q));  // + x (x) x on Delta(1)
            return LRAdmissibleCandidate(h, alg, CoalgebraData(coalg.carrier, comult,
                                                               coalg.counit),
                                         trivial_actions(h, alg.carrier),
                                         trivial_coactions(h, alg.carrier));
        }
        case 5: {
            // rho(x) = x (x) g, rho(y) = y (x) g on k[x]/(x^3): not
            // multiplicative since rho(x^2) should be y (x) 1
            BialgebraData h = kc2(q);
            auto [alg, coalg] = detail::nil3(q);
            LinMap rho = map_from(alg.carrier, tensor_space(alg.carrier, h.carrier()), q,
                                  {{"1,1", "1", 1}, {"x,g", "x", 1}, {"y,g", "y", 1}});
            return LRAdmissibleCandidate(
                h, alg, coalg, trivial_actions(h, alg.carrier),
                CoactionPair{trivial_coactions(h, alg.carrier).left, rho});
        }
        case 6: {
            BialgebraData h = kc2(q);
            auto [alg, coalg] = detail::nil3(q);
            LinMap lam = map_from(alg.carrier, tensor_space(h.carrier(), alg.carrier), q,
                                  {{"1,1", "1", 1}, {"g,x", "x", 1}, {"g,y", "y", 1}});
            return LRAdmissibleCandidate(
                h, alg, coalg, trivial_actions(h, alg.carrier),
                CoactionPair{lam, trivial_coactions(h, alg.carrier).right});
        }
        case 7: {
            // divided-power y with g.y = -y, g.x = -x: Delta(g.y) picks up the
            // wrong sign on the x (x) x term
            BialgebraData h = kc2(q);
            auto [alg, coalg] = detail::zero3(q, true);
            LinMap act_l = map_from(tensor_space(h.carrier(), alg.carrier), alg.carrier, q,
                                    {{"1", "1,1", 1}, {"x", "1,x", 1}, {"y", "1,y", 1},
                                     {"1", "g,1", 1}, {"x", "g,x", -1}, {"y", "g,y", -1}});
            return LRAdmissibleCandidate(h, alg, coalg,
                                         ActionPair{act_l, trivial_actions(h, alg.carrier).right},
                                         trivial_coactions(h, alg.carrier));
        }
        case 8: {
            BialgebraData h = kc2(q);
            auto [alg, coalg] = detail::zero3(q, true);
            LinMap act_r = map_from(tensor_space(alg.carrier, h.carrier()), alg.carrier, q,
                                    {{"1", "1,1", 1}, {"x", "x,1", 1}, {"y", "y,1", 1},
                                     {"1", "1,g", 1}, {"x", "x,g", -1}, {"y", "y,g", -1}});
            return LRAdmissibleCandidate(h, alg, coalg,
                                         ActionPair{trivial_actions(h, alg.carrier).left, act_r},
                                         trivial_coactions(h, alg.carrier));
        }
        case 9: {
            // trivialize the left coaction: the braiding degenerates to the
            // flip and Delta(x^2) = 0 vs 2 x (x) x
            LRAdmissibleCandidate s = sweedler_candidate(q);
            return LRAdmissibleCandidate(
                s.hopf, s.algebra, s.coalgebra, s.actions,
                CoactionPair{trivial_coactions(s.hopf, s.carrier()).left, s.coactions.right});
        }
        case 10: {
            BialgebraData h = kc2(q);
            auto [alg, coalg] = detail::zero3(q, false);
            LinMap lam = map_from(alg.carrier, tensor_space(h.carrier(), alg.carrier), q,
                                  {{"1,1", "1", 1}, {"g,x", "x", 1}, {"1,y", "y", 1}});
            return LRAdmissibleCandidate(
                h, alg, coalg,
                ActionPair{detail::swap_action_left(h, alg.carrier, q),
                           trivial_actions(h, alg.carrier).right},
                CoactionPair{lam, trivial_coactions(h, alg.carrier).right});
        }
        case 11: {
            BialgebraData h = kc2(q);
            auto [alg, coalg] = detail::zero3(q, false);
            LinMap rho = map_from(alg.carrier, tensor_space(alg.carrier, h.carrier()), q,
                                  {{"1,1", "1", 1}, {"x,g", "x", 1}, {"y,1", "y", 1}});
            return LRAdmissibleCandidate(
                h, alg, coalg,
                ActionPair{detail::swap_action_left(h, alg.carrier, q),
                           trivial_actions(h, alg.carrier).right},
                CoactionPair{trivial_coactions(h, alg.carrier).left, rho});
        }
        case 12: {
            BialgebraData h = kc2(q);
            auto [alg, coalg] = detail::zero3(q, false);
            LinMap rho = map_from(alg.carrier, tensor_space(alg.carrier, h.carrier()), q,
                                  {{"1,1", "1", 1}, {"x,g", "x", 1}, {"y,1", "y", 1}});
            return LRAdmissibleCandidate(
                h, alg, coalg,
                ActionPair{trivial_actions(h, alg.carrier).left,
                           detail::swap_action_right(h, alg.carrier, q)},
                CoactionPair{trivial_coactions(h, alg.carrier).left, rho});
        }
        case 13: {
            BialgebraData h = kc2(q);
            auto [alg, coalg] = detail::zero3(q, false);
            LinMap lam = map_from(alg.carrier, tensor_space(h.carrier(), alg.carrier), q,
                                  {{"1,1", "1", 1}, {"g,x", "x", 1}, {"1,y", "y", 1}});
            return LRAdmissibleCandidate(
                h, alg, coalg,
                ActionPair{trivial_actions(h, alg.carrier).left,
                           detail::swap_action_right(h, alg.carrier, q)},
                CoactionPair{lam, trivial_coactions(h, alg.carrier).right});
        }
        case 14: {
            // rho(x) = x (x) g: everything still holds except the pairing
            // condition, which fails at (x,x)
            LRAdmissibleCandidate s = sweedler_candidate(q);
            LinMap rho = grouplike_coaction_right(s.hopf, s.carrier(), q);
            return LRAdmissibleCandidate(s.hopf, s.algebra, s.coalgebra, s.actions,
                                         CoactionPair{s.coactions.left, rho});
        }
        default:
            throw Error("broken_condition_candidate: index out of range");
    }
}

}  // namespace lrsmash::fixtures
