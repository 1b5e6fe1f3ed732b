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

#include <utility>

#include "lrsmash/smash.hpp"

namespace lrsmash {

/// Input of the two-sided construction: a left-left Yetter-Drinfeld bialgebra
/// A and a right-right Yetter-Drinfeld bialgebra B over the same H.
struct DoubleBiproductInput {
    BialgebraData hopf;
    YdLeftBialgebra a;
    YdRightBialgebra b;

    DoubleBiproductInput(BialgebraData h, YdLeftBialgebra a_, YdRightBialgebra b_)
        : hopf(std::move(h)), a(std::move(a_)), b(std::move(b_)) {
        if (!(a.object.hopf == hopf) || !(b.object.hopf == hopf))
            throw SpaceMismatch("double biproduct factors live over different hopf data");
        if (!(a.algebra.carrier == a.object.carrier) ||
            !(a.coalgebra.carrier == a.object.carrier) ||
            !(b.algebra.carrier == b.object.carrier) ||
            !(b.coalgebra.carrier == b.object.carrier))
            throw SpaceMismatch("double biproduct factor carriers do not match");
    }

    const Field& field() const { return hopf.field(); }
};

namespace detail {

/// (a # h # b)(a' # h' # b') = a(h1|>a') # h2 h'1 # (b<|h'2)b'.
inline LinMap two_sided_mult(const DoubleBiproductInput& in) {
    const Field& f = in.field();
    const BasedSpace& hs = in.hopf.carrier();
    const BasedSpace& as = in.a.object.carrier;
    const BasedSpace& bs = in.b.object.carrier;
    LinMap ida = LinMap::identity(as, f);
    LinMap idb = LinMap::identity(bs, f);
    LinMap block_a = compose(in.a.algebra.mult, tensor(ida, in.a.object.action));
    LinMap block_b = compose(in.b.algebra.mult, tensor(in.b.object.action, idb));
    return compose_all(
        {tensor(block_a, in.hopf.mult(), block_b),
         select_blocks({as, hs, hs, bs, as, hs, hs, bs}, {0, 1, 4, 2, 5, 3, 6, 7}, f),
         tensor(ida, in.hopf.comult(), idb, ida, in.hopf.comult(), idb)});
}

/// Delta(a # h # b) = (a1 # a2^1 h1 # b1^1) (x) (a2^2 # h2 b1^2 # b2).
inline LinMap two_sided_comult(const DoubleBiproductInput& in) {
    const Field& f = in.field();
    const BasedSpace& hs = in.hopf.carrier();
    const BasedSpace& as = in.a.object.carrier;
    const BasedSpace& bs = in.b.object.carrier;
    LinMap ida = LinMap::identity(as, f);
    LinMap idb = LinMap::identity(bs, f);
    LinMap idh = LinMap::identity(hs, f);
    return compose_all(
        {tensor(ida, in.hopf.mult(), idb, ida, in.hopf.mult(), idb),
         select_blocks({as, hs, as, hs, hs, bs, hs, bs}, {0, 1, 3, 5, 2, 4, 6, 7}, f),
         tensor(ida, in.a.object.coaction, idh, idh, in.b.object.coaction, idb),
         tensor(in.a.coalgebra.comult, in.hopf.comult(), in.b.coalgebra.comult)});
}

}  // namespace detail

/// Two-sided smash product algebra on A (x) H (x) B.
inline AlgebraData two_sided_smash_product(const DoubleBiproductInput& in) {
    CheckReport pre;
    pre.append(check_bialgebra(in.hopf), "H.");
    pre.append(check_algebra(in.a.algebra), "A.");
    pre.append(check_algebra(in.b.algebra), "B.");
    pre.append(check_left_module(in.hopf, in.a.object.carrier, in.a.object.action), "A.");
    pre.append(check_left_module_algebra(in.hopf, in.a.algebra, in.a.object.action),
               "A.module-algebra.");
    pre.append(check_right_module(in.hopf, in.b.object.carrier, in.b.object.action), "B.");
    pre.append(check_right_module_algebra(in.hopf, in.b.algebra, in.b.object.action),
               "B.module-algebra.");
    detail::require_all_pass(pre, "two-sided smash product prerequisites failed");
    BasedSpace carrier =
        tensor_space(in.a.object.carrier, in.hopf.carrier(), in.b.object.carrier);
    return AlgebraData(carrier, detail::two_sided_mult(in),
                       tensor(in.a.algebra.unit, in.hopf.unit(), in.b.algebra.unit));
}

/// Two-sided smash coproduct coalgebra on A (x) H (x) B.
inline CoalgebraData two_sided_smash_coproduct(const DoubleBiproductInput& in) {
    CheckReport pre;
    pre.append(check_bialgebra(in.hopf), "H.");
    pre.append(check_coalgebra(in.a.coalgebra), "A.");
    pre.append(check_coalgebra(in.b.coalgebra), "B.");
    pre.append(check_left_comodule(in.hopf, in.a.object.carrier, in.a.object.coaction), "A.");
    pre.append(check_right_comodule(in.hopf, in.b.object.carrier, in.b.object.coaction), "B.");
    detail::require_all_pass(pre, "two-sided smash coproduct prerequisites failed");
    BasedSpace carrier =
        tensor_space(in.a.object.carrier, in.hopf.carrier(), in.b.object.carrier);
    return CoalgebraData(carrier, detail::two_sided_comult(in),
                         tensor(in.a.coalgebra.counit, in.hopf.counit(), in.b.coalgebra.counit));
}

/// The trivial-pairing condition b^2 |> a^2 (x) b^1 <| a^1 = a (x) b.
inline CheckReport check_trivial_pairing(const DoubleBiproductInput& in) {
    const Field& f = in.field();
    const BasedSpace& hs = in.hopf.carrier();
    const BasedSpace& as = in.a.object.carrier;
    const BasedSpace& bs = in.b.object.carrier;
    LinMap lhs = compose_all({tensor(in.a.object.action, in.b.object.action),
                              select_blocks({hs, as, bs, hs}, {3, 1, 2, 0}, f),
                              tensor(in.a.object.coaction, in.b.object.coaction)});
    CheckReport r;
    r.append(check_identity("pairing", lhs, LinMap::identity(tensor_space(as, bs), f)));
    return r;
}

struct DoubleBiproductResult {
    BialgebraData bialgebra;
    CheckReport pairing_check;
    CheckReport verification;  // 7-point suite on A # H # B
    LinMap phi;                // (A (x) B) # H -> A # H # B basis relabeling
    bool verified = false;
};

/// phi((a (x) b) # h) = a # h # b, as a permutation of tensor legs.
inline LinMap phi_isomorphism(const DoubleBiproductInput& in) {
    const Field& f = in.field();
    return select_blocks({in.a.object.carrier, in.b.object.carrier, in.hopf.carrier()},
                         {0, 2, 1}, f);
}

/// Assemble A # H # B and run the bialgebra suite; requires the trivial
/// pairing (and the module/comodule prerequisites of both constructors).
inline DoubleBiproductResult build_double_biproduct(const DoubleBiproductInput& in,
                                                    BuildOptions opts = {}) {
    CheckReport pairing = check_trivial_pairing(in);
    if (!pairing.all_pass() && !opts.force)
        detail::require_all_pass(pairing, "trivial-pairing condition failed");
    AlgebraData alg = two_sided_smash_product(in);
    CoalgebraData coalg = two_sided_smash_coproduct(in);
    BialgebraData b(alg, coalg);
    CheckReport suite = check_bialgebra(b);
    bool verified = pairing.all_pass() && suite.all_pass();
    return DoubleBiproductResult{std::move(b), std::move(pairing), std::move(suite),
                                 phi_isomorphism(in), verified};
}

/// The LR-admissible candidate induced on D = A (x) B: tensor-product algebra
/// and coalgebra, H acting on the left through A and on the right through B,
/// coacting on the left through A and on the right through B.
inline LRAdmissibleCandidate induced_lr_structure(const DoubleBiproductInput& in) {
    const Field& f = in.field();
    const BasedSpace& as = in.a.object.carrier;
    const BasedSpace& bs = in.b.object.carrier;
    LinMap ida = LinMap::identity(as, f);
    LinMap idb = LinMap::identity(bs, f);
    BasedSpace ds = tensor_space(as, bs);
    LinMap mult = compose(tensor(in.a.algebra.mult, in.b.algebra.mult),
                          select_blocks({as, bs, as, bs}, {0, 2, 1, 3}, f));
    LinMap unit = tensor(in.a.algebra.unit, in.b.algebra.unit);
    LinMap comult = compose(select_blocks({as, as, bs, bs}, {0, 2, 1, 3}, f),
                            tensor(in.a.coalgebra.comult, in.b.coalgebra.comult));
    LinMap counit = tensor(in.a.coalgebra.counit, in.b.coalgebra.counit);
    ActionPair actions{tensor(in.a.object.action, idb), tensor(ida, in.b.object.action)};
    CoactionPair coactions{tensor(in.a.object.coaction, idb), tensor(ida, in.b.object.coaction)};
    return LRAdmissibleCandidate(in.hopf, AlgebraData(ds, mult, unit),
                                 CoalgebraData(ds, comult, counit), actions, coactions);
}

/// The four bialgebra-morphism identities for phi between the induced
/// L-R-smash biproduct (A (x) B) # H and the double biproduct A # H # B,
/// plus bijectivity.
inline CheckReport verify_phi(const DoubleBiproductInput& in, const BialgebraData& lr_side,
                              const BialgebraData& two_sided) {
    const Field& f = in.field();
    LinMap phi = phi_isomorphism(in);
    CheckReport r;
    r.append(check_identity("phi.mult", compose(phi, lr_side.mult()),
                            compose(two_sided.mult(), tensor(phi, phi))));
    r.append(check_identity("phi.unit", compose(phi, lr_side.unit()), two_sided.unit()));
    r.append(check_identity("phi.comult", compose(two_sided.comult(), phi),
                            compose(tensor(phi, phi), lr_side.comult())));
    r.append(check_identity("phi.counit", compose(two_sided.counit(), phi), lr_side.counit()));
    r.append(check_identities("phi.bijective",
                              {{compose(phi, transpose(phi)),
                                LinMap::identity(two_sided.carrier(), f)},
                               {compose(transpose(phi), phi),
                                LinMap::identity(lr_side.carrier(), f)}}));
    return r;
}

}  // namespace lrsmash
