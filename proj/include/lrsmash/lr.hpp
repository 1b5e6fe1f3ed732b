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

#include <optional>
#include <string>
#include <vector>

#include "lrsmash/hopf.hpp"

namespace lrsmash {

/// Object of the category LR(H): an H-bimodule H-bicomodule M that is a
/// left-left and right-right Yetter-Drinfeld module and a left-right and
/// right-left Long module. The four compatibilities are what check_lr_object
/// verifies; the struct itself only fixes shapes.
struct LRObject {
    BialgebraData hopf;
    BasedSpace carrier;
    ActionPair actions;
    CoactionPair coactions;

    LRObject(BialgebraData h, BasedSpace m, ActionPair a, CoactionPair c)
        : hopf(std::move(h)), carrier(std::move(m)), actions(std::move(a)),
          coactions(std::move(c)) {
        const BasedSpace& hs = hopf.carrier();
        if (!(actions.left.dom() == tensor_space(hs, carrier)) || !(actions.left.cod() == carrier))
            throw SpaceMismatch("left action has shape " + actions.left.shape_string());
        if (!(actions.right.dom() == tensor_space(carrier, hs)) ||
            !(actions.right.cod() == carrier))
            throw SpaceMismatch("right action has shape " + actions.right.shape_string());
        if (!(coactions.left.dom() == carrier) ||
            !(coactions.left.cod() == tensor_space(hs, carrier)))
            throw SpaceMismatch("left coaction has shape " + coactions.left.shape_string());
        if (!(coactions.right.dom() == carrier) ||
            !(coactions.right.cod() == tensor_space(carrier, hs)))
            throw SpaceMismatch("right coaction has shape " + coactions.right.shape_string());
    }

    const Field& field() const { return hopf.field(); }
    bool operator==(const LRObject&) const = default;
};

struct NamedLRObject {
    std::string name;
    LRObject object;
};

/// Morphism candidate between LR objects, referencing objects by name.
struct LRMorphism {
    std::string name;
    std::string from;
    std::string to;
    LinMap map;
};

/// Left-left Yetter-Drinfeld module data: one action H (x) V -> V and one
/// coaction V -> H (x) V.
struct YdLeftObject {
    BialgebraData hopf;
    BasedSpace carrier;
    LinMap action;
    LinMap coaction;
};

/// Right-right Yetter-Drinfeld module data: action V (x) H -> V and coaction
/// V -> V (x) H.
struct YdRightObject {
    BialgebraData hopf;
    BasedSpace carrier;
    LinMap action;
    LinMap coaction;
};

/// A Yetter-Drinfeld object that also carries algebra and coalgebra structure
/// on the same carrier (a braided-bialgebra candidate).
struct YdLeftBialgebra {
    YdLeftObject object;
    AlgebraData algebra;
    CoalgebraData coalgebra;
};

struct YdRightBialgebra {
    YdRightObject object;
    AlgebraData algebra;
    CoalgebraData coalgebra;
};

namespace detail {

// The four module/comodule compatibility conditions shared by the category
// objects and the admissibility checker. Each returns (lhs, rhs).

/// (h1.m)^(-1) h2 (x) (h1.m)^(0) = h1 m^(-1) (x) h2 . m^(0)
inline std::pair<LinMap, LinMap> cond_yd_left(const BialgebraData& h, const BasedSpace& m,
                                              const LinMap& act, const LinMap& coact) {
    const Field& f = h.field();
    const BasedSpace& hs = h.carrier();
    LinMap idh = LinMap::identity(hs, f);
    LinMap idm = LinMap::identity(m, f);
    LinMap lhs = compose_all({tensor(h.mult(), idm),
                              select_blocks({hs, m, hs}, {0, 2, 1}, f),
                              tensor(coact, idh), tensor(act, idh),
                              select_blocks({hs, hs, m}, {0, 2, 1}, f),
                              tensor(h.comult(), idm)});
    LinMap rhs = compose_all({tensor(h.mult(), act),
                              select_blocks({hs, hs, hs, m}, {0, 2, 1, 3}, f),
                              tensor(h.comult(), coact)});
    return {lhs, rhs};
}

/// (h.m)^<0> (x) (h.m)^<1> = h . m^<0> (x) m^<1>
inline std::pair<LinMap, LinMap> cond_long_left_right(const BialgebraData& h, const BasedSpace& m,
                                                      const LinMap& act, const LinMap& coact) {
    const Field& f = h.field();
    LinMap idh = LinMap::identity(h.carrier(), f);
    LinMap lhs = compose(coact, act);
    LinMap rhs = compose(tensor(act, idh), tensor(idh, coact));
    return {lhs, rhs};
}

/// (m.h2)^<0> (x) h1 (m.h2)^<1> = m^<0> . h1 (x) m^<1> h2
inline std::pair<LinMap, LinMap> cond_yd_right(const BialgebraData& h, const BasedSpace& m,
                                               const LinMap& act, const LinMap& coact) {
    const Field& f = h.field();
    const BasedSpace& hs = h.carrier();
    LinMap idh = LinMap::identity(hs, f);
    LinMap idm = LinMap::identity(m, f);
    LinMap lhs = compose_all({tensor(idm, h.mult()),
                              select_blocks({m, hs, hs}, {0, 2, 1}, f),
                              tensor(coact, idh), tensor(act, idh),
                              select_blocks({m, hs, hs}, {0, 2, 1}, f),
                              tensor(idm, h.comult())});
    LinMap rhs = compose_all({tensor(act, h.mult()),
                              select_blocks({m, hs, hs, hs}, {0, 2, 1, 3}, f),
                              tensor(coact, h.comult())});
    return {lhs, rhs};
}

/// (m.h)^(-1) (x) (m.h)^(0) = m^(-1) (x) m^(0) . h
inline std::pair<LinMap, LinMap> cond_long_right_left(const BialgebraData& h, const BasedSpace& m,
                                                      const LinMap& act, const LinMap& coact) {
    const Field& f = h.field();
    LinMap idh = LinMap::identity(h.carrier(), f);
    LinMap lhs = compose(coact, act);
    LinMap rhs = compose(tensor(idh, act), tensor(coact, idh));
    return {lhs, rhs};
}

}  // namespace detail

/// The unit object k, with both actions through the counit and both coactions
/// through the unit of H.
inline LRObject lr_unit_object(const BialgebraData& h) {
    return LRObject(h, BasedSpace::scalar(), ActionPair{h.counit(), h.counit()},
                    CoactionPair{h.unit(), h.unit()});
}

/// Trivial structures on an arbitrary carrier.
inline LRObject lr_trivial_object(const BialgebraData& h, const BasedSpace& m) {
    return LRObject(h, m, trivial_actions(h, m), trivial_coactions(h, m));
}

/// Bimodule and bicomodule axioms plus the four compatibilities (2.1)-(2.4).
inline CheckReport check_lr_object(const LRObject& m) {
    CheckReport r;
    r.append(check_bimodule(m.hopf, m.carrier, m.actions), "module.");
    r.append(check_bicomodule(m.hopf, m.carrier, m.coactions), "comodule.");
    auto c21 = detail::cond_yd_left(m.hopf, m.carrier, m.actions.left, m.coactions.left);
    auto c22 = detail::cond_long_left_right(m.hopf, m.carrier, m.actions.left, m.coactions.right);
    auto c23 = detail::cond_yd_right(m.hopf, m.carrier, m.actions.right, m.coactions.right);
    auto c24 = detail::cond_long_right_left(m.hopf, m.carrier, m.actions.right, m.coactions.left);
    r.append(check_identity("2.1", c21.first, c21.second));
    r.append(check_identity("2.2", c22.first, c22.second));
    r.append(check_identity("2.3", c23.first, c23.second));
    r.append(check_identity("2.4", c24.first, c24.second));
    return r;
}

/// H-bilinearity and H-bicolinearity of a linear map between LR objects.
inline CheckReport check_lr_morphism(const LinMap& f, const LRObject& m, const LRObject& n) {
    if (!(f.dom() == m.carrier) || !(f.cod() == n.carrier))
        throw SpaceMismatch("morphism shape " + f.shape_string() + " does not match objects " +
                            m.carrier.expression() + " -> " + n.carrier.expression());
    if (!(m.hopf == n.hopf)) throw SpaceMismatch("morphism endpoints live over different hopf data");
    const Field& fl = m.field();
    LinMap idh = LinMap::identity(m.hopf.carrier(), fl);
    CheckReport r;
    r.append(check_identity("left-action", compose(f, m.actions.left),
                            compose(n.actions.left, tensor(idh, f))));
    r.append(check_identity("right-action", compose(f, m.actions.right),
                            compose(n.actions.right, tensor(f, idh))));
    r.append(check_identity("left-coaction", compose(n.coactions.left, f),
                            compose(tensor(idh, f), m.coactions.left)));
    r.append(check_identity("right-coaction", compose(n.coactions.right, f),
                            compose(tensor(f, idh), m.coactions.right)));
    return r;
}

/// Monoidal product of LR objects, with diagonal actions and codiagonal
/// coactions.
inline LRObject tensor_lr(const LRObject& m, const LRObject& n) {
    if (!(m.hopf == n.hopf)) throw SpaceMismatch("tensor_lr over different hopf data");
    const Field& f = m.field();
    const BasedSpace& hs = m.hopf.carrier();
    const BasedSpace& ms = m.carrier;
    const BasedSpace& ns = n.carrier;
    LinMap idm = LinMap::identity(ms, f);
    LinMap idn = LinMap::identity(ns, f);
    LinMap act_l = compose_all({tensor(m.actions.left, n.actions.left),
                                select_blocks({hs, hs, ms, ns}, {0, 2, 1, 3}, f),
                                tensor(m.hopf.comult(), idm, idn)});
    LinMap act_r = compose_all({tensor(m.actions.right, n.actions.right),
                                select_blocks({ms, ns, hs, hs}, {0, 2, 1, 3}, f),
                                tensor(idm, idn, m.hopf.comult())});
    LinMap coact_l = compose_all({tensor(m.hopf.mult(), idm, idn),
                                  select_blocks({hs, ms, hs, ns}, {0, 2, 1, 3}, f),
                                  tensor(m.coactions.left, n.coactions.left)});
    LinMap coact_r = compose_all({tensor(idm, idn, m.hopf.mult()),
                                  select_blocks({ms, hs, ns, hs}, {0, 2, 1, 3}, f),
                                  tensor(m.coactions.right, n.coactions.right)});
    return LRObject(m.hopf, tensor_space(ms, ns), ActionPair{act_l, act_r},
                    CoactionPair{coact_l, coact_r});
}

/// Prebraiding c_{M,N} : M (x) N -> N (x) M,
/// m (x) n |-> m^(-1) . n^<0> (x) m^(0) . n^<1>.
inline LinMap braiding(const LRObject& m, const LRObject& n) {
    if (!(m.hopf == n.hopf)) throw SpaceMismatch("braiding over different hopf data");
    const Field& f = m.field();
    const BasedSpace& hs = m.hopf.carrier();
    return compose_all({tensor(n.actions.left, m.actions.right),
                        select_blocks({hs, m.carrier, n.carrier, hs}, {0, 2, 1, 3}, f),
                        tensor(m.coactions.left, n.coactions.right)});
}

/// Inverse braiding (requires a skew antipode of H):
/// n (x) m |-> m^(0) . S^{-1}(n^<1>) (x) S^{-1}(m^(-1)) . n^<0>.
inline LinMap braiding_inverse(const LRObject& m, const LRObject& n, const LinMap& skew) {
    if (!(m.hopf == n.hopf)) throw SpaceMismatch("braiding over different hopf data");
    const Field& f = m.field();
    const BasedSpace& hs = m.hopf.carrier();
    LinMap idm = LinMap::identity(m.carrier, f);
    LinMap idn = LinMap::identity(n.carrier, f);
    return compose_all({tensor(m.actions.right, n.actions.left),
                        select_blocks({n.carrier, hs, hs, m.carrier}, {3, 1, 2, 0}, f),
                        tensor(idn, skew, skew, idm),
                        tensor(n.coactions.right, m.coactions.left)});
}

/// Embed a left-left Yetter-Drinfeld module with trivial right structures.
inline LRObject embed_left_yd(const YdLeftObject& v) {
    ActionPair a{v.action, trivial_actions(v.hopf, v.carrier).right};
    CoactionPair c{v.coaction, trivial_coactions(v.hopf, v.carrier).right};
    return LRObject(v.hopf, v.carrier, a, c);
}

/// Embed a right-right Yetter-Drinfeld module with trivial left structures.
inline LRObject embed_right_yd(const YdRightObject& w) {
    ActionPair a{trivial_actions(w.hopf, w.carrier).left, w.action};
    CoactionPair c{trivial_coactions(w.hopf, w.carrier).left, w.coaction};
    return LRObject(w.hopf, w.carrier, a, c);
}

/// Embed a pair (V, W) as the LR object V (x) W: H acts on the left through V
/// only and on the right through W only, same for the coactions.
inline LRObject embed_yd_pair(const YdLeftObject& v, const YdRightObject& w) {
    if (!(v.hopf == w.hopf)) throw SpaceMismatch("embed_yd_pair over different hopf data");
    const Field& f = v.hopf.field();
    LinMap idv = LinMap::identity(v.carrier, f);
    LinMap idw = LinMap::identity(w.carrier, f);
    ActionPair a{tensor(v.action, idw), tensor(idv, w.action)};
    CoactionPair c{tensor(v.coaction, idw), tensor(idv, w.coaction)};
    return LRObject(v.hopf, tensor_space(v.carrier, w.carrier), a, c);
}

/// Module + comodule axioms plus the left-left Yetter-Drinfeld condition.
inline CheckReport check_yd_left(const YdLeftObject& v) {
    CheckReport r;
    r.append(check_left_module(v.hopf, v.carrier, v.action), "module.");
    r.append(check_left_comodule(v.hopf, v.carrier, v.coaction), "comodule.");
    auto c = detail::cond_yd_left(v.hopf, v.carrier, v.action, v.coaction);
    r.append(check_identity("yd", c.first, c.second));
    return r;
}

inline CheckReport check_yd_right(const YdRightObject& w) {
    CheckReport r;
    r.append(check_right_module(w.hopf, w.carrier, w.action), "module.");
    r.append(check_right_comodule(w.hopf, w.carrier, w.coaction), "comodule.");
    auto c = detail::cond_yd_right(w.hopf, w.carrier, w.action, w.coaction);
    r.append(check_identity("yd", c.first, c.second));
    return r;
}

/// The standard left-left Yetter-Drinfeld braiding v (x) w |-> v^(-1).w (x) v^(0),
/// for cross-checking the restriction of the LR braiding to embedded objects.
inline LinMap yd_left_braiding(const YdLeftObject& v, const YdLeftObject& w) {
    const Field& f = v.hopf.field();
    const BasedSpace& hs = v.hopf.carrier();
    LinMap idv = LinMap::identity(v.carrier, f);
    return compose_all({tensor(w.action, idv),
                        select_blocks({hs, v.carrier, w.carrier}, {0, 2, 1}, f),
                        tensor(v.coaction, LinMap::identity(w.carrier, f))});
}

/// Full prebraiding verification over explicit object and morphism lists:
/// each braiding is a morphism, both hexagons hold on all triples, naturality
/// holds against all supplied morphisms, and when H has a skew antipode the
/// inverse braiding composes to the identity both ways.
inline CheckReport verify_prebraided(const std::vector<NamedLRObject>& objects,
                                     const std::vector<LRMorphism>& morphisms) {
    CheckReport r;
    if (objects.empty()) return r;
    const BialgebraData& h = objects.front().object.hopf;
    for (const auto& o : objects)
        if (!(o.object.hopf == h))
            throw SpaceMismatch("verify_prebraided: objects over different hopf data");
    auto object_of = [&](const std::string& name) -> const LRObject& {
        for (const auto& o : objects)
            if (o.name == name) return o.object;
        throw Error("verify_prebraided: unknown object " + name);
    };

    std::vector<CheckJob> jobs;
    for (const auto& [mn, m] : objects) {
        for (const auto& [nn, n] : objects) {
            jobs.push_back([mn = mn, nn = nn, m = m, n = n] {
                CheckReport sub = check_lr_morphism(braiding(m, n), tensor_lr(m, n),
                                                    tensor_lr(n, m));
                CheckEntry e{"braiding-morphism(" + mn + "," + nn + ")", sub.all_pass(),
                             std::nullopt};
                for (const auto& s : sub.entries)
                    if (!s.pass) {
                        e.witness = s.witness;
                        break;
                    }
                return e;
            });
        }
    }
    for (const auto& [mn, m] : objects) {
        for (const auto& [nn, n] : objects) {
            for (const auto& [pn, p] : objects) {
                jobs.push_back([mn = mn, nn = nn, pn = pn, m = m, n = n, p = p] {
                    const Field& f = m.field();
                    LinMap lhs = braiding(m, tensor_lr(n, p));
                    LinMap rhs = compose(tensor(LinMap::identity(n.carrier, f), braiding(m, p)),
                                         tensor(braiding(m, n), LinMap::identity(p.carrier, f)));
                    return check_identity("hexagon1(" + mn + "," + nn + "," + pn + ")", lhs, rhs);
                });
                jobs.push_back([mn = mn, nn = nn, pn = pn, m = m, n = n, p = p] {
                    const Field& f = m.field();
                    LinMap lhs = braiding(tensor_lr(m, n), p);
                    LinMap rhs = compose(tensor(braiding(m, p), LinMap::identity(n.carrier, f)),
                                         tensor(LinMap::identity(m.carrier, f), braiding(n, p)));
                    return check_identity("hexagon2(" + mn + "," + nn + "," + pn + ")", lhs, rhs);
                });
            }
        }
    }
    for (const auto& fm : morphisms) {
        for (const auto& gm : morphisms) {
            const LRObject& m = object_of(fm.from);
            const LRObject& m2 = object_of(fm.to);
            const LRObject& n = object_of(gm.from);
            const LRObject& n2 = object_of(gm.to);
            jobs.push_back([fm, gm, m, m2, n, n2] {
                LinMap lhs = compose(braiding(m2, n2), tensor(fm.map, gm.map));
                LinMap rhs = compose(tensor(gm.map, fm.map), braiding(m, n));
                return check_identity("naturality(" + fm.name + "," + gm.name + ")", lhs, rhs);
            });
        }
    }
    std::optional<LinMap> skew = solve_skew_antipode(h);
    if (skew) {
        for (const auto& [mn, m] : objects) {
            for (const auto& [nn, n] : objects) {
                jobs.push_back([mn = mn, nn = nn, m = m, n = n, s = *skew] {
                    LinMap lhs = compose(braiding_inverse(m, n, s), braiding(m, n));
                    return check_identity(
                        "inverse-left(" + mn + "," + nn + ")", lhs,
                        LinMap::identity(tensor_space(m.carrier, n.carrier), m.field()));
                });
                jobs.push_back([mn = mn, nn = nn, m = m, n = n, s = *skew] {
                    LinMap lhs = compose(braiding(m, n), braiding_inverse(m, n, s));
                    return check_identity(
                        "inverse-right(" + mn + "," + nn + ")", lhs,
                        LinMap::identity(tensor_space(n.carrier, m.carrier), m.field()));
                });
            }
        }
    }
    return run_checks(jobs);
}

/// "D is a bialgebra in LR(H)", checked through the category machinery: D is
/// an LR object, its algebra/coalgebra axioms hold, the four structure maps
/// are LR morphisms, and the comultiplication is multiplicative with respect
/// to the braided algebra structure on D (x) D.
inline CheckReport check_bialgebra_in_lr(const LRObject& d, const AlgebraData& alg,
                                         const CoalgebraData& coalg) {
    if (!(alg.carrier == d.carrier) || !(coalg.carrier == d.carrier))
        throw SpaceMismatch("check_bialgebra_in_lr: carriers do not match");
    const Field& f = d.field();
    CheckReport r;
    r.append(check_lr_object(d), "object.");
    r.append(check_algebra(alg), "algebra.");
    r.append(check_coalgebra(coalg), "coalgebra.");
    LRObject dd = tensor_lr(d, d);
    LRObject unit_obj = lr_unit_object(d.hopf);
    r.append(check_lr_morphism(alg.mult, dd, d), "mult-morphism.");
    r.append(check_lr_morphism(alg.unit, unit_obj, d), "unit-morphism.");
    r.append(check_lr_morphism(coalg.comult, d, dd), "comult-morphism.");
    r.append(check_lr_morphism(coalg.counit, d, unit_obj), "counit-morphism.");
    LinMap idd = LinMap::identity(d.carrier, f);
    LinMap braided_rhs = compose_all({tensor(alg.mult, alg.mult),
                                      tensor(idd, braiding(d, d), idd),
                                      tensor(coalg.comult, coalg.comult)});
    r.append(check_identity("braided.comult-mult", compose(coalg.comult, alg.mult), braided_rhs));
    r.append(check_identity("braided.comult-unit", compose(coalg.comult, alg.unit),
                            tensor(alg.unit, alg.unit)));
    r.append(check_identities(
        "braided.counit",
        {{compose(coalg.counit, alg.mult), tensor(coalg.counit, coalg.counit)},
         {compose(coalg.counit, alg.unit), LinMap::identity(BasedSpace::scalar(), f)}}));
    return r;
}

}  // namespace lrsmash
