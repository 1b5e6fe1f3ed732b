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
#include <utility>
#include <vector>

#include "lrsmash/check.hpp"
#include "lrsmash/linmap.hpp"
#include "lrsmash/solve.hpp"

namespace lrsmash {

/// Unital associative algebra described by structure constants.
/// mult : carrier (x) carrier -> carrier, unit : k -> carrier.
struct AlgebraData {
    BasedSpace carrier;
    LinMap mult;
    LinMap unit;

    AlgebraData(BasedSpace c, LinMap m, LinMap u)
        : carrier(std::move(c)), mult(std::move(m)), unit(std::move(u)) {
        if (!(mult.dom() == tensor_space(carrier, carrier)) || !(mult.cod() == carrier))
            throw SpaceMismatch("algebra mult has shape " + mult.shape_string());
        if (!(unit.dom() == BasedSpace::scalar()) || !(unit.cod() == carrier))
            throw SpaceMismatch("algebra unit has shape " + unit.shape_string());
        require_same_field(mult, unit);
    }

    const Field& field() const { return mult.field(); }
    bool operator==(const AlgebraData&) const = default;
};

/// Counital coassociative coalgebra.
/// comult : carrier -> carrier (x) carrier, counit : carrier -> k.
struct CoalgebraData {
    BasedSpace carrier;
    LinMap comult;
    LinMap counit;

    CoalgebraData(BasedSpace c, LinMap cm, LinMap cu)
        : carrier(std::move(c)), comult(std::move(cm)), counit(std::move(cu)) {
        if (!(comult.dom() == carrier) || !(comult.cod() == tensor_space(carrier, carrier)))
            throw SpaceMismatch("coalgebra comult has shape " + comult.shape_string());
        if (!(counit.dom() == carrier) || !(counit.cod() == BasedSpace::scalar()))
            throw SpaceMismatch("coalgebra counit has shape " + counit.shape_string());
        require_same_field(comult, counit);
    }

    const Field& field() const { return comult.field(); }
    bool operator==(const CoalgebraData&) const = default;
};

/// Algebra and coalgebra on one carrier (compatibility is what check_bialgebra
/// verifies, it is not assumed here).
struct BialgebraData {
    AlgebraData algebra;
    CoalgebraData coalgebra;

    BialgebraData(AlgebraData a, CoalgebraData c) : algebra(std::move(a)), coalgebra(std::move(c)) {
        if (!(algebra.carrier == coalgebra.carrier))
            throw SpaceMismatch("bialgebra carriers differ: " + algebra.carrier.expression() +
                                " vs " + coalgebra.carrier.expression());
        require_same_field(algebra.mult, coalgebra.comult);
    }

    const BasedSpace& carrier() const { return algebra.carrier; }
    const LinMap& mult() const { return algebra.mult; }
    const LinMap& unit() const { return algebra.unit; }
    const LinMap& comult() const { return coalgebra.comult; }
    const LinMap& counit() const { return coalgebra.counit; }
    const Field& field() const { return algebra.field(); }
    bool operator==(const BialgebraData&) const = default;
};

/// Left action H (x) D -> D together with a right action D (x) H -> D.
struct ActionPair {
    LinMap left;
    LinMap right;
    bool operator==(const ActionPair&) const = default;
};

/// Left coaction D -> H (x) D together with a right coaction D -> D (x) H.
struct CoactionPair {
    LinMap left;
    LinMap right;
    bool operator==(const CoactionPair&) const = default;
};

inline ActionPair trivial_actions(const BialgebraData& h, const BasedSpace& d) {
    const Field& f = h.field();
    LinMap idd = LinMap::identity(d, f);
    return ActionPair{tensor(h.counit(), idd), tensor(idd, h.counit())};
}

inline CoactionPair trivial_coactions(const BialgebraData& h, const BasedSpace& d) {
    const Field& f = h.field();
    LinMap idd = LinMap::identity(d, f);
    return CoactionPair{tensor(h.unit(), idd), tensor(idd, h.unit())};
}

// ---------------------------------------------------------------------------
// axiom checkers
// ---------------------------------------------------------------------------

inline CheckReport check_algebra(const AlgebraData& a) {
    const Field& f = a.field();
    LinMap id = LinMap::identity(a.carrier, f);
    CheckReport r;
    r.append(check_identity("assoc", compose(a.mult, tensor(a.mult, id)),
                            compose(a.mult, tensor(id, a.mult))));
    r.append(check_identity("unit-left", compose(a.mult, tensor(a.unit, id)), id));
    r.append(check_identity("unit-right", compose(a.mult, tensor(id, a.unit)), id));
    return r;
}

inline CheckReport check_coalgebra(const CoalgebraData& c) {
    const Field& f = c.field();
    LinMap id = LinMap::identity(c.carrier, f);
    CheckReport r;
    r.append(check_identity("coassoc", compose(tensor(c.comult, id), c.comult),
                            compose(tensor(id, c.comult), c.comult)));
    r.append(check_identity("counit-left", compose(tensor(c.counit, id), c.comult), id));
    r.append(check_identity("counit-right", compose(tensor(id, c.counit), c.comult), id));
    return r;
}

/// The 7-point bialgebra suite: algebra axioms, coalgebra axioms, and the
/// compatibilities (comultiplication and counit are algebra maps).
inline CheckReport check_bialgebra(const BialgebraData& b) {
    const Field& f = b.field();
    const BasedSpace& v = b.carrier();
    LinMap id = LinMap::identity(v, f);
    CheckReport r;
    r.append(check_identity("assoc", compose(b.mult(), tensor(b.mult(), id)),
                            compose(b.mult(), tensor(id, b.mult()))));
    r.append(check_identities("unit", {{compose(b.mult(), tensor(b.unit(), id)), id},
                                       {compose(b.mult(), tensor(id, b.unit())), id}}));
    r.append(check_identity("coassoc", compose(tensor(b.comult(), id), b.comult()),
                            compose(tensor(id, b.comult()), b.comult())));
    r.append(check_identities("counit", {{compose(tensor(b.counit(), id), b.comult()), id},
                                         {compose(tensor(id, b.counit()), b.comult()), id}}));
    // Delta(ab) = Delta(a)Delta(b) in the tensor-product algebra
    LinMap mid = select_blocks({v, v, v, v}, {0, 2, 1, 3}, f);
    r.append(check_identity(
        "comult-mult", compose(b.comult(), b.mult()),
        compose_all({tensor(b.mult(), b.mult()), mid, tensor(b.comult(), b.comult())})));
    r.append(check_identity("comult-unit", compose(b.comult(), b.unit()),
                            tensor(b.unit(), b.unit())));
    r.append(check_identities("counit-alg",
                              {{compose(b.counit(), b.mult()), tensor(b.counit(), b.counit())},
                               {compose(b.counit(), b.unit()),
                                LinMap::identity(BasedSpace::scalar(), f)}}));
    return r;
}

inline CheckReport check_left_module(const BialgebraData& h, const BasedSpace& d,
                                     const LinMap& act) {
    const Field& f = h.field();
    LinMap idh = LinMap::identity(h.carrier(), f);
    LinMap idd = LinMap::identity(d, f);
    CheckReport r;
    r.append(check_identity("left-assoc", compose(act, tensor(h.mult(), idd)),
                            compose(act, tensor(idh, act))));
    r.append(check_identity("left-unit", compose(act, tensor(h.unit(), idd)), idd));
    return r;
}

inline CheckReport check_right_module(const BialgebraData& h, const BasedSpace& d,
                                      const LinMap& act) {
    const Field& f = h.field();
    LinMap idh = LinMap::identity(h.carrier(), f);
    LinMap idd = LinMap::identity(d, f);
    CheckReport r;
    r.append(check_identity("right-assoc", compose(act, tensor(idd, h.mult())),
                            compose(act, tensor(act, idh))));
    r.append(check_identity("right-unit", compose(act, tensor(idd, h.unit())), idd));
    return r;
}

/// Left module, right module, and the commuting-actions axiom (h.d).h' = h.(d.h').
inline CheckReport check_bimodule(const BialgebraData& h, const BasedSpace& d,
                                  const ActionPair& a) {
    const Field& f = h.field();
    LinMap idh = LinMap::identity(h.carrier(), f);
    CheckReport r;
    r.append(check_left_module(h, d, a.left));
    r.append(check_right_module(h, d, a.right));
    r.append(check_identity("commute", compose(a.right, tensor(a.left, idh)),
                            compose(a.left, tensor(idh, a.right))));
    return r;
}

inline CheckReport check_left_comodule(const BialgebraData& h, const BasedSpace& d,
                                       const LinMap& coact) {
    const Field& f = h.field();
    LinMap idh = LinMap::identity(h.carrier(), f);
    LinMap idd = LinMap::identity(d, f);
    CheckReport r;
    r.append(check_identity("left-coassoc", compose(tensor(h.comult(), idd), coact),
                            compose(tensor(idh, coact), coact)));
    r.append(check_identity("left-counit", compose(tensor(h.counit(), idd), coact), idd));
    return r;
}

inline CheckReport check_right_comodule(const BialgebraData& h, const BasedSpace& d,
                                        const LinMap& coact) {
    const Field& f = h.field();
    LinMap idh = LinMap::identity(h.carrier(), f);
    LinMap idd = LinMap::identity(d, f);
    CheckReport r;
    r.append(check_identity("right-coassoc", compose(tensor(coact, idh), coact),
                            compose(tensor(idd, h.comult()), coact)));
    r.append(check_identity("right-counit", compose(tensor(idd, h.counit()), coact), idd));
    return r;
}

/// Left comodule, right comodule, and (lambda (x) id) rho = (id (x) rho) lambda.
inline CheckReport check_bicomodule(const BialgebraData& h, const BasedSpace& d,
                                    const CoactionPair& c) {
    const Field& f = h.field();
    LinMap idh = LinMap::identity(h.carrier(), f);
    CheckReport r;
    r.append(check_left_comodule(h, d, c.left));
    r.append(check_right_comodule(h, d, c.right));
    r.append(check_identity("compat", compose(tensor(c.left, idh), c.right),
                            compose(tensor(idh, c.right), c.left)));
    return r;
}

inline CheckReport check_left_module_algebra(const BialgebraData& h, const AlgebraData& d,
                                             const LinMap& act) {
    const Field& f = h.field();
    const BasedSpace& hs = h.carrier();
    const BasedSpace& ds = d.carrier;
    LinMap idh = LinMap::identity(hs, f);
    LinMap idd = LinMap::identity(ds, f);
    CheckReport r;
    // h.1 = eps(h)1
    r.append(check_identity("left-unit", compose(act, tensor(idh, d.unit)),
                            compose(d.unit, h.counit())));
    // h.(cd) = (h1.c)(h2.d)
    LinMap rhs = compose_all({d.mult, tensor(act, act),
                              select_blocks({hs, hs, ds, ds}, {0, 2, 1, 3}, f),
                              tensor(h.comult(), idd, idd)});
    r.append(check_identity("left-mult", compose(act, tensor(idh, d.mult)), rhs));
    return r;
}

inline CheckReport check_right_module_algebra(const BialgebraData& h, const AlgebraData& d,
                                              const LinMap& act) {
    const Field& f = h.field();
    const BasedSpace& hs = h.carrier();
    const BasedSpace& ds = d.carrier;
    LinMap idh = LinMap::identity(hs, f);
    LinMap idd = LinMap::identity(ds, f);
    CheckReport r;
    r.append(check_identity("right-unit", compose(act, tensor(d.unit, idh)),
                            compose(d.unit, h.counit())));
    // (cd).h = (c.h1)(d.h2)
    LinMap rhs = compose_all({d.mult, tensor(act, act),
                              select_blocks({ds, ds, hs, hs}, {0, 2, 1, 3}, f),
                              tensor(idd, idd, h.comult())});
    r.append(check_identity("right-mult", compose(act, tensor(d.mult, idh)), rhs));
    return r;
}

/// The four bimodule-algebra identities: units are acted on through the counit
/// and both actions distribute over products via the comultiplication of H.
inline CheckReport check_bimodule_algebra(const BialgebraData& h, const AlgebraData& d,
                                          const ActionPair& a) {
    CheckReport r;
    r.append(check_left_module_algebra(h, d, a.left));
    r.append(check_right_module_algebra(h, d, a.right));
    return r;
}

inline CheckReport check_left_comodule_coalgebra(const BialgebraData& h, const CoalgebraData& d,
                                                 const LinMap& coact) {
    const Field& f = h.field();
    const BasedSpace& hs = h.carrier();
    const BasedSpace& ds = d.carrier;
    LinMap idh = LinMap::identity(hs, f);
    LinMap idd = LinMap::identity(ds, f);
    CheckReport r;
    // d1^(-1)d2^(-1) (x) d1^(0) (x) d2^(0) = d^(-1) (x) Delta(d^(0))
    LinMap lhs = compose_all({tensor(h.mult(), idd, idd),
                              select_blocks({hs, ds, hs, ds}, {0, 2, 1, 3}, f),
                              tensor(coact, coact), d.comult});
    r.append(check_identity("left-comult", lhs, compose(tensor(idh, d.comult), coact)));
    r.append(check_identity("left-counit", compose(tensor(idh, d.counit), coact),
                            compose(h.unit(), d.counit)));
    return r;
}

inline CheckReport check_right_comodule_coalgebra(const BialgebraData& h, const CoalgebraData& d,
                                                  const LinMap& coact) {
    const Field& f = h.field();
    const BasedSpace& hs = h.carrier();
    const BasedSpace& ds = d.carrier;
    LinMap idh = LinMap::identity(hs, f);
    LinMap idd = LinMap::identity(ds, f);
    CheckReport r;
    // d1^<0> (x) d2^<0> (x) d1^<1>d2^<1> = Delta(d^<0>) (x) d^<1>
    LinMap lhs = compose_all({tensor(idd, idd, h.mult()),
                              select_blocks({ds, hs, ds, hs}, {0, 2, 1, 3}, f),
                              tensor(coact, coact), d.comult});
    r.append(check_identity("right-comult", lhs, compose(tensor(d.comult, idh), coact)));
    r.append(check_identity("right-counit", compose(tensor(d.counit, idh), coact),
                            compose(h.unit(), d.counit)));
    return r;
}

/// The four bicomodule-coalgebra identities, dual to check_bimodule_algebra.
inline CheckReport check_bicomodule_coalgebra(const BialgebraData& h, const CoalgebraData& d,
                                              const CoactionPair& c) {
    CheckReport r;
    r.append(check_left_comodule_coalgebra(h, d, c.left));
    r.append(check_right_comodule_coalgebra(h, d, c.right));
    return r;
}

/// Compatibility of both actions with the coalgebra structure of D (module
/// coalgebra, both sides); used by the Zhang construction prerequisites.
inline CheckReport check_bimodule_coalgebra(const BialgebraData& h, const CoalgebraData& d,
                                            const ActionPair& a) {
    const Field& f = h.field();
    const BasedSpace& hs = h.carrier();
    const BasedSpace& ds = d.carrier;
    LinMap idh = LinMap::identity(hs, f);
    LinMap idd = LinMap::identity(ds, f);
    CheckReport r;
    // Delta(h.d) = h1.d1 (x) h2.d2
    LinMap rhs_l = compose_all({tensor(a.left, a.left),
                                select_blocks({hs, hs, ds, ds}, {0, 2, 1, 3}, f),
                                tensor(h.comult(), d.comult)});
    r.append(check_identity("left-comult", compose(d.comult, a.left), rhs_l));
    r.append(check_identity("left-counit", compose(d.counit, a.left),
                            tensor(h.counit(), d.counit)));
    // Delta(d.h) = d1.h1 (x) d2.h2
    LinMap rhs_r = compose_all({tensor(a.right, a.right),
                                select_blocks({ds, ds, hs, hs}, {0, 2, 1, 3}, f),
                                tensor(d.comult, h.comult())});
    r.append(check_identity("right-comult", compose(d.comult, a.right), rhs_r));
    r.append(check_identity("right-counit", compose(d.counit, a.right),
                            tensor(d.counit, h.counit())));
    return r;
}

// ---------------------------------------------------------------------------
// antipode
// ---------------------------------------------------------------------------

namespace detail {

/// Solve mu (S (x) id) Delta = mu (id (x) S) Delta = unit . counit for S, by
/// exact Gaussian elimination in the dim^2 unknown entries of S. Existence is
/// decided, not just approximated: an inconsistent system returns nullopt.
inline std::optional<LinMap> solve_convolution_inverse_of_id(const BasedSpace& v,
                                                             const LinMap& mult,
                                                             const LinMap& comult,
                                                             const LinMap& rhs_map,
                                                             const Field& f) {
    const std::size_t d = v.dim();
    const std::size_t nvar = d * d;
    const std::size_t nrow = 2 * d * d;
    std::vector<Scalar> a(nrow * nvar, Scalar::zero(f));
    std::vector<Scalar> b(nrow, Scalar::zero(f));
    auto var = [d](std::size_t row, std::size_t col) { return row * d + col; };
    for (std::size_t k = 0; k < d; ++k) {
        for (const auto& [jl, cval] : comult.column(k)) {
            const std::size_t j = jl / d, l = jl % d;
            // left side: sum_m mu[i,(m,l)] S[m,j]
            for (std::size_t m = 0; m < d; ++m) {
                for (const auto& [i, mval] : mult.column(m * d + l))
                    a[(i * d + k) * nvar + var(m, j)] += cval * mval;
                for (const auto& [i, mval] : mult.column(j * d + m))
                    a[(d * d + i * d + k) * nvar + var(m, l)] += cval * mval;
            }
        }
        for (const auto& [i, rval] : rhs_map.column(k)) {
            b[i * d + k] = rval;
            b[d * d + i * d + k] = rval;
        }
    }
    auto x = solve_linear(nrow, nvar, std::move(a), std::move(b), f);
    if (!x) return std::nullopt;
    LinMap s(v, v, f);
    for (std::size_t m = 0; m < d; ++m)
        for (std::size_t j = 0; j < d; ++j)
            if (!(*x)[var(m, j)].is_zero()) s.set(m, j, (*x)[var(m, j)]);
    return s;
}

}  // namespace detail

/// Antipode of a bialgebra, if it exists (absence is a value, not an error).
inline std::optional<LinMap> solve_antipode(const BialgebraData& b) {
    LinMap rhs = compose(b.unit(), b.counit());
    auto s = detail::solve_convolution_inverse_of_id(b.carrier(), b.mult(), b.comult(), rhs,
                                                     b.field());
    if (s) {
        const Field& f = b.field();
        LinMap id = LinMap::identity(b.carrier(), f);
        if (!(compose(b.mult(), compose(tensor(*s, id), b.comult())) == rhs) ||
            !(compose(b.mult(), compose(tensor(id, *s), b.comult())) == rhs))
            throw InternalError("antipode solver produced a non-solution");
    }
    return s;
}

/// Skew antipode: the antipode of the co-opposite bialgebra. Inverse of the
/// antipode under composition whenever both exist.
inline std::optional<LinMap> solve_skew_antipode(const BialgebraData& b) {
    const Field& f = b.field();
    LinMap comult_op = compose(flip(b.carrier(), b.carrier(), f), b.comult());
    LinMap rhs = compose(b.unit(), b.counit());
    auto s = detail::solve_convolution_inverse_of_id(b.carrier(), b.mult(), comult_op, rhs, f);
    if (s) {
        LinMap id = LinMap::identity(b.carrier(), f);
        if (!(compose(b.mult(), compose(tensor(*s, id), comult_op)) == rhs) ||
            !(compose(b.mult(), compose(tensor(id, *s), comult_op)) == rhs))
            throw InternalError("skew antipode solver produced a non-solution");
    }
    return s;
}

}  // namespace lrsmash
