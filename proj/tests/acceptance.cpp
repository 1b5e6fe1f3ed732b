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

// Acceptance suite: one line per criterion, exact arithmetic throughout (no
// tolerances anywhere). Exits nonzero if any criterion fails.

#include <cstdlib>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "lrsmash/cli.hpp"
#include "lrsmash/fixtures.hpp"
#include "lrsmash/io.hpp"
#include "test_util.hpp"

using namespace lrsmash;
using lrsmash::test::candidate_mod_p;
using lrsmash::test::fixture_path;
using lrsmash::test::random_map;
using lrsmash::test::read_file;

namespace {

const Field Q = Field::rationals();
const Field F5 = Field::prime(5);

struct Outcome {
    bool pass = true;
    std::string detail;

    void require(bool ok, const std::string& what) {
        if (!ok) {
            pass = false;
            if (!detail.empty()) detail += "; ";
            detail += what;
        }
    }
};

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t e, std::uint64_t p) {
    std::uint64_t r = 1;
    base %= p;
    while (e) {
        if (e & 1) r = r * base % p;
        base = base * base % p;
        e >>= 1;
    }
    return r;
}

/// x^2 = 0, x primitive, g^j |> x = zeta^j x, lambda(x) = g^a (x) x over F5.
YdLeftBialgebra left_line(const BialgebraData& h, std::size_t n, std::uint64_t zeta,
                          std::size_t a, const std::string& name) {
    AlgebraData alg = fixtures::nil_line_algebra(F5, name);
    CoalgebraData co = fixtures::nil_line_coalgebra(F5, name);
    const BasedSpace& v = alg.carrier;
    LinMap act(tensor_space(h.carrier(), v), v, F5);
    for (std::size_t j = 0; j < n; ++j) {
        act.set(0, j * 2 + 0, Scalar::one(F5));
        act.set(1, j * 2 + 1, Scalar::residue(F5, pow_mod(zeta, j, 5)));
    }
    LinMap coact(v, tensor_space(h.carrier(), v), F5);
    coact.set(0, 0, Scalar::one(F5));
    coact.set(a * 2 + 1, 1, Scalar::one(F5));
    return YdLeftBialgebra{YdLeftObject{h, v, act, coact}, alg, co};
}

YdRightBialgebra right_line(const BialgebraData& h, std::size_t n, std::uint64_t xi,
                            std::size_t b, const std::string& name, const std::string& label) {
    AlgebraData alg = fixtures::nil_line_algebra(F5, name, label);
    CoalgebraData co = fixtures::nil_line_coalgebra(F5, name, label);
    const BasedSpace& v = alg.carrier;
    LinMap act(tensor_space(v, h.carrier()), v, F5);
    for (std::size_t j = 0; j < n; ++j) {
        act.set(0, 0 * n + j, Scalar::one(F5));
        act.set(1, 1 * n + j, Scalar::residue(F5, pow_mod(xi, j, 5)));
    }
    LinMap coact(v, tensor_space(v, h.carrier()), F5);
    coact.set(0, 0, Scalar::one(F5));
    coact.set(1 * n + b, 1, Scalar::one(F5));
    return YdRightBialgebra{YdRightObject{h, v, act, coact}, alg, co};
}

/// (zeta, a) with zeta^n = 1 and zeta^a = -1 in F5.
std::vector<std::pair<std::uint64_t, std::size_t>> line_params(std::size_t n) {
    std::vector<std::pair<std::uint64_t, std::size_t>> out;
    for (std::uint64_t zeta = 1; zeta < 5; ++zeta) {
        if (pow_mod(zeta, n, 5) != 1) continue;
        for (std::size_t a = 0; a < n; ++a)
            if (pow_mod(zeta, a, 5) == 4) out.emplace_back(zeta, a);
    }
    return out;
}

bool conditions_1_to_13_pass(const AdmissibilityReport& adm) {
    if (!adm.components.all_pass()) return false;
    for (const auto& e : adm.conditions.entries)
        if (e.id != "1.14" && !e.pass) return false;
    return true;
}

LRAdmissibleCandidate random_candidate(std::mt19937_64& rng, const BialgebraData& h,
                                       std::size_t dim) {
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < dim; ++i) labels.push_back("d" + std::to_string(i));
    BasedSpace v = BasedSpace::atom("D", labels);
    BasedSpace k = BasedSpace::scalar();
    const BasedSpace& hs = h.carrier();
    return LRAdmissibleCandidate(
        h,
        AlgebraData(v, random_map(rng, tensor_space(v, v), v, F5),
                    random_map(rng, k, v, F5, 0.8)),
        CoalgebraData(v, random_map(rng, v, tensor_space(v, v), F5),
                      random_map(rng, v, k, F5, 0.8)),
        ActionPair{random_map(rng, tensor_space(hs, v), v, F5),
                   random_map(rng, tensor_space(v, hs), v, F5)},
        CoactionPair{random_map(rng, v, tensor_space(hs, v), F5),
                     random_map(rng, v, tensor_space(v, hs), F5)});
}

LRAdmissibleCandidate perturb_candidate(std::mt19937_64& rng, const LRAdmissibleCandidate& c,
                                        int edits) {
    std::vector<LinMap> maps{c.hopf.mult(),      c.hopf.unit(),     c.hopf.comult(),
                             c.hopf.counit(),    c.algebra.mult,    c.algebra.unit,
                             c.coalgebra.comult, c.coalgebra.counit, c.actions.left,
                             c.actions.right,    c.coactions.left,  c.coactions.right};
    std::uniform_int_distribution<std::size_t> pick_map(4, maps.size() - 1);  // keep H intact
    std::uniform_int_distribution<std::uint64_t> delta(1, 4);
    for (int e = 0; e < edits; ++e) {
        std::size_t mi = pick_map(rng);
        LinMap& m = maps[mi];
        std::uniform_int_distribution<std::size_t> pr(0, m.cod().dim() - 1);
        std::uniform_int_distribution<std::size_t> pc(0, m.dom().dim() - 1);
        std::size_t r = pr(rng), cc = pc(rng);
        m.set(r, cc, m.entry(r, cc) + Scalar::residue(F5, delta(rng)));
    }
    return LRAdmissibleCandidate(
        BialgebraData(AlgebraData(c.hopf.carrier(), maps[0], maps[1]),
                      CoalgebraData(c.hopf.carrier(), maps[2], maps[3])),
        AlgebraData(c.carrier(), maps[4], maps[5]),
        CoalgebraData(c.carrier(), maps[6], maps[7]), ActionPair{maps[8], maps[9]},
        CoactionPair{maps[10], maps[11]});
}

// --------------------------------------------------------------------------

Outcome criterion1() {
    Outcome o;
    // shipped admissible fixtures
    std::vector<std::pair<std::string, LRAdmissibleCandidate>> cands{
        {"trivial", fixtures::trivial_candidate(Q)},
        {"sweedler", fixtures::sweedler_candidate(Q)},
        {"zhang-positive", fixtures::zhang_positive(Q)},
        {"induced-double8", induced_lr_structure(fixtures::double8(Q))}};
    for (const auto& [name, c] : cands) {
        AdmissibilityReport adm = check_admissible(c);
        o.require(adm.all_pass(), name + " not admissible");
        BiproductResult r = build_biproduct(c, BuildOptions{true});
        o.require(r.verification.all_pass(), name + " suite failed");
    }
    // randomized admissible candidates through the Yetter-Drinfeld pathway
    std::mt19937_64 rng(20260810);
    int built = 0;
    for (std::size_t n : {2u, 4u}) {
        BialgebraData h = fixtures::cyclic_group_algebra(F5, n, "H");
        auto params = line_params(n);
        for (const auto& [zeta, a] : params) {
            for (const auto& [xi, b] : params) {
                YdLeftBialgebra A = left_line(h, n, zeta, a, "A");
                YdRightBialgebra B = right_line(h, n, xi, b, "B", "y");
                DoubleBiproductInput in(h, A, B);
                if (!check_trivial_pairing(in).all_pass()) continue;
                LRAdmissibleCandidate ind = induced_lr_structure(in);
                AdmissibilityReport adm = check_admissible(ind);
                o.require(adm.all_pass(), "random yd pair not admissible");
                BiproductResult r = build_biproduct(ind, BuildOptions{true});
                o.require(r.verification.all_pass(), "random yd pair suite failed");
                ++built;
            }
        }
    }
    o.require(built >= 5, "too few randomized admissible candidates");
    o.detail = "4 fixtures + " + std::to_string(built) + " yd-pair candidates" +
               (o.pass ? "" : "; " + o.detail);
    return o;
}

Outcome criterion2() {
    Outcome o;
    BiproductResult r = radford_biproduct(fixtures::braided_line_left(Q));
    o.require(r.verified, "radford biproduct unverified");
    const LinMap& mult = r.bialgebra.mult();
    auto ent = [&](const LinMap& m, const char* row, const char* col) {
        return lrsmash::test::int_entry(m, row, col);
    };
    o.require(ent(mult, "1,1", "1,g,1,g") == 1, "G^2 != 1");
    auto xsq_col = mult.dom().index_of_label("x,1,x,1");
    o.require(mult.column(*xsq_col).empty(), "X^2 != 0");
    o.require(ent(mult, "x,g", "1,g,x,1") == -1 && ent(mult, "x,g", "x,1,1,g") == 1,
              "GX != -XG");
    o.require(ent(r.bialgebra.comult(), "x,1,1,1", "x,1") == 1 &&
                  ent(r.bialgebra.comult(), "1,g,x,1", "x,1") == 1,
              "Delta(X) != X#1 + G#X");
    // bit-exact match with the shipped fixture
    StructureFile shipped = parse_structure_file_at(fixture_path("sweedler-h4.lrs"));
    o.require(shipped.resolve_bialgebra("biproduct") == r.bialgebra,
              "structure constants differ from shipped fixture");
    o.require(serialize_structure_file(emit_bialgebra_file("biproduct", r.bialgebra)) ==
                  read_file(fixture_path("sweedler-h4.lrs")),
              "emitted bytes differ from shipped fixture");
    auto s = solve_antipode(r.bialgebra);
    o.require(s.has_value(), "antipode missing");
    if (s) {
        LinMap id = LinMap::identity(r.bialgebra.carrier(), Q);
        LinMap s2 = compose(*s, *s);
        o.require(!(s2 == id), "S^2 == id");
        o.require(compose(s2, s2) == id, "S^4 != id");
    }
    return o;
}

Outcome criterion3() {
    Outcome o;
    auto objects = fixtures::category_objects(Q);
    auto morphisms = fixtures::category_morphisms(Q);
    CheckReport r = verify_prebraided(objects, morphisms);
    o.require(r.all_pass(), "prebraided suite failed");
    bool has_inverse_checks = false;
    int checks = 0;
    for (const auto& e : r.entries) {
        ++checks;
        if (e.id.rfind("inverse-", 0) == 0) has_inverse_checks = true;
    }
    o.require(has_inverse_checks, "skew-antipode inverse composites missing");
    o.detail = std::to_string(checks) + " exact matrix identities";
    return o;
}

Outcome criterion4() {
    Outcome o;
    std::mt19937_64 rng(424242);
    BialgebraData h5 = fixtures::kc2(F5);
    int agreed = 0, tested = 0, true_cases = 0;
    auto check_one = [&](const LRAdmissibleCandidate& c) {
        bool lhs = check_bialgebra_in_lr(c.lr_object(), c.algebra, c.coalgebra).all_pass();
        bool rhs = conditions_1_to_13_pass(check_admissible(c));
        ++tested;
        if (lhs == rhs) ++agreed;
        if (lhs) ++true_cases;
        if (lhs != rhs) o.require(false, "disagreement on candidate " + std::to_string(tested));
    };
    // fully random structures over F5, dims 1..3 for D
    std::uniform_int_distribution<std::size_t> dims(1, 3);
    for (int i = 0; i < 90; ++i) check_one(random_candidate(rng, h5, dims(rng)));
    // near-misses: valid candidates with a few corrupted entries
    std::vector<LRAdmissibleCandidate> bases{
        candidate_mod_p(fixtures::sweedler_candidate(Q), 5),
        candidate_mod_p(fixtures::trivial_candidate(Q), 5),
        candidate_mod_p(fixtures::zhang_positive(Q), 5),
        candidate_mod_p(induced_lr_structure(fixtures::double8(Q)), 5)};
    std::uniform_int_distribution<int> edits(1, 2);
    for (int i = 0; i < 80; ++i) check_one(perturb_candidate(rng, bases[i % bases.size()],
                                                             edits(rng)));
    // valid candidates (both routes true)
    for (const auto& c : bases) check_one(c);
    for (std::size_t n : {2u, 4u}) {
        BialgebraData h = fixtures::cyclic_group_algebra(F5, n, "H");
        auto params = line_params(n);
        for (const auto& [zeta, a] : params)
            for (const auto& [xi, b] : params)
                check_one(induced_lr_structure(DoubleBiproductInput(
                    h, left_line(h, n, zeta, a, "A"), right_line(h, n, xi, b, "B", "y"))));
    }
    while (tested < 200) check_one(random_candidate(rng, h5, dims(rng)));
    // all shipped fixtures over their own fields
    check_one(fixtures::trivial_candidate(Q));
    check_one(fixtures::sweedler_candidate(Q));
    check_one(fixtures::zhang_positive(Q));
    check_one(fixtures::zhang_negative(Q));
    check_one(induced_lr_structure(fixtures::double8(Q)));
    check_one(induced_lr_structure(fixtures::double8_broken_pairing(Q)));
    for (int k = 1; k <= 14; ++k) check_one(fixtures::broken_condition_candidate(k));
    o.require(tested >= 200, "fewer than 200 randomized structures");
    o.require(true_cases >= 10, "too few positive instances for a meaningful iff");
    o.detail = std::to_string(agreed) + "/" + std::to_string(tested) + " agreements, " +
               std::to_string(true_cases) + " positive";
    return o;
}

Outcome criterion5() {
    Outcome o;
    DoubleBiproductInput in = fixtures::double8(Q);
    o.require(check_trivial_pairing(in).all_pass(), "pairing check failed");
    DoubleBiproductResult dd = build_double_biproduct(in);
    o.require(dd.verification.all_pass(), "two-sided suite failed");
    LRAdmissibleCandidate ind = induced_lr_structure(in);
    AdmissibilityReport adm = check_admissible(ind);
    o.require(adm.all_pass(), "induced candidate not admissible");
    BiproductResult bp = build_biproduct(ind, BuildOptions{true});
    CheckReport phi = verify_phi(in, bp.bialgebra, dd.bialgebra);
    o.require(phi.passed("phi.mult") && phi.passed("phi.unit") && phi.passed("phi.comult") &&
                  phi.passed("phi.counit") && phi.passed("phi.bijective"),
              "phi identities failed");
    DoubleBiproductInput broken = fixtures::double8_broken_pairing(Q);
    CheckReport pairing = check_trivial_pairing(broken);
    o.require(!pairing.all_pass(), "broken pairing not detected");
    const CheckEntry* pe = pairing.find("pairing");
    o.require(pe && pe->witness && pe->witness->input == "(x,y)", "pairing witness wrong");
    AdmissibilityReport badm = check_admissible(induced_lr_structure(broken));
    const CheckEntry* e14 = badm.conditions.find("1.14");
    o.require(e14 && !e14->pass, "induced broken candidate passes 1.14");
    o.require(e14 && e14->witness && e14->witness->input == "(1,y,x,1)",
              "1.14 witness is not (1 (x) y, x (x) 1)");
    return o;
}

Outcome criterion6() {
    Outcome o;
    struct Case {
        std::string name;
        BialgebraData h;
        BialgebraData d;
        ActionPair actions;
    };
    std::vector<Case> cases;
    {
        auto zp = fixtures::zhang_positive(Q);
        cases.push_back({"kc2-on-kc4", zp.hopf, BialgebraData(zp.algebra, zp.coalgebra),
                         zp.actions});
        auto zp5 = candidate_mod_p(zp, 5);
        cases.push_back({"kc2-on-kc4-mod5", zp5.hopf, BialgebraData(zp5.algebra, zp5.coalgebra),
                         zp5.actions});
    }
    {
        BialgebraData h = fixtures::kc2(Q);
        BialgebraData d = fixtures::cyclic_group_algebra(Q, 2, "D", "d");
        cases.push_back({"kc2-trivial", h, d, trivial_actions(h, d.carrier())});
        BialgebraData h3 = fixtures::kc3(Q);
        cases.push_back({"kc3-trivial", h3, d, trivial_actions(h3, d.carrier())});
        // left inversion only
        auto zp = fixtures::zhang_positive(Q);
        cases.push_back({"left-inversion", zp.hopf, BialgebraData(zp.algebra, zp.coalgebra),
                         ActionPair{zp.actions.left,
                                    trivial_actions(zp.hopf, zp.carrier()).right}});
    }
    int iffs = 0;
    for (const auto& c : cases) {
        CheckReport r = zhang_check(c.h, c.d, c.actions);
        bool components = true;
        for (const auto& e : r.entries)
            if ((e.id.rfind("H.", 0) == 0 || e.id.rfind("D.", 0) == 0 ||
                 e.id.rfind("module", 0) == 0) &&
                !e.pass)
                components = false;
        o.require(components, c.name + " components failed");
        bool lrs = r.passed("lrs1") && r.passed("lrs2");
        bool suite = true;
        for (const auto& e : r.entries)
            if (e.id.rfind("suite.", 0) == 0 && !e.pass) suite = false;
        o.require(lrs == suite, c.name + " iff violated");
        o.require(r.passed("iff-agreement"), c.name + " internal iff entry failed");
        ++iffs;
    }
    // the 4-dimensional Hopf algebra counterexample
    auto zn = fixtures::zhang_negative(Q);
    CheckReport r = zhang_check(zn.hopf, BialgebraData(zn.algebra, zn.coalgebra), zn.actions);
    const CheckEntry* lrs1 = r.find("lrs1");
    o.require(lrs1 && !lrs1->pass, "counterexample passes lrs1");
    o.require(lrs1 && lrs1->witness && lrs1->witness->input == "(X,x)",
              "lrs1 witness is not (X,x)");
    bool suite = true;
    for (const auto& e : r.entries)
        if (e.id.rfind("suite.", 0) == 0 && !e.pass) suite = false;
    o.require(!suite, "counterexample suite did not fail");
    o.detail = std::to_string(iffs) + " iff cases + counterexample";
    return o;
}

Outcome criterion7() {
    Outcome o;
    LRAdmissibleCandidate base = candidate_mod_p(fixtures::sweedler_candidate(Q), 5);
    std::vector<LinMap> maps{base.hopf.mult(),      base.hopf.unit(),     base.hopf.comult(),
                             base.hopf.counit(),    base.algebra.mult,    base.algebra.unit,
                             base.coalgebra.comult, base.coalgebra.counit, base.actions.left,
                             base.actions.right,    base.coactions.left,  base.coactions.right};
    int mutants = 0, silent = 0;
    for (std::size_t mi = 0; mi < maps.size(); ++mi) {
        for (std::size_t r = 0; r < maps[mi].cod().dim(); ++r) {
            for (std::size_t c = 0; c < maps[mi].dom().dim(); ++c) {
                for (long long delta : {+1, -1}) {
                    std::vector<LinMap> m = maps;
                    m[mi].set(r, c, m[mi].entry(r, c) + Scalar::from_integer(F5, delta));
                    LRAdmissibleCandidate mutated(
                        BialgebraData(AlgebraData(base.hopf.carrier(), m[0], m[1]),
                                      CoalgebraData(base.hopf.carrier(), m[2], m[3])),
                        AlgebraData(base.carrier(), m[4], m[5]),
                        CoalgebraData(base.carrier(), m[6], m[7]), ActionPair{m[8], m[9]},
                        CoactionPair{m[10], m[11]});
                    ++mutants;
                    AdmissibilityReport adm = check_admissible(mutated);
                    bool caught = !adm.all_pass();
                    if (!caught) {
                        BiproductResult bp = build_biproduct(mutated, BuildOptions{true});
                        caught = !bp.verification.all_pass();
                    }
                    if (!caught) ++silent;
                }
            }
        }
    }
    o.require(silent == 0, std::to_string(silent) + " silent acceptances");
    o.detail = std::to_string(mutants) + " single-entry mutants, 0 silent";
    o.pass = silent == 0;
    return o;
}

Outcome criterion8() {
    Outcome o;
    std::vector<std::pair<std::string, LRAdmissibleCandidate>> cands{
        {"trivial", fixtures::trivial_candidate(Q)},
        {"sweedler", fixtures::sweedler_candidate(Q)},
        {"zhang-positive", fixtures::zhang_positive(Q)},
        {"induced-double8", induced_lr_structure(fixtures::double8(Q))}};
    for (const auto& [name, c] : cands) {
        CheckReport r = check_auxiliary_identities(c);
        o.require(r.passed("1.15"), name + " fails 1.15");
        o.require(r.passed("1.16"), name + " fails 1.16");
        CheckReport r5 = check_auxiliary_identities(candidate_mod_p(c, 5));
        o.require(r5.all_pass(), name + " fails mod 5");
    }
    return o;
}

Outcome criterion9() {
    Outcome o;
    const std::vector<std::string> files{
        "kc2.lrs",          "kc3.lrs",          "monoid.lrs",
        "h4.lrs",           "trivial.lrs",      "sweedler.lrs",
        "sweedler-h4.lrs",  "zhang-positive.lrs", "zhang-negative.lrs",
        "double8.lrs",      "double8-broken-pairing.lrs", "lr-objects.lrs",
        "broken-1.1.lrs",   "broken-1.2.lrs",   "broken-1.3.lrs",
        "broken-1.4.lrs",   "broken-1.5.lrs",   "broken-1.6.lrs",
        "broken-1.7.lrs",   "broken-1.8.lrs",   "broken-1.9.lrs",
        "broken-1.10.lrs",  "broken-1.11.lrs",  "broken-1.12.lrs",
        "broken-1.13.lrs",  "sweedler-broken-rho.lrs"};
    for (const auto& name : files) {
        std::string text = read_file(fixture_path(name));
        StructureFile sf = parse_structure_file(text);
        o.require(serialize_structure_file(sf) == text, name + " not byte-stable");
        StructureFile again = parse_structure_file(serialize_structure_file(sf));
        bool same = sf.maps.size() == again.maps.size();
        for (std::size_t i = 0; same && i < sf.maps.size(); ++i)
            same = sf.maps[i].map == again.maps[i].map;
        o.require(same, name + " round-trip changed values");
    }
    auto run_once = [&](const char* threads) {
        setenv("LRSMASH_THREADS", threads, 1);
        std::ostringstream out, err;
        cli::run_command({"admissible", fixture_path("sweedler-broken-rho.lrs")}, out, err);
        unsetenv("LRSMASH_THREADS");
        return out.str();
    };
    std::string a = run_once("1"), b = run_once("1"), c = run_once("4");
    o.require(a == b && b == c, "reports are not byte-identical across runs");
    o.detail = std::to_string(files.size()) + " fixtures bit-exact";
    return o;
}

}  // namespace

int main() {
    struct Criterion {
        const char* name;
        std::function<Outcome()> run;
    };
    const std::vector<Criterion> criteria{
        {"criterion-1 biproduct suite on every admissible fixture", criterion1},
        {"criterion-2 four-dimensional Hopf algebra regression", criterion2},
        {"criterion-3 prebraided category suite", criterion3},
        {"criterion-4 category/admissibility equivalence (>=200 randomized)", criterion4},
        {"criterion-5 double biproduct, induced candidate and phi", criterion5},
        {"criterion-6 tensor-coalgebra smash iff the two commutation rules", criterion6},
        {"criterion-7 mutation soundness over F5", criterion7},
        {"criterion-8 auxiliary expansion identities", criterion8},
        {"criterion-9 i/o determinism", criterion9},
    };
    bool all = true;
    for (const auto& c : criteria) {
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception& e) {
            o.pass = false;
            o.detail = std::string("exception: ") + e.what();
        }
        all = all && o.pass;
        std::cout << (o.pass ? "PASS " : "FAIL ") << c.name;
        if (!o.detail.empty()) std::cout << " [" << o.detail << "]";
        std::cout << "\n";
    }
    return all ? 0 : 1;
}
