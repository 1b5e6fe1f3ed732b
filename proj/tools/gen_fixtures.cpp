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

// Regenerates the shipped fixture library from the programmatic builders.
// Usage: lrsmash-fixgen [output-dir]

#include <fstream>
#include <iostream>
#include <string>

#include "lrsmash/fixtures.hpp"
#include "lrsmash/io.hpp"

using namespace lrsmash;

namespace {

void write_file(const std::string& dir, const std::string& name, const StructureFile& sf) {
    const std::string path = dir + "/" + name;
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("cannot write " + path);
    out << serialize_structure_file(sf);
    std::cout << "wrote " << path << "\n";
}

StructureFile bialgebra_file(const Field& f, const std::string& name, const BialgebraData& b) {
    StructureFile sf;
    sf.field = f;
    add_bialgebra_bundle(sf, name, b);
    return sf;
}

StructureFile candidate_file(const LRAdmissibleCandidate& c, const std::string& hopf,
                             const std::string& name, const CandidateBundleOptions& opt = {}) {
    StructureFile sf;
    sf.field = c.field();
    add_candidate_bundle(sf, name, hopf, c, opt);
    return sf;
}

}  // namespace

int main(int argc, char** argv) {
    const std::string dir = argc > 1 ? argv[1] : "fixtures";
    const Field q = Field::rationals();
    try {
        write_file(dir, "kc2.lrs", bialgebra_file(q, "kc2", fixtures::kc2(q)));
        write_file(dir, "kc3.lrs", bialgebra_file(q, "kc3", fixtures::kc3(q)));
        write_file(dir, "monoid.lrs", bialgebra_file(q, "monoid", fixtures::monoid_bialgebra(q)));
        write_file(dir, "h4.lrs", bialgebra_file(q, "h4", fixtures::h4(q)));

        write_file(dir, "trivial.lrs",
                   candidate_file(fixtures::trivial_candidate(q), "kc2", "trivial"));
        write_file(dir, "sweedler.lrs",
                   candidate_file(fixtures::sweedler_candidate(q), "kc2", "sweedler"));

        // regression fixture: the emitted biproduct of the sweedler candidate
        BiproductResult h4bp = build_biproduct(fixtures::sweedler_candidate(q));
        write_file(dir, "sweedler-h4.lrs", emit_bialgebra_file("biproduct", h4bp.bialgebra));

        CandidateBundleOptions actions_only;
        actions_only.include_coact_left = false;
        actions_only.include_coact_right = false;
        write_file(dir, "zhang-positive.lrs",
                   candidate_file(fixtures::zhang_positive(q), "kc2", "zhang_positive",
                                  actions_only));
        write_file(dir, "zhang-negative.lrs",
                   candidate_file(fixtures::zhang_negative(q), "h4", "zhang_negative",
                                  actions_only));

        {
            StructureFile sf;
            sf.field = q;
            add_double_input_bundle(sf, "double8", "kc2", fixtures::double8(q));
            write_file(dir, "double8.lrs", sf);
        }
        {
            StructureFile sf;
            sf.field = q;
            add_double_input_bundle(sf, "double8_broken", "kc2",
                                    fixtures::double8_broken_pairing(q));
            write_file(dir, "double8-broken-pairing.lrs", sf);
        }
        {
            StructureFile sf;
            sf.field = q;
            for (const auto& [name, obj] : fixtures::category_objects(q)) {
                CandidateBundleOptions opt;
                opt.include_act_left = !(obj.actions.left ==
                                         trivial_actions(obj.hopf, obj.carrier).left);
                opt.include_act_right = !(obj.actions.right ==
                                          trivial_actions(obj.hopf, obj.carrier).right);
                opt.include_coact_left = !(obj.coactions.left ==
                                           trivial_coactions(obj.hopf, obj.carrier).left);
                opt.include_coact_right = !(obj.coactions.right ==
                                            trivial_coactions(obj.hopf, obj.carrier).right);
                add_lr_object_bundle(sf, name, "kc2", obj, opt);
            }
            for (const auto& m : fixtures::category_morphisms(q)) add_morphism_bundle(sf, m.name, m);
            write_file(dir, "lr-objects.lrs", sf);
        }

        for (int k = 1; k <= 14; ++k) {
            LRAdmissibleCandidate c = fixtures::broken_condition_candidate(k);
            std::string bundle = "broken_1_" + std::to_string(k);
            std::string file = "broken-1." + std::to_string(k) + ".lrs";
            if (k == 14) {
                bundle = "sweedler_broken_rho";
                file = "sweedler-broken-rho.lrs";
            }
            write_file(dir, file, candidate_file(c, "hopf", bundle));
        }
    } catch (const std::exception& e) {
        std::cerr << "fixgen failed: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
