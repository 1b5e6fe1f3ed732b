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

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "lrsmash/io.hpp"

// Command-line surface. Exit codes: 0 all checks passed, 1 at least one check
// failed, 2 usage or input-file errors, 3 internal errors.

namespace lrsmash::cli {

struct CommandReport {
    std::string command;
    std::string file;
    std::string bundle;
    Field field;
    CheckReport checks;
    std::vector<std::string> notes;  // extra human-readable lines (antipode images etc.)
};

inline std::string describe_condition(const std::string& id) {
    return lrsmash::detail::admissibility_condition_name(id);
}

inline void render_human(const CommandReport& r, std::ostream& out) {
    out << "== " << r.command << " " << r.bundle << " (field " << r.field.name() << ") ==\n";
    std::size_t passed = 0;
    for (const auto& e : r.checks.entries) {
        out << (e.pass ? "[PASS] " : "[FAIL] ") << e.id;
        std::string desc = describe_condition(e.id);
        if (!desc.empty()) out << "  (" << desc << ")";
        out << "\n";
        if (!e.pass && e.witness) {
            out << "       witness:  " << e.witness->input << "\n";
            out << "       residual: " << e.witness->residual << "\n";
        }
        if (e.pass) ++passed;
    }
    for (const auto& n : r.notes) out << n << "\n";
    out << "result: " << (r.checks.all_pass() ? "PASS" : "FAIL") << " (" << passed << "/"
        << r.checks.entries.size() << " checks passed)\n";
}

inline std::string render_machine(const CommandReport& r) {
    std::ostringstream out;
    out << "lrsmash-report 1\n";
    out << "command " << r.command << "\n";
    out << "file " << r.file << "\n";
    out << "bundle " << r.bundle << "\n";
    out << "field " << r.field.name() << "\n";
    for (const auto& e : r.checks.entries) {
        out << "check " << e.id << " " << (e.pass ? "pass" : "fail");
        if (!e.pass && e.witness)
            out << " witness " << e.witness->input << " residual " << e.witness->residual;
        out << "\n";
    }
    out << "result " << (r.checks.all_pass() ? "pass" : "fail") << "\n";
    return out.str();
}

namespace detail {

struct Options {
    std::string command;
    std::string file;
    std::string bundle;  // optional; default = unique bundle of the expected kind
    std::optional<std::uint64_t> field_p;
    std::string report_path;
    std::string emit_path;
    bool force = false;
};

inline int usage(std::ostream& err) {
    err << "usage: lrsmash <command> <file.lrs> [bundle] [options]\n"
           "\n"
           "commands:\n"
           "  check-bialgebra    7-point bialgebra suite on a bialgebra bundle\n"
           "  check-lr-object    bimodule/bicomodule + the four compatibilities\n"
           "  check-morphism     H-bilinearity/bicolinearity of a morphism bundle\n"
           "  admissible         component axioms + conditions 1.1-1.14\n"
           "  biproduct          admissibility, assembly, bialgebra suite [--emit]\n"
           "  radford            biproduct with trivialized right structures [--emit]\n"
           "  zhang              the two commutation conditions + tensor-coalgebra suite\n"
           "  double-biproduct   pairing check + two-sided assembly + suite [--emit]\n"
           "  phi-verify         double biproduct vs induced smash biproduct\n"
           "  braiding-verify    braiding morphism/hexagon/naturality/inverse suite\n"
           "  antipode           solve for the antipode and skew antipode\n"
           "\n"
           "options:\n"
           "  --field F<p>   reduce a file declared over Q mod the prime p\n"
           "  --report PATH  write the machine-readable report to PATH\n"
           "  --emit PATH    write computed structure constants to PATH\n"
           "  --force        assemble even when admissibility fails\n"
           "  LRSMASH_THREADS caps check-suite parallelism (environment)\n";
    return 2;
}

inline std::optional<Options> parse_args(const std::vector<std::string>& args,
                                         std::ostream& err) {
    static const std::vector<std::string> commands{
        "check-bialgebra", "check-lr-object", "check-morphism",  "admissible",
        "biproduct",       "radford",         "zhang",           "double-biproduct",
        "phi-verify",      "braiding-verify", "antipode"};
    Options o;
    std::vector<std::string> positional;
    for (std::size_t i = 0; i < args.size(); ++i) {
        const std::string& a = args[i];
        if (a == "--help" || a == "-h") return std::nullopt;
        if (a == "--force") {
            o.force = true;
        } else if (a == "--field" || a == "--report" || a == "--emit") {
            if (i + 1 >= args.size()) {
                err << "error: " << a << " needs a value\n";
                return std::nullopt;
            }
            const std::string v = args[++i];
            if (a == "--report") {
                o.report_path = v;
            } else if (a == "--emit") {
                o.emit_path = v;
            } else {
                if (v.size() < 2 || v[0] != 'F') {
                    err << "error: --field expects F<p>, e.g. F5\n";
                    return std::nullopt;
                }
                char* end = nullptr;
                unsigned long long p = std::strtoull(v.c_str() + 1, &end, 10);
                if (*end != '\0') {
                    err << "error: --field expects F<p>, e.g. F5\n";
                    return std::nullopt;
                }
                o.field_p = p;
            }
        } else if (!a.empty() && a[0] == '-') {
            err << "error: unknown option " << a << "\n";
            return std::nullopt;
        } else {
            positional.push_back(a);
        }
    }
    if (positional.size() < 2 || positional.size() > 3) {
        if (!positional.empty()) err << "error: expected <command> <file.lrs> [bundle]\n";
        return std::nullopt;
    }
    o.command = positional[0];
    o.file = positional[1];
    if (positional.size() == 3) o.bundle = positional[2];
    if (std::count(commands.begin(), commands.end(), o.command) == 0) {
        err << "error: unknown command " << o.command << "\n";
        return std::nullopt;
    }
    return o;
}

inline std::string pick_bundle(const StructureFile& sf, const std::string& kind,
                               const std::string& requested) {
    if (!requested.empty()) {
        if (!sf.find_bundle(kind, requested))
            throw ParseError("no " + kind + " bundle named '" + requested + "'", 1, 1);
        return requested;
    }
    auto names = sf.bundle_names(kind);
    if (names.size() == 1) return names.front();
    if (names.empty()) throw ParseError("file declares no " + kind + " bundle", 1, 1);
    std::string msg = "file declares several " + kind + " bundles, pick one of:";
    for (const auto& n : names) msg += " " + n;
    throw ParseError(msg, 1, 1);
}

inline void render_map_images(const LinMap& s, const std::string& prefix,
                              std::vector<std::string>& notes) {
    for (std::size_t col = 0; col < s.dom().dim(); ++col)
        notes.push_back(prefix + "(" + s.dom().basis_label(col) +
                        ") = " + render_terms(s.cod(), s.column(col)));
}

inline CheckReport run_selected_command(const Options& o, const StructureFile& sf,
                                        const std::string& bundle,
                                        std::vector<std::string>& notes,
                                        std::optional<StructureFile>& emit) {
    CheckReport checks;
    if (o.command == "check-bialgebra") {
        checks = check_bialgebra(sf.resolve_bialgebra(bundle));
    } else if (o.command == "check-lr-object") {
        checks = check_lr_object(sf.resolve_lr_object(bundle));
    } else if (o.command == "check-morphism") {
        LRMorphism m = sf.resolve_morphism(bundle);
        checks = check_lr_morphism(m.map, sf.resolve_lr_object(m.from),
                                   sf.resolve_lr_object(m.to));
    } else if (o.command == "admissible") {
        checks = check_admissible(sf.resolve_candidate(bundle)).combined();
    } else if (o.command == "biproduct") {
        LRAdmissibleCandidate c = sf.resolve_candidate(bundle);
        AdmissibilityReport adm = check_admissible(c);
        checks = adm.combined();
        if (adm.all_pass() || o.force) {
            BiproductResult r = build_biproduct(c, BuildOptions{true});
            checks.append(r.verification, "suite.");
            if (!o.emit_path.empty()) emit = emit_bialgebra_file("biproduct", r.bialgebra);
        }
    } else if (o.command == "radford") {
        LRAdmissibleCandidate c = sf.resolve_candidate(bundle);
        YdLeftBialgebra b{YdLeftObject{c.hopf, c.carrier(), c.actions.left, c.coactions.left},
                          c.algebra, c.coalgebra};
        LRAdmissibleCandidate trivialized(
            c.hopf, c.algebra, c.coalgebra,
            ActionPair{c.actions.left, trivial_actions(c.hopf, c.carrier()).right},
            CoactionPair{c.coactions.left, trivial_coactions(c.hopf, c.carrier()).right});
        AdmissibilityReport adm = check_admissible(trivialized);
        checks = adm.combined();
        if (adm.all_pass() || o.force) {
            BiproductResult r = radford_biproduct(b, BuildOptions{true});
            checks.append(r.verification, "suite.");
            if (!o.emit_path.empty()) emit = emit_bialgebra_file("biproduct", r.bialgebra);
        }
    } else if (o.command == "zhang") {
        LRAdmissibleCandidate c = sf.resolve_candidate(bundle);
        BialgebraData d(c.algebra, c.coalgebra);
        checks = zhang_check(c.hopf, d, c.actions);
        if (checks.all_pass() && !o.emit_path.empty()) {
            BiproductResult r = zhang_biproduct(c.hopf, d, c.actions);
            emit = emit_bialgebra_file("biproduct", r.bialgebra);
        }
    } else if (o.command == "double-biproduct") {
        DoubleBiproductInput in = sf.resolve_double_input(bundle);
        checks = check_trivial_pairing(in);
        if (checks.all_pass() || o.force) {
            DoubleBiproductResult r = build_double_biproduct(in, BuildOptions{true});
            checks.append(r.verification, "suite.");
            if (!o.emit_path.empty()) emit = emit_bialgebra_file("double_biproduct", r.bialgebra);
        }
    } else if (o.command == "phi-verify") {
        DoubleBiproductInput in = sf.resolve_double_input(bundle);
        checks = check_trivial_pairing(in);
        if (checks.all_pass()) {
            DoubleBiproductResult dd = build_double_biproduct(in);
            checks.append(dd.verification, "two-sided.");
            LRAdmissibleCandidate induced = induced_lr_structure(in);
            AdmissibilityReport adm = check_admissible(induced);
            CheckReport combined = adm.combined();
            checks.append(combined, "induced.");
            if (adm.all_pass()) {
                BiproductResult bp = build_biproduct(induced);
                checks.append(bp.verification, "induced-suite.");
                checks.append(verify_phi(in, bp.bialgebra, dd.bialgebra));
            }
        }
    } else if (o.command == "braiding-verify") {
        std::vector<NamedLRObject> objects;
        for (const auto& n : sf.bundle_names("lr-object"))
            objects.push_back({n, sf.resolve_lr_object(n)});
        std::vector<LRMorphism> morphisms;
        for (const auto& n : sf.bundle_names("morphism"))
            morphisms.push_back(sf.resolve_morphism(n));
        checks = verify_prebraided(objects, morphisms);
    } else if (o.command == "antipode") {
        BialgebraData b = sf.resolve_bialgebra(bundle);
        checks.append(check_bialgebra(b), "bialgebra.");
        std::optional<LinMap> s = solve_antipode(b);
        checks.append(CheckEntry{"antipode.exists", s.has_value(), std::nullopt});
        std::optional<LinMap> skew = solve_skew_antipode(b);
        checks.append(CheckEntry{"skew-antipode.exists", skew.has_value(), std::nullopt});
        if (s) render_map_images(*s, "S", notes);
        if (skew) render_map_images(*skew, "Sinv", notes);
        if (s && skew) {
            LinMap id = LinMap::identity(b.carrier(), b.field());
            checks.append(check_identities("antipode.inverse-compat",
                                           {{compose(*s, *skew), id}, {compose(*skew, *s), id}}));
        }
    } else {
        throw InternalError("unhandled command " + o.command);
    }
    return checks;
}

inline std::string bundle_kind_for_command(const std::string& command) {
    if (command == "check-bialgebra" || command == "antipode") return "bialgebra";
    if (command == "check-lr-object") return "lr-object";
    if (command == "check-morphism") return "morphism";
    if (command == "double-biproduct" || command == "phi-verify") return "double-input";
    if (command == "braiding-verify") return "";
    return "candidate";
}

}  // namespace detail

/// Run one CLI invocation. `args` excludes the program name.
inline int run_command(const std::vector<std::string>& args, std::ostream& out,
                       std::ostream& err) {
    auto opts = detail::parse_args(args, err);
    if (!opts) return detail::usage(err);
    if (opts->field_p) {
        try {
            Field::prime(*opts->field_p);
        } catch (const Error& e) {
            err << "error: " << e.what() << "\n";
            return 2;
        }
    }
    try {
        StructureFile sf = parse_structure_file_at(opts->file);
        if (opts->field_p) sf = reduce_mod_p(sf, *opts->field_p);
        std::string kind = detail::bundle_kind_for_command(opts->command);
        std::string bundle =
            kind.empty() ? std::string("all") : detail::pick_bundle(sf, kind, opts->bundle);
        CommandReport report;
        report.command = opts->command;
        report.file = opts->file;
        report.bundle = bundle;
        report.field = sf.field;
        std::optional<StructureFile> emit;
        report.checks = detail::run_selected_command(*opts, sf, bundle, report.notes, emit);
        render_human(report, out);
        if (!opts->report_path.empty()) {
            std::ofstream rf(opts->report_path, std::ios::binary);
            if (!rf) throw Error("cannot write report file: " + opts->report_path);
            rf << render_machine(report);
        }
        if (emit) {
            std::ofstream ef(opts->emit_path, std::ios::binary);
            if (!ef) throw Error("cannot write emit file: " + opts->emit_path);
            ef << serialize_structure_file(*emit);
        }
        return report.checks.all_pass() ? 0 : 1;
    } catch (const ParseError& e) {
        err << "error: " << opts->file << ": " << e.what() << "\n";
        return 2;
    } catch (const PrerequisiteError& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << "\n";
        return 3;
    }
}

}  // namespace lrsmash::cli
