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

// Structure-constants files (.lrs): a line-oriented text format for exact
// structure data. Sections start with a keyword; '#' starts a comment.
//
//   field Q                  | field Fp 5
//   space H 1 g              # atomic space with basis labels
//   map Hmult : H * H -> H   # sparse entries follow: <row> <col> <value>
//     1 1,1 1
//     g 1,g 1
//   bialgebra kc2            # bundles reference maps by name
//     carrier H
//     mult Hmult
//     ...
//
// Tuple labels join factor labels with commas ("x,g"); the empty tuple of the
// ground field k is written "()". Rationals are "n" or "n/d"; residues are
// integers reduced into [0, p). Omitted entries are zero. In candidate and
// lr-object bundles, omitted actions or coactions default to the trivial ones.

#pragma once

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "lrsmash/double_biproduct.hpp"

namespace lrsmash {

struct StructureFile {
    Field field;
    std::vector<SpaceFactor> spaces;

    struct MapDecl {
        std::string name;
        LinMap map;
        int line = 0;
    };
    std::vector<MapDecl> maps;

    struct Bundle {
        std::string kind;
        std::string name;
        std::vector<std::pair<std::string, std::string>> kv;
        int line = 0;

        const std::string* get(const std::string& key) const {
            for (const auto& [k, v] : kv)
                if (k == key) return &v;
            return nullptr;
        }
    };
    std::vector<Bundle> bundles;

    const SpaceFactor* find_space(const std::string& name) const {
        for (const auto& s : spaces)
            if (s.name == name) return &s;
        return nullptr;
    }
    const MapDecl* find_map(const std::string& name) const {
        for (const auto& m : maps)
            if (m.name == name) return &m;
        return nullptr;
    }
    const Bundle* find_bundle(const std::string& kind, const std::string& name) const {
        for (const auto& b : bundles)
            if (b.kind == kind && b.name == name) return &b;
        return nullptr;
    }
    std::vector<std::string> bundle_names(const std::string& kind) const {
        std::vector<std::string> out;
        for (const auto& b : bundles)
            if (b.kind == kind) out.push_back(b.name);
        return out;
    }

    // -- resolution ---------------------------------------------------------

    BasedSpace space_from_expression(const std::string& expr, int line) const;
    BialgebraData resolve_bialgebra(const std::string& name) const;
    LRObject resolve_lr_object(const std::string& name) const;
    LRMorphism resolve_morphism(const std::string& name) const;
    LRAdmissibleCandidate resolve_candidate(const std::string& name) const;
    DoubleBiproductInput resolve_double_input(const std::string& name) const;

   private:
    LinMap resolve_map_checked(const std::string& name, const BasedSpace& dom,
                               const BasedSpace& cod, const std::string& context, int line) const;
};

namespace io_detail {

inline bool valid_name(const std::string& s) {
    if (s.empty() || s == "k" || s == "()") return false;
    for (char c : s)
        if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\'')) return false;
    return true;
}

inline bool valid_label(const std::string& s) { return valid_name(s) || s == "()"; }

struct Token {
    std::string text;
    int col = 0;
};

inline std::vector<Token> tokenize_line(const std::string& line) {
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < line.size()) {
        if (line[i] == '#') break;
        if (std::isspace(static_cast<unsigned char>(line[i]))) {
            ++i;
            continue;
        }
        std::size_t start = i;
        while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i])) &&
               line[i] != '#')
            ++i;
        out.push_back(Token{line.substr(start, i - start), static_cast<int>(start) + 1});
    }
    return out;
}

inline Scalar parse_scalar(const std::string& text, const Field& field, int line, int col) {
    std::size_t i = 0;
    bool neg = false;
    if (i < text.size() && text[i] == '-') {
        neg = true;
        ++i;
    }
    std::size_t digits_start = i;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
    if (i == digits_start) throw ParseError("malformed scalar '" + text + "'", line, col);
    std::string num = text.substr(digits_start, i - digits_start);
    std::string den = "1";
    if (i < text.size()) {
        if (text[i] != '/' || field.modulus != 0)
            throw ParseError("malformed scalar '" + text + "'", line, col);
        ++i;
        std::size_t den_start = i;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
        if (i == den_start || i != text.size())
            throw ParseError("malformed scalar '" + text + "'", line, col);
        den = text.substr(den_start);
    }
    if (field.is_rational()) {
        BigInt n(num);
        if (neg) n = -n;
        BigInt d(den);
        if (d == 0) throw ParseError("scalar '" + text + "' has zero denominator", line, col);
        return Scalar::rational(n, d);
    }
    BigInt n(num);
    BigInt p(field.modulus);
    BigInt r = n % p;
    if (neg && r != 0) r = p - r;
    return Scalar::residue(field, r.convert_to<std::uint64_t>());
}

}  // namespace io_detail

inline BasedSpace StructureFile::space_from_expression(const std::string& expr, int line) const {
    std::istringstream in(expr);
    std::vector<std::string> toks;
    std::string t;
    while (in >> t) toks.push_back(t);
    if (toks.empty()) throw ParseError("empty space expression", line, 1);
    if (toks.size() == 1 && toks[0] == "k") return BasedSpace::scalar();
    BasedSpace out;
    for (std::size_t i = 0; i < toks.size(); ++i) {
        if (i % 2 == 1) {
            if (toks[i] != "*")
                throw ParseError("expected '*' in space expression '" + expr + "'", line, 1);
            continue;
        }
        const SpaceFactor* s = find_space(toks[i]);
        if (!s) throw ParseError("unresolved space name '" + toks[i] + "'", line, 1);
        out = tensor_space(out, BasedSpace::from_factors({*s}));
    }
    if (toks.size() % 2 == 0)
        throw ParseError("dangling '*' in space expression '" + expr + "'", line, 1);
    return out;
}

inline LinMap StructureFile::resolve_map_checked(const std::string& name, const BasedSpace& dom,
                                                 const BasedSpace& cod, const std::string& context,
                                                 int line) const {
    const MapDecl* m = find_map(name);
    if (!m) throw ParseError("unresolved map name '" + name + "' in " + context, line, 1);
    if (!(m->map.dom() == dom) || !(m->map.cod() == cod))
        throw ParseError("map '" + name + "' has shape " + m->map.shape_string() + " but " +
                             context + " requires " + cod.expression() + " <- " + dom.expression(),
                         line, 1);
    return m->map;
}

inline BialgebraData StructureFile::resolve_bialgebra(const std::string& name) const {
    const Bundle* b = find_bundle("bialgebra", name);
    if (!b) throw ParseError("no bialgebra bundle named '" + name + "'", 1, 1);
    const std::string* carrier = b->get("carrier");
    if (!carrier) throw ParseError("bialgebra '" + name + "' lacks a carrier", b->line, 1);
    BasedSpace v = space_from_expression(*carrier, b->line);
    BasedSpace vv = tensor_space(v, v);
    BasedSpace k = BasedSpace::scalar();
    auto need = [&](const char* key) -> const std::string& {
        const std::string* val = b->get(key);
        if (!val)
            throw ParseError("bialgebra '" + name + "' lacks key '" + std::string(key) + "'",
                             b->line, 1);
        return *val;
    };
    std::string ctx = "bialgebra " + name;
    return BialgebraData(
        AlgebraData(v, resolve_map_checked(need("mult"), vv, v, ctx, b->line),
                    resolve_map_checked(need("unit"), k, v, ctx, b->line)),
        CoalgebraData(v, resolve_map_checked(need("comult"), v, vv, ctx, b->line),
                      resolve_map_checked(need("counit"), v, k, ctx, b->line)));
}

inline LRObject StructureFile::resolve_lr_object(const std::string& name) const {
    const Bundle* b = find_bundle("lr-object", name);
    if (!b) throw ParseError("no lr-object bundle named '" + name + "'", 1, 1);
    const std::string* hopf_name = b->get("hopf");
    const std::string* carrier = b->get("carrier");
    if (!hopf_name || !carrier)
        throw ParseError("lr-object '" + name + "' needs 'hopf' and 'carrier'", b->line, 1);
    BialgebraData h = resolve_bialgebra(*hopf_name);
    BasedSpace v = space_from_expression(*carrier, b->line);
    const BasedSpace& hs = h.carrier();
    std::string ctx = "lr-object " + name;
    ActionPair acts = trivial_actions(h, v);
    CoactionPair coacts = trivial_coactions(h, v);
    if (const std::string* s = b->get("act-left"))
        acts.left = resolve_map_checked(*s, tensor_space(hs, v), v, ctx, b->line);
    if (const std::string* s = b->get("act-right"))
        acts.right = resolve_map_checked(*s, tensor_space(v, hs), v, ctx, b->line);
    if (const std::string* s = b->get("coact-left"))
        coacts.left = resolve_map_checked(*s, v, tensor_space(hs, v), ctx, b->line);
    if (const std::string* s = b->get("coact-right"))
        coacts.right = resolve_map_checked(*s, v, tensor_space(v, hs), ctx, b->line);
    return LRObject(h, v, acts, coacts);
}

inline LRMorphism StructureFile::resolve_morphism(const std::string& name) const {
    const Bundle* b = find_bundle("morphism", name);
    if (!b) throw ParseError("no morphism bundle named '" + name + "'", 1, 1);
    const std::string* from = b->get("from");
    const std::string* to = b->get("to");
    const std::string* map_name = b->get("map");
    if (!from || !to || !map_name)
        throw ParseError("morphism '" + name + "' needs 'from', 'to' and 'map'", b->line, 1);
    LRObject m = resolve_lr_object(*from);
    LRObject n = resolve_lr_object(*to);
    LinMap f = resolve_map_checked(*map_name, m.carrier, n.carrier, "morphism " + name, b->line);
    return LRMorphism{name, *from, *to, f};
}

inline LRAdmissibleCandidate StructureFile::resolve_candidate(const std::string& name) const {
    const Bundle* b = find_bundle("candidate", name);
    if (!b) throw ParseError("no candidate bundle named '" + name + "'", 1, 1);
    const std::string* hopf_name = b->get("hopf");
    const std::string* carrier = b->get("carrier");
    if (!hopf_name || !carrier)
        throw ParseError("candidate '" + name + "' needs 'hopf' and 'carrier'", b->line, 1);
    BialgebraData h = resolve_bialgebra(*hopf_name);
    BasedSpace v = space_from_expression(*carrier, b->line);
    BasedSpace vv = tensor_space(v, v);
    BasedSpace k = BasedSpace::scalar();
    const BasedSpace& hs = h.carrier();
    std::string ctx = "candidate " + name;
    auto need = [&](const char* key) -> const std::string& {
        const std::string* val = b->get(key);
        if (!val)
            throw ParseError("candidate '" + name + "' lacks key '" + std::string(key) + "'",
                             b->line, 1);
        return *val;
    };
    AlgebraData alg(v, resolve_map_checked(need("mult"), vv, v, ctx, b->line),
                    resolve_map_checked(need("unit"), k, v, ctx, b->line));
    CoalgebraData coalg(v, resolve_map_checked(need("comult"), v, vv, ctx, b->line),
                        resolve_map_checked(need("counit"), v, k, ctx, b->line));
    ActionPair acts = trivial_actions(h, v);
    CoactionPair coacts = trivial_coactions(h, v);
    if (const std::string* s = b->get("act-left"))
        acts.left = resolve_map_checked(*s, tensor_space(hs, v), v, ctx, b->line);
    if (const std::string* s = b->get("act-right"))
        acts.right = resolve_map_checked(*s, tensor_space(v, hs), v, ctx, b->line);
    if (const std::string* s = b->get("coact-left"))
        coacts.left = resolve_map_checked(*s, v, tensor_space(hs, v), ctx, b->line);
    if (const std::string* s = b->get("coact-right"))
        coacts.right = resolve_map_checked(*s, v, tensor_space(v, hs), ctx, b->line);
    return LRAdmissibleCandidate(h, alg, coalg, acts, coacts);
}

inline DoubleBiproductInput StructureFile::resolve_double_input(const std::string& name) const {
    const Bundle* b = find_bundle("double-input", name);
    if (!b) throw ParseError("no double-input bundle named '" + name + "'", 1, 1);
    auto need = [&](const char* key) -> const std::string& {
        const std::string* val = b->get(key);
        if (!val)
            throw ParseError("double-input '" + name + "' lacks key '" + std::string(key) + "'",
                             b->line, 1);
        return *val;
    };
    BialgebraData h = resolve_bialgebra(need("hopf"));
    const BasedSpace& hs = h.carrier();
    BasedSpace k = BasedSpace::scalar();
    std::string ctx = "double-input " + name;

    BasedSpace a = space_from_expression(need("a-carrier"), b->line);
    AlgebraData a_alg(a, resolve_map_checked(need("a-mult"), tensor_space(a, a), a, ctx, b->line),
                      resolve_map_checked(need("a-unit"), k, a, ctx, b->line));
    CoalgebraData a_co(a,
                       resolve_map_checked(need("a-comult"), a, tensor_space(a, a), ctx, b->line),
                       resolve_map_checked(need("a-counit"), a, k, ctx, b->line));
    YdLeftObject a_obj{h, a,
                       resolve_map_checked(need("a-act"), tensor_space(hs, a), a, ctx, b->line),
                       resolve_map_checked(need("a-coact"), a, tensor_space(hs, a), ctx, b->line)};

    BasedSpace bb = space_from_expression(need("b-carrier"), b->line);
    AlgebraData b_alg(bb,
                      resolve_map_checked(need("b-mult"), tensor_space(bb, bb), bb, ctx, b->line),
                      resolve_map_checked(need("b-unit"), k, bb, ctx, b->line));
    CoalgebraData b_co(
        bb, resolve_map_checked(need("b-comult"), bb, tensor_space(bb, bb), ctx, b->line),
        resolve_map_checked(need("b-counit"), bb, k, ctx, b->line));
    YdRightObject b_obj{h, bb,
                        resolve_map_checked(need("b-act"), tensor_space(bb, hs), bb, ctx, b->line),
                        resolve_map_checked(need("b-coact"), bb, tensor_space(bb, hs), ctx,
                                            b->line)};

    return DoubleBiproductInput(h, YdLeftBialgebra{a_obj, a_alg, a_co},
                                YdRightBialgebra{b_obj, b_alg, b_co});
}

// ---------------------------------------------------------------------------
// parsing
// ---------------------------------------------------------------------------

inline StructureFile parse_structure_file(const std::string& text) {
    using io_detail::Token;
    StructureFile sf;
    bool have_field = false;

    static const std::vector<std::string> bundle_kinds{"bialgebra", "lr-object", "morphism",
                                                       "candidate", "double-input"};
    static const std::map<std::string, std::vector<std::string>> bundle_keys{
        {"bialgebra", {"carrier", "mult", "unit", "comult", "counit"}},
        {"lr-object",
         {"hopf", "carrier", "act-left", "act-right", "coact-left", "coact-right"}},
        {"morphism", {"from", "to", "map"}},
        {"candidate",
         {"hopf", "carrier", "mult", "unit", "comult", "counit", "act-left", "act-right",
          "coact-left", "coact-right"}},
        {"double-input",
         {"hopf", "a-carrier", "a-mult", "a-unit", "a-comult", "a-counit", "a-act", "a-coact",
          "b-carrier", "b-mult", "b-unit", "b-comult", "b-counit", "b-act", "b-coact"}}};

    enum class Section { none, map, bundle };
    Section section = Section::none;

    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto toks = io_detail::tokenize_line(line);
        if (toks.empty()) continue;
        const std::string& head = toks[0].text;
        const bool is_keyword = head == "field" || head == "space" || head == "map" ||
                                std::count(bundle_kinds.begin(), bundle_kinds.end(), head) > 0;

        if (!have_field) {
            if (head != "field")
                throw ParseError("file must start with a 'field' line", lineno, toks[0].col);
        }

        if (head == "field") {
            if (have_field) throw ParseError("duplicate 'field' line", lineno, toks[0].col);
            if (toks.size() == 2 && toks[1].text == "Q") {
                sf.field = Field::rationals();
            } else if (toks.size() == 3 && toks[1].text == "Fp") {
                char* end = nullptr;
                unsigned long long p = std::strtoull(toks[2].text.c_str(), &end, 10);
                if (*end != '\0' || toks[2].text.empty())
                    throw ParseError("malformed modulus '" + toks[2].text + "'", lineno,
                                     toks[2].col);
                try {
                    sf.field = Field::prime(p);
                } catch (const Error& e) {
                    throw ParseError(e.what(), lineno, toks[2].col);
                }
            } else {
                throw ParseError("expected 'field Q' or 'field Fp <p>'", lineno, toks[0].col);
            }
            have_field = true;
            section = Section::none;
            continue;
        }

        if (head == "space") {
            if (toks.size() < 3)
                throw ParseError("space needs a name and at least one label", lineno, toks[0].col);
            const std::string& name = toks[1].text;
            if (!io_detail::valid_name(name))
                throw ParseError("invalid space name '" + name + "'", lineno, toks[1].col);
            if (sf.find_space(name))
                throw ParseError("duplicate space '" + name + "'", lineno, toks[1].col);
            std::vector<std::string> labels;
            for (std::size_t i = 2; i < toks.size(); ++i) {
                if (!io_detail::valid_name(toks[i].text))
                    throw ParseError("invalid basis label '" + toks[i].text + "'", lineno,
                                     toks[i].col);
                if (std::count(labels.begin(), labels.end(), toks[i].text))
                    throw ParseError("duplicate basis label '" + toks[i].text + "'", lineno,
                                     toks[i].col);
                labels.push_back(toks[i].text);
            }
            sf.spaces.push_back(SpaceFactor{name, std::move(labels)});
            section = Section::none;
            continue;
        }

        if (head == "map") {
            // map <name> : <expr> -> <expr>
            if (toks.size() < 6 || toks[2].text != ":")
                throw ParseError("expected 'map <name> : <domain> -> <codomain>'", lineno,
                                 toks[0].col);
            const std::string& name = toks[1].text;
            if (!io_detail::valid_name(name))
                throw ParseError("invalid map name '" + name + "'", lineno, toks[1].col);
            if (sf.find_map(name))
                throw ParseError("duplicate map '" + name + "'", lineno, toks[1].col);
            std::size_t arrow = 3;
            while (arrow < toks.size() && toks[arrow].text != "->") ++arrow;
            if (arrow == toks.size() || arrow == 3 || arrow + 1 == toks.size())
                throw ParseError("expected '->' between domain and codomain", lineno, toks[0].col);
            auto join = [&](std::size_t from, std::size_t to) {
                std::string out;
                for (std::size_t i = from; i < to; ++i) {
                    if (!out.empty()) out += ' ';
                    out += toks[i].text;
                }
                return out;
            };
            BasedSpace dom = sf.space_from_expression(join(3, arrow), lineno);
            BasedSpace cod = sf.space_from_expression(join(arrow + 1, toks.size()), lineno);
            sf.maps.push_back(StructureFile::MapDecl{name, LinMap(dom, cod, sf.field), lineno});
            section = Section::map;
            continue;
        }

        if (std::count(bundle_kinds.begin(), bundle_kinds.end(), head)) {
            if (toks.size() != 2)
                throw ParseError("expected '" + head + " <name>'", lineno, toks[0].col);
            const std::string& name = toks[1].text;
            if (!io_detail::valid_name(name))
                throw ParseError("invalid bundle name '" + name + "'", lineno, toks[1].col);
            if (sf.find_bundle(head, name))
                throw ParseError("duplicate " + head + " bundle '" + name + "'", lineno,
                                 toks[1].col);
            sf.bundles.push_back(StructureFile::Bundle{head, name, {}, lineno});
            section = Section::bundle;
            continue;
        }

        if (is_keyword) continue;  // unreachable; keywords handled above

        if (section == Section::map) {
            if (toks.size() != 3)
                throw ParseError("map entry needs '<row> <col> <value>'", lineno, toks[0].col);
            StructureFile::MapDecl& m = sf.maps.back();
            auto row = m.map.cod().index_of_label(toks[0].text);
            if (!row)
                throw ParseError("row label '" + toks[0].text + "' not in " +
                                     m.map.cod().expression(),
                                 lineno, toks[0].col);
            auto col = m.map.dom().index_of_label(toks[1].text);
            if (!col)
                throw ParseError("column label '" + toks[1].text + "' not in " +
                                     m.map.dom().expression(),
                                 lineno, toks[1].col);
            if (!m.map.entry(*row, *col).is_zero())
                throw ParseError("duplicate entry (" + toks[0].text + ", " + toks[1].text + ")",
                                 lineno, toks[0].col);
            m.map.set(*row, *col,
                      io_detail::parse_scalar(toks[2].text, sf.field, lineno, toks[2].col));
            continue;
        }

        if (section == Section::bundle) {
            if (toks.size() < 2)
                throw ParseError("bundle line needs '<key> <value>'", lineno, toks[0].col);
            StructureFile::Bundle& b = sf.bundles.back();
            const auto& allowed = bundle_keys.at(b.kind);
            if (!std::count(allowed.begin(), allowed.end(), head))
                throw ParseError("unknown key '" + head + "' in " + b.kind + " bundle", lineno,
                                 toks[0].col);
            if (b.get(head))
                throw ParseError("duplicate key '" + head + "'", lineno, toks[0].col);
            std::string value;
            for (std::size_t i = 1; i < toks.size(); ++i) {
                if (!value.empty()) value += ' ';
                value += toks[i].text;
            }
            b.kv.emplace_back(head, std::move(value));
            continue;
        }

        throw ParseError("unexpected line", lineno, toks[0].col);
    }
    if (!have_field) throw ParseError("empty structure file", 1, 1);
    return sf;
}

inline StructureFile parse_structure_file_at(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open file: " + path, 0, 0);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_structure_file(buf.str());
}

// ---------------------------------------------------------------------------
// serialization (canonical form)
// ---------------------------------------------------------------------------

inline std::string serialize_structure_file(const StructureFile& sf) {
    static const std::map<std::string, std::vector<std::string>> key_order{
        {"bialgebra", {"carrier", "mult", "unit", "comult", "counit"}},
        {"lr-object",
         {"hopf", "carrier", "act-left", "act-right", "coact-left", "coact-right"}},
        {"morphism", {"from", "to", "map"}},
        {"candidate",
         {"hopf", "carrier", "mult", "unit", "comult", "counit", "act-left", "act-right",
          "coact-left", "coact-right"}},
        {"double-input",
         {"hopf", "a-carrier", "a-mult", "a-unit", "a-comult", "a-counit", "a-act", "a-coact",
          "b-carrier", "b-mult", "b-unit", "b-comult", "b-counit", "b-act", "b-coact"}}};
    std::ostringstream out;
    out << "field ";
    if (sf.field.is_rational())
        out << "Q\n";
    else
        out << "Fp " << sf.field.modulus << "\n";
    for (const auto& s : sf.spaces) {
        out << "\nspace " << s.name;
        for (const auto& l : s.labels) out << " " << l;
        out << "\n";
    }
    for (const auto& m : sf.maps) {
        out << "\nmap " << m.name << " : " << m.map.dom().expression() << " -> "
            << m.map.cod().expression() << "\n";
        for (std::size_t col = 0; col < m.map.dom().dim(); ++col)
            for (const auto& [row, v] : m.map.column(col))
                out << "  " << m.map.cod().basis_label(row) << " " << m.map.dom().basis_label(col)
                    << " " << v.to_string() << "\n";
    }
    for (const auto& b : sf.bundles) {
        out << "\n" << b.kind << " " << b.name << "\n";
        for (const auto& key : key_order.at(b.kind))
            if (const std::string* v = b.get(key)) out << "  " << key << " " << *v << "\n";
    }
    return out.str();
}

/// Reduce a file declared over Q entrywise mod p; denominators divisible by p
/// are rejected.
inline StructureFile reduce_mod_p(const StructureFile& sf, std::uint64_t p) {
    if (!sf.field.is_rational()) throw Error("--field reduction requires a file declared over Q");
    StructureFile out = sf;
    out.field = Field::prime(p);
    for (auto& m : out.maps) m.map = map_to_field(m.map, out.field);
    return out;
}

// ---------------------------------------------------------------------------
// programmatic construction (used by --emit and the fixture generator)
// ---------------------------------------------------------------------------

inline void add_atoms(StructureFile& sf, const BasedSpace& space) {
    for (const auto& f : space.factors()) {
        if (const SpaceFactor* existing = sf.find_space(f.name)) {
            if (!(*existing == f))
                throw Error("conflicting declarations for space " + f.name);
        } else {
            sf.spaces.push_back(f);
        }
    }
}

inline void add_map(StructureFile& sf, const std::string& name, const LinMap& map) {
    if (sf.find_map(name)) throw Error("duplicate map name " + name);
    add_atoms(sf, map.dom());
    add_atoms(sf, map.cod());
    sf.maps.push_back(StructureFile::MapDecl{name, map, 0});
}

inline void add_bialgebra_bundle(StructureFile& sf, const std::string& name,
                                 const BialgebraData& b) {
    add_map(sf, name + "_mult", b.mult());
    add_map(sf, name + "_unit", b.unit());
    add_map(sf, name + "_comult", b.comult());
    add_map(sf, name + "_counit", b.counit());
    sf.bundles.push_back(StructureFile::Bundle{"bialgebra",
                                               name,
                                               {{"carrier", b.carrier().expression()},
                                                {"mult", name + "_mult"},
                                                {"unit", name + "_unit"},
                                                {"comult", name + "_comult"},
                                                {"counit", name + "_counit"}},
                                               0});
}

/// Emitted form of a computed bialgebra (biproduct results and the like).
inline StructureFile emit_bialgebra_file(const std::string& bundle_name, const BialgebraData& b) {
    StructureFile sf;
    sf.field = b.field();
    add_bialgebra_bundle(sf, bundle_name, b);
    return sf;
}

struct CandidateBundleOptions {
    bool include_act_left = true;
    bool include_act_right = true;
    bool include_coact_left = true;
    bool include_coact_right = true;
};

inline void add_candidate_bundle(StructureFile& sf, const std::string& name,
                                 const std::string& hopf_bundle, const LRAdmissibleCandidate& c,
                                 const CandidateBundleOptions& opt = {}) {
    if (!sf.find_bundle("bialgebra", hopf_bundle)) add_bialgebra_bundle(sf, hopf_bundle, c.hopf);
    add_map(sf, name + "_mult", c.algebra.mult);
    add_map(sf, name + "_unit", c.algebra.unit);
    add_map(sf, name + "_comult", c.coalgebra.comult);
    add_map(sf, name + "_counit", c.coalgebra.counit);
    StructureFile::Bundle b{"candidate",
                            name,
                            {{"hopf", hopf_bundle},
                             {"carrier", c.carrier().expression()},
                             {"mult", name + "_mult"},
                             {"unit", name + "_unit"},
                             {"comult", name + "_comult"},
                             {"counit", name + "_counit"}},
                            0};
    if (opt.include_act_left) {
        add_map(sf, name + "_act_left", c.actions.left);
        b.kv.emplace_back("act-left", name + "_act_left");
    }
    if (opt.include_act_right) {
        add_map(sf, name + "_act_right", c.actions.right);
        b.kv.emplace_back("act-right", name + "_act_right");
    }
    if (opt.include_coact_left) {
        add_map(sf, name + "_coact_left", c.coactions.left);
        b.kv.emplace_back("coact-left", name + "_coact_left");
    }
    if (opt.include_coact_right) {
        add_map(sf, name + "_coact_right", c.coactions.right);
        b.kv.emplace_back("coact-right", name + "_coact_right");
    }
    sf.bundles.push_back(std::move(b));
}

inline void add_lr_object_bundle(StructureFile& sf, const std::string& name,
                                 const std::string& hopf_bundle, const LRObject& o,
                                 const CandidateBundleOptions& opt = {}) {
    if (!sf.find_bundle("bialgebra", hopf_bundle)) add_bialgebra_bundle(sf, hopf_bundle, o.hopf);
    add_atoms(sf, o.carrier);
    StructureFile::Bundle b{"lr-object",
                            name,
                            {{"hopf", hopf_bundle}, {"carrier", o.carrier.expression()}},
                            0};
    if (opt.include_act_left) {
        add_map(sf, name + "_act_left", o.actions.left);
        b.kv.emplace_back("act-left", name + "_act_left");
    }
    if (opt.include_act_right) {
        add_map(sf, name + "_act_right", o.actions.right);
        b.kv.emplace_back("act-right", name + "_act_right");
    }
    if (opt.include_coact_left) {
        add_map(sf, name + "_coact_left", o.coactions.left);
        b.kv.emplace_back("coact-left", name + "_coact_left");
    }
    if (opt.include_coact_right) {
        add_map(sf, name + "_coact_right", o.coactions.right);
        b.kv.emplace_back("coact-right", name + "_coact_right");
    }
    sf.bundles.push_back(std::move(b));
}

inline void add_morphism_bundle(StructureFile& sf, const std::string& name,
                                const LRMorphism& morphism) {
    add_map(sf, name + "_map", morphism.map);
    sf.bundles.push_back(StructureFile::Bundle{
        "morphism",
        name,
        {{"from", morphism.from}, {"to", morphism.to}, {"map", name + "_map"}},
        0});
}

inline void add_double_input_bundle(StructureFile& sf, const std::string& name,
                                    const std::string& hopf_bundle,
                                    const DoubleBiproductInput& in) {
    if (!sf.find_bundle("bialgebra", hopf_bundle)) add_bialgebra_bundle(sf, hopf_bundle, in.hopf);
    add_map(sf, name + "_a_mult", in.a.algebra.mult);
    add_map(sf, name + "_a_unit", in.a.algebra.unit);
    add_map(sf, name + "_a_comult", in.a.coalgebra.comult);
    add_map(sf, name + "_a_counit", in.a.coalgebra.counit);
    add_map(sf, name + "_a_act", in.a.object.action);
    add_map(sf, name + "_a_coact", in.a.object.coaction);
    add_map(sf, name + "_b_mult", in.b.algebra.mult);
    add_map(sf, name + "_b_unit", in.b.algebra.unit);
    add_map(sf, name + "_b_comult", in.b.coalgebra.comult);
    add_map(sf, name + "_b_counit", in.b.coalgebra.counit);
    add_map(sf, name + "_b_act", in.b.object.action);
    add_map(sf, name + "_b_coact", in.b.object.coaction);
    sf.bundles.push_back(StructureFile::Bundle{"double-input",
                                               name,
                                               {{"hopf", hopf_bundle},
                                                {"a-carrier", in.a.object.carrier.expression()},
                                                {"a-mult", name + "_a_mult"},
                                                {"a-unit", name + "_a_unit"},
                                                {"a-comult", name + "_a_comult"},
                                                {"a-counit", name + "_a_counit"},
                                                {"a-act", name + "_a_act"},
                                                {"a-coact", name + "_a_coact"},
                                                {"b-carrier", in.b.object.carrier.expression()},
                                                {"b-mult", name + "_b_mult"},
                                                {"b-unit", name + "_b_unit"},
                                                {"b-comult", name + "_b_comult"},
                                                {"b-counit", name + "_b_counit"},
                                                {"b-act", name + "_b_act"},
                                                {"b-coact", name + "_b_coact"}},
                                               0});
}

}  // namespace lrsmash
