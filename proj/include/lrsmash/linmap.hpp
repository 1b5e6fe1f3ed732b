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

#include <cstdint>
#include <initializer_list>
#include <map>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "lrsmash/scalar.hpp"
#include "lrsmash/space.hpp"

namespace lrsmash {

/// Linear map between based spaces, as an exact matrix (codomain.dim rows by
/// domain.dim columns). Entries are stored per column, sorted by row, with no
/// explicit zeros; that keeps the big intermediate tensor legs that show up in
/// condition pipelines affordable while structure maps stay tiny.
class LinMap {
   public:
    using Column = std::vector<std::pair<std::uint32_t, Scalar>>;

    LinMap(BasedSpace dom, BasedSpace cod, Field field)
        : dom_(std::move(dom)), cod_(std::move(cod)), field_(field), cols_(dom_.dim()) {}

    static LinMap zero(const BasedSpace& dom, const BasedSpace& cod, const Field& f) {
        return LinMap(dom, cod, f);
    }

    static LinMap identity(const BasedSpace& v, const Field& f) {
        LinMap m(v, v, f);
        for (std::size_t i = 0; i < v.dim(); ++i)
            m.cols_[i].emplace_back(static_cast<std::uint32_t>(i), Scalar::one(f));
        return m;
    }

    const BasedSpace& dom() const { return dom_; }
    const BasedSpace& cod() const { return cod_; }
    const Field& field() const { return field_; }

    /// Set one entry (replacing any previous value). Intended for building a
    /// map; library operations never mutate their inputs.
    void set(std::size_t row, std::size_t col, const Scalar& value) {
        if (row >= cod_.dim() || col >= dom_.dim())
            throw SpaceMismatch("entry (" + std::to_string(row) + "," + std::to_string(col) +
                                ") outside " + shape_string());
        if (value.field() != field_)
            throw FieldMismatch("entry field " + value.field().name() + " in a " + field_.name() +
                                " map");
        Column& c = cols_[col];
        auto it = std::lower_bound(c.begin(), c.end(), row,
                                   [](const auto& e, std::uint32_t r) { return e.first < r; });
        if (it != c.end() && it->first == row) {
            if (value.is_zero())
                c.erase(it);
            else
                it->second = value;
        } else if (!value.is_zero()) {
            c.insert(it, {static_cast<std::uint32_t>(row), value});
        }
    }

    void add_to(std::size_t row, std::size_t col, const Scalar& value) {
        set(row, col, entry(row, col) + value);
    }

    Scalar entry(std::size_t row, std::size_t col) const {
        const Column& c = cols_.at(col);
        auto it = std::lower_bound(c.begin(), c.end(), row,
                                   [](const auto& e, std::uint32_t r) { return e.first < r; });
        if (it != c.end() && it->first == row) return it->second;
        return Scalar::zero(field_);
    }

    const Column& column(std::size_t col) const { return cols_.at(col); }

    bool is_zero() const {
        for (const auto& c : cols_)
            if (!c.empty()) return false;
        return true;
    }

    std::size_t nonzero_count() const {
        std::size_t n = 0;
        for (const auto& c : cols_) n += c.size();
        return n;
    }

    bool operator==(const LinMap& o) const {
        return dom_ == o.dom_ && cod_ == o.cod_ && field_ == o.field_ && cols_ == o.cols_;
    }
    bool operator!=(const LinMap& o) const { return !(*this == o); }

    std::string shape_string() const {
        return cod_.expression() + " <- " + dom_.expression() + " (" + std::to_string(cod_.dim()) +
               "x" + std::to_string(dom_.dim()) + ")";
    }

   private:
    BasedSpace dom_;
    BasedSpace cod_;
    Field field_;
    std::vector<Column> cols_;
};

inline void require_same_field(const LinMap& a, const LinMap& b) {
    if (a.field() != b.field())
        throw FieldMismatch("map fields differ: " + a.field().name() + " vs " + b.field().name());
}

/// f after g. Inner spaces must coincide as based spaces, not just in dimension.
inline LinMap compose(const LinMap& f, const LinMap& g) {
    require_same_field(f, g);
    if (!(g.cod() == f.dom()))
        throw SpaceMismatch("cannot compose: inner codomain " + g.cod().expression() + " (dim " +
                            std::to_string(g.cod().dim()) + ") vs domain " + f.dom().expression() +
                            " (dim " + std::to_string(f.dom().dim()) + ")");
    LinMap r(g.dom(), f.cod(), f.field());
    for (std::size_t k = 0; k < g.dom().dim(); ++k) {
        std::map<std::uint32_t, Scalar> acc;
        for (const auto& [j, a] : g.column(k)) {
            for (const auto& [i, b] : f.column(j)) {
                auto it = acc.find(i);
                if (it == acc.end())
                    acc.emplace(i, b * a);
                else
                    it->second += b * a;
            }
        }
        for (const auto& [i, v] : acc)
            if (!v.is_zero()) r.set(i, k, v);
    }
    return r;
}

inline LinMap compose_all(std::initializer_list<LinMap> maps) {
    // listed outermost first: compose_all({f, g, h}) == f . g . h
    auto it = maps.begin();
    LinMap r = *it++;
    for (; it != maps.end(); ++it) r = compose(r, *it);
    return r;
}

/// Kronecker product, with row/column order induced by the ordered-pair basis
/// convention of BasedSpace (second factor fastest).
inline LinMap tensor(const LinMap& f, const LinMap& g) {
    require_same_field(f, g);
    LinMap r(tensor_space(f.dom(), g.dom()), tensor_space(f.cod(), g.cod()), f.field());
    const std::size_t gdc = g.dom().dim(), gcc = g.cod().dim();
    for (std::size_t kf = 0; kf < f.dom().dim(); ++kf) {
        for (std::size_t kg = 0; kg < gdc; ++kg) {
            for (const auto& [i, a] : f.column(kf))
                for (const auto& [j, b] : g.column(kg))
                    r.set(static_cast<std::size_t>(i) * gcc + j, kf * gdc + kg, a * b);
        }
    }
    return r;
}

template <typename... Rest>
LinMap tensor(const LinMap& a, const LinMap& b, const Rest&... rest) {
    return tensor(tensor(a, b), rest...);
}

namespace detail {

/// Atomic-factor-level permutation; `dest[i]` is the output position of
/// input factor i.
inline LinMap permute_atoms(const BasedSpace& space, const std::vector<std::size_t>& dest,
                            const Field& field) {
    const std::size_t n = space.factor_count();
    if (dest.size() != n)
        throw ArityMismatch("permutation arity " + std::to_string(dest.size()) + " vs " +
                            std::to_string(n) + " factors of " + space.expression());
    std::vector<bool> seen(n, false);
    for (std::size_t d : dest) {
        if (d >= n || seen[d]) throw ArityMismatch("not a permutation of factor positions");
        seen[d] = true;
    }
    std::vector<SpaceFactor> out_factors(n);
    for (std::size_t i = 0; i < n; ++i) out_factors[dest[i]] = space.factors()[i];
    BasedSpace cod = BasedSpace::from_factors(std::move(out_factors));
    LinMap r(space, cod, field);
    std::vector<std::size_t> out_tuple(n);
    for (std::size_t idx = 0; idx < space.dim(); ++idx) {
        auto t = space.split_index(idx);
        for (std::size_t i = 0; i < n; ++i) out_tuple[dest[i]] = t[i];
        r.set(cod.merge_index(out_tuple), idx, Scalar::one(field));
    }
    return r;
}

}  // namespace detail

/// Basis-permuting isomorphism of a tensor product of (possibly composite)
/// spaces. `dest[i]` is the output position of input space i, so
/// permute(sigma) . permute(tau) == permute(sigma o tau).
inline LinMap permute_factors(const std::vector<BasedSpace>& spaces,
                              const std::vector<std::size_t>& dest, const Field& field) {
    const std::size_t n = spaces.size();
    if (dest.size() != n)
        throw ArityMismatch("permutation arity " + std::to_string(dest.size()) + " vs " +
                            std::to_string(n) + " tensor factors");
    std::vector<bool> seen(n, false);
    for (std::size_t d : dest) {
        if (d >= n || seen[d]) throw ArityMismatch("not a permutation of factor positions");
        seen[d] = true;
    }
    BasedSpace whole;
    std::vector<std::size_t> atom_offset(n);
    for (std::size_t i = 0; i < n; ++i) {
        atom_offset[i] = whole.factor_count();
        whole = tensor_space(whole, spaces[i]);
    }
    // output atom offsets, from the permuted block order
    std::vector<std::size_t> block_at(n);
    for (std::size_t i = 0; i < n; ++i) block_at[dest[i]] = i;
    std::vector<std::size_t> out_offset(n);
    std::size_t acc = 0;
    for (std::size_t pos = 0; pos < n; ++pos) {
        out_offset[block_at[pos]] = acc;
        acc += spaces[block_at[pos]].factor_count();
    }
    std::vector<std::size_t> atom_dest(whole.factor_count());
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t a = 0; a < spaces[i].factor_count(); ++a)
            atom_dest[atom_offset[i] + a] = out_offset[i] + a;
    return detail::permute_atoms(whole, atom_dest, field);
}

/// Pull-style variant: output slot j carries input space `src[j]`. Reads
/// naturally when writing structure-map pipelines.
inline LinMap select_blocks(const std::vector<BasedSpace>& spaces,
                            const std::vector<std::size_t>& src, const Field& field) {
    const std::size_t n = spaces.size();
    if (src.size() != n)
        throw ArityMismatch("selection arity " + std::to_string(src.size()) + " vs " +
                            std::to_string(n) + " tensor factors");
    std::vector<std::size_t> dest(n);
    for (std::size_t j = 0; j < n; ++j) {
        if (src[j] >= n) throw ArityMismatch("tensor factor index out of range");
        dest[src[j]] = j;
    }
    return permute_factors(spaces, dest, field);
}

/// The flip V (x) W -> W (x) V.
inline LinMap flip(const BasedSpace& v, const BasedSpace& w, const Field& field) {
    return permute_factors({v, w}, {1, 0}, field);
}

inline LinMap add(const LinMap& f, const LinMap& g) {
    require_same_field(f, g);
    if (!(f.dom() == g.dom()) || !(f.cod() == g.cod()))
        throw SpaceMismatch("cannot add maps " + f.shape_string() + " and " + g.shape_string());
    LinMap r = f;
    for (std::size_t k = 0; k < g.dom().dim(); ++k)
        for (const auto& [i, a] : g.column(k)) r.add_to(i, k, a);
    return r;
}

inline LinMap negate(const LinMap& f) {
    LinMap r(f.dom(), f.cod(), f.field());
    for (std::size_t k = 0; k < f.dom().dim(); ++k)
        for (const auto& [i, a] : f.column(k)) r.set(i, k, -a);
    return r;
}

inline LinMap sub(const LinMap& f, const LinMap& g) { return add(f, negate(g)); }

inline LinMap scale(const Scalar& s, const LinMap& f) {
    LinMap r(f.dom(), f.cod(), f.field());
    for (std::size_t k = 0; k < f.dom().dim(); ++k)
        for (const auto& [i, a] : f.column(k)) r.set(i, k, s * a);
    return r;
}

/// Matrix transpose, with domain and codomain swapped.
inline LinMap transpose(const LinMap& f) {
    LinMap r(f.cod(), f.dom(), f.field());
    for (std::size_t k = 0; k < f.dom().dim(); ++k)
        for (const auto& [i, a] : f.column(k)) r.set(k, i, a);
    return r;
}

/// Reindex a map onto equal-dimensional replacement spaces (a pure basis
/// relabeling; entries are copied verbatim).
inline LinMap relabel(const LinMap& f, const BasedSpace& new_dom, const BasedSpace& new_cod) {
    if (new_dom.dim() != f.dom().dim() || new_cod.dim() != f.cod().dim())
        throw SpaceMismatch("relabel dimension mismatch for " + f.shape_string());
    LinMap r(new_dom, new_cod, f.field());
    for (std::size_t k = 0; k < f.dom().dim(); ++k)
        for (const auto& [i, a] : f.column(k)) r.set(i, k, a);
    return r;
}

/// Reduce a map over Q entrywise mod p.
inline LinMap map_to_field(const LinMap& f, const Field& target) {
    if (f.field() == target) return f;
    LinMap r(f.dom(), f.cod(), target);
    for (std::size_t k = 0; k < f.dom().dim(); ++k)
        for (const auto& [i, a] : f.column(k)) r.set(i, k, a.to_field(target));
    return r;
}

}  // namespace lrsmash
