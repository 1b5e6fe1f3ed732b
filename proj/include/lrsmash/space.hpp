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

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "lrsmash/errors.hpp"

namespace lrsmash {

/// One named atomic space with an ordered basis of distinct labels.
struct SpaceFactor {
    std::string name;
    std::vector<std::string> labels;

    std::size_t dim() const { return labels.size(); }
    bool operator==(const SpaceFactor&) const = default;
};

/// A finite-dimensional space with a named basis, kept as a flat ordered list
/// of atomic factors. The ground field k is the empty factor list, which makes
/// the monoidal structure strict on the nose: V (x) k == V as spaces, and
/// (U (x) V) (x) W == U (x) (V (x) W).
///
/// Basis indexing is mixed-radix with the last factor fastest, matching the
/// usual Kronecker-product convention.
class BasedSpace {
   public:
    BasedSpace() = default;  // k

    static BasedSpace scalar() { return BasedSpace(); }

    static BasedSpace atom(std::string name, std::vector<std::string> labels) {
        if (labels.empty()) throw Error("space " + name + " must have dimension >= 1");
        for (std::size_t i = 0; i < labels.size(); ++i)
            for (std::size_t j = i + 1; j < labels.size(); ++j)
                if (labels[i] == labels[j])
                    throw Error("space " + name + " has duplicate basis label " + labels[i]);
        BasedSpace s;
        s.factors_.push_back(SpaceFactor{std::move(name), std::move(labels)});
        return s;
    }

    static BasedSpace from_factors(std::vector<SpaceFactor> factors) {
        BasedSpace s;
        s.factors_ = std::move(factors);
        return s;
    }

    const std::vector<SpaceFactor>& factors() const { return factors_; }
    std::size_t factor_count() const { return factors_.size(); }
    bool is_scalar() const { return factors_.empty(); }

    std::size_t dim() const {
        std::size_t d = 1;
        for (const auto& f : factors_) d *= f.dim();
        return d;
    }

    bool operator==(const BasedSpace&) const = default;

    /// Split a flat basis index into one index per factor.
    std::vector<std::size_t> split_index(std::size_t idx) const {
        std::vector<std::size_t> t(factors_.size());
        for (std::size_t i = factors_.size(); i-- > 0;) {
            t[i] = idx % factors_[i].dim();
            idx /= factors_[i].dim();
        }
        return t;
    }

    std::size_t merge_index(const std::vector<std::size_t>& t) const {
        std::size_t idx = 0;
        for (std::size_t i = 0; i < factors_.size(); ++i) idx = idx * factors_[i].dim() + t[i];
        return idx;
    }

    /// Composite label of a basis vector, e.g. "x,g"; "()" for the empty tuple.
    std::string basis_label(std::size_t idx) const {
        if (is_scalar()) return "()";
        auto t = split_index(idx);
        std::string out;
        for (std::size_t i = 0; i < t.size(); ++i) {
            if (i) out += ',';
            out += factors_[i].labels[t[i]];
        }
        return out;
    }

    /// Inverse of basis_label. Returns nullopt if the tuple does not resolve.
    std::optional<std::size_t> index_of_label(const std::string& label) const {
        if (is_scalar()) return label == "()" ? std::optional<std::size_t>(0) : std::nullopt;
        std::vector<std::string> parts;
        std::string cur;
        for (char c : label) {
            if (c == ',') {
                parts.push_back(cur);
                cur.clear();
            } else {
                cur += c;
            }
        }
        parts.push_back(cur);
        if (parts.size() != factors_.size()) return std::nullopt;
        std::vector<std::size_t> t(parts.size());
        for (std::size_t i = 0; i < parts.size(); ++i) {
            const auto& ls = factors_[i].labels;
            auto it = std::find(ls.begin(), ls.end(), parts[i]);
            if (it == ls.end()) return std::nullopt;
            t[i] = static_cast<std::size_t>(it - ls.begin());
        }
        return merge_index(t);
    }

    /// Tensor-expression rendering: "D * H", or "k" for the scalar space.
    std::string expression() const {
        if (is_scalar()) return "k";
        std::string out;
        for (std::size_t i = 0; i < factors_.size(); ++i) {
            if (i) out += " * ";
            out += factors_[i].name;
        }
        return out;
    }

   private:
    std::vector<SpaceFactor> factors_;
};

inline BasedSpace tensor_space(const BasedSpace& a, const BasedSpace& b) {
    std::vector<SpaceFactor> fs = a.factors();
    fs.insert(fs.end(), b.factors().begin(), b.factors().end());
    return BasedSpace::from_factors(std::move(fs));
}

template <typename... Rest>
BasedSpace tensor_space(const BasedSpace& a, const BasedSpace& b, const Rest&... rest) {
    return tensor_space(tensor_space(a, b), rest...);
}

}  // namespace lrsmash
