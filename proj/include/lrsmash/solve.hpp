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
#include <vector>

#include "lrsmash/scalar.hpp"

namespace lrsmash {

/// Exact Gauss-Jordan solve of A x = b (A is rows x cols, row-major). Returns
/// a particular solution with free variables set to zero, or nullopt when the
/// system is inconsistent.
inline std::optional<std::vector<Scalar>> solve_linear(std::size_t rows, std::size_t cols,
                                                       std::vector<Scalar> a,
                                                       std::vector<Scalar> b, const Field& field) {
    auto at = [&](std::size_t r, std::size_t c) -> Scalar& { return a[r * cols + c]; };
    std::vector<std::size_t> pivot_col_of_row;
    std::size_t rank = 0;
    for (std::size_t c = 0; c < cols && rank < rows; ++c) {
        std::size_t p = rank;
        while (p < rows && at(p, c).is_zero()) ++p;
        if (p == rows) continue;
        if (p != rank) {
            for (std::size_t j = c; j < cols; ++j) std::swap(at(p, j), at(rank, j));
            std::swap(b[p], b[rank]);
        }
        const Scalar inv = at(rank, c).inverse();
        for (std::size_t j = c; j < cols; ++j) at(rank, j) *= inv;
        b[rank] *= inv;
        for (std::size_t r = 0; r < rows; ++r) {
            if (r == rank || at(r, c).is_zero()) continue;
            const Scalar f = at(r, c);
            for (std::size_t j = c; j < cols; ++j) at(r, j) -= f * at(rank, j);
            b[r] -= f * b[rank];
        }
        pivot_col_of_row.push_back(c);
        ++rank;
    }
    for (std::size_t r = rank; r < rows; ++r)
        if (!b[r].is_zero()) return std::nullopt;
    std::vector<Scalar> x(cols, Scalar::zero(field));
    for (std::size_t r = 0; r < rank; ++r) x[pivot_col_of_row[r]] = b[r];
    return x;
}

}  // namespace lrsmash
