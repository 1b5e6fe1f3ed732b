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

#include <atomic>
#include <cstdlib>
#include <functional>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "lrsmash/linmap.hpp"

namespace lrsmash {

/// Failure evidence: the first basis tuple (in lexicographic = index order) on
/// which the two sides of an identity differ, and the full residual vector.
struct Witness {
    std::string input;     // e.g. "(x,g)"
    std::string residual;  // e.g. "-2*(x,x)+(1,1)"
    bool operator==(const Witness&) const = default;
};

struct CheckEntry {
    std::string id;
    bool pass = false;
    std::optional<Witness> witness;
};

struct CheckReport {
    std::vector<CheckEntry> entries;

    bool all_pass() const {
        for (const auto& e : entries)
            if (!e.pass) return false;
        return true;
    }

    const CheckEntry* find(const std::string& id) const {
        for (const auto& e : entries)
            if (e.id == id) return &e;
        return nullptr;
    }

    bool passed(const std::string& id) const {
        const CheckEntry* e = find(id);
        return e != nullptr && e->pass;
    }

    std::vector<std::string> failing_ids() const {
        std::vector<std::string> out;
        for (const auto& e : entries)
            if (!e.pass) out.push_back(e.id);
        return out;
    }

    void append(CheckEntry e) { entries.push_back(std::move(e)); }

    void append(CheckReport r, const std::string& prefix = "") {
        for (auto& e : r.entries) {
            if (!prefix.empty()) e.id = prefix + e.id;
            entries.push_back(std::move(e));
        }
    }
};

/// Sparse column rendered as a signed sum of labeled basis vectors.
inline std::string render_terms(const BasedSpace& space, const LinMap::Column& col) {
    if (col.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [row, v] : col) {
        std::string coeff = v.to_string();
        if (first) {
            first = false;
            if (coeff == "1")
                coeff.clear();
            else if (coeff == "-1")
                coeff = "-";
            else
                coeff += "*";
        } else if (!coeff.empty() && coeff[0] == '-') {
            coeff = (coeff == "-1") ? "-" : "-" + coeff.substr(1) + "*";
        } else {
            coeff = (coeff == "1") ? "+" : "+" + coeff + "*";
        }
        out += coeff + "(" + space.basis_label(row) + ")";
    }
    return out;
}

/// Exact equality of two maps with the same shape, reported with a witness on
/// the first failing basis column.
inline CheckEntry check_identity(std::string id, const LinMap& lhs, const LinMap& rhs) {
    if (!(lhs.dom() == rhs.dom()) || !(lhs.cod() == rhs.cod()) || lhs.field() != rhs.field())
        throw InternalError("identity '" + id + "' compares maps of different shape: " +
                            lhs.shape_string() + " vs " + rhs.shape_string());
    for (std::size_t k = 0; k < lhs.dom().dim(); ++k) {
        if (lhs.column(k) == rhs.column(k)) continue;
        LinMap diff = sub(lhs, rhs);
        Witness w;
        w.input = "(" + lhs.dom().basis_label(k) + ")";
        w.residual = render_terms(lhs.cod(), diff.column(k));
        return CheckEntry{std::move(id), false, std::move(w)};
    }
    return CheckEntry{std::move(id), true, std::nullopt};
}

/// Conjunction of identities under one id; the first failure supplies the witness.
inline CheckEntry check_identities(std::string id,
                                   const std::vector<std::pair<LinMap, LinMap>>& sides) {
    for (const auto& [l, r] : sides) {
        CheckEntry e = check_identity(id, l, r);
        if (!e.pass) return e;
    }
    return CheckEntry{std::move(id), true, std::nullopt};
}

using CheckJob = std::function<CheckEntry()>;

/// Number of worker threads for check suites; LRSMASH_THREADS caps it.
inline unsigned check_thread_count() {
    unsigned hw = std::thread::hardware_concurrency();
    unsigned n = hw == 0 ? 1 : (hw > 8 ? 8 : hw);
    if (const char* env = std::getenv("LRSMASH_THREADS")) {
        char* end = nullptr;
        long v = std::strtol(env, &end, 10);
        if (end != env && v >= 1 && v < 1024) n = static_cast<unsigned>(v);
    }
    return n;
}

/// Run independent check jobs, possibly in parallel. Results keep the job
/// order, so reports are deterministic regardless of thread count.
inline CheckReport run_checks(const std::vector<CheckJob>& jobs) {
    CheckReport report;
    report.entries.resize(jobs.size());
    const unsigned threads = jobs.size() < 2 ? 1 : check_thread_count();
    if (threads <= 1) {
        for (std::size_t i = 0; i < jobs.size(); ++i) report.entries[i] = jobs[i]();
        return report;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::exception_ptr> errors(jobs.size());
    auto worker = [&] {
        for (;;) {
            std::size_t i = next.fetch_add(1);
            if (i >= jobs.size()) return;
            try {
                report.entries[i] = jobs[i]();
            } catch (...) {
                errors[i] = std::current_exception();
            }
        }
    };
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
    for (const auto& e : errors)
        if (e) std::rethrow_exception(e);
    return report;
}

}  // namespace lrsmash
