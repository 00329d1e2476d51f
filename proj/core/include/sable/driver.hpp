/*
 *  Copyright 2026 The sable authors
 *
 *  Licensed under the Apache License, Version 2.0 (the "License");
 *  you may not use this file except in compliance with the License.
 *  You may obtain a copy of the License at
 *
 *    http://www.apache.org/licenses/LICENSE-2.0
 *
 *  Unless required by applicable law or agreed to in writing, software
 *  distributed under the License is distributed on an "AS IS" BASIS,
 *  WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 *  See the License for the specific language governing permissions and
 *  limitations under the License.
 */

#ifndef SABLE_DRIVER_HPP
#define SABLE_DRIVER_HPP

#include <iosfwd>
#include <string>
#include <vector>

#include "sable/search.hpp"
#include "sable/simplify.hpp"

namespace sable {

inline constexpr int kExitModels = 10;
inline constexpr int kExitInconsistent = 20;
inline constexpr int kExitUnknown = 0;
inline constexpr int kExitError = 1;

struct SolveOptions {
    std::string path;
    bool show_stats = false;
    bool simplify = true;
    SimplifyConfig simplify_config;
    SearchConfig search;
};

/// Full single-instance pipeline: parse, compile, solve, print the
/// answer protocol (plus statistics when asked). Returns the process
/// exit code; diagnostics go to err.
int run_solve(const SolveOptions& opts, std::ostream& out, std::ostream& err);

struct BenchOptions {
    std::string directory;
    double timeout_seconds = 600.0;
    bool simplify = true;
    SimplifyConfig simplify_config;
    SearchConfig search;
};

struct BenchRecord {
    std::string instance;
    std::string verdict; // SAT | UNSAT | TIMEOUT | ERROR
    double time_s = 0.0;
    std::uint64_t conflicts = 0;
    std::uint64_t decisions = 0;
    std::uint64_t restarts = 0;
};

/// Solves every regular file in the directory (lexicographic order) with
/// a per-instance wall budget and prints a CSV: one row per record, then
/// a footer with the solved count and mean time over solved rows.
int run_bench(const BenchOptions& opts, std::ostream& out, std::ostream& err);

std::string render_statistics(const Statistics& stats);

std::string render_bench_csv(const std::vector<BenchRecord>& records);

} // namespace sable

#endif
