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

#include "sable/driver.hpp"

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <ostream>
#include <sstream>

#include "sable/pipeline.hpp"
#include "sable/textio.hpp"

namespace sable {

namespace {

std::optional<std::string> read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) return std::nullopt;
    std::ostringstream buffer;
    buffer << in.rdbuf();
    if (in.bad()) return std::nullopt;
    return std::move(buffer).str();
}

std::string format_seconds(double s) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.3f", s);
    return buf;
}

std::string csv_field(const std::string& raw) {
    if (raw.find_first_of(",\"\r\n") == std::string::npos) return raw;
    std::string quoted = "\"";
    for (const char c : raw) {
        if (c == '"') quoted += '"';
        quoted += c;
    }
    quoted += '"';
    return quoted;
}

SolveOutcome solve_text(const std::string& text, const BenchOptions& opts) {
    Program program = parse_program(text);
    SearchConfig search = opts.search;
    search.max_models = 1;
    search.budget_seconds = opts.timeout_seconds;
    const CompiledProblem cp =
        compile(std::move(program), opts.simplify_config, opts.simplify, false);
    return Solver(cp, search).solve();
}

} // namespace

std::string render_statistics(const Statistics& stats) {
    std::string out;
    const auto line = [&out](const char* key, std::uint64_t value) {
        out += key;
        out += ": ";
        out += std::to_string(value);
        out += '\n';
    };
    line("conflicts", stats.conflicts);
    line("decisions", stats.decisions);
    line("restarts", stats.restarts);
    line("learned_clauses", stats.learned_clauses);
    line("deleted_clauses", stats.deleted_clauses);
    line("propagations", stats.propagations);
    line("unfounded_sets", stats.unfounded_sets);
    line("loop_clauses", stats.loop_clauses);
    out += "solve_time: ";
    out += format_seconds(stats.solve_time);
    out += '\n';
    return out;
}

int run_solve(const SolveOptions& opts, std::ostream& out, std::ostream& err) {
    const std::optional<std::string> text = read_file(opts.path);
    if (!text) {
        err << "error: cannot read " << opts.path << "\n";
        return kExitError;
    }

    Program program;
    try {
        program = parse_program(*text);
    } catch (const ParseError& e) {
        err << opts.path << ":" << e.diagnostic().line << ": " << e.diagnostic().message << "\n";
        return kExitError;
    }

    const CompiledProblem cp =
        compile(std::move(program), opts.simplify_config, opts.simplify,
                opts.search.max_models != 1);
    const SolveOutcome outcome = Solver(cp, opts.search).solve();

    out << render_outcome(outcome, cp.program.atoms);
    if (opts.show_stats) out << render_statistics(outcome.stats);
    out.flush();

    switch (outcome.verdict) {
    case Verdict::ModelsFound:
        return kExitModels;
    case Verdict::Inconsistent:
        return kExitInconsistent;
    case Verdict::BudgetExhausted:
        return kExitUnknown;
    }
    return kExitError;
}

std::string render_bench_csv(const std::vector<BenchRecord>& records) {
    std::string out = "instance,verdict,time_s,conflicts,decisions,restarts\n";
    std::uint64_t solved = 0;
    double solved_time = 0.0;
    for (const BenchRecord& r : records) {
        out += csv_field(r.instance);
        out += ',';
        out += r.verdict;
        out += ',';
        out += format_seconds(r.time_s);
        out += ',';
        out += std::to_string(r.conflicts);
        out += ',';
        out += std::to_string(r.decisions);
        out += ',';
        out += std::to_string(r.restarts);
        out += '\n';
        if (r.verdict == "SAT" || r.verdict == "UNSAT") {
            ++solved;
            solved_time += r.time_s;
        }
    }
    out += "TOTAL,";
    out += std::to_string(solved);
    out += ',';
    if (solved > 0) out += format_seconds(solved_time / static_cast<double>(solved));
    out += ",,,\n";
    return out;
}

int run_bench(const BenchOptions& opts, std::ostream& out, std::ostream& err) {
    namespace fs = std::filesystem;
    std::vector<std::string> paths;
    std::error_code ec;
    for (const fs::directory_entry& entry : fs::directory_iterator(opts.directory, ec)) {
        if (entry.is_regular_file()) paths.push_back(entry.path().string());
    }
    if (ec) {
        err << "error: cannot read directory " << opts.directory << ": " << ec.message() << "\n";
        return kExitError;
    }
    std::sort(paths.begin(), paths.end());

    std::vector<BenchRecord> records;
    records.reserve(paths.size());
    for (const std::string& path : paths) {
        BenchRecord record;
        record.instance = path;
        const std::optional<std::string> text = read_file(path);
        if (!text) {
            record.verdict = "ERROR";
            records.push_back(std::move(record));
            continue;
        }
        try {
            const SolveOutcome outcome = solve_text(*text, opts);
            record.conflicts = outcome.stats.conflicts;
            record.decisions = outcome.stats.decisions;
            record.restarts = outcome.stats.restarts;
            switch (outcome.verdict) {
            case Verdict::ModelsFound:
                record.verdict = "SAT";
                record.time_s = outcome.stats.solve_time;
                break;
            case Verdict::Inconsistent:
                record.verdict = "UNSAT";
                record.time_s = outcome.stats.solve_time;
                break;
            case Verdict::BudgetExhausted:
                record.verdict = "TIMEOUT";
                record.time_s = opts.timeout_seconds;
                break;
            }
        } catch (const ParseError&) {
            record.verdict = "ERROR";
        }
        records.push_back(std::move(record));
    }

    out << render_bench_csv(records);
    out.flush();
    return 0;
}

} // namespace sable
