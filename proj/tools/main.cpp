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

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "sable/driver.hpp"
#include "sable/oracle.hpp"
#include "sable/textio.hpp"

namespace {

void add_solver_flags(CLI::App* cmd, sable::SearchConfig& search,
                      sable::SimplifyConfig& simplify_config, bool& simplify) {
    cmd->add_option("--seed", search.seed, "Heuristic seed (recorded in outputs)");
    cmd->add_flag("--no-simplify", [&simplify](std::int64_t) { simplify = false; },
                  "Skip clause-set simplification");
    cmd->add_option("--elim-occ", simplify_config.max_elim_occurrences,
                    "Max occurrences of an atom eligible for elimination");
    cmd->add_option("--elim-growth", simplify_config.max_clause_growth,
                    "Net clause growth allowed per elimination");
    cmd->add_option("--luby-base", search.luby_base, "Restart interval unit in conflicts")
        ->check(CLI::PositiveNumber);
    cmd->add_flag("--no-restarts", [&search](std::int64_t) { search.restarts_enabled = false; },
                  "Disable restarts");
    cmd->add_flag("--no-phase-saving",
                  [&search](std::int64_t) { search.phase_saving = false; },
                  "Always decide with the default polarity");
    cmd->add_option("--var-decay", search.var_decay, "Activity decay factor")
        ->check(CLI::Range(0.001, 1.0));
}

int run_oracle(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        std::cerr << "error: cannot read " << path << "\n";
        return sable::kExitError;
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();

    sable::Program program;
    try {
        program = sable::parse_program(buffer.str());
    } catch (const sable::ParseError& e) {
        std::cerr << path << ":" << e.diagnostic().line << ": " << e.diagnostic().message << "\n";
        return sable::kExitError;
    }

    std::vector<sable::Model> models;
    try {
        models = sable::enumerate_answer_sets(program);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return sable::kExitError;
    }

    if (models.empty()) {
        std::cout << "INCONSISTENT\n";
        return sable::kExitInconsistent;
    }
    for (const sable::Model& m : models) std::cout << sable::render_model(m, program.atoms);
    return sable::kExitModels;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"sable: answer-set solver for ground normal logic programs"};
    app.require_subcommand(1);

    sable::SolveOptions solve_opts;
    CLI::App* solve = app.add_subcommand("solve", "Solve one instance");
    solve->add_option("file", solve_opts.path, "Instance in the ground rule format")->required();
    solve->add_option("-n,--models", solve_opts.search.max_models,
                      "Number of answer sets to report (0 = all)");
    solve->add_flag("--stats", solve_opts.show_stats, "Print search statistics");
    add_solver_flags(solve, solve_opts.search, solve_opts.simplify_config, solve_opts.simplify);

    sable::BenchOptions bench_opts;
    CLI::App* bench = app.add_subcommand("bench", "Solve a directory of instances, emit CSV");
    bench->add_option("dir", bench_opts.directory, "Directory of instance files")->required();
    bench->add_option("--timeout", bench_opts.timeout_seconds,
                      "Per-instance wall budget in seconds")
        ->check(CLI::PositiveNumber);
    add_solver_flags(bench, bench_opts.search, bench_opts.simplify_config, bench_opts.simplify);

    std::string oracle_path;
    CLI::App* oracle = app.add_subcommand("oracle", "Enumerate answer sets by brute force");
    oracle->add_option("file", oracle_path, "Instance in the ground rule format")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    }

    if (solve->parsed()) return sable::run_solve(solve_opts, std::cout, std::cerr);
    if (bench->parsed()) return sable::run_bench(bench_opts, std::cout, std::cerr);
    return run_oracle(oracle_path);
}
