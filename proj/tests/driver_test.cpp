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

#include "doctest.h"

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "sable/driver.hpp"
#include "support.hpp"

namespace sable {
namespace {

namespace fs = std::filesystem;

struct TempDir {
    fs::path root;

    TempDir() {
        root = fs::temp_directory_path() / "sable_driver_test";
        fs::remove_all(root);
        fs::create_directories(root);
    }
    ~TempDir() { fs::remove_all(root); }

    std::string file(const std::string& name, const std::string& text) const {
        const fs::path p = root / name;
        std::ofstream out(p, std::ios::binary);
        out << text;
        return p.string();
    }
};

struct RunResult {
    int code;
    std::string out;
    std::string err;
};

RunResult run(const SolveOptions& opts) {
    std::ostringstream out;
    std::ostringstream err;
    const int code = run_solve(opts, out, err);
    return {code, out.str(), err.str()};
}

TEST_CASE("run_solve reports models with exit code 10") {
    TempDir dir;
    SolveOptions opts;
    opts.path = dir.file("sat.lp", "a :- not b.\n");
    auto r = run(opts);
    CHECK(r.code == kExitModels);
    CHECK(r.out == "ANSWER\na\n");
    CHECK(r.err.empty());
}

TEST_CASE("run_solve reports inconsistency with exit code 20") {
    TempDir dir;
    SolveOptions opts;
    opts.path = dir.file("unsat.lp", "a. :- a.\n");
    auto r = run(opts);
    CHECK(r.code == kExitInconsistent);
    CHECK(r.out == "INCONSISTENT\n");
}

TEST_CASE("run_solve reports an exhausted budget with exit code 0") {
    TempDir dir;
    SolveOptions opts;
    opts.path = dir.file("hard.lp", testing::pigeonhole_text(4));
    opts.search.budget_conflicts = 1;
    auto r = run(opts);
    CHECK(r.code == kExitUnknown);
    CHECK(r.out == "UNKNOWN\n");
}

TEST_CASE("run_solve enumerates when asked for every model") {
    TempDir dir;
    SolveOptions opts;
    opts.path = dir.file("two.lp", "a :- not b. b :- not a.\n");
    opts.search.max_models = 0;
    auto r = run(opts);
    CHECK(r.code == kExitModels);
    // Default polarity decides a false first, so b's model comes first.
    CHECK(r.out == "ANSWER\nb\nANSWER\na\n");
}

TEST_CASE("run_solve reports unreadable input") {
    TempDir dir;
    SolveOptions opts;
    opts.path = (dir.root / "missing.lp").string();
    auto r = run(opts);
    CHECK(r.code == kExitError);
    CHECK(r.out.empty());
    CHECK(r.err == "error: cannot read " + opts.path + "\n");
}

TEST_CASE("run_solve reports parse errors with file and line") {
    TempDir dir;
    SolveOptions opts;
    opts.path = dir.file("bad.lp", "a.\nb :- 3c.\n");
    auto r = run(opts);
    CHECK(r.code == kExitError);
    CHECK(r.out.empty());
    CHECK(r.err.substr(0, opts.path.size() + 3) == opts.path + ":2:");
}

TEST_CASE("run_solve appends statistics on request") {
    TempDir dir;
    SolveOptions opts;
    opts.path = dir.file("sat.lp", "a.\n");
    opts.show_stats = true;
    auto r = run(opts);
    CHECK(r.code == kExitModels);
    CHECK(r.out.find("ANSWER\na\n") == 0);
    for (const char* key : {"conflicts: ", "decisions: ", "restarts: ", "learned_clauses: ",
                            "deleted_clauses: ", "propagations: ", "unfounded_sets: ",
                            "loop_clauses: ", "solve_time: "}) {
        CHECK(r.out.find(key) != std::string::npos);
    }
}

TEST_CASE("render_statistics has one line per counter") {
    Statistics stats;
    stats.conflicts = 3;
    stats.decisions = 14;
    stats.restarts = 1;
    stats.learned_clauses = 5;
    stats.deleted_clauses = 9;
    stats.propagations = 26;
    stats.unfounded_sets = 5;
    stats.loop_clauses = 3;
    stats.solve_time = 0.5;
    CHECK(render_statistics(stats) == "conflicts: 3\n"
                                      "decisions: 14\n"
                                      "restarts: 1\n"
                                      "learned_clauses: 5\n"
                                      "deleted_clauses: 9\n"
                                      "propagations: 26\n"
                                      "unfounded_sets: 5\n"
                                      "loop_clauses: 3\n"
                                      "solve_time: 0.500\n");
}

TEST_CASE("render_bench_csv rows, footer, and quoting") {
    std::vector<BenchRecord> records;
    records.push_back({"easy.lp", "SAT", 0.25, 3, 7, 1});
    records.push_back({"hard,one.lp", "TIMEOUT", 600.0, 9999, 12000, 14});
    records.push_back({"un\"sat.lp", "UNSAT", 0.75, 42, 80, 2});
    records.push_back({"garbled.lp", "ERROR", 0.0, 0, 0, 0});
    CHECK(render_bench_csv(records) ==
          "instance,verdict,time_s,conflicts,decisions,restarts\n"
          "easy.lp,SAT,0.250,3,7,1\n"
          "\"hard,one.lp\",TIMEOUT,600.000,9999,12000,14\n"
          "\"un\"\"sat.lp\",UNSAT,0.750,42,80,2\n"
          "garbled.lp,ERROR,0.000,0,0,0\n"
          "TOTAL,2,0.500,,,\n"); // mean over the two solved rows only
}

TEST_CASE("render_bench_csv with nothing solved leaves the mean blank") {
    std::vector<BenchRecord> records;
    records.push_back({"a.lp", "TIMEOUT", 600.0, 1, 1, 0});
    CHECK(render_bench_csv(records) ==
          "instance,verdict,time_s,conflicts,decisions,restarts\n"
          "a.lp,TIMEOUT,600.000,1,1,0\n"
          "TOTAL,0,,,,\n");
}

TEST_CASE("run_bench walks a directory in order") {
    TempDir dir;
    dir.file("01_sat.lp", "a :- not b.\n");
    dir.file("02_unsat.lp", "a. :- a.\n");
    dir.file("03_bad.lp", "][\n");

    BenchOptions opts;
    opts.directory = dir.root.string();
    std::ostringstream out;
    std::ostringstream err;
    CHECK(run_bench(opts, out, err) == 0);

    std::vector<std::string> lines;
    std::istringstream in(out.str());
    for (std::string line; std::getline(in, line);) lines.push_back(line);
    REQUIRE(lines.size() == 5);
    CHECK(lines[0] == "instance,verdict,time_s,conflicts,decisions,restarts");
    CHECK(lines[1].find("01_sat.lp,SAT,") != std::string::npos);
    CHECK(lines[2].find("02_unsat.lp,UNSAT,") != std::string::npos);
    CHECK(lines[3].find("03_bad.lp,ERROR,") != std::string::npos);
    CHECK(lines[4].substr(0, 8) == "TOTAL,2,");
}

TEST_CASE("run_bench reports a missing directory") {
    BenchOptions opts;
    opts.directory = (fs::temp_directory_path() / "sable_no_such_dir").string();
    std::ostringstream out;
    std::ostringstream err;
    CHECK(run_bench(opts, out, err) == kExitError);
    CHECK(err.str().find("error: cannot read directory") == 0);
}

} // namespace
} // namespace sable
