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

#ifndef SABLE_OUTCOME_HPP
#define SABLE_OUTCOME_HPP

#include <cstdint>
#include <vector>

#include "sable/literal.hpp"

namespace sable {

/// An answer set projected to original atoms: sorted true atom ids.
using Model = std::vector<AtomId>;

enum class Verdict : std::uint8_t {
    ModelsFound,
    Inconsistent,
    BudgetExhausted,
};

struct Statistics {
    std::uint64_t conflicts = 0;
    std::uint64_t decisions = 0;
    std::uint64_t restarts = 0;
    std::uint64_t learned_clauses = 0;
    std::uint64_t deleted_clauses = 0;
    std::uint64_t propagations = 0;
    std::uint64_t unfounded_sets = 0;
    std::uint64_t loop_clauses = 0;
    double solve_time = 0.0;
};

struct SolveOutcome {
    Verdict verdict = Verdict::BudgetExhausted;
    std::vector<Model> models;
    Statistics stats;
};

} // namespace sable

#endif
