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

#ifndef SABLE_ORACLE_HPP
#define SABLE_ORACLE_HPP

#include <cstdint>
#include <vector>

#include "sable/outcome.hpp"
#include "sable/program.hpp"

namespace sable {

/// Brute-force reference semantics. Exponential by design; guarded by
/// kOracleAtomGuard. Used to cross-check the solver, never to replace it.

inline constexpr std::uint32_t kOracleAtomGuard = 20;

/// True iff m is an answer set of p: m must be the least model of the
/// definite part of the reduct p^m and must satisfy the reduct's
/// constraints. m holds original atom ids only, sorted, without 0.
bool is_answer_set(const Program& p, const Model& m);

/// All answer sets of p, each sorted by atom id, the list sorted
/// lexicographically. Throws std::invalid_argument when p has more than
/// `guard` atoms.
std::vector<Model> enumerate_answer_sets(const Program& p,
                                         std::uint32_t guard = kOracleAtomGuard);

struct GeneratorParams {
    std::uint32_t atom_count = 6;
    std::uint32_t rule_count = 10;
    std::uint32_t max_body = 3;
    double neg_probability = 0.4;
    double cycle_bias = 0.3;
    double constraint_probability = 0.1;
    std::uint64_t seed = 1;

    bool valid() const {
        const auto prob = [](double p) { return p >= 0.0 && p <= 1.0; };
        return atom_count > 0 && rule_count > 0 && max_body > 0 &&
               prob(neg_probability) && prob(cycle_bias) && prob(constraint_probability);
    }
};

/// Random ground program, deterministic in params.seed. All atom_count
/// atoms are interned even when no rule mentions them.
Program random_program(const GeneratorParams& params);

} // namespace sable

#endif
