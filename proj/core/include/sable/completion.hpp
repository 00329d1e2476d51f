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

#ifndef SABLE_COMPLETION_HPP
#define SABLE_COMPLETION_HPP

#include <cstddef>
#include <vector>

#include "sable/clause.hpp"
#include "sable/program.hpp"

namespace sable {

/// Rules and their auxiliary atoms map one-to-one; rule i owns atom
/// aux_base + i, directly above the original atom range.
class AuxMap {
  public:
    AuxMap() = default;
    AuxMap(AtomId aux_base, std::size_t rule_count) : aux_base_(aux_base), rule_count_(rule_count) {}

    AtomId aux_base() const { return aux_base_; }
    std::size_t rule_count() const { return rule_count_; }

    AtomId aux_of(std::size_t rule_index) const {
        return aux_base_ + static_cast<AtomId>(rule_index);
    }

    bool is_aux(AtomId atom) const {
        return atom >= aux_base_ && atom < aux_base_ + rule_count_;
    }

    std::size_t rule_of(AtomId aux) const { return aux - aux_base_; }

  private:
    AtomId aux_base_ = 0;
    std::size_t rule_count_ = 0;
};

struct CompletionResult {
    ClauseSet clauses;
    AuxMap aux;
    AtomId original_atom_count = 0;

    AtomId total_atom_count() const {
        return original_atom_count + static_cast<AtomId>(aux.rule_count());
    }
};

/// Clark's completion with one fresh auxiliary atom per rule. Emits, per
/// atom a of the table, the support clause {naf a, aux_r1, ..., aux_rn}
/// over a's defining rules (a unit {naf a} when there are none; skipped
/// for an undefined falsity atom, which the solver pre-assigns false),
/// and per rule r the clauses {H(r), naf aux_r}, {aux_r} ∪ B̄(r), and
/// {naf aux_r, ℓ} for each body literal ℓ.
CompletionResult complete(const Program& p);

} // namespace sable

#endif
