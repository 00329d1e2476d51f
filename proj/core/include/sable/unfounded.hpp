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

#ifndef SABLE_UNFOUNDED_HPP
#define SABLE_UNFOUNDED_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "sable/completion.hpp"
#include "sable/depgraph.hpp"
#include "sable/program.hpp"
#include "sable/propagation.hpp"

namespace sable {

/// Well-founded propagation over the cyclic SCCs. Each atom of a cyclic
/// component holds a source pointer to a rule currently proving external
/// support; the residue of a failed re-sourcing pass is an unfounded set
/// whose members get loop-formula falsity clauses, one per call.
class UnfoundedDetector {
  public:
    UnfoundedDetector(const Program& p, const DepGraph& g, const AuxMap& aux);

    /// One step at unit-propagation fixpoint: pops a pending atom's
    /// falsity clause, or rebuilds sources and detects a fresh unfounded
    /// set. Nothing means every non-false cyclic atom is sourced.
    std::optional<std::vector<Literal>> well_founded_step(const Trail& trail);

    /// Lazy invalidation on backjump: clamps the trail cursor and drops
    /// the pending queue. Sources survive; their premises only weakened.
    void on_backjump(const Trail& trail);

    std::uint64_t sets_found() const { return sets_found_; }

    bool source_of(AtomId atom, std::size_t& rule_index) const {
        if (!has_source_[atom]) return false;
        rule_index = source_of_[atom];
        return true;
    }

#ifdef SABLE_EXPENSIVE_CHECKS
    bool check_source_acyclicity() const;
#endif

  private:
    static constexpr std::uint32_t kNoRule = 0xFFFFFFFFu;

    bool body_falsified(std::size_t rule, const Trail& trail) const;
    void scan_trail(const Trail& trail);
    void invalidate_source(AtomId atom);
    void resource(const Trail& trail);
    std::vector<Literal> clause_for(AtomId atom) const;

    const Program& program_;
    const DepGraph& graph_;
    const AuxMap& aux_;

    std::vector<bool> tracked_atom_;                   // original atom in a cyclic SCC
    std::vector<std::vector<std::uint32_t>> defining_; // per atom: tracked rules with this head
    std::vector<std::vector<std::uint32_t>> dependents_; // per atom: tracked rules with it internal
    std::vector<std::vector<std::uint32_t>> pos_occ_;  // per atom: tracked rules with it in B⁺
    std::vector<std::vector<std::uint32_t>> neg_occ_;  // per atom: tracked rules with it in B⁻
    std::vector<std::vector<AtomId>> internal_;        // per rule: B⁺ atoms in the head's SCC
    std::vector<std::uint32_t> missing_;               // per rule: unsourced internal atoms
    std::vector<std::uint32_t> source_of_;             // per atom: sourcing rule
    std::vector<bool> has_source_;

    std::vector<AtomId> pending_atoms_; // current X, ascending; consumed front-first
    std::size_t pending_next_ = 0;
    std::vector<Literal> pending_external_; // aux literals shared by X's clauses

    static constexpr std::uint32_t kNoTrailSize = 0xFFFFFFFFu;
    std::vector<AtomId> last_emitted_x_;
    std::uint32_t last_emitted_trail_size_ = kNoTrailSize;

    std::uint32_t cursor_ = 0;
    std::uint64_t sets_found_ = 0;
};

/// Direct definition check, for tests: every rule with head in X is
/// neutralized by a false body literal (i) or by positive dependence on
/// X (ii).
bool is_unfounded(const std::vector<AtomId>& x, const Trail& trail, const Program& p);

} // namespace sable

#endif
