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

#include "sable/unfounded.hpp"

#include <algorithm>
#include <deque>

namespace sable {

UnfoundedDetector::UnfoundedDetector(const Program& p, const DepGraph& g, const AuxMap& aux)
    : program_(p), graph_(g), aux_(aux) {
    const std::size_t n = p.atoms.size();
    tracked_atom_.assign(n, false);
    for (AtomId a = 0; a < n; ++a) tracked_atom_[a] = g.atom_in_cycle(a);

    defining_.resize(n);
    dependents_.resize(n);
    pos_occ_.resize(n);
    neg_occ_.resize(n);
    internal_.resize(p.rules.size());
    missing_.assign(p.rules.size(), 0);
    source_of_.assign(n, kNoRule);
    has_source_.assign(n, false);

    for (std::uint32_t r = 0; r < p.rules.size(); ++r) {
        const Rule& rule = p.rules[r];
        if (rule.is_constraint() || !tracked_atom_[rule.head]) continue;
        defining_[rule.head].push_back(r);
        for (const AtomId b : rule.pos_body) {
            pos_occ_[b].push_back(r);
            if (g.same_scc(b, rule.head)) {
                internal_[r].push_back(b);
                dependents_[b].push_back(r);
            }
        }
        for (const AtomId c : rule.neg_body) neg_occ_[c].push_back(r);
        missing_[r] = static_cast<std::uint32_t>(internal_[r].size());
    }
}

bool UnfoundedDetector::body_falsified(std::size_t rule, const Trail& trail) const {
    const Rule& r = program_.rules[rule];
    for (const AtomId b : r.pos_body) {
        if (trail.value(b) == Truth::False) return true;
    }
    for (const AtomId c : r.neg_body) {
        if (trail.value(c) == Truth::True) return true;
    }
    return false;
}

void UnfoundedDetector::invalidate_source(AtomId atom) {
    std::deque<AtomId> work{atom};
    while (!work.empty()) {
        const AtomId a = work.front();
        work.pop_front();
        if (!has_source_[a]) continue;
        has_source_[a] = false;
        source_of_[a] = kNoRule;
        for (const std::uint32_t w : dependents_[a]) {
            ++missing_[w];
            const AtomId head = program_.rules[w].head;
            if (has_source_[head] && source_of_[head] == w) work.push_back(head);
        }
    }
}

void UnfoundedDetector::scan_trail(const Trail& trail) {
    const std::size_t original_atoms = tracked_atom_.size();
    for (; cursor_ < trail.size(); ++cursor_) {
        const Literal l = trail.at(cursor_);
        const AtomId v = l.atom();
        if (v >= original_atoms) continue;
        const auto& hit = l.is_positive() ? neg_occ_[v] : pos_occ_[v];
        for (const std::uint32_t r : hit) {
            const AtomId head = program_.rules[r].head;
            if (has_source_[head] && source_of_[head] == r) invalidate_source(head);
        }
    }
}

void UnfoundedDetector::resource(const Trail& trail) {
    const std::size_t n = tracked_atom_.size();
    std::deque<AtomId> wave;

    const auto try_source = [&](AtomId a) {
        if (has_source_[a] || trail.value(a) == Truth::False) return;
        for (const std::uint32_t r : defining_[a]) {
            if (missing_[r] == 0 && !body_falsified(r, trail)) {
                has_source_[a] = true;
                source_of_[a] = r;
                wave.push_back(a);
                return;
            }
        }
    };

    for (AtomId a = 0; a < n; ++a) {
        if (tracked_atom_[a]) try_source(a);
    }
    while (!wave.empty()) {
        const AtomId sourced = wave.front();
        wave.pop_front();
        for (const std::uint32_t w : dependents_[sourced]) {
            if (--missing_[w] == 0) try_source(program_.rules[w].head);
        }
    }
}

std::vector<Literal> UnfoundedDetector::clause_for(AtomId atom) const {
    std::vector<Literal> lits{Literal::negative(atom)};
    lits.insert(lits.end(), pending_external_.begin(), pending_external_.end());
    return lits;
}

std::optional<std::vector<Literal>> UnfoundedDetector::well_founded_step(const Trail& trail) {
    if (pending_next_ < pending_atoms_.size()) {
        return clause_for(pending_atoms_[pending_next_++]);
    }

    scan_trail(trail);
    resource(trail);

    // Residue: unsourced, non-false cyclic atoms. One SCC's share forms X.
    const std::size_t n = tracked_atom_.size();
    AtomId first = 0;
    bool found = false;
    for (AtomId a = 0; a < n && !found; ++a) {
        if (tracked_atom_[a] && !has_source_[a] && trail.value(a) != Truth::False) {
            first = a;
            found = true;
        }
    }
    if (!found) return std::nullopt;

    pending_atoms_.clear();
    pending_next_ = 0;
    const std::uint32_t scc = graph_.scc_id[first];
    std::vector<bool> in_x(n, false);
    for (AtomId a = first; a < n; ++a) {
        if (tracked_atom_[a] && graph_.scc_id[a] == scc && !has_source_[a] &&
            trail.value(a) != Truth::False) {
            pending_atoms_.push_back(a);
            in_x[a] = true;
        }
    }

    // Emitting the same set twice without any trail growth means the
    // clauses are already in and not asserting; report a fixpoint
    // instead of looping.
    if (trail.size() == last_emitted_trail_size_ && pending_atoms_ == last_emitted_x_) {
        pending_atoms_.clear();
        return std::nullopt;
    }
    last_emitted_x_ = pending_atoms_;
    last_emitted_trail_size_ = trail.size();

    // External support rules of X: head in X, positive body disjoint
    // from X. Their aux atoms make up the loop clause tail.
    pending_external_.clear();
    for (const AtomId a : pending_atoms_) {
        for (const std::uint32_t r : defining_[a]) {
            bool external = true;
            for (const AtomId b : program_.rules[r].pos_body) {
                if (in_x[b]) {
                    external = false;
                    break;
                }
            }
            if (external) pending_external_.push_back(Literal::positive(aux_.aux_of(r)));
        }
    }
    std::sort(pending_external_.begin(), pending_external_.end());
    pending_external_.erase(std::unique(pending_external_.begin(), pending_external_.end()),
                            pending_external_.end());

    ++sets_found_;
    return clause_for(pending_atoms_[pending_next_++]);
}

void UnfoundedDetector::on_backjump(const Trail& trail) {
    cursor_ = std::min(cursor_, trail.size());
    pending_atoms_.clear();
    pending_next_ = 0;
    pending_external_.clear();
    last_emitted_x_.clear();
    last_emitted_trail_size_ = kNoTrailSize;
}

#ifdef SABLE_EXPENSIVE_CHECKS
bool UnfoundedDetector::check_source_acyclicity() const {
    // Follow source edges head → internal body atoms; a cycle among
    // sourced atoms violates the discipline.
    const std::size_t n = tracked_atom_.size();
    std::vector<std::uint8_t> color(n, 0);
    std::vector<std::pair<AtomId, std::size_t>> stack;
    for (AtomId start = 0; start < n; ++start) {
        if (!tracked_atom_[start] || !has_source_[start] || color[start] != 0) continue;
        color[start] = 1;
        stack.emplace_back(start, 0);
        while (!stack.empty()) {
            auto& frame = stack.back();
            const AtomId a = frame.first;
            const auto& kids = internal_[source_of_[a]];
            bool descended = false;
            while (frame.second < kids.size()) {
                const AtomId child = kids[frame.second++];
                if (!has_source_[child]) continue;
                if (color[child] == 1) return false;
                if (color[child] == 0) {
                    color[child] = 1;
                    stack.emplace_back(child, 0);
                    descended = true;
                    break;
                }
            }
            if (!descended) {
                color[a] = 2;
                stack.pop_back();
            }
        }
    }
    return true;
}
#endif

bool is_unfounded(const std::vector<AtomId>& x, const Trail& trail, const Program& p) {
    std::vector<bool> in_x(p.atoms.size(), false);
    for (const AtomId a : x) in_x[a] = true;
    for (const Rule& rule : p.rules) {
        if (rule.is_constraint() || !in_x[rule.head]) continue;
        bool neutralized = false;
        for (const AtomId b : rule.pos_body) {
            if (trail.value(b) == Truth::False || in_x[b]) {
                neutralized = true;
                break;
            }
        }
        if (!neutralized) {
            for (const AtomId c : rule.neg_body) {
                if (trail.value(c) == Truth::True) {
                    neutralized = true;
                    break;
                }
            }
        }
        if (!neutralized) return false;
    }
    return true;
}

} // namespace sable
