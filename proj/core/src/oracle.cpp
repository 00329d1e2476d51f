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

#include "sable/oracle.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>
#include <string>
#include <utility>

#include "sable/rng.hpp"

// This file deliberately shares no code with the solver: reduct, least
// model, and cycle detection are reimplemented from the definitions so
// that differential tests compare genuinely independent evaluators.

namespace sable {

namespace {

struct DefiniteRule {
    AtomId head;
    const std::vector<AtomId>* pos;
};

// Least model by repeated sweeps: apply every rule whose body is
// satisfied until a full sweep adds nothing.
std::vector<std::uint8_t> least_model_sweep(const std::vector<DefiniteRule>& rules,
                                            std::size_t atom_count) {
    std::vector<std::uint8_t> truth(atom_count, 0);
    bool changed = true;
    while (changed) {
        changed = false;
        for (const DefiniteRule& rule : rules) {
            if (truth[rule.head]) continue;
            bool fires = true;
            for (const AtomId b : *rule.pos) {
                if (!truth[b]) {
                    fires = false;
                    break;
                }
            }
            if (fires) {
                truth[rule.head] = 1;
                changed = true;
            }
        }
    }
    return truth;
}

// Least model by counting: track how many body atoms each rule still
// needs and enqueue heads as rules become fully satisfied.
std::vector<std::uint8_t> least_model_counting(const std::vector<DefiniteRule>& rules,
                                               std::size_t atom_count) {
    std::vector<std::uint8_t> truth(atom_count, 0);
    std::vector<std::size_t> missing(rules.size(), 0);
    std::vector<std::vector<std::size_t>> watchers(atom_count);
    std::vector<AtomId> queue;

    for (std::size_t i = 0; i < rules.size(); ++i) {
        missing[i] = rules[i].pos->size();
        for (const AtomId b : *rules[i].pos) watchers[b].push_back(i);
        if (missing[i] == 0 && !truth[rules[i].head]) {
            truth[rules[i].head] = 1;
            queue.push_back(rules[i].head);
        }
    }
    while (!queue.empty()) {
        const AtomId atom = queue.back();
        queue.pop_back();
        for (const std::size_t i : watchers[atom]) {
            // Duplicate-free bodies: each watcher entry decrements once.
            if (--missing[i] == 0 && !truth[rules[i].head]) {
                truth[rules[i].head] = 1;
                queue.push_back(rules[i].head);
            }
        }
    }
    return truth;
}

std::vector<std::uint8_t> least_model(const std::vector<DefiniteRule>& rules,
                                      std::size_t atom_count) {
    auto a = least_model_sweep(rules, atom_count);
    auto b = least_model_counting(rules, atom_count);
    if (a != b) throw std::logic_error("least-model self-check failed");
    return a;
}

bool has_positive_cycle(const Program& p) {
    const std::size_t n = p.atoms.size();
    std::vector<std::vector<AtomId>> succ(n);
    for (const Rule& rule : p.rules) {
        if (rule.is_constraint()) continue;
        for (const AtomId b : rule.pos_body) {
            if (b == rule.head) return true;
            succ[rule.head].push_back(b);
        }
    }
    // Iterative three-color DFS; a back edge closes a cycle.
    std::vector<std::uint8_t> color(n, 0);
    std::vector<std::pair<AtomId, std::size_t>> stack;
    for (AtomId start = 1; start < n; ++start) {
        if (color[start] != 0) continue;
        color[start] = 1;
        stack.emplace_back(start, 0);
        while (!stack.empty()) {
            auto& [atom, next] = stack.back();
            if (next < succ[atom].size()) {
                const AtomId child = succ[atom][next++];
                if (color[child] == 1) return true;
                if (color[child] == 0) {
                    color[child] = 1;
                    stack.emplace_back(child, 0);
                }
            } else {
                color[atom] = 2;
                stack.pop_back();
            }
        }
    }
    return false;
}

} // namespace

bool is_answer_set(const Program& p, const Model& m) {
    const std::size_t n = p.atoms.size();
    std::vector<std::uint8_t> in_m(n, 0);
    for (const AtomId atom : m) {
        if (atom == kFalsityAtom || atom >= n) return false;
        in_m[atom] = 1;
    }

    // Reduct: drop rules blocked by a true negative literal, strip the
    // negative literals from the rest.
    std::vector<DefiniteRule> definite;
    std::vector<const Rule*> constraints;
    for (const Rule& rule : p.rules) {
        bool blocked = false;
        for (const AtomId nb : rule.neg_body) {
            if (in_m[nb]) {
                blocked = true;
                break;
            }
        }
        if (blocked) continue;
        if (rule.is_constraint()) {
            constraints.push_back(&rule);
        } else {
            definite.push_back({rule.head, &rule.pos_body});
        }
    }

    // m must violate no kept constraint.
    for (const Rule* c : constraints) {
        bool applicable = true;
        for (const AtomId b : c->pos_body) {
            if (!in_m[b]) {
                applicable = false;
                break;
            }
        }
        if (applicable) return false;
    }

    // m must equal the least model of the definite part; for normal
    // programs this is exactly subset-minimal modelhood of the reduct.
    const auto lm = least_model(definite, n);
    for (AtomId atom = 0; atom < n; ++atom) {
        if ((lm[atom] != 0) != (in_m[atom] != 0)) return false;
    }
    return true;
}

std::vector<Model> enumerate_answer_sets(const Program& p, std::uint32_t guard) {
    const std::size_t k = p.atoms.size() - 1;
    if (k > guard) {
        throw std::invalid_argument("oracle guard exceeded: " + std::to_string(k) +
                                    " atoms > " + std::to_string(guard));
    }
    std::vector<Model> found;
    Model candidate;
    const std::uint64_t limit = std::uint64_t{1} << k;
    for (std::uint64_t mask = 0; mask < limit; ++mask) {
        candidate.clear();
        for (std::size_t bit = 0; bit < k; ++bit) {
            if (mask & (std::uint64_t{1} << bit)) candidate.push_back(static_cast<AtomId>(bit + 1));
        }
        if (is_answer_set(p, candidate)) found.push_back(candidate);
    }
    std::sort(found.begin(), found.end());
    return found;
}

Program random_program(const GeneratorParams& params) {
    if (!params.valid()) throw std::invalid_argument("invalid generator parameters");

    Program p;
    for (std::uint32_t i = 1; i <= params.atom_count; ++i) {
        p.atoms.intern("x" + std::to_string(i));
    }

    Rng rng(params.seed);
    const auto any_atom = [&] { return static_cast<AtomId>(1 + rng.next_below(params.atom_count)); };

    std::vector<AtomId> head_pool;
    for (std::uint32_t r = 0; r < params.rule_count; ++r) {
        const AtomId head = rng.chance(params.constraint_probability) ? kFalsityAtom : any_atom();
        const std::uint64_t body_len = rng.next_below(params.max_body + 1);
        std::vector<AtomId> pos;
        std::vector<AtomId> neg;
        for (std::uint64_t j = 0; j < body_len; ++j) {
            if (rng.chance(params.neg_probability)) {
                neg.push_back(any_atom());
            } else if (!head_pool.empty() && rng.chance(params.cycle_bias)) {
                pos.push_back(head_pool[rng.next_below(head_pool.size())]);
            } else {
                pos.push_back(any_atom());
            }
        }
        if (head != kFalsityAtom) head_pool.push_back(head);
        p.add_rule(Rule::make(head, std::move(pos), std::move(neg)));
    }

    // cycle_bias 1 promises a positive cycle; patch one in if sampling
    // produced none. Skipped when every rule must be a constraint.
    if (params.cycle_bias == 1.0 && params.rule_count >= 2 &&
        params.constraint_probability < 1.0 && !has_positive_cycle(p)) {
        const AtomId u = 1;
        const AtomId v = params.atom_count >= 2 ? 2 : 1;
        p.rules[p.rules.size() - 2] = Rule::make(u, {v}, {});
        p.rules[p.rules.size() - 1] = Rule::make(v, {u}, {});
    }
    return p;
}

} // namespace sable
