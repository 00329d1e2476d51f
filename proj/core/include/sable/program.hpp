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

#ifndef SABLE_PROGRAM_HPP
#define SABLE_PROGRAM_HPP

#include <algorithm>
#include <cassert>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "sable/clause.hpp"
#include "sable/literal.hpp"

namespace sable {

/// Dense atom-id table with symbolic names. Id 0 is always the falsity atom,
/// rendered as "#false". Generated auxiliary atoms have empty names.
class AtomTable {
public:
    AtomTable() { names_.emplace_back("#false"); }

    /// Interns a named atom, returning the existing id on repeat lookups.
    AtomId intern(std::string_view name) {
        if (auto it = index_.find(std::string(name)); it != index_.end()) return it->second;
        AtomId id = static_cast<AtomId>(names_.size());
        names_.emplace_back(name);
        index_.emplace(names_.back(), id);
        return id;
    }

    /// Appends an unnamed (auxiliary) atom.
    AtomId add_anonymous() {
        AtomId id = static_cast<AtomId>(names_.size());
        names_.emplace_back();
        return id;
    }

    const std::string& name(AtomId id) const { return names_[id]; }
    std::size_t size() const { return names_.size(); }

    bool has(std::string_view name) const { return index_.count(std::string(name)) != 0; }

private:
    std::vector<std::string> names_;
    std::unordered_map<std::string, AtomId> index_;
};

/// One ground rule: head <- pos_body, not neg_body. A rule whose head is the
/// falsity atom is a constraint. Bodies are sorted and duplicate-free; an
/// atom may appear in both bodies (the rule is then never applicable).
struct Rule {
    AtomId head = kFalsityAtom;
    std::vector<AtomId> pos_body;
    std::vector<AtomId> neg_body;

    static Rule make(AtomId head, std::vector<AtomId> pos, std::vector<AtomId> neg) {
        auto normalize = [](std::vector<AtomId>& v) {
            std::sort(v.begin(), v.end());
            v.erase(std::unique(v.begin(), v.end()), v.end());
        };
        normalize(pos);
        normalize(neg);
        return Rule{head, std::move(pos), std::move(neg)};
    }

    bool is_constraint() const { return head == kFalsityAtom; }
    bool is_fact() const { return pos_body.empty() && neg_body.empty() && !is_constraint(); }
    std::size_t body_size() const { return pos_body.size() + neg_body.size(); }

    /// The rule's body as literals, positive part first.
    std::vector<Literal> body_literals() const {
        std::vector<Literal> out;
        out.reserve(body_size());
        for (AtomId a : pos_body) out.push_back(Literal::positive(a));
        for (AtomId a : neg_body) out.push_back(Literal::negative(a));
        return out;
    }

    friend bool operator==(const Rule&, const Rule&) = default;
};

/// A ground normal program: atom table plus rule list.
struct Program {
    AtomTable atoms;
    std::vector<Rule> rules;

    void add_rule(Rule r) {
        assert(r.head < atoms.size());
        rules.push_back(std::move(r));
    }

    /// True when every atom id referenced by a rule exists in the table.
    bool references_valid() const {
        auto ok = [&](AtomId a) { return a < atoms.size(); };
        for (const Rule& r : rules) {
            if (!ok(r.head)) return false;
            if (!std::all_of(r.pos_body.begin(), r.pos_body.end(), ok)) return false;
            if (!std::all_of(r.neg_body.begin(), r.neg_body.end(), ok)) return false;
        }
        return true;
    }
};

/// Clause representation of a rule: the head literal plus the complement of
/// every body literal. Never a tautology unless the body mentions the head.
inline std::optional<Clause> clause_of_rule(const Rule& r) {
    std::vector<Literal> lits;
    lits.reserve(1 + r.body_size());
    lits.push_back(Literal::positive(r.head));
    for (AtomId a : r.pos_body) lits.push_back(Literal::negative(a));
    for (AtomId a : r.neg_body) lits.push_back(Literal::positive(a));
    return Clause::make(std::move(lits));
}

} // namespace sable

#endif
