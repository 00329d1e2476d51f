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

#include "sable/simplify.hpp"

#include <algorithm>
#include <deque>
#include <utility>

namespace sable {

namespace {

// Atom-based abstraction so one flipped polarity still passes the
// subset precheck (needed for self-subsuming resolution).
std::uint64_t signature(const std::vector<Literal>& lits) {
    std::uint64_t sig = 0;
    for (const Literal l : lits) sig |= std::uint64_t{1} << (l.atom() % 64);
    return sig;
}

struct SClause {
    std::vector<Literal> lits; // sorted by code
    std::uint64_t sig = 0;
    bool deleted = false;

    bool contains(Literal l) const {
        return std::binary_search(lits.begin(), lits.end(), l);
    }
};

enum class SubsumeVerdict : std::uint8_t { No, Subsumes, Strengthens };

// C against D: Subsumes when C ⊆ D; Strengthens when C with exactly one
// literal flipped is ⊆ D (the flipped literal, removable from D, is
// reported through `flipped`).
SubsumeVerdict subsume_check(const SClause& c, const SClause& d, Literal& flipped) {
    if (c.lits.size() > d.lits.size() || (c.sig & ~d.sig) != 0) return SubsumeVerdict::No;
    bool flip_used = false;
    for (const Literal l : c.lits) {
        if (d.contains(l)) continue;
        if (!flip_used && d.contains(~l)) {
            flip_used = true;
            flipped = ~l;
            continue;
        }
        return SubsumeVerdict::No;
    }
    return flip_used ? SubsumeVerdict::Strengthens : SubsumeVerdict::Subsumes;
}

class Simplifier {
  public:
    Simplifier(const CompletionResult& c, const SimplifyConfig& cfg,
               const std::vector<bool>& extra_frozen)
        : cfg_(cfg), atom_count_(static_cast<AtomId>(c.clauses.atom_count())) {
        frozen_.assign(atom_count_, false);
        frozen_[kFalsityAtom] = true;
        if (cfg.freeze_original_atoms) {
            for (AtomId a = 0; a < c.original_atom_count && a < atom_count_; ++a) {
                frozen_[a] = true;
            }
        }
        for (AtomId a = 0; a < extra_frozen.size() && a < atom_count_; ++a) {
            if (extra_frozen[a]) frozen_[a] = true;
        }
        eliminated_.assign(atom_count_, false);
        touched_.assign(atom_count_, true);
        n_occ_.assign(std::size_t{2} * atom_count_, 0);
        occur_.resize(std::size_t{2} * atom_count_);
        for (const Clause& clause : c.clauses.clauses()) {
            add_clause(clause.literals());
        }
    }

    SimplifyResult run() {
        subsumption_fixpoint();
        if (!inconsistent_) eliminate_atoms();
        return harvest();
    }

  private:
    void add_clause(std::vector<Literal> lits) {
        if (lits.empty()) {
            inconsistent_ = true;
            return;
        }
        const std::uint32_t index = static_cast<std::uint32_t>(clauses_.size());
        SClause sc;
        sc.lits = std::move(lits);
        sc.sig = signature(sc.lits);
        for (const Literal l : sc.lits) {
            occur_[l.code()].push_back(index);
            ++n_occ_[l.code()];
        }
        clauses_.push_back(std::move(sc));
        queue_.push_back(index);
    }

    void delete_clause(std::uint32_t index) {
        SClause& sc = clauses_[index];
        sc.deleted = true;
        for (const Literal l : sc.lits) {
            --n_occ_[l.code()];
            touched_[l.atom()] = true;
        }
    }

    // Removes one literal from clauses_[index]; requeues it as a subsumer.
    void strengthen_clause(std::uint32_t index, Literal l) {
        SClause& sc = clauses_[index];
        sc.lits.erase(std::find(sc.lits.begin(), sc.lits.end(), l));
        sc.sig = signature(sc.lits);
        --n_occ_[l.code()];
        touched_[l.atom()] = true;
        if (sc.lits.empty()) {
            inconsistent_ = true;
            return;
        }
        queue_.push_back(index);
    }

    // Backward pass: each queued clause removes the clauses it subsumes
    // and strips literals by self-subsuming resolution. Shrinking a
    // clause requeues it, so the pass runs to fixpoint.
    void subsumption_fixpoint() {
        while (!queue_.empty() && !inconsistent_) {
            const std::uint32_t ci = queue_.front();
            queue_.pop_front();
            if (clauses_[ci].deleted) continue;

            Literal pivot = clauses_[ci].lits.front();
            std::size_t best = occurrences_of_atom(pivot);
            for (const Literal l : clauses_[ci].lits) {
                const std::size_t count = occurrences_of_atom(l);
                if (count < best) {
                    best = count;
                    pivot = l;
                }
            }

            for (const Literal side : {pivot, ~pivot}) {
                // The occur list may grow or dangle while we mutate; index
                // by position and recheck membership.
                auto& candidates = occur_[side.code()];
                for (std::size_t k = 0; k < candidates.size(); ++k) {
                    const std::uint32_t di = candidates[k];
                    if (di == ci || clauses_[di].deleted || clauses_[ci].deleted) continue;
                    if (!clauses_[di].contains(side)) continue; // stale entry
                    Literal flipped = side;
                    switch (subsume_check(clauses_[ci], clauses_[di], flipped)) {
                    case SubsumeVerdict::No:
                        break;
                    case SubsumeVerdict::Subsumes:
                        delete_clause(di);
                        break;
                    case SubsumeVerdict::Strengthens:
                        strengthen_clause(di, flipped);
                        if (inconsistent_) return;
                        break;
                    }
                }
                if (clauses_[ci].deleted) break;
            }
        }
    }

    std::size_t occurrences_of_atom(Literal l) const {
        return n_occ_[Literal::positive(l.atom()).code()] +
               n_occ_[Literal::negative(l.atom()).code()];
    }

    // Live clauses currently containing l, by scanning l's occur list
    // and dropping stale entries.
    std::vector<std::uint32_t> gather(Literal l) const {
        std::vector<std::uint32_t> out;
        for (const std::uint32_t ci : occur_[l.code()]) {
            if (!clauses_[ci].deleted && clauses_[ci].contains(l)) out.push_back(ci);
        }
        return out;
    }

    static bool resolve(const std::vector<Literal>& a, Literal pivot,
                        const std::vector<Literal>& b, std::vector<Literal>& out) {
        out.clear();
        for (const Literal l : a) {
            if (l != pivot) out.push_back(l);
        }
        for (const Literal l : b) {
            if (l != ~pivot) out.push_back(l);
        }
        std::sort(out.begin(), out.end());
        out.erase(std::unique(out.begin(), out.end()), out.end());
        for (std::size_t i = 1; i < out.size(); ++i) {
            if (out[i].atom() == out[i - 1].atom()) return false; // tautology
        }
        return true;
    }

    bool try_eliminate(AtomId v) {
        const Literal pos = Literal::positive(v);
        const Literal neg = Literal::negative(v);
        const auto pos_cls = gather(pos);
        const auto neg_cls = gather(neg);
        const std::size_t before = pos_cls.size() + neg_cls.size();
        if (before == 0 || before > cfg_.max_elim_occurrences) return false;

        std::vector<std::vector<Literal>> resolvents;
        std::vector<Literal> merged;
        for (const std::uint32_t pi : pos_cls) {
            for (const std::uint32_t ni : neg_cls) {
                if (!resolve(clauses_[pi].lits, pos, clauses_[ni].lits, merged)) continue;
                resolvents.push_back(merged);
                if (resolvents.size() > before + cfg_.max_clause_growth) return false;
            }
        }

        ReconstructionLog::Entry entry;
        entry.atom = v;
        for (const std::uint32_t ci : pos_cls) entry.clauses.push_back(clauses_[ci].lits);
        for (const std::uint32_t ci : neg_cls) entry.clauses.push_back(clauses_[ci].lits);
        log_.entries.push_back(std::move(entry));

        for (const std::uint32_t ci : pos_cls) delete_clause(ci);
        for (const std::uint32_t ci : neg_cls) delete_clause(ci);
        for (std::vector<Literal>& r : resolvents) {
            for (const Literal l : r) touched_[l.atom()] = true;
            add_clause(std::move(r));
        }
        eliminated_[v] = true;
        return true;
    }

    // Bounded variable elimination, cheapest atoms first, atoms touched
    // by a change retried until a full round changes nothing.
    void eliminate_atoms() {
        bool progress = true;
        while (progress && !inconsistent_) {
            progress = false;
            std::vector<std::pair<std::size_t, AtomId>> order;
            for (AtomId v = 0; v < atom_count_; ++v) {
                if (!touched_[v] || frozen_[v] || eliminated_[v]) continue;
                order.emplace_back(occurrences_of_atom(Literal::positive(v)), v);
            }
            touched_.assign(atom_count_, false);
            std::sort(order.begin(), order.end());
            for (const auto& [count, v] : order) {
                if (eliminated_[v]) continue;
                if (try_eliminate(v)) {
                    progress = true;
                    subsumption_fixpoint();
                    if (inconsistent_) return;
                }
            }
        }
    }

    SimplifyResult harvest() {
        SimplifyResult result;
        result.clauses.set_atom_count(atom_count_);
        result.log = std::move(log_);
        if (inconsistent_) {
            result.clauses.add(Clause::make({}, ClauseOrigin::Completion));
            return result;
        }
        for (const SClause& sc : clauses_) {
            if (!sc.deleted) result.clauses.add(Clause::make(sc.lits, ClauseOrigin::Completion));
        }
        return result;
    }

    SimplifyConfig cfg_;
    AtomId atom_count_;
    std::vector<bool> frozen_;
    std::vector<bool> eliminated_;
    std::vector<bool> touched_;
    std::vector<SClause> clauses_;
    std::vector<std::vector<std::uint32_t>> occur_; // per literal code
    std::vector<std::uint32_t> n_occ_;              // per literal code, live counts
    std::deque<std::uint32_t> queue_;
    ReconstructionLog log_;
    bool inconsistent_ = false;
};

} // namespace

SimplifyResult simplify(const CompletionResult& c, const SimplifyConfig& cfg,
                        const std::vector<bool>& extra_frozen) {
    return Simplifier(c, cfg, extra_frozen).run();
}

std::vector<Truth> reconstruct(std::vector<Truth> model, const ReconstructionLog& log) {
    for (auto it = log.entries.rbegin(); it != log.entries.rend(); ++it) {
        model[it->atom] = Truth::False;
        for (const std::vector<Literal>& clause : it->clauses) {
            bool satisfied = false;
            for (const Literal l : clause) {
                if (literal_truth(l, model[l.atom()]) == Truth::True) {
                    satisfied = true;
                    break;
                }
            }
            if (!satisfied) {
                model[it->atom] = Truth::True;
                break;
            }
        }
    }
    return model;
}

} // namespace sable
