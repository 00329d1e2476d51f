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

#include "support.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>
#include <stdexcept>
#include <utility>

#include "sable/pipeline.hpp"
#include "sable/textio.hpp"

namespace sable::testing {

std::optional<std::vector<Truth>> naive_up_fixpoint(const std::vector<std::vector<Literal>>& clauses,
                                                    std::vector<Truth> values) {
    bool changed = true;
    while (changed) {
        changed = false;
        for (const auto& c : clauses) {
            std::size_t false_count = 0;
            Literal unassigned;
            bool satisfied = false;
            for (Literal l : c) {
                Truth t = literal_truth(l, values[l.atom()]);
                if (t == Truth::True) {
                    satisfied = true;
                    break;
                }
                if (t == Truth::False) {
                    ++false_count;
                } else {
                    unassigned = l;
                }
            }
            if (satisfied) continue;
            if (false_count == c.size()) return std::nullopt;
            if (false_count + 1 == c.size()) {
                values[unassigned.atom()] = unassigned.is_positive() ? Truth::True : Truth::False;
                changed = true;
            }
        }
    }
    return values;
}

std::vector<std::uint32_t> truth_table_models(const std::vector<std::vector<Literal>>& clauses,
                                              std::uint32_t atom_count) {
    assert(atom_count <= 20);
    std::vector<std::uint32_t> out;
    for (std::uint32_t mask = 0; mask < (1u << atom_count); ++mask) {
        bool ok = true;
        for (const auto& c : clauses) {
            bool sat = false;
            for (Literal l : c) {
                bool atom_true = (mask >> l.atom()) & 1u;
                if (l.is_positive() == atom_true) {
                    sat = true;
                    break;
                }
            }
            if (!sat) {
                ok = false;
                break;
            }
        }
        if (ok) out.push_back(mask);
    }
    return out;
}

std::set<std::uint32_t> project_masks(const std::vector<std::uint32_t>& masks,
                                      const std::vector<bool>& keep) {
    std::uint32_t keep_mask = 0;
    for (std::size_t a = 0; a < keep.size(); ++a) {
        if (keep[a]) keep_mask |= 1u << a;
    }
    std::set<std::uint32_t> out;
    for (std::uint32_t m : masks) out.insert(m & keep_mask);
    return out;
}

SolveRun solve_text(const std::string& text, std::uint64_t max_models, bool simplify,
                    SearchConfig config, SearchObserver* observer) {
    Program p = parse_program(text);
    config.max_models = max_models;
    CompiledProblem cp = compile(std::move(p), SimplifyConfig{}, simplify, max_models != 1);
    Solver solver(cp, config, observer);
    SolveOutcome outcome = solver.solve();
    return SolveRun{std::move(outcome), std::move(cp)};
}

std::set<Model> model_set(const std::vector<Model>& models) {
    return std::set<Model>(models.begin(), models.end());
}

std::set<std::set<std::string>> named_models(const std::vector<Model>& models,
                                             const AtomTable& atoms) {
    std::set<std::set<std::string>> out;
    for (const Model& m : models) {
        std::set<std::string> names;
        for (AtomId a : m) names.insert(atoms.name(a));
        out.insert(std::move(names));
    }
    return out;
}

std::vector<Truth> extend_to_completion(const Program& p, const AuxMap& aux, const Model& m) {
    std::vector<Truth> values(aux.aux_base() + p.rules.size(), Truth::False);
    for (AtomId a : m) values[a] = Truth::True;
    for (std::size_t i = 0; i < p.rules.size(); ++i) {
        const Rule& r = p.rules[i];
        bool body_holds = true;
        for (AtomId a : r.pos_body) body_holds = body_holds && values[a] == Truth::True;
        for (AtomId a : r.neg_body) body_holds = body_holds && values[a] == Truth::False;
        values[aux.aux_of(i)] = body_holds ? Truth::True : Truth::False;
    }
    return values;
}

namespace {

std::string edge_atom(const char* prefix, std::uint32_t i, std::uint32_t j) {
    std::ostringstream s;
    s << prefix << "_" << i << "_" << j;
    return s.str();
}

} // namespace

std::string hamiltonian_cycle_text(std::uint32_t nodes, std::uint32_t edges, std::uint64_t seed) {
    if (nodes < 3) throw std::invalid_argument("hamiltonian_cycle_text: need at least 3 nodes");
    if (edges < nodes || edges > static_cast<std::uint64_t>(nodes) * (nodes - 1)) {
        throw std::invalid_argument("hamiltonian_cycle_text: bad edge count");
    }
    Rng rng(seed);

    std::vector<std::uint32_t> order(nodes);
    for (std::uint32_t i = 0; i < nodes; ++i) order[i] = i + 1;
    for (std::uint32_t i = nodes - 1; i > 0; --i) {
        std::swap(order[i], order[rng.next_below(i + 1)]);
    }

    std::set<std::pair<std::uint32_t, std::uint32_t>> edge_set;
    for (std::uint32_t i = 0; i < nodes; ++i) {
        edge_set.emplace(order[i], order[(i + 1) % nodes]);
    }
    while (edge_set.size() < edges) {
        std::uint32_t a = static_cast<std::uint32_t>(rng.next_in(1, nodes));
        std::uint32_t b = static_cast<std::uint32_t>(rng.next_in(1, nodes));
        if (a != b) edge_set.emplace(a, b);
    }

    std::ostringstream out;
    out << "% hamiltonian cycle: " << nodes << " nodes, " << edges << " edges, seed " << seed
        << "\n";
    for (auto [a, b] : edge_set) {
        out << edge_atom("in", a, b) << " :- not " << edge_atom("omit", a, b) << ".\n";
        out << edge_atom("omit", a, b) << " :- not " << edge_atom("in", a, b) << ".\n";
    }
    std::vector<std::vector<std::uint32_t>> succ(nodes + 1), pred(nodes + 1);
    for (auto [a, b] : edge_set) {
        succ[a].push_back(b);
        pred[b].push_back(a);
    }
    for (std::uint32_t v = 1; v <= nodes; ++v) {
        for (std::size_t x = 0; x < succ[v].size(); ++x) {
            for (std::size_t y = x + 1; y < succ[v].size(); ++y) {
                out << ":- " << edge_atom("in", v, succ[v][x]) << ", "
                    << edge_atom("in", v, succ[v][y]) << ".\n";
            }
        }
        for (std::size_t x = 0; x < pred[v].size(); ++x) {
            for (std::size_t y = x + 1; y < pred[v].size(); ++y) {
                out << ":- " << edge_atom("in", pred[v][x], v) << ", "
                    << edge_atom("in", pred[v][y], v) << ".\n";
            }
        }
        out << ":-";
        for (std::size_t x = 0; x < succ[v].size(); ++x) {
            out << (x == 0 ? " " : ", ") << "not " << edge_atom("in", v, succ[v][x]);
        }
        out << ".\n";
        out << ":-";
        for (std::size_t x = 0; x < pred[v].size(); ++x) {
            out << (x == 0 ? " " : ", ") << "not " << edge_atom("in", pred[v][x], v);
        }
        out << ".\n";
    }
    for (auto [a, b] : edge_set) {
        if (b == 1) continue;
        if (a == 1) {
            out << "r_" << b << " :- " << edge_atom("in", a, b) << ".\n";
        } else {
            out << "r_" << b << " :- r_" << a << ", " << edge_atom("in", a, b) << ".\n";
        }
    }
    for (std::uint32_t v = 2; v <= nodes; ++v) {
        out << ":- not r_" << v << ".\n";
    }
    return out.str();
}

std::string pigeonhole_text(std::uint32_t holes) {
    std::uint32_t pigeons = holes + 1;
    std::ostringstream out;
    out << "% pigeonhole: " << pigeons << " pigeons, " << holes << " holes\n";
    for (std::uint32_t p = 1; p <= pigeons; ++p) {
        for (std::uint32_t h = 1; h <= holes; ++h) {
            out << edge_atom("p", p, h) << " :- not " << edge_atom("q", p, h) << ".\n";
            out << edge_atom("q", p, h) << " :- not " << edge_atom("p", p, h) << ".\n";
        }
    }
    for (std::uint32_t p = 1; p <= pigeons; ++p) {
        out << ":-";
        for (std::uint32_t h = 1; h <= holes; ++h) {
            out << (h == 1 ? " " : ", ") << "not " << edge_atom("p", p, h);
        }
        out << ".\n";
    }
    for (std::uint32_t h = 1; h <= holes; ++h) {
        for (std::uint32_t p1 = 1; p1 <= pigeons; ++p1) {
            for (std::uint32_t p2 = p1 + 1; p2 <= pigeons; ++p2) {
                out << ":- " << edge_atom("p", p1, h) << ", " << edge_atom("p", p2, h) << ".\n";
            }
        }
    }
    return out.str();
}

std::vector<std::vector<Literal>> random_clauses(Rng& rng, std::uint32_t atom_count,
                                                 std::uint32_t clause_count,
                                                 std::uint32_t max_len) {
    std::vector<std::vector<Literal>> out;
    out.reserve(clause_count);
    for (std::uint32_t i = 0; i < clause_count; ++i) {
        std::uint32_t len = static_cast<std::uint32_t>(rng.next_in(1, max_len));
        std::vector<Literal> c;
        for (std::uint32_t k = 0; k < len; ++k) {
            AtomId a = static_cast<AtomId>(rng.next_below(atom_count));
            c.push_back(rng.chance(0.5) ? Literal::positive(a) : Literal::negative(a));
        }
        std::sort(c.begin(), c.end());
        c.erase(std::unique(c.begin(), c.end()), c.end());
        bool tautology = false;
        for (std::size_t k = 0; k + 1 < c.size(); ++k) {
            if (c[k].atom() == c[k + 1].atom()) tautology = true;
        }
        if (tautology) {
            --i;
            continue;
        }
        out.push_back(std::move(c));
    }
    return out;
}

} // namespace sable::testing
