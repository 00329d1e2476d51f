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

#ifndef SABLE_TEXTIO_HPP
#define SABLE_TEXTIO_HPP

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

#include "sable/outcome.hpp"
#include "sable/program.hpp"

namespace sable {

struct ParseDiagnostic {
    std::size_t line = 0; // 1-based
    std::string message;
};

class ParseError : public std::runtime_error {
  public:
    explicit ParseError(ParseDiagnostic diag)
        : std::runtime_error("line " + std::to_string(diag.line) + ": " + diag.message),
          diag_(std::move(diag)) {}

    const ParseDiagnostic& diagnostic() const { return diag_; }

  private:
    ParseDiagnostic diag_;
};

/// Parses a ground program.
///
/// Syntax: `h :- b1, not b2.` with `h.` for facts and `:- body.` for
/// constraints. `%` starts a comment running to end of line. `#false` in
/// head position is a synonym for the constraint form. Atom names are
/// interned in first-appearance order starting at id 1.
///
/// Throws ParseError on malformed input.
Program parse_program(std::string_view text);

/// Renders the solve protocol: per model one "ANSWER" line followed by one
/// line of true atom names in id order; otherwise a single "INCONSISTENT"
/// or "UNKNOWN" line. Every line is newline-terminated.
std::string render_outcome(const SolveOutcome& outcome, const AtomTable& atoms);

/// Renders one model in the same two-line form used by render_outcome.
std::string render_model(const Model& model, const AtomTable& atoms);

/// Debug printer; its output reparses to an isomorphic program.
std::string render_program(const Program& program);

} // namespace sable

#endif
