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

#include "sable/textio.hpp"

#include <cctype>
#include <utility>
#include <vector>

namespace sable {

namespace {

enum class TokKind : std::uint8_t {
    Ident,   // atom name or the keyword `not`
    FalseLit, // #false
    Implies, // :-
    Comma,
    Period,
    End,
};

struct Token {
    TokKind kind = TokKind::End;
    std::string_view text;
    std::size_t line = 1;
};

class Lexer {
  public:
    explicit Lexer(std::string_view text) : text_(text) {}

    Token next() {
        skip_blank();
        Token tok;
        tok.line = line_;
        if (pos_ >= text_.size()) {
            tok.kind = TokKind::End;
            return tok;
        }
        const char c = text_[pos_];
        if (is_ident_start(c)) {
            const std::size_t start = pos_;
            while (pos_ < text_.size() && is_ident_char(text_[pos_])) ++pos_;
            tok.kind = TokKind::Ident;
            tok.text = text_.substr(start, pos_ - start);
            return tok;
        }
        switch (c) {
        case ':':
            if (pos_ + 1 < text_.size() && text_[pos_ + 1] == '-') {
                pos_ += 2;
                tok.kind = TokKind::Implies;
                return tok;
            }
            fail("stray ':' (expected ':-')");
        case ',':
            ++pos_;
            tok.kind = TokKind::Comma;
            return tok;
        case '.':
            ++pos_;
            tok.kind = TokKind::Period;
            return tok;
        case '#': {
            const std::size_t start = pos_;
            ++pos_;
            while (pos_ < text_.size() && is_ident_char(text_[pos_])) ++pos_;
            const std::string_view word = text_.substr(start, pos_ - start);
            if (word == "#false") {
                tok.kind = TokKind::FalseLit;
                tok.text = word;
                return tok;
            }
            fail("unknown directive '" + std::string(word) + "'");
        }
        case '(':
        case ')':
            fail("parentheses are not accepted; the input must be ground");
        default:
            fail(std::string("unexpected character '") + c + "'");
        }
    }

    [[noreturn]] void fail(std::string message, std::size_t line = 0) const {
        throw ParseError({line == 0 ? line_ : line, std::move(message)});
    }

  private:
    static bool is_ident_start(char c) {
        return std::isalpha(static_cast<unsigned char>(c)) != 0 || c == '_';
    }

    static bool is_ident_char(char c) {
        return std::isalnum(static_cast<unsigned char>(c)) != 0 || c == '_';
    }

    void skip_blank() {
        while (pos_ < text_.size()) {
            const char c = text_[pos_];
            if (c == '%') {
                while (pos_ < text_.size() && text_[pos_] != '\n') ++pos_;
            } else if (c == '\n') {
                ++line_;
                ++pos_;
            } else if (std::isspace(static_cast<unsigned char>(c)) != 0) {
                ++pos_;
            } else {
                break;
            }
        }
    }

    std::string_view text_;
    std::size_t pos_ = 0;
    std::size_t line_ = 1;
};

class Parser {
  public:
    explicit Parser(std::string_view text) : lexer_(text) { advance(); }

    Program run() {
        Program program;
        while (cur_.kind != TokKind::End) rule(program);
        return program;
    }

  private:
    void advance() { cur_ = lexer_.next(); }

    AtomId head_atom(Program& program) {
        if (cur_.kind == TokKind::FalseLit) {
            advance();
            return kFalsityAtom;
        }
        if (cur_.kind != TokKind::Ident) lexer_.fail("expected rule head", cur_.line);
        if (cur_.text == "not") lexer_.fail("'not' is a keyword and cannot name an atom", cur_.line);
        const AtomId id = program.atoms.intern(std::string(cur_.text));
        advance();
        return id;
    }

    void body_literal(Program& program, std::vector<AtomId>& pos, std::vector<AtomId>& neg) {
        bool negated = false;
        if (cur_.kind == TokKind::Ident && cur_.text == "not") {
            negated = true;
            advance();
            if (cur_.kind == TokKind::Ident && cur_.text == "not") {
                lexer_.fail("'not' cannot be applied to 'not'", cur_.line);
            }
        }
        if (cur_.kind != TokKind::Ident) lexer_.fail("expected atom in rule body", cur_.line);
        const AtomId id = program.atoms.intern(std::string(cur_.text));
        (negated ? neg : pos).push_back(id);
        advance();
    }

    void body(Program& program, std::vector<AtomId>& pos, std::vector<AtomId>& neg) {
        body_literal(program, pos, neg);
        while (cur_.kind == TokKind::Comma) {
            advance();
            body_literal(program, pos, neg);
        }
    }

    void rule(Program& program) {
        AtomId head = kFalsityAtom;
        std::vector<AtomId> pos;
        std::vector<AtomId> neg;
        if (cur_.kind == TokKind::Implies) {
            advance();
            body(program, pos, neg);
        } else {
            head = head_atom(program);
            if (cur_.kind == TokKind::Implies) {
                advance();
                body(program, pos, neg);
            }
        }
        if (cur_.kind != TokKind::Period) {
            lexer_.fail("expected '.' at end of rule", cur_.line);
        }
        advance();
        program.add_rule(Rule::make(head, std::move(pos), std::move(neg)));
    }

    Lexer lexer_;
    Token cur_;
};

} // namespace

Program parse_program(std::string_view text) { return Parser(text).run(); }

std::string render_model(const Model& model, const AtomTable& atoms) {
    std::string out = "ANSWER\n";
    bool first = true;
    for (const AtomId atom : model) {
        if (!first) out += ' ';
        out += atoms.name(atom);
        first = false;
    }
    out += '\n';
    return out;
}

std::string render_outcome(const SolveOutcome& outcome, const AtomTable& atoms) {
    switch (outcome.verdict) {
    case Verdict::ModelsFound: {
        std::string out;
        for (const Model& model : outcome.models) out += render_model(model, atoms);
        return out;
    }
    case Verdict::Inconsistent:
        return "INCONSISTENT\n";
    case Verdict::BudgetExhausted:
        return "UNKNOWN\n";
    }
    return {};
}

std::string render_program(const Program& program) {
    std::string out;
    for (const Rule& rule : program.rules) {
        const bool constraint = rule.is_constraint();
        if (!constraint) out += program.atoms.name(rule.head);
        if (rule.body_size() > 0) {
            out += constraint ? ":-" : " :-";
            bool first = true;
            for (const AtomId atom : rule.pos_body) {
                out += first ? " " : ", ";
                out += program.atoms.name(atom);
                first = false;
            }
            for (const AtomId atom : rule.neg_body) {
                out += first ? " not " : ", not ";
                out += program.atoms.name(atom);
                first = false;
            }
        } else if (constraint) {
            out += "#false";
        }
        out += ".\n";
    }
    return out;
}

} // namespace sable
