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

#ifndef SABLE_LITERAL_HPP
#define SABLE_LITERAL_HPP

#include <cassert>
#include <compare>
#include <cstdint>
#include <functional>

namespace sable {

/// Dense atom index. Id 0 is permanently reserved for the falsity atom.
using AtomId = std::uint32_t;

inline constexpr AtomId kFalsityAtom = 0;

/// A positive or negative (negation-as-failure) occurrence of an atom.
///
/// Encoded as 2*atom + sign so that a literal indexes watch lists and
/// occurrence tables directly, and the two literals of one atom are adjacent.
class Literal {
public:
    constexpr Literal() : code_(0) {}

    static constexpr Literal positive(AtomId a) { return Literal(a << 1); }
    static constexpr Literal negative(AtomId a) { return Literal((a << 1) | 1u); }
    static constexpr Literal from_code(std::uint32_t code) { return Literal(code); }

    constexpr AtomId atom() const { return code_ >> 1; }
    constexpr bool is_positive() const { return (code_ & 1u) == 0; }
    constexpr bool is_negative() const { return (code_ & 1u) != 0; }

    constexpr Literal complement() const { return Literal(code_ ^ 1u); }

    /// Dense index usable for per-literal arrays.
    constexpr std::uint32_t code() const { return code_; }

    friend constexpr Literal operator~(Literal l) { return l.complement(); }
    friend constexpr bool operator==(Literal, Literal) = default;
    friend constexpr auto operator<=>(Literal, Literal) = default;

private:
    explicit constexpr Literal(std::uint32_t code) : code_(code) {}

    std::uint32_t code_;
};

/// Three-valued truth state of an atom on the trail.
enum class Truth : std::uint8_t { False = 0, True = 1, Undef = 2 };

inline constexpr Truth negate(Truth t) {
    return t == Truth::Undef ? Truth::Undef : (t == Truth::True ? Truth::False : Truth::True);
}

/// Truth of a literal given the truth of its atom.
inline constexpr Truth literal_truth(Literal l, Truth atom_value) {
    return l.is_positive() ? atom_value : negate(atom_value);
}

} // namespace sable

template <>
struct std::hash<sable::Literal> {
    std::size_t operator()(sable::Literal l) const noexcept { return l.code(); }
};

#endif
