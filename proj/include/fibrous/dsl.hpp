#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "fibrous/errors.hpp"
#include "fibrous/term.hpp"

namespace fibrous {

enum class TokenKind { integer, name, caret, underscore, star, plus, lparen, rparen, comma, end };

struct Token {
    TokenKind kind = TokenKind::end;
    std::size_t begin = 0; // byte span in the source text
    std::size_t end = 0;
    std::string text;
    std::int64_t value = 0; // for integer tokens
};

/// Tokenizes the space notation; whitespace is insignificant. Throws
/// ParseError on stray characters or out-of-range integer literals.
std::vector<Token> lex(std::string_view text);

/// Parses the space notation:
///
///   expr     := sum
///   sum      := fibrous ( "+" fibrous )*
///   fibrous  := atom ( "(" expr ")" atom )*     -- running fibers in parens
///   atom     := INT "p" | "p" | INT "*" atom | name params
///             | "(" expr ")"                    -- only inside running fibers
///   names    : S^n, RP^n, D^n, T^n, M_g, N_h, rosette(k), chain(k),
///              cw(a0,...,an)
///
/// "p" is a point, "2p" a two-point space, "k*X" k disjoint copies, "+" a
/// disjoint sum. Fibrous chaining binds tighter than "+".
TermPtr parse(std::string_view text);

/// Canonical text form. parse(render(t)) is structurally equal to t for
/// every term the notation can express; length-0 decompositions print as
/// their sole fiber.
std::string render(const TermPtr& term);

/// Two-line diagnostic with a caret marker under the offending span.
std::string format_parse_error(std::string_view text, const ParseError& e);

} // namespace fibrous
