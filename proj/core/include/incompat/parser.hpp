#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include "incompat/formula.hpp"

namespace incompat {

struct ParseError : std::runtime_error {
  ParseError(const std::string& what, std::size_t pos)
      : std::runtime_error(what + " (at position " + std::to_string(pos) + ")"),
        position(pos) {}
  std::size_t position;
};

// Grammar (EBNF), loosest to tightest: `->` (right-assoc), `|`, `&`, `#`
// (left-assoc), unary. Unary forms: `!f`, `@f`, `~f`, atoms [a-z][a-z0-9_]*,
// parentheses, and the sugar `bot(f,g)` / `top(f)`.
//
// Sugar is expanded during parsing:
//   bot(a,b)  =>  (a & b) & (a # b)
//   ~a        =>  a -> bot(a,a)
//   top(a)    =>  a -> a
// Sugar and `#` require a signature containing the incompatibility
// connective; `!` requires a negation; `@` requires LFI.
Formula parse(std::string_view text, Sig sig);

}  // namespace incompat
