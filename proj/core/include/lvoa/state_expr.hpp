#ifndef LVOA_STATE_EXPR_HPP
#define LVOA_STATE_EXPR_HPP

// Text syntax for states, the inverse of to_string(FieldElement):
//
//   expr     := ['+'|'-'] term (('+'|'-') term)*
//   term     := factor ('*' factor)*
//   factor   := rational | 'exp[' momentum ']' | 'd' ['^' int] 'phi[' momentum ']'
//             | '(' expr ')' | '-' factor
//   momentum := ['+'|'-'] mterm (('+'|'-') mterm)*
//   mterm    := rational | [rational '*'] symbol ['/sqrtp'] | [rational '*'] '(' momentum ')'
//
// Symbols: a (rank one), a1..an for alpha_i/sqrt(p), Q, l1..ln for lambda_i/sqrt(p).
// Coordinates are already divided by sqrt(p), so a trailing "/sqrtp" is accepted and ignored.

#include "lvoa/freefield.hpp"

#include <stdexcept>
#include <string_view>

namespace lvoa {

class ParseError : public std::invalid_argument {
 public:
  ParseError(const std::string& msg, std::size_t pos);
  std::size_t position() const { return pos_; }

 private:
  std::size_t pos_;
};

FieldElement parse_state(std::string_view text, const ScreeningLattices& sl);
Momentum parse_momentum(std::string_view text, const ScreeningLattices& sl);

}  // namespace lvoa

#endif  // LVOA_STATE_EXPR_HPP
