#pragma once

#include <map>
#include <string>
#include <vector>

#include "agw/games.hpp"

namespace agw {

// Multiplicative formulas with lifting. LIMP(a,b) is kept in the tree and
// interpreted as PAR(DUAL(a), b).
struct Formula {
  enum class Op : uint8_t { one, bot, var, dual, tensor, par, limp, up, down };
  Op op = Op::one;
  std::string name;            // var
  std::vector<Formula> kids;

  bool operator==(const Formula&) const = default;
};

// Surface syntax: atoms `one`, `bot`, identifiers; prefix `up`, `dn`; postfix
// `^` for dual; infix `*`, `|`, `-o` (right-associative); precedence
// unary > `*` > `|` > `-o`; parentheses. Throws parse_error with line/column.
Formula parse_formula(const std::string& text);

// Minimal-parentheses form; parse(print(f)) == f.
std::string print_formula(const Formula& f);

using GameEnv = std::map<std::string, Game>;

// Throws precondition_error on unbound identifiers.
Game interpret_formula(const Formula& f, const GameEnv& env);

// DUAL pushed to the leaves and LIMP expanded, preserving the address
// structure of the interpreted game. VARs are rejected (precondition_error)
// when `pure` is set; used by the acyclicity criterion.
Formula normalize_duals(const Formula& f, bool negate = false);

}  // namespace agw
