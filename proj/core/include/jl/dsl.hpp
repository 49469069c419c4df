#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "jl/perm_group.hpp"

namespace jl {

struct Atom {
  enum class Kind { Cyclic, Dihedral, Sym, Alt, ElemAbelian, Heis, PSL2 };
  Kind kind = Kind::Cyclic;
  unsigned a = 1;  // n, p or q
  unsigned b = 0;  // k for ElemAbelian
  friend bool operator==(const Atom&, const Atom&) = default;
};

struct Action {
  enum class Kind { Swap, Inv, Explicit };
  Kind kind = Kind::Swap;
  std::string id;  // Explicit only
  friend bool operator==(const Action&, const Action&) = default;
};

struct GroupExpr {
  enum class Kind { Atom, Product, Semidirect };
  Kind kind = Kind::Atom;
  Atom atom;
  std::shared_ptr<const GroupExpr> left;   // normal factor for Semidirect
  std::shared_ptr<const GroupExpr> right;  // acting factor for Semidirect
  std::optional<Action> action;

  friend bool operator==(const GroupExpr& x, const GroupExpr& y);
};

/// expr := term (('*' | ':') term ['[' action ']'])*, left-associative.
/// Throws ParseError carrying the byte offset of the failure.
GroupExpr parse_expr(std::string_view text);

/// Canonical text; parse_expr(print(e)) == e.
std::string print(const GroupExpr& e);

/// Order implied by the expression's arithmetic. Throws on overflow.
std::uint64_t expected_order(const GroupExpr& e);

/// images[i] lists, for the acting group's i-th generator, words in the normal
/// group's generators ("n0 n1^-1 n2^2"; "1" is the identity).
using ActionTable = std::vector<std::vector<std::string>>;
using ActionRegistry = std::map<std::string, ActionTable, std::less<>>;

PermGroup build_atom(const Atom& a);
/// Throws BuildError on unknown actions or order mismatches, CapExceeded above the degree cap.
PermGroup build(const GroupExpr& e, const ActionRegistry& actions = {}, std::size_t degree_cap = 64);

/// Evaluates a word in the given generators.
Permutation evaluate_word(std::string_view word, const std::vector<Permutation>& gens);

struct ExprLine {
  std::size_t line = 0;
  GroupExpr expr;
};
/// One expression per line; blank lines and '#' comments are skipped.
std::vector<ExprLine> parse_expr_lines(std::string_view text);

}  // namespace jl
