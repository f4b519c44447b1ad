#pragma once

// Lattice expressions such as "U^2 + [-2]^3" or "U(2) + A(2)(-1)".
//
//   expr    := term ("+" term)*
//   term    := atom ("^" int)?
//   atom    := primary ("(" int ")")*
//   primary := name | "[" int "]" | "(" expr ")"
//
// For A, D and E the first parenthesized integer is the rank parameter;
// every other parenthesized integer is a twist. Whitespace is ignored.

#include "og6/lattice.hpp"

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace og6 {

class ParseError : public LatticeError {
 public:
  ParseError(const std::string& message, std::size_t offset);
  [[nodiscard]] std::size_t offset() const { return offset_; }
  [[nodiscard]] const std::string& message() const { return message_; }

 private:
  std::string message_;
  std::size_t offset_;
};

struct LatticeExpr {
  enum class Kind { Named, Rank1, Sum, Power, Twist };

  Kind kind = Kind::Named;
  NamedLattice name = NamedLattice::U;  // Named
  std::optional<long> param;            // Named: n for A, D, E
  long value = 0;                       // Rank1: m; Power: k; Twist: n
  std::vector<LatticeExpr> children;    // Sum: terms; Power, Twist: operand
  std::size_t offset = 0;               // byte offset in the source

  /// Structural equality; offsets are ignored.
  friend bool operator==(const LatticeExpr& a, const LatticeExpr& b);
};

LatticeExpr parse_lattice(std::string_view src);

/// Canonical text; parse_lattice(print(e)) == e.
std::string print(const LatticeExpr& e);

/// Builds the lattice. Range errors (A(0), E(9), ...) are reported as
/// ParseError at the offending node.
Lattice elaborate(const LatticeExpr& e);

/// parse_lattice followed by elaborate, labelled with the canonical text.
Lattice lattice_from_expression(std::string_view src);

}  // namespace og6
