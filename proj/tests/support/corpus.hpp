#pragma once

// The built-in lattices: standard blocks plus every lattice of the shipped
// classification table.

#include "og6/classifier.hpp"
#include "og6/expr.hpp"

namespace og6::testing {

inline std::vector<Lattice> builtin_lattices() {
  std::vector<Lattice> out;
  for (const char* src : {"U", "U(2)", "U(3)", "[2]", "[-2]", "[4]", "[-10]", "A(1)", "A(2)",
                          "A(3)", "A(4)", "D(4)", "D(5)", "E(6)", "E(7)", "E(8)", "h5", "K7",
                          "OG6", "Mukai", "A(2)(-1)", "E(8)(2)"}) {
    out.push_back(lattice_from_expression(src));
  }
  for (const auto& row : load_table(default_table_path())) {
    out.push_back(row.coinvariant);
    out.push_back(row.invariant);
  }
  return out;
}

}  // namespace og6::testing
