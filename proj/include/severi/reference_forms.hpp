#pragma once

#include <array>
#include <span>
#include <string_view>

// Formulas transcribed character-for-character (modulo TeX markup) from
// their printed form, kept factored. They are only ever compared against
// generated data after expansion, never used to generate it.

namespace severi::reference {

struct PrintedClass {
  std::string_view name;
  std::string_view h;
  std::string_view b;
};

struct PrintedTableRow {
  std::string_view name;
  std::string_view c1;
  std::string_view c2;
};

/// The 16 pushed-forward classes as h * H[n] + b * B[n].
std::span<const PrintedClass> classes();

/// The 15 rows of the moving-curve table (columns C1, C2).
std::span<const PrintedTableRow> table();

/// The 5x5 change-of-basis matrix, row-major.
const std::array<std::array<std::string_view, 5>, 5>& basis_matrix();

}  // namespace severi::reference
