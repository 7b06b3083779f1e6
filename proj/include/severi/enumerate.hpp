#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "severi/catalog.hpp"
#include "severi/hilbert.hpp"

namespace severi {

/// Table rows: every catalog class except K_W, in catalog order.
inline constexpr std::array<std::string_view, 15> kTableRows = {
    "TN", "TR", "CP", "NL", "DELTA01", "CU", "TL", "FP",
    "FL", "FN", "NP", "HF", "BR_N", "BR_T", "BR_F"};

struct TableRow {
  std::string name;
  Polynomial c1;
  Polynomial c2;

  friend bool operator==(const TableRow&, const TableRow&) = default;
};

/// Intersection numbers of C1 and C2 with each class. Symbolic entries are
/// polynomials in d, n, r; numeric entries are constants at one instance.
struct EnumTable {
  std::vector<TableRow> rows;
  std::optional<Instance> instance;

  bool numeric() const { return instance.has_value(); }
};

EnumTable build_table(const Catalog& catalog);
/// Throws NotAdmissible.
EnumTable build_table(const Catalog& catalog, std::int64_t d);

struct CellVerdict {
  std::string row;
  std::string column;  // "C1" or "C2"
  Polynomial generated;
  Polynomial printed;
  bool match;
};

struct TableCheck {
  std::vector<CellVerdict> cells;

  bool passed() const;
  std::size_t matched() const;
};

/// Compares every generated symbolic cell to the transcribed printed table
/// after expansion.
TableCheck verify_table_against_reference(const Catalog& catalog);

struct IntegralityViolation {
  std::int64_t d;
  std::string row;
  std::string column;
  Rational value;
};

struct IntegralityReport {
  std::vector<std::int64_t> degrees;
  std::size_t cells_checked = 0;
  std::vector<IntegralityViolation> violations;
};

/// Evaluates all 30 cells at every admissible d <= d_max. d_max must be >= 9.
IntegralityReport integrality_sweep(const Catalog& catalog, std::int64_t d_max = 99);

std::string to_csv(const EnumTable& table);
std::string to_markdown(const EnumTable& table);
nlohmann::json to_json(const EnumTable& table);
EnumTable table_from_json(const nlohmann::json& j);

}  // namespace severi
