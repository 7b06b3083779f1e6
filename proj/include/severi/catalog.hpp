#pragma once

#include <array>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "severi/picard.hpp"

namespace severi {

/// Catalog order: the five generators, then the derived classes, then K_W.
inline constexpr std::array<std::string_view, 16> kCatalogNames = {
    "TN", "TR", "CP", "NL", "DELTA01", "CU", "TL", "FP",
    "FL", "FN", "NP", "HF", "BR_N", "BR_T", "BR_F", "K_W"};

struct NamedClass {
  std::string name;
  HilbClass cls;
  std::string source;

  friend bool operator==(const NamedClass&, const NamedClass&) = default;
};

/// The 16 named divisor classes pushed forward to the Hilbert scheme.
/// Immutable once built; construction validates entry count, names and
/// that every coefficient is a polynomial in d.
class Catalog {
 public:
  /// Entries may come in any order; they are stored in kCatalogNames order.
  explicit Catalog(std::vector<NamedClass> entries);

  static const Catalog& builtin();

  /// Throws UnknownName.
  const HilbClass& get_class(std::string_view name) const;
  const NamedClass& entry(std::string_view name) const;
  const std::vector<NamedClass>& entries() const { return entries_; }
  std::vector<std::string> list_names() const;

  friend bool operator==(const Catalog&, const Catalog&) = default;

 private:
  std::vector<NamedClass> entries_;
};

nlohmann::json polynomial_to_json(const Polynomial& p);
/// Accepts a {monomial: fraction} object, or a bare fraction string.
Polynomial polynomial_from_json(const nlohmann::json& j);

nlohmann::json to_json(const Catalog& catalog);
/// ParseError on structural problems, ValidationError on content problems.
Catalog catalog_from_json(const nlohmann::json& j);

/// Pretty-printed JSON, newline terminated.
std::string serialize(const Catalog& catalog);
Catalog parse_catalog(std::string_view text);

void export_catalog(const Catalog& catalog, const std::filesystem::path& path);
Catalog import_catalog(const std::filesystem::path& path);

/// Catalog named by $SEVERI_CATALOG if set, else the built-in one.
Catalog catalog_from_environment();

}  // namespace severi
