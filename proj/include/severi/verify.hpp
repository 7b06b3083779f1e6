#pragma once

#include <optional>
#include <string>
#include <vector>

#include "severi/catalog.hpp"

namespace severi {

enum class VerifyLevel { Fast, Deep };

struct Check {
  std::string name;
  bool passed;
  std::string detail;
};

struct VerifyReport {
  VerifyLevel level;
  std::vector<Check> checks;
  /// Informational K_W section (deep only); never affects passed().
  std::optional<std::string> kw_section;

  bool passed() const;
  std::string render() const;
};

/// Each catalog class against its transcribed printed form, after expansion.
std::vector<Check> check_catalog_against_reference(const Catalog& catalog);

/// fast: catalog fidelity, table regeneration, the d = 9 hyperflex count,
/// pushforward properties and the K_W witness.
/// deep: additionally the integrality sweep to d = 99 and the K_W diagnostic.
VerifyReport run_verification(const Catalog& catalog, VerifyLevel level);

}  // namespace severi
