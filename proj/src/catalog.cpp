#include "severi/catalog.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <utility>

#include "severi/errors.hpp"

namespace severi {

namespace {

using Coeffs = std::initializer_list<std::pair<unsigned, Rational>>;

// Expanded polynomial in d from (exponent, coefficient) pairs.
Polynomial in_d(Coeffs coeffs) {
  Polynomial p;
  for (const auto& [exp, coeff] : coeffs) p += Polynomial::term({exp, 0, 0, 0}, coeff);
  return p;
}

Rational q(long long num, long long den = 1) { return make_rational(num, den); }

constexpr std::string_view kGenerator = "pushforward of a generator of Pic(W)";
constexpr std::string_view kDerived =
    "DH-basis class on W converted to the divisor basis and pushed forward";

std::vector<NamedClass> builtin_entries() {
  const std::string generator(kGenerator);
  const std::string derived(kDerived);
  return {
      {"TN", {in_d({}), in_d({{0, q(1)}})}, generator + "; image is the Hilbert-Chow exceptional divisor"},
      {"TR", {in_d({}), in_d({})}, generator + "; contracted"},
      {"CP",
       {in_d({{1, q(3)}, {0, q(-3)}}), in_d({{0, q(-5, 2)}})},
       generator + "; class computed to be (3d-3)H[n] - 5/2 B[n] as a Severi divisor"},
      {"NL", {in_d({{0, q(1)}}), in_d({})}, generator + "; image is the locus meeting a fixed line"},
      {"DELTA01", {in_d({}), in_d({})}, generator + "; contracted"},
      {"CU",
       {in_d({{3, q(1)}, {2, q(2)}, {1, q(-1)}, {0, q(-6)}}),
        in_d({{2, q(-5, 6)}, {1, q(-5, 2)}, {0, q(-2)}})},
       derived},
      {"TL",
       {in_d({{2, q(6)}, {1, q(-12)}, {0, q(4)}}), in_d({{1, q(-5)}, {0, q(5)}})},
       derived},
      {"FP",
       {in_d({{3, q(15, 2)}, {2, q(-30)}, {1, q(39, 2)}, {0, q(6)}}),
        in_d({{2, q(-25, 4)}, {1, q(75, 4)}})},
       derived},
      {"FL",
       {in_d({{2, q(18)}, {1, q(-36)}, {0, q(12)}}), in_d({{1, q(-15)}, {0, q(15)}})},
       derived},
      {"FN",
       {in_d({{3, q(5, 2)}, {2, q(5)}, {1, q(-5, 2)}, {0, q(-18)}}),
        in_d({{2, q(-25, 12)}, {1, q(-25, 4)}, {0, q(-2)}})},
       derived},
      {"NP",
       {in_d({{3, q(1, 2)}, {2, q(1)}, {1, q(-1, 2)}, {0, q(-2)}}),
        in_d({{2, q(-5, 12)}, {1, q(-5, 4)}})},
       derived},
      {"HF",
       {in_d({{3, q(44)}, {2, q(-272)}, {1, q(316)}, {0, q(-36)}}),
        in_d({{2, q(-110, 3)}, {1, q(190)}, {0, q(-88)}})},
       derived},
      {"BR_N",
       {in_d({{3, q(1)}, {2, q(2)}, {1, q(-1)}, {0, q(-6)}}),
        in_d({{2, q(-5, 6)}, {1, q(-5, 2)}})},
       derived},
      {"BR_T",
       {in_d({{3, q(13)}, {2, q(-64)}, {1, q(53)}, {0, q(12)}}),
        in_d({{2, q(-65, 6)}, {1, q(85, 2)}, {0, q(-6)}})},
       derived},
      {"BR_F",
       {in_d({{3, q(78)}, {2, q(-474)}, {1, q(498)}, {0, q(12)}}),
        in_d({{2, q(-65)}, {1, q(330)}, {0, q(-111)}})},
       derived},
      {"K_W", {in_d({{0, q(-3)}}), in_d({})},
       "canonical class of W pushed forward; equals the canonical class of the Hilbert scheme"},
  };
}

std::size_t catalog_index(std::string_view name) {
  const auto it = std::find(kCatalogNames.begin(), kCatalogNames.end(), name);
  return static_cast<std::size_t>(it - kCatalogNames.begin());
}

}  // namespace

Catalog::Catalog(std::vector<NamedClass> entries) : entries_(std::move(entries)) {
  for (const NamedClass& e : entries_) {
    if (catalog_index(e.name) == kCatalogNames.size())
      throw ValidationError("unknown class name '" + e.name + "'");
    if (!e.cls.h.uses_only({Symbol::d}) || !e.cls.b.uses_only({Symbol::d}))
      throw ValidationError("class '" + e.name + "' has coefficients outside Q[d]");
  }
  std::sort(entries_.begin(), entries_.end(), [](const NamedClass& a, const NamedClass& b) {
    return catalog_index(a.name) < catalog_index(b.name);
  });
  for (std::size_t i = 1; i < entries_.size(); ++i)
    if (entries_[i].name == entries_[i - 1].name)
      throw ValidationError("duplicate class name '" + entries_[i].name + "'");
  if (entries_.size() != kCatalogNames.size()) {
    std::string missing;
    for (std::string_view name : kCatalogNames) {
      const bool present = std::any_of(entries_.begin(), entries_.end(),
                                       [&](const NamedClass& e) { return e.name == name; });
      if (!present) missing += (missing.empty() ? "" : ", ") + std::string(name);
    }
    throw ValidationError("catalog needs exactly " + std::to_string(kCatalogNames.size()) +
                          " entries, got " + std::to_string(entries_.size()) +
                          (missing.empty() ? "" : "; missing " + missing));
  }
}

const Catalog& Catalog::builtin() {
  static const Catalog catalog(builtin_entries());
  return catalog;
}

const NamedClass& Catalog::entry(std::string_view name) const {
  const auto it = std::find_if(entries_.begin(), entries_.end(),
                               [&](const NamedClass& e) { return e.name == name; });
  if (it == entries_.end()) {
    std::string known;
    for (std::string_view n : kCatalogNames) known += (known.empty() ? "" : ", ") + std::string(n);
    throw UnknownName("unknown class '" + std::string(name) + "' (known: " + known + ")");
  }
  return *it;
}

const HilbClass& Catalog::get_class(std::string_view name) const { return entry(name).cls; }

std::vector<std::string> Catalog::list_names() const {
  std::vector<std::string> names;
  names.reserve(entries_.size());
  for (const NamedClass& e : entries_) names.push_back(e.name);
  return names;
}

nlohmann::json polynomial_to_json(const Polynomial& p) {
  nlohmann::json j = nlohmann::json::object();
  for (const auto& [mono, coeff] : p.terms()) j[to_string(mono)] = to_string(coeff);
  return j;
}

Polynomial polynomial_from_json(const nlohmann::json& j) {
  if (j.is_string()) return Polynomial(parse_rational(j.get<std::string>()));
  if (!j.is_object()) throw ParseError("polynomial must be an object of monomial: fraction");
  Polynomial p;
  for (const auto& [key, value] : j.items()) {
    if (!value.is_string()) throw ParseError("coefficient of '" + key + "' must be a string");
    p += Polynomial::term(parse_monomial(key), parse_rational(value.get<std::string>()));
  }
  return p;
}

nlohmann::json to_json(const Catalog& catalog) {
  nlohmann::json entries = nlohmann::json::array();
  for (const NamedClass& e : catalog.entries()) {
    entries.push_back({{"name", e.name},
                       {"h", polynomial_to_json(e.cls.h)},
                       {"b", polynomial_to_json(e.cls.b)},
                       {"source", e.source}});
  }
  return {{"classes", entries}};
}

Catalog catalog_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("classes") || !j["classes"].is_array())
    throw ParseError("catalog must be an object with a 'classes' array");
  std::vector<NamedClass> entries;
  for (const auto& item : j["classes"]) {
    if (!item.is_object()) throw ParseError("catalog entry must be an object");
    for (const char* field : {"name", "h", "b", "source"})
      if (!item.contains(field)) throw ParseError(std::string("catalog entry lacks '") + field + "'");
    if (!item["name"].is_string() || !item["source"].is_string())
      throw ParseError("catalog entry name and source must be strings");
    entries.push_back({item["name"].get<std::string>(),
                       {polynomial_from_json(item["h"]), polynomial_from_json(item["b"])},
                       item["source"].get<std::string>()});
  }
  return Catalog(std::move(entries));
}

std::string serialize(const Catalog& catalog) { return to_json(catalog).dump(2) + "\n"; }

Catalog parse_catalog(std::string_view text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("catalog is not valid JSON: ") + e.what());
  }
  return catalog_from_json(j);
}

void export_catalog(const Catalog& catalog, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open '" + path.string() + "' for writing");
  out << serialize(catalog);
  if (!out) throw IoError("write to '" + path.string() + "' failed");
}

Catalog import_catalog(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open '" + path.string() + "' for reading");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_catalog(buffer.str());
}

Catalog catalog_from_environment() {
  const char* path = std::getenv("SEVERI_CATALOG");
  if (path == nullptr || *path == '\0') return Catalog::builtin();
  return import_catalog(path);
}

}  // namespace severi
