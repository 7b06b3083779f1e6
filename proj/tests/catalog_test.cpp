#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <gtest/gtest.h>

#include "severi/catalog.hpp"
#include "severi/errors.hpp"
#include "severi/reference_forms.hpp"
#include "severi/verify.hpp"
#include "test_support.hpp"

using namespace severi;
using severi::test::P;
using severi::test::Q;

namespace {

// Fully expanded forms (sympy), kept separate from the factored printed forms.
struct Expanded {
  const char* name;
  const char* h;
  const char* b;
};

constexpr Expanded kExpanded[] = {
    {"TN", "0", "1"},
    {"TR", "0", "0"},
    {"CP", "3*d - 3", "-5/2"},
    {"NL", "1", "0"},
    {"DELTA01", "0", "0"},
    {"CU", "d^3 + 2*d^2 - d - 6", "-5/6*d^2 - 5/2*d - 2"},
    {"TL", "6*d^2 - 12*d + 4", "-5*d + 5"},
    {"FP", "15/2*d^3 - 30*d^2 + 39/2*d + 6", "-25/4*d^2 + 75/4*d"},
    {"FL", "18*d^2 - 36*d + 12", "-15*d + 15"},
    {"FN", "5/2*d^3 + 5*d^2 - 5/2*d - 18", "-25/12*d^2 - 25/4*d - 2"},
    {"NP", "1/2*d^3 + d^2 - 1/2*d - 2", "-5/12*d^2 - 5/4*d"},
    {"HF", "44*d^3 - 272*d^2 + 316*d - 36", "-110/3*d^2 + 190*d - 88"},
    {"BR_N", "d^3 + 2*d^2 - d - 6", "-5/6*d^2 - 5/2*d"},
    {"BR_T", "13*d^3 - 64*d^2 + 53*d + 12", "-65/6*d^2 + 85/2*d - 6"},
    {"BR_F", "78*d^3 - 474*d^2 + 498*d + 12", "-65*d^2 + 330*d - 111"},
    {"K_W", "-3", "0"},
};

std::filesystem::path temp_file(const std::string& name) {
  return std::filesystem::temp_directory_path() / ("severi_catalog_test_" + name + ".json");
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

}  // namespace

TEST(Catalog, GetClassExamples) {
  const Catalog& c = Catalog::builtin();
  EXPECT_EQ(c.get_class("NL"), (HilbClass{1, 0}));
  EXPECT_EQ(c.get_class("HF"),
            (HilbClass{P("4(11d^3-68d^2+79d-9)"), P("-(2/3)(55d^2-285d+132)")}));
  EXPECT_EQ(c.get_class("K_W"), (HilbClass{-3, 0}));
  EXPECT_THROW(c.get_class("XYZ"), UnknownName);
}

TEST(Catalog, ListNames) {
  const auto names = Catalog::builtin().list_names();
  ASSERT_EQ(names.size(), 16u);
  EXPECT_EQ(names.front(), "TN");
  EXPECT_EQ(names.back(), "K_W");
  for (std::size_t i = 0; i < names.size(); ++i) EXPECT_EQ(names[i], kCatalogNames[i]);
  EXPECT_NE(Catalog::builtin().entry("CP").source.find("computed to be (3d-3)H[n] - 5/2 B[n]"),
            std::string::npos);
}

TEST(CatalogGolden, MatchesFactoredPrintedForms) {
  ASSERT_EQ(reference::classes().size(), 16u);
  for (const auto& printed : reference::classes()) {
    const HilbClass expected{parse_polynomial(printed.h), parse_polynomial(printed.b)};
    EXPECT_EQ(Catalog::builtin().get_class(printed.name), expected) << printed.name;
  }
  for (const Check& check : check_catalog_against_reference(Catalog::builtin()))
    EXPECT_TRUE(check.passed) << check.name << ": " << check.detail;
}

TEST(CatalogGolden, MatchesExpandedForms) {
  for (const Expanded& e : kExpanded) {
    const HilbClass& cls = Catalog::builtin().get_class(e.name);
    EXPECT_EQ(to_string(cls.h), e.h) << e.name;
    EXPECT_EQ(to_string(cls.b), e.b) << e.name;
  }
}

TEST(Catalog, StructuralRelations) {
  const Catalog& c = Catalog::builtin();
  EXPECT_EQ(c.get_class("TR"), HilbClass{});
  EXPECT_EQ(c.get_class("DELTA01"), HilbClass{});
  EXPECT_EQ(c.get_class("FL"), Polynomial(3) * c.get_class("TL"));
  EXPECT_EQ(c.get_class("CU").h, c.get_class("BR_N").h);
  for (const NamedClass& e : c.entries()) {
    EXPECT_TRUE(e.cls.h.uses_only({Symbol::d})) << e.name;
    EXPECT_TRUE(e.cls.b.uses_only({Symbol::d})) << e.name;
  }
}

TEST(CatalogFile, ExportImportRoundTrip) {
  const auto path = temp_file("roundtrip");
  export_catalog(Catalog::builtin(), path);
  const Catalog back = import_catalog(path);
  EXPECT_EQ(back, Catalog::builtin());
  EXPECT_EQ(serialize(back), read_file(path));
  std::filesystem::remove(path);
}

TEST(CatalogFile, ExactFractionStrings) {
  const nlohmann::json j = to_json(Catalog::builtin());
  const auto& hf = j["classes"][11];
  EXPECT_EQ(hf["name"], "HF");
  EXPECT_EQ(hf["b"]["d^2"], "-110/3");
  EXPECT_EQ(hf["h"]["d^3"], "44");
  EXPECT_EQ(j["classes"][2]["b"]["1"], "-5/2");
}

TEST(CatalogFile, ImportAcceptsAnyEntryOrder) {
  nlohmann::json j = to_json(Catalog::builtin());
  std::reverse(j["classes"].begin(), j["classes"].end());
  EXPECT_EQ(catalog_from_json(j), Catalog::builtin());
}

TEST(CatalogFile, MissingEntryIsValidationError) {
  nlohmann::json j = to_json(Catalog::builtin());
  j["classes"].erase(15);  // K_W
  try {
    catalog_from_json(j);
    FAIL() << "expected ValidationError";
  } catch (const ValidationError& e) {
    EXPECT_NE(std::string(e.what()).find("K_W"), std::string::npos);
  }
}

TEST(CatalogFile, DuplicateAndUnknownNames) {
  nlohmann::json dup = to_json(Catalog::builtin());
  dup["classes"][15]["name"] = "HF";
  EXPECT_THROW(catalog_from_json(dup), ValidationError);

  nlohmann::json unknown = to_json(Catalog::builtin());
  unknown["classes"][15]["name"] = "XX";
  EXPECT_THROW(catalog_from_json(unknown), ValidationError);

  nlohmann::json extra = to_json(Catalog::builtin());
  extra["classes"].push_back(extra["classes"][0]);
  EXPECT_THROW(catalog_from_json(extra), ValidationError);
}

TEST(CatalogFile, CoefficientsOutsideDAreRejected) {
  nlohmann::json j = to_json(Catalog::builtin());
  j["classes"][0]["h"] = {{"r", "1"}};
  EXPECT_THROW(catalog_from_json(j), ValidationError);
}

TEST(CatalogFile, MalformedInputIsParseError) {
  EXPECT_THROW(parse_catalog("{not json"), ParseError);
  EXPECT_THROW(parse_catalog("[]"), ParseError);
  EXPECT_THROW(parse_catalog(R"({"classes": [{"name": "TN"}]})"), ParseError);
  nlohmann::json j = to_json(Catalog::builtin());
  j["classes"][0]["b"] = {{"1", "1/0"}};
  EXPECT_THROW(catalog_from_json(j), ParseError);
  j["classes"][0]["b"] = {{"1", 1}};
  EXPECT_THROW(catalog_from_json(j), ParseError);
  j["classes"][0]["b"] = {{"2d", "1"}};
  EXPECT_THROW(catalog_from_json(j), ParseError);
}

TEST(CatalogFile, IoErrors) {
  EXPECT_THROW(import_catalog("/nonexistent/dir/catalog.json"), IoError);
  EXPECT_THROW(export_catalog(Catalog::builtin(), "/nonexistent/dir/catalog.json"), IoError);
}

TEST(CatalogFile, EnvironmentOverride) {
  const auto path = temp_file("env");
  nlohmann::json j = to_json(Catalog::builtin());
  j["classes"][11]["h"] = {{"1", "7"}};
  {
    std::ofstream out(path);
    out << j.dump();
  }
  ::setenv("SEVERI_CATALOG", path.c_str(), 1);
  EXPECT_EQ(catalog_from_environment().get_class("HF").h, Polynomial(7));
  ::unsetenv("SEVERI_CATALOG");
  EXPECT_EQ(catalog_from_environment(), Catalog::builtin());
  std::filesystem::remove(path);
}
