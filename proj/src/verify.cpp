#include "severi/verify.hpp"

#include <algorithm>
#include <random>
#include <sstream>

#include "severi/enumerate.hpp"
#include "severi/errors.hpp"
#include "severi/hilbert.hpp"
#include "severi/reference_forms.hpp"

namespace severi {

bool VerifyReport::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.passed; });
}

std::string VerifyReport::render() const {
  std::ostringstream out;
  out << "severi verify (" << (level == VerifyLevel::Fast ? "fast" : "deep") << ")\n";
  std::size_t passed_count = 0;
  for (const Check& c : checks) {
    out << (c.passed ? "PASS " : "FAIL ") << c.name;
    if (!c.detail.empty()) out << ": " << c.detail;
    out << "\n";
    if (c.passed) ++passed_count;
  }
  if (kw_section) out << "\n" << *kw_section << "\n";
  out << "result: " << (passed() ? "PASS" : "FAIL") << " (" << passed_count << "/" << checks.size()
      << " checks)\n";
  return out.str();
}

std::vector<Check> check_catalog_against_reference(const Catalog& catalog) {
  std::vector<Check> checks;
  for (const auto& printed : reference::classes()) {
    const std::string name = "catalog " + std::string(printed.name);
    try {
      const HilbClass expected{parse_polynomial(printed.h), parse_polynomial(printed.b)};
      const HilbClass& actual = catalog.get_class(printed.name);
      if (actual == expected)
        checks.push_back({name, true, ""});
      else
        checks.push_back({name, false, "have " + to_string(actual) + ", expected " +
                                           to_string(expected)});
    } catch (const Error& e) {
      checks.push_back({name, false, e.what()});
    }
  }
  return checks;
}

namespace {

Check table_check(const Catalog& catalog) {
  const TableCheck result = verify_table_against_reference(catalog);
  std::string detail = std::to_string(result.matched()) + "/" +
                       std::to_string(result.cells.size()) + " cells";
  for (const CellVerdict& cell : result.cells)
    if (!cell.match) detail += "; mismatch at " + cell.row + "/" + cell.column;
  return {"table regeneration", result.passed() && result.cells.size() == 30, detail};
}

Check worked_example_check(const Catalog& catalog) {
  const Rational value = pair(moving_curve_c2(), catalog.get_class("HF"), make_instance(9));
  return {"C2 . HF at d=9", value == 2252, "value " + to_string(value) + ", expected 2252"};
}

Polynomial random_d_poly(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> coeff(-9, 9);
  const Polynomial d = Polynomial::variable(Symbol::d);
  return coeff(rng) + coeff(rng) * d + coeff(rng) * d * d;
}

SeveriClass random_div_class(std::mt19937_64& rng) {
  SeveriClass::Coeffs coeffs;
  for (Polynomial& c : coeffs) c = random_d_poly(rng);
  return SeveriClass(Basis::DIV, coeffs);
}

std::vector<Check> pushforward_checks() {
  std::vector<Check> checks;
  std::mt19937_64 rng(20240601);
  std::uniform_int_distribution<int> num(-20, 20);
  std::uniform_int_distribution<int> den(1, 12);
  std::size_t ok = 0;
  constexpr std::size_t kCases = 100;
  for (std::size_t i = 0; i < kCases; ++i) {
    const SeveriClass q = random_div_class(rng);
    const SeveriClass q2 = random_div_class(rng);
    const Rational alpha = make_rational(num(rng), den(rng));
    if (linearity_check(q, q2, alpha)) ++ok;
  }
  checks.push_back({"pushforward linearity", ok == kCases,
                    std::to_string(ok) + "/" + std::to_string(kCases) + " random cases"});

  const Polynomial d = Polynomial::variable(Symbol::d);
  const auto unit = [](std::size_t i) { return pushforward(SeveriClass::unit(Basis::DIV, i)); };
  const HilbClass zero{};
  checks.push_back({"pushforward TR = 0", unit(div::TR) == zero, to_string(unit(div::TR))});
  checks.push_back(
      {"pushforward DELTA01 = 0", unit(div::Delta01) == zero, to_string(unit(div::Delta01))});
  checks.push_back({"pushforward TN = B[n]", unit(div::TN) == HilbClass{0, 1},
                    to_string(unit(div::TN))});
  checks.push_back({"pushforward NL = H[n]", unit(div::NL) == HilbClass{1, 0},
                    to_string(unit(div::NL))});
  checks.push_back({"pushforward CP = (3d-3)H[n] - 5/2 B[n]",
                    unit(div::CP) == HilbClass{3 * d - 3, Polynomial(make_rational(-5, 2))},
                    to_string(unit(div::CP))});
  return checks;
}

Check witness_check(const Catalog& catalog) {
  const HilbClass& kw = catalog.get_class("K_W");
  std::size_t degrees = 0;
  for (std::int64_t d = 1; d <= 99; ++d) {
    if (!admissible(d)) continue;
    ++degrees;
    const auto witness = pseudoeffective_witness(kw, make_instance(d));
    if (!witness || witness->curve != "C1" || witness->value != -3)
      return {"K_W not effective", false,
              "no C1 witness with value -3 at d=" + std::to_string(d)};
  }
  return {"K_W not effective", true,
          "C1 . K_W = -3 at all " + std::to_string(degrees) + " admissible d <= 99"};
}

Check integrality_check(const Catalog& catalog) {
  const IntegralityReport report = integrality_sweep(catalog, 99);
  std::string detail = std::to_string(report.degrees.size()) + " degrees, " +
                       std::to_string(report.cells_checked) + " cells, " +
                       std::to_string(report.violations.size()) + " violations";
  for (const auto& v : report.violations)
    detail += "; d=" + std::to_string(v.d) + " " + v.row + "/" + v.column + " = " +
              to_string(v.value);
  return {"integrality sweep d <= 99", report.violations.empty(), detail};
}

template <class F>
void guarded(std::vector<Check>& checks, const std::string& name, F&& body) {
  try {
    body();
  } catch (const Error& e) {
    checks.push_back({name, false, e.what()});
  }
}

}  // namespace

VerifyReport run_verification(const Catalog& catalog, VerifyLevel level) {
  VerifyReport report{level, {}, std::nullopt};
  auto& checks = report.checks;
  for (Check& c : check_catalog_against_reference(catalog)) checks.push_back(std::move(c));
  guarded(checks, "table regeneration", [&] { checks.push_back(table_check(catalog)); });
  guarded(checks, "C2 . HF at d=9", [&] { checks.push_back(worked_example_check(catalog)); });
  for (Check& c : pushforward_checks()) checks.push_back(std::move(c));
  guarded(checks, "K_W not effective", [&] { checks.push_back(witness_check(catalog)); });
  if (level == VerifyLevel::Deep) {
    guarded(checks, "integrality sweep d <= 99",
            [&] { checks.push_back(integrality_check(catalog)); });
    report.kw_section = kw_diagnostic(30).render();
  }
  return report;
}

}  // namespace severi
