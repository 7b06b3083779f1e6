#include "severi/enumerate.hpp"

#include <algorithm>
#include <sstream>

#include "severi/errors.hpp"
#include "severi/reference_forms.hpp"

namespace severi {

namespace {

std::vector<TableRow> symbolic_rows(const Catalog& catalog) {
  const CurveClass c1 = moving_curve_c1();
  const CurveClass c2 = moving_curve_c2();
  std::vector<TableRow> rows;
  for (std::string_view name : kTableRows) {
    const HilbClass& cls = catalog.get_class(name);
    rows.push_back({std::string(name), pair_symbolic(c1, cls), pair_symbolic(c2, cls)});
  }
  return rows;
}

}  // namespace

EnumTable build_table(const Catalog& catalog) { return {symbolic_rows(catalog), std::nullopt}; }

EnumTable build_table(const Catalog& catalog, std::int64_t d) {
  const Instance inst = make_instance(d);
  const Bindings at = inst.bindings();
  EnumTable table{symbolic_rows(catalog), inst};
  for (TableRow& row : table.rows) {
    row.c1 = Polynomial(evaluate(row.c1, at));
    row.c2 = Polynomial(evaluate(row.c2, at));
  }
  return table;
}

bool TableCheck::passed() const {
  return !cells.empty() &&
         std::all_of(cells.begin(), cells.end(), [](const CellVerdict& c) { return c.match; });
}

std::size_t TableCheck::matched() const {
  return static_cast<std::size_t>(
      std::count_if(cells.begin(), cells.end(), [](const CellVerdict& c) { return c.match; }));
}

TableCheck verify_table_against_reference(const Catalog& catalog) {
  const EnumTable table = build_table(catalog);
  TableCheck check;
  for (const auto& printed : reference::table()) {
    const auto it = std::find_if(table.rows.begin(), table.rows.end(),
                                 [&](const TableRow& r) { return r.name == printed.name; });
    const Polynomial p1 = parse_polynomial(printed.c1);
    const Polynomial p2 = parse_polynomial(printed.c2);
    if (it == table.rows.end()) {
      check.cells.push_back({std::string(printed.name), "C1", Polynomial(), p1, false});
      check.cells.push_back({std::string(printed.name), "C2", Polynomial(), p2, false});
      continue;
    }
    check.cells.push_back({it->name, "C1", it->c1, p1, it->c1 == p1});
    check.cells.push_back({it->name, "C2", it->c2, p2, it->c2 == p2});
  }
  return check;
}

IntegralityReport integrality_sweep(const Catalog& catalog, std::int64_t d_max) {
  if (d_max < 9) throw DomainError("integrality sweep needs d_max >= 9");
  IntegralityReport report;
  const std::vector<TableRow> rows = symbolic_rows(catalog);
  for (std::int64_t d = 1; d <= d_max; ++d) {
    if (!admissible(d)) continue;
    report.degrees.push_back(d);
    const Bindings at = make_instance(d).bindings();
    for (const TableRow& row : rows) {
      for (const auto& [column, cell] : {std::pair{"C1", &row.c1}, std::pair{"C2", &row.c2}}) {
        const Rational value = evaluate(*cell, at);
        ++report.cells_checked;
        if (!is_integer(value)) report.violations.push_back({d, row.name, column, value});
      }
    }
  }
  return report;
}

std::string to_csv(const EnumTable& table) {
  std::ostringstream out;
  out << "name,c1,c2\n";
  for (const TableRow& row : table.rows)
    out << row.name << ',' << to_string(row.c1) << ',' << to_string(row.c2) << '\n';
  return out.str();
}

std::string to_markdown(const EnumTable& table) {
  std::ostringstream out;
  if (table.instance) {
    const Instance& inst = *table.instance;
    out << "d = " << inst.d << ", n = " << inst.n << ", r = " << inst.r << ", s = " << inst.s
        << "\n\n";
  }
  out << "| class | C1 | C2 |\n|---|---|---|\n";
  for (const TableRow& row : table.rows)
    out << "| " << row.name << " | " << to_string(row.c1) << " | " << to_string(row.c2) << " |\n";
  return out.str();
}

nlohmann::json to_json(const EnumTable& table) {
  nlohmann::json j;
  j["mode"] = table.numeric() ? "numeric" : "symbolic";
  if (table.instance) {
    j["d"] = table.instance->d;
    j["n"] = table.instance->n;
    j["r"] = table.instance->r;
    j["s"] = table.instance->s;
  }
  nlohmann::json rows = nlohmann::json::array();
  for (const TableRow& row : table.rows) {
    if (table.numeric())
      rows.push_back({{"name", row.name},
                      {"c1", to_string(row.c1.constant_term())},
                      {"c2", to_string(row.c2.constant_term())}});
    else
      rows.push_back({{"name", row.name},
                      {"c1", polynomial_to_json(row.c1)},
                      {"c2", polynomial_to_json(row.c2)}});
  }
  j["rows"] = rows;
  return j;
}

EnumTable table_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("mode") || !j.contains("rows") || !j["rows"].is_array())
    throw ParseError("table must be an object with 'mode' and 'rows'");
  const std::string mode = j["mode"].get<std::string>();
  EnumTable table;
  if (mode == "numeric") {
    if (!j.contains("d") || !j["d"].is_number_integer())
      throw ParseError("numeric table lacks integer 'd'");
    table.instance = make_instance(j["d"].get<std::int64_t>());
  } else if (mode != "symbolic") {
    throw ParseError("unknown table mode '" + mode + "'");
  }
  for (const auto& item : j["rows"]) {
    if (!item.is_object() || !item.contains("name") || !item.contains("c1") || !item.contains("c2"))
      throw ParseError("table row needs name, c1 and c2");
    table.rows.push_back({item["name"].get<std::string>(), polynomial_from_json(item["c1"]),
                          polynomial_from_json(item["c2"])});
  }
  if (table.rows.size() != kTableRows.size())
    throw ValidationError("table needs " + std::to_string(kTableRows.size()) + " rows");
  return table;
}

}  // namespace severi
