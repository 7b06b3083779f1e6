#include "severi/cli.hpp"

#include <sstream>

#include "CLI11.hpp"
#include "severi/catalog.hpp"
#include "severi/enumerate.hpp"
#include "severi/errors.hpp"
#include "severi/hilbert.hpp"
#include "severi/picard.hpp"
#include "severi/verify.hpp"

namespace severi::cli {

namespace {

struct Options {
  std::string name;
  std::string curve;
  std::string coeffs;
  std::string basis = "DIV";
  std::string convention;
  std::string format;
  std::string level = "fast";
  std::string out_path;
  std::int64_t d = 0;
};

HilbClass at_degree(const HilbClass& cls, std::int64_t d) {
  make_instance(d);
  const Bindings at = {{Symbol::d, Rational(d)}};
  return {partial_evaluate(cls.h, at), partial_evaluate(cls.b, at)};
}

nlohmann::json class_json(const std::string& name, const HilbClass& cls, const std::string& source) {
  nlohmann::json j = {{"name", name}, {"h", polynomial_to_json(cls.h)},
                      {"b", polynomial_to_json(cls.b)}};
  if (!source.empty()) j["source"] = source;
  return j;
}

SeveriClass parse_coefficients(const std::string& text, Basis basis) {
  SeveriClass::Coeffs coeffs;
  std::size_t count = 0;
  std::stringstream in(text);
  for (std::string item; std::getline(in, item, ',');) {
    if (count == kSeveriRank) throw CLI::ValidationError("--coeffs", "expected 5 coefficients");
    coeffs[count++] = parse_polynomial(item);
  }
  if (count != kSeveriRank) throw CLI::ValidationError("--coeffs", "expected 5 coefficients");
  return SeveriClass(basis, coeffs);
}

int cmd_class(const Options& o, const CLI::App& sub, std::ostream& out) {
  const Catalog catalog = catalog_from_environment();
  const NamedClass& entry = catalog.entry(o.name);
  const HilbClass cls = sub.count("--d") ? at_degree(entry.cls, o.d) : entry.cls;
  if (o.format == "json")
    out << class_json(entry.name, cls, entry.source).dump(2) << "\n";
  else
    out << to_string(cls) << "\n";
  return kExitOk;
}

int cmd_push(const Options& o, const CLI::App& sub, std::ostream& out) {
  const Basis basis = o.basis == "DH" ? Basis::DH : Basis::DIV;
  SeveriClass c = parse_coefficients(o.coeffs, basis);
  if (basis == Basis::DH) {
    if (!sub.count("--convention") || !sub.count("--d"))
      throw CLI::ValidationError("push", "--basis DH needs --convention and --d");
    make_instance(o.d);
    c = convert(c, Basis::DIV, *parse_convention(o.convention), Rational(o.d));
  }
  HilbClass cls = pushforward(c);
  if (sub.count("--d")) cls = at_degree(cls, o.d);
  if (o.format == "json")
    out << class_json("push", cls, "").dump(2) << "\n";
  else
    out << to_string(cls) << "\n";
  return kExitOk;
}

int cmd_pair(const Options& o, const CLI::App& sub, std::ostream& out) {
  const Catalog catalog = catalog_from_environment();
  const CurveClass curve = moving_curve(o.curve);
  const HilbClass& cls = catalog.get_class(o.name);
  if (sub.count("--d"))
    out << to_string(pair(curve, cls, make_instance(o.d))) << "\n";
  else
    out << to_string(pair_symbolic(curve, cls)) << "\n";
  return kExitOk;
}

int cmd_table(const Options& o, const CLI::App& sub, std::ostream& out) {
  const Catalog catalog = catalog_from_environment();
  const EnumTable table = sub.count("--d") ? build_table(catalog, o.d) : build_table(catalog);
  if (o.format == "csv")
    out << to_csv(table);
  else if (o.format == "json")
    out << to_json(table).dump(2) << "\n";
  else
    out << to_markdown(table);
  return kExitOk;
}

int cmd_instance(const Options& o, std::ostream& out) {
  const Instance inst = make_instance(o.d);
  if (o.format == "json") {
    const nlohmann::json j = {{"d", inst.d},
                              {"n", inst.n},
                              {"r", inst.r},
                              {"s", inst.s},
                              {"genus", inst.genus},
                              {"cone_certified", inst.cone.member},
                              {"cone_reason", std::string(to_string(inst.cone.reason))}};
    out << j.dump(2) << "\n";
  } else {
    out << "d = " << inst.d << "\nn = " << inst.n << "\nr = " << inst.r << "\ns = " << inst.s
        << "\ngenus = " << inst.genus << "\ncone_certified = " << (inst.cone.member ? "yes" : "no")
        << " (" << to_string(inst.cone.reason) << ")\n";
  }
  return kExitOk;
}

int cmd_verify(const Options& o, std::ostream& out) {
  const Catalog catalog = catalog_from_environment();
  const VerifyReport report =
      run_verification(catalog, o.level == "deep" ? VerifyLevel::Deep : VerifyLevel::Fast);
  out << report.render();
  return report.passed() ? kExitOk : kExitDomain;
}

int cmd_export(const Options& o, const CLI::App& sub, std::ostream& out) {
  const Catalog catalog = catalog_from_environment();
  if (sub.count("--out"))
    export_catalog(catalog, o.out_path);
  else
    out << serialize(catalog);
  return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Divisor classes of nodal-curve loci on the Hilbert scheme of points", "severi"};
  app.require_subcommand(1);

  std::vector<std::string> curve_names = {"C1", "C2"};
  std::vector<std::string> conventions;
  for (Convention c : kAllConventions) conventions.emplace_back(to_string(c));

  auto* cls = app.add_subcommand("class", "Print a named divisor class h*H[n] + b*B[n]");
  cls->add_option("--name", o.name, "Class name (TN, CP, HF, K_W, ...)")->required();
  cls->add_option("--d", o.d, "Evaluate at this admissible degree");
  cls->add_option("--format", o.format)->check(CLI::IsMember({"text", "json"}));

  auto* push = app.add_subcommand("push", "Push a Severi class forward to the Hilbert scheme");
  push->add_option("--coeffs", o.coeffs, "Five comma-separated coefficients (polynomials in d)")
      ->required();
  push->add_option("--basis", o.basis, "Basis of the coefficients")
      ->check(CLI::IsMember({"DIV", "DH"}));
  push->add_option("--convention", o.convention, "Change-of-basis reading for DH input")
      ->check(CLI::IsMember(conventions));
  push->add_option("--d", o.d, "Admissible degree");
  push->add_option("--format", o.format)->check(CLI::IsMember({"text", "json"}));

  auto* pr = app.add_subcommand("pair", "Intersect a moving curve with a named class");
  pr->add_option("--curve", o.curve)->required()->check(CLI::IsMember(curve_names));
  pr->add_option("--class", o.name)->required();
  pr->add_option("--d", o.d, "Admissible degree; symbolic output when omitted");

  auto* table = app.add_subcommand("table", "Intersection numbers of C1, C2 with every class");
  table->add_option("--d", o.d, "Admissible degree; symbolic table when omitted");
  table->add_option("--format", o.format)->check(CLI::IsMember({"md", "csv", "json"}));

  auto* inst = app.add_subcommand("instance", "Show n, r, s and the cone certificate for d");
  inst->add_option("--d", o.d)->required();
  inst->add_option("--format", o.format)->check(CLI::IsMember({"text", "json"}));

  auto* verify = app.add_subcommand("verify", "Run the built-in consistency checks");
  verify->add_option("--level", o.level)->check(CLI::IsMember({"fast", "deep"}));

  auto* exp = app.add_subcommand("export", "Write the active catalog as JSON");
  exp->add_option("--out", o.out_path, "Output file (stdout when omitted)");

  std::vector<const char*> argv;
  argv.reserve(args.size());
  for (const std::string& a : args) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
    if (*cls) return cmd_class(o, *cls, out);
    if (*push) return cmd_push(o, *push, out);
    if (*pr) return cmd_pair(o, *pr, out);
    if (*table) return cmd_table(o, *table, out);
    if (*inst) return cmd_instance(o, out);
    if (*verify) return cmd_verify(o, out);
    if (*exp) return cmd_export(o, *exp, out);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitDomain;
  }
  return kExitUsage;
}

}  // namespace severi::cli
