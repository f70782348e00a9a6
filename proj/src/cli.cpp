#include "singcount/cli.hpp"

#include "singcount/counts.hpp"
#include "singcount/report.hpp"
#include "singcount/target_spec.hpp"
#include "singcount/verify.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <regex>

namespace singcount::cli {

namespace {

using nlohmann::json;

// Input problems (exit 2) are raised as InputError; anything thrown while
// computing is a computation error (exit 3).
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

SingClass require_sing(const std::string& text) {
  auto s = parse_sing_class(text);
  if (!s) throw InputError("unknown singularity '" + text + "' (expected A1, A2 or A3)");
  return *s;
}

std::optional<Route> parse_route(SingClass sing, const std::string& text) {
  if (text.empty()) return std::nullopt;
  if (sing != SingClass::A2) throw InputError("--route only applies to A2");
  if (text == "det") return Route::A2_det;
  if (text == "proj") return Route::A2_proj;
  throw InputError("unknown route '" + text + "' (expected det or proj)");
}

struct LoadedTarget {
  TargetSpec spec;
  TargetPtr target;
};

LoadedTarget load_target(const std::string& text) {
  try {
    TargetSpec spec = parse_target_spec(text);
    TargetPtr target = spec.build();
    return {std::move(spec), std::move(target)};
  } catch (const ParseError& e) {
    throw InputError(e.what());
  } catch (const TargetError& e) {
    throw InputError(e.what());
  } catch (const ContextMismatch& e) {
    throw InputError(e.what());
  }
}

struct ParamRange {
  std::string name;
  long lo = 0;
  long hi = 0;
};

ParamRange parse_range(const std::string& text) {
  static const std::regex pattern(R"(\s*([A-Za-z][A-Za-z0-9_]*)\s*=\s*(-?\d+)\s*\.\.\s*(-?\d+)\s*)");
  std::smatch match;
  if (!std::regex_match(text, match, pattern))
    throw InputError("bad range '" + text + "' (expected name=lo..hi)");
  ParamRange r{match[1], std::stol(match[2]), std::stol(match[3])};
  if (r.lo > r.hi) throw InputError("empty range '" + text + "'");
  return r;
}

void print_checks(std::ostream& out, const CountResult& result) {
  out << "route: " << to_string(result.route) << '\n';
  for (const auto& c : result.checks)
    out << "check " << c.name << ": " << (c.passed ? "pass" : "FAIL") << (c.detail.empty() ? "" : " (" + c.detail + ")")
        << '\n';
  for (const auto& note : result.notes) out << "discrepancy: " << note << '\n';
}

int cmd_count(const std::string& sing_text, const std::string& target_text, const std::string& route_text,
              bool verify_routes, bool as_json, std::ostream& out) {
  SingClass sing = require_sing(sing_text);
  auto route = parse_route(sing, route_text);
  auto loaded = load_target(target_text);
  CountOptions options;
  options.route = route;
  options.cross_check_routes = verify_routes;
  CountResult result = count(sing, *loaded.target, options);
  if (as_json) {
    out << count_to_json(sing, loaded.spec.to_string(), loaded.target->dimension(), result).dump(2) << '\n';
  } else {
    out << result.value.to_string() << '\n';
    print_checks(out, result);
  }
  bool ok = std::all_of(result.checks.begin(), result.checks.end(), [](const Check& c) { return c.passed; });
  return ok ? kOk : kCheckFailed;
}

int cmd_formula(const std::string& sing_text, int dim, const std::string& route_text, bool as_json,
                std::ostream& out) {
  SingClass sing = require_sing(sing_text);
  auto route = parse_route(sing, route_text);
  if (dim < 1) throw InputError("--dim must be >= 1");
  Poly f = formula(sing, dim, route);
  if (as_json) {
    json j = {{"singularity", to_string(sing)},
              {"dimension", dim},
              {"route", to_string(route.value_or(default_route(sing)))},
              {"value", poly_to_json(f)}};
    out << j.dump(2) << '\n';
  } else {
    out << f.to_string() << '\n';
  }
  return kOk;
}

int cmd_verify(int max_dim, const std::string& table_file, bool as_json, std::ostream& out) {
  if (max_dim < 1) throw InputError("--max-dim must be >= 1");
  VerifyOptions options;
  options.max_dim = max_dim;
  if (!table_file.empty()) {
    try {
      options.table = load_table(table_file);
    } catch (const TargetError& e) {
      throw InputError(e.what());
    }
  }
  VerifyReport report = run_verification(options);
  std::size_t failed = std::count_if(report.checks.begin(), report.checks.end(), [](const Check& c) { return !c.passed; });
  if (as_json) {
    json checks = json::array();
    for (const auto& c : report.checks) checks.push_back(check_to_json(c));
    json discrepancies = json::array();
    for (const auto& d : report.discrepancies) discrepancies.push_back(discrepancy_to_json(d));
    json j = {{"max_dim", max_dim},
              {"passed", report.ok()},
              {"checks", std::move(checks)},
              {"discrepancies", std::move(discrepancies)}};
    out << j.dump(2) << '\n';
  } else {
    for (const auto& c : report.checks)
      out << (c.passed ? "PASS " : "FAIL ") << c.name << (c.passed || c.detail.empty() ? "" : ": " + c.detail) << '\n';
    for (const auto& d : report.discrepancies)
      out << "DISCREPANCY " << d.context << ": engine " << d.engine_value.to_string() << ", printed "
          << d.reference_value.to_string() << '\n';
    out << report.checks.size() - failed << "/" << report.checks.size() << " checks passed, "
        << report.discrepancies.size() << " known discrepancies reported\n";
  }
  return report.ok() ? kOk : kCheckFailed;
}

int cmd_table(const std::string& sing_text, const std::string& target_text, const std::vector<std::string>& ranges_text,
              const std::string& route_text, const std::string& format, std::ostream& out) {
  SingClass sing = require_sing(sing_text);
  auto route = parse_route(sing, route_text);
  if (format != "text" && format != "json" && format != "csv")
    throw InputError("unknown format '" + format + "' (expected text, json or csv)");
  auto loaded = load_target(target_text);

  std::vector<ParamRange> ranges;
  const auto params = loaded.spec.parameters();
  std::size_t cells = 1;
  for (const auto& r : ranges_text) {
    ParamRange range = parse_range(r);
    if (std::find(params.begin(), params.end(), range.name) == params.end())
      throw InputError("range parameter '" + range.name + "' does not occur in the target");
    if (std::any_of(ranges.begin(), ranges.end(), [&](const ParamRange& p) { return p.name == range.name; }))
      throw InputError("parameter '" + range.name + "' given twice");
    cells *= static_cast<std::size_t>(range.hi - range.lo + 1);
    if (cells > 1'000'000) throw InputError("table has more than 1000000 cells");
    ranges.push_back(range);
  }

  CountOptions options;
  options.route = route;
  options.compare_references = false;
  CountResult symbolic = count(sing, *loaded.target, options);

  struct Row {
    std::vector<Integer> values;
    Poly value;
  };
  std::vector<Row> rows;
  std::vector<long> current;
  for (const auto& r : ranges) current.push_back(r.lo);
  for (std::size_t n = 0; n < cells; ++n) {
    Poly v = symbolic.value;
    Row row;
    for (std::size_t i = 0; i < ranges.size(); ++i) {
      v = substitute(v, ranges[i].name, Poly(current[i]));
      row.values.emplace_back(current[i]);
    }
    row.value = v;
    rows.push_back(std::move(row));
    // Odometer over the grid, last parameter fastest.
    for (std::size_t i = ranges.size(); i-- > 0;) {
      if (++current[i] <= ranges[i].hi) break;
      current[i] = ranges[i].lo;
    }
  }

  if (format == "json") {
    json jrows = json::array();
    for (const auto& row : rows) {
      json p = json::object();
      for (std::size_t i = 0; i < ranges.size(); ++i) p[ranges[i].name] = row.values[i].get_str();
      jrows.push_back({{"parameters", std::move(p)}, {"value", poly_to_json(row.value)}});
    }
    json j = {{"singularity", to_string(sing)},
              {"target", loaded.spec.to_string()},
              {"route", to_string(symbolic.route)},
              {"formula", poly_to_json(symbolic.value)},
              {"rows", std::move(jrows)}};
    out << j.dump(2) << '\n';
  } else if (format == "csv") {
    for (const auto& r : ranges) out << r.name << ',';
    out << "value\n";
    for (const auto& row : rows) {
      for (const auto& v : row.values) out << v.get_str() << ',';
      std::string value = row.value.to_string();
      if (!row.value.is_constant()) value = '"' + value + '"';
      out << value << '\n';
    }
  } else {
    out << "# " << to_string(sing) << " on " << loaded.spec.to_string() << " = " << symbolic.value.to_string() << '\n';
    for (const auto& row : rows) {
      std::string label;
      for (std::size_t i = 0; i < ranges.size(); ++i)
        label += (i ? " " : "") + ranges[i].name + "=" + row.values[i].get_str();
      out << (label.empty() ? "" : label + "\t") << row.value.to_string() << '\n';
    }
  }
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Counts hypersurfaces with a node, cusp or tacnode in a linear system", "singcount"};
  app.require_subcommand(1);

  std::string sing;
  std::string target;
  std::string route;
  std::string format = "text";
  std::string table_file;
  std::vector<std::string> ranges;
  int dim = 0;
  int max_dim = 5;
  bool as_json = false;
  bool verify_routes = false;

  auto* count_cmd = app.add_subcommand("count", "Count singular hypersurfaces on a target");
  count_cmd->add_option("--sing", sing, "A1, A2 or A3")->required();
  count_cmd->add_option("--target", target, "pm(m=..,d=..), product((m=..,d=..),...), table(file=..), generic(m=..)")
      ->required();
  count_cmd->add_option("--route", route, "A2 only: det (default) or proj");
  count_cmd->add_flag("--verify", verify_routes, "A2 only: also run the other route and compare");
  count_cmd->add_flag("--json", as_json, "JSON output");

  auto* formula_cmd = app.add_subcommand("formula", "Generic count as a polynomial in c1, x1..xm");
  formula_cmd->add_option("--sing", sing, "A1, A2 or A3")->required();
  formula_cmd->add_option("--dim", dim, "dimension m of X")->required();
  formula_cmd->add_option("--route", route, "A2 only: det (default) or proj");
  formula_cmd->add_flag("--json", as_json, "JSON output");

  auto* verify_cmd = app.add_subcommand("verify", "Run the self-verification suite");
  verify_cmd->add_option("--max-dim", max_dim, "largest dimension to check")->capture_default_str();
  verify_cmd->add_option("--table", table_file, "also evaluate a table target file");
  verify_cmd->add_flag("--json", as_json, "JSON output");

  auto* table_cmd = app.add_subcommand("table", "Tabulate a count over a grid of degrees");
  table_cmd->add_option("--sing", sing, "A1, A2 or A3")->required();
  table_cmd->add_option("--target", target, "target with symbolic degrees")->required();
  table_cmd->add_option("--range", ranges, "name=lo..hi (repeatable)");
  table_cmd->add_option("--route", route, "A2 only: det (default) or proj");
  table_cmd->add_option("--format", format, "text, json or csv")->capture_default_str();

  std::vector<std::string> argv_store{"singcount"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& a : argv_store) argv.push_back(a.data());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kOk : kInputError;
  }

  try {
    if (*count_cmd) return cmd_count(sing, target, route, verify_routes, as_json, out);
    if (*formula_cmd) return cmd_formula(sing, dim, route, as_json, out);
    if (*verify_cmd) return cmd_verify(max_dim, table_file, as_json, out);
    if (*table_cmd) return cmd_table(sing, target, ranges, route, format, out);
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  } catch (const std::exception& e) {
    err << "computation error: " << e.what() << '\n';
    return kComputationError;
  }
  return kInputError;
}

}  // namespace singcount::cli
