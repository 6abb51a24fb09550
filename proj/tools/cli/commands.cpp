#include "cli/commands.hpp"

#include "cli/json_writer.hpp"

#include <qseries/bridgeland.hpp>
#include <qseries/catalan.hpp>
#include <qseries/convergence.hpp>
#include <qseries/error.hpp>
#include <qseries/evaluation.hpp>
#include <qseries/solver.hpp>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <algorithm>
#include <cstdio>
#include <optional>
#include <stdexcept>

namespace qseries::cli {

namespace {

using nlohmann::json;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Envelope {
  std::string command;
  json inputs = json::object();
  json results = json::object();
  bool exact = false;

  json to_json() const {
    return json{{"command", command}, {"inputs", inputs}, {"results", results}, {"exact", exact}};
  }
};

std::string csv_float(double value) {
  if (std::isnan(value)) return "nan";
  if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", value);
  return buf;
}

std::string csv_cell(const json& value) {
  if (value.is_string()) return value.get<std::string>();
  if (value.is_number_float()) return csv_float(value.get<double>());
  if (value.is_null()) return "";
  return value.dump();
}

// key,value rows for the scalar entries of `results`.
void write_key_value_csv(const json& results, std::ostream& out) {
  out << "key,value\n";
  for (const auto& [key, item] : results.items()) {
    out << key << "," << csv_cell(item) << "\n";
  }
}

ExactRational parse_rational_arg(const std::string& name, const std::string& text) {
  try {
    return parse_rational(text);
  } catch (const ParseError& e) {
    throw UsageError("--" + name + ": " + e.what());
  }
}

// Accepts a decimal digit string only, so "-1" or "3.5" are rejected with a usage error.
std::size_t parse_index_arg(const std::string& name, const std::string& text) {
  if (text.empty() || !std::all_of(text.begin(), text.end(), [](char c) { return c >= '0' && c <= '9'; })) {
    throw UsageError(name + " must be a non-negative integer, got '" + text + "'");
  }
  try {
    return static_cast<std::size_t>(std::stoull(text));
  } catch (const std::out_of_range&) {
    throw UsageError(name + " is out of range: '" + text + "'");
  }
}

void emit(const Envelope& envelope, std::ostream& out) {
  write_canonical_json(envelope.to_json(), out);
}

// --- catalan -------------------------------------------------------------

struct CatalanArgs {
  std::string n;
  std::string count = "1";
  std::string mode = "recurrence";
  std::string format = "json";
};

void run_catalan(const CatalanArgs& args, std::ostream& out) {
  const std::size_t n = parse_index_arg("n", args.n);
  const std::size_t count = parse_index_arg("--count", args.count);
  if (count == 0) {
    throw UsageError("--count must be at least 1");
  }

  json values = json::array();
  std::vector<std::string> rendered;
  bool agreement = true;
  for (std::size_t k = n; k < n + count; ++k) {
    ExactInteger value;
    if (args.mode == "closed") {
      value = catalan_closed(k);
    } else {
      value = catalan_recurrence(k);
      if (args.mode == "both") {
        agreement = agreement && value == catalan_closed(k);
      }
    }
    rendered.push_back(to_string(value));
    values.push_back(rendered.back());
  }

  if (args.format == "csv") {
    out << "n,value\n";
    for (std::size_t i = 0; i < rendered.size(); ++i) {
      out << n + i << "," << rendered[i] << "\n";
    }
    return;
  }

  Envelope env;
  env.command = "catalan";
  env.exact = true;
  env.inputs = {{"n", n}, {"count", count}, {"mode", args.mode}};
  env.results["values"] = values;
  if (args.mode == "both") {
    env.results["agreement"] = agreement;
  }
  emit(env, out);
}

// --- series --------------------------------------------------------------

struct SeriesArgs {
  std::string a;
  std::string b;
  std::string order;
  std::string source = "lemma1";
  std::string format = "json";
};

void run_series(const SeriesArgs& args, std::ostream& out) {
  const QuadraticParams params{parse_rational_arg("A", args.a), parse_rational_arg("B", args.b)};
  const std::size_t order = parse_index_arg("--order", args.order);

  const ExactSeries series = args.source == "oracle" ? fixed_point_solve(params.a, params.b, order)
                                                     : lemma1_series(params, order);
  json mismatch = nullptr;
  if (args.source == "both") {
    const OracleComparison cmp = verify_against_oracle(params, order);
    if (cmp.first_mismatch) {
      mismatch = *cmp.first_mismatch;
    }
  }

  if (args.format == "csv") {
    out << "degree,coefficient\n";
    for (std::size_t k = 0; k <= series.order(); ++k) {
      out << k << "," << to_string(series[k]) << "\n";
    }
    return;
  }

  Envelope env;
  env.command = "series";
  env.exact = true;
  env.inputs = {{"A", to_string(params.a)},
                {"B", to_string(params.b)},
                {"order", order},
                {"source", args.source}};
  json coeffs = json::array();
  for (const auto& c : series.coeffs()) {
    coeffs.push_back(to_string(c));
  }
  env.results["coefficients"] = coeffs;
  if (args.source == "both") {
    env.results["mismatch"] = mismatch;
  }
  emit(env, out);
}

// --- radius --------------------------------------------------------------

struct RadiusArgs {
  std::optional<std::string> a, b, m, alpha, e;
  std::string n = "1000";
  std::string format = "json";
};

void run_radius(const RadiusArgs& args, std::ostream& out) {
  const bool quadratic = args.a || args.b;
  const bool geometric = args.m || args.alpha || args.e;
  if (quadratic == geometric) {
    throw UsageError("give exactly one parameter set: --A/--B or --m/--alpha/--e");
  }
  if (quadratic && !(args.a && args.b)) {
    throw UsageError("--A and --B must be given together");
  }
  if (geometric && !(args.m && args.alpha && args.e)) {
    throw UsageError("--m, --alpha and --e must be given together");
  }
  const std::size_t n = parse_index_arg("--n", args.n);
  if (n == 0) {
    throw UsageError("--n must be at least 1");
  }

  Envelope env;
  env.command = "radius";
  env.exact = false;

  QuadraticParams params;
  if (quadratic) {
    params = {parse_rational_arg("A", *args.a), parse_rational_arg("B", *args.b)};
    env.inputs = {{"A", to_string(params.a)}, {"B", to_string(params.b)}, {"n", n}};
  } else {
    const BridgelandParams geo{parse_rational_arg("m", *args.m),
                               parse_rational_arg("alpha", *args.alpha),
                               parse_rational_arg("e", *args.e)};
    env.inputs = {{"m", to_string(geo.m)},
                  {"alpha", to_string(geo.alpha)},
                  {"e", to_string(geo.e)},
                  {"n", n}};
    const ThresholdReport report = threshold(geo);
    params = {report.a, report.b};
    env.results["A"] = to_string(report.a);
    env.results["B"] = to_string(report.b);
    env.results["v_threshold"] = float_value(report.v_threshold);
    env.results["regime_note"] = to_string(report.regime_note);
    env.results["sign_regime"] = sign_regime_check(geo);
  }

  const ConvergenceReport conv = analyze_convergence(params, n);
  env.results["analytic_radius"] = float_value(conv.analytic_radius);
  env.results["n_used"] = conv.n_used;
  env.results["asymptotic_ratio"] = float_value(conv.asymptotic_ratio);
  if (conv.hadamard_estimate) {
    env.results["hadamard_estimate"] = float_value(*conv.hadamard_estimate);
  }
  if (conv.relative_gap) {
    env.results["relative_gap"] = float_value(*conv.relative_gap);
  }

  if (args.format == "csv") {
    write_key_value_csv(env.results, out);
    return;
  }
  emit(env, out);
}

// --- eval ----------------------------------------------------------------

struct EvalArgs {
  std::string a;
  std::string b;
  std::string w;
  std::string order;
  std::string format = "json";
};

void run_eval(const EvalArgs& args, std::ostream& out) {
  const QuadraticParams params{parse_rational_arg("A", args.a), parse_rational_arg("B", args.b)};
  const double w = to_double(parse_rational_arg("w", args.w));
  const std::size_t order = parse_index_arg("--order", args.order);

  const EvalReport report = compare_series_to_closed(params, w, order);

  Envelope env;
  env.command = "eval";
  env.exact = false;
  env.inputs = {{"A", to_string(params.a)},
                {"B", to_string(params.b)},
                {"w", float_value(w)},
                {"order", order}};
  env.results = {{"w", float_value(report.w)},
                 {"series_value", float_value(report.series_value)},
                 {"closed_value", float_value(report.closed_value)},
                 {"abs_error", float_value(report.abs_error)},
                 {"order_used", report.order_used},
                 {"inside_radius", report.inside_radius}};
  if (args.format == "csv") {
    write_key_value_csv(env.results, out);
    return;
  }
  emit(env, out);
}

void add_format_option(CLI::App* cmd, std::string& format) {
  cmd->add_option("--format", format, "Output format")
      ->check(CLI::IsMember({"json", "csv"}))
      ->capture_default_str();
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Power-series solutions of u = (A + B u^2) w and their convergence", "qseries"};
  app.require_subcommand(1);

  CatalanArgs catalan_args;
  auto* catalan_cmd = app.add_subcommand("catalan", "Catalan numbers c_n .. c_{n+count-1}");
  catalan_cmd->add_option("n", catalan_args.n, "Starting index")->required();
  catalan_cmd->add_option("--count", catalan_args.count, "Number of values")->capture_default_str();
  catalan_cmd->add_option("--mode", catalan_args.mode, "recurrence, closed or both")
      ->check(CLI::IsMember({"recurrence", "closed", "both"}))
      ->capture_default_str();
  add_format_option(catalan_cmd, catalan_args.format);

  SeriesArgs series_args;
  auto* series_cmd = app.add_subcommand("series", "Exact series coefficients of u(w)");
  series_cmd->add_option("--A", series_args.a, "A as p/q or decimal")->required();
  series_cmd->add_option("--B", series_args.b, "B as p/q or decimal")->required();
  series_cmd->add_option("--order", series_args.order, "Truncation order N")->required();
  series_cmd->add_option("--source", series_args.source, "lemma1, oracle or both")
      ->check(CLI::IsMember({"lemma1", "oracle", "both"}))
      ->capture_default_str();
  add_format_option(series_cmd, series_args.format);

  RadiusArgs radius_args;
  auto* radius_cmd = app.add_subcommand("radius", "Radius of convergence and v threshold");
  radius_cmd->add_option("--A", radius_args.a, "A as p/q or decimal");
  radius_cmd->add_option("--B", radius_args.b, "B as p/q or decimal");
  radius_cmd->add_option("--m", radius_args.m, "Geometric constant m > 0");
  radius_cmd->add_option("--alpha", radius_args.alpha, "Geometric constant alpha > 0");
  radius_cmd->add_option("--e", radius_args.e, "Minus the self-intersection of the section");
  radius_cmd->add_option("--n", radius_args.n, "Coefficient index for the Hadamard estimate")
      ->capture_default_str();
  add_format_option(radius_cmd, radius_args.format);

  EvalArgs eval_args;
  auto* eval_cmd = app.add_subcommand("eval", "Compare the partial sum with the closed-form branch");
  eval_cmd->add_option("--A", eval_args.a, "A as p/q or decimal")->required();
  eval_cmd->add_option("--B", eval_args.b, "B as p/q or decimal")->required();
  eval_cmd->add_option("--w", eval_args.w, "Evaluation point")->required();
  eval_cmd->add_option("--order", eval_args.order, "Truncation order N")->required();
  add_format_option(eval_cmd, eval_args.format);

  // CLI11 wants argv order reversed.
  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kUsageError;
  }

  try {
    if (catalan_cmd->parsed()) {
      run_catalan(catalan_args, out);
    } else if (series_cmd->parsed()) {
      run_series(series_args, out);
    } else if (radius_cmd->parsed()) {
      run_radius(radius_args, out);
    } else if (eval_cmd->parsed()) {
      run_eval(eval_args, out);
    }
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return kUsageError;
  } catch (const DomainError& e) {
    err << "domain error: " << e.what() << "\n";
    return kDomainError;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kInternalError;
  }
  return kSuccess;
}

}  // namespace qseries::cli
