// Command-line front door: evaluate library functions, tabulate curves to
// CSV/JSON, run telegraph simulations, and execute the verification suite.

#include <algorithm>
#include <charconv>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <map>
#include <ostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "contbinom/catalan.hpp"
#include "contbinom/cbinom.hpp"
#include "contbinom/discrete.hpp"
#include "contbinom/distribution.hpp"
#include "contbinom/telegraph.hpp"
#include "contbinom/verify.hpp"

namespace {

using ArgMap = std::map<std::string, double>;

struct EvalFunction {
  std::vector<std::string> params;
  double (*fn)(const ArgMap&);
};

// Shortest decimal that round-trips; keeps CSV output locale-independent and
// bit-identical across runs.
std::string format_double(double v) {
  char buf[64];
  auto [end, ec] = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, end);
}

const std::map<std::string, EvalFunction>& eval_registry() {
  using namespace contbinom;
  static const std::map<std::string, EvalFunction> registry = {
      {"cbinom", {{"x", "s"}, [](const ArgMap& a) { return cbinom(a.at("x"), a.at("s")); }}},
      {"catalan", {{"x", "y"}, [](const ArgMap& a) { return catalan(a.at("x"), a.at("y")); }}},
      {"central_binomial", {{"s"}, [](const ArgMap& a) { return central_binomial(a.at("s")); }}},
      {"cbinom_exp_integral",
       {{"x", "alpha", "u"},
        [](const ArgMap& a) { return cbinom_exp_integral(a.at("x"), a.at("alpha"), a.at("u")); }}},
      {"polytope_volume",
       {{"n", "x", "y"},
        [](const ArgMap& a) {
          return polytope_volume(static_cast<int>(a.at("n")), CatalanPoint(a.at("x"), a.at("y")));
        }}},
      {"catalan_laplace", {{"s"}, [](const ArgMap& a) { return catalan_laplace(a.at("s")); }}},
      {"semicircle_mgf", {{"x"}, [](const ArgMap& a) { return semicircle_mgf(a.at("x")); }}},
      {"catalan_gf_bridge", {{"x"}, [](const ArgMap& a) { return catalan_gf_bridge(a.at("x")); }}},
      {"normalization",
       {{"x", "p"}, [](const ArgMap& a) { return normalization(a.at("x"), a.at("p")); }}},
      {"pdf",
       {{"x", "p", "s"},
        [](const ArgMap& a) { return ContinuousBinomial(a.at("x"), a.at("p")).pdf(a.at("s")); }}},
      {"mgf",
       {{"x", "p", "u"},
        [](const ArgMap& a) { return ContinuousBinomial(a.at("x"), a.at("p")).mgf(a.at("u")); }}},
      {"cdf",
       {{"x", "p", "s"},
        [](const ArgMap& a) { return ContinuousBinomial(a.at("x"), a.at("p")).cdf(a.at("s")); }}},
      {"quantile",
       {{"x", "p", "q"},
        [](const ArgMap& a) {
          return ContinuousBinomial(a.at("x"), a.at("p")).quantile(a.at("q"));
        }}},
      {"moment_symmetric",
       {{"x", "k"},
        [](const ArgMap& a) { return moment_symmetric(a.at("x"), static_cast<int>(a.at("k"))); }}},
      {"density",
       {{"c", "lambda", "t", "s"},
        [](const ArgMap& a) {
          return density({a.at("c"), a.at("lambda"), a.at("t"), 0}, a.at("s"));
        }}},
      {"discrete_catalan",
       {{"n"},
        [](const ArgMap& a) {
          return static_cast<double>(discrete_catalan(static_cast<int>(a.at("n"))));
        }}},
  };
  return registry;
}

// "name=value" tokens -> map, validated against the function's parameter list.
ArgMap parse_args(const EvalFunction& fn, const std::vector<std::string>& tokens) {
  ArgMap args;
  for (const auto& tok : tokens) {
    const auto eq = tok.find('=');
    if (eq == std::string::npos)
      throw CLI::ValidationError("arguments must be name=value, got '" + tok + "'");
    args[tok.substr(0, eq)] = std::stod(tok.substr(eq + 1));
  }
  for (const auto& p : fn.params)
    if (!args.count(p)) throw CLI::ValidationError("missing argument '" + p + "'");
  if (args.size() != fn.params.size())
    throw CLI::ValidationError("unexpected extra arguments");
  return args;
}

struct OutputTarget {
  std::ofstream file;
  std::ostream& stream(const std::string& path) {
    if (path.empty() || path == "-") return std::cout;
    file.open(path, std::ios::binary);  // binary: LF line endings everywhere
    if (!file) throw CLI::ValidationError("cannot open output file: " + path);
    return file;
  }
};

int run(int argc, char** argv) {
  CLI::App app{"Continuous binomial coefficients, continuous Catalan numbers, the continuous "
               "binomial distribution, and the Goldstein-Kac telegraph process"};
  app.require_subcommand(1);

  // --- eval ---
  auto* eval_cmd = app.add_subcommand("eval", "Evaluate a registry function at one point");
  std::string eval_fn;
  std::vector<std::string> eval_args;
  eval_cmd->add_option("function", eval_fn, "Function name")->required();
  eval_cmd->add_option("args", eval_args, "Arguments as name=value");

  // --- table ---
  auto* table_cmd = app.add_subcommand("table", "Tabulate a function over a swept variable");
  std::string table_fn, sweep_var, table_output = "-", table_format = "csv";
  std::vector<std::string> table_args;
  double sweep_start = 0.0, sweep_stop = 1.0;
  unsigned sweep_steps = 100;
  table_cmd->add_option("function", table_fn, "Function name")->required();
  table_cmd->add_option("args", table_args, "Fixed arguments as name=value");
  table_cmd->add_option("--sweep", sweep_var, "Variable to sweep")->required();
  table_cmd->add_option("--start", sweep_start, "Sweep start")->required();
  table_cmd->add_option("--stop", sweep_stop, "Sweep stop")->required();
  table_cmd->add_option("--steps", sweep_steps, "Number of steps (>= 2)");
  table_cmd->add_option("--output", table_output, "Output path (default stdout)");
  table_cmd->add_option("--format", table_format, "csv or json")
      ->check(CLI::IsMember({"csv", "json"}));

  // --- simulate ---
  auto* sim_cmd = app.add_subcommand("simulate", "Simulate telegraph process paths");
  double sim_c = 1.0, sim_lambda = 1.0, sim_t = 1.0;
  std::int64_t sim_seed = 0;
  std::uint64_t sim_count = 1;
  std::string sim_output = "-", switch_times_path;
  sim_cmd->add_option("--c", sim_c, "Speed")->required();
  sim_cmd->add_option("--lambda", sim_lambda, "Poisson switching rate")->required();
  sim_cmd->add_option("--t", sim_t, "Time horizon")->required();
  sim_cmd->add_option("--seed", sim_seed, "RNG seed");
  sim_cmd->add_option("--count", sim_count, "Number of paths")->check(CLI::PositiveNumber);
  sim_cmd->add_option("--output", sim_output, "Sample CSV path (default stdout)");
  sim_cmd->add_option("--switch-times", switch_times_path,
                      "Also write per-path switch times (ragged CSV)");

  // --- verify ---
  auto* verify_cmd = app.add_subcommand("verify", "Run identity checks");
  std::vector<std::string> selection;
  std::string verify_format = "text";
  bool list_checks = false;
  verify_cmd->add_option("checks", selection, "Check names (default: all)");
  verify_cmd->add_option("--format", verify_format, "text or json")
      ->check(CLI::IsMember({"text", "json"}));
  verify_cmd->add_flag("--list", list_checks, "List available check names and exit");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;  // --help is a ParseError with code 0
  }

  if (*eval_cmd) {
    const auto it = eval_registry().find(eval_fn);
    if (it == eval_registry().end()) throw CLI::ValidationError("unknown function: " + eval_fn);
    const double value = it->second.fn(parse_args(it->second, eval_args));
    std::printf("%.15g\n", value);
    return 0;
  }

  if (*table_cmd) {
    const auto it = eval_registry().find(table_fn);
    if (it == eval_registry().end()) throw CLI::ValidationError("unknown function: " + table_fn);
    if (sweep_steps < 2) throw CLI::ValidationError("--steps must be >= 2");
    if (!(sweep_stop > sweep_start)) throw CLI::ValidationError("degenerate sweep range");
    const auto& params = it->second.params;
    if (std::find(params.begin(), params.end(), sweep_var) == params.end())
      throw CLI::ValidationError("'" + sweep_var + "' is not a parameter of " + table_fn);
    ArgMap args;
    for (const auto& tok : table_args) {
      const auto eq = tok.find('=');
      if (eq == std::string::npos)
        throw CLI::ValidationError("arguments must be name=value, got '" + tok + "'");
      args[tok.substr(0, eq)] = std::stod(tok.substr(eq + 1));
    }
    if (args.count(sweep_var)) throw CLI::ValidationError("swept variable must not be fixed");
    for (const auto& p : params)
      if (p != sweep_var && !args.count(p))
        throw CLI::ValidationError("missing argument '" + p + "'");
    if (args.size() + 1 != params.size()) throw CLI::ValidationError("unexpected extra arguments");
    OutputTarget target;
    std::ostream& os = target.stream(table_output);
    if (table_format == "csv") os << sweep_var << ",value\n";
    for (unsigned i = 0; i <= sweep_steps; ++i) {
      const double v = sweep_start + (sweep_stop - sweep_start) * i / sweep_steps;
      args[sweep_var] = v;
      const double value = it->second.fn(args);
      if (table_format == "csv")
        os << format_double(v) << "," << format_double(value) << "\n";
      else
        os << "{\"" << sweep_var << "\":" << format_double(v) << ",\"value\":"
           << format_double(value) << "}\n";
    }
    return 0;
  }

  if (*sim_cmd) {
    const contbinom::TelegraphConfig cfg{sim_c, sim_lambda, sim_t, sim_seed};
    std::vector<std::vector<double>> switch_times;
    const auto samples = contbinom::simulate(
        cfg, sim_count, switch_times_path.empty() ? nullptr : &switch_times);

    OutputTarget target;
    std::ostream& os = target.stream(sim_output);
    os << "kind,position,switch_count\n";
    double mean = 0.0;
    std::size_t atoms = 0;
    for (const auto& s : samples) {
      os << contbinom::to_string(s.kind) << "," << format_double(s.position) << ","
         << s.switch_count << "\n";
      mean += s.position;
      if (s.kind != contbinom::TelegraphKind::Continuous) ++atoms;
    }
    mean /= static_cast<double>(samples.size());

    if (!switch_times_path.empty()) {
      std::ofstream st(switch_times_path, std::ios::binary);
      if (!st) throw CLI::ValidationError("cannot open output file: " + switch_times_path);
      for (const auto& row : switch_times) {
        for (std::size_t i = 0; i < row.size(); ++i) st << (i ? "," : "") << format_double(row[i]);
        st << "\n";
      }
    }
    std::fprintf(stderr, "atom_fraction=%.6g sample_mean=%.6g\n",
                 static_cast<double>(atoms) / static_cast<double>(samples.size()), mean);
    return 0;
  }

  if (*verify_cmd) {
    if (list_checks) {
      for (const auto& c : contbinom::all_checks()) std::cout << c.name << "\n";
      return 0;
    }
    std::vector<contbinom::IdentityReport> reports;
    try {
      reports = contbinom::run_verification_suite(selection);
    } catch (const std::invalid_argument& e) {
      std::cerr << "error: " << e.what() << "\n";
      return 2;
    }
    if (verify_format == "json")
      contbinom::write_reports_jsonl(std::cout, reports);
    else
      contbinom::write_reports_text(std::cout, reports);
    bool all_passed = true;
    for (const auto& r : reports) all_passed = all_passed && r.passed;
    return all_passed ? 0 : 1;
  }

  return 2;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const CLI::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
