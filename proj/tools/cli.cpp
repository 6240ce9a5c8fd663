#include "cli.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "wcs/expr.hpp"
#include "wcs/parser.hpp"
#include "wcs/verify.hpp"

namespace wcs::cli {

namespace {

constexpr const char* kFamilyLambda = "1";
constexpr const char* kFamilyMu = "2+(1/a)*cos(a*alpha)*sin(a*alpha)";
constexpr const char* kFamilyNu = "2-cos(a*alpha)";

struct ConfigError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

std::vector<int> parse_int_list(const std::string& src) {
  std::vector<int> out;
  std::stringstream ss(src);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      const int v = std::stoi(item, &used);
      if (used != item.size()) throw std::invalid_argument(item);
      out.push_back(v);
    } catch (const std::exception&) {
      throw ConfigError("not an integer list: '" + src + "'");
    }
  }
  if (out.empty()) throw ConfigError("empty integer list");
  return out;
}

std::string with_suffix(const std::string& path, int a) {
  const std::filesystem::path p(path);
  std::filesystem::path out = p.parent_path() / (p.stem().string() + "_a" + std::to_string(a) + p.extension().string());
  return out.string();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw ConfigError("cannot open '" + path + "' for writing");
  f << content;
}

void print_summary(std::ostream& out, const CSReport& r) {
  char buf[256];
  std::snprintf(buf, sizeof(buf), "%6s %18.10f %16.10f %12.8f %14s\n",
                r.a ? std::to_string(*r.a).c_str() : "-", r.integral, r.class_value, r.mod_z,
                to_string(r.verdict).c_str());
  out << buf;
}

void print_header(std::ostream& out) {
  char buf[128];
  std::snprintf(buf, sizeof(buf), "%6s %18s %16s %12s %14s\n", "a", "integral", "class_value", "mod_z", "verdict");
  out << buf;
}

}  // namespace

void RunConfig::validate() const {
  if (command == Command::Verify) return;
  if (family != "paper" && family != "custom") throw ConfigError("--family must be 'paper' or 'custom'");
  const bool any_expr = lambda || mu || nu;
  if (family == "paper") {
    if (any_expr) throw ConfigError("give either --family paper or --lambda/--mu/--nu, not both");
    if (a_values.empty()) throw ConfigError("--family paper needs --a");
    for (int a : a_values)
      if (a == 0) throw ConfigError("--a must be non-zero");
  } else {
    if (!(lambda && mu && nu)) throw ConfigError("a custom metric needs all of --lambda, --mu, --nu");
    if (command == Command::Sweep) throw ConfigError("sweep runs over the built-in family only");
  }
  if (command == Command::Compute && a_values.size() > 1) throw ConfigError("compute takes a single --a");
  if (!density_out.empty() && density_out == report_out) throw ConfigError("output paths must differ");
  cs_config().validate();
}

CSConfig RunConfig::cs_config() const {
  CSConfig c;
  c.s = s;
  c.quadrature.samples = samples;
  c.quadrature.tolerance = tol;
  c.integrality_tolerance = int_tol;
  return c;
}

BergerMetric parse_metric_exprs(const std::string& lambda, const std::string& mu, const std::string& nu, int a) {
  return BergerMetric(parse_expr(lambda), parse_expr(mu), parse_expr(nu), a);
}

void apply_config_json(const nlohmann::json& j, RunConfig& cfg) {
  if (!j.is_object()) throw ConfigError("config must be a JSON object");
  for (const auto& [key, v] : j.items()) {
    try {
      if (key == "family") cfg.family = v.get<std::string>();
      else if (key == "a") cfg.a_values = v.is_array() ? v.get<std::vector<int>>() : std::vector<int>{v.get<int>()};
      else if (key == "lambda") cfg.lambda = v.get<std::string>();
      else if (key == "mu") cfg.mu = v.get<std::string>();
      else if (key == "nu") cfg.nu = v.get<std::string>();
      else if (key == "s") cfg.s = v.get<double>();
      else if (key == "samples") cfg.samples = v.get<int>();
      else if (key == "tol") cfg.tol = v.get<double>();
      else if (key == "int_tol") cfg.int_tol = v.get<double>();
      else if (key == "density_out") cfg.density_out = v.get<std::string>();
      else if (key == "report_out") cfg.report_out = v.get<std::string>();
      else throw ConfigError("unknown config key '" + key + "'");
    } catch (const nlohmann::json::exception& e) {
      throw ConfigError("config key '" + key + "': " + e.what());
    }
  }
}

void write_density_csv(std::ostream& os, const CSReport& rep) {
  os << "alpha,f\r\n";
  char buf[96];
  for (const auto& [alpha, f] : rep.samples) {
    std::snprintf(buf, sizeof(buf), "%.17g,%.17g\r\n", alpha, f);
    os << buf;
  }
}

nlohmann::ordered_json report_json(const CSReport& rep, const std::string& lambda, const std::string& mu,
                                   const std::string& nu) {
  nlohmann::ordered_json j;
  j["integral"] = rep.integral;
  j["class_value"] = rep.class_value;
  j["mod_z"] = rep.mod_z;
  j["nontrivial"] = rep.nontrivial;
  j["verdict"] = to_string(rep.verdict);
  j["s"] = rep.s;
  j["a"] = rep.a ? nlohmann::ordered_json(*rep.a) : nlohmann::ordered_json(nullptr);
  j["max_imag"] = rep.max_imag;
  j["quadrature_n"] = rep.quadrature_n;
  j["alt_class_value"] = rep.alt_class_value;
  j["alt_mod_z"] = rep.alt_mod_z;
  j["metric"] = {{"lambda", lambda}, {"mu", mu}, {"nu", nu}};
  return j;
}

int run(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  try {
    cfg.validate();
    if (cfg.command == RunConfig::Command::Verify) {
      bool ok = true;
      for (const CheckResult& c : run_invariant_suite()) {
        out << (c.passed ? "[PASS] " : "[FAIL] ") << c.name << ": " << c.detail << "\n";
        ok = ok && c.passed;
      }
      return ok ? kOk : kInvariantFailure;
    }

    const CSConfig cs = cfg.cs_config();
    std::vector<std::pair<CSReport, std::array<std::string, 3>>> results;
    if (cfg.family == "paper") {
      for (int a : cfg.a_values) {
        CSReport r = cs_class(reference_family(a), cs);
        results.push_back({std::move(r), {kFamilyLambda, kFamilyMu, kFamilyNu}});
      }
    } else {
      const PeriodicExpr l = parse_expr(*cfg.lambda), m = parse_expr(*cfg.mu), n = parse_expr(*cfg.nu);
      const bool needs_a = l.depends_on_param() || m.depends_on_param() || n.depends_on_param();
      if (needs_a && cfg.a_values.empty()) throw ConfigError("the expressions use 'a' but --a was not given");
      const int a = cfg.a_values.empty() ? 0 : cfg.a_values.front();
      CSReport r = cs_class(BergerMetric(l, m, n, a), cs);
      results.push_back({std::move(r), {*cfg.lambda, *cfg.mu, *cfg.nu}});
    }

    const bool many = cfg.command == RunConfig::Command::Sweep;
    nlohmann::ordered_json reports = nlohmann::ordered_json::array();
    for (const auto& [r, src] : results) {
      reports.push_back(report_json(r, src[0], src[1], src[2]));
      if (!cfg.density_out.empty()) {
        std::ostringstream csv;
        write_density_csv(csv, r);
        write_file(many && r.a ? with_suffix(cfg.density_out, *r.a) : cfg.density_out, csv.str());
      }
    }
    if (!cfg.report_out.empty()) write_file(cfg.report_out, (many ? reports : reports.front()).dump(2) + "\n");

    print_header(out);
    for (const auto& [r, src] : results) print_summary(out, r);
    return kOk;
  } catch (const ConfigError& e) {
    err << "error: " << e.what() << "\n";
    return kConfigError;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kParseError;
  } catch (const PositivityError& e) {
    err << "error: " << e.what() << "\n";
    return kParseError;
  } catch (const EvaluationError& e) {
    err << "error: " << e.what() << "\n";
    return kParseError;
  } catch (const QuadratureError& e) {
    err << "error: " << e.what() << "\n";
    return kNumericalError;
  } catch (const ConventionError& e) {
    err << "error: " << e.what() << "\n";
    return kNumericalError;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kConfigError;
  }
}

int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Chern-Simons class of loop-space frame bundles over S^3 x S^1"};
  app.require_subcommand(1);

  RunConfig cfg;
  std::string family, a_list, lambda, mu, nu, config_path;
  double s = 1.0, tol = 1e-8, int_tol = 1e-3;
  int samples = 4096;
  std::string density_out, report_out;

  std::vector<CLI::App*> subs;
  for (const char* name : {"compute", "sweep"}) {
    CLI::App* sub = app.add_subcommand(name, std::string(name) == std::string("compute")
                                                  ? "integrate the density for one metric"
                                                  : "run the built-in family over several a");
    sub->add_option("--family", family, "paper (built-in family, needs --a) | custom");
    sub->add_option("--a", a_list, "integer parameter (comma list for sweep)");
    sub->add_option("--lambda", lambda, "expression for lambda(alpha)");
    sub->add_option("--mu", mu, "expression for mu(alpha)");
    sub->add_option("--nu", nu, "expression for nu(alpha)");
    sub->add_option("--s", s, "Sobolev parameter (> 1/2)");
    sub->add_option("--samples", samples, "initial quadrature subintervals");
    sub->add_option("--tol", tol, "quadrature tolerance");
    sub->add_option("--int-tol", int_tol, "integrality tolerance for the verdict");
    sub->add_option("--density-out", density_out, "CSV of (alpha, f) samples");
    sub->add_option("--report-out", report_out, "JSON report");
    sub->add_option("--config", config_path, "JSON file mirroring the flags");
    subs.push_back(sub);
  }
  CLI::App* verify = app.add_subcommand("verify", "run the numerical invariant suite");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    std::ostringstream o, er;
    const int code = app.exit(e, o, er);
    out << o.str();
    err << er.str();
    return code == 0 ? kOk : kConfigError;
  }

  if (verify->parsed()) {
    cfg.command = RunConfig::Command::Verify;
    return run(cfg, out, err);
  }
  CLI::App* sub = subs[0]->parsed() ? subs[0] : subs[1];
  cfg.command = sub == subs[0] ? RunConfig::Command::Compute : RunConfig::Command::Sweep;

  try {
    if (!config_path.empty()) {
      std::ifstream f(config_path);
      if (!f) throw ConfigError("cannot read config '" + config_path + "'");
      nlohmann::json j;
      try {
        j = nlohmann::json::parse(f);
      } catch (const nlohmann::json::exception& e) {
        throw ConfigError(std::string("config is not valid JSON: ") + e.what());
      }
      apply_config_json(j, cfg);
    }
    auto given = [sub](const char* flag) { return sub->get_option(flag)->count() > 0; };
    if (given("--family")) cfg.family = family;
    if (given("--a")) cfg.a_values = parse_int_list(a_list);
    if (given("--lambda")) cfg.lambda = lambda;
    if (given("--mu")) cfg.mu = mu;
    if (given("--nu")) cfg.nu = nu;
    if (given("--s")) cfg.s = s;
    if (given("--samples")) cfg.samples = samples;
    if (given("--tol")) cfg.tol = tol;
    if (given("--int-tol")) cfg.int_tol = int_tol;
    if (given("--density-out")) cfg.density_out = density_out;
    if (given("--report-out")) cfg.report_out = report_out;
    if (cfg.family.empty()) cfg.family = (cfg.lambda || cfg.mu || cfg.nu) ? "custom" : "paper";
  } catch (const ConfigError& e) {
    err << "error: " << e.what() << "\n";
    return kConfigError;
  }
  return run(cfg, out, err);
}

}  // namespace wcs::cli
