// ddetest: entropy-based goodness-of-fit tests from the command line.
//
//   ddetest test      --family gamma --data waits.csv [--nboot 1000 --seed 1 --out r.json]
//   ddetest simulate  --null normal --alt standard --n 50,100 --reps 200 --out results/
//   ddetest entropy   --data x.csv --family exponential | --kde --null-family gamma
//   ddetest datasets
//
// Exit codes: 0 ok, 2 usage, 3 data, 4 fit, 5 numeric.

#include <chrono>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "dde/bandwidth.hpp"
#include "dde/dataset.hpp"
#include "dde/dde_test.hpp"
#include "dde/entropy.hpp"
#include "dde/error.hpp"
#include "dde/families.hpp"
#include "dde/montecarlo.hpp"
#include "dde/parallel.hpp"
#include "dde/report.hpp"

namespace {

using namespace dde;

constexpr std::uint64_t kDefaultSeed = 20240917;

std::string g6(double x) {
  std::ostringstream s;
  s << std::setprecision(6) << x;
  return s.str();
}

Family family_arg(const std::string& name, bool require_testable) {
  const auto f = parse_family(name);
  if (!f) throw invalid_argument("unknown family '" + name + "'");
  if (require_testable && !info(*f).testable) {
    throw invalid_argument("'" + name + "' cannot be used as a null family");
  }
  return *f;
}

// "name:p1,p2,..." as a generator spec.
FittedModel model_arg(const std::string& text) {
  const auto colon = text.find(':');
  const Family f = family_arg(text.substr(0, colon), false);
  if (colon == std::string::npos) throw invalid_argument("alternative '" + text + "' needs parameters, e.g. cauchy:0,1");
  std::vector<double> theta;
  std::stringstream in(text.substr(colon + 1));
  for (std::string tok; std::getline(in, tok, ',');) {
    try {
      std::size_t used = 0;
      theta.push_back(std::stod(tok, &used));
      if (used != tok.size()) throw std::invalid_argument(tok);
    } catch (const std::exception&) {
      throw invalid_argument("bad parameter '" + tok + "' in '" + text + "'");
    }
  }
  return make_model(f, std::move(theta));
}

void write_file(const std::filesystem::path& path, const std::string& text) {
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  std::ofstream out(path, std::ios::binary);
  if (!out) throw data_error("cannot write '" + path.string() + "'");
  out << text;
}

std::string utc_now() {
  const auto t = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::ostringstream s;
  s << std::put_time(std::gmtime(&t), "%Y-%m-%dT%H:%M:%SZ");
  return s.str();
}

void print_bandwidth(const BandwidthSpec& bw) {
  std::cout << "  bandwidth   h = " << g6(bw.h) << "  (c = " << g6(bw.c) << ", k_n = " << g6(bw.k_n)
            << ", " << (bw.scale == Scale::Log ? "ln scale" : "raw scale") << ")\n"
            << "  regime      " << regime_name(bw.regime) << "  (kappa_hat = " << g6(bw.shape.kappa_hat)
            << ", skew_hat = " << g6(bw.shape.skew_hat) << ", kappa0 = " << g6(bw.shape.kappa0)
            << ", sigma_hat = " << g6(bw.shape.sigma_hat) << ")\n";
}

struct TestArgs {
  std::string family;
  std::string data;
  std::string column;
  double alpha = 0.05;
  std::size_t n_boot = 1000;
  std::uint64_t seed = kDefaultSeed;
  unsigned threads = 0;
  std::string out;
  std::string fit_method = "mle";
  bool timestamp = false;
};

int cmd_test(const TestArgs& a) {
  const Dataset ds = load_dataset(a.data, a.column);
  TestConfig cfg;
  cfg.family = family_arg(a.family, true);
  cfg.alpha = a.alpha;
  cfg.n_boot = a.n_boot;
  cfg.seed = a.seed;
  cfg.threads = resolve_threads(a.threads);
  cfg.fit_method = a.fit_method == "moments" ? FitMethod::MethodOfMoments : FitMethod::MaximumLikelihood;

  TestReport rep;
  rep.dataset = {ds.name, ds.source, ds.values.size()};
  rep.result = run_test(ds.values, cfg);
  rep.config = cfg;
  rep.config.threads = 0;
  if (a.timestamp) rep.timestamp = utc_now();

  const DdeResult& r = rep.result;
  std::cout << "DDE test: " << info(cfg.family).display << " null, " << ds.name << " (n = " << ds.values.size()
            << ")\n"
            << "  fitted      " << describe(r.fitted) << "\n"
            << "  DE_ML       " << g6(r.de_ml) << "\n"
            << "  DE_KDE      " << g6(r.de_kde) << "\n"
            << "  DDE         " << g6(r.observed_dde) << "\n";
  print_bandwidth(r.bandwidth);
  std::cout << "  bootstrap   " << r.boot.n_boot << " replicates, mean " << g6(r.boot.mean) << ", seed " << r.seed
            << "\n"
            << "  interval    [" << g6(r.critical_low) << ", " << g6(r.critical_high) << "] at alpha = "
            << g6(r.alpha) << (r.reject_by_interval ? "  (DDE outside)" : "  (DDE inside)") << "\n"
            << "  p-value     " << g6(r.p_value) << "\n"
            << "  decision    " << (r.reject ? "REJECT" : "NOT-REJECT") << "\n";
  if (!a.out.empty()) write_file(a.out, dump(to_json(rep)));
  return 0;
}

struct SimArgs {
  std::string null_family;
  std::string alt = "standard";
  std::vector<std::size_t> n_grid{50, 100, 250, 500};
  std::size_t reps = 200;
  std::size_t n_boot = 300;
  double alpha = 0.05;
  std::uint64_t seed = kDefaultSeed;
  unsigned threads = 0;
  std::string out;
};

int cmd_simulate(const SimArgs& a) {
  SimManifest m;
  m.null_family = family_arg(a.null_family, true);
  if (a.alt == "standard") {
    m.dgps.push_back(simulated_null_member(m.null_family));
    for (auto& d : standard_alternatives(m.null_family)) m.dgps.push_back(std::move(d));
  } else {
    m.dgps.push_back(model_arg(a.alt));
  }
  m.n_grid = a.n_grid;
  m.reps = a.reps;
  m.n_boot = a.n_boot;
  m.alpha = a.alpha;
  m.master_seed = a.seed;

  for (const FittedModel& dgp : m.dgps) {
    ExperimentSpec spec{m.null_family, dgp, m.n_grid, m.reps, m.n_boot, m.alpha, m.master_seed,
                        resolve_threads(a.threads)};
    const SimReport r = run_experiment(spec);
    for (const SimCell& c : r.cells) {
      std::cerr << info(c.null_family).name << " vs " << describe(c.dgp) << "  n = " << c.n << "  rate = "
                << g6(c.rate) << " (se " << g6(c.mc_se) << ")\n";
    }
    m.report.cells.insert(m.report.cells.end(), r.cells.begin(), r.cells.end());
  }

  const std::string csv = sim_csv(m.report);
  if (a.out.empty()) {
    std::cout << csv;
  } else {
    const std::filesystem::path dir(a.out);
    write_file(dir / "simulation.csv", csv);
    write_file(dir / "simulation.json", dump(to_json(m)));
  }
  return 0;
}

struct EntropyArgs {
  std::string data;
  std::string column;
  std::string family;
  bool kde = false;
  std::string null_family;
  std::string out;
};

int cmd_entropy(const EntropyArgs& a) {
  const Dataset ds = load_dataset(a.data, a.column);
  EntropyReport rep;
  rep.dataset = {ds.name, ds.source, ds.values.size()};
  if (a.kde) {
    rep.family = family_arg(a.null_family, true);
    const FittedModel fitted = fit(rep.family, ds.values);
    const BandwidthSpec bw = select_bandwidth(fitted, ds.values);
    rep.fitted = fitted;
    rep.estimate = de_kde(ds.values, bw, support_of(rep.family));
    std::cout << "DE_KDE      " << g6(rep.estimate.value) << "  (" << ds.name << ", n = " << ds.values.size()
              << ")\n";
    if (bw.scale == Scale::Log) {
      std::cout << "  path        KDE of ln(x); entropy = -int g ln g dy + mean(ln x)\n";
    }
    print_bandwidth(bw);
  } else {
    rep.family = family_arg(a.family, true);
    const FittedModel fitted = fit(rep.family, ds.values);
    rep.fitted = fitted;
    rep.estimate = de_ml(fitted);
    std::cout << "DE_ML       " << g6(rep.estimate.value) << "  (" << ds.name << ", n = " << ds.values.size()
              << ")\n"
              << "  fitted      " << describe(fitted) << "\n";
    if (rep.estimate.bias_diag) std::cout << "  bias diag   " << g6(*rep.estimate.bias_diag) << "\n";
  }
  if (!a.out.empty()) write_file(a.out, dump(to_json(rep)));
  return 0;
}

int cmd_datasets() {
  for (const FixtureInfo& f : bundled_fixtures()) {
    std::cout << std::left << std::setw(20) << f.id << std::setw(6) << f.values.size() << f.description << "\n";
  }
  return 0;
}

void add_family_check(CLI::Option* opt, bool testable_only) {
  opt->check(CLI::Validator(
      [testable_only](std::string& s) -> std::string {
        const auto f = parse_family(s);
        if (!f) return "unknown family '" + s + "'";
        if (testable_only && !info(*f).testable) return "'" + s + "' is not a testable null";
        return {};
      },
      "FAMILY"));
}

const CLI::Validator kOpenUnit(
    [](std::string& s) -> std::string {
      try {
        const double v = std::stod(s);
        if (v > 0.0 && v < 1.0) return {};
      } catch (const std::exception&) {
      }
      return "must lie strictly between 0 and 1";
    },
    "(0,1)");

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Entropy-difference goodness-of-fit tests for parametric families"};
  app.set_version_flag("--version", dde::kToolVersion);
  app.set_config("--config", "", "TOML/INI file with default flag values");
  app.require_subcommand(1);

  TestArgs ta;
  auto* test = app.add_subcommand("test", "Test a dataset against a null family");
  add_family_check(test->add_option("--family", ta.family, "Null family")->required(), true);
  test->add_option("--data", ta.data, "CSV/plain-text file or bundled fixture id")->required();
  test->add_option("--column", ta.column, "Column name or zero-based index (default 0)");
  test->add_option("--alpha", ta.alpha, "Significance level")->check(kOpenUnit)->capture_default_str();
  test->add_option("--nboot", ta.n_boot, "Bootstrap replicates")->check(CLI::PositiveNumber)->capture_default_str();
  test->add_option("--seed", ta.seed, "Random seed")->capture_default_str();
  test->add_option("--threads", ta.threads, "Worker threads (default: $DDE_THREADS or all cores)");
  test->add_option("--out", ta.out, "Write the JSON report here");
  test->add_option("--fit-method", ta.fit_method, "Estimator")
      ->check(CLI::IsMember({"mle", "moments"}))
      ->capture_default_str();
  test->add_flag("--timestamp", ta.timestamp, "Record the UTC time in the report");

  SimArgs sa;
  auto* sim = app.add_subcommand("simulate", "Size/power Monte Carlo campaign");
  add_family_check(sim->add_option("--null", sa.null_family, "Null family")->required(), true);
  sim->add_option("--alt", sa.alt, "'standard' or a generator such as cauchy:0,1")->capture_default_str();
  sim->add_option("--n", sa.n_grid, "Sample sizes")->delimiter(',')->capture_default_str();
  sim->add_option("--reps", sa.reps, "Monte Carlo replicates per cell")->check(CLI::PositiveNumber)->capture_default_str();
  sim->add_option("--nboot", sa.n_boot, "Bootstrap replicates per test")->check(CLI::PositiveNumber)->capture_default_str();
  sim->add_option("--alpha", sa.alpha, "Significance level")->check(kOpenUnit)->capture_default_str();
  sim->add_option("--seed", sa.seed, "Master seed")->capture_default_str();
  sim->add_option("--threads", sa.threads, "Worker threads (default: $DDE_THREADS or all cores)");
  sim->add_option("--out", sa.out, "Directory for simulation.csv and simulation.json");

  EntropyArgs ea;
  auto* ent = app.add_subcommand("entropy", "ML or KDE differential entropy of a dataset");
  ent->add_option("--data", ea.data, "CSV/plain-text file or bundled fixture id")->required();
  ent->add_option("--column", ea.column, "Column name or zero-based index (default 0)");
  auto* fam = ent->add_option("--family", ea.family, "Family for the ML plug-in estimate");
  add_family_check(fam, true);
  auto* kde = ent->add_flag("--kde", ea.kde, "Kernel estimate instead of ML");
  auto* nullf = ent->add_option("--null-family", ea.null_family, "Null family driving the bandwidth rule");
  add_family_check(nullf, true);
  fam->excludes(kde);
  kde->needs(nullf);
  nullf->needs(kde);
  ent->add_option("--out", ea.out, "Write the JSON report here");

  app.add_subcommand("datasets", "List bundled datasets");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    if (*test) return cmd_test(ta);
    if (*sim) return cmd_simulate(sa);
    if (*ent) {
      if (!ea.kde && ea.family.empty()) throw dde::invalid_argument("entropy needs --family or --kde");
      return cmd_entropy(ea);
    }
    return cmd_datasets();
  } catch (const dde::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return dde::exit_code(e.kind());
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
