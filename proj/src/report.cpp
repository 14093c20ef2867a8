#include "dde/report.hpp"

#include <array>
#include <charconv>
#include <sstream>

#include "dde/error.hpp"

namespace dde {

using nlohmann::ordered_json;

namespace {

constexpr std::array kRegimes = {Regime::Gaussian, Regime::NearGaussian, Regime::NonGaussianReal,
                                 Regime::RightSkewedPositive};

std::string_view scale_name(Scale s) { return s == Scale::Log ? "log" : "raw"; }
std::string_view estimator_name(Estimator e) { return e == Estimator::KDE ? "kde" : "ml"; }
std::string_view method_name(FitMethod m) {
  return m == FitMethod::MethodOfMoments ? "moments" : "mle";
}

Family family_from(const ordered_json& j) {
  const auto f = parse_family(j.get<std::string>());
  if (!f) throw data_error("unknown family '" + j.get<std::string>() + "'");
  return *f;
}

Scale scale_from(const ordered_json& j) {
  const auto s = j.get<std::string>();
  if (s == "raw") return Scale::Raw;
  if (s == "log") return Scale::Log;
  throw data_error("unknown scale '" + s + "'");
}

Regime regime_from(const ordered_json& j) {
  const auto s = j.get<std::string>();
  for (Regime r : kRegimes) {
    if (regime_name(r) == s) return r;
  }
  throw data_error("unknown regime '" + s + "'");
}

FitMethod method_from(const ordered_json& j) {
  const auto s = j.get<std::string>();
  if (s == "mle") return FitMethod::MaximumLikelihood;
  if (s == "moments") return FitMethod::MethodOfMoments;
  throw data_error("unknown fit method '" + s + "'");
}

ordered_json header(const char* kind, int schema, const std::string& tool) {
  return {{"kind", kind}, {"schema_version", schema}, {"tool_version", tool}};
}

void check_header(const ordered_json& j, const char* kind) {
  if (!j.is_object() || j.value("kind", "") != kind) {
    throw data_error(std::string("not a ") + kind + " document");
  }
  if (j.at("schema_version").get<int>() != kSchemaVersion) {
    throw data_error("unsupported schema version " + j.at("schema_version").dump());
  }
}

ordered_json to_json(const ShapeStats& s) {
  return {{"kappa_hat", s.kappa_hat}, {"skew_hat", s.skew_hat}, {"kappa0", s.kappa0},
          {"tau", s.tau},             {"gamma_kurt", s.gamma_kurt}, {"sigma_hat", s.sigma_hat}};
}

ShapeStats shape_from(const ordered_json& j) {
  ShapeStats s;
  s.kappa_hat = j.at("kappa_hat").get<double>();
  s.skew_hat = j.at("skew_hat").get<double>();
  s.kappa0 = j.at("kappa0").get<double>();
  s.tau = j.at("tau").get<double>();
  s.gamma_kurt = j.at("gamma_kurt").get<double>();
  s.sigma_hat = j.at("sigma_hat").get<double>();
  return s;
}

ordered_json to_json(const BandwidthSpec& b) {
  return {{"h", b.h},
          {"c", b.c},
          {"k_n", b.k_n},
          {"n", b.n},
          {"scale", scale_name(b.scale)},
          {"regime", regime_name(b.regime)},
          {"shape", to_json(b.shape)}};
}

BandwidthSpec bandwidth_from(const ordered_json& j) {
  BandwidthSpec b;
  b.h = j.at("h").get<double>();
  b.c = j.at("c").get<double>();
  b.k_n = j.at("k_n").get<double>();
  b.n = j.at("n").get<std::size_t>();
  b.scale = scale_from(j.at("scale"));
  b.regime = regime_from(j.at("regime"));
  b.shape = shape_from(j.at("shape"));
  return b;
}

FittedModel model_from(const ordered_json& j) {
  FittedModel m;
  m.family = family_from(j.at("family"));
  m.theta = j.at("theta").get<std::vector<double>>();
  m.n_fit = j.at("n_fit").get<std::size_t>();
  return m;
}

ordered_json to_json(const BootstrapDistribution& b) {
  return {{"n_boot", b.n_boot}, {"seed", b.seed}, {"mean", b.mean},
          {"failed", b.failed}, {"retried", b.retried}, {"values", b.values}};
}

BootstrapDistribution boot_from(const ordered_json& j) {
  BootstrapDistribution b;
  b.n_boot = j.at("n_boot").get<std::size_t>();
  b.seed = j.at("seed").get<std::uint64_t>();
  b.mean = j.at("mean").get<double>();
  b.failed = j.at("failed").get<std::size_t>();
  b.retried = j.at("retried").get<std::size_t>();
  b.values = j.at("values").get<std::vector<double>>();
  return b;
}

ordered_json to_json(const DatasetRef& d) {
  return {{"name", d.name}, {"source", d.source}, {"n", d.n}};
}

DatasetRef dataset_from(const ordered_json& j) {
  return {j.at("name").get<std::string>(), j.at("source").get<std::string>(),
          j.at("n").get<std::size_t>()};
}

ordered_json to_json(const EntropyEstimate& e) {
  ordered_json j = {{"value", e.value},
                    {"estimator", estimator_name(e.estimator)},
                    {"scale", scale_name(e.scale)}};
  j["bandwidth"] = e.bandwidth ? to_json(*e.bandwidth) : ordered_json(nullptr);
  j["bias_diag"] = e.bias_diag ? ordered_json(*e.bias_diag) : ordered_json(nullptr);
  return j;
}

EntropyEstimate estimate_from(const ordered_json& j) {
  EntropyEstimate e;
  e.value = j.at("value").get<double>();
  const auto est = j.at("estimator").get<std::string>();
  if (est != "ml" && est != "kde") throw data_error("unknown estimator '" + est + "'");
  e.estimator = est == "kde" ? Estimator::KDE : Estimator::ML;
  e.scale = scale_from(j.at("scale"));
  if (!j.at("bandwidth").is_null()) e.bandwidth = bandwidth_from(j.at("bandwidth"));
  if (!j.at("bias_diag").is_null()) e.bias_diag = j.at("bias_diag").get<double>();
  return e;
}

ordered_json to_json(const SimCell& c) {
  return {{"null", info(c.null_family).name},
          {"dgp", to_json(c.dgp)},
          {"n", c.n},
          {"reps", c.reps},
          {"rejections", c.rejections},
          {"rate", c.rate},
          {"mc_se", c.mc_se},
          {"failures", c.failures}};
}

SimCell cell_from(const ordered_json& j) {
  SimCell c;
  c.null_family = family_from(j.at("null"));
  c.dgp = model_from(j.at("dgp"));
  c.n = j.at("n").get<std::size_t>();
  c.reps = j.at("reps").get<std::size_t>();
  c.rejections = j.at("rejections").get<std::size_t>();
  c.rate = j.at("rate").get<double>();
  c.mc_se = j.at("mc_se").get<double>();
  c.failures = j.at("failures").get<std::size_t>();
  return c;
}

template <class F>
auto parsing(F&& f) {
  try {
    return f();
  } catch (const nlohmann::json::exception& e) {
    throw data_error(std::string("malformed report: ") + e.what());
  }
}

}  // namespace

ordered_json to_json(const FittedModel& m) {
  return {{"family", info(m.family).name}, {"theta", m.theta}, {"n_fit", m.n_fit}};
}

ordered_json to_json(const TestReport& r) {
  ordered_json j = header("test", r.schema_version, r.tool_version);
  if (r.timestamp) j["timestamp"] = *r.timestamp;
  j["dataset"] = to_json(r.dataset);
  j["config"] = {{"family", info(r.config.family).name},
                 {"alpha", r.config.alpha},
                 {"n_boot", r.config.n_boot},
                 {"seed", r.config.seed},
                 {"fit_method", method_name(r.config.fit_method)}};
  const DdeResult& d = r.result;
  j["result"] = {{"observed_dde", d.observed_dde},
                 {"de_ml", d.de_ml},
                 {"de_kde", d.de_kde},
                 {"p_value", d.p_value},
                 {"alpha", d.alpha},
                 {"critical_low", d.critical_low},
                 {"critical_high", d.critical_high},
                 {"reject", d.reject},
                 {"reject_by_interval", d.reject_by_interval},
                 {"seed", d.seed},
                 {"fitted", to_json(d.fitted)},
                 {"bandwidth", to_json(d.bandwidth)},
                 {"bootstrap", to_json(d.boot)}};
  return j;
}

TestReport test_report_from_json(const ordered_json& j) {
  return parsing([&] {
    check_header(j, "test");
    TestReport r;
    r.tool_version = j.at("tool_version").get<std::string>();
    if (j.contains("timestamp")) r.timestamp = j.at("timestamp").get<std::string>();
    r.dataset = dataset_from(j.at("dataset"));
    const auto& c = j.at("config");
    r.config.family = family_from(c.at("family"));
    r.config.alpha = c.at("alpha").get<double>();
    r.config.n_boot = c.at("n_boot").get<std::size_t>();
    r.config.seed = c.at("seed").get<std::uint64_t>();
    r.config.fit_method = method_from(c.at("fit_method"));
    r.config.threads = 0;
    const auto& d = j.at("result");
    r.result.observed_dde = d.at("observed_dde").get<double>();
    r.result.de_ml = d.at("de_ml").get<double>();
    r.result.de_kde = d.at("de_kde").get<double>();
    r.result.p_value = d.at("p_value").get<double>();
    r.result.alpha = d.at("alpha").get<double>();
    r.result.critical_low = d.at("critical_low").get<double>();
    r.result.critical_high = d.at("critical_high").get<double>();
    r.result.reject = d.at("reject").get<bool>();
    r.result.reject_by_interval = d.at("reject_by_interval").get<bool>();
    r.result.seed = d.at("seed").get<std::uint64_t>();
    r.result.fitted = model_from(d.at("fitted"));
    r.result.bandwidth = bandwidth_from(d.at("bandwidth"));
    r.result.boot = boot_from(d.at("bootstrap"));
    return r;
  });
}

ordered_json to_json(const EntropyReport& r) {
  ordered_json j = header("entropy", r.schema_version, r.tool_version);
  j["dataset"] = to_json(r.dataset);
  j["family"] = info(r.family).name;
  j["fitted"] = r.fitted ? to_json(*r.fitted) : ordered_json(nullptr);
  j["estimate"] = to_json(r.estimate);
  return j;
}

EntropyReport entropy_report_from_json(const ordered_json& j) {
  return parsing([&] {
    check_header(j, "entropy");
    EntropyReport r;
    r.tool_version = j.at("tool_version").get<std::string>();
    r.dataset = dataset_from(j.at("dataset"));
    r.family = family_from(j.at("family"));
    if (!j.at("fitted").is_null()) r.fitted = model_from(j.at("fitted"));
    r.estimate = estimate_from(j.at("estimate"));
    return r;
  });
}

ordered_json to_json(const SimManifest& m) {
  ordered_json j = header("simulation", m.schema_version, m.tool_version);
  ordered_json dgps = ordered_json::array();
  for (const auto& d : m.dgps) dgps.push_back(to_json(d));
  j["spec"] = {{"null", info(m.null_family).name}, {"dgps", dgps},         {"n_grid", m.n_grid},
               {"reps", m.reps},                   {"n_boot", m.n_boot},   {"alpha", m.alpha},
               {"master_seed", m.master_seed}};
  ordered_json cells = ordered_json::array();
  for (const auto& c : m.report.cells) cells.push_back(to_json(c));
  j["cells"] = cells;
  return j;
}

SimManifest sim_manifest_from_json(const ordered_json& j) {
  return parsing([&] {
    check_header(j, "simulation");
    SimManifest m;
    m.tool_version = j.at("tool_version").get<std::string>();
    const auto& s = j.at("spec");
    m.null_family = family_from(s.at("null"));
    for (const auto& d : s.at("dgps")) m.dgps.push_back(model_from(d));
    m.n_grid = s.at("n_grid").get<std::vector<std::size_t>>();
    m.reps = s.at("reps").get<std::size_t>();
    m.n_boot = s.at("n_boot").get<std::size_t>();
    m.alpha = s.at("alpha").get<double>();
    m.master_seed = s.at("master_seed").get<std::uint64_t>();
    for (const auto& c : j.at("cells")) m.report.cells.push_back(cell_from(c));
    return m;
  });
}

std::string dump(const ordered_json& j) { return j.dump(2) + "\n"; }

std::string format_double(double x) {
  std::array<char, 32> buf{};
  const auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), x);
  return std::string(buf.data(), ptr);
}

std::string sim_csv(const SimReport& report) {
  std::ostringstream out;
  out << "null,dgp,n,reps,rejections,rate,mc_se,failures\n";
  for (const SimCell& c : report.cells) {
    out << info(c.null_family).name << ",\"" << describe(c.dgp) << "\"," << c.n << ',' << c.reps << ','
        << c.rejections << ',' << format_double(c.rate) << ',' << format_double(c.mc_se) << ','
        << c.failures << '\n';
  }
  return out.str();
}

}  // namespace dde
