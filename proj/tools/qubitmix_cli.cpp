// qubitmix: density curves, Monte Carlo verification runs, ensemble averages,
// triangle-inequality searches and g2 sweeps from the command line.
//
// Exit codes: 0 success, 1 usage or contract error, 2 expected result absent,
// 3 numerical failure.

#include "qubitmix/bloch.hpp"
#include "qubitmix/divergences.hpp"
#include "qubitmix/errors.hpp"
#include "qubitmix/mixing.hpp"
#include "qubitmix/stats.hpp"
#include "qubitmix/verification.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <array>
#include <charconv>
#include <chrono>
#include <cmath>
#include <fstream>
#include <iostream>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#ifndef QUBITMIX_VERSION
#define QUBITMIX_VERSION "0.0.0"
#endif

namespace {

using nlohmann::json;
using Clock = std::chrono::steady_clock;
namespace qm = qubitmix;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitAbsent = 2;
constexpr int kExitNumerical = 3;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Common {
  std::uint64_t seed = 1;
  unsigned workers = 0;
  std::string out;
  std::string format;
};

std::string num(double x) {
  if (x == 0.0) x = 0.0;  // no "-0" in CSV
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, x);
  return {buf, res.ptr};
}

// Writes to --out when given, stdout otherwise.
class Sink {
 public:
  explicit Sink(const std::string& path) {
    if (path.empty() || path == "-") return;
    file_ = std::make_unique<std::ofstream>(path, std::ios::binary);
    if (!*file_) throw UsageError("cannot open output file: " + path);
  }
  std::ostream& os() { return file_ ? *file_ : std::cout; }

 private:
  std::unique_ptr<std::ofstream> file_;
};

json manifest(const std::string& subcommand, const json& params, const Common& c,
              Clock::time_point start) {
  const std::chrono::duration<double> elapsed = Clock::now() - start;
  return {{"tool", "qubitmix"},
          {"version", QUBITMIX_VERSION},
          {"subcommand", subcommand},
          {"params", params},
          {"seed", c.seed},
          {"workers", qm::resolve_workers(c.workers)},
          {"duration_s", elapsed.count()}};
}

void add_common(CLI::App* app, Common& c, std::vector<std::string> formats) {
  c.format = formats.front();
  app->add_option("--seed", c.seed, "Random seed")->capture_default_str();
  app->add_option("--workers", c.workers, "Worker threads (0 = available parallelism)")
      ->capture_default_str();
  app->add_option("--out", c.out, "Output path (stdout if omitted)");
  app->add_option("--format", c.format, "Output format")
      ->check(CLI::IsMember(formats))
      ->capture_default_str();
}

qm::DensityKind parse_kind(const std::string& name) {
  const auto kind = qm::parse_density_kind(name);
  if (!kind) throw UsageError("unknown density kind: " + name);
  return *kind;
}

struct ParamFlags {
  std::optional<double> mu, nu, r1, r2;
};

qm::DensityParams density_params(qm::DensityKind kind, const ParamFlags& f, const char* prefix) {
  const auto need = [&](const std::optional<double>& v, const char* name) {
    if (!v) throw UsageError(std::string("--") + prefix + name + " is required for " +
                             std::string(qm::to_string(kind)));
    return *v;
  };
  qm::DensityParams p;
  if (qm::uses_orbit_params(kind)) {
    p = {need(f.mu, "mu"), need(f.nu, "nu")};
  } else if (qm::uses_radius_params(kind)) {
    p = {need(f.r1, "r1"), need(f.r2, "r2")};
  }
  try {
    qm::validate_params(kind, p);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  } catch (const std::domain_error& e) {
    throw UsageError(e.what());
  }
  return p;
}

json params_json(qm::DensityKind kind, const qm::DensityParams& p) {
  if (qm::uses_orbit_params(kind)) return {{"mu", p.first}, {"nu", p.second}};
  if (qm::uses_radius_params(kind)) return {{"r1", p.first}, {"r2", p.second}};
  return json::object();
}

// ---- density ---------------------------------------------------------------

struct DensityArgs {
  Common c;
  std::string kind;
  ParamFlags p;
  int grid = 201;
};

int run_density(const DensityArgs& a) {
  const auto start = Clock::now();
  const qm::DensityKind kind = parse_kind(a.kind);
  const qm::DensityParams p = density_params(kind, a.p, "");
  if (a.grid < 2) throw UsageError("--grid must be at least 2");

  const auto [lo, hi] = qm::density_domain(kind);
  std::vector<double> xs;
  for (int i = 0; i < a.grid; ++i) xs.push_back(lo + (hi - lo) * i / (a.grid - 1));
  for (double b : qm::support_breakpoints(kind, p)) xs.push_back(b);
  std::sort(xs.begin(), xs.end());
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());

  json params = params_json(kind, p);
  params["kind"] = a.kind;
  params["grid"] = a.grid;
  const json m = manifest("density", params, a.c, start);

  Sink sink(a.c.out);
  std::ostream& os = sink.os();
  if (a.c.format == "json") {
    json points = json::array();
    for (double x : xs) points.push_back({x, qm::density_pdf(kind, p, x)});
    os << json{{"manifest", m}, {"columns", {"x", "density"}}, {"points", points}}.dump() << '\n';
  } else {
    os << "# manifest " << m.dump() << '\n' << "x,density\n";
    for (double x : xs) os << num(x) << ',' << num(qm::density_pdf(kind, p, x)) << '\n';
  }
  return kExitOk;
}

// ---- verify ----------------------------------------------------------------

struct VerifyArgs {
  Common c;
  std::string kind;
  ParamFlags sample;
  ParamFlags curve;
  std::uint64_t samples = 1'000'000;
  std::optional<double> threshold;
};

int run_verify(const VerifyArgs& a) {
  const auto start = Clock::now();
  const qm::DensityKind kind = parse_kind(a.kind);
  if (a.samples < 10'000) throw UsageError("--samples must be at least 10000");
  const qm::DensityParams sp = density_params(kind, a.sample, "");
  ParamFlags curve = a.curve;
  if (!curve.mu) curve.mu = a.sample.mu;
  if (!curve.nu) curve.nu = a.sample.nu;
  if (!curve.r1) curve.r1 = a.sample.r1;
  if (!curve.r2) curve.r2 = a.sample.r2;
  const qm::DensityParams cp = density_params(kind, curve, "curve-");
  const double threshold = a.threshold.value_or(qm::default_ks_threshold(a.samples));

  const qm::VerificationReport r =
      qm::verify_density(kind, sp, cp, a.samples, a.c.seed, a.c.workers, threshold);

  json params{{"kind", a.kind},
              {"sample_params", params_json(kind, sp)},
              {"curve_params", params_json(kind, cp)},
              {"samples", a.samples},
              {"threshold", threshold}};
  json report{{"kind", a.kind},
              {"ks_statistic", r.ks_statistic},
              {"threshold", r.threshold},
              {"max_support_excursion", r.max_support_excursion},
              {"n_samples", r.n_samples},
              {"seed", r.seed},
              {"workers", r.workers},
              {"pass", r.pass},
              {"manifest", manifest("verify", params, a.c, start)}};
  Sink sink(a.c.out);
  sink.os() << report.dump(2) << '\n';
  return r.pass ? kExitOk : kExitAbsent;
}

// ---- averages --------------------------------------------------------------

struct AveragesArgs {
  Common c;
  std::string which;
  std::string method;
  std::uint64_t samples = 1'000'000;
  unsigned m = 2;
  unsigned n = 2;
};

const std::map<std::string, std::vector<std::string>>& supported_methods() {
  // First entry is the default method.
  static const std::map<std::string, std::vector<std::string>> table{
      {"entropy-equi", {"quadrature", "mc"}},
      {"entropy-qadd", {"quadrature", "mc"}},
      {"fidelity2", {"exact", "quadrature", "mc"}},
      {"page", {"exact"}},
      {"entropy-mean-n", {"mc"}},
      {"coherence-n", {"mc"}},
  };
  return table;
}

json mc_json(const qm::McEstimate& e) {
  return {{"value", e.value},
          {"error", e.std_error},
          {"metadata", {{"samples", e.n_samples}, {"seed", e.seed}, {"workers", e.workers}}}};
}

json quad_json(const qm::QuadratureResult& q) {
  return {{"value", q.value},
          {"error", q.error},
          {"metadata", {{"subdivisions", q.subdivisions}, {"evaluations", q.evaluations}}}};
}

int run_averages(const AveragesArgs& a) {
  const auto start = Clock::now();
  const auto& table = supported_methods();
  const auto it = table.find(a.which);
  if (it == table.end()) throw UsageError("unknown --which: " + a.which);
  const std::string method = a.method.empty() ? it->second.front() : a.method;
  if (std::find(it->second.begin(), it->second.end(), method) == it->second.end()) {
    throw UsageError("method '" + method + "' is not available for " + a.which);
  }
  if (method == "mc" && a.samples < 2) throw UsageError("--samples must be at least 2");

  const qm::McConfig mc{a.c.seed, a.samples, a.c.workers};
  json params{{"which", a.which}, {"method", method}};
  if (method == "mc") params["samples"] = a.samples;
  json out;
  if (a.which == "entropy-equi") {
    out = method == "mc" ? mc_json(qm::mc_avg_entropy_equi(mc)) : quad_json(qm::avg_entropy_equi_hs());
  } else if (a.which == "entropy-qadd") {
    out = method == "mc" ? mc_json(qm::mc_avg_entropy_qadd(mc)) : quad_json(qm::avg_entropy_qadd_hs());
  } else if (a.which == "fidelity2") {
    if (method == "exact") {
      out = {{"value", qm::avg_fidelity_squared_exact()}, {"error", 0.0}, {"metadata", json::object()}};
    } else if (method == "quadrature") {
      out = quad_json(qm::avg_fidelity_squared_quadrature());
    } else {
      out = mc_json(qm::mc_avg_fidelity_squared(mc));
    }
  } else if (a.which == "page") {
    if (a.m < 1 || a.m > a.n) throw UsageError("page needs 1 <= m <= n");
    const qm::PageEntropy pe = qm::page_entropy(a.m, a.n);
    params["m"] = a.m;
    params["n"] = a.n;
    out = {{"value", pe.nats},
           {"error", 0.0},
           {"metadata", {{"exact", pe.exact.str()}, {"unit", "nats"}, {"bits", pe.bits}}}};
  } else {
    if (a.n < 1) throw UsageError("--n must be at least 1");
    if (a.samples < 1000) throw UsageError("--samples must be at least 1000");
    params["n"] = a.n;
    out = a.which == "entropy-mean-n" ? mc_json(qm::mc_avg_entropy_mean_n(a.n, mc))
                                      : mc_json(qm::mc_avg_coherence_n(a.n, mc));
  }
  out["which"] = a.which;
  out["method"] = method;
  out["manifest"] = manifest("averages", params, a.c, start);
  Sink sink(a.c.out);
  sink.os() << out.dump(2) << '\n';
  return kExitOk;
}

// ---- search-violations -----------------------------------------------------

struct SearchArgs {
  Common c;
  std::string mode = "mixed";
  std::uint64_t triples = 10'000;
  std::vector<double> check_triple;
};

int run_check_triple(const SearchArgs& a, Clock::time_point start) {
  const auto& v = a.check_triple;
  std::array<qm::BlochVector, 3> s;
  try {
    for (int i = 0; i < 3; ++i) s[i] = qm::BlochVector(v[3 * i], v[3 * i + 1], v[3 * i + 2]);
  } catch (const qm::InvalidStateError& e) {
    throw UsageError(e.what());
  }
  const qm::TriangleDelta d = qm::triangle_delta(s[0], s[1], s[2]);
  json states = json::array();
  for (const auto& b : s) states.push_back({b.x(), b.y(), b.z()});
  const json out{{"states", states},
                 {"delta", d.delta},
                 {"delta_prime", d.delta_prime},
                 {"apex", 0},
                 {"delta_violated", d.delta < 0.0},
                 {"delta_prime_violated", d.delta_prime < 0.0},
                 {"manifest", manifest("search-violations", {{"check_triple", v}}, a.c, start)}};
  Sink sink(a.c.out);
  sink.os() << out.dump() << '\n';
  return d.delta < 0.0 || d.delta_prime < 0.0 ? kExitOk : kExitAbsent;
}

int run_search(const SearchArgs& a) {
  const auto start = Clock::now();
  if (!a.check_triple.empty()) return run_check_triple(a, start);
  if (a.triples == 0) throw UsageError("--triples must be at least 1");
  const qm::SampleMode mode = a.mode == "pure" ? qm::SampleMode::Pure : qm::SampleMode::Mixed;

  const qm::ViolationSearchResult r = qm::violation_search(mode, a.triples, a.c.seed, a.c.workers);

  Sink sink(a.c.out);
  std::ostream& os = sink.os();
  for (const auto& report : r.reports) os << qm::to_json(report).dump() << '\n';
  const json params{{"mode", a.mode}, {"triples", a.triples}};
  os << json{{"summary",
              {{"n_triples", r.n_triples},
               {"delta_violations", r.delta_violations},
               {"delta_prime_violations", r.delta_prime_violations}}},
             {"manifest", manifest("search-violations", params, a.c, start)}}
            .dump()
     << '\n';
  return r.reports.empty() ? kExitAbsent : kExitOk;
}

// ---- gsweep ----------------------------------------------------------------

struct GsweepArgs {
  Common c;
  double r1 = 1.0;
  double r2 = 1.0;
  double theta = 0.0;
  int grid = 100;
};

int run_gsweep(const GsweepArgs& a) {
  const auto start = Clock::now();
  if (a.grid < 2) throw UsageError("--grid must be at least 2");
  std::optional<qm::MixCurve> curve;
  try {
    curve.emplace(a.r1, a.r2, a.theta);
  } catch (const std::domain_error& e) {
    throw UsageError(e.what());
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }

  const double step = 1.0 / a.grid;
  std::vector<double> ts, ss, gs;
  for (int i = 0; i <= a.grid; ++i) {
    const double t = i == a.grid ? 1.0 : i * step;
    ts.push_back(t);
    ss.push_back(qm::entropy_sum_curve(*curve, t));
    gs.push_back(qm::g2(*curve, t));
  }
  // Ties (flat curves) resolve to the grid point nearest 1/2.
  const double best = *std::max_element(ss.begin(), ss.end());
  std::size_t arg = ts.size();
  for (std::size_t i = 0; i < ts.size(); ++i) {
    if (ss[i] < best - 1e-12) continue;
    if (arg == ts.size() || std::abs(ts[i] - 0.5) < std::abs(ts[arg] - 0.5)) arg = i;
  }
  const double argmax = ts[arg];
  const bool centered = std::abs(argmax - 0.5) <= step + 1e-12;

  const json params{{"r1", a.r1}, {"r2", a.r2}, {"theta", a.theta}, {"grid", a.grid}};
  json m = manifest("gsweep", params, a.c, start);
  m["argmax_t"] = argmax;
  m["max_g2"] = gs[arg];
  Sink sink(a.c.out);
  std::ostream& os = sink.os();
  if (a.c.format == "json") {
    json points = json::array();
    for (std::size_t i = 0; i < ts.size(); ++i) points.push_back({ts[i], ss[i], gs[i]});
    os << json{{"manifest", m}, {"columns", {"t", "s", "g2"}}, {"points", points}, {"argmax_t", argmax}}
              .dump()
       << '\n';
  } else {
    os << "# manifest " << m.dump() << '\n' << "t,s,g2\n";
    for (std::size_t i = 0; i < ts.size(); ++i) {
      os << num(ts[i]) << ',' << num(ss[i]) << ',' << num(gs[i]) << '\n';
    }
  }
  return centered ? kExitOk : kExitAbsent;
}

void add_param_flags(CLI::App* app, ParamFlags& p, const std::string& prefix) {
  const std::string note = prefix.empty() ? "" : " for the reference curve (defaults to the sampled value)";
  app->add_option("--" + prefix + "mu", p.mu, "Minimal eigenvalue of the first orbit" + note);
  app->add_option("--" + prefix + "nu", p.nu, "Minimal eigenvalue of the second orbit" + note);
  app->add_option("--" + prefix + "r1", p.r1, "Bloch length of the first orbit" + note);
  app->add_option("--" + prefix + "r2", p.r2, "Bloch length of the second orbit" + note);
}

const std::vector<std::string> kKinds{"lambda-equi", "lambda-qadd", "r-equi", "r-qadd", "angle", "maxeig"};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Random qubit mixtures: densities, averages and QJSD triangle checks", "qubitmix"};
  app.set_version_flag("--version", QUBITMIX_VERSION);
  app.require_subcommand(1);

  DensityArgs density;
  auto* cmd_density = app.add_subcommand("density", "Emit a closed-form density curve");
  add_common(cmd_density, density.c, {"csv", "json"});
  cmd_density->add_option("--kind", density.kind, "Density kind")->required()->check(CLI::IsMember(kKinds));
  add_param_flags(cmd_density, density.p, "");
  cmd_density->add_option("--grid", density.grid, "Number of grid points")->capture_default_str();

  VerifyArgs verify;
  auto* cmd_verify = app.add_subcommand("verify", "Kolmogorov-Smirnov check of a density against sampling");
  add_common(cmd_verify, verify.c, {"json"});
  cmd_verify->add_option("--kind", verify.kind, "Density kind")->required()->check(CLI::IsMember(kKinds));
  add_param_flags(cmd_verify, verify.sample, "");
  add_param_flags(cmd_verify, verify.curve, "curve-");
  cmd_verify->add_option("--samples", verify.samples, "Number of draws")->capture_default_str();
  cmd_verify->add_option("--threshold", verify.threshold, "KS pass threshold (default 2/sqrt(N))");

  AveragesArgs averages;
  auto* cmd_avg = app.add_subcommand("averages", "Ensemble averages by quadrature, Monte Carlo or exact formula");
  add_common(cmd_avg, averages.c, {"json"});
  cmd_avg->add_option("--which", averages.which, "Quantity")->required();
  cmd_avg->add_option("--method", averages.method, "quadrature, mc or exact");
  cmd_avg->add_option("--samples", averages.samples, "Monte Carlo draws")->capture_default_str();
  cmd_avg->add_option("--m", averages.m, "Page formula: subsystem dimension m")->capture_default_str();
  cmd_avg->add_option("--n", averages.n, "Page formula dimension n, or number of states mixed")
      ->capture_default_str();

  SearchArgs search;
  auto* cmd_search = app.add_subcommand("search-violations", "Random search for triangle-inequality violations");
  add_common(cmd_search, search.c, {"jsonl"});
  cmd_search->add_option("--mode", search.mode, "pure or mixed")
      ->check(CLI::IsMember({"pure", "mixed"}))
      ->capture_default_str();
  cmd_search->add_option("--triples,--n-triples", search.triples, "Number of random triples")
      ->capture_default_str();
  cmd_search->add_option("--check-triple", search.check_triple, "Evaluate one triple: 9 floats")
      ->expected(9);

  GsweepArgs gsweep;
  auto* cmd_gsweep = app.add_subcommand("gsweep", "Sweep s(t) and g2(t) over t in [0, 1]");
  add_common(cmd_gsweep, gsweep.c, {"csv", "json"});
  cmd_gsweep->add_option("--r1", gsweep.r1, "First Bloch length")->capture_default_str();
  cmd_gsweep->add_option("--r2", gsweep.r2, "Second Bloch length")->capture_default_str();
  cmd_gsweep->add_option("--theta", gsweep.theta, "Angle between the Bloch vectors")->capture_default_str();
  cmd_gsweep->add_option("--grid", gsweep.grid, "Number of grid steps")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*cmd_density) return run_density(density);
    if (*cmd_verify) return run_verify(verify);
    if (*cmd_avg) return run_averages(averages);
    if (*cmd_search) return run_search(search);
    if (*cmd_gsweep) return run_gsweep(gsweep);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const qm::NumericalFailure& e) {
    std::cerr << "numerical failure: " << e.what() << '\n';
    return kExitNumerical;
  } catch (const std::logic_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitNumerical;
  }
  return kExitUsage;
}
