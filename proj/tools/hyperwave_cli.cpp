#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <numbers>
#include <fstream>
#include <iostream>
#include <string>
#include <thread>
#include <vector>

#include "hyperwave/io.hpp"
#include "hyperwave/scattering.hpp"
#include "hyperwave/table_reference.hpp"
#include "hyperwave/verify.hpp"
#include "hyperwave/waves.hpp"

namespace {

using nlohmann::json;
using namespace hyperwave;

constexpr double kPi = std::numbers::pi;
constexpr int kExitCheckFailure = 3;
constexpr int kExitRuntimeError = 4;

void emit(const std::string& text, const std::string& path) {
  if (path.empty()) {
    std::cout << text;
    if (!text.empty() && text.back() != '\n') std::cout << '\n';
    return;
  }
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open output file: " + path);
  out << text;
}

std::uint64_t resolve_seed(const CLI::Option* seed_option, std::uint64_t flag_value) {
  if (seed_option->count() > 0) return flag_value;
  if (const char* env = std::getenv("HYPERWAVE_SEED")) return std::strtoull(env, nullptr, 10);
  return verify::kDefaultSeed;
}

json check_to_json(const verify::CheckResult& c) {
  json j{{"suite", c.suite},         {"check", c.check},   {"passed", c.passed},
         {"measured", c.measured},   {"tolerance", c.tolerance},
         {"seed", c.seed}};
  j["target"] = c.target ? json(*c.target) : json(nullptr);
  if (!c.detail.empty()) j["detail"] = c.detail;
  return j;
}

// ---------------------------------------------------------------------------

int run_trace_table(bool compare, const std::string& format, const std::string& output) {
  if (format == "csv") {
    std::ostringstream os;
    write_trace_table_csv(os);
    emit(os.str(), output);
  } else {
    const TraceTable<double>& t = trace_table<double>();
    json rows = json::array();
    for (int r = 0; r < 4; ++r)
      for (int m = 0; m < 4; ++m)
        for (int n = 0; n < 4; ++n)
          for (int s = 0; s < 4; ++s)
            rows.push_back({{"rho", r},
                            {"mu", m},
                            {"nu", n},
                            {"sigma", s},
                            {"value", to_json(t(r, m, n, s))}});
    emit(rows.dump(2), output);
  }
  if (compare) {
    const TableComparison cmp = compare_trace_table_reference();
    std::cout << cmp.matched << "/" << cmp.total << " listed reference entries matched\n";
    for (const std::string& m : cmp.mismatches) std::cout << "  mismatch: " << m << '\n';
    if (!cmp.all_matched() || !cmp.mismatches.empty()) return kExitCheckFailure;
  }
  return 0;
}

// ---------------------------------------------------------------------------

json mott_record(double m, double M, double p, double theta, const std::string& mode,
                 const std::string& recoil) {
  const Kinematics k = recoil == "exact" ? mott_kinematics_exact(m, M, p, theta)
                                         : mott_kinematics(m, M, p, theta);
  const double prop = propagator_sq(k.q());
  const AmplitudeBreakdown amp = amplitude_breakdown(k, prop);
  const double dirac = dirac_reference(m, M, p, theta, prop);

  double amplitude = amp.amplitude_sq;
  if (mode == "leading") amplitude = mott_leading(m, M, p, theta, prop);
  if (mode == "dirac") amplitude = dirac;

  // the ratio always compares the exact tensor pipeline against the
  // reference, whatever amplitude the mode selects
  return json{{"inputs",
               {{"m", m},
                {"M", M},
                {"p", p},
                {"theta", theta},
                {"mode", mode},
                {"recoil", recoil},
                {"propagator_sq", prop},
                {"q_sq", minkowski_square(k.q())}}},
              {"d1d2_sq", amp.d1d2_sq},
              {"d1d1_b", amp.d1d1_b},
              {"d2d2_b", amp.d2d2_b},
              {"bb", amp.bb},
              {"amplitude_sq", amplitude},
              {"ratio_to_dirac", amp.amplitude_sq / dirac},
              {"note", "closed leading form uses cos^2(theta/2): "
                       "m^2 + p^2 - p^2 sin^2(theta/2) = m^2 + p^2 cos^2(theta/2)"}};
}

int run_mott(double m, double M, double p, double theta, const std::string& mode,
             const std::string& recoil, const std::string& output) {
  emit(mott_record(m, M, p, theta, mode, recoil).dump(2), output);
  return 0;
}

int run_mott_scan(double m, double M, double p, double theta_min, double theta_max, int steps,
                  const std::string& mode, const std::string& recoil, const std::string& format,
                  const std::string& output) {
  if (theta_max < theta_min)
    throw CLI::ValidationError("mott-scan", "--theta-max must be >= --theta-min");

  std::vector<double> angles(steps);
  for (int i = 0; i < steps; ++i)
    angles[i] = steps == 1
                    ? theta_min
                    : theta_min + (theta_max - theta_min) * i / double(steps - 1);

  // evaluate points in parallel, then assemble in angle order
  std::vector<json> records(steps);
  std::vector<std::string> errors(steps);
  const int workers =
      std::max(1, std::min<int>(std::thread::hardware_concurrency(), steps));
  std::vector<std::thread> pool;
  for (int w = 0; w < workers; ++w)
    pool.emplace_back([&, w] {
      for (int i = w; i < steps; i += workers) {
        try {
          records[i] = mott_record(m, M, p, angles[i], mode, recoil);
        } catch (const std::exception& e) {
          errors[i] = e.what();
        }
      }
    });
  for (std::thread& t : pool) t.join();
  for (const std::string& e : errors)
    if (!e.empty()) throw std::runtime_error(e);

  if (format == "json") {
    json all = json::array();
    for (json& r : records) all.push_back(std::move(r));
    emit(all.dump(2), output);
    return 0;
  }
  std::ostringstream os;
  os << "theta,d1d2_sq,d1d1_b,d2d2_b,bb,amplitude_sq,ratio_to_dirac\n";
  for (int i = 0; i < steps; ++i) {
    const json& r = records[i];
    os << full_precision(angles[i]) << ',' << full_precision(r["d1d2_sq"].get<double>())
       << ',' << full_precision(r["d1d1_b"].get<double>()) << ','
       << full_precision(r["d2d2_b"].get<double>()) << ','
       << full_precision(r["bb"].get<double>()) << ','
       << full_precision(r["amplitude_sq"].get<double>()) << ','
       << full_precision(r["ratio_to_dirac"].get<double>()) << '\n';
  }
  emit(os.str(), output);
  return 0;
}

// ---------------------------------------------------------------------------

int run_wave(const std::string& x_text, const std::string& p_text, int n,
             const std::string& flags_text, const std::string& output) {
  const FourVectord x = parse_four(x_text);
  const FourVectord p = parse_four(p_text);
  const WaveFlags flags = parse_wave_flags(flags_text);
  const double psq = minkowski_square(p);
  if (!(psq > 0))
    throw std::invalid_argument("wave: momentum must be timelike (p.p > 0)");
  const WaveSpec spec = make_wave_spec(std::sqrt(psq), n, p, flags);
  const QuaternionWave wave = quaternion_wave(x, spec);

  json record{{"x", to_json(x)},
              {"p", to_json(p)},
              {"n", n},
              {"mass", spec.mass},
              {"flags",
               {{"sign_flip", flags.sign_flip},
                {"order_swap", flags.order_swap},
                {"bar_swap", flags.bar_swap}}},
              {"value", to_json(wave.value)}};
  emit(record.dump(2), output);
  return 0;
}

// ---------------------------------------------------------------------------

int run_verify(std::uint64_t seed, verify::Tolerances tol, const std::string& format,
               const std::string& output) {
  const verify::Report report = verify::run_verification(seed, tol);

  // keep stdout parseable when the JSON report goes there
  std::ostream& summary = (format == "json" && output.empty()) ? std::cerr : std::cout;

  if (format == "json") {
    json j{{"seed", report.seed}, {"passed", report.all_passed()}};
    j["checks"] = json::array();
    for (const verify::CheckResult& c : report.checks) j["checks"].push_back(check_to_json(c));
    emit(j.dump(2), output);
  } else {
    std::ostringstream os;
    for (const verify::CheckResult& c : report.checks) {
      os << (c.passed ? "[PASS] " : "[FAIL] ") << c.suite << '/' << c.check
         << "  measured=" << full_precision(c.measured);
      if (c.target) os << " target=" << full_precision(*c.target);
      os << " tol=" << full_precision(c.tolerance);
      if (!c.detail.empty()) os << "  (" << c.detail << ')';
      os << '\n';
    }
    emit(os.str(), output);
  }

  if (report.all_passed()) {
    summary << "all checks passed (" << report.checks.size() << " checks, seed "
            << report.seed << ")\n";
    return 0;
  }
  summary << "FAILED " << report.failed_count() << " of " << report.checks.size()
          << " checks (seed " << report.seed << ")\n";
  return kExitCheckFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"hyperwave: bicomplex Pauli algebra, one-boson-exchange amplitudes and "
               "quaternion plane waves"};
  app.require_subcommand(1);

  // trace-table
  auto* tt = app.add_subcommand(
      "trace-table", "Emit the 256-entry spin-tensor half-trace table (CSV or JSON)");
  bool tt_compare = false;
  std::string tt_format = "csv", tt_output;
  tt->add_flag("--compare", tt_compare,
               "Compare the computed table against the built-in reference entries");
  tt->add_option("--format", tt_format)->check(CLI::IsMember({"csv", "json"}));
  tt->add_option("--output", tt_output, "Write the table to a file instead of stdout");

  // mott
  auto* mott = app.add_subcommand("mott", "Evaluate the heavy-target scattering amplitude");
  double m = 1.0, M = 1e4, p = 1.0, theta = kPi / 2;
  std::string mode = "exact", recoil = "paper", mott_output;
  mott->add_option("--m", m, "Projectile mass")->required()->check(CLI::PositiveNumber);
  mott->add_option("--M", M, "Target mass")->required()->check(CLI::PositiveNumber);
  mott->add_option("--p", p, "Projectile momentum")->required()->check(CLI::PositiveNumber);
  mott->add_option("--theta", theta, "Scattering angle in radians, in (0, pi)")
      ->required()
      ->check(CLI::Range(1e-12, kPi - 1e-12));
  mott->add_option("--mode", mode, "exact pipeline, leading closed form, or dirac reference")
      ->check(CLI::IsMember({"exact", "leading", "dirac"}));
  mott->add_option("--recoil", recoil, "paper: outgoing energy fixed; exact: elastic recoil")
      ->check(CLI::IsMember({"exact", "paper"}));
  mott->add_option("--output", mott_output);

  // mott-scan
  auto* scan = app.add_subcommand("mott-scan", "Sweep the scattering angle");
  double s_m = 1.0, s_M = 1e4, s_p = 1.0, theta_min = 0.1, theta_max = 3.0;
  int steps = 30;
  std::string scan_mode = "exact", scan_recoil = "paper", scan_format = "csv", scan_output;
  scan->add_option("--m", s_m)->check(CLI::PositiveNumber);
  scan->add_option("--M", s_M)->check(CLI::PositiveNumber);
  scan->add_option("--p", s_p)->check(CLI::PositiveNumber);
  scan->add_option("--theta-min", theta_min)->required()->check(
      CLI::Range(1e-12, kPi - 1e-12));
  scan->add_option("--theta-max", theta_max)->required()->check(
      CLI::Range(1e-12, kPi - 1e-12));
  scan->add_option("--steps", steps)->required()->check(CLI::Range(1, 1000000));
  scan->add_option("--mode", scan_mode)->check(CLI::IsMember({"exact", "leading", "dirac"}));
  scan->add_option("--recoil", scan_recoil)->check(CLI::IsMember({"exact", "paper"}));
  scan->add_option("--format", scan_format)->check(CLI::IsMember({"csv", "json"}));
  scan->add_option("--output", scan_output);

  // wave
  auto* wave = app.add_subcommand("wave", "Evaluate a quaternion plane wave at a point");
  std::string wave_x = "0,0,0,0", wave_p = "1,0,0,0", wave_flags, wave_output;
  int wave_n = 2;
  wave->add_option("--x", wave_x, "Spacetime point x0,x1,x2,x3")->required();
  wave->add_option("--p", wave_p, "On-shell momentum p0,p1,p2,p3")->required();
  wave->add_option("--n", wave_n, "Number of polarization states (1 or 2)")
      ->required()
      ->check(CLI::Range(1, 2));
  wave->add_option("--flags", wave_flags,
                   "Comma-separated discrete transformations: s (sign), o (order), b (bar)");
  wave->add_option("--output", wave_output);

  // verify
  auto* ver = app.add_subcommand("verify", "Run the full invariant and reproduction suite");
  std::uint64_t seed = verify::kDefaultSeed;
  verify::Tolerances tol;
  std::string ver_format = "json", ver_output;
  CLI::Option* seed_opt =
      ver->add_option("--seed", seed, "Seed for the randomized property checks");
  ver->add_option("--tol-identity", tol.identity,
                  "Tolerance for dual-route algebraic identities")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  ver->add_option("--tol-asymptotic", tol.asymptotic,
                  "Tolerance for heavy-target leading-order agreement")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  ver->add_option("--format", ver_format)->check(CLI::IsMember({"json", "text"}));
  ver->add_option("--output", ver_output);

  CLI11_PARSE(app, argc, argv);

  try {
    if (tt->parsed()) return run_trace_table(tt_compare, tt_format, tt_output);
    if (mott->parsed()) return run_mott(m, M, p, theta, mode, recoil, mott_output);
    if (scan->parsed())
      return run_mott_scan(s_m, s_M, s_p, theta_min, theta_max, steps, scan_mode, scan_recoil,
                           scan_format, scan_output);
    if (wave->parsed())
      return run_wave(wave_x, wave_p, wave_n, wave_flags, wave_output);
    if (ver->parsed())
      return run_verify(resolve_seed(seed_opt, seed), tol, ver_format, ver_output);
  } catch (const CLI::Error& e) {
    return app.exit(e);
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitRuntimeError;
  }
  return 0;
}
