#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "hyperwave/relativity.hpp"
#include "hyperwave/scattering.hpp"

namespace hyperwave::verify {

inline constexpr std::uint64_t kDefaultSeed = 1729;

struct CheckResult {
  std::string suite;
  std::string check;
  bool passed = false;
  double measured = 0;
  std::optional<double> target;  // empty for measured-only diagnostics
  double tolerance = 0;
  std::uint64_t seed = 0;
  std::string detail;
};

struct Report {
  std::uint64_t seed = 0;
  std::vector<CheckResult> checks;

  bool all_passed() const;
  int failed_count() const;
};

/// Overridable tolerance classes: identity-type checks (dual-route algebraic
/// equalities) and asymptotic ones (heavy-target leading-order agreement).
/// Everything else (exact zeros, wave-form and residual bounds) is pinned.
struct Tolerances {
  double identity = 1e-10;
  double asymptotic = 1e-3;
};

/// Runs every identity, property and reproduction suite. Deterministic for a
/// fixed seed.
Report run_verification(std::uint64_t seed = kDefaultSeed, Tolerances tol = {});

/// The ten suite names, in criterion order.
const std::vector<std::string>& suite_names();

// Seeded generators shared by the suites and the tests.
FourVectord random_four(std::mt19937_64& rng, double lo, double hi);
FourVectord random_on_shell(std::mt19937_64& rng, double mass);

/// Random elastic 2->2 kinematics built in the centre-of-momentum frame and
/// boosted back; all four legs exactly on shell.
Kinematics random_elastic_kinematics(std::mt19937_64& rng);

}  // namespace hyperwave::verify
