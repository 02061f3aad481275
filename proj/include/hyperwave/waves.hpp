#pragma once

#include <cmath>
#include <cstdint>
#include <string>
#include <vector>

#include "hyperwave/algebra.hpp"
#include "hyperwave/relativity.hpp"

namespace hyperwave {

/// Matrix exponential by scaling-and-squaring with a truncated power series.
/// Total on the whole algebra (no eigendecomposition exists over a ring with
/// zero divisors). The argument is halved until its largest component is
/// <= 0.5; the series stops when a term drops below 1e-16 of the running sum.
template <typename Real>
Element<Real> mat_exp(const Element<Real>& a) {
  int squarings = 0;
  Real mag = abs_max(a);
  while (mag > Real(0.5)) {
    mag /= Real(2);
    ++squarings;
  }
  const Element<Real> b = a * Real(std::ldexp(1.0, -squarings));
  Element<Real> sum = identity<Real>();
  Element<Real> term = identity<Real>();
  for (int k = 1; k <= 128; ++k) {
    term = Element<Real>(term * b / Real(k));
    sum += term;
    if (abs_max(term) <= Real(1e-16) * abs_max(sum)) break;
  }
  for (int s = 0; s < squarings; ++s) sum = Element<Real>(sum * sum);
  return sum;
}

struct WaveFlags {
  bool sign_flip = false;
  bool order_swap = false;
  bool bar_swap = false;
};

/// State label of a quaternion plane wave: mass, number of polarization
/// states, on-shell momentum, and the three discrete transformation flags.
struct WaveSpec {
  double mass = 1.0;
  int polarizations = 2;  // n = 2s + 1
  FourVectord momentum{1.0, 0.0, 0.0, 0.0};
  WaveFlags flags;
};

/// Validates mass > 0, n >= 1 and the on-shell condition (1e-10 relative).
WaveSpec make_wave_spec(double mass, int polarizations, const FourVectord& momentum,
                        WaveFlags flags = {});

struct QuaternionWave {
  Elementd value;
  FourVectord x;
  WaveSpec spec;
};

/// Exponent of the wave at x. For n = 2 the base form is -pseudo * X bar(P);
/// order_swap uses P bar(X), bar_swap moves the bar to the first factor, and
/// sign_flip negates the whole exponent. For n = 1 the wedge part is
/// discarded and only sign_flip acts.
Elementd wave_exponent(const FourVectord& x, const WaveSpec& spec);

/// exp of wave_exponent; the identity element at x = 0.
QuaternionWave quaternion_wave(const FourVectord& x, const WaveSpec& spec);

/// Factored form exp(-pseudo x.p) * exp(-pseudo (x wedge p)); the scalar part
/// commutes with everything, so this equals the base n = 2 wave.
Elementd quaternion_wave_factored(const FourVectord& x, const FourVectord& p);

/// Tensor form exp(-pseudo x_mu p^mu + s_mu_nu l^mu_nu) with the orbital
/// angular momentum l^mu_nu = x^mu p^nu - x^nu p^mu; equals the base wave.
Elementd quaternion_wave_tensor(const FourVectord& x, const FourVectord& p);

/// True when 2s is a non-negative integer.
bool is_valid_spin(double s);

/// n = 2s + 1.
int polarization_count(double s);

/// m = kappa / (s + 1/2); inverse of kappa = n m / 2.
double mass_spin(double s, double kappa);

/// The invariant (p + w).(p + w) = p^2 - w^2 with the squared length
/// convention w^2 = g^{mu nu} Tr(w_mu w_nu)/2 (the conjugation is already
/// absorbed: bar(w_mu) = -w_mu). Equals ((2s+1) m)^2. Matrix-level for
/// s in {0, 1/2}; the arithmetic value m^2 (1 + 4 s (s+1)) otherwise.
double polarizable_operator(const FourVectord& p, double s);

/// Central-difference diagnostic for [box + (n m)^2] psi = 0 at x: evaluates
/// the wave on the 9-point stencil (center plus +-h per coordinate) and
/// returns the largest component of the residual. Reported, not asserted,
/// for n = 2; the n = 1 scalar wave must vanish to O(h^2).
double kg_residual(const WaveSpec& spec, const FourVectord& x, double h);

struct DiscreteGroupReport {
  bool involutive = false;
  bool commuting = false;
  bool distinct = false;
  bool sign_negates_exponent = false;
  bool order_negates_wedge = false;
  bool bar_negates_wr = false;
  bool table_is_z2_cubed = false;
  int trials = 0;
  double min_separation = 0;
  std::vector<std::string> failures;

  bool passed() const { return failures.empty(); }
};

/// Checks the eight discrete wave transformations over random (x, p):
/// involutivity, commutativity, pairwise distinctness, the exponent-level
/// sign rules against wedge and wr, and the Z2 x Z2 x Z2 composition table.
DiscreteGroupReport discrete_group_check(std::uint64_t seed = 1729, int trials = 8);

}  // namespace hyperwave
