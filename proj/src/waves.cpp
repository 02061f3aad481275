#include "hyperwave/waves.hpp"

#include <cmath>
#include <random>
#include <sstream>
#include <stdexcept>

namespace hyperwave {

namespace {

const Bicomplexd kPseudo{0.0, 0.0, 0.0, -1.0};  // unit pseudoscalar, squares to -1

}  // namespace

WaveSpec make_wave_spec(double mass, int polarizations, const FourVectord& momentum,
                        WaveFlags flags) {
  if (!(mass > 0)) throw std::invalid_argument("wave spec: mass must be positive");
  if (polarizations < 1)
    throw std::invalid_argument("wave spec: polarization count must be >= 1");
  const double scale = 1.0 + momentum.squaredNorm();
  if (std::abs(minkowski_square(momentum) - mass * mass) > 1e-10 * scale)
    throw std::invalid_argument("wave spec: momentum is off shell");
  return WaveSpec{mass, polarizations, momentum, flags};
}

Elementd wave_exponent(const FourVectord& x, const WaveSpec& spec) {
  const double sign = spec.flags.sign_flip ? -1.0 : 1.0;
  if (spec.polarizations == 1) {
    const Bicomplexd s = kPseudo * (-sign * minkowski_dot(x, spec.momentum));
    return Elementd(s * identity<double>());
  }
  if (spec.polarizations != 2)
    throw std::invalid_argument(
        "wave exponent: no matrix representation for more than two polarization states");
  Elementd first = paravector(x);
  Elementd second = paravector(spec.momentum);
  if (spec.flags.order_swap) std::swap(first, second);
  const Elementd product =
      spec.flags.bar_swap ? Elementd(bar(first) * second) : Elementd(first * bar(second));
  return Elementd((kPseudo * (-sign)) * product);
}

QuaternionWave quaternion_wave(const FourVectord& x, const WaveSpec& spec) {
  return QuaternionWave{mat_exp(wave_exponent(x, spec)), x, spec};
}

Elementd quaternion_wave_factored(const FourVectord& x, const FourVectord& p) {
  const Elementd X = paravector(x);
  const Elementd P = paravector(p);
  const Bicomplexd scalar = kPseudo * (-minkowski_dot(x, p));
  const Elementd rotor = mat_exp(Elementd((-1.0 * kPseudo) * wedge(X, P)));
  return Elementd(mat_exp(Elementd(scalar * identity<double>())) * rotor);
}

Elementd quaternion_wave_tensor(const FourVectord& x, const FourVectord& p) {
  static const std::array<std::array<Elementd, 4>, 4> s = spin_generators<double>();
  Elementd exponent = Elementd((kPseudo * (-minkowski_dot(x, p))) * identity<double>());
  for (int mu = 0; mu < 4; ++mu)
    for (int nu = 0; nu < 4; ++nu) {
      const double l = x[mu] * p[nu] - x[nu] * p[mu];
      if (l != 0.0) exponent += l * s[mu][nu];
    }
  return mat_exp(exponent);
}

bool is_valid_spin(double s) {
  if (s < 0) return false;
  const double doubled = 2.0 * s;
  return std::abs(doubled - std::round(doubled)) <= 1e-9;
}

int polarization_count(double s) {
  if (!is_valid_spin(s))
    throw std::invalid_argument("spin must be a non-negative half-integer");
  return static_cast<int>(std::lround(2.0 * s)) + 1;
}

double mass_spin(double s, double kappa) {
  if (!is_valid_spin(s))
    throw std::invalid_argument("spin must be a non-negative half-integer");
  if (!(kappa > 0)) throw std::invalid_argument("kappa must be positive");
  return kappa / (s + 0.5);
}

double polarizable_operator(const FourVectord& p, double s) {
  if (!is_valid_spin(s))
    throw std::invalid_argument("spin must be a non-negative half-integer");
  const double psq = minkowski_square(p);
  if (!(psq > 0))
    throw std::invalid_argument("polarizable operator: momentum must be timelike");
  if (s == 0.0) return psq;
  if (s == 0.5) {
    const std::array<Elementd, 4> w = pauli_lubanski(p);
    Bicomplexd wsq{0.0};
    for (int mu = 0; mu < 4; ++mu)
      wsq += metric_sign(mu) * half_trace_product(w[mu], w[mu]);
    const double scale = 1.0 + abs_max(wsq);
    if (std::max({std::abs(wsq.im_i), std::abs(wsq.im_j), std::abs(wsq.im_ij)}) >
        1e-12 * scale)
      throw std::logic_error("polarizable operator: w^2 is not real");
    return psq - wsq.re;
  }
  return psq * (1.0 + 4.0 * s * (s + 1.0));
}

double kg_residual(const WaveSpec& spec, const FourVectord& x, double h) {
  if (!(h > 0)) throw std::invalid_argument("kg residual: step must be positive");
  const Elementd center = quaternion_wave(x, spec).value;
  const double nm = spec.polarizations * spec.mass;
  Elementd residual = Elementd((nm * nm) * center);
  for (int mu = 0; mu < 4; ++mu) {
    FourVectord xp = x;
    FourVectord xm = x;
    xp[mu] += h;
    xm[mu] -= h;
    const Elementd second =
        Elementd((quaternion_wave(xp, spec).value - 2.0 * center +
                  quaternion_wave(xm, spec).value) /
                 (h * h));
    residual += metric_sign(mu) * second;
  }
  return abs_max(residual);
}

namespace {

WaveFlags flags_from_bits(int bits) {
  return WaveFlags{(bits & 1) != 0, (bits & 2) != 0, (bits & 4) != 0};
}

}  // namespace

DiscreteGroupReport discrete_group_check(std::uint64_t seed, int trials) {
  DiscreteGroupReport report;
  report.trials = trials;
  report.involutive = true;
  report.commuting = true;
  report.distinct = true;
  report.sign_negates_exponent = true;
  report.order_negates_wedge = true;
  report.bar_negates_wr = true;
  report.min_separation = std::numeric_limits<double>::infinity();

  auto fail = [&report](bool& axiom, const std::string& message) {
    axiom = false;
    report.failures.push_back(message);
  };

  // flag vectors compose by XOR; check the resulting Cayley table has the
  // Z2^3 group axioms
  report.table_is_z2_cubed = true;
  int table[8][8];
  for (int a = 0; a < 8; ++a)
    for (int b = 0; b < 8; ++b) table[a][b] = a ^ b;
  for (int a = 0; a < 8; ++a) {
    if (table[0][a] != a || table[a][0] != a)
      fail(report.table_is_z2_cubed, "group table: 0 is not the identity");
    if (table[a][a] != 0)
      fail(report.table_is_z2_cubed, "group table: element not self-inverse");
    bool seen[8] = {};
    for (int b = 0; b < 8; ++b) {
      if (table[a][b] < 0 || table[a][b] > 7) {
        fail(report.table_is_z2_cubed, "group table: not closed");
        continue;
      }
      seen[table[a][b]] = true;
      if (table[a][b] != table[b][a])
        fail(report.table_is_z2_cubed, "group table: not abelian");
      for (int c = 0; c < 8; ++c)
        if (table[a][table[b][c]] != table[table[a][b]][c])
          fail(report.table_is_z2_cubed, "group table: not associative");
    }
    for (int v = 0; v < 8; ++v)
      if (!seen[v]) fail(report.table_is_z2_cubed, "group table: row is not a permutation");
  }

  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> coord(-1.0, 1.0);
  std::uniform_real_distribution<double> mass_dist(0.5, 2.0);

  for (int trial = 0; trial < trials; ++trial) {
    const double mass = mass_dist(rng);
    FourVectord p{0.0, coord(rng), coord(rng), coord(rng)};
    p[0] = std::sqrt(mass * mass + p.tail<3>().squaredNorm());
    const FourVectord x{coord(rng), coord(rng), coord(rng), coord(rng)};

    std::array<Elementd, 8> exponents;
    std::array<Elementd, 8> values;
    for (int bits = 0; bits < 8; ++bits) {
      const WaveSpec spec = make_wave_spec(mass, 2, p, flags_from_bits(bits));
      exponents[bits] = wave_exponent(x, spec);
      values[bits] = mat_exp(exponents[bits]);
    }

    // toggling a flag twice restores the wave; toggles commute
    for (int g = 0; g < 3; ++g) {
      for (int bits = 0; bits < 8; ++bits) {
        const int twice = (bits ^ (1 << g)) ^ (1 << g);
        if (max_abs_diff(values[twice], values[bits]) != 0.0)
          fail(report.involutive, "involution: double toggle changed the wave");
      }
      for (int h2 = 0; h2 < 3; ++h2) {
        const int ab = (0 ^ (1 << g)) ^ (1 << h2);
        const int ba = (0 ^ (1 << h2)) ^ (1 << g);
        if (max_abs_diff(values[ab], values[ba]) != 0.0)
          fail(report.commuting, "commutativity: toggle order changed the wave");
      }
    }

    for (int a = 0; a < 8; ++a)
      for (int b = a + 1; b < 8; ++b) {
        const double sep = max_abs_diff(values[a], values[b]);
        report.min_separation = std::min(report.min_separation, sep);
        if (sep <= 1e-6) {
          std::ostringstream os;
          os << "distinctness: waves " << a << " and " << b << " coincide (sep " << sep << ")";
          fail(report.distinct, os.str());
        }
      }

    // exponent-level sign rules
    const Elementd X = paravector(x);
    const Elementd P = paravector(p);
    const Elementd base = exponents[0];
    const double tol = 1e-12 * (1.0 + abs_max(base));
    if (max_abs_diff(exponents[1], Elementd(-base)) > tol)
      fail(report.sign_negates_exponent, "sign flip: exponent is not negated");
    const Elementd order_expected =
        Elementd((-1.0 * kPseudo) * Elementd(dot(X, P) - wedge(X, P)));
    if (max_abs_diff(exponents[2], order_expected) > tol)
      fail(report.order_negates_wedge, "order swap: wedge part not negated");
    const Elementd bar_expected =
        Elementd((-1.0 * kPseudo) * Elementd(dot(X, P) + wedge(X, P) -
                                             Elementd(2.0 * wr(X, P))));
    if (max_abs_diff(exponents[4], bar_expected) > tol)
      fail(report.bar_negates_wr, "bar swap: wr part not negated");
  }
  return report;
}

}  // namespace hyperwave
