#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "hyperwave/algebra.hpp"

using hyperwave::Bicomplexd;
using hyperwave::Elementd;
using hyperwave::approx_eq;
using hyperwave::bar;
using hyperwave::basis;
using hyperwave::grade_involution;
using hyperwave::identity;
using hyperwave::max_abs_diff;
using hyperwave::pauli;
using hyperwave::reversion;
using hyperwave::scalar_product;

namespace {

const Bicomplexd i = hyperwave::unit_i<double>;
const Bicomplexd j = hyperwave::unit_j<double>;
const Bicomplexd ij = hyperwave::unit_ij<double>;

Elementd make(Bicomplexd a, Bicomplexd b, Bicomplexd c, Bicomplexd d) {
  Elementd m;
  m << a, b, c, d;
  return m;
}

// Independent 2x2 product: explicit index loops over Bicomplex entries.
Elementd brute_mat_mul(const Elementd& a, const Elementd& b) {
  Elementd out;
  for (int r = 0; r < 2; ++r)
    for (int c = 0; c < 2; ++c) out(r, c) = a(r, 0) * b(0, c) + a(r, 1) * b(1, c);
  return out;
}

Elementd random_element(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> dist(-2.0, 2.0);
  Elementd m;
  for (int r = 0; r < 2; ++r)
    for (int c = 0; c < 2; ++c)
      m(r, c) = Bicomplexd{dist(rng), dist(rng), dist(rng), dist(rng)};
  return m;
}

constexpr int eps3(int k, int l, int m) { return (k - l) * (l - m) * (m - k) / 2; }

}  // namespace

TEST_CASE("pauli matrices: the standard convention") {
  CHECK(max_abs_diff(pauli(1), make(0.0, 1.0, 1.0, 0.0)) == 0);
  CHECK(max_abs_diff(pauli(2), make(0.0, -i, i, 0.0)) == 0);
  CHECK(max_abs_diff(pauli(3), make(1.0, 0.0, 0.0, -1.0)) == 0);
  CHECK_THROWS_AS(pauli(0), std::invalid_argument);
  CHECK_THROWS_AS(pauli(4), std::invalid_argument);
}

TEST_CASE("basis paravectors e_0 = 1, e_k = j sigma_k") {
  CHECK(max_abs_diff(basis(0), identity()) == 0);
  CHECK(max_abs_diff(basis(1), make(0.0, j, j, 0.0)) == 0);
  CHECK(max_abs_diff(basis(2), make(0.0, -ij, ij, 0.0)) == 0);
  CHECK(max_abs_diff(basis(3), make(j, 0.0, 0.0, -j)) == 0);
  CHECK_THROWS_AS(basis(4), std::invalid_argument);
}

TEST_CASE("matrix product matches the explicit index loops") {
  std::mt19937_64 rng(21);
  for (int iter = 0; iter < 50; ++iter) {
    const Elementd a = random_element(rng);
    const Elementd b = random_element(rng);
    CHECK(approx_eq(Elementd(a * b), brute_mat_mul(a, b), 1e-13));
  }
}

TEST_CASE("hyperbolic multiplication rule over all spatial pairs") {
  // e_k e_l = delta_kl + ij eps_klm e_m, checked by brute multiplication
  for (int k = 1; k <= 3; ++k)
    for (int l = 1; l <= 3; ++l) {
      Elementd expected = hyperwave::zero_element<double>();
      if (k == l) expected = identity();
      for (int m = 1; m <= 3; ++m)
        if (eps3(k, l, m) != 0)
          expected += Elementd((double(eps3(k, l, m)) * ij) * basis(m));
      CHECK(max_abs_diff(brute_mat_mul(basis(k), basis(l)), expected) == 0);
      CHECK(max_abs_diff(Elementd(basis(k) * basis(l)), expected) == 0);
    }
}

TEST_CASE("squares and a cross product example") {
  CHECK(max_abs_diff(Elementd(basis(1) * basis(1)), identity()) == 0);
  CHECK(max_abs_diff(Elementd(basis(2) * basis(2)), identity()) == 0);
  CHECK(max_abs_diff(Elementd(basis(1) * basis(2)), Elementd(ij * basis(3))) == 0);
}

TEST_CASE("trace") {
  CHECK(identity().trace() == Bicomplexd{2.0});
  CHECK(pauli(3).trace() == Bicomplexd{0.0});
  CHECK(basis(1).trace() == Bicomplexd{0.0});
}

TEST_CASE("conjugation fixes e_0 and negates e_k") {
  CHECK(max_abs_diff(bar(basis(0)), basis(0)) == 0);
  for (int k = 1; k <= 3; ++k) CHECK(max_abs_diff(bar(basis(k)), Elementd(-basis(k))) == 0);
}

TEST_CASE("reversion fixes e_k, grade involution negates e_k") {
  for (int k = 1; k <= 3; ++k) {
    CHECK(max_abs_diff(reversion(basis(k)), basis(k)) == 0);
    CHECK(max_abs_diff(grade_involution(basis(k)), Elementd(-basis(k))) == 0);
  }
  CHECK(max_abs_diff(grade_involution(basis(0)), basis(0)) == 0);
}

TEST_CASE("involution algebra on random elements") {
  std::mt19937_64 rng(22);
  for (int iter = 0; iter < 50; ++iter) {
    const Elementd a = random_element(rng);
    const Elementd b = random_element(rng);
    // involutive
    CHECK(max_abs_diff(bar(bar(a)), a) == 0);
    CHECK(max_abs_diff(reversion(reversion(a)), a) == 0);
    CHECK(max_abs_diff(grade_involution(grade_involution(a)), a) == 0);
    // bar and reversion are anti-automorphisms, grade involution an automorphism
    CHECK(approx_eq(bar(Elementd(a * b)), Elementd(bar(b) * bar(a)), 1e-12));
    CHECK(approx_eq(reversion(Elementd(a * b)), Elementd(reversion(b) * reversion(a)), 1e-12));
    CHECK(approx_eq(grade_involution(Elementd(a * b)),
                    Elementd(grade_involution(a) * grade_involution(b)), 1e-12));
    // composition in either order gives the grade involution
    CHECK(max_abs_diff(bar(reversion(a)), grade_involution(a)) == 0);
    CHECK(max_abs_diff(reversion(bar(a)), grade_involution(a)) == 0);
  }
}

TEST_CASE("pseudoscalar") {
  const Bicomplexd p = hyperwave::pseudoscalar<double>();
  CHECK(p == -ij);
  CHECK(p * p == Bicomplexd{-1.0});
}

TEST_CASE("pseudoscalar form of the multiplication rule") {
  // e_k bar(e_l) = -delta_kl + pseudo * eps_klm e_m over all nine pairs
  const Bicomplexd pseudo = hyperwave::pseudoscalar<double>();
  for (int k = 1; k <= 3; ++k)
    for (int l = 1; l <= 3; ++l) {
      Elementd expected = hyperwave::zero_element<double>();
      if (k == l) expected = Elementd(-identity());
      for (int m = 1; m <= 3; ++m)
        if (eps3(k, l, m) != 0)
          expected += Elementd((double(eps3(k, l, m)) * pseudo) * basis(m));
      CHECK(max_abs_diff(Elementd(basis(k) * bar(basis(l))), expected) == 0);
    }
}

TEST_CASE("trace scalar product reproduces the Minkowski metric") {
  for (int mu = 0; mu < 4; ++mu)
    for (int nu = 0; nu < 4; ++nu) {
      // independent route: explicit transpose + entrywise unit flips + loops
      const Elementd em = basis(mu);
      Elementd em_bar;
      for (int r = 0; r < 2; ++r)
        for (int c = 0; c < 2; ++c) em_bar(r, c) = conj_ij(em(c, r));
      const Bicomplexd by_hand = brute_mat_mul(em_bar, basis(nu)).trace() * 0.5;
      const double expected = mu == nu ? (mu == 0 ? 1.0 : -1.0) : 0.0;
      CHECK(by_hand == Bicomplexd{expected});
      CHECK(scalar_product(basis(mu), basis(nu)) == Bicomplexd{expected});
    }
}

TEST_CASE("scalar_part_strict rejects non-scalar elements") {
  CHECK(hyperwave::scalar_part_strict(Elementd(2.5 * identity())) == Bicomplexd{2.5});
  CHECK_THROWS_AS(hyperwave::scalar_part_strict(pauli(1)), std::logic_error);
}
