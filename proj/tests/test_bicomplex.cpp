#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "hyperwave/bicomplex.hpp"

using hyperwave::Bicomplexd;
using hyperwave::abs_max;
using hyperwave::approx_eq;

namespace {

const Bicomplexd one{1.0};
const Bicomplexd i = hyperwave::unit_i<double>;
const Bicomplexd j = hyperwave::unit_j<double>;
const Bicomplexd ij = hyperwave::unit_ij<double>;

// Independent multiplication oracle: structure constants over the basis
// (1, i, j, ij). kUnitTable[a][b] -> (sign, unit index).
struct UnitProduct {
  int sign;
  int unit;
};
constexpr UnitProduct kUnitTable[4][4] = {
    {{1, 0}, {1, 1}, {1, 2}, {1, 3}},
    {{1, 1}, {-1, 0}, {1, 3}, {-1, 2}},
    {{1, 2}, {1, 3}, {1, 0}, {1, 1}},
    {{1, 3}, {-1, 2}, {1, 1}, {-1, 0}},
};

Bicomplexd brute_mul(const Bicomplexd& a, const Bicomplexd& b) {
  const double ca[4] = {a.re, a.im_i, a.im_j, a.im_ij};
  const double cb[4] = {b.re, b.im_i, b.im_j, b.im_ij};
  double out[4] = {0, 0, 0, 0};
  for (int x = 0; x < 4; ++x)
    for (int y = 0; y < 4; ++y) {
      const UnitProduct p = kUnitTable[x][y];
      out[p.unit] += p.sign * ca[x] * cb[y];
    }
  return {out[0], out[1], out[2], out[3]};
}

Bicomplexd random_bicomplex(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> dist(-2.0, 2.0);
  return {dist(rng), dist(rng), dist(rng), dist(rng)};
}

}  // namespace

TEST_CASE("unit table") {
  CHECK(i * i == -one);
  CHECK(j * j == one);
  CHECK(ij * ij == -one);
  CHECK(i * j == ij);
  CHECK(j * i == ij);
  CHECK(i * ij == -j);
  CHECK(j * ij == i);
}

TEST_CASE("product expansion examples") {
  CHECK((one + i) * (one + j) == Bicomplexd{1, 1, 1, 1});
  // pseudoscalar value: (-ij)^2 = i^2 j^2 = -1, cross-checked by the oracle
  CHECK(brute_mul(-ij, -ij) == -one);
  CHECK((-ij) * (-ij) == -one);
}

TEST_CASE("operator* agrees with the structure-constant oracle") {
  std::mt19937_64 rng(11);
  for (int iter = 0; iter < 200; ++iter) {
    const Bicomplexd a = random_bicomplex(rng);
    const Bicomplexd b = random_bicomplex(rng);
    CHECK(approx_eq(a * b, brute_mul(a, b), 1e-14));
  }
}

TEST_CASE("ring axioms on random triples") {
  std::mt19937_64 rng(12);
  for (int iter = 0; iter < 200; ++iter) {
    const Bicomplexd a = random_bicomplex(rng);
    const Bicomplexd b = random_bicomplex(rng);
    const Bicomplexd c = random_bicomplex(rng);
    CHECK(approx_eq(a + b, b + a, 1e-12));
    CHECK(approx_eq(a * b, b * a, 1e-12));
    CHECK(approx_eq((a + b) + c, a + (b + c), 1e-12));
    CHECK(approx_eq((a * b) * c, a * (b * c), 1e-12));
    CHECK(approx_eq(a * (b + c), a * b + a * c, 1e-12));
  }
}

TEST_CASE("zero divisors exist; no inversion provided") {
  CHECK((one + j) * (one - j) == Bicomplexd{0.0});
}

TEST_CASE("conjugation sign rules") {
  const Bicomplexd all{1, 1, 1, 1};
  CHECK(conj_i(all) == Bicomplexd{1, -1, 1, -1});
  CHECK(conj_j(j) == -j);
  CHECK(conj_j(all) == Bicomplexd{1, 1, -1, -1});
  CHECK(conj_ij(ij) == ij);
  CHECK(conj_ij(all) == Bicomplexd{1, -1, -1, 1});
}

TEST_CASE("conjugations are involutive ring homomorphisms") {
  std::mt19937_64 rng(13);
  for (int iter = 0; iter < 200; ++iter) {
    const Bicomplexd a = random_bicomplex(rng);
    const Bicomplexd b = random_bicomplex(rng);
    CHECK(conj_i(conj_i(a)) == a);
    CHECK(conj_j(conj_j(a)) == a);
    CHECK(conj_ij(conj_ij(a)) == a);
    CHECK(approx_eq(conj_i(a * b), conj_i(a) * conj_i(b), 1e-12));
    CHECK(approx_eq(conj_j(a * b), conj_j(a) * conj_j(b), 1e-12));
    CHECK(approx_eq(conj_ij(a * b), conj_ij(a) * conj_ij(b), 1e-12));
    CHECK(conj_i(a + b) == conj_i(a) + conj_i(b));
    CHECK(conj_j(a + b) == conj_j(a) + conj_j(b));
    CHECK(conj_ij(a) == conj_i(conj_j(a)));
    CHECK(conj_ij(a) == conj_j(conj_i(a)));
  }
}

TEST_CASE("approx_eq componentwise semantics") {
  const Bicomplexd x{0.5, -1.5, 2.0, 0.25};
  CHECK(approx_eq(x, x, 0.0));
  CHECK(approx_eq(one, Bicomplexd{1.0 + 1e-15}, 1e-12));
  CHECK_FALSE(approx_eq(j, -j, 1e-12));
}

TEST_CASE("scale and divide by real") {
  const Bicomplexd a{2, -4, 6, 8};
  CHECK(a * 0.5 == Bicomplexd{1, -2, 3, 4});
  CHECK(0.5 * a == a * 0.5);
  CHECK(a / 2.0 == a * 0.5);
  CHECK(-a == Bicomplexd{-2, 4, -6, -8});
  CHECK(abs_max(a) == 8.0);
}

TEST_CASE("single-precision instantiation") {
  using B = hyperwave::Bicomplex<float>;
  const B fi{0.f, 1.f, 0.f, 0.f};
  const B fj{0.f, 0.f, 1.f, 0.f};
  CHECK(fi * fi == B{-1.f});
  CHECK(fj * fj == B{1.f});
  CHECK(fi * fj == B{0.f, 0.f, 0.f, 1.f});
}
