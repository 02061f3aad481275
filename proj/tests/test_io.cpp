#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <sstream>

#include "hyperwave/io.hpp"
#include "hyperwave/verify.hpp"

using hyperwave::Bicomplexd;
using hyperwave::Elementd;
using hyperwave::FourVectord;

TEST_CASE("bicomplex serializes as a four-element array") {
  const nlohmann::json j = hyperwave::to_json(Bicomplexd{1.5, -2.0, 0.25, 3.0});
  CHECK(j.is_array());
  CHECK(j.size() == 4);
  CHECK(j[0].get<double>() == 1.5);
  CHECK(j[1].get<double>() == -2.0);
  CHECK(j[2].get<double>() == 0.25);
  CHECK(j[3].get<double>() == 3.0);
}

TEST_CASE("element serializes as a row-major 2x2 nest") {
  Elementd e;
  e << Bicomplexd{1.0}, Bicomplexd{0, 2, 0, 0}, Bicomplexd{0, 0, 3, 0}, Bicomplexd{0, 0, 0, 4};
  const nlohmann::json j = hyperwave::to_json(e);
  CHECK(j.size() == 2);
  CHECK(j[0].size() == 2);
  CHECK(j[0][1][1].get<double>() == 2.0);
  CHECK(j[1][0][2].get<double>() == 3.0);
  CHECK(j[1][1][3].get<double>() == 4.0);
}

TEST_CASE("full_precision round-trips doubles") {
  std::mt19937_64 rng(61);
  std::uniform_real_distribution<double> dist(-1e6, 1e6);
  for (int iter = 0; iter < 100; ++iter) {
    const double x = dist(rng) * std::pow(10.0, int(rng() % 20) - 10);
    CHECK(std::stod(hyperwave::full_precision(x)) == x);
  }
}

TEST_CASE("parse_four") {
  const FourVectord v = hyperwave::parse_four("1.5,-2,0.25,3e-2");
  CHECK(v[0] == 1.5);
  CHECK(v[1] == -2.0);
  CHECK(v[2] == 0.25);
  CHECK(v[3] == 0.03);
  CHECK_THROWS_AS(hyperwave::parse_four("1,2,3"), std::invalid_argument);
  CHECK_THROWS_AS(hyperwave::parse_four("1,2,3,4,5"), std::invalid_argument);
  CHECK_THROWS_AS(hyperwave::parse_four("1,2,x,4"), std::invalid_argument);
}

TEST_CASE("parse_wave_flags") {
  const hyperwave::WaveFlags none = hyperwave::parse_wave_flags("");
  CHECK_FALSE(none.sign_flip);
  CHECK_FALSE(none.order_swap);
  CHECK_FALSE(none.bar_swap);
  const hyperwave::WaveFlags sb = hyperwave::parse_wave_flags("s,b");
  CHECK(sb.sign_flip);
  CHECK_FALSE(sb.order_swap);
  CHECK(sb.bar_swap);
  CHECK_THROWS_AS(hyperwave::parse_wave_flags("s,q"), std::invalid_argument);
}

TEST_CASE("trace table CSV: header, row count, stable order") {
  std::ostringstream once, twice;
  hyperwave::write_trace_table_csv(once);
  hyperwave::write_trace_table_csv(twice);
  CHECK(once.str() == twice.str());

  std::istringstream is(once.str());
  std::string line;
  std::getline(is, line);
  CHECK(line == "rho,mu,nu,sigma,re,im_i,im_j,im_ij");
  int rows = 0;
  std::string first, last;
  while (std::getline(is, line)) {
    if (rows == 0) first = line;
    last = line;
    ++rows;
  }
  CHECK(rows == 256);
  CHECK(first.rfind("0,0,0,0,", 0) == 0);
  CHECK(last.rfind("3,3,3,3,", 0) == 0);
  // spot entry: (0,1,1,0) -> +1
  CHECK(once.str().find("0,1,1,0,1,0,0,0") != std::string::npos);
  // spot entry: (0,1,3,2) -> +ij
  CHECK(once.str().find("0,1,3,2,0,0,0,1") != std::string::npos);
}

TEST_CASE("verification report is deterministic for a fixed seed") {
  const hyperwave::verify::Report a = hyperwave::verify::run_verification(123);
  const hyperwave::verify::Report b = hyperwave::verify::run_verification(123);
  REQUIRE(a.checks.size() == b.checks.size());
  CHECK(a.all_passed());
  for (std::size_t k = 0; k < a.checks.size(); ++k) {
    CHECK(a.checks[k].suite == b.checks[k].suite);
    CHECK(a.checks[k].check == b.checks[k].check);
    if (a.checks[k].check.rfind("runtime", 0) == 0) continue;  // wall time varies
    CHECK(a.checks[k].measured == b.checks[k].measured);
  }
  // every record carries the seed
  for (const auto& c : a.checks) CHECK(c.seed == 123);
}
