#pragma once

#include <json.hpp>

#include <cctype>
#include <iomanip>
#include <limits>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>

#include "hyperwave/algebra.hpp"
#include "hyperwave/relativity.hpp"
#include "hyperwave/waves.hpp"

namespace hyperwave {

/// Bicomplex values serialize as [re, im_i, im_j, im_ij].
inline nlohmann::json to_json(const Bicomplexd& b) {
  return nlohmann::json::array({b.re, b.im_i, b.im_j, b.im_ij});
}

/// Elements serialize as a row-major 2x2 array of bicomplex arrays.
inline nlohmann::json to_json(const Elementd& e) {
  return nlohmann::json::array({nlohmann::json::array({to_json(e(0, 0)), to_json(e(0, 1))}),
                                nlohmann::json::array({to_json(e(1, 0)), to_json(e(1, 1))})});
}

inline nlohmann::json to_json(const FourVectord& v) {
  return nlohmann::json::array({v[0], v[1], v[2], v[3]});
}

/// Full-precision decimal representation.
inline std::string full_precision(double x) {
  std::ostringstream os;
  os << std::setprecision(std::numeric_limits<double>::max_digits10) << x;
  return os.str();
}

/// Parses "x0,x1,x2,x3".
inline FourVectord parse_four(const std::string& text) {
  FourVectord v;
  std::istringstream is(text);
  std::string item;
  int count = 0;
  while (std::getline(is, item, ',')) {
    if (count >= 4) throw std::invalid_argument("expected exactly four components: " + text);
    std::size_t used = 0;
    v[count] = std::stod(item, &used);
    while (used < item.size() && std::isspace(static_cast<unsigned char>(item[used]))) ++used;
    if (used != item.size())
      throw std::invalid_argument("malformed component '" + item + "' in: " + text);
    ++count;
  }
  if (count != 4) throw std::invalid_argument("expected exactly four components: " + text);
  return v;
}

/// Parses a comma-separated subset of {s, o, b}: sign flip, order swap,
/// bar swap.
inline WaveFlags parse_wave_flags(const std::string& text) {
  WaveFlags flags;
  if (text.empty()) return flags;
  std::istringstream is(text);
  std::string item;
  while (std::getline(is, item, ',')) {
    if (item == "s")
      flags.sign_flip = true;
    else if (item == "o")
      flags.order_swap = true;
    else if (item == "b")
      flags.bar_swap = true;
    else
      throw std::invalid_argument("unknown wave flag '" + item + "' (expected s, o or b)");
  }
  return flags;
}

/// 256 CSV rows "rho,mu,nu,sigma,re,im_i,im_j,im_ij", sorted by index.
inline void write_trace_table_csv(std::ostream& os) {
  const TraceTable<double>& t = trace_table<double>();
  os << "rho,mu,nu,sigma,re,im_i,im_j,im_ij\n";
  for (int r = 0; r < 4; ++r)
    for (int m = 0; m < 4; ++m)
      for (int n = 0; n < 4; ++n)
        for (int s = 0; s < 4; ++s) {
          const Bicomplexd& b = t(r, m, n, s);
          os << r << ',' << m << ',' << n << ',' << s << ',' << full_precision(b.re) << ','
             << full_precision(b.im_i) << ',' << full_precision(b.im_j) << ','
             << full_precision(b.im_ij) << '\n';
        }
}

}  // namespace hyperwave
