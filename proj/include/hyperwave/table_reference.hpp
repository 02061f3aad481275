#pragma once

#include <array>
#include <string>
#include <vector>

#include "hyperwave/bicomplex.hpp"
#include "hyperwave/relativity.hpp"

namespace hyperwave {

/// One known nonzero entry of the half-trace tensor, indexed (rho, mu, nu,
/// sigma). `published` marks the 36 entries listed in the reference table;
/// the remaining 12 real entries follow from the sigma_mu_nu = -sigma_nu_mu
/// antisymmetry.
struct ReferenceEntry {
  std::array<int, 4> index;
  Bicomplexd value;
  bool published;
};

/// The 48 known nonzero entries: 12 equal to +1 or -1 listed directly,
/// 24 equal to +-ij listed directly, and 12 more +-1 entries generated by
/// swapping the second index pair (which flips the sign).
const std::vector<ReferenceEntry>& trace_table_reference();

struct TableComparison {
  int matched = 0;
  int total = 0;
  std::vector<std::string> mismatches;

  bool all_matched() const { return matched == total; }
};

/// Compares the computed trace table against every reference entry (exact
/// equality) and checks that all remaining entries vanish.
TableComparison compare_trace_table_reference();

}  // namespace hyperwave
