#include "hyperwave/table_reference.hpp"

#include <set>
#include <sstream>

namespace hyperwave {

namespace {

std::array<int, 4> digits(const char* pattern) {
  return {pattern[0] - '0', pattern[1] - '0', pattern[2] - '0', pattern[3] - '0'};
}

std::vector<ReferenceEntry> build_reference() {
  const Bicomplexd one{1.0};
  const Bicomplexd ij{0.0, 0.0, 0.0, 1.0};

  static constexpr const char* kPlusOne[] = {"0110", "1001", "0220", "2002", "0330", "3003"};
  static constexpr const char* kMinusOne[] = {"1221", "2112", "2332", "3223", "1331", "3113"};
  static constexpr const char* kPlusIj[] = {"0132", "3201", "0213", "1302", "0321", "2103",
                                            "1023", "2310", "2031", "3120", "3012", "1230"};
  static constexpr const char* kMinusIj[] = {"0123", "2301", "0231", "3102", "0312", "1203",
                                             "1032", "3210", "2013", "1320", "3021", "2130"};

  std::vector<ReferenceEntry> entries;
  entries.reserve(48);
  for (const char* p : kPlusOne) entries.push_back({digits(p), one, true});
  for (const char* p : kMinusOne) entries.push_back({digits(p), -one, true});
  for (const char* p : kPlusIj) entries.push_back({digits(p), ij, true});
  for (const char* p : kMinusIj) entries.push_back({digits(p), -ij, true});

  // the +-1 rows list only the (a,b,b,a) patterns; swapping the second index
  // pair gives the (a,b,a,b) partners with opposite sign
  const std::size_t real_count = 12;
  for (std::size_t k = 0; k < real_count; ++k) {
    const ReferenceEntry& e = entries[k];
    entries.push_back(
        {{e.index[0], e.index[1], e.index[3], e.index[2]}, -e.value, false});
  }
  return entries;
}

}  // namespace

const std::vector<ReferenceEntry>& trace_table_reference() {
  static const std::vector<ReferenceEntry> entries = build_reference();
  return entries;
}

TableComparison compare_trace_table_reference() {
  const TraceTable<double>& t = trace_table<double>();
  const std::vector<ReferenceEntry>& reference = trace_table_reference();

  TableComparison result;
  result.total = static_cast<int>(reference.size());
  std::set<std::array<int, 4>> covered;
  for (const ReferenceEntry& e : reference) {
    covered.insert(e.index);
    const Bicomplexd& computed = t(e.index[0], e.index[1], e.index[2], e.index[3]);
    if (computed == e.value) {
      ++result.matched;
    } else {
      std::ostringstream os;
      os << "entry " << e.index[0] << e.index[1] << e.index[2] << e.index[3]
         << ": computed " << computed << ", reference " << e.value;
      result.mismatches.push_back(os.str());
    }
  }

  for (int r = 0; r < 4; ++r)
    for (int m = 0; m < 4; ++m)
      for (int n = 0; n < 4; ++n)
        for (int s = 0; s < 4; ++s) {
          if (covered.count({r, m, n, s})) continue;
          if (t(r, m, n, s) != Bicomplexd(0.0)) {
            std::ostringstream os;
            os << "entry " << r << m << n << s << ": expected zero, computed "
               << t(r, m, n, s);
            result.mismatches.push_back(os.str());
          }
        }
  return result;
}

}  // namespace hyperwave
