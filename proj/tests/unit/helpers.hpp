#pragma once

#include <string>
#include <vector>

#include "hnerve/complex.hpp"
#include "hnerve/homology.hpp"
#include "oracles.hpp"

namespace testing_helpers {

// "ABCD BCDE" -> facets over single-letter labels.
inline hnerve::SimplicialComplex complex_of(const std::string& text) {
  std::vector<std::vector<std::string>> raw;
  std::vector<std::string> cur;
  bool open = false;
  for (char ch : text + " ") {
    if (ch == ' ') {
      if (open) raw.push_back(cur);
      cur.clear();
      open = false;
    } else if (ch == '0') {
      open = true;  // "0" alone is the empty facet
    } else {
      cur.emplace_back(1, ch);
      open = true;
    }
  }
  return hnerve::build_complex(raw).complex;
}

inline std::vector<std::size_t> numbers(const hnerve::BettiProfile& b) {
  return oracle::trim({b.values().begin(), b.values().end()});
}

inline std::string data_path(const std::string& name) { return std::string(HNERVE_TEST_DATA) + "/" + name; }

}  // namespace testing_helpers
