#pragma once

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "hnerve/error.hpp"

namespace hnerve::detail {

inline void check_ground_size(std::size_t r, std::size_t cap, const char* what) {
  if (r > cap || r > 63)
    throw CapExceeded(std::string(what) + ": " + std::to_string(r) + " ground elements exceed cap of " +
                      std::to_string(std::min<std::size_t>(cap, 63)));
}

/// Enumerates a downward-closed family of subsets of {0..r-1} level by level.
/// A subset is grown only by indices above its maximum, so each subset is
/// produced once, and only from an accepted parent. `extend(state, t)` gives
/// the state of parent ∪ {t}; `accept(state)` decides membership; `record`
/// receives every accepted (mask, state) including the root.
template <class State, class Extend, class Accept, class Record>
void enumerate_downward_closed(std::size_t r, State root, Extend&& extend, Accept&& accept,
                               Record&& record, std::size_t max_faces) {
  std::vector<std::pair<std::uint64_t, State>> level;
  record(std::uint64_t{0}, root);
  level.emplace_back(0, std::move(root));
  std::size_t produced = 1;
  while (!level.empty()) {
    std::vector<std::pair<std::uint64_t, State>> next;
    for (const auto& [mask, state] : level) {
      const std::size_t start = mask == 0 ? 0 : static_cast<std::size_t>(64 - std::countl_zero(mask));
      for (std::size_t t = start; t < r; ++t) {
        State grown = extend(state, t);
        if (!accept(grown)) continue;
        const std::uint64_t child = mask | (std::uint64_t{1} << t);
        if (++produced > max_faces)
          throw CapExceeded("subset enumeration exceeded cap of " + std::to_string(max_faces) + " faces");
        record(child, grown);
        next.emplace_back(child, std::move(grown));
      }
    }
    level = std::move(next);
  }
}

}  // namespace hnerve::detail
