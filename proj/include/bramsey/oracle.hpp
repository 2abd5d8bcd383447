#pragma once

#include <cstdint>
#include <optional>
#include <span>

#include "bramsey/coloring.hpp"

namespace bramsey {

/// Limit on enumerated edge bits (2^24 colourings).
inline constexpr int kOracleMaxEdges = 24;

struct OracleResult {
  bool arrows = false;
  std::uint64_t good_count = 0;
  /// The good colouring with the smallest bitmask, bit x*n + y set iff x_x y_y is red.
  std::optional<Coloring> example;
};

/// Enumerates all 2^(m*n) colourings. Deliberately shares no code with the
/// verifier or the search: rows are plain integers and copies are checked by
/// direct subset enumeration. Throws TooLarge when m*n > 24.
/// threads = 0 uses the hardware concurrency.
OracleResult brute_force_arrow(const ProblemSpec& spec, unsigned threads = 0);

/// Whether some colouring extending `fixed` (its first rows) is good, where the
/// next row has exactly `next_degree` red edges when given and every other free
/// row has at most `degree_cap`. Throws TooLarge when the free cells exceed 24,
/// n > 32 or m > 24.
bool has_good_completion(const ProblemSpec& spec, std::span<const YSet> fixed,
                         std::optional<int> next_degree, int degree_cap);

}  // namespace bramsey
