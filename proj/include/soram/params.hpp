#pragma once

#include <cmath>
#include <cstdint>
#include <string>

#include "soram/common.hpp"

namespace soram {

// FUNCTIONAL skips the steps that exist only for obliviousness (padding
// probes, full rewrites, oblivious rebuild passes); the data-structure
// evolution is identical to OBLIVIOUS given the same master seed.
enum class OramMode : uint8_t { Functional, Oblivious };

struct OramParams {
  uint64_t n = 2;             // RAM size
  double epsilon = 0.2;       // table load slack
  uint32_t c = 2;             // move-limit factor: c * ceil(log2 n) moves
  uint32_t stash_factor = 1;  // stash capacity = s * ceil(log2 n)
  double nu = 1.0;            // private workspace holds ceil(n^nu) cells
  OramMode mode = OramMode::Functional;
  uint64_t master_seed = 0;
  std::string cipher = "transparent";

  uint32_t q_size() const { return std::max<uint32_t>(1, ceil_log2(n)); }

  uint32_t levels() const {
    uint32_t q = q_size();
    uint32_t level = 1;
    while ((uint64_t(1) << level) * q < n) ++level;
    return level;
  }

  uint64_t stash_capacity() const { return uint64_t(stash_factor) * q_size(); }
  uint32_t move_limit() const { return c * q_size(); }

  uint64_t level_capacity(uint32_t level) const {
    return (uint64_t(1) << level) * q_size();
  }

  uint64_t table_cells_per_side(uint32_t level) const {
    long double cells = (1.0L + static_cast<long double>(epsilon)) *
                        static_cast<long double>(level_capacity(level));
    return static_cast<uint64_t>(std::ceil(cells));
  }

  uint64_t workspace_cells() const {
    long double cap = std::pow(static_cast<long double>(n), static_cast<long double>(nu));
    return static_cast<uint64_t>(std::ceil(cap));
  }

  // Total server cells across Q, S and all tables.
  uint64_t server_cells() const {
    uint64_t total = q_size() + stash_capacity();
    for (uint32_t i = 1; i <= levels(); ++i) total += 2 * table_cells_per_side(i);
    return total;
  }

  void validate() const {
    if (n < 2) throw UsageError("params: n must be >= 2");
    if (!(epsilon > 0.0)) throw UsageError("params: epsilon must be > 0");
    if (c < 1) throw UsageError("params: c must be >= 1");
    if (stash_factor < 1) throw UsageError("params: stash factor must be >= 1");
    if (!(nu > 0.0)) throw UsageError("params: nu must be > 0");
  }

  friend bool operator==(const OramParams&, const OramParams&) = default;
};

}  // namespace soram
