#pragma once

#include <cstdint>
#include <limits>
#include <optional>
#include <utility>
#include <vector>

#include "soram/crypto.hpp"
#include "soram/record.hpp"

namespace soram {

enum class TableMode : uint8_t { Prf, StoredLocations };

struct CuckooParams {
  uint16_t level = 1;
  uint64_t cells_per_side = 1;  // m
  uint64_t capacity_items = 1;  // load stays strictly below 1/2 of total cells
  TableMode mode = TableMode::Prf;
  uint64_t seed0 = 0;  // PRF mode only
  uint64_t seed1 = 0;
  uint32_t move_limit = 1;
};

enum class InsertResult : uint8_t { Placed, Stashed, StashOverflow };

// Plaintext overflow buffer shared by all levels. A spilled index is stored
// at most once; a second spill of the same index keeps the fresher copy.
class StashBuffer {
 public:
  static constexpr size_t kUnbounded = std::numeric_limits<size_t>::max();

  explicit StashBuffer(size_t capacity) : capacity_(capacity) {}

  // Returns false iff a new slot was needed and the capacity is exhausted.
  bool spill(const Record& item);

  // Max-epoch union with another entry set; false on overflow (buffer is
  // left holding the full union so the demand stays measurable).
  bool merge(const std::vector<Record>& entries);

  bool remove(uint64_t index);
  const Record* find(uint64_t index) const;

  const std::vector<Record>& entries() const { return entries_; }
  size_t size() const { return entries_.size(); }
  size_t capacity() const { return capacity_; }
  bool overflowed() const { return entries_.size() > capacity_; }

 private:
  size_t capacity_;
  std::vector<Record> entries_;
};

struct CuckooBuildResult;

// Two equal subtables; every key lives at one of its two designated cells or
// in the stash. Locations come from per-generation PRF seeds or, in the tree
// variant, travel inside the records themselves.
class CuckooTable {
 public:
  explicit CuckooTable(const CuckooParams& params);

  const CuckooParams& params() const { return params_; }
  uint64_t occupancy() const { return occupancy_; }

  std::pair<uint64_t, uint64_t> probe_locations(uint64_t x) const;
  std::pair<uint64_t, uint64_t> probe_locations(const Record& item) const;

  InsertResult insert(Record item, StashBuffer& stash);

  struct LookupResult {
    std::optional<Record> found;
    std::pair<uint64_t, uint64_t> probed;  // always exactly two cells
  };
  LookupResult lookup(uint64_t x) const;
  LookupResult lookup_at(std::pair<uint64_t, uint64_t> locs, uint64_t x) const;

  const Record& cell(int side, uint64_t offset) const;
  const std::vector<Record>& side(int s) const { return side_[s]; }

  // Sequential seeded insertion in the caller-provided order; items must be
  // deduplicated by index.
  static CuckooBuildResult build(const std::vector<Record>& items,
                                 const CuckooParams& params, size_t max_spill);

 private:
  uint64_t location_of(const Record& item, int side) const;

  CuckooParams params_;
  std::vector<Record> side_[2];
  uint64_t occupancy_ = 0;
};

struct CuckooBuildResult {
  std::optional<CuckooTable> table;
  std::vector<Record> spilled;
  bool failed = false;  // spill exceeded the remaining stash room
};

}  // namespace soram
