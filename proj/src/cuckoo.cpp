#include "soram/cuckoo.hpp"

#include <algorithm>

namespace soram {

namespace {
bool update_if_present(std::vector<Record>& entries, const Record& item) {
  for (Record& e : entries) {
    if (e.index == item.index) {
      if (item.epoch > e.epoch) {
        e = item;
        e.flags |= Record::kDirty;
      }
      return true;
    }
  }
  return false;
}
}  // namespace

bool StashBuffer::spill(const Record& item) {
  if (update_if_present(entries_, item)) return true;
  if (entries_.size() >= capacity_) return false;
  entries_.push_back(item);
  entries_.back().flags |= Record::kDirty;
  return true;
}

bool StashBuffer::merge(const std::vector<Record>& incoming) {
  for (const Record& r : incoming) {
    if (!update_if_present(entries_, r)) {
      entries_.push_back(r);
      entries_.back().flags |= Record::kDirty;
    }
  }
  return entries_.size() <= capacity_;
}

bool StashBuffer::remove(uint64_t index) {
  for (size_t i = 0; i < entries_.size(); ++i) {
    if (entries_[i].index == index) {
      entries_.erase(entries_.begin() + i);
      return true;
    }
  }
  return false;
}

const Record* StashBuffer::find(uint64_t index) const {
  for (const Record& e : entries_)
    if (e.index == index) return &e;
  return nullptr;
}

CuckooTable::CuckooTable(const CuckooParams& params) : params_(params) {
  if (params_.cells_per_side == 0) throw UsageError("cuckoo: cells_per_side must be >= 1");
  side_[0].assign(params_.cells_per_side, Record::empty_marker());
  side_[1].assign(params_.cells_per_side, Record::empty_marker());
}

uint64_t CuckooTable::location_of(const Record& item, int side) const {
  if (params_.mode == TableMode::Prf)
    return prf_location(side == 0 ? params_.seed0 : params_.seed1, item.index,
                        params_.cells_per_side);
  return side == 0 ? item.loc0 : item.loc1;
}

std::pair<uint64_t, uint64_t> CuckooTable::probe_locations(uint64_t x) const {
  if (params_.mode != TableMode::Prf)
    throw UsageError("cuckoo: index-only probe requires PRF mode");
  return {prf_location(params_.seed0, x, params_.cells_per_side),
          prf_location(params_.seed1, x, params_.cells_per_side)};
}

std::pair<uint64_t, uint64_t> CuckooTable::probe_locations(const Record& item) const {
  if (params_.mode == TableMode::Prf) return probe_locations(item.index);
  if (item.loc0 >= params_.cells_per_side || item.loc1 >= params_.cells_per_side)
    throw UsageError("cuckoo: record carries no valid location pair");
  return {item.loc0, item.loc1};
}

InsertResult CuckooTable::insert(Record item, StashBuffer& stash) {
  if (!item.live()) throw UsageError("cuckoo: cannot insert an empty marker");
  if (occupancy_ >= params_.capacity_items) throw UsageError("cuckoo: table at capacity");
  auto locs = probe_locations(item);
  const Record& c0 = side_[0][locs.first];
  const Record& c1 = side_[1][locs.second];
  if ((c0.live() && c0.index == item.index) || (c1.live() && c1.index == item.index))
    throw UsageError("cuckoo: duplicate index; caller must dedup first");

  Record cur = item;
  int side = 0;
  for (uint32_t step = 0; step < params_.move_limit; ++step) {
    uint64_t off = location_of(cur, side);
    Record& slot = side_[side][off];
    if (!slot.live()) {
      slot = cur;
      ++occupancy_;
      return InsertResult::Placed;
    }
    std::swap(cur, slot);
    side = 1 - side;  // the displaced key tries its other designated cell
  }
  ++occupancy_;  // the carried key is accounted to this table's stash demand
  return stash.spill(cur) ? InsertResult::Stashed : InsertResult::StashOverflow;
}

CuckooTable::LookupResult CuckooTable::lookup(uint64_t x) const {
  return lookup_at(probe_locations(x), x);
}

CuckooTable::LookupResult CuckooTable::lookup_at(std::pair<uint64_t, uint64_t> locs,
                                                 uint64_t x) const {
  LookupResult res;
  res.probed = locs;
  // Both designated cells are read unconditionally.
  const Record& c0 = side_[0][locs.first];
  const Record& c1 = side_[1][locs.second];
  if (c0.live() && c0.index == x) res.found = c0;
  if (c1.live() && c1.index == x && (!res.found || c1.epoch > res.found->epoch))
    res.found = c1;
  return res;
}

const Record& CuckooTable::cell(int side, uint64_t offset) const {
  if (offset >= params_.cells_per_side) throw UsageError("cuckoo: offset out of range");
  return side_[side][offset];
}

CuckooBuildResult CuckooTable::build(const std::vector<Record>& items,
                                     const CuckooParams& params, size_t max_spill) {
  if (items.size() > params.capacity_items)
    throw UsageError("cuckoo: build input exceeds table capacity");
  CuckooBuildResult result;
  CuckooTable table(params);
  StashBuffer spill(StashBuffer::kUnbounded);
  for (const Record& item : items) {
    table.insert(item, spill);
    if (spill.size() > max_spill) {
      result.failed = true;
      return result;
    }
  }
  result.spilled = spill.entries();
  result.table.emplace(std::move(table));
  return result;
}

}  // namespace soram
