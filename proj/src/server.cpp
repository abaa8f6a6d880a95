#include "soram/server.hpp"

#include <ostream>

namespace soram {

std::string RegionId::to_string() const {
  switch (kind) {
    case RegionKind::CacheQ:
      return "Q";
    case RegionKind::StashS:
      return "S";
    case RegionKind::Root:
      return "ROOT";
    case RegionKind::Table:
      return "T" + std::to_string(level) + "." + std::to_string(int(side));
  }
  return "?";
}

namespace {
// Dense index: Q=0, S=1, ROOT=2, T(l,s) = 3 + (l-1)*2 + s.
int dense_index(RegionId id) {
  switch (id.kind) {
    case RegionKind::CacheQ:
      return 0;
    case RegionKind::StashS:
      return 1;
    case RegionKind::Root:
      return 2;
    case RegionKind::Table:
      if (id.level == 0) throw UsageError("table region needs level >= 1");
      return 3 + (int(id.level) - 1) * 2 + int(id.side & 1);
  }
  throw UsageError("bad region kind");
}
}  // namespace

int Server::slot_of(RegionId id) const {
  int d = dense_index(id);
  if (d >= int(slot_index_.size()) || slot_index_[d] < 0)
    throw UsageError("unknown region " + id.to_string());
  return slot_index_[d];
}

Region& Server::create_region(RegionId id, uint64_t cell_count) {
  if (cell_count == 0) throw UsageError("region must have at least one cell");
  int d = dense_index(id);
  if (d < int(slot_index_.size()) && slot_index_[d] >= 0)
    throw UsageError("region already exists: " + id.to_string());
  if (d >= int(slot_index_.size())) slot_index_.resize(d + 1, -1);
  slot_index_[d] = int(regions_.size());
  regions_.push_back(Region{id, 0, 0, std::vector<Cell>(cell_count)});
  return regions_.back();
}

Region& Server::region(RegionId id) { return regions_[slot_of(id)]; }
const Region& Server::region(RegionId id) const { return regions_[slot_of(id)]; }

bool Server::has_region(RegionId id) const {
  int d = dense_index(id);
  return d < int(slot_index_.size()) && slot_index_[d] >= 0;
}

void Server::record(RegionId id, uint32_t gen, uint64_t offset, Op op) {
  ++access_count_;
  if (!recording_ && sink_ == nullptr) {
    ++next_seq_;
    return;
  }
  TraceEvent ev{next_seq_++, id, gen, offset, op};
  if (recording_) trace_.push_back(ev);
  if (sink_) sink_->on_event(ev, phase_);
}

const Cell& Server::read_cell(RegionId id, uint64_t offset) {
  Region& r = regions_[slot_of(id)];
  if (offset >= r.cells.size())
    throw UsageError("read out of range in " + id.to_string());
  record(id, r.generation, offset, Op::Read);
  return r.cells[offset];
}

void Server::write_cell(RegionId id, uint64_t offset, Cell cell) {
  Region& r = regions_[slot_of(id)];
  if (offset >= r.cells.size())
    throw UsageError("write out of range in " + id.to_string());
  record(id, r.generation, offset, Op::Write);
  r.cells[offset] = std::move(cell);
}

Region& Server::begin_rebuild(RegionId id, uint64_t new_cell_count) {
  if (new_cell_count == 0) throw UsageError("region must have at least one cell");
  Region& r = regions_[slot_of(id)];
  r.generation += 1;
  r.cells.assign(new_cell_count, Cell{});
  return r;
}

std::vector<TraceEvent> Server::drain_trace() {
  std::vector<TraceEvent> out;
  out.swap(trace_);
  return out;
}

void Server::dump_jsonl(const std::vector<TraceEvent>& events, std::ostream& out) {
  for (const TraceEvent& ev : events) {
    out << "{\"seq\":" << ev.seq << ",\"region\":\"" << ev.region.to_string()
        << "\",\"gen\":" << ev.generation << ",\"off\":" << ev.offset
        << ",\"op\":\"" << (ev.op == Op::Read ? 'R' : 'W') << "\"}\n";
  }
}

}  // namespace soram
