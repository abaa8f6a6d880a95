#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "soram/common.hpp"

namespace soram {

enum class RegionKind : uint8_t { CacheQ, StashS, Table, Root };

// Identity of an addressable cell region. Tables come in (level, side) pairs;
// Q, S and ROOT have a single instance each.
struct RegionId {
  RegionKind kind = RegionKind::CacheQ;
  uint16_t level = 0;  // 1..L, tables only
  uint8_t side = 0;    // 0/1, tables only

  static RegionId cache() { return {RegionKind::CacheQ, 0, 0}; }
  static RegionId stash() { return {RegionKind::StashS, 0, 0}; }
  static RegionId root() { return {RegionKind::Root, 0, 0}; }
  static RegionId table(uint16_t level, uint8_t side) {
    return {RegionKind::Table, level, side};
  }

  std::string to_string() const;
  friend bool operator==(const RegionId&, const RegionId&) = default;
};

enum class Op : uint8_t { Read, Write };

// Encrypted physical slot. The server never sees anything else.
struct Cell {
  Bytes ciphertext;
  Bytes nonce;
  friend bool operator==(const Cell&, const Cell&) = default;
};

struct TraceEvent {
  uint64_t seq = 0;
  RegionId region;
  uint32_t generation = 0;
  uint64_t offset = 0;
  Op op = Op::Read;
};

// Client-side instrumentation label. Not part of the server's view; lets the
// analyzer separate access-phase cuckoo probes from rebuild sweeps without
// changing the persisted trace format.
enum class Phase : uint8_t { Access, Rebuild };

class TraceSink {
 public:
  virtual ~TraceSink() = default;
  virtual void on_event(const TraceEvent& ev, Phase phase) = 0;
};

struct Region {
  RegionId id;
  uint32_t generation = 0;       // rebuild counter, bumped on every reset
  uint32_t seed_generation = 0;  // rebuilds + retries; indexes the seed chain
  std::vector<Cell> cells;
};

// In-memory honest-but-curious server: addressable encrypted cell regions,
// a global access counter and an append-only trace recorder.
class Server {
 public:
  Region& create_region(RegionId id, uint64_t cell_count);

  const Cell& read_cell(RegionId id, uint64_t offset);
  void write_cell(RegionId id, uint64_t offset, Cell cell);

  // Bumps the rebuild generation and resizes; the caller must then write
  // every cell so the region again holds only valid ciphertexts.
  Region& begin_rebuild(RegionId id, uint64_t new_cell_count);

  Region& region(RegionId id);
  const Region& region(RegionId id) const;
  bool has_region(RegionId id) const;

  std::vector<TraceEvent> drain_trace();

  uint64_t access_count() const { return access_count_; }
  uint64_t trace_size() const { return trace_.size(); }

  void set_recording(bool on) { recording_ = on; }
  bool recording() const { return recording_; }
  void set_sink(TraceSink* sink) { sink_ = sink; }
  void set_phase(Phase p) { phase_ = p; }
  Phase phase() const { return phase_; }

  const std::vector<Region>& regions() const { return regions_; }
  std::vector<Region>& regions() { return regions_; }

  // Snapshot support: restores the persistent counters exactly.
  uint64_t next_seq() const { return next_seq_; }
  void restore_counters(uint64_t next_seq, uint64_t access_count) {
    next_seq_ = next_seq;
    access_count_ = access_count;
  }

  static void dump_jsonl(const std::vector<TraceEvent>& events, std::ostream& out);

 private:
  int slot_of(RegionId id) const;
  void record(RegionId id, uint32_t gen, uint64_t offset, Op op);

  std::vector<Region> regions_;
  std::vector<int> slot_index_;  // dense RegionId -> regions_ position
  std::vector<TraceEvent> trace_;
  TraceSink* sink_ = nullptr;
  bool recording_ = true;
  Phase phase_ = Phase::Access;
  uint64_t next_seq_ = 0;
  uint64_t access_count_ = 0;
};

}  // namespace soram
