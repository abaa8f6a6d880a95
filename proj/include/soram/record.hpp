#pragma once

#include <array>
#include <cstdint>
#include <optional>

#include "soram/common.hpp"

namespace soram {

// Location of a node in the hierarchy, as stored inside parent records in the
// tree variant: level -1 = stash, 0 = cache, 1..L = cuckoo table level.
struct ChildPtr {
  static constexpr int16_t kNone = INT16_MIN;
  int16_t level = kNone;
  uint64_t loc0 = 0;
  uint64_t loc1 = 0;

  bool valid() const { return level != kNone; }
  friend bool operator==(const ChildPtr&, const ChildPtr&) = default;
};

// One logical RAM cell / tree node in plaintext form. Serializes to a fixed
// byte length so that every encrypted cell is indistinguishable by size.
struct Record {
  static constexpr uint8_t kLive = 0x01;
  static constexpr uint8_t kDirty = 0x02;     // stash slot in use
  static constexpr uint8_t kInternal = 0x04;  // tree-variant internal node

  uint8_t flags = 0;
  uint64_t index = 0;  // logical index x, or tree nodeId
  uint64_t value = 0;
  uint64_t epoch = 0;  // global access count at last write / move to cache
  uint64_t loc0 = 0;   // stored location pair (tree variant)
  uint64_t loc1 = 0;
  ChildPtr left;
  ChildPtr right;

  static constexpr size_t kSerializedSize = 1 + 5 * 8 + 2 * (2 + 16);

  bool live() const { return flags & kLive; }
  bool dirty() const { return flags & kDirty; }
  bool internal() const { return flags & kInternal; }

  static Record empty_marker() { return Record{}; }

  static Record live_item(uint64_t x, uint64_t v, uint64_t epoch) {
    Record r;
    r.flags = kLive;
    r.index = x;
    r.value = v;
    r.epoch = epoch;
    return r;
  }

  std::array<uint8_t, kSerializedSize> serialize() const {
    std::array<uint8_t, kSerializedSize> out{};
    uint8_t* p = out.data();
    *p++ = flags;
    store_be64(p, index), p += 8;
    store_be64(p, value), p += 8;
    store_be64(p, epoch), p += 8;
    store_be64(p, loc0), p += 8;
    store_be64(p, loc1), p += 8;
    for (const ChildPtr* c : {&left, &right}) {
      store_be16(p, static_cast<uint16_t>(c->level)), p += 2;
      store_be64(p, c->loc0), p += 8;
      store_be64(p, c->loc1), p += 8;
    }
    return out;
  }

  static Record deserialize(std::span<const uint8_t> in) {
    if (in.size() != kSerializedSize) throw IntegrityError("record: bad plaintext size");
    Record r;
    const uint8_t* p = in.data();
    r.flags = *p++;
    r.index = load_be64(p), p += 8;
    r.value = load_be64(p), p += 8;
    r.epoch = load_be64(p), p += 8;
    r.loc0 = load_be64(p), p += 8;
    r.loc1 = load_be64(p), p += 8;
    for (ChildPtr* c : {&r.left, &r.right}) {
      c->level = static_cast<int16_t>(load_be16(p)), p += 2;
      c->loc0 = load_be64(p), p += 8;
      c->loc1 = load_be64(p), p += 8;
    }
    return r;
  }

  friend bool operator==(const Record&, const Record&) = default;
};

}  // namespace soram
