#pragma once

#include "soram/crypto.hpp"
#include "soram/record.hpp"
#include "soram/server.hpp"

namespace soram {

// Binds a server handle to the cipher and the nonce stream: the only path
// through which plaintext records cross the client/server boundary.
class CellIo {
 public:
  CellIo(Server& server, const CellCipher& cipher, Rng& nonce_rng)
      : server_(&server), cipher_(&cipher), nonce_rng_(&nonce_rng) {}

  Record read(RegionId id, uint64_t offset) const {
    const Cell& cell = server_->read_cell(id, offset);
    return Record::deserialize(cipher_->open(cell));
  }

  void write(RegionId id, uint64_t offset, const Record& rec) const {
    auto plain = rec.serialize();
    server_->write_cell(id, offset, cipher_->seal(plain, *nonce_rng_));
  }

  Cell seal(const Record& rec) const {
    auto plain = rec.serialize();
    return cipher_->seal(plain, *nonce_rng_);
  }

  Record open(const Cell& cell) const { return Record::deserialize(cipher_->open(cell)); }

  Server& server() const { return *server_; }
  const CellCipher& cipher() const { return *cipher_; }

 private:
  Server* server_;
  const CellCipher* cipher_;
  Rng* nonce_rng_;
};

// An ordered sequence of cells spanning one or more regions, addressed by a
// single virtual index. Rebuild pipelines run over spans.
class RegionSpan {
 public:
  RegionSpan() = default;

  void append(RegionId id, uint64_t cell_count) {
    segments_.push_back({id, cell_count});
    size_ += cell_count;
  }

  uint64_t size() const { return size_; }
  bool empty() const { return size_ == 0; }

  std::pair<RegionId, uint64_t> locate(uint64_t k) const {
    for (const Segment& seg : segments_) {
      if (k < seg.count) return {seg.id, k};
      k -= seg.count;
    }
    throw UsageError("span index out of range");
  }

  Record read(const CellIo& io, uint64_t k) const {
    auto [id, off] = locate(k);
    return io.read(id, off);
  }

  void write(const CellIo& io, uint64_t k, const Record& rec) const {
    auto [id, off] = locate(k);
    io.write(id, off, rec);
  }

 private:
  struct Segment {
    RegionId id;
    uint64_t count;
  };
  std::vector<Segment> segments_;
  uint64_t size_ = 0;
};

}  // namespace soram
