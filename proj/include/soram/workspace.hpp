#pragma once

#include <cmath>
#include <cstdint>

#include "soram/common.hpp"

namespace soram {

// Client-side scratch memory budget, capacity ceil(n^nu) cells. Contents are
// episode-local and never reach the server unencrypted.
class PrivateWorkspace {
 public:
  explicit PrivateWorkspace(uint64_t capacity_cells) : capacity_(capacity_cells) {}

  static PrivateWorkspace for_ram_size(uint64_t n, double nu) {
    long double cap = std::pow(static_cast<long double>(n), static_cast<long double>(nu));
    return PrivateWorkspace(static_cast<uint64_t>(std::ceil(cap)));
  }

  uint64_t capacity() const { return capacity_; }
  uint64_t in_use() const { return in_use_; }
  bool fits(uint64_t cells) const { return in_use_ + cells <= capacity_; }

  class Lease {
   public:
    Lease(PrivateWorkspace& ws, uint64_t cells) : ws_(&ws), cells_(cells) {
      if (!ws.fits(cells))
        throw UsageError("private workspace budget exceeded: need " +
                         std::to_string(cells) + " cells, free " +
                         std::to_string(ws.capacity_ - ws.in_use_));
      ws.in_use_ += cells;
    }
    Lease(const Lease&) = delete;
    Lease& operator=(const Lease&) = delete;
    Lease(Lease&& other) noexcept : ws_(other.ws_), cells_(other.cells_) {
      other.ws_ = nullptr;
    }
    ~Lease() {
      if (ws_) ws_->in_use_ -= cells_;
    }

   private:
    PrivateWorkspace* ws_;
    uint64_t cells_;
  };

  Lease acquire(uint64_t cells) { return Lease(*this, cells); }

 private:
  uint64_t capacity_;
  uint64_t in_use_ = 0;
};

}  // namespace soram
