#pragma once

#include <array>
#include <cstdint>
#include <memory>
#include <random>
#include <vector>

#include "soram/common.hpp"
#include "soram/server.hpp"

namespace soram {

using Rng = std::mt19937_64;

std::array<uint8_t, 32> sha256(std::span<const uint8_t> data);

// Keyed location function: SHA-256 over the 8-byte big-endian encodings of x
// and the seed, reduced mod the subtable cell count.
uint64_t prf_location(uint64_t seed, uint64_t x, uint64_t m);

// chainIndex-fold iterated SHA-256 over the 8-byte big-endian master seed,
// truncated to the first 8 digest bytes (big-endian). Index 0 is the master
// seed itself.
uint64_t derive_seed(uint64_t master_seed, uint64_t chain_index);

// Memoized view of the same hash chain. derive_seed(master, i) == seed_at(i);
// the cache is a pure function of the master seed, so it carries no protocol
// state across episodes.
class SeedChain {
 public:
  explicit SeedChain(uint64_t master_seed) : master_(master_seed) {}

  uint64_t master() const { return master_; }
  uint64_t seed_at(uint64_t chain_index);

 private:
  uint64_t master_;
  std::vector<uint8_t> last_digest_;  // digest after chain_.size() iterations
  std::vector<uint64_t> chain_;       // chain_[i] = seed at index i+1
};

struct GroupKey {
  std::array<uint8_t, 32> bytes{};

  static GroupKey from_seed(uint64_t seed);
};

// Probabilistic cell encryption. Every plaintext record has one fixed size,
// so all cells are indistinguishable by length.
class CellCipher {
 public:
  virtual ~CellCipher() = default;
  virtual Cell seal(std::span<const uint8_t> plaintext, Rng& rng) const = 0;
  virtual Bytes open(const Cell& cell) const = 0;  // throws IntegrityError
  virtual const char* name() const = 0;
};

// AES-256-GCM with a fresh random 12-byte nonce per call.
std::unique_ptr<CellCipher> make_aead_cipher(const GroupKey& key);

// Plaintext passthrough plus a random nonce; used for experiment throughput.
// Re-encryptions of equal plaintexts still produce unequal cells.
std::unique_ptr<CellCipher> make_transparent_cipher();

std::unique_ptr<CellCipher> make_cipher(const std::string& name, const GroupKey& key);

}  // namespace soram
