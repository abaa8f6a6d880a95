#include "soram/crypto.hpp"

#include <openssl/evp.h>

#include <cstring>

namespace soram {

std::array<uint8_t, 32> sha256(std::span<const uint8_t> data) {
  std::array<uint8_t, 32> out{};
  unsigned int len = 0;
  if (!EVP_Digest(data.data(), data.size(), out.data(), &len, EVP_sha256(), nullptr) ||
      len != out.size())
    throw std::runtime_error("sha256 failed");
  return out;
}

uint64_t prf_location(uint64_t seed, uint64_t x, uint64_t m) {
  if (m == 0) throw UsageError("prf_location: subtable cell count must be >= 1");
  uint8_t buf[16];
  store_be64(buf, x);
  store_be64(buf + 8, seed);
  auto digest = sha256(std::span<const uint8_t>(buf, 16));
  // Digest interpreted as a big-endian integer, reduced incrementally.
  uint64_t acc = 0;
  for (uint8_t b : digest) {
    acc = static_cast<uint64_t>(((static_cast<unsigned __int128>(acc) << 8) | b) % m);
  }
  return acc;
}

uint64_t derive_seed(uint64_t master_seed, uint64_t chain_index) {
  uint8_t buf[32];
  store_be64(buf, master_seed);
  size_t len = 8;
  for (uint64_t i = 0; i < chain_index; ++i) {
    auto digest = sha256(std::span<const uint8_t>(buf, len));
    std::memcpy(buf, digest.data(), digest.size());
    len = digest.size();
  }
  return load_be64(buf);
}

uint64_t SeedChain::seed_at(uint64_t chain_index) {
  if (chain_index == 0) return master_;
  if (last_digest_.empty()) {
    last_digest_.resize(8);
    store_be64(last_digest_.data(), master_);
  }
  while (chain_.size() < chain_index) {
    auto digest = sha256(last_digest_);
    last_digest_.assign(digest.begin(), digest.end());
    chain_.push_back(load_be64(digest.data()));
  }
  return chain_[chain_index - 1];
}

GroupKey GroupKey::from_seed(uint64_t seed) {
  uint8_t buf[9];
  store_be64(buf, seed);
  buf[8] = 0x4b;  // domain separator vs. the seed chain
  GroupKey key;
  key.bytes = sha256(std::span<const uint8_t>(buf, 9));
  return key;
}

namespace {

constexpr size_t kNonceLen = 12;
constexpr size_t kTagLen = 16;

Bytes random_nonce(Rng& rng) {
  Bytes nonce(kNonceLen);
  for (size_t i = 0; i < kNonceLen; i += 4) {
    uint32_t w = static_cast<uint32_t>(rng());
    store_be32(nonce.data() + i, w);
  }
  return nonce;
}

class AeadCipher final : public CellCipher {
 public:
  explicit AeadCipher(const GroupKey& key) : key_(key) {}

  Cell seal(std::span<const uint8_t> plaintext, Rng& rng) const override {
    Cell cell;
    cell.nonce = random_nonce(rng);
    cell.ciphertext.resize(plaintext.size() + kTagLen);

    EVP_CIPHER_CTX* ctx = EVP_CIPHER_CTX_new();
    if (!ctx) throw std::runtime_error("aead: ctx alloc failed");
    int len = 0;
    bool ok = EVP_EncryptInit_ex(ctx, EVP_aes_256_gcm(), nullptr, key_.bytes.data(),
                                 cell.nonce.data()) == 1 &&
              EVP_EncryptUpdate(ctx, cell.ciphertext.data(), &len, plaintext.data(),
                                int(plaintext.size())) == 1;
    int total = len;
    ok = ok && EVP_EncryptFinal_ex(ctx, cell.ciphertext.data() + total, &len) == 1;
    total += len;
    ok = ok && EVP_CIPHER_CTX_ctrl(ctx, EVP_CTRL_GCM_GET_TAG, kTagLen,
                                   cell.ciphertext.data() + total) == 1;
    EVP_CIPHER_CTX_free(ctx);
    if (!ok || total != int(plaintext.size()))
      throw std::runtime_error("aead: encryption failed");
    return cell;
  }

  Bytes open(const Cell& cell) const override {
    if (cell.nonce.size() != kNonceLen || cell.ciphertext.size() < kTagLen)
      throw IntegrityError("aead: malformed cell");
    size_t body = cell.ciphertext.size() - kTagLen;
    Bytes plain(body);
    uint8_t tag[kTagLen];
    std::memcpy(tag, cell.ciphertext.data() + body, kTagLen);

    EVP_CIPHER_CTX* ctx = EVP_CIPHER_CTX_new();
    if (!ctx) throw std::runtime_error("aead: ctx alloc failed");
    int len = 0;
    bool ok = EVP_DecryptInit_ex(ctx, EVP_aes_256_gcm(), nullptr, key_.bytes.data(),
                                 cell.nonce.data()) == 1 &&
              EVP_DecryptUpdate(ctx, plain.data(), &len, cell.ciphertext.data(),
                                int(body)) == 1 &&
              EVP_CIPHER_CTX_ctrl(ctx, EVP_CTRL_GCM_SET_TAG, kTagLen, tag) == 1;
    int total = len;
    ok = ok && EVP_DecryptFinal_ex(ctx, plain.data() + total, &len) == 1;
    EVP_CIPHER_CTX_free(ctx);
    if (!ok) throw IntegrityError("aead: authentication failed");
    return plain;
  }

  const char* name() const override { return "aead"; }

 private:
  GroupKey key_;
};

class TransparentCipher final : public CellCipher {
 public:
  Cell seal(std::span<const uint8_t> plaintext, Rng& rng) const override {
    Cell cell;
    cell.nonce = random_nonce(rng);
    cell.ciphertext.assign(plaintext.begin(), plaintext.end());
    return cell;
  }

  Bytes open(const Cell& cell) const override {
    if (cell.nonce.size() != kNonceLen) throw IntegrityError("transparent: malformed cell");
    return cell.ciphertext;
  }

  const char* name() const override { return "transparent"; }
};

}  // namespace

std::unique_ptr<CellCipher> make_aead_cipher(const GroupKey& key) {
  return std::make_unique<AeadCipher>(key);
}

std::unique_ptr<CellCipher> make_transparent_cipher() {
  return std::make_unique<TransparentCipher>();
}

std::unique_ptr<CellCipher> make_cipher(const std::string& name, const GroupKey& key) {
  if (name == "aead") return make_aead_cipher(key);
  if (name == "transparent") return make_transparent_cipher();
  throw UsageError("unknown cipher: " + name);
}

}  // namespace soram
