// Copyright 2026 The mwss Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef MWSS_CRYPTO_DES_HPP
#define MWSS_CRYPTO_DES_HPP

#include <cstdint>

#include "mwss/bytes.hpp"
#include "mwss/crypto/block_cipher.hpp"

namespace mwss::crypto {

/// Single DES, 8-octet key with parity bits, 8-octet blocks.
class Des final : public BlockCipher {
 public:
  explicit Des(ByteView key);  // invalid-key unless exactly 8 octets

  std::size_t block_octets() const override { return 8; }
  void encrypt_block(const std::uint8_t* in, std::uint8_t* out) const override;
  void decrypt_block(const std::uint8_t* in, std::uint8_t* out) const override;

 private:
  std::uint64_t subkeys_[16];
};

/// Three-key triple DES (EDE), 24-octet key, 8-octet blocks.
class TripleDes final : public BlockCipher {
 public:
  explicit TripleDes(ByteView key);  // invalid-key unless exactly 24 octets

  std::size_t block_octets() const override { return 8; }
  void encrypt_block(const std::uint8_t* in, std::uint8_t* out) const override;
  void decrypt_block(const std::uint8_t* in, std::uint8_t* out) const override;

 private:
  Des k1_, k2_, k3_;
};

/// Forces odd parity on every octet, as DES key schedules expect.
void des_fix_parity(Bytes& key);

}  // namespace mwss::crypto

#endif  // MWSS_CRYPTO_DES_HPP
