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

#ifndef MWSS_CRYPTO_AES_HPP
#define MWSS_CRYPTO_AES_HPP

#include <cstdint>

#include "mwss/bytes.hpp"
#include "mwss/crypto/block_cipher.hpp"

namespace mwss::crypto {

/// FIPS 197 with 128/192/256-bit keys, 16-octet blocks.
class Aes final : public BlockCipher {
 public:
  explicit Aes(ByteView key);  // invalid-key unless 16, 24 or 32 octets

  std::size_t block_octets() const override { return 16; }
  void encrypt_block(const std::uint8_t* in, std::uint8_t* out) const override;
  void decrypt_block(const std::uint8_t* in, std::uint8_t* out) const override;

 private:
  int rounds_;
  std::uint32_t round_keys_[60];
};

}  // namespace mwss::crypto

#endif  // MWSS_CRYPTO_AES_HPP
