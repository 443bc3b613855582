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

#ifndef MWSS_CRYPTO_IDEA_HPP
#define MWSS_CRYPTO_IDEA_HPP

#include <cstdint>

#include "mwss/bytes.hpp"
#include "mwss/crypto/block_cipher.hpp"

namespace mwss::crypto {

/// IDEA, 128-bit key, 8-octet blocks, 8.5 rounds.
class Idea final : public BlockCipher {
 public:
  explicit Idea(ByteView key);  // invalid-key unless exactly 16 octets

  std::size_t block_octets() const override { return 8; }
  void encrypt_block(const std::uint8_t* in, std::uint8_t* out) const override;
  void decrypt_block(const std::uint8_t* in, std::uint8_t* out) const override;

 private:
  std::uint16_t enc_keys_[52];
  std::uint16_t dec_keys_[52];
};

}  // namespace mwss::crypto

#endif  // MWSS_CRYPTO_IDEA_HPP
