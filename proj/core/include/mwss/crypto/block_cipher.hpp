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

#ifndef MWSS_CRYPTO_BLOCK_CIPHER_HPP
#define MWSS_CRYPTO_BLOCK_CIPHER_HPP

#include <memory>
#include <string_view>

#include "mwss/bytes.hpp"
#include "mwss/rng.hpp"

namespace mwss::crypto {

enum class CipherAlg {
  des64,    // single DES, 64-bit key including parity
  tdes192,  // 3DES keying option 1, 192-bit key including parity
  idea128,
  aes128,
  aes192,
  aes256,
};

inline constexpr CipherAlg kAllCiphers[] = {CipherAlg::des64,  CipherAlg::tdes192,
                                            CipherAlg::idea128, CipherAlg::aes128,
                                            CipherAlg::aes192, CipherAlg::aes256};

std::size_t block_size(CipherAlg alg);   // octets
std::size_t key_length(CipherAlg alg);   // octets
std::string_view cipher_name(CipherAlg alg);
CipherAlg cipher_from_name(std::string_view name);  // unsupported-algorithm on unknown

struct SymmetricKey {
  CipherAlg alg;
  Bytes octets;
};

/// Fresh key of exactly key_length(alg) octets; DES keys get odd parity.
SymmetricKey gen_symmetric_key(CipherAlg alg, RandomSource& rng);

/// Raw block primitive behind the CBC mode below.
class BlockCipher {
 public:
  virtual ~BlockCipher() = default;
  virtual std::size_t block_octets() const = 0;
  virtual void encrypt_block(const std::uint8_t* in, std::uint8_t* out) const = 0;
  virtual void decrypt_block(const std::uint8_t* in, std::uint8_t* out) const = 0;
};

std::unique_ptr<BlockCipher> make_cipher(CipherAlg alg, ByteView key);

// CBC with PKCS#7 padding. The IV is not part of the ciphertext; callers
// prepend it on the wire.
Bytes encrypt_cbc(const SymmetricKey& key, ByteView iv, ByteView plaintext);
Bytes decrypt_cbc(const SymmetricKey& key, ByteView iv, ByteView ciphertext);

}  // namespace mwss::crypto

#endif  // MWSS_CRYPTO_BLOCK_CIPHER_HPP
