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

#ifndef MWSS_CRYPTO_RSA_HPP
#define MWSS_CRYPTO_RSA_HPP

#include <cstddef>

#include "mwss/bytes.hpp"
#include "mwss/rng.hpp"

namespace mwss::crypto {

/// RSA key material as big-endian octet strings. Private fields are empty
/// for public-only keys.
struct RsaKey {
  Bytes n;  // modulus
  Bytes e;  // public exponent
  Bytes d;  // private exponent
  Bytes p;
  Bytes q;

  bool has_private() const { return !d.empty(); }
  std::size_t modulus_octets() const { return n.size(); }
  RsaKey public_part() const { return RsaKey{n, e, {}, {}, {}}; }
};

RsaKey rsa_generate(std::size_t bits, RandomSource& rng);

/// PKCS#1 v1.5 type 2. msg must fit modulus_octets() - 11.
Bytes rsa_encrypt_pkcs1(const RsaKey& pub, ByteView msg, RandomSource& rng);

/// Inverse of the above. Every malformed input reports the same
/// key-unwrap-failure, without distinguishing padding from length faults.
Bytes rsa_decrypt_pkcs1(const RsaKey& priv, ByteView ciphertext);

/// PKCS#1 v1.5 type 1 over the SHA-1 DigestInfo of msg. Output is exactly
/// modulus_octets() long.
Bytes rsa_sign_sha1(const RsaKey& priv, ByteView msg);
bool rsa_verify_sha1(const RsaKey& pub, ByteView msg, ByteView signature);

}  // namespace mwss::crypto

#endif  // MWSS_CRYPTO_RSA_HPP
