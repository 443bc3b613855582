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

#ifndef MWSS_CRYPTO_DSA_HPP
#define MWSS_CRYPTO_DSA_HPP

#include <cstddef>

#include "mwss/bytes.hpp"
#include "mwss/rng.hpp"

namespace mwss::crypto {

/// DSA key material as big-endian octet strings; q is always 160 bits.
/// x is empty for public-only keys.
struct DsaKey {
  Bytes p;
  Bytes q;
  Bytes g;
  Bytes y;  // public value
  Bytes x;  // private value

  bool has_private() const { return !x.empty(); }
  DsaKey public_part() const { return DsaKey{p, q, g, y, {}}; }
};

DsaKey dsa_generate(std::size_t p_bits, RandomSource& rng);

/// SHA-1 DSA with a deterministic per-message nonce (HMAC-SHA1 derivation).
/// Output is r || s, each padded to 20 octets.
Bytes dsa_sign_sha1(const DsaKey& priv, ByteView msg);
bool dsa_verify_sha1(const DsaKey& pub, ByteView msg, ByteView signature);

}  // namespace mwss::crypto

#endif  // MWSS_CRYPTO_DSA_HPP
