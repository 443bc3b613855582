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

#include "mwss/crypto/idea.hpp"

#include "mwss/error.hpp"

namespace mwss::crypto {
namespace {

// Multiplication modulo 2^16 + 1, with 0 standing in for 2^16.
std::uint16_t mul(std::uint16_t a, std::uint16_t b) {
  std::uint64_t x = a ? a : 0x10000;
  std::uint64_t y = b ? b : 0x10000;
  return static_cast<std::uint16_t>(x * y % 0x10001);
}

std::uint16_t mul_inv(std::uint16_t a) {
  std::uint64_t base = a ? a : 0x10000;
  std::uint64_t result = 1;
  for (std::uint32_t e = 0x10001 - 2; e != 0; e >>= 1) {
    if (e & 1) result = result * base % 0x10001;
    base = base * base % 0x10001;
  }
  return static_cast<std::uint16_t>(result);
}

std::uint16_t add_inv(std::uint16_t a) {
  return static_cast<std::uint16_t>(0x10000 - a);
}

std::uint64_t load64(const std::uint8_t* p) {
  std::uint64_t v = 0;
  for (int i = 0; i < 8; ++i) v = (v << 8) | p[i];
  return v;
}

void run_rounds(const std::uint8_t* in, std::uint8_t* out,
                const std::uint16_t keys[52]) {
  auto x1 = static_cast<std::uint16_t>((std::uint16_t(in[0]) << 8) | in[1]);
  auto x2 = static_cast<std::uint16_t>((std::uint16_t(in[2]) << 8) | in[3]);
  auto x3 = static_cast<std::uint16_t>((std::uint16_t(in[4]) << 8) | in[5]);
  auto x4 = static_cast<std::uint16_t>((std::uint16_t(in[6]) << 8) | in[7]);
  const std::uint16_t* k = keys;
  for (int r = 0; r < 8; ++r) {
    x1 = mul(x1, k[0]);
    x2 = static_cast<std::uint16_t>(x2 + k[1]);
    x3 = static_cast<std::uint16_t>(x3 + k[2]);
    x4 = mul(x4, k[3]);
    std::uint16_t t0 = mul(static_cast<std::uint16_t>(x1 ^ x3), k[4]);
    std::uint16_t t1 =
        mul(static_cast<std::uint16_t>((x2 ^ x4) + t0), k[5]);
    std::uint16_t t2 = static_cast<std::uint16_t>(t0 + t1);
    std::uint16_t y2 = static_cast<std::uint16_t>(x3 ^ t1);
    x1 = static_cast<std::uint16_t>(x1 ^ t1);
    x3 = static_cast<std::uint16_t>(x2 ^ t2);
    x2 = y2;
    x4 = static_cast<std::uint16_t>(x4 ^ t2);
    k += 6;
  }
  // The output transformation undoes the final middle swap.
  x1 = mul(x1, k[0]);
  std::uint16_t o2 = static_cast<std::uint16_t>(x3 + k[1]);
  std::uint16_t o3 = static_cast<std::uint16_t>(x2 + k[2]);
  x4 = mul(x4, k[3]);
  out[0] = static_cast<std::uint8_t>(x1 >> 8);
  out[1] = static_cast<std::uint8_t>(x1);
  out[2] = static_cast<std::uint8_t>(o2 >> 8);
  out[3] = static_cast<std::uint8_t>(o2);
  out[4] = static_cast<std::uint8_t>(o3 >> 8);
  out[5] = static_cast<std::uint8_t>(o3);
  out[6] = static_cast<std::uint8_t>(x4 >> 8);
  out[7] = static_cast<std::uint8_t>(x4);
}

}  // namespace

Idea::Idea(ByteView key) {
  if (key.size() != 16) fail(Errc::invalid_key, "IDEA key must be 16 octets");

  // Eight subkeys per pass over the 128-bit key, rotated left 25 bits
  // between passes.
  std::uint64_t hi = load64(key.data());
  std::uint64_t lo = load64(key.data() + 8);
  int produced = 0;
  while (produced < 52) {
    for (int i = 0; i < 8 && produced < 52; ++i, ++produced) {
      std::uint64_t word = i < 4 ? hi : lo;
      enc_keys_[produced] =
          static_cast<std::uint16_t>(word >> (48 - 16 * (i & 3)));
    }
    std::uint64_t nhi = (hi << 25) | (lo >> 39);
    std::uint64_t nlo = (lo << 25) | (hi >> 39);
    hi = nhi;
    lo = nlo;
  }

  // Decryption keys read the schedule backwards with multiplicative and
  // additive inverses; middle rounds swap the two additive keys.
  const std::uint16_t* z = enc_keys_;
  std::uint16_t* p = dec_keys_ + 52;
  p -= 4;
  p[0] = mul_inv(z[0]);
  p[1] = add_inv(z[1]);
  p[2] = add_inv(z[2]);
  p[3] = mul_inv(z[3]);
  z += 4;
  for (int r = 1; r < 8; ++r) {
    p -= 2;
    p[0] = z[0];
    p[1] = z[1];
    z += 2;
    p -= 4;
    p[0] = mul_inv(z[0]);
    p[1] = add_inv(z[2]);
    p[2] = add_inv(z[1]);
    p[3] = mul_inv(z[3]);
    z += 4;
  }
  p -= 2;
  p[0] = z[0];
  p[1] = z[1];
  z += 2;
  p -= 4;
  p[0] = mul_inv(z[0]);
  p[1] = add_inv(z[1]);
  p[2] = add_inv(z[2]);
  p[3] = mul_inv(z[3]);
}

void Idea::encrypt_block(const std::uint8_t* in, std::uint8_t* out) const {
  run_rounds(in, out, enc_keys_);
}

void Idea::decrypt_block(const std::uint8_t* in, std::uint8_t* out) const {
  run_rounds(in, out, dec_keys_);
}

}  // namespace mwss::crypto
