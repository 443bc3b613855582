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

#include "mwss/crypto/dsa.hpp"

#include "bigint.hpp"
#include "mwss/crypto/sha1.hpp"
#include "mwss/error.hpp"

namespace mwss::crypto {
namespace {

constexpr std::size_t kQBits = 160;
constexpr std::size_t kQOctets = kQBits / 8;

// RFC 6979 nonce derivation with HMAC-SHA1; qlen equals the hash width so
// bits2int is the identity.
Bigint deterministic_nonce(const Bigint& q, const Bigint& x, ByteView digest,
                           const Bigint& p, const Bigint& g, Bigint* r_out) {
  const Bytes x_oct = x.to_bytes(kQOctets);
  const Bytes h_oct = (Bigint::from_bytes(digest) % q).to_bytes(kQOctets);

  Bytes v(20, 0x01);
  Bytes k(20, 0x00);
  for (std::uint8_t tag : {std::uint8_t{0x00}, std::uint8_t{0x01}}) {
    Bytes msg = v;
    msg.push_back(tag);
    msg.insert(msg.end(), x_oct.begin(), x_oct.end());
    msg.insert(msg.end(), h_oct.begin(), h_oct.end());
    k = hmac_sha1(k, msg);
    v = hmac_sha1(k, v);
  }
  const Bigint one(1);
  for (;;) {
    v = hmac_sha1(k, v);
    Bigint nonce = Bigint::from_bytes(v);
    if (!nonce.zero() && nonce < q) {
      Bigint r = Bigint::powm(g, nonce, p) % q;
      if (!r.zero()) {
        *r_out = r;
        return nonce;
      }
    }
    Bytes msg = v;
    msg.push_back(0x00);
    k = hmac_sha1(k, msg);
    v = hmac_sha1(k, v);
  }
}

}  // namespace

DsaKey dsa_generate(std::size_t p_bits, RandomSource& rng) {
  if (p_bits < 512 || p_bits % 64 != 0) {
    fail(Errc::invalid_argument, "DSA prime bits must be >= 512 and a multiple of 64");
  }
  const Bigint one(1);
  const Bigint two(2);

  Bigint q;
  for (;;) {
    q = Bigint::from_bytes(rng.bytes(kQOctets));
    q.trim_bits(kQBits);
    q.set_bit(kQBits - 1);
    q.set_bit(0);
    if (!q.probably_prime()) q = Bigint::next_prime(q);
    if (q.bits() == kQBits) break;
  }

  const Bigint two_q = q * two;
  Bigint p;
  for (;;) {
    Bigint x = Bigint::from_bytes(rng.bytes(p_bits / 8));
    x.trim_bits(p_bits);
    x.set_bit(p_bits - 1);
    p = (x - (x % two_q)) + one;
    // Step by 2q to keep p congruent to 1 mod q.
    bool found = false;
    for (int i = 0; i < 4096; ++i) {
      if (p.bits() == p_bits && p.probably_prime()) {
        found = true;
        break;
      }
      p = p + two_q;
    }
    if (found) break;
  }

  const Bigint exp = (p - one) / q;
  Bigint g;
  for (unsigned long h = 2;; ++h) {
    g = Bigint::powm(Bigint(h), exp, p);
    if (!(g == one)) break;
  }

  Bigint x;
  do {
    x = Bigint::from_bytes(rng.bytes(kQOctets));
    x.trim_bits(kQBits);
  } while (x.zero() || !(x < q));
  Bigint y = Bigint::powm(g, x, p);

  return DsaKey{p.to_bytes(), q.to_bytes(kQOctets), g.to_bytes(), y.to_bytes(),
                x.to_bytes(kQOctets)};
}

Bytes dsa_sign_sha1(const DsaKey& priv, ByteView msg) {
  if (!priv.has_private()) fail(Errc::invalid_key, "not a private DSA key");
  Bigint p = Bigint::from_bytes(priv.p);
  Bigint q = Bigint::from_bytes(priv.q);
  Bigint g = Bigint::from_bytes(priv.g);
  Bigint x = Bigint::from_bytes(priv.x);

  Bytes digest = sha1_bytes(msg);
  Bigint h = Bigint::from_bytes(digest) % q;

  Bigint r;
  Bigint k = deterministic_nonce(q, x, digest, p, g, &r);
  auto k_inv = Bigint::invert(k, q);
  if (!k_inv) fail(Errc::invalid_key, "degenerate DSA nonce");
  Bigint s = (*k_inv * (h + x * r)) % q;
  if (s.zero()) fail(Errc::invalid_key, "degenerate DSA signature");

  Bytes out = r.to_bytes(kQOctets);
  Bytes s_oct = s.to_bytes(kQOctets);
  out.insert(out.end(), s_oct.begin(), s_oct.end());
  return out;
}

bool dsa_verify_sha1(const DsaKey& pub, ByteView msg, ByteView signature) {
  if (signature.size() != 2 * kQOctets) return false;
  Bigint p = Bigint::from_bytes(pub.p);
  Bigint q = Bigint::from_bytes(pub.q);
  Bigint g = Bigint::from_bytes(pub.g);
  Bigint y = Bigint::from_bytes(pub.y);

  Bigint r = Bigint::from_bytes(signature.subspan(0, kQOctets));
  Bigint s = Bigint::from_bytes(signature.subspan(kQOctets));
  if (r.zero() || s.zero() || !(r < q) || !(s < q)) return false;

  auto w = Bigint::invert(s, q);
  if (!w) return false;
  Bigint h = Bigint::from_bytes(sha1_bytes(msg)) % q;
  Bigint u1 = (h * *w) % q;
  Bigint u2 = (r * *w) % q;
  Bigint v = ((Bigint::powm(g, u1, p) * Bigint::powm(y, u2, p)) % p) % q;
  return v == r;
}

}  // namespace mwss::crypto
