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

#include "mwss/crypto/rsa.hpp"

#include "bigint.hpp"
#include "mwss/crypto/sha1.hpp"
#include "mwss/error.hpp"

namespace mwss::crypto {
namespace {

// ASN.1 DigestInfo for SHA-1: SEQUENCE { AlgorithmIdentifier sha1, OCTET STRING (20) }.
constexpr std::uint8_t kSha1DigestInfo[] = {0x30, 0x21, 0x30, 0x09, 0x06,
                                            0x05, 0x2b, 0x0e, 0x03, 0x02,
                                            0x1a, 0x05, 0x00, 0x04, 0x14};

Bigint random_prime(std::size_t bits, RandomSource& rng) {
  for (;;) {
    Bigint cand = Bigint::from_bytes(rng.bytes((bits + 7) / 8));
    cand.trim_bits(bits);
    // Top two bits set so the product of two halves keeps full width.
    cand.set_bit(bits - 1);
    cand.set_bit(bits - 2);
    cand.set_bit(0);
    if (!cand.probably_prime()) cand = Bigint::next_prime(cand);
    if (cand.bits() == bits && cand.bit(bits - 2)) return cand;
  }
}

[[noreturn]] void unwrap_failure() {
  fail(Errc::key_unwrap_failure, "key transport unwrap failed");
}

}  // namespace

RsaKey rsa_generate(std::size_t bits, RandomSource& rng) {
  if (bits < 512 || bits % 8 != 0) {
    fail(Errc::invalid_argument, "RSA modulus bits must be >= 512 and a multiple of 8");
  }
  const Bigint e(65537);
  const Bigint one(1);
  for (;;) {
    Bigint p = random_prime(bits / 2, rng);
    Bigint q = random_prime(bits - bits / 2, rng);
    if (p == q) continue;
    Bigint n = p * q;
    if (n.bits() != bits) continue;
    Bigint lambda = Bigint::lcm(p - one, q - one);
    auto d = Bigint::invert(e, lambda);
    if (!d) continue;
    return RsaKey{n.to_bytes(), e.to_bytes(), d->to_bytes(), p.to_bytes(),
                  q.to_bytes()};
  }
}

Bytes rsa_encrypt_pkcs1(const RsaKey& pub, ByteView msg, RandomSource& rng) {
  const std::size_t k = pub.modulus_octets();
  if (k < 11 || msg.size() > k - 11) {
    fail(Errc::invalid_argument, "message too long for RSA modulus");
  }
  Bytes em(k, 0);
  em[1] = 0x02;
  const std::size_t ps_len = k - msg.size() - 3;
  for (std::size_t i = 0; i < ps_len; ++i) {
    std::uint8_t b = 0;
    while (b == 0) rng.fill(&b, 1);
    em[2 + i] = b;
  }
  std::copy(msg.begin(), msg.end(), em.begin() + 2 + ps_len + 1);

  Bigint n = Bigint::from_bytes(pub.n);
  Bigint c = Bigint::powm(Bigint::from_bytes(em), Bigint::from_bytes(pub.e), n);
  return c.to_bytes(k);
}

Bytes rsa_decrypt_pkcs1(const RsaKey& priv, ByteView ciphertext) {
  if (!priv.has_private()) fail(Errc::invalid_key, "not a private RSA key");
  const std::size_t k = priv.modulus_octets();
  if (ciphertext.size() != k) unwrap_failure();

  Bigint n = Bigint::from_bytes(priv.n);
  Bigint c = Bigint::from_bytes(ciphertext);
  if (!(c < n)) unwrap_failure();
  Bytes em = Bigint::powm(c, Bigint::from_bytes(priv.d), n).to_bytes(k);

  if (em[0] != 0x00 || em[1] != 0x02) unwrap_failure();
  std::size_t sep = 2;
  while (sep < k && em[sep] != 0x00) ++sep;
  if (sep == k || sep < 2 + 8) unwrap_failure();
  return Bytes(em.begin() + sep + 1, em.end());
}

Bytes rsa_sign_sha1(const RsaKey& priv, ByteView msg) {
  if (!priv.has_private()) fail(Errc::invalid_key, "not a private RSA key");
  const std::size_t k = priv.modulus_octets();
  const std::size_t t_len = sizeof(kSha1DigestInfo) + 20;
  if (k < t_len + 11) fail(Errc::invalid_key, "RSA modulus too small to sign SHA-1");

  Bytes em(k, 0xff);
  em[0] = 0x00;
  em[1] = 0x01;
  em[k - t_len - 1] = 0x00;
  std::copy(std::begin(kSha1DigestInfo), std::end(kSha1DigestInfo),
            em.begin() + (k - t_len));
  Bytes digest = sha1_bytes(msg);
  std::copy(digest.begin(), digest.end(), em.end() - 20);

  Bigint n = Bigint::from_bytes(priv.n);
  Bigint s = Bigint::powm(Bigint::from_bytes(em), Bigint::from_bytes(priv.d), n);
  return s.to_bytes(k);
}

bool rsa_verify_sha1(const RsaKey& pub, ByteView msg, ByteView signature) {
  const std::size_t k = pub.modulus_octets();
  const std::size_t t_len = sizeof(kSha1DigestInfo) + 20;
  if (signature.size() != k || k < t_len + 11) return false;

  Bigint n = Bigint::from_bytes(pub.n);
  Bigint s = Bigint::from_bytes(signature);
  if (!(s < n)) return false;
  Bytes em = Bigint::powm(s, Bigint::from_bytes(pub.e), n).to_bytes(k);

  Bytes expected(k, 0xff);
  expected[0] = 0x00;
  expected[1] = 0x01;
  expected[k - t_len - 1] = 0x00;
  std::copy(std::begin(kSha1DigestInfo), std::end(kSha1DigestInfo),
            expected.begin() + (k - t_len));
  Bytes digest = sha1_bytes(msg);
  std::copy(digest.begin(), digest.end(), expected.end() - 20);

  return equal_ct(em, expected);
}

}  // namespace mwss::crypto
