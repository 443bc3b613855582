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

#include "doctest.h"

#include <algorithm>
#include <set>
#include <string>

#include "kat_vectors.hpp"
#include "mwss/bytes.hpp"
#include "mwss/crypto/block_cipher.hpp"
#include "mwss/crypto/des.hpp"
#include "mwss/crypto/keys.hpp"
#include "mwss/crypto/rsa.hpp"
#include "mwss/crypto/sha1.hpp"
#include "mwss/error.hpp"
#include "mwss/rng.hpp"

using namespace mwss;

namespace {

crypto::AsymmetricKeyPair fixture_rsa_pair() {
  crypto::AsymmetricKeyPair pair;
  pair.kind = crypto::KeyKind::rsa;
  pair.bits = 1024;
  pair.owner = "alice";
  pair.key_id = "k-1";
  pair.rsa = kat::fixture_rsa();
  return pair;
}

crypto::AsymmetricKeyPair fixture_dsa_pair() {
  crypto::AsymmetricKeyPair pair;
  pair.kind = crypto::KeyKind::dsa;
  pair.bits = 1024;
  pair.owner = "alice";
  pair.key_id = "k-2";
  pair.dsa = kat::fixture_dsa();
  return pair;
}

}  // namespace

TEST_CASE("hex and base64 round trips") {
  DeterministicRandom rng(1);
  for (const std::size_t len : {std::size_t{0}, std::size_t{1}, std::size_t{2},
                                std::size_t{3}, std::size_t{57}}) {
    const Bytes data = rng.bytes(len);
    CHECK(*from_hex(to_hex(data)) == data);
    CHECK(*base64_decode(base64_encode(data)) == data);
  }
  CHECK_FALSE(from_hex("0g").has_value());
  CHECK_FALSE(from_hex("abc").has_value());
  CHECK_FALSE(base64_decode("====").has_value());
  CHECK_FALSE(base64_decode("a").has_value());
  CHECK_FALSE(base64_decode("ab!d").has_value());
  CHECK(base64_encode(to_bytes("any carnal pleasure")) ==
        "YW55IGNhcm5hbCBwbGVhc3VyZQ==");
}

TEST_CASE("constant-time comparison") {
  const Bytes a = to_bytes("abcdef");
  Bytes b = a;
  CHECK(equal_ct(a, b));
  b[5] ^= 1;
  CHECK_FALSE(equal_ct(a, b));
  CHECK_FALSE(equal_ct(a, ByteView(a).subspan(0, 5)));
  CHECK(equal_ct(Bytes{}, Bytes{}));
}

TEST_CASE("deterministic rng reproduces its stream") {
  DeterministicRandom r1(99), r2(99), r3(100);
  const Bytes a = r1.bytes(64);
  CHECK(a == r2.bytes(64));
  CHECK(a != r3.bytes(64));

  // Word-aligned chunked draws walk the same stream; the generator discards
  // the tail of a partial word at the end of each fill.
  DeterministicRandom r4(99);
  Bytes chunked = r4.bytes(8);
  const Bytes rest = r4.bytes(56);
  chunked.insert(chunked.end(), rest.begin(), rest.end());
  CHECK(chunked == a);
}

TEST_CASE("cbc round trip and padding across all ciphers") {
  DeterministicRandom rng(5);
  for (const crypto::CipherAlg alg : crypto::kAllCiphers) {
    CAPTURE(crypto::cipher_name(alg));
    const std::size_t bs = crypto::block_size(alg);
    for (std::size_t len = 0; len <= 3 * bs + 1; ++len) {
      const crypto::SymmetricKey key = crypto::gen_symmetric_key(alg, rng);
      const Bytes iv = rng.bytes(bs);
      const Bytes pt = rng.bytes(len);
      const Bytes ct = crypto::encrypt_cbc(key, iv, pt);
      CHECK(ct.size() == (len / bs + 1) * bs);
      CHECK(crypto::decrypt_cbc(key, iv, ct) == pt);
    }
  }
}

TEST_CASE("cbc rejects broken ciphertext") {
  DeterministicRandom rng(6);
  const crypto::SymmetricKey key =
      crypto::gen_symmetric_key(crypto::CipherAlg::aes128, rng);
  const Bytes iv = rng.bytes(16);
  const Bytes ct = crypto::encrypt_cbc(key, iv, rng.bytes(40));

  CHECK_THROWS_AS(crypto::decrypt_cbc(key, iv, Bytes{}), Error);
  Bytes truncated(ct.begin(), ct.end() - 5);
  CHECK_THROWS_AS(crypto::decrypt_cbc(key, iv, truncated), Error);

  // A wrong key must never quietly return the plaintext.
  const crypto::SymmetricKey other =
      crypto::gen_symmetric_key(crypto::CipherAlg::aes128, rng);
  bool rejected = false;
  Bytes recovered;
  try {
    recovered = crypto::decrypt_cbc(other, iv, ct);
  } catch (const Error& e) {
    CHECK(e.code() == Errc::decryption_failure);
    rejected = true;
  }
  CHECK((rejected || recovered != crypto::decrypt_cbc(key, iv, ct)));
}

TEST_CASE("symmetric key generation applies des parity") {
  DeterministicRandom rng(7);
  for (const crypto::CipherAlg alg : crypto::kAllCiphers) {
    const crypto::SymmetricKey key = crypto::gen_symmetric_key(alg, rng);
    CHECK(key.octets.size() == crypto::key_length(alg));
    if (alg == crypto::CipherAlg::des64 || alg == crypto::CipherAlg::tdes192) {
      for (const std::uint8_t b : key.octets) {
        int ones = 0;
        for (int i = 0; i < 8; ++i) ones += (b >> i) & 1;
        CHECK(ones % 2 == 1);
      }
    }
  }
}

TEST_CASE("cipher construction rejects wrong key sizes") {
  DeterministicRandom rng(8);
  for (const crypto::CipherAlg alg : crypto::kAllCiphers) {
    const std::size_t good = crypto::key_length(alg);
    CHECK_THROWS_AS(crypto::make_cipher(alg, rng.bytes(good - 1)), Error);
    CHECK_THROWS_AS(crypto::make_cipher(alg, rng.bytes(good + 1)), Error);
    CHECK_NOTHROW(crypto::make_cipher(alg, rng.bytes(good)));
  }
}

TEST_CASE("cipher names round trip") {
  for (const crypto::CipherAlg alg : crypto::kAllCiphers) {
    CHECK(crypto::cipher_from_name(crypto::cipher_name(alg)) == alg);
  }
  CHECK_THROWS_AS(crypto::cipher_from_name("ROT13"), Error);
}

TEST_CASE("sha1 incremental equals one-shot") {
  DeterministicRandom rng(9);
  const Bytes data = rng.bytes(500);
  crypto::Sha1 inc;
  std::size_t off = 0;
  for (const std::size_t step : {std::size_t{1}, std::size_t{63}, std::size_t{64},
                                 std::size_t{65}, std::size_t{307}}) {
    inc.update(ByteView(data).subspan(off, step));
    off += step;
  }
  REQUIRE(off == data.size());
  const crypto::Sha1Digest d = inc.finish();
  CHECK(Bytes(d.begin(), d.end()) == crypto::sha1_bytes(data));
}

TEST_CASE("rsa sign, verify and transport behave") {
  const crypto::RsaKey key = kat::fixture_rsa();
  DeterministicRandom rng(10);

  const Bytes msg = to_bytes("signed payload");
  const Bytes sig = crypto::rsa_sign_sha1(key, msg);
  CHECK(sig.size() == key.modulus_octets());
  CHECK(crypto::rsa_verify_sha1(key, msg, sig));
  CHECK_FALSE(crypto::rsa_verify_sha1(key, to_bytes("signed payloaD"), sig));
  CHECK_FALSE(crypto::rsa_verify_sha1(key, msg, Bytes(sig.size(), 0)));
  CHECK_FALSE(crypto::rsa_verify_sha1(key, msg, Bytes{1, 2, 3}));

  const Bytes secret = rng.bytes(32);
  const Bytes wrapped = crypto::rsa_encrypt_pkcs1(key.public_part(), secret, rng);
  CHECK(wrapped.size() == key.modulus_octets());
  CHECK(crypto::rsa_decrypt_pkcs1(key, wrapped) == secret);

  // Limit: modulus length minus the 11 padding octets.
  const std::size_t cap = key.modulus_octets() - 11;
  CHECK_NOTHROW(crypto::rsa_encrypt_pkcs1(key, rng.bytes(cap), rng));
  CHECK_THROWS_AS(crypto::rsa_encrypt_pkcs1(key, rng.bytes(cap + 1), rng), Error);

  Bytes mangled = wrapped;
  mangled[0] ^= 0x80;
  CHECK_THROWS_AS(crypto::rsa_decrypt_pkcs1(key, mangled), Error);
  CHECK_THROWS_AS(crypto::rsa_decrypt_pkcs1(key.public_part(), wrapped), Error);
}

TEST_CASE("dsa signing is deterministic per message") {
  const crypto::DsaKey key = kat::fixture_dsa();
  const Bytes m1 = to_bytes("first");
  const Bytes m2 = to_bytes("second");

  const Bytes s1 = crypto::dsa_sign_sha1(key, m1);
  CHECK(s1.size() == 40);
  CHECK(s1 == crypto::dsa_sign_sha1(key, m1));
  CHECK(s1 != crypto::dsa_sign_sha1(key, m2));
  CHECK(crypto::dsa_verify_sha1(key, m1, s1));
  CHECK_FALSE(crypto::dsa_verify_sha1(key, m2, s1));

  Bytes mangled = s1;
  mangled[25] ^= 4;
  CHECK_FALSE(crypto::dsa_verify_sha1(key, m1, mangled));
  CHECK_FALSE(crypto::dsa_verify_sha1(key, m1, Bytes{9, 9}));
  CHECK_THROWS_AS(crypto::dsa_sign_sha1(key.public_part(), m1), Error);
}

TEST_CASE("keypair generation covers the supported suites") {
  DeterministicRandom rng(11);
  const crypto::AsymmetricKeyPair rsa =
      crypto::generate_keypair(crypto::KeyKind::rsa, 1024, "o", "id-1", rng);
  CHECK(rsa.bits == 1024);
  CHECK(rsa.rsa.n.size() == 128);
  CHECK(rsa.has_private());
  CHECK_FALSE(rsa.public_part().has_private());

  const crypto::AsymmetricKeyPair dsa =
      crypto::generate_keypair(crypto::KeyKind::dsa, 1024, "o", "id-2", rng);
  CHECK(dsa.bits == 1024);
  CHECK(dsa.dsa.q.size() == 20);
  const Bytes msg = to_bytes("hello");
  CHECK(crypto::dsa_verify_sha1(dsa.dsa, msg, crypto::dsa_sign_sha1(dsa.dsa, msg)));

  CHECK_THROWS_AS(crypto::generate_keypair(crypto::KeyKind::rsa, 512, "o", "x", rng),
                  Error);
  CHECK_THROWS_AS(crypto::generate_keypair(crypto::KeyKind::dsa, 2048, "o", "x", rng),
                  Error);
}

TEST_CASE("wrap and unwrap check algorithm consistency") {
  DeterministicRandom rng(12);
  const crypto::AsymmetricKeyPair rsa = fixture_rsa_pair();
  const crypto::SymmetricKey session =
      crypto::gen_symmetric_key(crypto::CipherAlg::aes256, rng);

  const Bytes wrapped = crypto::wrap_key(crypto::KeyTransportAlg::rsa15_1024,
                                         rsa.public_part(), session, rng);
  CHECK(wrapped.size() == 128);
  const crypto::SymmetricKey back =
      crypto::unwrap_key(rsa, wrapped, crypto::CipherAlg::aes256);
  CHECK(back.octets == session.octets);
  CHECK(back.alg == crypto::CipherAlg::aes256);

  // A key of the wrong length for the expected cipher is rejected.
  CHECK_THROWS_AS(crypto::unwrap_key(rsa, wrapped, crypto::CipherAlg::aes128), Error);

  // Wrapping toward a 1024-bit key under the 2048-bit transport is refused.
  CHECK_THROWS_AS(crypto::wrap_key(crypto::KeyTransportAlg::rsa15_2048,
                                   rsa.public_part(), session, rng),
                  Error);

  DeterministicRandom other_rng(13);
  const crypto::AsymmetricKeyPair other =
      crypto::generate_keypair(crypto::KeyKind::rsa, 1024, "o", "id", other_rng);
  CHECK_THROWS_AS(crypto::unwrap_key(other, wrapped, crypto::CipherAlg::aes256),
                  Error);
}

TEST_CASE("signature algorithm metadata") {
  CHECK(crypto::signature_bits(crypto::SignatureAlg::rsa_sha1_1024) == 1024);
  CHECK(crypto::signature_bits(crypto::SignatureAlg::rsa_sha1_2048) == 2048);
  CHECK(crypto::signature_bits(crypto::SignatureAlg::dsa_sha1_1024) == 1024);
  CHECK(crypto::signature_is_rsa(crypto::SignatureAlg::rsa_sha1_1024));
  CHECK_FALSE(crypto::signature_is_rsa(crypto::SignatureAlg::dsa_sha1_1024));
  for (const crypto::SignatureAlg alg : crypto::kAllSignatures) {
    CHECK(crypto::signature_from_name(crypto::signature_name(alg)) == alg);
  }
  for (const crypto::KeyTransportAlg alg : crypto::kAllTransports) {
    CHECK(crypto::transport_from_name(crypto::transport_name(alg)) == alg);
  }
  CHECK(crypto::modulus_bits(crypto::KeyTransportAlg::rsa15_1024) == 1024);
  CHECK(crypto::modulus_bits(crypto::KeyTransportAlg::rsa15_2048) == 2048);
  CHECK_THROWS_AS(crypto::signature_from_name("ED25519"), Error);
  CHECK_THROWS_AS(crypto::transport_from_name("RSA-OAEP"), Error);
}

TEST_CASE("sign and verify dispatch by algorithm") {
  const crypto::AsymmetricKeyPair rsa = fixture_rsa_pair();
  const crypto::AsymmetricKeyPair dsa = fixture_dsa_pair();
  const Bytes msg = to_bytes("dispatch");

  const Bytes rs = crypto::sign(crypto::SignatureAlg::rsa_sha1_1024, rsa, msg);
  CHECK(crypto::verify(crypto::SignatureAlg::rsa_sha1_1024, rsa, msg, rs));
  const Bytes ds = crypto::sign(crypto::SignatureAlg::dsa_sha1_1024, dsa, msg);
  CHECK(crypto::verify(crypto::SignatureAlg::dsa_sha1_1024, dsa, msg, ds));

  // Key size and algorithm must agree.
  CHECK_THROWS_AS(crypto::sign(crypto::SignatureAlg::rsa_sha1_2048, rsa, msg), Error);
  CHECK_THROWS_AS(crypto::sign(crypto::SignatureAlg::rsa_sha1_1024, dsa, msg), Error);
}

TEST_CASE("key value elements round trip") {
  const crypto::AsymmetricKeyPair rsa = fixture_rsa_pair();
  const crypto::AsymmetricKeyPair dsa = fixture_dsa_pair();

  for (const bool with_private : {false, true}) {
    const crypto::AsymmetricKeyPair rsa_back =
        crypto::key_from_value_element(crypto::key_value_element(rsa, with_private));
    CHECK(rsa_back.kind == crypto::KeyKind::rsa);
    CHECK(rsa_back.bits == 1024);
    CHECK(rsa_back.rsa.n == rsa.rsa.n);
    CHECK(rsa_back.rsa.e == rsa.rsa.e);
    CHECK(rsa_back.has_private() == with_private);

    const crypto::AsymmetricKeyPair dsa_back =
        crypto::key_from_value_element(crypto::key_value_element(dsa, with_private));
    CHECK(dsa_back.kind == crypto::KeyKind::dsa);
    CHECK(dsa_back.dsa.y == dsa.dsa.y);
    CHECK(dsa_back.has_private() == with_private);
  }

  CHECK_THROWS_AS(crypto::key_from_value_element(xml::Element("ECKeyValue")), Error);
}
