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

// Frozen known-answer vectors for every primitive, shared by the KAT gate
// and the acceptance runner. Block and digest vectors come from the
// published FIPS 197, SP 800-38A, SP 800-20, SP 800-67, FIPS 180 and
// RFC 2202 test data; the IDEA vectors and the RSA/DSA fixtures were
// generated and cross-checked with an independent implementation, and the
// deterministic DSA nonce vector is RFC 6979 appendix A.2.1.

#ifndef MWSS_TESTS_KAT_VECTORS_HPP
#define MWSS_TESTS_KAT_VECTORS_HPP

#include <string>
#include <vector>

#include "mwss/bytes.hpp"
#include "mwss/crypto/block_cipher.hpp"
#include "mwss/crypto/dsa.hpp"
#include "mwss/crypto/rsa.hpp"
#include "mwss/crypto/sha1.hpp"
#include "mwss/rng.hpp"

namespace kat {

struct BlockVector {
  mwss::crypto::CipherAlg alg;
  const char* key;
  const char* pt;
  const char* ct;
};

inline constexpr BlockVector kBlockVectors[] = {
    {mwss::crypto::CipherAlg::aes128, "000102030405060708090a0b0c0d0e0f",
     "00112233445566778899aabbccddeeff", "69c4e0d86a7b0430d8cdb78070b4c55a"},
    {mwss::crypto::CipherAlg::aes192,
     "000102030405060708090a0b0c0d0e0f1011121314151617",
     "00112233445566778899aabbccddeeff", "dda97ca4864cdfe06eaf70a0ec0d7191"},
    {mwss::crypto::CipherAlg::aes256,
     "000102030405060708090a0b0c0d0e0f101112131415161718191a1b1c1d1e1f",
     "00112233445566778899aabbccddeeff", "8ea2b7ca516745bfeafc49904b496089"},
    {mwss::crypto::CipherAlg::des64, "133457799bbcdff1", "0123456789abcdef",
     "85e813540f0ab405"},
    {mwss::crypto::CipherAlg::des64, "0101010101010101", "8000000000000000",
     "95f8a5e5dd31d900"},
    {mwss::crypto::CipherAlg::tdes192,
     "0123456789abcdef23456789abcdef01456789abcdef0123", "5468652071756663",
     "a826fd8ce53b855f"},
    {mwss::crypto::CipherAlg::tdes192,
     "0123456789abcdef23456789abcdef01456789abcdef0123", "6b2062726f776e20",
     "cce21c8112256fe6"},
    {mwss::crypto::CipherAlg::idea128, "00010002000300040005000600070008",
     "0000000100020003", "11fbed2b01986de5"},
    {mwss::crypto::CipherAlg::idea128, "2bd6459f82c5b300952c49104881ff48",
     "f129a6601ef62a47", "ea024714ad5c4d84"},
    {mwss::crypto::CipherAlg::idea128, "00000000000000000000000000000000",
     "0000000000000000", "0001000100000000"},
    {mwss::crypto::CipherAlg::idea128, "000102030405060708090a0b0c0d0e0f",
     "0011223344556677", "f526ab9a62c0d258"},
};

// CBC chaining vectors; the library pads, so only the prefix is compared.
struct CbcVector {
  mwss::crypto::CipherAlg alg;
  const char* key;
  const char* iv;
  const char* pt;
  const char* ct_prefix;
};

inline constexpr CbcVector kCbcVectors[] = {
    {mwss::crypto::CipherAlg::aes128, "2b7e151628aed2a6abf7158809cf4f3c",
     "000102030405060708090a0b0c0d0e0f",
     "6bc1bee22e409f96e93d7e117393172aae2d8a571e03ac9c9eb76fac45af8e51"
     "30c81c46a35ce411e5fbc1191a0a52eff69f2445df4f9b17ad2b417be66c3710",
     "7649abac8119b246cee98e9b12e9197d5086cb9b507219ee95db113a917678b2"
     "73bed6b8e3c1743b7116e69e222295163ff1caa1681fac09120eca307586e1a7"},
    {mwss::crypto::CipherAlg::aes192,
     "8e73b0f7da0e6452c810f32b809079e562f8ead2522c6b7b",
     "000102030405060708090a0b0c0d0e0f", "6bc1bee22e409f96e93d7e117393172a",
     "4f021db243bc633d7178183a9fa071e8"},
    {mwss::crypto::CipherAlg::aes256,
     "603deb1015ca71be2b73aef0857d77811f352c073b6108d72d9810a30914dff4",
     "000102030405060708090a0b0c0d0e0f", "6bc1bee22e409f96e93d7e117393172a",
     "f58c4c04d6e5f1ba779eabfb5f7bfbd6"},
};

struct DigestVector {
  const char* msg;
  const char* digest;
};

inline constexpr DigestVector kSha1Vectors[] = {
    {"", "da39a3ee5e6b4b0d3255bfef95601890afd80709"},
    {"abc", "a9993e364706816aba3e25717850c26c9cd0d89d"},
    {"abcdbcdecdefdefgefghfghighijhijkijkljklmklmnlmnomnopnopq",
     "84983e441c3bd26ebaae4aa1f95129e5e54670f1"},
};

struct HmacVector {
  const char* key_hex;
  const char* msg;
  const char* mac;
};

inline constexpr HmacVector kHmacSha1Vectors[] = {
    {"0b0b0b0b0b0b0b0b0b0b0b0b0b0b0b0b0b0b0b0b", "Hi There",
     "b617318655057264e28bc0b6fb378c8ef146be00"},
    {"4a656665", "what do ya want for nothing?",
     "effcdf6ae5eb2fa2d27416d5f184df9c259a7c79"},
};

// 1024-bit RSA fixture with frozen PKCS#1 v1.5 answers.
inline constexpr const char* kRsaN =
    "d3adc45741be891591fc5144c2f3b3792d58a24780c3a33aef6b69816a4d4b61c6699402"
    "f36cb42d73fbd0caf115eab3c8bd4101696535949faecbb91bf28f18a97df0b3f523a296"
    "c3f459fd945d81c0444046633e668c744cbab9494d9407d0ce909f5c4f2f8640ca3825fc"
    "2e256939efc45d8d6d6f32134acf8dea07d27145";
inline constexpr const char* kRsaE = "010001";
inline constexpr const char* kRsaD =
    "b108e46bc1bd73f3095c482fc50882b2b6fd2903ba2a64eb166ff4165b6c77be376df76f"
    "1c5d6eb791082b107fdf3fa2cb21952b741544619fc755f4e3edd2445d8ea60f64302f05"
    "465aef8265cd073170e7433c14987d64d205f60d81dee3dbb1c448d993200c63b2df8d64"
    "3ffc22e5ed0e8052a091669f7dd6cb7dcf621f45";
inline constexpr const char* kRsaP =
    "ed85e8c4ab5c7d230350c91c422415b0a7da4ebdebe204eab1edb7b651d8f8f629ec4523"
    "0c0f777402f849066376830e250c381ab3f26cb815fc9e97102e3a5b";
inline constexpr const char* kRsaQ =
    "e42530272ce59dc4ebc7bd865af009a9d1cc71ba97d009fc5d2b2ca153bb713932485"
    "6bd757777318df571febd242ed72f2af6358a4f401acd250e6fd04394df";

inline constexpr const char* kKatMessage =
    "mobile web service security benchmark message";

inline constexpr const char* kRsaSig =
    "3ca3f99064efe41a2b4a0f501f60054539638169e3624fd75a12dfea940a80e9e54f388f"
    "4d7b438ec1b342b67d5dcb58253941a43611596d391b88b9b0f25a705618de0829e30b49"
    "814eea2526dcc13586d8527f38be64968940d9628c4b1048f1aa8f98a04d8cee78efea47"
    "f7ba85d8483de7718b3e2237cc0b51991b9641f4";

// PKCS#1 v1.5 encryption of the octets 00..1f under the fixture public key.
inline constexpr const char* kRsaWrapped =
    "3c33806e304d7e600b9a12586ae13d065453599d6c9776564ca09ec2cd058595843d8855"
    "041757afbe10a181b18ef2565623cb6a6185c49ccaf173d6a27f0b673580301351f7f8f2"
    "0bfc5fe9befc89c0f4ad7c9fcf29815bb7e0a0a9ad467b31d8ac047d99ef44ae1c18289b"
    "2d64b519463b4fed6faf7b4e712d638150d39390";

// 1024-bit DSA fixture; the r/s pair below came from a randomized signer
// and is verify-only, the deterministic pair must be reproduced bit-exact.
inline constexpr const char* kDsaP =
    "e662a47a20a6d815bbc094af066d8b7a5a9fd4a8f0057ac4905f2947bf7024e8f6096556"
    "71d1f7905a5f500f5db7053b3476b9e989c29bc4cd0c47a62005773ffdbb60545ec2d393"
    "1fde1175baef33e29d1517cb4d7e016350a37145ac6719a2850728fa5614209ecf6cce52"
    "965ea63b48242c888148dd964120f0a53827d8c3";
inline constexpr const char* kDsaQ = "ac3cddb1802d1fb6394c1bb9e9c421fa3c033517";
inline constexpr const char* kDsaG =
    "b80825d6f9b4b1529f0939288fc597979c320cd3fde2b9dd8fadf197c4e2419d234d0bb7"
    "d8b72ca27740770790c2750f470c6c75a3f915aa14b0146ef5e4d9dd9125f2d481fc814a"
    "1230105e5246593057900d11b9983129da7851f93ddc86d7308e57022878de512d953b48"
    "121d655f3dbb5a82491971c0b95cfc1a70902885";
inline constexpr const char* kDsaY =
    "a9becab3c2be3607e52b07c82d1deb216a40ba01f3e1b6596947b059f6c8c4e5efe58b5c"
    "5de5f5d5d011cab7c089283d43c44fff162479daa18f5eabe87dde81cddb18ca857d12ed"
    "51beedfbc1a24ca2fb98948dec03d494b2502a43e65c49c7c5ad415afc1073e47d574411"
    "d19f6f08064c3b3a00777c8aa8ba0eb69c8d95fb";
inline constexpr const char* kDsaX = "69dba9c9bbde6d4a5fef56b0241379ae16a21f9e";
inline constexpr const char* kDsaRandR = "ab54bf6b1d3455d2b39b37519d91ae15c6fd1a19";
inline constexpr const char* kDsaRandS = "53b0aab98f246b6c2386103e907f05127f4dd448";
inline constexpr const char* kDsaDetR = "8d806fdd199baed18d3c10d95d4299322fad7dde";
inline constexpr const char* kDsaDetS = "5aff0ec425d318171de411bd72c3173d4711771a";

// RFC 6979 appendix A.2.1, DSA-1024 with SHA-1 over "sample".
inline constexpr const char* kRfc6979P =
    "86f5ca03dcfeb225063ff830a0c769b9dd9d6153ad91d7ce27f787c43278b447e6533b86"
    "b18bed6e8a48b784a14c252c5be0dbf60b86d6385bd2f12fb763ed8873abfd3f5ba2e0a8"
    "c0a59082eac056935e529daf7c610467899c77adedfc846c881870b7b19b2b58f9be0521"
    "a17002e3bdd6b86685ee90b3d9a1b02b782b1779";
inline constexpr const char* kRfc6979Q = "996f967f6c8e388d9e28d01e205fba957a5698b1";
inline constexpr const char* kRfc6979G =
    "07b0f92546150b62514bb771e2a0c0ce387f03bda6c56b505209ff25fd3c133d89bbcd97"
    "e904e09114d9a7defdeadfc9078ea544d2e401aeecc40bb9fbbf78fd87995a10a1c27cb7"
    "789b594ba7efb5c4326a9fe59a070e136db77175464adca417be5dce2f40d10a46a3a394"
    "3f26ab7fd9c0398ff8c76ee0a56826a8a88f1dbd";
inline constexpr const char* kRfc6979X = "411602cb19a6ccc34494d79d98ef1e7ed5af25f7";
inline constexpr const char* kRfc6979Y =
    "5df5e01ded31d0297e274e1691c192fe5868fef9e19a84776454b100cf16f65392195a38"
    "b90523e2542ee61871c0440cb87c322fc4b4d2ec5e1e7ec766e1be8d4ce935437dc11c3c"
    "8fd426338933ebfe739cb3465f4d3668c5e473508253b1e682f65cbdc4fae93c2ea21239"
    "0e54905a86e2223170b44eaa7da5dd9ffcfb7f3b";
inline constexpr const char* kRfc6979Msg = "sample";
inline constexpr const char* kRfc6979R = "2e1a0c2562b2912caaf89186fb0f42001585da55";
inline constexpr const char* kRfc6979S = "29efb6b0aff2d7a68eb70ca313022253b9a88df5";

inline mwss::Bytes hx(std::string_view hex) {
  auto b = mwss::from_hex(hex);
  return b ? *b : mwss::Bytes{};
}

inline mwss::crypto::RsaKey fixture_rsa() {
  return mwss::crypto::RsaKey{hx(kRsaN), hx(kRsaE), hx(kRsaD), hx(kRsaP),
                              hx(kRsaQ)};
}

inline mwss::crypto::DsaKey fixture_dsa() {
  return mwss::crypto::DsaKey{hx(kDsaP), hx(kDsaQ), hx(kDsaG), hx(kDsaY),
                              hx(kDsaX)};
}

inline mwss::crypto::DsaKey rfc6979_dsa() {
  return mwss::crypto::DsaKey{hx(kRfc6979P), hx(kRfc6979Q), hx(kRfc6979G),
                              hx(kRfc6979Y), hx(kRfc6979X)};
}

/// Runs every frozen vector; returns one description per failed check.
inline std::vector<std::string> run_primitive_kats() {
  using namespace mwss;
  std::vector<std::string> failures;
  auto expect = [&](bool ok, const std::string& what) {
    if (!ok) failures.push_back(what);
  };

  for (const auto& v : kBlockVectors) {
    const Bytes key = hx(v.key), pt = hx(v.pt), ct = hx(v.ct);
    auto cipher = crypto::make_cipher(v.alg, key);
    Bytes out(cipher->block_octets());
    cipher->encrypt_block(pt.data(), out.data());
    expect(out == ct, std::string(crypto::cipher_name(v.alg)) +
                          " encrypt vector " + v.ct);
    cipher->decrypt_block(ct.data(), out.data());
    expect(out == pt, std::string(crypto::cipher_name(v.alg)) +
                          " decrypt vector " + v.ct);
  }

  for (const auto& v : kCbcVectors) {
    const crypto::SymmetricKey key{v.alg, hx(v.key)};
    const Bytes iv = hx(v.iv), pt = hx(v.pt), prefix = hx(v.ct_prefix);
    const Bytes ct = crypto::encrypt_cbc(key, iv, pt);
    expect(ct.size() == pt.size() + crypto::block_size(v.alg),
           std::string(crypto::cipher_name(v.alg)) + " cbc padded length");
    expect(std::equal(prefix.begin(), prefix.end(), ct.begin()),
           std::string(crypto::cipher_name(v.alg)) + " cbc chaining vector");
    expect(crypto::decrypt_cbc(key, iv, ct) == pt,
           std::string(crypto::cipher_name(v.alg)) + " cbc round trip");
  }

  for (const auto& v : kSha1Vectors) {
    expect(to_hex(crypto::sha1_bytes(to_bytes(v.msg))) == v.digest,
           std::string("sha1 of \"") + v.msg + "\"");
  }
  for (const auto& v : kHmacSha1Vectors) {
    expect(to_hex(crypto::hmac_sha1(hx(v.key_hex), to_bytes(v.msg))) == v.mac,
           std::string("hmac-sha1 ") + v.mac);
  }

  const crypto::RsaKey rsa = fixture_rsa();
  const Bytes msg = to_bytes(kKatMessage);
  expect(to_hex(crypto::rsa_sign_sha1(rsa, msg)) == kRsaSig,
         "rsa pkcs1 v1.5 signature");
  expect(crypto::rsa_verify_sha1(rsa, msg, hx(kRsaSig)), "rsa verify");
  Bytes bad_sig = hx(kRsaSig);
  bad_sig[10] ^= 0x01;
  expect(!crypto::rsa_verify_sha1(rsa, msg, bad_sig), "rsa verify rejects");
  Bytes session(32);
  for (std::size_t i = 0; i < session.size(); ++i)
    session[i] = static_cast<std::uint8_t>(i);
  expect(crypto::rsa_decrypt_pkcs1(rsa, hx(kRsaWrapped)) == session,
         "rsa pkcs1 v1.5 decrypt");
  DeterministicRandom rng(7);
  expect(crypto::rsa_decrypt_pkcs1(
             rsa, crypto::rsa_encrypt_pkcs1(rsa, session, rng)) == session,
         "rsa encrypt round trip");

  const crypto::DsaKey dsa = fixture_dsa();
  expect(to_hex(crypto::dsa_sign_sha1(dsa, msg)) ==
             std::string(kDsaDetR) + kDsaDetS,
         "dsa deterministic signature");
  expect(crypto::dsa_verify_sha1(dsa, msg, hx(std::string(kDsaRandR) + kDsaRandS)),
         "dsa verify of externally produced signature");
  const crypto::DsaKey rfc = rfc6979_dsa();
  expect(to_hex(crypto::dsa_sign_sha1(rfc, to_bytes(kRfc6979Msg))) ==
             std::string(kRfc6979R) + kRfc6979S,
         "rfc 6979 a.2.1 deterministic nonce");

  return failures;
}

}  // namespace kat

#endif  // MWSS_TESTS_KAT_VECTORS_HPP
