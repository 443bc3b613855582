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

#include "mwss/crypto/block_cipher.hpp"

#include "mwss/crypto/aes.hpp"
#include "mwss/crypto/des.hpp"
#include "mwss/crypto/idea.hpp"
#include "mwss/error.hpp"

namespace mwss::crypto {

std::size_t block_size(CipherAlg alg) {
  switch (alg) {
    case CipherAlg::des64:
    case CipherAlg::tdes192:
    case CipherAlg::idea128:
      return 8;
    case CipherAlg::aes128:
    case CipherAlg::aes192:
    case CipherAlg::aes256:
      return 16;
  }
  fail(Errc::invalid_argument, "bad cipher enum");
}

std::size_t key_length(CipherAlg alg) {
  switch (alg) {
    case CipherAlg::des64: return 8;
    case CipherAlg::tdes192: return 24;
    case CipherAlg::idea128: return 16;
    case CipherAlg::aes128: return 16;
    case CipherAlg::aes192: return 24;
    case CipherAlg::aes256: return 32;
  }
  fail(Errc::invalid_argument, "bad cipher enum");
}

std::string_view cipher_name(CipherAlg alg) {
  switch (alg) {
    case CipherAlg::des64: return "DES-64";
    case CipherAlg::tdes192: return "3DES-192";
    case CipherAlg::idea128: return "IDEA-128";
    case CipherAlg::aes128: return "AES-128";
    case CipherAlg::aes192: return "AES-192";
    case CipherAlg::aes256: return "AES-256";
  }
  fail(Errc::invalid_argument, "bad cipher enum");
}

CipherAlg cipher_from_name(std::string_view name) {
  for (CipherAlg alg : kAllCiphers) {
    if (cipher_name(alg) == name) return alg;
  }
  fail(Errc::unsupported_algorithm, "unknown cipher: " + std::string(name));
}

SymmetricKey gen_symmetric_key(CipherAlg alg, RandomSource& rng) {
  SymmetricKey key{alg, rng.bytes(key_length(alg))};
  if (alg == CipherAlg::des64 || alg == CipherAlg::tdes192) {
    des_fix_parity(key.octets);
  }
  return key;
}

std::unique_ptr<BlockCipher> make_cipher(CipherAlg alg, ByteView key) {
  if (key.size() != key_length(alg)) {
    fail(Errc::invalid_key, "wrong key length for " + std::string(cipher_name(alg)));
  }
  switch (alg) {
    case CipherAlg::des64: return std::make_unique<Des>(key);
    case CipherAlg::tdes192: return std::make_unique<TripleDes>(key);
    case CipherAlg::idea128: return std::make_unique<Idea>(key);
    case CipherAlg::aes128:
    case CipherAlg::aes192:
    case CipherAlg::aes256:
      return std::make_unique<Aes>(key);
  }
  fail(Errc::invalid_argument, "bad cipher enum");
}

Bytes encrypt_cbc(const SymmetricKey& key, ByteView iv, ByteView plaintext) {
  auto cipher = make_cipher(key.alg, key.octets);
  const std::size_t bs = cipher->block_octets();
  if (iv.size() != bs) fail(Errc::invalid_argument, "IV must be one block");

  const std::size_t pad = bs - plaintext.size() % bs;
  Bytes buf(plaintext.begin(), plaintext.end());
  buf.insert(buf.end(), pad, static_cast<std::uint8_t>(pad));

  Bytes prev(iv.begin(), iv.end());
  for (std::size_t off = 0; off < buf.size(); off += bs) {
    for (std::size_t i = 0; i < bs; ++i) buf[off + i] ^= prev[i];
    cipher->encrypt_block(buf.data() + off, buf.data() + off);
    prev.assign(buf.begin() + off, buf.begin() + off + bs);
  }
  return buf;
}

Bytes decrypt_cbc(const SymmetricKey& key, ByteView iv, ByteView ciphertext) {
  auto cipher = make_cipher(key.alg, key.octets);
  const std::size_t bs = cipher->block_octets();
  if (iv.size() != bs) fail(Errc::invalid_argument, "IV must be one block");
  if (ciphertext.empty() || ciphertext.size() % bs != 0) {
    fail(Errc::malformed_ciphertext, "ciphertext is not whole blocks");
  }

  Bytes out(ciphertext.size(), 0);
  Bytes prev(iv.begin(), iv.end());
  for (std::size_t off = 0; off < ciphertext.size(); off += bs) {
    cipher->decrypt_block(ciphertext.data() + off, out.data() + off);
    for (std::size_t i = 0; i < bs; ++i) out[off + i] ^= prev[i];
    prev.assign(ciphertext.begin() + off, ciphertext.begin() + off + bs);
  }

  const std::uint8_t pad = out.back();
  if (pad == 0 || pad > bs) fail(Errc::decryption_failure, "bad padding");
  for (std::size_t i = out.size() - pad; i < out.size(); ++i) {
    if (out[i] != pad) fail(Errc::decryption_failure, "bad padding");
  }
  out.resize(out.size() - pad);
  return out;
}

}  // namespace mwss::crypto
