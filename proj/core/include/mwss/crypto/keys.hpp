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

#ifndef MWSS_CRYPTO_KEYS_HPP
#define MWSS_CRYPTO_KEYS_HPP

#include <string>
#include <string_view>

#include "mwss/bytes.hpp"
#include "mwss/crypto/block_cipher.hpp"
#include "mwss/crypto/dsa.hpp"
#include "mwss/crypto/rsa.hpp"
#include "mwss/rng.hpp"
#include "mwss/xml.hpp"

namespace mwss::crypto {

enum class KeyTransportAlg {
  rsa15_1024,
  rsa15_2048,
};

enum class SignatureAlg {
  rsa_sha1_1024,
  rsa_sha1_2048,
  dsa_sha1_1024,
};

inline constexpr KeyTransportAlg kAllTransports[] = {KeyTransportAlg::rsa15_1024,
                                                     KeyTransportAlg::rsa15_2048};
inline constexpr SignatureAlg kAllSignatures[] = {SignatureAlg::rsa_sha1_1024,
                                                  SignatureAlg::rsa_sha1_2048,
                                                  SignatureAlg::dsa_sha1_1024};

std::size_t modulus_bits(KeyTransportAlg alg);
std::string_view transport_name(KeyTransportAlg alg);  // "RSA15-1024"
KeyTransportAlg transport_from_name(std::string_view name);

std::size_t signature_bits(SignatureAlg alg);
bool signature_is_rsa(SignatureAlg alg);
std::string_view signature_name(SignatureAlg alg);  // "RSA-SHA1-1024"
SignatureAlg signature_from_name(std::string_view name);

enum class KeyKind { rsa, dsa };

std::string_view key_kind_name(KeyKind kind);  // "RSA" / "DSA"
KeyKind key_kind_from_name(std::string_view name);

/// One keypair with ownership metadata. Exactly one of rsa/dsa is active,
/// selected by kind.
struct AsymmetricKeyPair {
  KeyKind kind = KeyKind::rsa;
  std::size_t bits = 0;
  std::string owner;
  std::string key_id;
  RsaKey rsa;
  DsaKey dsa;

  bool has_private() const {
    return kind == KeyKind::rsa ? rsa.has_private() : dsa.has_private();
  }
  AsymmetricKeyPair public_part() const;
};

/// Supported combinations: RSA with 1024 or 2048 bits, DSA with 1024.
AsymmetricKeyPair generate_keypair(KeyKind kind, std::size_t bits,
                                   std::string owner, std::string key_id,
                                   RandomSource& rng);

Bytes wrap_key(KeyTransportAlg alg, const AsymmetricKeyPair& recipient,
               const SymmetricKey& key, RandomSource& rng);
SymmetricKey unwrap_key(const AsymmetricKeyPair& own, ByteView wrapped,
                        CipherAlg expected_alg);

Bytes sign(SignatureAlg alg, const AsymmetricKeyPair& signer, ByteView msg);
bool verify(SignatureAlg alg, const AsymmetricKeyPair& key, ByteView msg,
            ByteView signature);

/// <RSAKeyValue> or <DSAKeyValue> subtree with base64 integers; private
/// fields included on request.
xml::Element key_value_element(const AsymmetricKeyPair& key, bool include_private);

/// Parses either element form. Owner and key_id are left empty.
AsymmetricKeyPair key_from_value_element(const xml::Element& el);

}  // namespace mwss::crypto

#endif  // MWSS_CRYPTO_KEYS_HPP
