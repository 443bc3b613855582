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

#ifndef MWSS_WSSEC_HPP
#define MWSS_WSSEC_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "mwss/crypto/keys.hpp"
#include "mwss/envelope.hpp"
#include "mwss/rng.hpp"

namespace mwss::wssec {

inline constexpr std::string_view kXmlEncNs = "http://www.w3.org/2001/04/xmlenc#";
inline constexpr std::string_view kXmlDsigNs = "http://www.w3.org/2000/09/xmldsig#";

// Algorithm identifiers carried in Algorithm attributes.
std::string cipher_uri(crypto::CipherAlg alg);
crypto::CipherAlg cipher_from_uri(std::string_view uri);
std::string key_transport_uri();  // rsa-1_5 for both modulus sizes
std::string signature_uri(crypto::SignatureAlg alg);
std::string digest_uri();  // sha1

enum class SecurityMode { plain, enc, sign, enc_sign };

std::string_view mode_name(SecurityMode mode);  // "PLAIN" .. "ENC_SIGN"
SecurityMode mode_from_name(std::string_view name);

enum class ScopeKind { whole_body, element };

struct SecurityPolicy {
  SecurityMode mode = SecurityMode::plain;
  std::optional<crypto::CipherAlg> cipher;
  std::optional<crypto::KeyTransportAlg> key_transport;
  std::optional<crypto::SignatureAlg> signature;
  ScopeKind scope = ScopeKind::whole_body;
  std::string scope_element;  // local name, used when scope == element
  bool reuse_transport_key_for_signing = false;
  bool random_ids = false;  // default: deterministic per-message counter

  bool encrypts() const {
    return mode == SecurityMode::enc || mode == SecurityMode::enc_sign;
  }
  bool signs() const {
    return mode == SecurityMode::sign || mode == SecurityMode::enc_sign;
  }
  void validate() const;  // invalid-argument on inconsistent fields
};

/// Key material handed to secure(). Only the fields the policy needs must
/// be set; own_transport doubles as the signer when the reuse flag is on.
struct SecureKeys {
  std::optional<crypto::AsymmetricKeyPair> recipient_transport_public;
  std::optional<crypto::AsymmetricKeyPair> own_signing;
  std::optional<crypto::AsymmetricKeyPair> own_transport;
};

struct UnsecureKeys {
  std::optional<crypto::AsymmetricKeyPair> own_transport;  // private half
  // When set, the embedded signer key must match this public key.
  std::optional<crypto::AsymmetricKeyPair> pinned_peer_signing;
};

struct SignatureCheck {
  bool valid = false;
  bool digest_ok = false;
  bool signature_ok = false;
  crypto::SignatureAlg alg = crypto::SignatureAlg::rsa_sha1_1024;
  crypto::AsymmetricKeyPair signer_key;  // embedded public key
  std::string reference_uri;
};

struct UnsecureReport {
  SecurityMode detected_mode = SecurityMode::plain;
  std::optional<bool> signature_valid;
  std::optional<bool> decryption_ok;
  std::optional<Envelope> recovered;  // present only when every check passed
  std::optional<crypto::CipherAlg> cipher;
  std::optional<crypto::KeyTransportAlg> key_transport;
  std::optional<crypto::SignatureAlg> signature;
  std::string failure_detail;  // local diagnostics; never sent to peers
  std::int64_t t_verify_us = 0;   // 0 when the message carries no signature
  std::int64_t t_decrypt_us = 0;  // 0 when nothing was encrypted

  bool ok() const { return recovered.has_value(); }
};

/// Replaces the policy's scope target with an EncryptedData block and adds
/// an EncryptedKey (fresh symmetric key wrapped for the recipient) to the
/// Security header.
Envelope apply_encryption(const Envelope& e, const SecurityPolicy& policy,
                          const crypto::AsymmetricKeyPair& recipient_public,
                          RandomSource& rng);

/// Inverse of apply_encryption; restores the original envelope byte-exact.
Envelope decrypt_envelope(const Envelope& e,
                          const crypto::AsymmetricKeyPair& own_private);

/// Appends a Signature over the body's single child to the Security header.
Envelope apply_signature(const Envelope& e, const SecurityPolicy& policy,
                         const crypto::AsymmetricKeyPair& signer);

/// Recomputes the digest and checks the signature against the embedded key.
SignatureCheck verify_envelope(const Envelope& e);

Envelope secure(const Envelope& e, const SecurityPolicy& policy,
                const SecureKeys& keys, RandomSource& rng);

/// Detects the mode from the blocks present, verifies before decrypting,
/// and never throws; failed checks leave recovered absent.
UnsecureReport unsecure(const Envelope& e, const UnsecureKeys& keys);

}  // namespace mwss::wssec

#endif  // MWSS_WSSEC_HPP
