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

#include "mwss/crypto/keys.hpp"

#include "mwss/error.hpp"

namespace mwss::crypto {
namespace {

std::size_t octets_bit_length(const Bytes& be) {
  std::size_t i = 0;
  while (i < be.size() && be[i] == 0) ++i;
  if (i == be.size()) return 0;
  std::size_t msb_bits = 0;
  for (std::uint8_t b = be[i]; b != 0; b >>= 1) ++msb_bits;
  return (be.size() - i - 1) * 8 + msb_bits;
}

void append_b64_child(xml::Element& parent, std::string name, const Bytes& v) {
  xml::Element child(std::move(name));
  child.add_text(base64_encode(v));
  parent.add_child(std::move(child));
}

Bytes read_b64_child(const xml::Element& el, std::string_view name, bool required) {
  const xml::Element* child = el.find_child(name);
  if (child == nullptr) {
    if (!required) return {};
    fail(Errc::parse_error, "key value missing " + std::string(name));
  }
  auto decoded = base64_decode(child->text_content());
  if (!decoded) fail(Errc::parse_error, "key value field is not base64");
  return *decoded;
}

}  // namespace

std::size_t modulus_bits(KeyTransportAlg alg) {
  return alg == KeyTransportAlg::rsa15_1024 ? 1024 : 2048;
}

std::string_view transport_name(KeyTransportAlg alg) {
  return alg == KeyTransportAlg::rsa15_1024 ? "RSA15-1024" : "RSA15-2048";
}

KeyTransportAlg transport_from_name(std::string_view name) {
  for (KeyTransportAlg alg : kAllTransports) {
    if (transport_name(alg) == name) return alg;
  }
  fail(Errc::unsupported_algorithm, "unknown key transport: " + std::string(name));
}

std::size_t signature_bits(SignatureAlg alg) {
  return alg == SignatureAlg::rsa_sha1_2048 ? 2048 : 1024;
}

bool signature_is_rsa(SignatureAlg alg) {
  return alg != SignatureAlg::dsa_sha1_1024;
}

std::string_view signature_name(SignatureAlg alg) {
  switch (alg) {
    case SignatureAlg::rsa_sha1_1024: return "RSA-SHA1-1024";
    case SignatureAlg::rsa_sha1_2048: return "RSA-SHA1-2048";
    case SignatureAlg::dsa_sha1_1024: return "DSA-SHA1-1024";
  }
  fail(Errc::invalid_argument, "bad signature enum");
}

SignatureAlg signature_from_name(std::string_view name) {
  for (SignatureAlg alg : kAllSignatures) {
    if (signature_name(alg) == name) return alg;
  }
  fail(Errc::unsupported_algorithm, "unknown signature algorithm: " + std::string(name));
}

std::string_view key_kind_name(KeyKind kind) {
  return kind == KeyKind::rsa ? "RSA" : "DSA";
}

KeyKind key_kind_from_name(std::string_view name) {
  if (name == "RSA") return KeyKind::rsa;
  if (name == "DSA") return KeyKind::dsa;
  fail(Errc::unsupported_algorithm, "unknown key kind: " + std::string(name));
}

AsymmetricKeyPair AsymmetricKeyPair::public_part() const {
  AsymmetricKeyPair out = *this;
  out.rsa = kind == KeyKind::rsa ? rsa.public_part() : RsaKey{};
  out.dsa = kind == KeyKind::dsa ? dsa.public_part() : DsaKey{};
  return out;
}

AsymmetricKeyPair generate_keypair(KeyKind kind, std::size_t bits,
                                   std::string owner, std::string key_id,
                                   RandomSource& rng) {
  AsymmetricKeyPair pair;
  pair.kind = kind;
  pair.bits = bits;
  pair.owner = std::move(owner);
  pair.key_id = std::move(key_id);
  if (kind == KeyKind::rsa) {
    if (bits != 1024 && bits != 2048) {
      fail(Errc::unsupported_algorithm, "RSA supports 1024 or 2048 bits");
    }
    pair.rsa = rsa_generate(bits, rng);
  } else {
    if (bits != 1024) {
      fail(Errc::unsupported_algorithm, "DSA supports 1024 bits only");
    }
    pair.dsa = dsa_generate(bits, rng);
  }
  return pair;
}

Bytes wrap_key(KeyTransportAlg alg, const AsymmetricKeyPair& recipient,
               const SymmetricKey& key, RandomSource& rng) {
  if (recipient.kind != KeyKind::rsa) {
    fail(Errc::invalid_key, "key transport needs an RSA recipient key");
  }
  if (octets_bit_length(recipient.rsa.n) != modulus_bits(alg)) {
    fail(Errc::invalid_key, "recipient key size does not match transport algorithm");
  }
  return rsa_encrypt_pkcs1(recipient.rsa, key.octets, rng);
}

SymmetricKey unwrap_key(const AsymmetricKeyPair& own, ByteView wrapped,
                        CipherAlg expected_alg) {
  if (own.kind != KeyKind::rsa || !own.rsa.has_private()) {
    fail(Errc::invalid_key, "key transport needs an RSA private key");
  }
  Bytes octets = rsa_decrypt_pkcs1(own.rsa, wrapped);
  if (octets.size() != key_length(expected_alg)) {
    fail(Errc::key_unwrap_failure, "key transport unwrap failed");
  }
  return SymmetricKey{expected_alg, std::move(octets)};
}

Bytes sign(SignatureAlg alg, const AsymmetricKeyPair& signer, ByteView msg) {
  if (signature_is_rsa(alg)) {
    if (signer.kind != KeyKind::rsa ||
        octets_bit_length(signer.rsa.n) != signature_bits(alg)) {
      fail(Errc::invalid_key, "signer does not match signature algorithm");
    }
    return rsa_sign_sha1(signer.rsa, msg);
  }
  if (signer.kind != KeyKind::dsa ||
      octets_bit_length(signer.dsa.p) != signature_bits(alg)) {
    fail(Errc::invalid_key, "signer does not match signature algorithm");
  }
  return dsa_sign_sha1(signer.dsa, msg);
}

bool verify(SignatureAlg alg, const AsymmetricKeyPair& key, ByteView msg,
            ByteView signature) {
  if (signature_is_rsa(alg)) {
    if (key.kind != KeyKind::rsa) return false;
    return rsa_verify_sha1(key.rsa, msg, signature);
  }
  if (key.kind != KeyKind::dsa) return false;
  return dsa_verify_sha1(key.dsa, msg, signature);
}

xml::Element key_value_element(const AsymmetricKeyPair& key, bool include_private) {
  if (key.kind == KeyKind::rsa) {
    xml::Element el("RSAKeyValue");
    append_b64_child(el, "Modulus", key.rsa.n);
    append_b64_child(el, "Exponent", key.rsa.e);
    if (include_private) {
      if (!key.rsa.has_private()) fail(Errc::invalid_key, "no private RSA fields");
      append_b64_child(el, "PrivateExponent", key.rsa.d);
      append_b64_child(el, "P", key.rsa.p);
      append_b64_child(el, "Q", key.rsa.q);
    }
    return el;
  }
  xml::Element el("DSAKeyValue");
  append_b64_child(el, "P", key.dsa.p);
  append_b64_child(el, "Q", key.dsa.q);
  append_b64_child(el, "G", key.dsa.g);
  append_b64_child(el, "Y", key.dsa.y);
  if (include_private) {
    if (!key.dsa.has_private()) fail(Errc::invalid_key, "no private DSA fields");
    append_b64_child(el, "X", key.dsa.x);
  }
  return el;
}

AsymmetricKeyPair key_from_value_element(const xml::Element& el) {
  AsymmetricKeyPair pair;
  auto local = xml::local_name(el.name);
  if (local == "RSAKeyValue") {
    pair.kind = KeyKind::rsa;
    pair.rsa.n = read_b64_child(el, "Modulus", true);
    pair.rsa.e = read_b64_child(el, "Exponent", true);
    pair.rsa.d = read_b64_child(el, "PrivateExponent", false);
    pair.rsa.p = read_b64_child(el, "P", false);
    pair.rsa.q = read_b64_child(el, "Q", false);
    pair.bits = octets_bit_length(pair.rsa.n);
  } else if (local == "DSAKeyValue") {
    pair.kind = KeyKind::dsa;
    pair.dsa.p = read_b64_child(el, "P", true);
    pair.dsa.q = read_b64_child(el, "Q", true);
    pair.dsa.g = read_b64_child(el, "G", true);
    pair.dsa.y = read_b64_child(el, "Y", true);
    pair.dsa.x = read_b64_child(el, "X", false);
    pair.bits = octets_bit_length(pair.dsa.p);
  } else {
    fail(Errc::parse_error, "expected RSAKeyValue or DSAKeyValue");
  }
  return pair;
}

}  // namespace mwss::crypto
