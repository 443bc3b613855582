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

#include "mwss/wssec.hpp"

#include <chrono>
#include <cstring>

#include "mwss/crypto/sha1.hpp"
#include "mwss/error.hpp"

namespace mwss::wssec {
namespace {

// Ids are nine decimal digits, shaped like the figures' "223940028". The
// deterministic counter keeps secured message sizes identical across reps.
class IdGenerator {
 public:
  IdGenerator(bool random, RandomSource& rng) : random_(random), rng_(&rng) {}

  std::string next() {
    std::uint64_t v;
    if (random_) {
      std::uint8_t raw[8];
      rng_->fill(raw, sizeof raw);
      std::uint64_t u = 0;
      std::memcpy(&u, raw, sizeof u);
      v = 100000000 + u % 900000000;
    } else {
      v = counter_++;
    }
    return std::to_string(v);
  }

 private:
  std::uint64_t counter_ = 100000000;
  bool random_;
  RandomSource* rng_;
};

template <typename El, typename Pred>
El* find_in_tree(El& el, Pred&& pred) {
  if (pred(el)) return &el;
  for (auto& n : el.children) {
    if (!n.is_element()) continue;
    if (El* r = find_in_tree(n.element(), pred)) return r;
  }
  return nullptr;
}

template <typename Env>
auto* find_security(Env& e) {
  for (auto& h : e.header_blocks) {
    if (xml::local_name(h.name) == "Security") return &h;
  }
  return static_cast<decltype(&e.header_blocks[0])>(nullptr);
}

xml::Element& ensure_security(Envelope& e) {
  if (auto* sec = find_security(e)) return *sec;
  e.header_blocks.push_back(xml::Element{"Security"});
  return e.header_blocks.back();
}

void drop_security_if_empty(Envelope& e) {
  for (auto it = e.header_blocks.begin(); it != e.header_blocks.end(); ++it) {
    if (xml::local_name(it->name) != "Security") continue;
    for (const auto& n : it->children) {
      if (n.is_element()) return;
    }
    e.header_blocks.erase(it);
    return;
  }
}

template <typename Env>
auto* find_body_element_by_id(Env& e, std::string_view id) {
  using ElPtr = decltype(&e.body_children[0]);
  for (auto& child : e.body_children) {
    ElPtr r = find_in_tree(child, [&](auto& el) {
      const std::string* v = el.find_attr("Id");
      return v != nullptr && *v == id;
    });
    if (r != nullptr) return r;
  }
  return static_cast<ElPtr>(nullptr);
}

const xml::Element* required_child(const xml::Element& parent, std::string_view local,
                                   Errc code) {
  const xml::Element* el = parent.find_child(local);
  if (el == nullptr) {
    fail(code, "missing " + std::string(local) + " element");
  }
  return el;
}

// Security blocks declare their namespace on the element itself; a block
// whose declaration is missing or altered is rejected as malformed.
void require_block_ns(const xml::Element& el, std::string_view ns, Errc code) {
  const std::string_view prefix = xml::prefix_of(el.name);
  const std::string key =
      prefix.empty() ? std::string("xmlns") : "xmlns:" + std::string(prefix);
  const std::string* declared = el.find_attr(key);
  if (declared == nullptr || *declared != ns) {
    fail(code, std::string(xml::local_name(el.name)) +
                   " block is not in the expected namespace");
  }
}

Bytes read_cipher_value(const xml::Element& block, Errc missing_code,
                        Errc decode_code) {
  const xml::Element* data = required_child(block, "CipherData", missing_code);
  const xml::Element* value = required_child(*data, "CipherValue", missing_code);
  auto decoded = base64_decode(value->text_content());
  if (!decoded) fail(decode_code, "CipherValue is not base64");
  return *decoded;
}

xml::Element cipher_data_element(const Bytes& octets) {
  xml::Element data("CipherData");
  xml::Element value("CipherValue");
  value.add_text(base64_encode(octets));
  data.add_child(std::move(value));
  return data;
}

// Accepts Fig. 4's "EncryptedMethod" spelling next to the schema's
// "EncryptionMethod".
const xml::Element* find_method(const xml::Element& block) {
  if (const xml::Element* m = block.find_child("EncryptionMethod")) return m;
  return block.find_child("EncryptedMethod");
}

std::string method_algorithm(const xml::Element& block, Errc missing_code) {
  const xml::Element* method = find_method(block);
  if (method == nullptr) fail(missing_code, "missing EncryptionMethod element");
  const std::string* alg = method->find_attr("Algorithm");
  if (alg == nullptr) fail(missing_code, "EncryptionMethod has no Algorithm");
  return *alg;
}

bool same_public_key(const crypto::AsymmetricKeyPair& a,
                     const crypto::AsymmetricKeyPair& b) {
  if (a.kind != b.kind) return false;
  if (a.kind == crypto::KeyKind::rsa) {
    return a.rsa.n == b.rsa.n && a.rsa.e == b.rsa.e;
  }
  return a.dsa.p == b.dsa.p && a.dsa.q == b.dsa.q && a.dsa.g == b.dsa.g &&
         a.dsa.y == b.dsa.y;
}

crypto::SignatureAlg signature_alg_from(const std::string& uri,
                                        const crypto::AsymmetricKeyPair& key) {
  if (uri == signature_uri(crypto::SignatureAlg::dsa_sha1_1024)) {
    if (key.bits != 1024) {
      fail(Errc::unsupported_algorithm, "unsupported DSA key size");
    }
    return crypto::SignatureAlg::dsa_sha1_1024;
  }
  if (uri == signature_uri(crypto::SignatureAlg::rsa_sha1_1024)) {
    if (key.bits == 1024) return crypto::SignatureAlg::rsa_sha1_1024;
    if (key.bits == 2048) return crypto::SignatureAlg::rsa_sha1_2048;
    fail(Errc::unsupported_algorithm, "unsupported RSA key size");
  }
  fail(Errc::unsupported_algorithm, "unknown signature algorithm URI: " + uri);
}

// Removes the Signature block and the Id attribute it pinned onto a plain
// element, restoring the pre-signature byte form.
void strip_signature(Envelope& e) {
  auto* sec = find_security(e);
  if (sec == nullptr) return;
  std::string ref_id;
  for (auto it = sec->children.begin(); it != sec->children.end(); ++it) {
    if (!it->is_element() || xml::local_name(it->element().name) != "Signature") {
      continue;
    }
    if (const xml::Element* si = it->element().find_child("SignedInfo")) {
      if (const xml::Element* ref = si->find_child("Reference")) {
        if (const std::string* uri = ref->find_attr("URI");
            uri != nullptr && uri->size() > 1 && (*uri)[0] == '#') {
          ref_id = uri->substr(1);
        }
      }
    }
    sec->children.erase(it);
    break;
  }
  if (!ref_id.empty()) {
    xml::Element* target = find_body_element_by_id(e, ref_id);
    if (target != nullptr && xml::local_name(target->name) != "EncryptedData") {
      std::erase_if(target->attrs, [](const auto& kv) { return kv.first == "Id"; });
    }
  }
  drop_security_if_empty(e);
}

}  // namespace

std::string cipher_uri(crypto::CipherAlg alg) {
  std::string_view suffix;
  switch (alg) {
    case crypto::CipherAlg::des64: suffix = "des-cbc"; break;
    case crypto::CipherAlg::tdes192: suffix = "tripledes-cbc"; break;
    case crypto::CipherAlg::idea128: suffix = "idea-cbc"; break;
    case crypto::CipherAlg::aes128: suffix = "aes128-cbc"; break;
    case crypto::CipherAlg::aes192: suffix = "aes192-cbc"; break;
    case crypto::CipherAlg::aes256: suffix = "aes256-cbc"; break;
  }
  return std::string(kXmlEncNs) + std::string(suffix);
}

crypto::CipherAlg cipher_from_uri(std::string_view uri) {
  for (crypto::CipherAlg alg : crypto::kAllCiphers) {
    if (cipher_uri(alg) == uri) return alg;
  }
  fail(Errc::unsupported_algorithm, "unknown cipher URI: " + std::string(uri));
}

std::string key_transport_uri() { return std::string(kXmlEncNs) + "rsa-1_5"; }

std::string signature_uri(crypto::SignatureAlg alg) {
  return std::string(kXmlDsigNs) +
         (crypto::signature_is_rsa(alg) ? "rsa-sha1" : "dsa-sha1");
}

std::string digest_uri() { return std::string(kXmlDsigNs) + "sha1"; }

std::string_view mode_name(SecurityMode mode) {
  switch (mode) {
    case SecurityMode::plain: return "PLAIN";
    case SecurityMode::enc: return "ENC";
    case SecurityMode::sign: return "SIGN";
    case SecurityMode::enc_sign: return "ENC_SIGN";
  }
  fail(Errc::invalid_argument, "bad mode enum");
}

SecurityMode mode_from_name(std::string_view name) {
  for (SecurityMode m : {SecurityMode::plain, SecurityMode::enc,
                         SecurityMode::sign, SecurityMode::enc_sign}) {
    if (mode_name(m) == name) return m;
  }
  fail(Errc::invalid_argument, "unknown security mode: " + std::string(name));
}

void SecurityPolicy::validate() const {
  if (encrypts() && (!cipher || !key_transport)) {
    fail(Errc::invalid_argument, "encryption modes need cipher and key_transport");
  }
  if (signs() && !signature) {
    fail(Errc::invalid_argument, "signing modes need a signature algorithm");
  }
  if (scope == ScopeKind::element && scope_element.empty()) {
    fail(Errc::invalid_argument, "element scope needs an element name");
  }
  if (reuse_transport_key_for_signing) {
    if (!signs() || !signature || !crypto::signature_is_rsa(*signature)) {
      fail(Errc::invalid_argument,
           "key reuse requires an RSA signature algorithm");
    }
    if (!key_transport) {
      fail(Errc::invalid_argument, "key reuse requires a key transport algorithm");
    }
    if (crypto::signature_bits(*signature) != crypto::modulus_bits(*key_transport)) {
      fail(Errc::invalid_argument,
           "key reuse requires matching transport and signature key sizes");
    }
  }
}

Envelope apply_encryption(const Envelope& e, const SecurityPolicy& policy,
                          const crypto::AsymmetricKeyPair& recipient_public,
                          RandomSource& rng) {
  policy.validate();
  if (!policy.encrypts()) {
    fail(Errc::invalid_argument, "policy mode does not encrypt");
  }

  Envelope out = e;
  xml::Element* target = nullptr;
  if (policy.scope == ScopeKind::whole_body) {
    if (out.body_children.size() != 1) {
      fail(Errc::scope_error, "whole-body encryption needs exactly one body child");
    }
    target = &out.body_children[0];
  } else {
    for (auto& child : out.body_children) {
      target = find_in_tree(child, [&](xml::Element& el) {
        return xml::local_name(el.name) == policy.scope_element;
      });
      if (target != nullptr) break;
    }
    if (target == nullptr) {
      fail(Errc::scope_error, "scope element not found: " + policy.scope_element);
    }
  }

  const std::string plaintext =
      xml::serialize_element(*target, ambient_prefixes(e));
  crypto::SymmetricKey key = crypto::gen_symmetric_key(*policy.cipher, rng);
  const Bytes iv = rng.bytes(crypto::block_size(*policy.cipher));
  Bytes payload = iv;
  const Bytes ct = crypto::encrypt_cbc(key, iv, to_bytes(plaintext));
  payload.insert(payload.end(), ct.begin(), ct.end());
  const Bytes wrapped =
      crypto::wrap_key(*policy.key_transport, recipient_public, key, rng);

  IdGenerator ids(policy.random_ids, rng);
  const std::string id = ids.next();

  xml::Element enc_data("n0:EncryptedData");
  enc_data.set_attr("Id", id);
  enc_data.set_attr("xmlns:n0", std::string(kXmlEncNs));
  xml::Element enc_method("EncryptionMethod");
  enc_method.set_attr("Algorithm", cipher_uri(*policy.cipher));
  enc_data.add_child(std::move(enc_method));
  enc_data.add_child(cipher_data_element(payload));
  *target = std::move(enc_data);

  xml::Element enc_key("n1:EncryptedKey");
  enc_key.set_attr("xmlns:n1", std::string(kXmlEncNs));
  xml::Element key_method("EncryptedMethod");  // Fig. 4 spelling
  key_method.set_attr("Algorithm", key_transport_uri());
  enc_key.add_child(std::move(key_method));
  enc_key.add_child(cipher_data_element(wrapped));
  xml::Element ref_list("ReferenceList");
  xml::Element data_ref("DataReference");
  data_ref.set_attr("URI", "#" + id);
  ref_list.add_child(std::move(data_ref));
  enc_key.add_child(std::move(ref_list));
  ensure_security(out).add_child(std::move(enc_key));
  return out;
}

Envelope decrypt_envelope(const Envelope& e,
                          const crypto::AsymmetricKeyPair& own_private) {
  Envelope out = e;
  auto* sec = find_security(out);
  if (sec == nullptr) fail(Errc::protocol_error, "no Security header");

  xml::Element* enc_key = nullptr;
  std::size_t enc_key_count = 0;
  for (auto& n : sec->children) {
    if (n.is_element() && xml::local_name(n.element().name) == "EncryptedKey") {
      enc_key = &n.element();
      ++enc_key_count;
    }
  }
  if (enc_key_count != 1) {
    fail(Errc::protocol_error, "expected exactly one EncryptedKey");
  }
  require_block_ns(*enc_key, kXmlEncNs, Errc::protocol_error);
  const std::string transport = method_algorithm(*enc_key, Errc::protocol_error);
  if (transport != key_transport_uri()) {
    fail(Errc::unsupported_algorithm, "unknown key transport algorithm: " + transport);
  }

  const Bytes wrapped =
      read_cipher_value(*enc_key, Errc::protocol_error, Errc::decryption_failure);

  const xml::Element* ref_list =
      required_child(*enc_key, "ReferenceList", Errc::protocol_error);
  const xml::Element* data_ref =
      required_child(*ref_list, "DataReference", Errc::protocol_error);
  const std::string* uri = data_ref->find_attr("URI");
  if (uri == nullptr || uri->size() < 2 || (*uri)[0] != '#') {
    fail(Errc::reference_error, "DataReference URI is not a fragment reference");
  }
  const std::string id = uri->substr(1);

  xml::Element* target = find_body_element_by_id(out, id);
  if (target == nullptr || xml::local_name(target->name) != "EncryptedData") {
    fail(Errc::reference_error, "DataReference does not resolve to EncryptedData");
  }
  require_block_ns(*target, kXmlEncNs, Errc::protocol_error);

  const crypto::CipherAlg alg =
      cipher_from_uri(method_algorithm(*target, Errc::protocol_error));
  const std::size_t block = crypto::block_size(alg);
  const Bytes payload =
      read_cipher_value(*target, Errc::protocol_error, Errc::decryption_failure);
  if (payload.size() < 2 * block) {
    fail(Errc::decryption_failure, "ciphertext shorter than IV plus one block");
  }

  Bytes plaintext;
  try {
    crypto::SymmetricKey key = crypto::unwrap_key(own_private, wrapped, alg);
    plaintext = crypto::decrypt_cbc(key, ByteView(payload).subspan(0, block),
                                    ByteView(payload).subspan(block));
  } catch (const Error&) {
    // Unwrap, block and padding faults all collapse to one error.
    fail(Errc::decryption_failure, "decryption failed");
  }

  xml::Element restored;
  try {
    restored = xml::parse_element(to_string(plaintext));
  } catch (const Error&) {
    fail(Errc::malformed_plaintext, "decrypted octets are not an XML element");
  }
  *target = std::move(restored);

  std::erase_if(sec->children, [](const xml::Node& n) {
    return n.is_element() && xml::local_name(n.element().name) == "EncryptedKey";
  });
  drop_security_if_empty(out);
  return out;
}

Envelope apply_signature(const Envelope& e, const SecurityPolicy& policy,
                         const crypto::AsymmetricKeyPair& signer) {
  policy.validate();
  if (!policy.signs()) {
    fail(Errc::invalid_argument, "policy mode does not sign");
  }
  Envelope out = e;
  if (out.body_children.size() != 1) {
    fail(Errc::invalid_argument, "signing needs exactly one body child");
  }
  xml::Element& target = out.body_children[0];

  std::string id;
  if (const std::string* existing = target.find_attr("Id")) {
    id = *existing;
  } else {
    SystemRandom& sys = SystemRandom::instance();
    IdGenerator ids(policy.random_ids, sys);
    id = ids.next();
    target.set_attr("Id", id);
  }

  const Bytes digest =
      crypto::sha1_bytes(to_bytes(xml::serialize_element(target, ambient_prefixes(out))));

  xml::Element signed_info("SignedInfo");
  xml::Element sig_method("SignatureMethod");
  sig_method.set_attr("Algorithm", signature_uri(*policy.signature));
  signed_info.add_child(std::move(sig_method));
  xml::Element reference("Reference");
  reference.set_attr("URI", "#" + id);
  xml::Element digest_method("DigestMethod");
  digest_method.set_attr("Algorithm", digest_uri());
  reference.add_child(std::move(digest_method));
  xml::Element digest_value("DigestValue");
  digest_value.add_text(base64_encode(digest));
  reference.add_child(std::move(digest_value));
  signed_info.add_child(std::move(reference));

  const Bytes sig_octets =
      crypto::sign(*policy.signature, signer,
                   to_bytes(xml::serialize_element(signed_info)));

  xml::Element signature("n2:Signature");
  signature.set_attr("xmlns:n2", std::string(kXmlDsigNs));
  signature.add_child(std::move(signed_info));
  xml::Element sig_value("SignatureValue");
  sig_value.add_text(base64_encode(sig_octets));
  signature.add_child(std::move(sig_value));
  xml::Element key_info("KeyInfo");
  xml::Element key_value("KeyValue");
  key_value.add_child(crypto::key_value_element(signer.public_part(), false));
  key_info.add_child(std::move(key_value));
  signature.add_child(std::move(key_info));

  ensure_security(out).add_child(std::move(signature));
  return out;
}

SignatureCheck verify_envelope(const Envelope& e) {
  const auto* sec = find_security(e);
  if (sec == nullptr) fail(Errc::no_signature, "no Security header");
  const xml::Element* signature = sec->find_child("Signature");
  if (signature == nullptr) fail(Errc::no_signature, "no Signature block");
  require_block_ns(*signature, kXmlDsigNs, Errc::malformed_signature);

  const xml::Element* signed_info =
      required_child(*signature, "SignedInfo", Errc::malformed_signature);
  const xml::Element* sig_method =
      required_child(*signed_info, "SignatureMethod", Errc::malformed_signature);
  const std::string* sig_alg_uri = sig_method->find_attr("Algorithm");
  if (sig_alg_uri == nullptr) {
    fail(Errc::malformed_signature, "SignatureMethod has no Algorithm");
  }
  const xml::Element* reference =
      required_child(*signed_info, "Reference", Errc::malformed_signature);
  const std::string* uri = reference->find_attr("URI");
  if (uri == nullptr || uri->size() < 2 || (*uri)[0] != '#') {
    fail(Errc::malformed_signature, "Reference URI is not a fragment reference");
  }
  const xml::Element* digest_value =
      required_child(*reference, "DigestValue", Errc::malformed_signature);
  auto digest = base64_decode(digest_value->text_content());
  if (!digest || digest->size() != 20) {
    fail(Errc::malformed_signature, "DigestValue is not a base64 SHA-1 digest");
  }
  const xml::Element* sig_value =
      required_child(*signature, "SignatureValue", Errc::malformed_signature);
  auto sig_octets = base64_decode(sig_value->text_content());
  if (!sig_octets) fail(Errc::malformed_signature, "SignatureValue is not base64");

  const xml::Element* key_info =
      required_child(*signature, "KeyInfo", Errc::malformed_signature);
  const xml::Element* key_value =
      required_child(*key_info, "KeyValue", Errc::malformed_signature);
  const xml::Element* key_el = key_value->find_child("RSAKeyValue");
  if (key_el == nullptr) key_el = key_value->find_child("DSAKeyValue");
  if (key_el == nullptr) {
    fail(Errc::malformed_signature, "KeyValue holds no supported key");
  }

  SignatureCheck check;
  try {
    check.signer_key = crypto::key_from_value_element(*key_el);
  } catch (const Error&) {
    fail(Errc::malformed_signature, "embedded key does not parse");
  }
  check.alg = signature_alg_from(*sig_alg_uri, check.signer_key);
  check.reference_uri = *uri;

  const std::string id = uri->substr(1);
  const xml::Element* target = find_body_element_by_id(e, id);
  if (target == nullptr) {
    fail(Errc::reference_error, "signature Reference does not resolve");
  }

  std::string target_octets;
  std::string signed_info_octets;
  try {
    target_octets = xml::serialize_element(*target, ambient_prefixes(e));
    signed_info_octets = xml::serialize_element(*signed_info);
  } catch (const Error&) {
    fail(Errc::malformed_signature, "signed content does not re-serialize");
  }

  check.digest_ok =
      equal_ct(crypto::sha1_bytes(to_bytes(target_octets)), *digest);
  check.signature_ok = crypto::verify(check.alg, check.signer_key,
                                      to_bytes(signed_info_octets), *sig_octets);
  check.valid = check.digest_ok && check.signature_ok;
  return check;
}

Envelope secure(const Envelope& e, const SecurityPolicy& policy,
                const SecureKeys& keys, RandomSource& rng) {
  policy.validate();
  Envelope out = e;
  if (policy.encrypts()) {
    if (!keys.recipient_transport_public) {
      fail(Errc::invalid_key, "no recipient transport key");
    }
    out = apply_encryption(out, policy, *keys.recipient_transport_public, rng);
  }
  if (policy.signs()) {
    const crypto::AsymmetricKeyPair* signer = nullptr;
    if (policy.reuse_transport_key_for_signing) {
      if (!keys.own_transport) {
        fail(Errc::invalid_key, "key reuse needs the own transport keypair");
      }
      signer = &*keys.own_transport;
    } else {
      if (!keys.own_signing) fail(Errc::invalid_key, "no signing key");
      signer = &*keys.own_signing;
    }
    out = apply_signature(out, policy, *signer);
  }
  return out;
}

UnsecureReport unsecure(const Envelope& e, const UnsecureKeys& keys) {
  UnsecureReport rep;

  const auto* sec = find_security(e);
  const xml::Element* signature =
      sec != nullptr ? sec->find_child("Signature") : nullptr;
  const xml::Element* enc_key =
      sec != nullptr ? sec->find_child("EncryptedKey") : nullptr;
  const xml::Element* enc_data = nullptr;
  for (const auto& child : e.body_children) {
    enc_data = find_in_tree(child, [](const xml::Element& el) {
      return xml::local_name(el.name) == "EncryptedData";
    });
    if (enc_data != nullptr) break;
  }

  const bool has_enc = enc_key != nullptr || enc_data != nullptr;
  const bool has_sig = signature != nullptr;
  rep.detected_mode = has_enc ? (has_sig ? SecurityMode::enc_sign : SecurityMode::enc)
                              : (has_sig ? SecurityMode::sign : SecurityMode::plain);

  // Best-effort suite detection for response mirroring.
  if (enc_data != nullptr) {
    try {
      rep.cipher = cipher_from_uri(method_algorithm(*enc_data, Errc::protocol_error));
    } catch (const Error&) {
    }
  }
  if (enc_key != nullptr) {
    try {
      const Bytes wrapped = read_cipher_value(*enc_key, Errc::protocol_error,
                                              Errc::decryption_failure);
      if (wrapped.size() == 128) {
        rep.key_transport = crypto::KeyTransportAlg::rsa15_1024;
      } else if (wrapped.size() == 256) {
        rep.key_transport = crypto::KeyTransportAlg::rsa15_2048;
      }
    } catch (const Error&) {
    }
  }

  using Clock = std::chrono::steady_clock;
  const auto elapsed_us = [](Clock::time_point from) {
    return std::chrono::duration_cast<std::chrono::microseconds>(Clock::now() -
                                                                 from)
        .count();
  };

  Envelope work = e;
  if (has_sig) {
    const auto t0 = Clock::now();
    try {
      SignatureCheck check = verify_envelope(work);
      rep.signature = check.alg;
      bool pin_ok = true;
      if (keys.pinned_peer_signing &&
          !same_public_key(check.signer_key, *keys.pinned_peer_signing)) {
        pin_ok = false;
        rep.failure_detail = "embedded signer key does not match the pinned key";
      }
      rep.signature_valid = check.valid && pin_ok;
      if (!check.valid) rep.failure_detail = "signature verification failed";
    } catch (const Error& err) {
      rep.signature_valid = false;
      rep.failure_detail = err.what();
    }
    rep.t_verify_us = elapsed_us(t0);
    if (!*rep.signature_valid) return rep;  // never decrypt unverified input
    strip_signature(work);
  }

  if (has_enc) {
    const auto t1 = Clock::now();
    if (!keys.own_transport) {
      rep.decryption_ok = false;
      rep.failure_detail = "no transport key available for decryption";
      return rep;
    }
    try {
      work = decrypt_envelope(work, *keys.own_transport);
      rep.decryption_ok = true;
    } catch (const Error& err) {
      rep.decryption_ok = false;
      rep.failure_detail = err.what();
      rep.t_decrypt_us = elapsed_us(t1);
      return rep;
    }
    rep.t_decrypt_us = elapsed_us(t1);
  }

  rep.recovered = std::move(work);
  return rep;
}

}  // namespace mwss::wssec
