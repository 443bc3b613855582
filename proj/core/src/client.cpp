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

#include "mwss/client.hpp"

#include <chrono>

#include <httplib.h>

#include "mwss/error.hpp"
#include "mwss/idp.hpp"

namespace mwss::client {
namespace {

using Clock = std::chrono::steady_clock;

std::int64_t us_between(Clock::time_point a, Clock::time_point b) {
  return std::chrono::duration_cast<std::chrono::microseconds>(b - a).count();
}

std::string fault_message(const Envelope& e) {
  std::string code;
  if (const xml::Element* fc = e.body_children[0].find_child("faultcode")) {
    code = fc->text_content();
  }
  std::string text = fault_string(e);
  if (code.empty()) return text;
  return code + ": " + text;
}

}  // namespace

InvocationResult invoke(const std::string& endpoint,
                        const wssec::SecurityPolicy& policy, int size_kb,
                        const ClientKeys& keys, RandomSource& rng) {
  policy.validate();
  InvocationResult r;
  r.mode = policy.mode;

  const auto t0 = Clock::now();
  Envelope request = build_gps_request(size_kb);
  const auto t_built = Clock::now();
  r.t_build_us = us_between(t0, t_built);

  wssec::SecureKeys secure_keys;
  secure_keys.recipient_transport_public = keys.host_transport_public;
  secure_keys.own_signing = keys.own_signing;
  secure_keys.own_transport = keys.own_transport;

  auto phase_end = t_built;
  if (policy.encrypts()) {
    if (!secure_keys.recipient_transport_public) {
      fail(Errc::invalid_key, "no host transport key for encryption");
    }
    request = wssec::apply_encryption(request, policy,
                                      *secure_keys.recipient_transport_public, rng);
    const auto t = Clock::now();
    r.t_encrypt_us = us_between(phase_end, t);
    phase_end = t;
  }
  if (policy.signs()) {
    const crypto::AsymmetricKeyPair* signer = nullptr;
    if (policy.reuse_transport_key_for_signing) {
      if (!secure_keys.own_transport) {
        fail(Errc::invalid_key, "key reuse needs the own transport keypair");
      }
      signer = &*secure_keys.own_transport;
    } else {
      if (!secure_keys.own_signing) fail(Errc::invalid_key, "no signing key");
      signer = &*secure_keys.own_signing;
    }
    request = wssec::apply_signature(request, policy, *signer);
    const auto t = Clock::now();
    r.t_sign_us = us_between(phase_end, t);
    phase_end = t;
  }

  // Serialization is part of the last producing phase.
  const std::string request_octets = serialize(request);
  {
    const auto t = Clock::now();
    const std::int64_t us = us_between(phase_end, t);
    if (policy.signs()) {
      r.t_sign_us += us;
    } else if (policy.encrypts()) {
      r.t_encrypt_us += us;
    } else {
      r.t_build_us += us;
    }
    phase_end = t;
  }
  r.request_bytes = request_octets.size();

  httplib::Client http(endpoint);
  const auto t_send = Clock::now();
  httplib::Result res = http.Post("/", request_octets, "text/xml");
  const auto t_recv = Clock::now();
  r.t_transport_us = us_between(t_send, t_recv);
  if (!res) {
    fail(Errc::network_error,
         "request to " + endpoint + " failed: " + httplib::to_string(res.error()));
  }
  r.response_bytes = res->body.size();

  Envelope response;
  try {
    response = parse(res->body);
  } catch (const Error&) {
    fail(Errc::protocol_error, "response does not parse as a SOAP envelope");
  }
  if (is_fault(response)) {
    fail(Errc::remote_fault, fault_message(response));
  }
  if (res->status != 200) {
    fail(Errc::network_error, "unexpected HTTP status " + std::to_string(res->status));
  }

  wssec::UnsecureKeys unsecure_keys;
  unsecure_keys.own_transport = keys.own_transport;
  unsecure_keys.pinned_peer_signing = keys.pinned_host_signing;
  wssec::UnsecureReport rep = wssec::unsecure(response, unsecure_keys);
  r.t_verify_us = rep.t_verify_us;
  r.t_decrypt_us = rep.t_decrypt_us;
  if (!rep.ok()) {
    fail(Errc::security_error, "response failed security checks: " + rep.failure_detail);
  }
  if (rep.detected_mode != policy.mode) {
    fail(Errc::security_error, "response security mode does not mirror the request");
  }

  try {
    r.response = read_gps_response(*rep.recovered);
  } catch (const Error&) {
    fail(Errc::protocol_error, "response payload is not a GPS fix");
  }
  r.fix = r.response.fix;
  r.t_total_us = us_between(t0, Clock::now());
  return r;
}

crypto::AsymmetricKeyPair issue_key(const std::string& idp_endpoint,
                                    crypto::KeyKind kind, std::size_t bits,
                                    const std::string& owner) {
  httplib::Client http(idp_endpoint);
  xml::Element req("KeyRequest");
  req.add_child(xml::Element("kind").add_text(std::string(crypto::key_kind_name(kind))));
  req.add_child(xml::Element("bits").add_text(std::to_string(bits)));
  req.add_child(xml::Element("owner").add_text(owner));
  auto res = http.Post("/keys", xml::serialize_element(req), "text/xml");
  if (!res) {
    fail(Errc::network_error, "identity provider unreachable: " + idp_endpoint);
  }
  if (res->status != 201) {
    fail(Errc::remote_fault,
         "key issuance failed with HTTP status " + std::to_string(res->status));
  }
  try {
    return idp::key_record_from_element(xml::parse_element(res->body)).pair;
  } catch (const Error&) {
    fail(Errc::protocol_error, "identity provider returned a malformed KeyRecord");
  }
}

crypto::AsymmetricKeyPair fetch_public_key(const std::string& idp_endpoint,
                                           const std::string& owner,
                                           crypto::KeyKind kind,
                                           std::size_t bits) {
  httplib::Client http(idp_endpoint);
  auto res = http.Get("/keys/public/" + owner +
                      "?kind=" + std::string(crypto::key_kind_name(kind)) +
                      "&bits=" + std::to_string(bits));
  if (!res) {
    fail(Errc::network_error, "identity provider unreachable: " + idp_endpoint);
  }
  if (res->status == 404) {
    fail(Errc::not_found, "identity provider has no key for owner " + owner);
  }
  if (res->status != 200) {
    fail(Errc::remote_fault,
         "key lookup failed with HTTP status " + std::to_string(res->status));
  }
  try {
    crypto::AsymmetricKeyPair pair =
        crypto::key_from_value_element(xml::parse_element(res->body));
    pair.owner = owner;
    return pair;
  } catch (const Error&) {
    fail(Errc::protocol_error, "identity provider returned a malformed key");
  }
}

ClientKeys fetch_keys(const std::string& idp_endpoint,
                      const std::string& own_owner,
                      const std::string& host_owner,
                      const wssec::SecurityPolicy& policy) {
  policy.validate();
  ClientKeys keys;
  // The directory answers lookups with the newest record for (owner, kind,
  // bits), and the host looks our transport key up to wrap its response.
  // Issue the signing pair first so the transport pair stays the newest
  // match even when both are RSA of the same size.
  if (policy.signs()) {
    const bool rsa = crypto::signature_is_rsa(*policy.signature);
    const std::size_t bits = crypto::signature_bits(*policy.signature);
    if (policy.reuse_transport_key_for_signing) {
      // own_transport doubles as the signer; nothing extra to issue.
    } else {
      keys.own_signing =
          issue_key(idp_endpoint, rsa ? crypto::KeyKind::rsa : crypto::KeyKind::dsa,
                    bits, own_owner);
    }
    keys.pinned_host_signing = fetch_public_key(
        idp_endpoint, host_owner, rsa ? crypto::KeyKind::rsa : crypto::KeyKind::dsa,
        bits);
  }
  if (policy.encrypts()) {
    const std::size_t bits = crypto::modulus_bits(*policy.key_transport);
    keys.own_transport =
        issue_key(idp_endpoint, crypto::KeyKind::rsa, bits, own_owner);
    keys.host_transport_public =
        fetch_public_key(idp_endpoint, host_owner, crypto::KeyKind::rsa, bits);
  }
  return keys;
}

}  // namespace mwss::client
