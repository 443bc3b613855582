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

#ifndef MWSS_CLIENT_HPP
#define MWSS_CLIENT_HPP

#include <cstdint>
#include <optional>
#include <string>

#include "mwss/envelope.hpp"
#include "mwss/wssec.hpp"

namespace mwss::client {

/// One invocation cycle with microsecond phase timings. Phases a mode does
/// not use are zero; parse and bookkeeping overhead lands only in total.
struct InvocationResult {
  GpsFix fix;
  GpsResponse response;
  wssec::SecurityMode mode = wssec::SecurityMode::plain;
  std::size_t request_bytes = 0;
  std::size_t response_bytes = 0;
  std::int64_t t_build_us = 0;
  std::int64_t t_encrypt_us = 0;
  std::int64_t t_sign_us = 0;
  std::int64_t t_transport_us = 0;
  std::int64_t t_verify_us = 0;
  std::int64_t t_decrypt_us = 0;
  std::int64_t t_total_us = 0;
};

struct ClientKeys {
  std::optional<crypto::AsymmetricKeyPair> host_transport_public;
  std::optional<crypto::AsymmetricKeyPair> own_signing;
  std::optional<crypto::AsymmetricKeyPair> own_transport;  // private pair
  std::optional<crypto::AsymmetricKeyPair> pinned_host_signing;
};

/// One blocking request/response cycle against a running host.
/// Throws: network-error (transport), remote-fault (Fault envelope, message
/// carries faultcode and faultstring), security-error (response checks).
InvocationResult invoke(const std::string& endpoint,
                        const wssec::SecurityPolicy& policy, int size_kb,
                        const ClientKeys& keys, RandomSource& rng);

/// Issues a fresh keypair at the identity provider; the full pair comes back
/// to the caller as the registered owner.
crypto::AsymmetricKeyPair issue_key(const std::string& idp_endpoint,
                                    crypto::KeyKind kind, std::size_t bits,
                                    const std::string& owner);

/// Latest public key the identity provider holds for the owner.
crypto::AsymmetricKeyPair fetch_public_key(const std::string& idp_endpoint,
                                           const std::string& owner,
                                           crypto::KeyKind kind,
                                           std::size_t bits);

/// Provisions everything the policy needs: issues the client's own pairs
/// under own_owner and fetches the host's public keys for wrapping and
/// response-signature pinning.
ClientKeys fetch_keys(const std::string& idp_endpoint,
                      const std::string& own_owner,
                      const std::string& host_owner,
                      const wssec::SecurityPolicy& policy);

}  // namespace mwss::client

#endif  // MWSS_CLIENT_HPP
