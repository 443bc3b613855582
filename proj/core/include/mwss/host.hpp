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

#ifndef MWSS_HOST_HPP
#define MWSS_HOST_HPP

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "mwss/envelope.hpp"
#include "mwss/wssec.hpp"

namespace mwss::host {

struct HostConfig {
  GpsFix fix;  // defaults to the fixed test coordinates

  // Own private keypairs (decrypt requests, sign responses). Responses
  // under an RSA signature algorithm are signed with the RSA transport
  // pair of the matching size; DSA responses use the DSA pair.
  std::vector<crypto::AsymmetricKeyPair> own_keys;

  // Known peer public keys (response key transport targets).
  std::vector<crypto::AsymmetricKeyPair> peer_keys;

  // When set, request signatures must come from this key.
  std::optional<crypto::AsymmetricKeyPair> pinned_peer_signing;

  // Fallbacks when a key is not in the vectors above: issue own keys and
  // fetch peer public keys from this identity provider.
  std::string idp_endpoint;
  std::string own_owner = "host";
  std::string peer_owner = "client";

  // Serialize request processing through one worker so latency samples
  // are contention-free.
  bool benchmark_serialize = true;

  std::string log_path;  // optional per-request TSV log

  std::optional<std::uint64_t> rng_seed;  // fixed response-security RNG
};

struct HandleResult {
  std::string response_octets;
  int http_status = 200;  // 500 when the body is a Fault
  bool fault = false;
  wssec::SecurityMode mode = wssec::SecurityMode::plain;  // detected from request
  std::int64_t request_id = 0;  // 0 when the request never reached the service
  std::size_t request_bytes = 0;
  std::size_t response_bytes = 0;
  std::int64_t t_unsecure_us = 0;
  std::int64_t t_process_us = 0;
  std::int64_t t_secure_us = 0;
};

/// Request pipeline without the HTTP layer: unsecure, dispatch, mirror the
/// request's security suite onto the response. Faults never carry payload
/// or key material. Thread-safe; processing is serialized when the config
/// asks for it.
class Handler {
 public:
  explicit Handler(HostConfig config);
  ~Handler();

  Handler(const Handler&) = delete;
  Handler& operator=(const Handler&) = delete;

  HandleResult handle(std::string_view request_octets);

  /// Ensures own keypairs exist for every supported suite (RSA 1024/2048,
  /// DSA 1024), issuing through the identity provider when missing. False
  /// when any pair could not be provisioned.
  bool provision_default_keys();

  std::int64_t requests_served() const;

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

/// HTTP front end: POST of a SOAP envelope on any path; 200 with the
/// response envelope or 500 with a Fault envelope.
class Service {
 public:
  explicit Service(HostConfig config);
  ~Service();

  Service(const Service&) = delete;
  Service& operator=(const Service&) = delete;

  bool start(const std::string& host, int port);  // port 0 picks a free port
  void stop();
  int port() const;

  Handler& handler();

  /// Highest number of requests that were ever in flight at once.
  int max_in_flight() const;

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

}  // namespace mwss::host

#endif  // MWSS_HOST_HPP
