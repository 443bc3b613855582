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

#ifndef MWSS_IDP_HPP
#define MWSS_IDP_HPP

#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "mwss/crypto/keys.hpp"
#include "mwss/rng.hpp"
#include "mwss/xml.hpp"

namespace mwss::idp {

struct KeyRecord {
  std::string key_id;
  std::string owner;
  std::string created_at;  // ISO 8601 UTC
  crypto::AsymmetricKeyPair pair;
};

xml::Element key_record_element(const KeyRecord& rec, bool include_private);
KeyRecord key_record_from_element(const xml::Element& el);

/// Key registry with an optional append-only file behind it. One serialized
/// KeyRecord per line; new issues are appended and flushed immediately, so a
/// restarted service sees every previously issued key. Safe for concurrent
/// use; writes are serialized, reads copy under the same lock.
class KeyStore {
 public:
  KeyStore() = default;
  explicit KeyStore(std::string path);  // loads existing records

  KeyRecord issue(crypto::KeyKind kind, std::size_t bits, const std::string& owner,
                  RandomSource& rng);

  /// Latest record for the owner, optionally narrowed by kind and bits.
  std::optional<KeyRecord> find(const std::string& owner,
                                std::optional<crypto::KeyKind> kind = {},
                                std::optional<std::size_t> bits = {}) const;

  std::size_t size() const;

 private:
  mutable std::mutex mu_;
  std::vector<KeyRecord> records_;
  std::string path_;
  std::uint64_t next_id_ = 1;
};

/// HTTP front end for a KeyStore:
///   POST /keys                  XML KeyRequest -> 201 KeyRecord (with private half)
///   GET  /keys/public/{owner}   -> 200 public key element; ?kind=&bits= narrow
///   GET  /healthz               -> 200
class Service {
 public:
  /// The store and rng must outlive the service.
  Service(KeyStore& store, RandomSource& rng);
  ~Service();

  Service(const Service&) = delete;
  Service& operator=(const Service&) = delete;

  /// Binds and serves on a background thread. Port 0 picks a free port.
  /// Returns false when the bind fails.
  bool start(const std::string& host, int port);
  void stop();
  int port() const;

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

}  // namespace mwss::idp

#endif  // MWSS_IDP_HPP
