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

#include "mwss/error.hpp"

namespace mwss {

const char* errc_name(Errc c) {
  switch (c) {
    case Errc::invalid_argument: return "invalid-argument";
    case Errc::parse_error: return "parse-error";
    case Errc::protocol_error: return "protocol-error";
    case Errc::serialization_error: return "serialization-error";
    case Errc::invalid_key: return "invalid-key";
    case Errc::unsupported_algorithm: return "unsupported-algorithm";
    case Errc::decryption_failure: return "decryption-failure";
    case Errc::malformed_ciphertext: return "malformed-ciphertext";
    case Errc::key_unwrap_failure: return "key-unwrap-failure";
    case Errc::scope_error: return "scope-error";
    case Errc::reference_error: return "reference-error";
    case Errc::malformed_plaintext: return "malformed-plaintext";
    case Errc::no_signature: return "no-signature";
    case Errc::malformed_signature: return "malformed-signature";
    case Errc::unknown_service: return "unknown-service";
    case Errc::not_found: return "not-found";
    case Errc::network_error: return "network-error";
    case Errc::remote_fault: return "remote-fault";
    case Errc::security_error: return "security-error";
    case Errc::io_error: return "io-error";
  }
  return "error";
}

}  // namespace mwss
