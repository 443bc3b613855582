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

#ifndef MWSS_ERROR_HPP
#define MWSS_ERROR_HPP

#include <stdexcept>
#include <string>

namespace mwss {

enum class Errc {
  invalid_argument,
  parse_error,
  protocol_error,
  serialization_error,
  invalid_key,
  unsupported_algorithm,
  decryption_failure,
  malformed_ciphertext,
  key_unwrap_failure,
  scope_error,
  reference_error,
  malformed_plaintext,
  no_signature,
  malformed_signature,
  unknown_service,
  not_found,
  network_error,
  remote_fault,
  security_error,
  io_error,
};

const char* errc_name(Errc c);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

  Errc code() const { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what) { throw Error(code, what); }

}  // namespace mwss

#endif  // MWSS_ERROR_HPP
