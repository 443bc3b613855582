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

#ifndef MWSS_CRYPTO_SHA1_HPP
#define MWSS_CRYPTO_SHA1_HPP

#include <array>
#include <cstdint>

#include "mwss/bytes.hpp"

namespace mwss::crypto {

inline constexpr std::size_t kSha1DigestSize = 20;

using Sha1Digest = std::array<std::uint8_t, kSha1DigestSize>;

/// FIPS 180 SHA-1, incremental interface.
class Sha1 {
 public:
  Sha1() { reset(); }

  void reset();
  void update(ByteView data);
  Sha1Digest finish();

 private:
  void process_block(const std::uint8_t* block);

  std::array<std::uint32_t, 5> state_;
  std::uint64_t total_len_ = 0;
  std::array<std::uint8_t, 64> buffer_;
  std::size_t buffered_ = 0;
};

Sha1Digest sha1(ByteView data);
Bytes sha1_bytes(ByteView data);

Bytes hmac_sha1(ByteView key, ByteView data);

}  // namespace mwss::crypto

#endif  // MWSS_CRYPTO_SHA1_HPP
