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

#ifndef MWSS_BYTES_HPP
#define MWSS_BYTES_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace mwss {

using Bytes = std::vector<std::uint8_t>;
using ByteView = std::span<const std::uint8_t>;

std::string to_hex(ByteView data);
std::optional<Bytes> from_hex(std::string_view hex);

// Unchunked base64 (no line breaks), standard alphabet with '=' padding.
std::string base64_encode(ByteView data);
std::optional<Bytes> base64_decode(std::string_view text);

inline Bytes to_bytes(std::string_view s) { return Bytes(s.begin(), s.end()); }
inline std::string to_string(ByteView b) { return std::string(b.begin(), b.end()); }

// Constant-time equality for secrets and MAC-like comparisons.
bool equal_ct(ByteView a, ByteView b);

}  // namespace mwss

#endif  // MWSS_BYTES_HPP
