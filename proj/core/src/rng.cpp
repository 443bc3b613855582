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

#include "mwss/rng.hpp"

#include <cstdio>

#include "mwss/error.hpp"

namespace mwss {

void SystemRandom::fill(std::uint8_t* out, std::size_t len) {
  static thread_local std::FILE* urandom = std::fopen("/dev/urandom", "rb");
  if (urandom == nullptr) fail(Errc::io_error, "cannot open /dev/urandom");
  if (std::fread(out, 1, len, urandom) != len) {
    fail(Errc::io_error, "short read from /dev/urandom");
  }
}

SystemRandom& SystemRandom::instance() {
  static SystemRandom rng;
  return rng;
}

std::uint64_t DeterministicRandom::next() {
  state_ += 0x9E3779B97F4A7C15ULL;
  std::uint64_t z = state_;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

void DeterministicRandom::fill(std::uint8_t* out, std::size_t len) {
  std::size_t i = 0;
  while (i < len) {
    std::uint64_t v = next();
    for (int j = 0; j < 8 && i < len; ++j, ++i) {
      out[i] = static_cast<std::uint8_t>(v >> (8 * j));
    }
  }
}

}  // namespace mwss
