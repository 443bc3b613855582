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

#ifndef MWSS_RNG_HPP
#define MWSS_RNG_HPP

#include <cstdint>

#include "mwss/bytes.hpp"

namespace mwss {

class RandomSource {
 public:
  virtual ~RandomSource() = default;
  virtual void fill(std::uint8_t* out, std::size_t len) = 0;

  Bytes bytes(std::size_t len) {
    Bytes b(len);
    if (len > 0) fill(b.data(), len);
    return b;
  }
};

/// OS entropy (/dev/urandom). Safe to share across threads.
class SystemRandom : public RandomSource {
 public:
  void fill(std::uint8_t* out, std::size_t len) override;

  static SystemRandom& instance();
};

/// Seeded splitmix64 stream for reproducible tests and benchmark runs.
/// Not a cryptographic generator; do not share one instance across threads.
class DeterministicRandom : public RandomSource {
 public:
  explicit DeterministicRandom(std::uint64_t seed) : state_(seed) {}

  void fill(std::uint8_t* out, std::size_t len) override;

 private:
  std::uint64_t next();
  std::uint64_t state_;
};

}  // namespace mwss

#endif  // MWSS_RNG_HPP
