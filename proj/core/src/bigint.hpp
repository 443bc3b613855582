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

// Thin RAII wrapper over the GMP mpz C API. Build detail of the crypto
// sources; not installed.

#ifndef MWSS_SRC_BIGINT_HPP
#define MWSS_SRC_BIGINT_HPP

#include <gmp.h>

#include <cstddef>
#include <optional>
#include <utility>

#include "mwss/bytes.hpp"
#include "mwss/error.hpp"

namespace mwss::crypto {

class Bigint {
 public:
  Bigint() { mpz_init(v_); }
  Bigint(unsigned long u) { mpz_init_set_ui(v_, u); }  // NOLINT: literals convert
  Bigint(const Bigint& o) { mpz_init_set(v_, o.v_); }
  Bigint(Bigint&& o) noexcept {
    mpz_init(v_);
    mpz_swap(v_, o.v_);
  }
  Bigint& operator=(Bigint o) noexcept {
    mpz_swap(v_, o.v_);
    return *this;
  }
  ~Bigint() { mpz_clear(v_); }

  mpz_ptr raw() { return v_; }
  mpz_srcptr raw() const { return v_; }

  static Bigint from_bytes(ByteView be) {
    Bigint r;
    if (!be.empty()) mpz_import(r.v_, be.size(), 1, 1, 0, 0, be.data());
    return r;
  }

  /// Big-endian octets, left-padded to min_width. Errors if the value
  /// cannot fit a nonzero min_width.
  Bytes to_bytes(std::size_t min_width = 0) const {
    Bytes out;
    if (!zero()) {
      out.resize((bits() + 7) / 8);
      std::size_t written = 0;
      mpz_export(out.data(), &written, 1, 1, 0, 0, v_);
      out.resize(written);
    } else {
      out.push_back(0);
    }
    if (min_width != 0 && out.size() > min_width) {
      fail(Errc::invalid_argument, "integer wider than field");
    }
    if (out.size() < min_width) {
      out.insert(out.begin(), min_width - out.size(), 0);
    }
    return out;
  }

  std::size_t bits() const { return zero() ? 0 : mpz_sizeinbase(v_, 2); }
  bool zero() const { return mpz_cmp_ui(v_, 0) == 0; }
  bool bit(std::size_t i) const { return mpz_tstbit(v_, i) != 0; }
  void set_bit(std::size_t i) { mpz_setbit(v_, i); }
  void trim_bits(std::size_t n) { mpz_fdiv_r_2exp(v_, v_, n); }

  friend Bigint operator+(const Bigint& a, const Bigint& b) {
    Bigint r;
    mpz_add(r.v_, a.v_, b.v_);
    return r;
  }
  friend Bigint operator-(const Bigint& a, const Bigint& b) {
    Bigint r;
    mpz_sub(r.v_, a.v_, b.v_);
    return r;
  }
  friend Bigint operator*(const Bigint& a, const Bigint& b) {
    Bigint r;
    mpz_mul(r.v_, a.v_, b.v_);
    return r;
  }
  friend Bigint operator%(const Bigint& a, const Bigint& b) {
    Bigint r;
    mpz_mod(r.v_, a.v_, b.v_);
    return r;
  }
  friend Bigint operator/(const Bigint& a, const Bigint& b) {
    Bigint r;
    mpz_fdiv_q(r.v_, a.v_, b.v_);
    return r;
  }
  friend bool operator==(const Bigint& a, const Bigint& b) {
    return mpz_cmp(a.v_, b.v_) == 0;
  }
  friend bool operator!=(const Bigint& a, const Bigint& b) { return !(a == b); }
  friend bool operator<(const Bigint& a, const Bigint& b) {
    return mpz_cmp(a.v_, b.v_) < 0;
  }
  friend bool operator>=(const Bigint& a, const Bigint& b) { return !(a < b); }

  static Bigint powm(const Bigint& base, const Bigint& exp, const Bigint& mod) {
    Bigint r;
    mpz_powm(r.v_, base.v_, exp.v_, mod.v_);
    return r;
  }

  static std::optional<Bigint> invert(const Bigint& a, const Bigint& m) {
    Bigint r;
    if (mpz_invert(r.v_, a.v_, m.v_) == 0) return std::nullopt;
    return r;
  }

  static Bigint lcm(const Bigint& a, const Bigint& b) {
    Bigint r;
    mpz_lcm(r.v_, a.v_, b.v_);
    return r;
  }

  static Bigint next_prime(const Bigint& a) {
    Bigint r;
    mpz_nextprime(r.v_, a.v_);
    return r;
  }

  bool probably_prime(int reps = 30) const {
    return mpz_probab_prime_p(v_, reps) != 0;
  }

 private:
  mpz_t v_;
};

}  // namespace mwss::crypto

#endif  // MWSS_SRC_BIGINT_HPP
