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

#include <benchmark/benchmark.h>

#include "mwss/crypto/block_cipher.hpp"
#include "mwss/crypto/keys.hpp"
#include "mwss/crypto/sha1.hpp"
#include "mwss/rng.hpp"

namespace {

using namespace mwss;

Bytes fixed_payload(std::size_t len) {
  DeterministicRandom rng(42);
  return rng.bytes(len);
}

void BM_CbcEncrypt(benchmark::State& state, crypto::CipherAlg alg) {
  DeterministicRandom rng(1);
  crypto::SymmetricKey key = crypto::gen_symmetric_key(alg, rng);
  const Bytes iv = rng.bytes(crypto::block_size(alg));
  const Bytes payload = fixed_payload(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(crypto::encrypt_cbc(key, iv, payload));
  }
  state.SetBytesProcessed(static_cast<std::int64_t>(state.iterations()) *
                          static_cast<std::int64_t>(payload.size()));
}

void BM_CbcDecrypt(benchmark::State& state, crypto::CipherAlg alg) {
  DeterministicRandom rng(1);
  crypto::SymmetricKey key = crypto::gen_symmetric_key(alg, rng);
  const Bytes iv = rng.bytes(crypto::block_size(alg));
  const Bytes ct = crypto::encrypt_cbc(
      key, iv, fixed_payload(static_cast<std::size_t>(state.range(0))));
  for (auto _ : state) {
    benchmark::DoNotOptimize(crypto::decrypt_cbc(key, iv, ct));
  }
  state.SetBytesProcessed(static_cast<std::int64_t>(state.iterations()) *
                          static_cast<std::int64_t>(ct.size()));
}

void BM_Sha1(benchmark::State& state) {
  const Bytes payload = fixed_payload(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(crypto::sha1(payload));
  }
  state.SetBytesProcessed(static_cast<std::int64_t>(state.iterations()) *
                          static_cast<std::int64_t>(payload.size()));
}

const crypto::AsymmetricKeyPair& rsa1024() {
  static const auto pair = [] {
    DeterministicRandom rng(7);
    return crypto::generate_keypair(crypto::KeyKind::rsa, 1024, "bench", "1", rng);
  }();
  return pair;
}

const crypto::AsymmetricKeyPair& dsa1024() {
  static const auto pair = [] {
    DeterministicRandom rng(8);
    return crypto::generate_keypair(crypto::KeyKind::dsa, 1024, "bench", "2", rng);
  }();
  return pair;
}

void BM_RsaWrap(benchmark::State& state) {
  DeterministicRandom rng(2);
  crypto::SymmetricKey key = crypto::gen_symmetric_key(crypto::CipherAlg::aes256, rng);
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        crypto::wrap_key(crypto::KeyTransportAlg::rsa15_1024, rsa1024(), key, rng));
  }
}

void BM_RsaUnwrap(benchmark::State& state) {
  DeterministicRandom rng(2);
  crypto::SymmetricKey key = crypto::gen_symmetric_key(crypto::CipherAlg::aes256, rng);
  const Bytes wrapped =
      crypto::wrap_key(crypto::KeyTransportAlg::rsa15_1024, rsa1024(), key, rng);
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        crypto::unwrap_key(rsa1024(), wrapped, crypto::CipherAlg::aes256));
  }
}

void BM_Sign(benchmark::State& state, crypto::SignatureAlg alg) {
  const Bytes msg = fixed_payload(1024);
  const auto& pair =
      crypto::signature_is_rsa(alg) ? rsa1024() : dsa1024();
  for (auto _ : state) {
    benchmark::DoNotOptimize(crypto::sign(alg, pair, msg));
  }
}

void BM_Verify(benchmark::State& state, crypto::SignatureAlg alg) {
  const Bytes msg = fixed_payload(1024);
  const auto& pair =
      crypto::signature_is_rsa(alg) ? rsa1024() : dsa1024();
  const Bytes sig = crypto::sign(alg, pair, msg);
  for (auto _ : state) {
    benchmark::DoNotOptimize(crypto::verify(alg, pair, msg, sig));
  }
}

BENCHMARK_CAPTURE(BM_CbcEncrypt, des64, crypto::CipherAlg::des64)->Arg(4096);
BENCHMARK_CAPTURE(BM_CbcEncrypt, tdes192, crypto::CipherAlg::tdes192)->Arg(4096);
BENCHMARK_CAPTURE(BM_CbcEncrypt, idea128, crypto::CipherAlg::idea128)->Arg(4096);
BENCHMARK_CAPTURE(BM_CbcEncrypt, aes128, crypto::CipherAlg::aes128)->Arg(4096);
BENCHMARK_CAPTURE(BM_CbcEncrypt, aes192, crypto::CipherAlg::aes192)->Arg(4096);
BENCHMARK_CAPTURE(BM_CbcEncrypt, aes256, crypto::CipherAlg::aes256)->Arg(4096);
BENCHMARK_CAPTURE(BM_CbcDecrypt, tdes192, crypto::CipherAlg::tdes192)->Arg(4096);
BENCHMARK_CAPTURE(BM_CbcDecrypt, aes256, crypto::CipherAlg::aes256)->Arg(4096);
BENCHMARK(BM_Sha1)->Arg(4096);
BENCHMARK(BM_RsaWrap);
BENCHMARK(BM_RsaUnwrap);
BENCHMARK_CAPTURE(BM_Sign, rsa_sha1_1024, crypto::SignatureAlg::rsa_sha1_1024);
BENCHMARK_CAPTURE(BM_Sign, dsa_sha1_1024, crypto::SignatureAlg::dsa_sha1_1024);
BENCHMARK_CAPTURE(BM_Verify, rsa_sha1_1024, crypto::SignatureAlg::rsa_sha1_1024);
BENCHMARK_CAPTURE(BM_Verify, dsa_sha1_1024, crypto::SignatureAlg::dsa_sha1_1024);

}  // namespace

BENCHMARK_MAIN();
