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

#ifndef MWSS_BENCH_HPP
#define MWSS_BENCH_HPP

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "mwss/client.hpp"
#include "mwss/wssec.hpp"

namespace mwss::bench {

inline constexpr std::string_view kCsvHeader =
    "mode,cipher,transport,signature,size_kb,rep,request_bytes,response_bytes,"
    "t_build_us,t_encrypt_us,t_sign_us,t_transport_us,t_verify_us,t_decrypt_us,"
    "t_total_us";

/// One cell of the measurement matrix. Modes that do not encrypt leave
/// cipher and transport empty; modes that do not sign leave signature empty.
struct Coordinate {
  wssec::SecurityMode mode = wssec::SecurityMode::plain;
  std::optional<crypto::CipherAlg> cipher;
  std::optional<crypto::KeyTransportAlg> transport;
  std::optional<crypto::SignatureAlg> signature;
  int size_kb = 1;

  wssec::SecurityPolicy policy() const;
  bool operator==(const Coordinate&) const = default;
};

struct BenchRecord {
  Coordinate coord;
  int rep = 1;  // 1-based
  client::InvocationResult result;
};

struct BenchPlan {
  std::vector<wssec::SecurityMode> modes = {
      wssec::SecurityMode::plain, wssec::SecurityMode::enc,
      wssec::SecurityMode::sign, wssec::SecurityMode::enc_sign};
  std::vector<crypto::CipherAlg> ciphers = {crypto::CipherAlg::aes256};
  std::vector<crypto::KeyTransportAlg> transports = {
      crypto::KeyTransportAlg::rsa15_1024};
  std::vector<crypto::SignatureAlg> signatures = {
      crypto::SignatureAlg::rsa_sha1_1024};
  std::vector<int> sizes_kb = {1, 2, 5, 10};
  int reps = 5;
  int warmup = 2;
  std::string csv_path;  // incremental per-record persistence; resume key
  bool deterministic = false;

  void validate() const;  // reps >= 5, sizes in 1..10, non-empty lists
  std::vector<Coordinate> coordinates() const;
};

struct Endpoints {
  std::string host;  // "http://127.0.0.1:9000"
  std::string idp;   // "" when no key provisioning is needed (PLAIN only)
  std::string own_owner = "client";
  std::string host_owner = "host";
};

/// Runs the matrix strictly sequentially. Existing (coordinate, rep) rows in
/// the plan's CSV are kept and skipped; new records append and flush one by
/// one. A coordinate is marked failed after more than reps failed attempts
/// and the matrix moves on; failed coordinates come back in the second list.
struct RunOutcome {
  std::vector<BenchRecord> records;       // loaded + newly measured
  std::vector<Coordinate> failed;
};

RunOutcome run(const BenchPlan& plan, const Endpoints& endpoints);

// CSV round trip ----------------------------------------------------------

std::string csv_row(const BenchRecord& rec);
std::string records_csv(const std::vector<BenchRecord>& records);  // with header
std::vector<BenchRecord> parse_csv(std::string_view text);

// Size table --------------------------------------------------------------

inline constexpr std::array<std::string_view, 4> kSizeRowLabels = {
    "Original message size", "Message size with Signature",
    "Encrypted message size", "Secured message size"};

struct SizeTable {
  std::vector<int> sizes_kb;  // sorted columns
  // rows in kSizeRowLabels order: PLAIN, SIGN, ENC, ENC_SIGN
  std::array<std::vector<std::optional<double>>, 4> cells;
};

SizeTable size_table(const std::vector<BenchRecord>& records);
std::string render_size_table(const SizeTable& table);

// Latency report ----------------------------------------------------------

struct PhaseStats {
  double mean = 0;
  double stddev = 0;  // sample standard deviation; 0 for a single rep
};

struct LatencyCell {
  Coordinate coord;
  int n = 0;
  PhaseStats build, encrypt, sign, transport, verify, decrypt, total;
  PhaseStats processing;  // total minus transport, the latency compared across suites
  bool low_confidence = false;  // fewer than 5 reps
};

struct LatencyReport {
  std::vector<LatencyCell> cells;
  // Mean processing latency at the largest measured size, fastest first.
  std::vector<std::string> cipher_ranking;     // from encrypting modes
  std::vector<std::string> signature_ranking;  // from signing modes
  std::string note;  // scale caveat, fixed text
};

LatencyReport latency_report(const std::vector<BenchRecord>& records);
std::string render_latency_report(const LatencyReport& report);

/// CSV plus the rendered tables; byte-identical for identical record sets.
void export_records(const std::vector<BenchRecord>& records,
                    const std::string& csv_path, const std::string& tables_path);

}  // namespace mwss::bench

#endif  // MWSS_BENCH_HPP
