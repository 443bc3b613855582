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

#include "doctest.h"

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <map>
#include <set>
#include <string>

#include "mwss/bench.hpp"
#include "mwss/error.hpp"
#include "mwss/host.hpp"
#include "mwss/idp.hpp"
#include "mwss/rng.hpp"

using namespace mwss;
using namespace mwss::bench;

namespace {

BenchRecord make_record(wssec::SecurityMode mode, int size_kb, int rep,
                        std::int64_t total_us, std::int64_t transport_us,
                        std::size_t response_bytes) {
  BenchRecord rec;
  rec.coord.mode = mode;
  if (mode == wssec::SecurityMode::enc || mode == wssec::SecurityMode::enc_sign) {
    rec.coord.cipher = crypto::CipherAlg::aes256;
    rec.coord.transport = crypto::KeyTransportAlg::rsa15_1024;
  }
  if (mode == wssec::SecurityMode::sign || mode == wssec::SecurityMode::enc_sign) {
    rec.coord.signature = crypto::SignatureAlg::rsa_sha1_1024;
  }
  rec.coord.size_kb = size_kb;
  rec.rep = rep;
  rec.result.mode = mode;
  rec.result.request_bytes = response_bytes + 7;
  rec.result.response_bytes = response_bytes;
  rec.result.t_total_us = total_us;
  rec.result.t_transport_us = transport_us;
  rec.result.t_build_us = 3;
  return rec;
}

std::string temp_path(const std::string& name) {
  return (std::filesystem::temp_directory_path() / name).string();
}

}  // namespace

TEST_CASE("coordinates expand the plan cross product") {
  BenchPlan plan;
  const std::vector<Coordinate> coords = plan.coordinates();
  CHECK(coords.size() == 16);  // 4 modes x 1 suite x 4 sizes

  for (const Coordinate& c : coords) {
    const bool enc = c.mode == wssec::SecurityMode::enc ||
                     c.mode == wssec::SecurityMode::enc_sign;
    const bool sig = c.mode == wssec::SecurityMode::sign ||
                     c.mode == wssec::SecurityMode::enc_sign;
    CHECK(c.cipher.has_value() == enc);
    CHECK(c.transport.has_value() == enc);
    CHECK(c.signature.has_value() == sig);

    const wssec::SecurityPolicy policy = c.policy();
    CHECK(policy.mode == c.mode);
    CHECK(policy.cipher == c.cipher);
    CHECK(policy.key_transport == c.transport);
    CHECK(policy.signature == c.signature);
    CHECK_NOTHROW(policy.validate());
  }

  plan.ciphers = {crypto::CipherAlg::aes128, crypto::CipherAlg::tdes192};
  plan.signatures = {crypto::SignatureAlg::rsa_sha1_1024,
                     crypto::SignatureAlg::dsa_sha1_1024};
  // PLAIN 4 + ENC 2x4 + SIGN 2x4 + ENC_SIGN 2x2x4
  CHECK(plan.coordinates().size() == 4 + 8 + 8 + 16);
}

TEST_CASE("plans reject unusable parameters") {
  BenchPlan plan;
  CHECK_NOTHROW(plan.validate());

  plan.reps = 4;
  CHECK_THROWS_AS(plan.validate(), Error);
  plan.reps = 5;
  plan.warmup = -1;
  CHECK_THROWS_AS(plan.validate(), Error);
  plan.warmup = 0;
  plan.sizes_kb = {11};
  CHECK_THROWS_AS(plan.validate(), Error);
  plan.sizes_kb = {};
  CHECK_THROWS_AS(plan.validate(), Error);
  plan.sizes_kb = {1};
  plan.modes = {};
  CHECK_THROWS_AS(plan.validate(), Error);
  plan.modes = {wssec::SecurityMode::enc};
  plan.ciphers = {};
  CHECK_THROWS_AS(plan.validate(), Error);
}

TEST_CASE("csv rows round trip") {
  std::vector<BenchRecord> records;
  records.push_back(make_record(wssec::SecurityMode::plain, 1, 1, 900, 200, 1024));
  records.push_back(make_record(wssec::SecurityMode::enc, 2, 2, 1800, 250, 3466));
  BenchRecord full = make_record(wssec::SecurityMode::enc_sign, 10, 3, 9000, 400,
                                 15243);
  full.coord.cipher = crypto::CipherAlg::idea128;
  full.coord.transport = crypto::KeyTransportAlg::rsa15_2048;
  full.coord.signature = crypto::SignatureAlg::dsa_sha1_1024;
  full.result.t_encrypt_us = 11;
  full.result.t_sign_us = 22;
  full.result.t_verify_us = 33;
  full.result.t_decrypt_us = 44;
  records.push_back(full);

  const std::string csv = records_csv(records);
  CHECK(csv.substr(0, csv.find('\n')) == std::string(kCsvHeader));

  const std::vector<BenchRecord> back = parse_csv(csv);
  REQUIRE(back.size() == records.size());
  for (std::size_t i = 0; i < records.size(); ++i) {
    CAPTURE(i);
    CHECK(back[i].coord == records[i].coord);
    CHECK(back[i].rep == records[i].rep);
    CHECK(back[i].result.request_bytes == records[i].result.request_bytes);
    CHECK(back[i].result.response_bytes == records[i].result.response_bytes);
    CHECK(back[i].result.t_build_us == records[i].result.t_build_us);
    CHECK(back[i].result.t_encrypt_us == records[i].result.t_encrypt_us);
    CHECK(back[i].result.t_sign_us == records[i].result.t_sign_us);
    CHECK(back[i].result.t_transport_us == records[i].result.t_transport_us);
    CHECK(back[i].result.t_verify_us == records[i].result.t_verify_us);
    CHECK(back[i].result.t_decrypt_us == records[i].result.t_decrypt_us);
    CHECK(back[i].result.t_total_us == records[i].result.t_total_us);
  }

  CHECK_THROWS_AS(parse_csv("not,the,header\n"), Error);
  CHECK_THROWS_AS(parse_csv(std::string(kCsvHeader) + "\nPLAIN,,,\n"), Error);
}

TEST_CASE("size tables use the canonical row labels") {
  std::vector<BenchRecord> records;
  // Two reps per cell to prove cells hold means.
  for (int rep = 1; rep <= 2; ++rep) {
    records.push_back(make_record(wssec::SecurityMode::plain, 1, rep, 100, 10,
                                  rep == 1 ? 1000 : 1100));
    records.push_back(
        make_record(wssec::SecurityMode::enc, 1, rep, 100, 10, 2102));
    records.push_back(
        make_record(wssec::SecurityMode::sign, 1, rep, 100, 10, 1946));
    records.push_back(
        make_record(wssec::SecurityMode::enc_sign, 1, rep, 100, 10, 2955));
    records.push_back(
        make_record(wssec::SecurityMode::plain, 2, rep, 100, 10, 2048));
  }

  const SizeTable table = size_table(records);
  CHECK(table.sizes_kb == std::vector<int>{1, 2});
  REQUIRE(table.cells[0].size() == 2);
  CHECK(*table.cells[0][0] == doctest::Approx(1050));  // PLAIN mean
  CHECK(*table.cells[1][0] == doctest::Approx(1946));  // SIGN
  CHECK(*table.cells[2][0] == doctest::Approx(2102));  // ENC
  CHECK(*table.cells[3][0] == doctest::Approx(2955));  // ENC_SIGN
  CHECK(*table.cells[0][1] == doctest::Approx(2048));
  CHECK_FALSE(table.cells[2][1].has_value());  // no ENC records at 2 KB

  const std::string rendered = render_size_table(table);
  CHECK(rendered.find("Message size variations (in bytes) with security") == 0);
  for (const std::string_view label : kSizeRowLabels) {
    CHECK(rendered.find(label) != std::string::npos);
  }
  CHECK(rendered.find("\t1 KB\t2 KB") != std::string::npos);
}

TEST_CASE("latency stats aggregate mean and sample stddev") {
  std::vector<BenchRecord> records;
  for (int rep = 1; rep <= 5; ++rep) {
    records.push_back(make_record(wssec::SecurityMode::enc, 10, rep,
                                  100 + 10 * (rep - 1), 40, 14390));
  }
  const LatencyReport report = latency_report(records);
  REQUIRE(report.cells.size() == 1);
  const LatencyCell& cell = report.cells[0];
  CHECK(cell.n == 5);
  CHECK_FALSE(cell.low_confidence);
  CHECK(cell.total.mean == doctest::Approx(120.0));
  CHECK(cell.total.stddev == doctest::Approx(std::sqrt(250.0)));
  CHECK(cell.transport.mean == doctest::Approx(40.0));
  CHECK(cell.transport.stddev == doctest::Approx(0.0));
  CHECK(cell.processing.mean == doctest::Approx(80.0));
  CHECK(cell.processing.stddev == doctest::Approx(std::sqrt(250.0)));

  // A single rep is flagged and gets no spread.
  const LatencyReport one = latency_report(
      {make_record(wssec::SecurityMode::plain, 1, 1, 100, 10, 1024)});
  REQUIRE(one.cells.size() == 1);
  CHECK(one.cells[0].low_confidence);
  CHECK(one.cells[0].total.stddev == doctest::Approx(0.0));

  const std::string rendered = render_latency_report(report);
  CHECK(rendered.find("Processing latency per coordinate (microseconds, "
                      "mean +/- sample stddev)") == 0);
  CHECK(report.note.find("desk-scale") != std::string::npos);
}

TEST_CASE("rankings order suites by processing latency at the largest size") {
  std::vector<BenchRecord> records;
  for (int rep = 1; rep <= 5; ++rep) {
    // AES-256 faster than 3DES-192 at 10 KB.
    BenchRecord fast =
        make_record(wssec::SecurityMode::enc, 10, rep, 2000, 100, 14390);
    records.push_back(fast);
    BenchRecord slow = fast;
    slow.coord.cipher = crypto::CipherAlg::tdes192;
    slow.result.t_total_us = 9900;
    records.push_back(slow);
    // DSA slower than RSA for signing here.
    BenchRecord rsa =
        make_record(wssec::SecurityMode::sign, 10, rep, 1500, 100, 11162);
    records.push_back(rsa);
    BenchRecord dsa = rsa;
    dsa.coord.signature = crypto::SignatureAlg::dsa_sha1_1024;
    dsa.result.t_total_us = 4500;
    records.push_back(dsa);
    // Small-size cells must not contaminate the ranking.
    BenchRecord small =
        make_record(wssec::SecurityMode::enc, 1, rep, 50000, 100, 2102);
    records.push_back(small);
  }

  const LatencyReport report = latency_report(records);
  REQUIRE(report.cipher_ranking.size() == 2);
  CHECK(report.cipher_ranking[0] == "AES-256");
  CHECK(report.cipher_ranking[1] == "3DES-192");
  REQUIRE(report.signature_ranking.size() == 2);
  CHECK(report.signature_ranking[0] == "RSA-SHA1-1024");
  CHECK(report.signature_ranking[1] == "DSA-SHA1-1024");

  const std::string rendered = render_latency_report(report);
  CHECK(rendered.find("Cipher ranking (fastest first): AES-256, 3DES-192") !=
        std::string::npos);
  CHECK(rendered.find("Signature ranking (fastest first): RSA-SHA1-1024, "
                      "DSA-SHA1-1024") != std::string::npos);
}

TEST_CASE("exports write both artifacts") {
  const std::string csv_path = temp_path("mwss_bench_test.csv");
  const std::string tables_path = temp_path("mwss_bench_test.txt");
  std::remove(csv_path.c_str());
  std::remove(tables_path.c_str());

  std::vector<BenchRecord> records = {
      make_record(wssec::SecurityMode::plain, 1, 1, 100, 10, 1024)};
  export_records(records, csv_path, tables_path);

  std::ifstream csv(csv_path);
  std::string line;
  REQUIRE(std::getline(csv, line));
  CHECK(line == std::string(kCsvHeader));
  std::ifstream tables(tables_path);
  std::string tables_text((std::istreambuf_iterator<char>(tables)),
                          std::istreambuf_iterator<char>());
  CHECK(tables_text.find("Original message size") != std::string::npos);
  CHECK(tables_text.find("Processing latency") != std::string::npos);

  CHECK_THROWS_AS(export_records({}, csv_path, tables_path), Error);
  std::remove(csv_path.c_str());
  std::remove(tables_path.c_str());
}

TEST_CASE("a plan runs against live services and resumes from its csv") {
  idp::KeyStore store;
  idp::Service idp_svc(store, SystemRandom::instance());
  REQUIRE(idp_svc.start("127.0.0.1", 0));

  const std::string idp_endpoint =
      "http://127.0.0.1:" + std::to_string(idp_svc.port());
  host::HostConfig config;
  config.idp_endpoint = idp_endpoint;
  host::Service host_svc(std::move(config));
  REQUIRE(host_svc.start("127.0.0.1", 0));
  REQUIRE(host_svc.handler().provision_default_keys());

  Endpoints endpoints;
  endpoints.host = "http://127.0.0.1:" + std::to_string(host_svc.port());
  endpoints.idp = idp_endpoint;

  BenchPlan plan;
  plan.modes = {wssec::SecurityMode::plain, wssec::SecurityMode::enc_sign};
  plan.sizes_kb = {1, 2};
  plan.reps = 5;
  plan.warmup = 1;
  plan.deterministic = true;
  plan.csv_path = temp_path("mwss_bench_run.csv");
  std::remove(plan.csv_path.c_str());

  const RunOutcome first = run(plan, endpoints);
  CHECK(first.failed.empty());
  CHECK(first.records.size() == plan.coordinates().size() * 5);
  // The response carries the sized payload; PLAIN responses land exactly on
  // the requested byte count and secured ones exceed it.
  for (const BenchRecord& rec : first.records) {
    if (rec.coord.mode == wssec::SecurityMode::plain) {
      CHECK(rec.result.response_bytes ==
            static_cast<std::size_t>(1024 * rec.coord.size_kb));
    } else {
      CHECK(rec.result.response_bytes >
            static_cast<std::size_t>(1024 * rec.coord.size_kb));
    }
    CHECK(rec.result.request_bytes > 0);
  }

  // Secured sizes are rep-invariant, which the resume logic relies on.
  std::map<std::string, std::set<std::size_t>> sizes_by_coord;
  for (const BenchRecord& rec : first.records) {
    BenchRecord key;
    key.coord = rec.coord;
    sizes_by_coord[csv_row(key)].insert(rec.result.response_bytes);
  }
  for (const auto& [coord, sizes] : sizes_by_coord) {
    CHECK(sizes.size() == 1);
  }

  // A second run over the same csv measures nothing new.
  std::ifstream csv_before(plan.csv_path);
  const std::string before((std::istreambuf_iterator<char>(csv_before)),
                           std::istreambuf_iterator<char>());
  csv_before.close();
  const RunOutcome second = run(plan, endpoints);
  CHECK(second.records.size() == first.records.size());
  std::ifstream csv_after(plan.csv_path);
  const std::string after((std::istreambuf_iterator<char>(csv_after)),
                          std::istreambuf_iterator<char>());
  CHECK(after == before);

  std::remove(plan.csv_path.c_str());
  host_svc.stop();
  idp_svc.stop();
}

TEST_CASE("unreachable endpoints mark coordinates failed") {
  BenchPlan plan;
  plan.modes = {wssec::SecurityMode::plain};
  plan.sizes_kb = {1};
  plan.reps = 5;
  plan.warmup = 0;

  Endpoints endpoints;
  endpoints.host = "http://127.0.0.1:9";

  const RunOutcome outcome = run(plan, endpoints);
  CHECK(outcome.records.empty());
  REQUIRE(outcome.failed.size() == 1);
  CHECK(outcome.failed[0].mode == wssec::SecurityMode::plain);
  CHECK(outcome.failed[0].size_kb == 1);
}
