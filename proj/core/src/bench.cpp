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

#include "mwss/bench.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <map>
#include <memory>
#include <set>
#include <sstream>

#include "mwss/error.hpp"

namespace mwss::bench {
namespace {

std::string format_count(double v) {
  char buf[64];
  if (v == std::floor(v)) {
    std::snprintf(buf, sizeof buf, "%.0f", v);
  } else {
    std::snprintf(buf, sizeof buf, "%.1f", v);
  }
  return buf;
}

std::string format_us(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.1f", v);
  return buf;
}

std::string coordinate_fields(const Coordinate& c) {
  std::ostringstream out;
  out << wssec::mode_name(c.mode) << ',';
  if (c.cipher) out << crypto::cipher_name(*c.cipher);
  out << ',';
  if (c.transport) out << crypto::transport_name(*c.transport);
  out << ',';
  if (c.signature) out << crypto::signature_name(*c.signature);
  out << ',' << c.size_kb;
  return out.str();
}

std::string coordinate_label(const Coordinate& c) {
  std::ostringstream out;
  out << wssec::mode_name(c.mode);
  if (c.cipher) out << ' ' << crypto::cipher_name(*c.cipher);
  if (c.transport) out << ' ' << crypto::transport_name(*c.transport);
  if (c.signature) out << ' ' << crypto::signature_name(*c.signature);
  out << ' ' << c.size_kb << "KB";
  return out.str();
}

std::vector<std::string> split_fields(std::string_view line) {
  std::vector<std::string> fields;
  std::size_t start = 0;
  while (true) {
    std::size_t comma = line.find(',', start);
    if (comma == std::string_view::npos) {
      fields.emplace_back(line.substr(start));
      return fields;
    }
    fields.emplace_back(line.substr(start, comma - start));
    start = comma + 1;
  }
}

std::int64_t parse_int(const std::string& text) {
  std::size_t pos = 0;
  std::int64_t v = 0;
  try {
    v = std::stoll(text, &pos);
  } catch (const std::exception&) {
    fail(Errc::parse_error, "CSV field is not a number: " + text);
  }
  if (pos != text.size()) {
    fail(Errc::parse_error, "CSV field is not a number: " + text);
  }
  return v;
}

PhaseStats stats_of(const std::vector<double>& samples) {
  PhaseStats s;
  if (samples.empty()) return s;
  double sum = 0;
  for (double v : samples) sum += v;
  s.mean = sum / static_cast<double>(samples.size());
  if (samples.size() > 1) {
    double acc = 0;
    for (double v : samples) acc += (v - s.mean) * (v - s.mean);
    s.stddev = std::sqrt(acc / static_cast<double>(samples.size() - 1));
  }
  return s;
}

int size_row(wssec::SecurityMode mode) {
  switch (mode) {
    case wssec::SecurityMode::plain: return 0;
    case wssec::SecurityMode::sign: return 1;
    case wssec::SecurityMode::enc: return 2;
    case wssec::SecurityMode::enc_sign: return 3;
  }
  fail(Errc::invalid_argument, "bad mode enum");
}

struct CoordinateOrder {
  bool operator()(const Coordinate& a, const Coordinate& b) const {
    auto key = [](const Coordinate& c) {
      return std::tuple(static_cast<int>(c.mode),
                        c.cipher ? static_cast<int>(*c.cipher) + 1 : 0,
                        c.transport ? static_cast<int>(*c.transport) + 1 : 0,
                        c.signature ? static_cast<int>(*c.signature) + 1 : 0,
                        c.size_kb);
    };
    return key(a) < key(b);
  }
};

}  // namespace

wssec::SecurityPolicy Coordinate::policy() const {
  wssec::SecurityPolicy p;
  p.mode = mode;
  p.cipher = cipher;
  p.key_transport = transport;
  p.signature = signature;
  return p;
}

void BenchPlan::validate() const {
  if (reps < 5) fail(Errc::invalid_argument, "reps must be at least 5");
  if (warmup < 0) fail(Errc::invalid_argument, "warmup must not be negative");
  if (modes.empty()) fail(Errc::invalid_argument, "plan needs at least one mode");
  if (sizes_kb.empty()) fail(Errc::invalid_argument, "plan needs at least one size");
  for (int kb : sizes_kb) {
    if (kb < 1 || kb > 10) {
      fail(Errc::invalid_argument, "sizes must be within 1..10 KB");
    }
  }
  const bool any_enc =
      std::any_of(modes.begin(), modes.end(), [](wssec::SecurityMode m) {
        return m == wssec::SecurityMode::enc || m == wssec::SecurityMode::enc_sign;
      });
  const bool any_sign =
      std::any_of(modes.begin(), modes.end(), [](wssec::SecurityMode m) {
        return m == wssec::SecurityMode::sign || m == wssec::SecurityMode::enc_sign;
      });
  if (any_enc && (ciphers.empty() || transports.empty())) {
    fail(Errc::invalid_argument, "encrypting modes need ciphers and transports");
  }
  if (any_sign && signatures.empty()) {
    fail(Errc::invalid_argument, "signing modes need signature algorithms");
  }
}

std::vector<Coordinate> BenchPlan::coordinates() const {
  std::vector<Coordinate> out;
  for (wssec::SecurityMode mode : modes) {
    const bool enc = mode == wssec::SecurityMode::enc ||
                     mode == wssec::SecurityMode::enc_sign;
    const bool sig = mode == wssec::SecurityMode::sign ||
                     mode == wssec::SecurityMode::enc_sign;
    std::vector<Coordinate> shapes;
    Coordinate base;
    base.mode = mode;
    shapes.push_back(base);
    if (enc) {
      std::vector<Coordinate> next;
      for (const Coordinate& s : shapes) {
        for (crypto::CipherAlg c : ciphers) {
          for (crypto::KeyTransportAlg t : transports) {
            Coordinate withEnc = s;
            withEnc.cipher = c;
            withEnc.transport = t;
            next.push_back(withEnc);
          }
        }
      }
      shapes = std::move(next);
    }
    if (sig) {
      std::vector<Coordinate> next;
      for (const Coordinate& s : shapes) {
        for (crypto::SignatureAlg a : signatures) {
          Coordinate withSig = s;
          withSig.signature = a;
          next.push_back(withSig);
        }
      }
      shapes = std::move(next);
    }
    for (const Coordinate& s : shapes) {
      for (int kb : sizes_kb) {
        Coordinate c = s;
        c.size_kb = kb;
        out.push_back(c);
      }
    }
  }
  return out;
}

std::string csv_row(const BenchRecord& rec) {
  std::ostringstream out;
  out << coordinate_fields(rec.coord) << ',' << rec.rep << ','
      << rec.result.request_bytes << ',' << rec.result.response_bytes << ','
      << rec.result.t_build_us << ',' << rec.result.t_encrypt_us << ','
      << rec.result.t_sign_us << ',' << rec.result.t_transport_us << ','
      << rec.result.t_verify_us << ',' << rec.result.t_decrypt_us << ','
      << rec.result.t_total_us;
  return out.str();
}

std::string records_csv(const std::vector<BenchRecord>& records) {
  std::ostringstream out;
  out << kCsvHeader << '\n';
  for (const BenchRecord& rec : records) out << csv_row(rec) << '\n';
  return out.str();
}

std::vector<BenchRecord> parse_csv(std::string_view text) {
  std::vector<BenchRecord> records;
  std::istringstream in{std::string(text)};
  std::string line;
  bool first = true;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    if (first) {
      first = false;
      if (line == kCsvHeader) continue;
      fail(Errc::parse_error, "CSV header mismatch");
    }
    std::vector<std::string> f = split_fields(line);
    if (f.size() != 15) {
      fail(Errc::parse_error, "CSV row does not have 15 fields");
    }
    BenchRecord rec;
    rec.coord.mode = wssec::mode_from_name(f[0]);
    if (!f[1].empty()) rec.coord.cipher = crypto::cipher_from_name(f[1]);
    if (!f[2].empty()) rec.coord.transport = crypto::transport_from_name(f[2]);
    if (!f[3].empty()) rec.coord.signature = crypto::signature_from_name(f[3]);
    rec.coord.size_kb = static_cast<int>(parse_int(f[4]));
    rec.rep = static_cast<int>(parse_int(f[5]));
    rec.result.request_bytes = static_cast<std::size_t>(parse_int(f[6]));
    rec.result.response_bytes = static_cast<std::size_t>(parse_int(f[7]));
    rec.result.t_build_us = parse_int(f[8]);
    rec.result.t_encrypt_us = parse_int(f[9]);
    rec.result.t_sign_us = parse_int(f[10]);
    rec.result.t_transport_us = parse_int(f[11]);
    rec.result.t_verify_us = parse_int(f[12]);
    rec.result.t_decrypt_us = parse_int(f[13]);
    rec.result.t_total_us = parse_int(f[14]);
    rec.result.mode = rec.coord.mode;
    records.push_back(std::move(rec));
  }
  return records;
}

RunOutcome run(const BenchPlan& plan, const Endpoints& endpoints) {
  plan.validate();
  RunOutcome out;

  std::set<std::string> done;  // coordinate fields + rep
  const auto done_key = [](const Coordinate& c, int rep) {
    return coordinate_fields(c) + "," + std::to_string(rep);
  };

  const bool have_csv = !plan.csv_path.empty();
  if (have_csv && std::filesystem::exists(plan.csv_path)) {
    std::ifstream in(plan.csv_path);
    std::stringstream buffer;
    buffer << in.rdbuf();
    out.records = parse_csv(buffer.str());
    for (const BenchRecord& rec : out.records) {
      done.insert(done_key(rec.coord, rec.rep));
    }
  }

  std::ofstream csv;
  if (have_csv) {
    const bool fresh = !std::filesystem::exists(plan.csv_path) ||
                       std::filesystem::file_size(plan.csv_path) == 0;
    csv.open(plan.csv_path, std::ios::app);
    if (!csv) fail(Errc::io_error, "cannot open CSV for append: " + plan.csv_path);
    if (fresh) {
      csv << kCsvHeader << '\n';
      csv.flush();
    }
  }

  std::unique_ptr<RandomSource> seeded;
  RandomSource* rng = nullptr;
  if (plan.deterministic) {
    seeded = std::make_unique<DeterministicRandom>(0x6d777373);
    rng = seeded.get();
  } else {
    rng = &SystemRandom::instance();
  }

  std::map<std::string, client::ClientKeys> key_cache;
  const client::ClientKeys no_keys;

  for (const Coordinate& coord : plan.coordinates()) {
    std::vector<int> missing;
    for (int rep = 1; rep <= plan.reps; ++rep) {
      if (!done.count(done_key(coord, rep))) missing.push_back(rep);
    }
    if (missing.empty()) continue;

    const wssec::SecurityPolicy policy = coord.policy();
    const std::string suite_key =
        std::string(wssec::mode_name(coord.mode)) + "|" +
        (coord.transport ? std::string(crypto::transport_name(*coord.transport)) : "") +
        "|" +
        (coord.signature ? std::string(crypto::signature_name(*coord.signature)) : "");

    int failures = 0;
    bool failed = false;
    int warmups_left = plan.warmup;
    for (int rep : missing) {
      while (true) {
        try {
          const client::ClientKeys* keys = &no_keys;
          if (policy.mode != wssec::SecurityMode::plain) {
            auto it = key_cache.find(suite_key);
            if (it == key_cache.end()) {
              it = key_cache
                       .emplace(suite_key,
                                client::fetch_keys(endpoints.idp, endpoints.own_owner,
                                                   endpoints.host_owner, policy))
                       .first;
            }
            keys = &it->second;
          }
          while (warmups_left > 0) {
            client::invoke(endpoints.host, policy, coord.size_kb, *keys, *rng);
            --warmups_left;
          }
          BenchRecord rec;
          rec.coord = coord;
          rec.rep = rep;
          rec.result =
              client::invoke(endpoints.host, policy, coord.size_kb, *keys, *rng);
          if (csv.is_open()) {
            csv << csv_row(rec) << '\n';
            csv.flush();
          }
          done.insert(done_key(coord, rep));
          out.records.push_back(std::move(rec));
          break;
        } catch (const std::exception&) {
          if (++failures > plan.reps) {
            failed = true;
            break;
          }
        }
      }
      if (failed) break;
    }
    if (failed) out.failed.push_back(coord);
  }
  return out;
}

SizeTable size_table(const std::vector<BenchRecord>& records) {
  SizeTable table;
  std::set<int> sizes;
  for (const BenchRecord& rec : records) sizes.insert(rec.coord.size_kb);
  table.sizes_kb.assign(sizes.begin(), sizes.end());

  std::array<std::vector<double>, 4> sums;
  std::array<std::vector<int>, 4> counts;
  for (int row = 0; row < 4; ++row) {
    sums[row].assign(table.sizes_kb.size(), 0);
    counts[row].assign(table.sizes_kb.size(), 0);
    table.cells[row].assign(table.sizes_kb.size(), std::nullopt);
  }
  for (const BenchRecord& rec : records) {
    const int row = size_row(rec.coord.mode);
    const auto it = std::find(table.sizes_kb.begin(), table.sizes_kb.end(),
                              rec.coord.size_kb);
    const std::size_t col = static_cast<std::size_t>(it - table.sizes_kb.begin());
    sums[row][col] += static_cast<double>(rec.result.response_bytes);
    counts[row][col] += 1;
  }
  for (int row = 0; row < 4; ++row) {
    for (std::size_t col = 0; col < table.sizes_kb.size(); ++col) {
      if (counts[row][col] > 0) {
        table.cells[row][col] = sums[row][col] / counts[row][col];
      }
    }
  }
  return table;
}

std::string render_size_table(const SizeTable& table) {
  std::size_t label_width = 0;
  for (std::string_view label : kSizeRowLabels) {
    label_width = std::max(label_width, label.size());
  }
  std::ostringstream out;
  out << "Message size variations (in bytes) with security\n";
  out << std::string(label_width, ' ');
  for (int kb : table.sizes_kb) {
    out << '\t' << kb << " KB";
  }
  out << '\n';
  for (std::size_t row = 0; row < kSizeRowLabels.size(); ++row) {
    out << kSizeRowLabels[row]
        << std::string(label_width - kSizeRowLabels[row].size(), ' ');
    for (std::size_t col = 0; col < table.sizes_kb.size(); ++col) {
      out << '\t';
      if (table.cells[row][col]) {
        out << format_count(*table.cells[row][col]);
      } else {
        out << '-';
      }
    }
    out << '\n';
  }
  return out.str();
}

LatencyReport latency_report(const std::vector<BenchRecord>& records) {
  LatencyReport report;
  std::map<Coordinate, std::vector<const BenchRecord*>, CoordinateOrder> groups;
  for (const BenchRecord& rec : records) {
    groups[rec.coord].push_back(&rec);
  }
  for (const auto& [coord, recs] : groups) {
    LatencyCell cell;
    cell.coord = coord;
    cell.n = static_cast<int>(recs.size());
    cell.low_confidence = cell.n < 5;
    std::vector<double> build, encrypt, sign, transport, verify, decrypt, total,
        processing;
    for (const BenchRecord* rec : recs) {
      build.push_back(static_cast<double>(rec->result.t_build_us));
      encrypt.push_back(static_cast<double>(rec->result.t_encrypt_us));
      sign.push_back(static_cast<double>(rec->result.t_sign_us));
      transport.push_back(static_cast<double>(rec->result.t_transport_us));
      verify.push_back(static_cast<double>(rec->result.t_verify_us));
      decrypt.push_back(static_cast<double>(rec->result.t_decrypt_us));
      total.push_back(static_cast<double>(rec->result.t_total_us));
      processing.push_back(static_cast<double>(rec->result.t_total_us -
                                               rec->result.t_transport_us));
    }
    cell.build = stats_of(build);
    cell.encrypt = stats_of(encrypt);
    cell.sign = stats_of(sign);
    cell.transport = stats_of(transport);
    cell.verify = stats_of(verify);
    cell.decrypt = stats_of(decrypt);
    cell.total = stats_of(total);
    cell.processing = stats_of(processing);
    report.cells.push_back(std::move(cell));
  }

  // Rankings compare mean processing latency at the largest measured size.
  int max_kb = 0;
  for (const LatencyCell& cell : report.cells) {
    max_kb = std::max(max_kb, cell.coord.size_kb);
  }
  const auto rank = [&](auto member, bool fallback_enc_sign,
                        wssec::SecurityMode primary) {
    std::map<std::string, std::pair<double, int>> rows;  // name -> (sum, n)
    for (wssec::SecurityMode wanted :
         {primary, wssec::SecurityMode::enc_sign}) {
      for (const LatencyCell& cell : report.cells) {
        if (cell.coord.size_kb != max_kb || cell.coord.mode != wanted) continue;
        auto name = member(cell.coord);
        if (!name) continue;
        auto& row = rows[*name];
        row.first += cell.processing.mean;
        row.second += 1;
      }
      if (!rows.empty() || !fallback_enc_sign) break;
    }
    std::vector<std::pair<double, std::string>> order;
    for (const auto& [name, sum_n] : rows) {
      order.emplace_back(sum_n.first / sum_n.second, name);
    }
    std::sort(order.begin(), order.end());
    std::vector<std::string> names;
    for (const auto& [mean, name] : order) names.push_back(name);
    return names;
  };
  report.cipher_ranking = rank(
      [](const Coordinate& c) -> std::optional<std::string> {
        if (!c.cipher) return std::nullopt;
        return std::string(crypto::cipher_name(*c.cipher));
      },
      true, wssec::SecurityMode::enc);
  report.signature_ranking = rank(
      [](const Coordinate& c) -> std::optional<std::string> {
        if (!c.signature) return std::nullopt;
        return std::string(crypto::signature_name(*c.signature));
      },
      true, wssec::SecurityMode::sign);

  report.note =
      "Latencies are desk-scale measurements; only orderings and structural "
      "ratios are meaningful, absolute values are not comparable to "
      "constrained-device numbers.";
  return report;
}

std::string render_latency_report(const LatencyReport& report) {
  std::ostringstream out;
  out << "Processing latency per coordinate (microseconds, mean +/- sample "
         "stddev)\n";
  for (const LatencyCell& cell : report.cells) {
    out << coordinate_label(cell.coord) << ": processing "
        << format_us(cell.processing.mean) << " +/- "
        << format_us(cell.processing.stddev) << ", total "
        << format_us(cell.total.mean) << " +/- " << format_us(cell.total.stddev)
        << " (n=" << cell.n << (cell.low_confidence ? ", low confidence" : "")
        << ")\n";
  }
  if (!report.cipher_ranking.empty()) {
    out << "Cipher ranking (fastest first): ";
    for (std::size_t i = 0; i < report.cipher_ranking.size(); ++i) {
      if (i > 0) out << ", ";
      out << report.cipher_ranking[i];
    }
    out << '\n';
  }
  if (!report.signature_ranking.empty()) {
    out << "Signature ranking (fastest first): ";
    for (std::size_t i = 0; i < report.signature_ranking.size(); ++i) {
      if (i > 0) out << ", ";
      out << report.signature_ranking[i];
    }
    out << '\n';
  }
  out << report.note << '\n';
  return out.str();
}

void export_records(const std::vector<BenchRecord>& records,
                    const std::string& csv_path, const std::string& tables_path) {
  if (records.empty()) fail(Errc::invalid_argument, "no records to export");
  if (!csv_path.empty()) {
    std::ofstream out(csv_path, std::ios::trunc);
    if (!out) fail(Errc::io_error, "cannot write: " + csv_path);
    out << records_csv(records);
    if (!out) fail(Errc::io_error, "write failed: " + csv_path);
  }
  if (!tables_path.empty()) {
    std::ofstream out(tables_path, std::ios::trunc);
    if (!out) fail(Errc::io_error, "cannot write: " + tables_path);
    out << render_size_table(size_table(records)) << '\n'
        << render_latency_report(latency_report(records));
    if (!out) fail(Errc::io_error, "write failed: " + tables_path);
  }
}

}  // namespace mwss::bench
