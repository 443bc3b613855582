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

#include <atomic>
#include <chrono>
#include <csignal>
#include <fstream>
#include <iostream>
#include <thread>

#include <CLI11.hpp>

#include "mwss/bench.hpp"
#include "mwss/client.hpp"
#include "mwss/error.hpp"
#include "mwss/host.hpp"
#include "mwss/idp.hpp"

namespace {

constexpr std::uint64_t kCliSeed = 0x6d777373;  // fixed --deterministic seed

std::atomic<bool> g_stop{false};

void on_signal(int) { g_stop.store(true); }

void wait_for_signal() {
  std::signal(SIGINT, on_signal);
  std::signal(SIGTERM, on_signal);
  while (!g_stop.load()) {
    std::this_thread::sleep_for(std::chrono::milliseconds(200));
  }
}

int exit_code_for(const mwss::Error& err) {
  using mwss::Errc;
  switch (err.code()) {
    case Errc::invalid_argument:
      return 2;
    case Errc::network_error:
    case Errc::remote_fault:
    case Errc::not_found:
    case Errc::protocol_error:
    case Errc::unknown_service:
      return 3;
    case Errc::invalid_key:
    case Errc::unsupported_algorithm:
    case Errc::decryption_failure:
    case Errc::malformed_ciphertext:
    case Errc::key_unwrap_failure:
    case Errc::scope_error:
    case Errc::reference_error:
    case Errc::malformed_plaintext:
    case Errc::no_signature:
    case Errc::malformed_signature:
    case Errc::security_error:
      return 4;
    case Errc::parse_error:
    case Errc::serialization_error:
    case Errc::io_error:
      return 5;
  }
  return 1;
}

std::string lower(std::string s) {
  for (char& c : s) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return s;
}

mwss::crypto::CipherAlg cipher_from_flag(const std::string& flag) {
  const std::string f = lower(flag);
  if (f == "des" || f == "des64" || f == "des-64") return mwss::crypto::CipherAlg::des64;
  if (f == "3des" || f == "3des192" || f == "3des-192" || f == "tripledes") {
    return mwss::crypto::CipherAlg::tdes192;
  }
  if (f == "idea" || f == "idea128" || f == "idea-128") {
    return mwss::crypto::CipherAlg::idea128;
  }
  if (f == "aes128" || f == "aes-128") return mwss::crypto::CipherAlg::aes128;
  if (f == "aes192" || f == "aes-192") return mwss::crypto::CipherAlg::aes192;
  if (f == "aes256" || f == "aes-256") return mwss::crypto::CipherAlg::aes256;
  // Canonical display names ("AES-256") and unsupported spellings
  // ("idea256") both end up here; the latter produce the algorithm error.
  return mwss::crypto::cipher_from_name(flag);
}

mwss::crypto::KeyTransportAlg transport_from_flag(const std::string& flag) {
  const std::string f = lower(flag);
  if (f == "rsa1024" || f == "rsa-1024") return mwss::crypto::KeyTransportAlg::rsa15_1024;
  if (f == "rsa2048" || f == "rsa-2048") return mwss::crypto::KeyTransportAlg::rsa15_2048;
  return mwss::crypto::transport_from_name(flag);
}

mwss::crypto::SignatureAlg signature_from_flag(const std::string& flag) {
  const std::string f = lower(flag);
  if (f == "rsa-sha1-1024") return mwss::crypto::SignatureAlg::rsa_sha1_1024;
  if (f == "rsa-sha1-2048") return mwss::crypto::SignatureAlg::rsa_sha1_2048;
  if (f == "dsa-sha1-1024" || f == "dsa-sha1" || f == "dsa")
    return mwss::crypto::SignatureAlg::dsa_sha1_1024;
  return mwss::crypto::signature_from_name(flag);
}

mwss::wssec::SecurityMode mode_from_flag(const std::string& flag) {
  const std::string f = lower(flag);
  if (f == "plain") return mwss::wssec::SecurityMode::plain;
  if (f == "enc") return mwss::wssec::SecurityMode::enc;
  if (f == "sign") return mwss::wssec::SecurityMode::sign;
  if (f == "encsign" || f == "enc_sign") return mwss::wssec::SecurityMode::enc_sign;
  return mwss::wssec::mode_from_name(flag);
}

struct HostOptions {
  std::string bind = "127.0.0.1";
  int port = 9000;
  std::string idp;
  std::string log;
  std::string own_owner = "host";
  std::string peer_owner = "client";
  bool concurrent = false;
  std::uint64_t seed = 0;
  bool seeded = false;
};

int run_host(const HostOptions& opt) {
  mwss::host::HostConfig config;
  config.idp_endpoint = opt.idp;
  config.own_owner = opt.own_owner;
  config.peer_owner = opt.peer_owner;
  config.benchmark_serialize = !opt.concurrent;
  config.log_path = opt.log;
  if (opt.seeded) config.rng_seed = opt.seed;

  mwss::host::Service service(std::move(config));
  if (!service.start(opt.bind, opt.port)) {
    mwss::fail(mwss::Errc::network_error,
               "cannot bind " + opt.bind + ":" + std::to_string(opt.port));
  }
  if (!opt.idp.empty() && !service.handler().provision_default_keys()) {
    mwss::fail(mwss::Errc::network_error,
               "cannot provision host keys from " + opt.idp);
  }
  std::cout << "host listening on " << opt.bind << ":" << service.port()
            << std::endl;
  wait_for_signal();
  service.stop();
  return 0;
}

struct IdpOptions {
  std::string bind = "127.0.0.1";
  int port = 9001;
  std::string store;
};

int run_idp(const IdpOptions& opt) {
  mwss::idp::KeyStore store =
      opt.store.empty() ? mwss::idp::KeyStore() : mwss::idp::KeyStore(opt.store);
  mwss::idp::Service service(store, mwss::SystemRandom::instance());
  if (!service.start(opt.bind, opt.port)) {
    mwss::fail(mwss::Errc::network_error,
               "cannot bind " + opt.bind + ":" + std::to_string(opt.port));
  }
  std::cout << "identity provider listening on " << opt.bind << ":"
            << service.port() << std::endl;
  wait_for_signal();
  service.stop();
  return 0;
}

struct KeygenOptions {
  std::string idp;
  std::string kind = "rsa";
  std::size_t bits = 1024;
  std::string owner;
  std::string out;
};

int run_keygen(const KeygenOptions& opt) {
  mwss::crypto::KeyKind kind;
  const std::string k = lower(opt.kind);
  if (k == "rsa") {
    kind = mwss::crypto::KeyKind::rsa;
  } else if (k == "dsa") {
    kind = mwss::crypto::KeyKind::dsa;
  } else {
    mwss::fail(mwss::Errc::invalid_argument, "kind must be rsa or dsa");
  }
  mwss::crypto::AsymmetricKeyPair pair =
      mwss::client::issue_key(opt.idp, kind, opt.bits, opt.owner);
  const std::string xml =
      mwss::xml::serialize_element(mwss::crypto::key_value_element(pair, true));
  if (opt.out.empty()) {
    std::cout << xml << std::endl;
  } else {
    std::ofstream f(opt.out, std::ios::trunc);
    if (!f) mwss::fail(mwss::Errc::io_error, "cannot write: " + opt.out);
    f << xml << '\n';
    if (!f) mwss::fail(mwss::Errc::io_error, "write failed: " + opt.out);
    std::cout << "key written to " << opt.out << std::endl;
  }
  return 0;
}

struct InvokeOptions {
  std::string endpoint = "http://127.0.0.1:9000";
  std::string idp = "http://127.0.0.1:9001";
  std::string security = "plain";
  std::string cipher = "aes256";
  std::string transport = "rsa1024";
  std::string sig = "rsa-sha1-1024";
  std::string own_owner = "client";
  std::string host_owner = "host";
  int size_kb = 1;
  bool reuse_key = false;
  bool deterministic = false;
};

int run_invoke(const InvokeOptions& opt) {
  mwss::wssec::SecurityPolicy policy;
  policy.mode = mode_from_flag(opt.security);
  if (policy.encrypts()) {
    policy.cipher = cipher_from_flag(opt.cipher);
    policy.key_transport = transport_from_flag(opt.transport);
  }
  if (policy.signs()) {
    policy.signature = signature_from_flag(opt.sig);
  }
  policy.reuse_transport_key_for_signing = opt.reuse_key;
  policy.validate();

  mwss::client::ClientKeys keys;
  if (policy.mode != mwss::wssec::SecurityMode::plain) {
    keys = mwss::client::fetch_keys(opt.idp, opt.own_owner, opt.host_owner, policy);
  }

  mwss::DeterministicRandom seeded(kCliSeed);
  mwss::RandomSource& rng = opt.deterministic
                                ? static_cast<mwss::RandomSource&>(seeded)
                                : mwss::SystemRandom::instance();
  mwss::client::InvocationResult r =
      mwss::client::invoke(opt.endpoint, policy, opt.size_kb, keys, rng);

  std::cout << "mode: " << mwss::wssec::mode_name(r.mode) << '\n'
            << "request bytes: " << r.request_bytes << '\n'
            << "response bytes: " << r.response_bytes << '\n'
            << "request id: " << r.response.request_id << '\n'
            << "fix: longitude=" << r.fix.longitude
            << " latitude=" << r.fix.latitude << " altitude=" << r.fix.altitude
            << " speed=" << r.fix.speed << " status=" << r.fix.status << '\n'
            << "t_build_us: " << r.t_build_us << '\n'
            << "t_encrypt_us: " << r.t_encrypt_us << '\n'
            << "t_sign_us: " << r.t_sign_us << '\n'
            << "t_transport_us: " << r.t_transport_us << '\n'
            << "t_verify_us: " << r.t_verify_us << '\n'
            << "t_decrypt_us: " << r.t_decrypt_us << '\n'
            << "t_total_us: " << r.t_total_us << std::endl;
  return 0;
}

struct BenchOptions {
  std::string endpoint = "http://127.0.0.1:9000";
  std::string idp = "http://127.0.0.1:9001";
  std::vector<std::string> modes = {"all"};
  std::vector<std::string> ciphers = {"aes256"};
  std::vector<std::string> transports = {"rsa1024"};
  std::vector<std::string> sigs = {"rsa-sha1-1024"};
  std::vector<int> sizes = {1, 2, 5, 10};
  int reps = 5;
  int warmup = 2;
  std::string csv = "mwss_bench.csv";
  std::string tables = "mwss_bench_tables.txt";
  std::string own_owner = "client";
  std::string host_owner = "host";
  bool full_matrix = false;
  bool deterministic = false;
};

int run_bench(const BenchOptions& opt) {
  mwss::bench::BenchPlan plan;
  plan.modes.clear();
  for (const std::string& m : opt.modes) {
    if (lower(m) == "all") {
      plan.modes = {mwss::wssec::SecurityMode::plain, mwss::wssec::SecurityMode::enc,
                    mwss::wssec::SecurityMode::sign,
                    mwss::wssec::SecurityMode::enc_sign};
      break;
    }
    plan.modes.push_back(mode_from_flag(m));
  }
  if (opt.full_matrix) {
    plan.ciphers.assign(std::begin(mwss::crypto::kAllCiphers),
                        std::end(mwss::crypto::kAllCiphers));
    plan.transports.assign(std::begin(mwss::crypto::kAllTransports),
                           std::end(mwss::crypto::kAllTransports));
    plan.signatures.assign(std::begin(mwss::crypto::kAllSignatures),
                           std::end(mwss::crypto::kAllSignatures));
  } else {
    plan.ciphers.clear();
    for (const std::string& c : opt.ciphers) plan.ciphers.push_back(cipher_from_flag(c));
    plan.transports.clear();
    for (const std::string& t : opt.transports) {
      plan.transports.push_back(transport_from_flag(t));
    }
    plan.signatures.clear();
    for (const std::string& s : opt.sigs) {
      plan.signatures.push_back(signature_from_flag(s));
    }
  }
  plan.sizes_kb = opt.sizes;
  plan.reps = opt.reps;
  plan.warmup = opt.warmup;
  plan.csv_path = opt.csv;
  plan.deterministic = opt.deterministic;

  mwss::bench::Endpoints endpoints;
  endpoints.host = opt.endpoint;
  endpoints.idp = opt.idp;
  endpoints.own_owner = opt.own_owner;
  endpoints.host_owner = opt.host_owner;

  mwss::bench::RunOutcome outcome = mwss::bench::run(plan, endpoints);
  for (const mwss::bench::Coordinate& coord : outcome.failed) {
    std::cerr << "cell failed: " << mwss::bench::csv_row({coord, 0, {}}) << '\n';
  }
  if (outcome.records.empty()) {
    mwss::fail(mwss::Errc::network_error, "no benchmark records were collected");
  }
  mwss::bench::export_records(outcome.records, opt.csv, opt.tables);
  std::cout << mwss::bench::render_size_table(mwss::bench::size_table(outcome.records))
            << '\n'
            << mwss::bench::render_latency_report(
                   mwss::bench::latency_report(outcome.records));
  std::cout << "records: " << outcome.records.size() << ", csv: " << opt.csv
            << ", tables: " << opt.tables << std::endl;
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"WS-Security SOAP toolkit and benchmark rig"};
  app.require_subcommand(1);
  app.set_config("--config", "", "key=value configuration file (section.key=value)");

  HostOptions host_opt;
  CLI::App* host = app.add_subcommand("host", "Run the GPS provisioning service");
  host->add_option("--bind", host_opt.bind, "Bind address");
  host->add_option("--port", host_opt.port, "Port (0 picks a free one)");
  host->add_option("--idp", host_opt.idp, "Identity provider endpoint");
  host->add_option("--log", host_opt.log, "Per-request TSV log path");
  host->add_option("--owner", host_opt.own_owner, "Own key owner name");
  host->add_option("--peer-owner", host_opt.peer_owner, "Peer key owner name");
  host->add_flag("--concurrent", host_opt.concurrent,
                 "Disable single-worker benchmark serialization");
  CLI::Option* seed_opt =
      host->add_option("--seed", host_opt.seed, "Fixed response-security RNG seed");

  IdpOptions idp_opt;
  CLI::App* idp = app.add_subcommand("idp", "Run the identity provider");
  idp->add_option("--bind", idp_opt.bind, "Bind address");
  idp->add_option("--port", idp_opt.port, "Port (0 picks a free one)");
  idp->add_option("--store", idp_opt.store, "Append-only key store file");

  KeygenOptions keygen_opt;
  CLI::App* keygen = app.add_subcommand("keygen", "Issue a keypair at the identity provider");
  keygen->add_option("--idp", keygen_opt.idp, "Identity provider endpoint")->required();
  keygen->add_option("--kind", keygen_opt.kind, "rsa or dsa");
  keygen->add_option("--bits", keygen_opt.bits, "Key size in bits");
  keygen->add_option("--owner", keygen_opt.owner, "Owner name")->required();
  keygen->add_option("--out", keygen_opt.out, "Write the key XML here instead of stdout");

  InvokeOptions invoke_opt;
  CLI::App* invoke = app.add_subcommand("invoke", "Fire one service invocation");
  invoke->add_option("--endpoint", invoke_opt.endpoint, "Service endpoint");
  invoke->add_option("--idp", invoke_opt.idp, "Identity provider endpoint");
  invoke->add_option("--security", invoke_opt.security,
                     "plain, enc, sign or encsign");
  invoke->add_option("--cipher", invoke_opt.cipher,
                     "des, 3des, idea, aes128, aes192 or aes256");
  invoke->add_option("--transport", invoke_opt.transport, "rsa1024 or rsa2048");
  invoke->add_option("--sig", invoke_opt.sig,
                     "rsa-sha1-1024, rsa-sha1-2048 or dsa-sha1-1024");
  invoke->add_option("--size", invoke_opt.size_kb, "Response size in KB (1..10)");
  invoke->add_option("--owner", invoke_opt.own_owner, "Own key owner name");
  invoke->add_option("--host-owner", invoke_opt.host_owner, "Host key owner name");
  invoke->add_flag("--reuse-key", invoke_opt.reuse_key,
                   "Sign with the RSA transport keypair instead of a separate pair");
  invoke->add_flag("--deterministic", invoke_opt.deterministic,
                   "Seed the RNG for reproducible output");

  BenchOptions bench_opt;
  CLI::App* bench = app.add_subcommand("bench", "Run the measurement matrix");
  bench->add_option("--endpoint", bench_opt.endpoint, "Service endpoint");
  bench->add_option("--idp", bench_opt.idp, "Identity provider endpoint");
  bench->add_option("--mode", bench_opt.modes, "all or list of plain,enc,sign,encsign")
      ->delimiter(',');
  bench->add_option("--ciphers", bench_opt.ciphers, "Cipher list")->delimiter(',');
  bench->add_option("--transports", bench_opt.transports, "Key transport list")
      ->delimiter(',');
  bench->add_option("--sigs", bench_opt.sigs, "Signature algorithm list")
      ->delimiter(',');
  bench->add_option("--sizes", bench_opt.sizes, "Message sizes in KB")->delimiter(',');
  bench->add_option("--reps", bench_opt.reps, "Timed repetitions per cell (>=5)");
  bench->add_option("--warmup", bench_opt.warmup, "Discarded invocations per cell");
  bench->add_option("--csv", bench_opt.csv, "Per-record CSV path (resume key)");
  bench->add_option("--tables", bench_opt.tables, "Rendered tables path");
  bench->add_option("--owner", bench_opt.own_owner, "Own key owner name");
  bench->add_option("--host-owner", bench_opt.host_owner, "Host key owner name");
  bench->add_flag("--full-matrix", bench_opt.full_matrix,
                  "All ciphers, transports and signature algorithms");
  bench->add_flag("--deterministic", bench_opt.deterministic,
                  "Seed the RNG for reproducible output");

  try {
    app.parse(argc, argv);
    host_opt.seeded = seed_opt->count() > 0;
    if (app.got_subcommand(host)) return run_host(host_opt);
    if (app.got_subcommand(idp)) return run_idp(idp_opt);
    if (app.got_subcommand(keygen)) return run_keygen(keygen_opt);
    if (app.got_subcommand(invoke)) return run_invoke(invoke_opt);
    if (app.got_subcommand(bench)) return run_bench(bench_opt);
    return 2;
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 2;
  } catch (const mwss::Error& err) {
    std::cerr << "error: " << err.what() << std::endl;
    return exit_code_for(err);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << std::endl;
    return 1;
  }
}
