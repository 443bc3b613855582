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

#include "mwss/host.hpp"

#include <atomic>
#include <chrono>
#include <fstream>
#include <mutex>
#include <thread>

#include <httplib.h>

#include "mwss/error.hpp"
#include "mwss/idp.hpp"
#include "mwss/rng.hpp"

namespace mwss::host {
namespace {

using Clock = std::chrono::steady_clock;

std::int64_t us_between(Clock::time_point a, Clock::time_point b) {
  return std::chrono::duration_cast<std::chrono::microseconds>(b - a).count();
}

// Length of the wrapped session key, read without any key material; it
// selects the private RSA key the request was encrypted toward.
std::optional<std::size_t> wrapped_key_length(const Envelope& e) {
  for (const auto& block : e.header_blocks) {
    if (xml::local_name(block.name) != "Security") continue;
    const xml::Element* ek = block.find_child("EncryptedKey");
    if (ek == nullptr) return std::nullopt;
    const xml::Element* data = ek->find_child("CipherData");
    if (data == nullptr) return std::nullopt;
    const xml::Element* value = data->find_child("CipherValue");
    if (value == nullptr) return std::nullopt;
    auto octets = base64_decode(value->text_content());
    if (!octets) return std::nullopt;
    return octets->size();
  }
  return std::nullopt;
}

}  // namespace

struct Handler::Impl {
  HostConfig config;
  std::mutex serial_mu;  // single-worker discipline
  std::mutex keys_mu;
  std::mutex rng_mu;
  std::mutex log_mu;
  std::atomic<std::int64_t> request_counter{0};
  std::unique_ptr<RandomSource> seeded_rng;
  RandomSource* rng = nullptr;
  std::ofstream log;

  std::optional<crypto::AsymmetricKeyPair> own_key(crypto::KeyKind kind,
                                                   std::size_t bits);
  std::optional<crypto::AsymmetricKeyPair> peer_key(crypto::KeyKind kind,
                                                    std::size_t bits);
  void write_log(const HandleResult& r, std::string_view status);
  HandleResult finish_fault(HandleResult r, std::string_view faultcode,
                            std::string_view faultstring);
  HandleResult finish(HandleResult r, const Envelope& response);
};

std::optional<crypto::AsymmetricKeyPair> Handler::Impl::own_key(
    crypto::KeyKind kind, std::size_t bits) {
  std::lock_guard<std::mutex> lock(keys_mu);
  for (const auto& k : config.own_keys) {
    if (k.kind == kind && k.bits == bits && k.has_private()) return k;
  }
  if (config.idp_endpoint.empty()) return std::nullopt;
  httplib::Client cli(config.idp_endpoint);
  xml::Element req("KeyRequest");
  req.add_child(xml::Element("kind").add_text(std::string(crypto::key_kind_name(kind))));
  req.add_child(xml::Element("bits").add_text(std::to_string(bits)));
  req.add_child(xml::Element("owner").add_text(config.own_owner));
  auto res = cli.Post("/keys", xml::serialize_element(req), "text/xml");
  if (!res || res->status != 201) return std::nullopt;
  try {
    idp::KeyRecord rec = idp::key_record_from_element(xml::parse_element(res->body));
    config.own_keys.push_back(rec.pair);
    return rec.pair;
  } catch (const Error&) {
    return std::nullopt;
  }
}

std::optional<crypto::AsymmetricKeyPair> Handler::Impl::peer_key(
    crypto::KeyKind kind, std::size_t bits) {
  std::lock_guard<std::mutex> lock(keys_mu);
  for (const auto& k : config.peer_keys) {
    if (k.kind == kind && k.bits == bits) return k;
  }
  if (config.idp_endpoint.empty()) return std::nullopt;
  httplib::Client cli(config.idp_endpoint);
  auto res = cli.Get("/keys/public/" + config.peer_owner +
                     "?kind=" + std::string(crypto::key_kind_name(kind)) +
                     "&bits=" + std::to_string(bits));
  if (!res || res->status != 200) return std::nullopt;
  try {
    crypto::AsymmetricKeyPair pair =
        crypto::key_from_value_element(xml::parse_element(res->body));
    pair.owner = config.peer_owner;
    // Peers rotate keys between requests, so directory answers are not
    // cached; only keys provided up front in the config are reused.
    return pair;
  } catch (const Error&) {
    return std::nullopt;
  }
}

void Handler::Impl::write_log(const HandleResult& r, std::string_view status) {
  if (!log.is_open()) return;
  std::lock_guard<std::mutex> lock(log_mu);
  log << r.request_id << '\t' << wssec::mode_name(r.mode) << '\t' << status
      << '\t' << r.request_bytes << '\t' << r.response_bytes << '\t'
      << r.t_unsecure_us << '\t' << r.t_process_us << '\t' << r.t_secure_us
      << '\n';
  log.flush();
}

HandleResult Handler::Impl::finish_fault(HandleResult r, std::string_view faultcode,
                                         std::string_view faultstring) {
  r.response_octets = serialize(build_fault(faultcode, faultstring));
  r.response_bytes = r.response_octets.size();
  r.http_status = 500;
  r.fault = true;
  write_log(r, faultcode);
  return r;
}

HandleResult Handler::Impl::finish(HandleResult r, const Envelope& response) {
  r.response_octets = serialize(response);
  r.response_bytes = r.response_octets.size();
  write_log(r, "ok");
  return r;
}

Handler::Handler(HostConfig config) : impl_(new Impl) {
  impl_->config = std::move(config);
  if (impl_->config.rng_seed) {
    impl_->seeded_rng = std::make_unique<DeterministicRandom>(*impl_->config.rng_seed);
    impl_->rng = impl_->seeded_rng.get();
  } else {
    impl_->rng = &SystemRandom::instance();
  }
  if (!impl_->config.log_path.empty()) {
    impl_->log.open(impl_->config.log_path, std::ios::app);
    if (!impl_->log) {
      fail(Errc::io_error, "cannot open log: " + impl_->config.log_path);
    }
    if (impl_->log.tellp() == 0) {
      impl_->log << "request_id\tmode\tstatus\trequest_bytes\tresponse_bytes"
                    "\tt_unsecure_us\tt_process_us\tt_secure_us\n";
    }
  }
}

Handler::~Handler() = default;

bool Handler::provision_default_keys() {
  bool ok = impl_->own_key(crypto::KeyKind::rsa, 1024).has_value();
  ok = impl_->own_key(crypto::KeyKind::rsa, 2048).has_value() && ok;
  ok = impl_->own_key(crypto::KeyKind::dsa, 1024).has_value() && ok;
  return ok;
}

std::int64_t Handler::requests_served() const {
  return impl_->request_counter.load();
}

HandleResult Handler::handle(std::string_view request_octets) {
  std::unique_lock<std::mutex> serial(impl_->serial_mu, std::defer_lock);
  if (impl_->config.benchmark_serialize) serial.lock();

  HandleResult r;
  r.request_bytes = request_octets.size();

  const auto t0 = Clock::now();
  Envelope request;
  try {
    request = parse(request_octets);
  } catch (const Error&) {
    r.t_unsecure_us = us_between(t0, Clock::now());
    return impl_->finish_fault(std::move(r), "soapenv:Client",
                               "request does not parse");
  }

  wssec::UnsecureKeys unsecure_keys;
  unsecure_keys.pinned_peer_signing = impl_->config.pinned_peer_signing;
  if (auto len = wrapped_key_length(request)) {
    unsecure_keys.own_transport =
        impl_->own_key(crypto::KeyKind::rsa, *len * 8);
  }
  wssec::UnsecureReport rep = wssec::unsecure(request, unsecure_keys);
  r.mode = rep.detected_mode;
  const auto t1 = Clock::now();
  r.t_unsecure_us = us_between(t0, t1);
  if (!rep.ok()) {
    return impl_->finish_fault(std::move(r), "soapenv:Client.Security",
                               "security processing failed");
  }

  int size_kb = 0;
  try {
    size_kb = read_gps_request(*rep.recovered);
  } catch (const Error& err) {
    r.t_process_us = us_between(t1, Clock::now());
    if (err.code() == Errc::unknown_service) {
      return impl_->finish_fault(std::move(r), "soapenv:Client.UnknownService",
                                 "unknown service");
    }
    return impl_->finish_fault(std::move(r), "soapenv:Client",
                               "invalid service request");
  }
  r.request_id = impl_->request_counter.fetch_add(1) + 1;
  GpsResponseEnvelope response =
      build_gps_response(impl_->config.fix, r.request_id, size_kb);
  const auto t2 = Clock::now();
  r.t_process_us = us_between(t1, t2);

  Envelope secured = std::move(response.envelope);
  if (r.mode != wssec::SecurityMode::plain) {
    wssec::SecurityPolicy policy;
    policy.mode = rep.detected_mode;
    policy.cipher = rep.cipher;
    policy.key_transport = rep.key_transport;
    policy.signature = rep.signature;

    wssec::SecureKeys secure_keys;
    if (policy.encrypts()) {
      if (!policy.cipher || !policy.key_transport) {
        r.t_secure_us = us_between(t2, Clock::now());
        return impl_->finish_fault(std::move(r), "soapenv:Client.Security",
                                   "security processing failed");
      }
      secure_keys.recipient_transport_public = impl_->peer_key(
          crypto::KeyKind::rsa, crypto::modulus_bits(*policy.key_transport));
    }
    if (policy.signs()) {
      if (!policy.signature) {
        r.t_secure_us = us_between(t2, Clock::now());
        return impl_->finish_fault(std::move(r), "soapenv:Client.Security",
                                   "security processing failed");
      }
      secure_keys.own_signing =
          crypto::signature_is_rsa(*policy.signature)
              ? impl_->own_key(crypto::KeyKind::rsa,
                               crypto::signature_bits(*policy.signature))
              : impl_->own_key(crypto::KeyKind::dsa, 1024);
    }
    try {
      std::lock_guard<std::mutex> rng_lock(impl_->rng_mu);
      secured = wssec::secure(secured, policy, secure_keys, *impl_->rng);
    } catch (const Error&) {
      r.t_secure_us = us_between(t2, Clock::now());
      return impl_->finish_fault(std::move(r), "soapenv:Server", "internal error");
    }
  }
  r.t_secure_us = us_between(t2, Clock::now());
  return impl_->finish(std::move(r), secured);
}

struct Service::Impl {
  std::unique_ptr<Handler> handler;
  httplib::Server server;
  std::thread thread;
  int port = 0;
  std::atomic<int> in_flight{0};
  std::atomic<int> peak_in_flight{0};
};

Service::Service(HostConfig config) : impl_(new Impl) {
  impl_->handler = std::make_unique<Handler>(std::move(config));

  impl_->server.Post(R"(/.*)", [this](const httplib::Request& req,
                                      httplib::Response& res) {
    const int now = impl_->in_flight.fetch_add(1) + 1;
    int peak = impl_->peak_in_flight.load();
    while (now > peak && !impl_->peak_in_flight.compare_exchange_weak(peak, now)) {
    }
    HandleResult r = impl_->handler->handle(req.body);
    impl_->in_flight.fetch_sub(1);
    res.status = r.http_status;
    res.set_content(r.response_octets, "text/xml");
  });
}

Service::~Service() { stop(); }

bool Service::start(const std::string& host, int port) {
  if (port == 0) {
    impl_->port = impl_->server.bind_to_any_port(host);
    if (impl_->port < 0) return false;
  } else {
    if (!impl_->server.bind_to_port(host, port)) return false;
    impl_->port = port;
  }
  impl_->thread = std::thread([this] { impl_->server.listen_after_bind(); });
  impl_->server.wait_until_ready();
  return true;
}

void Service::stop() {
  if (impl_->thread.joinable()) {
    impl_->server.stop();
    impl_->thread.join();
  }
}

int Service::port() const { return impl_->port; }

Handler& Service::handler() { return *impl_->handler; }

int Service::max_in_flight() const { return impl_->peak_in_flight.load(); }

}  // namespace mwss::host
