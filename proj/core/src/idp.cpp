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

#include "mwss/idp.hpp"

#include <ctime>
#include <fstream>
#include <sstream>
#include <thread>

#include <httplib.h>

#include "mwss/error.hpp"

namespace mwss::idp {
namespace {

std::string now_utc() {
  std::time_t t = std::time(nullptr);
  std::tm tm{};
  gmtime_r(&t, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

std::string text_of(const xml::Element& parent, std::string_view local) {
  const xml::Element* el = parent.find_child(local);
  if (el == nullptr) {
    fail(Errc::invalid_argument, "missing " + std::string(local) + " element");
  }
  return el->text_content();
}

std::size_t parse_bits(const std::string& text) {
  std::size_t pos = 0;
  unsigned long v = 0;
  try {
    v = std::stoul(text, &pos);
  } catch (const std::exception&) {
    fail(Errc::invalid_argument, "bits is not a number");
  }
  if (pos != text.size()) fail(Errc::invalid_argument, "bits is not a number");
  return static_cast<std::size_t>(v);
}

}  // namespace

xml::Element key_record_element(const KeyRecord& rec, bool include_private) {
  xml::Element el("KeyRecord");
  el.add_child(xml::Element("keyId").add_text(rec.key_id));
  el.add_child(xml::Element("owner").add_text(rec.owner));
  el.add_child(
      xml::Element("kind").add_text(std::string(crypto::key_kind_name(rec.pair.kind))));
  el.add_child(xml::Element("bits").add_text(std::to_string(rec.pair.bits)));
  el.add_child(xml::Element("createdAt").add_text(rec.created_at));
  el.add_child(crypto::key_value_element(rec.pair, include_private));
  return el;
}

KeyRecord key_record_from_element(const xml::Element& el) {
  if (xml::local_name(el.name) != "KeyRecord") {
    fail(Errc::invalid_argument, "not a KeyRecord element");
  }
  KeyRecord rec;
  rec.key_id = text_of(el, "keyId");
  rec.owner = text_of(el, "owner");
  rec.created_at = text_of(el, "createdAt");
  const xml::Element* key_el = el.find_child("RSAKeyValue");
  if (key_el == nullptr) key_el = el.find_child("DSAKeyValue");
  if (key_el == nullptr) fail(Errc::invalid_argument, "KeyRecord holds no key");
  rec.pair = crypto::key_from_value_element(*key_el);
  rec.pair.owner = rec.owner;
  rec.pair.key_id = rec.key_id;
  return rec;
}

KeyStore::KeyStore(std::string path) : path_(std::move(path)) {
  std::ifstream in(path_);
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    KeyRecord rec = key_record_from_element(xml::parse_element(line));
    std::uint64_t id = 0;
    try {
      id = std::stoull(rec.key_id);
    } catch (const std::exception&) {
    }
    if (id >= next_id_) next_id_ = id + 1;
    records_.push_back(std::move(rec));
  }
}

KeyRecord KeyStore::issue(crypto::KeyKind kind, std::size_t bits,
                          const std::string& owner, RandomSource& rng) {
  if (owner.empty()) fail(Errc::invalid_argument, "owner must be non-empty");
  // Key generation happens outside the lock; only the id draw and the
  // append are serialized.
  std::string key_id;
  {
    std::lock_guard<std::mutex> lock(mu_);
    key_id = std::to_string(next_id_++);
  }
  KeyRecord rec;
  rec.key_id = key_id;
  rec.owner = owner;
  rec.created_at = now_utc();
  rec.pair = crypto::generate_keypair(kind, bits, owner, key_id, rng);

  std::lock_guard<std::mutex> lock(mu_);
  if (!path_.empty()) {
    std::ofstream out(path_, std::ios::app);
    if (!out) fail(Errc::io_error, "cannot append to key store: " + path_);
    out << xml::serialize_element(key_record_element(rec, true)) << '\n';
    out.flush();
    if (!out) fail(Errc::io_error, "write to key store failed: " + path_);
  }
  records_.push_back(rec);
  return rec;
}

std::optional<KeyRecord> KeyStore::find(const std::string& owner,
                                        std::optional<crypto::KeyKind> kind,
                                        std::optional<std::size_t> bits) const {
  std::lock_guard<std::mutex> lock(mu_);
  for (auto it = records_.rbegin(); it != records_.rend(); ++it) {
    if (it->owner != owner) continue;
    if (kind && it->pair.kind != *kind) continue;
    if (bits && it->pair.bits != *bits) continue;
    return *it;
  }
  return std::nullopt;
}

std::size_t KeyStore::size() const {
  std::lock_guard<std::mutex> lock(mu_);
  return records_.size();
}

struct Service::Impl {
  KeyStore* store;
  RandomSource* rng;
  httplib::Server server;
  std::thread thread;
  int port = 0;
  std::mutex rng_mu;  // the shared RandomSource is not thread-safe
};

Service::Service(KeyStore& store, RandomSource& rng) : impl_(new Impl) {
  impl_->store = &store;
  impl_->rng = &rng;

  impl_->server.Post("/keys", [this](const httplib::Request& req,
                                     httplib::Response& res) {
    try {
      xml::Element body = xml::parse_element(req.body);
      crypto::KeyKind kind = crypto::key_kind_from_name(text_of(body, "kind"));
      std::size_t bits = parse_bits(text_of(body, "bits"));
      std::string owner = text_of(body, "owner");
      KeyRecord rec;
      {
        std::lock_guard<std::mutex> lock(impl_->rng_mu);
        rec = impl_->store->issue(kind, bits, owner, *impl_->rng);
      }
      res.status = 201;
      res.set_content(xml::serialize_element(key_record_element(rec, true)),
                      "text/xml");
    } catch (const Error& err) {
      res.status = err.code() == Errc::unsupported_algorithm ? 422 : 400;
      res.set_content(xml::serialize_element(
                          xml::Element("Error").add_text(err.what())),
                      "text/xml");
    }
  });

  impl_->server.Get(R"(/keys/public/([^/]+))", [this](const httplib::Request& req,
                                                      httplib::Response& res) {
    std::optional<crypto::KeyKind> kind;
    std::optional<std::size_t> bits;
    try {
      if (req.has_param("kind")) {
        kind = crypto::key_kind_from_name(req.get_param_value("kind"));
      }
      if (req.has_param("bits")) bits = parse_bits(req.get_param_value("bits"));
    } catch (const Error& err) {
      res.status = 400;
      res.set_content(xml::serialize_element(
                          xml::Element("Error").add_text(err.what())),
                      "text/xml");
      return;
    }
    auto rec = impl_->store->find(req.matches[1], kind, bits);
    if (!rec) {
      res.status = 404;
      res.set_content(xml::serialize_element(
                          xml::Element("Error").add_text("no key for owner")),
                      "text/xml");
      return;
    }
    res.set_content(xml::serialize_element(crypto::key_value_element(
                        rec->pair.public_part(), false)),
                    "text/xml");
  });

  impl_->server.Get("/healthz", [](const httplib::Request&, httplib::Response& res) {
    res.set_content("ok", "text/plain");
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

}  // namespace mwss::idp
