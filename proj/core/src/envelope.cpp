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

#include "mwss/envelope.hpp"

#include <charconv>

#include "mwss/error.hpp"

namespace mwss {

namespace {

std::string qname(const std::string& prefix, std::string_view local) {
  return prefix.empty() ? std::string(local) : prefix + ":" + std::string(local);
}

std::int64_t parse_int(std::string_view text, std::string_view what) {
  std::size_t a = text.find_first_not_of(" \t\r\n");
  std::size_t b = text.find_last_not_of(" \t\r\n");
  if (a == std::string_view::npos) fail(Errc::protocol_error, std::string(what) + " is empty");
  std::string_view t = text.substr(a, b - a + 1);
  std::int64_t v = 0;
  auto [p, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
  if (ec != std::errc() || p != t.data() + t.size()) {
    fail(Errc::protocol_error, std::string(what) + " is not an integer");
  }
  return v;
}

xml::Element int_element(std::string_view name, std::int64_t value) {
  xml::Element el{std::string(name)};
  el.set_attr("xsi:type", "xsd:int");
  el.add_text(std::to_string(value));
  return el;
}

xml::Element string_element(std::string_view name, std::string value) {
  xml::Element el{std::string(name)};
  el.set_attr("xsi:type", "xsd:string");
  el.add_text(std::move(value));
  return el;
}

std::int64_t child_int(const xml::Element& parent, std::string_view name) {
  const xml::Element* el = parent.find_child(name);
  if (el == nullptr) fail(Errc::protocol_error, "missing element " + std::string(name));
  return parse_int(el->text_content(), name);
}

}  // namespace

Envelope make_envelope() {
  Envelope e;
  e.ns_bindings = {
      {"soapenv", std::string(kSoapEnvelopeNs)},
      {"xsd", std::string(kXsdNs)},
      {"xsi", std::string(kXsiNs)},
  };
  return e;
}

std::vector<std::string> ambient_prefixes(const Envelope& e) {
  std::vector<std::string> prefixes;
  prefixes.reserve(e.ns_bindings.size());
  for (const auto& [p, uri] : e.ns_bindings) prefixes.push_back(p);
  return prefixes;
}

std::string serialize(const Envelope& e) {
  if (e.body_children.empty()) fail(Errc::serialization_error, "envelope body has no child element");
  xml::Element root{qname(e.env_prefix, "Envelope")};
  for (const auto& [prefix, uri] : e.ns_bindings) {
    root.set_attr(prefix.empty() ? "xmlns" : "xmlns:" + prefix, uri);
  }
  if (!e.header_blocks.empty()) {
    xml::Element header{qname(e.env_prefix, "Header")};
    for (const auto& block : e.header_blocks) header.add_child(block);
    root.add_child(std::move(header));
  }
  xml::Element body{qname(e.env_prefix, "Body")};
  for (const auto& child : e.body_children) body.add_child(child);
  root.add_child(std::move(body));
  return xml::serialize_element(root);
}

Envelope parse(std::string_view octets) {
  xml::Element root = xml::parse_element(octets);
  if (xml::local_name(root.name) != "Envelope") {
    fail(Errc::protocol_error, "document element is not a SOAP Envelope");
  }
  Envelope e;
  e.env_prefix = std::string(xml::prefix_of(root.name));
  for (const auto& [k, v] : root.attrs) {
    if (k == "xmlns") {
      e.ns_bindings.emplace_back("", v);
    } else if (k.rfind("xmlns:", 0) == 0) {
      e.ns_bindings.emplace_back(k.substr(6), v);
    }
  }
  const xml::Element* body = nullptr;
  for (const auto& n : root.children) {
    if (!n.is_element()) continue;
    auto local = xml::local_name(n.element().name);
    if (local == "Header") {
      for (const auto& h : n.element().children) {
        if (h.is_element()) e.header_blocks.push_back(h.element());
      }
    } else if (local == "Body") {
      if (body != nullptr) fail(Errc::protocol_error, "multiple Body elements");
      body = &n.element();
    }
  }
  if (body == nullptr) fail(Errc::protocol_error, "envelope has no Body");
  for (const auto& c : body->children) {
    if (c.is_element()) e.body_children.push_back(c.element());
  }
  if (e.body_children.empty()) fail(Errc::protocol_error, "envelope Body has no child element");
  return e;
}

std::size_t measure(const Envelope& e) { return serialize(e).size(); }

Envelope build_gps_request(int size_kb) {
  if (size_kb < 1) fail(Errc::invalid_argument, "responseSize must be at least 1 KB");
  Envelope e = make_envelope();
  xml::Element provider{"GPSProvider"};
  provider.set_attr("soapenv:encodingStyle", std::string(kSoapEncodingNs));
  provider.add_child(int_element("responseSize", size_kb));
  e.body_children.push_back(std::move(provider));
  return e;
}

int read_gps_request(const Envelope& e) {
  if (e.body_children.size() != 1 || xml::local_name(e.body_children[0].name) != "GPSProvider") {
    fail(Errc::unknown_service, "request body is not a GPSProvider invocation");
  }
  std::int64_t kb = child_int(e.body_children[0], "responseSize");
  if (kb < 1) fail(Errc::invalid_argument, "responseSize must be at least 1 KB");
  return static_cast<int>(kb);
}

namespace {

Envelope response_envelope(const GpsFix& fix, std::int64_t request_id, const std::string& padding) {
  Envelope e = make_envelope();
  xml::Element provider{"GPSProvider"};
  provider.set_attr("xmlns", "ssn:SSNServer");
  xml::Element result{"result"};
  result.add_child(int_element("Longitude", fix.longitude));
  result.add_child(int_element("Latitude", fix.latitude));
  result.add_child(int_element("Altitude", fix.altitude));
  result.add_child(int_element("Speed", fix.speed));
  result.add_child(int_element("Status", fix.status));
  result.add_child(string_element("Comment", fix.comment));
  provider.add_child(std::move(result));
  provider.add_child(int_element("Request-ID", request_id));
  provider.add_child(string_element("bodyPadding", padding));
  e.body_children.push_back(std::move(provider));
  return e;
}

}  // namespace

GpsResponseEnvelope build_gps_response(const GpsFix& fix, std::int64_t request_id, int target_kb) {
  if (target_kb < 1) fail(Errc::invalid_argument, "target size must be at least 1 KB");
  const std::size_t target = static_cast<std::size_t>(target_kb) * 1024;
  GpsResponseEnvelope out;
  out.payload.fix = fix;
  out.payload.request_id = request_id;
  // The serializer writes every element as <a>...</a>, so each padding byte
  // grows the message by exactly one byte and any size >= the empty-padding
  // size is reachable.
  out.envelope = response_envelope(fix, request_id, "");
  std::size_t base = measure(out.envelope);
  if (base > target) {
    out.payload.oversize = true;
    return out;
  }
  out.payload.body_padding.assign(target - base, 'x');
  if (!out.payload.body_padding.empty()) {
    out.envelope = response_envelope(fix, request_id, out.payload.body_padding);
  }
  return out;
}

GpsResponse read_gps_response(const Envelope& e) {
  if (e.body_children.size() != 1 || xml::local_name(e.body_children[0].name) != "GPSProvider") {
    fail(Errc::protocol_error, "response body is not a GPSProvider result");
  }
  const xml::Element& provider = e.body_children[0];
  const xml::Element* result = provider.find_child("result");
  if (result == nullptr) fail(Errc::protocol_error, "missing result element");
  GpsResponse r;
  r.fix.longitude = child_int(*result, "Longitude");
  r.fix.latitude = child_int(*result, "Latitude");
  r.fix.altitude = child_int(*result, "Altitude");
  r.fix.speed = child_int(*result, "Speed");
  r.fix.status = child_int(*result, "Status");
  const xml::Element* comment = result->find_child("Comment");
  if (comment == nullptr) fail(Errc::protocol_error, "missing Comment element");
  r.fix.comment = comment->text_content();
  r.request_id = child_int(provider, "Request-ID");
  const xml::Element* padding = provider.find_child("bodyPadding");
  if (padding == nullptr) fail(Errc::protocol_error, "missing bodyPadding element");
  r.body_padding = padding->text_content();
  return r;
}

bool is_fault(const Envelope& e) {
  return e.body_children.size() == 1 && xml::local_name(e.body_children[0].name) == "Fault";
}

Envelope build_fault(std::string_view faultcode, std::string_view faultstring) {
  Envelope e = make_envelope();
  xml::Element fault{qname(e.env_prefix, "Fault")};
  xml::Element code{"faultcode"};
  code.add_text(std::string(faultcode));
  xml::Element text{"faultstring"};
  text.add_text(std::string(faultstring));
  fault.add_child(std::move(code));
  fault.add_child(std::move(text));
  e.body_children.push_back(std::move(fault));
  return e;
}

std::string fault_string(const Envelope& e) {
  if (!is_fault(e)) return {};
  const xml::Element* fs = e.body_children[0].find_child("faultstring");
  return fs != nullptr ? fs->text_content() : std::string{};
}

}  // namespace mwss
