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

#ifndef MWSS_ENVELOPE_HPP
#define MWSS_ENVELOPE_HPP

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "mwss/xml.hpp"

namespace mwss {

// SOAP 1.1 style envelope: optional header blocks plus exactly one body with
// at least one child element. Wire form is UTF-8 without an XML declaration;
// the serializer is deterministic so measured sizes are exact and repeatable.
struct Envelope {
  std::string env_prefix = "soapenv";
  std::vector<std::pair<std::string, std::string>> ns_bindings;  // prefix -> URI, emitted in order
  std::vector<xml::Element> header_blocks;
  std::vector<xml::Element> body_children;

  bool operator==(const Envelope&) const = default;
};

inline constexpr std::string_view kSoapEnvelopeNs = "http://schemas.xmlsoap.org/soap/envelope/";
inline constexpr std::string_view kSoapEncodingNs = "http://schemas.xmlsoap.org/soap/encoding/";
inline constexpr std::string_view kXsdNs = "http://www.w3.org/2001/XMLSchema";
inline constexpr std::string_view kXsiNs = "http://www.w3.org/2001/XMLSchema-instance";

// Fresh envelope with the standard soapenv/xsd/xsi bindings and no body yet.
Envelope make_envelope();

std::string serialize(const Envelope& e);
Envelope parse(std::string_view octets);
std::size_t measure(const Envelope& e);

// Namespace prefixes visible to elements inside this envelope.
std::vector<std::string> ambient_prefixes(const Envelope& e);

// GPS location provisioning service payloads -----------------------------

struct GpsFix {
  std::int64_t longitude = 606428;
  std::int64_t latitude = 5079068;
  std::int64_t altitude = 22;
  std::int64_t speed = 444;
  std::int64_t status = 1;
  std::string comment;

  bool operator==(const GpsFix&) const = default;
};

struct GpsResponse {
  GpsFix fix;
  std::int64_t request_id = 0;
  std::string body_padding;  // a run of 'x' characters sized to hit the target
  bool oversize = false;     // fixed content alone exceeded the target size
};

// Request whose <responseSize> asks for a response of size_kb * 1024 bytes.
Envelope build_gps_request(int size_kb);
int read_gps_request(const Envelope& e);

struct GpsResponseEnvelope {
  Envelope envelope;
  GpsResponse payload;
};

// Response padded (via bodyPadding) so the unsecured serialized envelope is
// exactly target_kb * 1024 bytes; oversize is flagged when that cannot be met.
GpsResponseEnvelope build_gps_response(const GpsFix& fix, std::int64_t request_id, int target_kb);
GpsResponse read_gps_response(const Envelope& e);

bool is_fault(const Envelope& e);
Envelope build_fault(std::string_view faultcode, std::string_view faultstring);
std::string fault_string(const Envelope& e);

}  // namespace mwss

#endif  // MWSS_ENVELOPE_HPP
