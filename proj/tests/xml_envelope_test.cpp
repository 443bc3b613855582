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

#include <string>

#include "mwss/envelope.hpp"
#include "mwss/error.hpp"
#include "mwss/xml.hpp"

using namespace mwss;

TEST_CASE("element serialization is deterministic and order preserving") {
  xml::Element root("a");
  root.set_attr("x", "1");
  root.set_attr("y", "2");
  root.add_child(xml::Element("b").add_text("t"));
  root.add_child(xml::Element("c"));

  const std::string once = xml::serialize_element(root);
  CHECK(once == "<a x=\"1\" y=\"2\"><b>t</b><c></c></a>");
  CHECK(xml::serialize_element(root) == once);

  // Attribute order matters on the wire; two insert orders differ.
  xml::Element other("a");
  other.set_attr("y", "2");
  other.set_attr("x", "1");
  CHECK(xml::serialize_element(other) != once);
}

TEST_CASE("escaping round-trips markup characters") {
  xml::Element root("r");
  root.set_attr("q", "a\"b<c>&d");
  root.add_child(xml::Element("t").add_text("x < y && z > \"w\""));
  const std::string wire = xml::serialize_element(root);
  const xml::Element back = xml::parse_element(wire);
  CHECK(back == root);
  CHECK(*back.find_attr("q") == "a\"b<c>&d");
  CHECK(back.find_child("t")->text_content() == "x < y && z > \"w\"");
}

TEST_CASE("parser rejects malformed documents") {
  CHECK_THROWS_AS(xml::parse_element("<a><b></a></b>"), Error);
  CHECK_THROWS_AS(xml::parse_element("<a>"), Error);
  CHECK_THROWS_AS(xml::parse_element("<a></a><b></b>"), Error);
  CHECK_THROWS_AS(xml::parse_element("<a></a>junk"), Error);
  CHECK_THROWS_AS(xml::parse_element("no markup"), Error);
  CHECK_THROWS_AS(xml::parse_element("<a attr=novalue></a>"), Error);
  CHECK_THROWS_AS(xml::parse_element("<a>&bogus;</a>"), Error);
  CHECK_THROWS_AS(xml::parse_element(""), Error);
}

TEST_CASE("parser skips declarations and comments") {
  const xml::Element el = xml::parse_element(
      "<?xml version=\"1.0\"?><!-- note --><a><b>1</b></a>");
  CHECK(el.name == "a");
  CHECK(el.find_child("b")->text_content() == "1");
}

TEST_CASE("lookup is by local name") {
  xml::Element root("ns:root");
  root.add_child(xml::Element("p:first"));
  root.add_child(
      xml::Element("q:second").add_child(xml::Element("deep").add_text("v")));

  CHECK(root.find_child("first") != nullptr);
  CHECK(root.find_child("second") != nullptr);
  CHECK(root.find_child("missing") == nullptr);
  CHECK(root.find_descendant("deep")->text_content() == "v");
  CHECK(xml::local_name("q:second") == "second");
  CHECK(xml::prefix_of("q:second") == "q");
  CHECK(xml::prefix_of("second").empty());
}

TEST_CASE("undeclared prefixes fail serialization unless ambient") {
  xml::Element el("w:item");
  CHECK_THROWS_AS(xml::serialize_element(el), Error);
  CHECK_NOTHROW(xml::serialize_element(el, {"w"}));
  el.set_attr("xmlns:w", "urn:w");
  CHECK_NOTHROW(xml::serialize_element(el));
}

TEST_CASE("envelope round-trips through the wire form") {
  Envelope e = make_envelope();
  xml::Element body("GPSProvider");
  body.add_child(xml::Element("responseSize").add_text("4"));
  e.body_children.push_back(body);

  const std::string wire = serialize(e);
  CHECK(measure(e) == wire.size());
  const Envelope back = parse(wire);
  CHECK(back == e);
  CHECK(serialize(back) == wire);
}

TEST_CASE("gps request carries the response size") {
  for (const int kb : {1, 2, 5, 10}) {
    const Envelope e = build_gps_request(kb);
    CHECK(read_gps_request(e) == kb);
    const Envelope back = parse(serialize(e));
    CHECK(read_gps_request(back) == kb);
  }
}

TEST_CASE("gps request validation") {
  Envelope e = build_gps_request(1);
  e.body_children[0].name = "DirService";
  CHECK_THROWS_WITH_AS(read_gps_request(e), doctest::Contains("unknown"), Error);

  Envelope no_size = build_gps_request(1);
  no_size.body_children[0].children.clear();
  CHECK_THROWS_AS(read_gps_request(no_size), Error);

  Envelope bad_size = build_gps_request(1);
  bad_size.body_children[0].find_child("responseSize")->children.clear();
  bad_size.body_children[0].find_child("responseSize")->add_text("many");
  CHECK_THROWS_AS(read_gps_request(bad_size), Error);
}

TEST_CASE("gps response pads to the exact target size") {
  const GpsFix fix;
  for (const int kb : {1, 2, 5, 10}) {
    const GpsResponseEnvelope r = build_gps_response(fix, 17, kb);
    CHECK_FALSE(r.payload.oversize);
    CHECK(serialize(r.envelope).size() == static_cast<std::size_t>(kb) * 1024);

    const GpsResponse read = read_gps_response(r.envelope);
    CHECK(read.fix == fix);
    CHECK(read.request_id == 17);
  }
}

TEST_CASE("gps response keeps the fix through a parse cycle") {
  GpsFix fix;
  fix.longitude = -123456;
  fix.speed = 0;
  fix.comment = "under a bridge";
  const GpsResponseEnvelope r = build_gps_response(fix, 3, 2);
  const GpsResponse read = read_gps_response(parse(serialize(r.envelope)));
  CHECK(read.fix == fix);
}

TEST_CASE("faults carry code and string and nothing else") {
  const Envelope f = build_fault("soapenv:Client", "request does not parse");
  CHECK(is_fault(f));
  CHECK_FALSE(is_fault(build_gps_request(1)));
  CHECK(fault_string(f) == "request does not parse");
  const xml::Element* code = f.body_children[0].find_child("faultcode");
  REQUIRE(code != nullptr);
  CHECK(code->text_content() == "soapenv:Client");

  const std::string wire = serialize(f);
  CHECK(is_fault(parse(wire)));
  CHECK(wire.find("faultcode") != std::string::npos);
  CHECK(wire.find("faultstring") != std::string::npos);
}
