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

#ifndef MWSS_XML_HPP
#define MWSS_XML_HPP

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

namespace mwss::xml {

// Minimal element tree with a fully deterministic serializer: UTF-8, no
// XML declaration, no insignificant whitespace, attributes in stored order,
// every element written as <a>...</a> (never self-closed). Two structurally
// equal trees always serialize to identical octets, which is what message
// size accounting and signature digests rely on.

struct Node;

using Attribute = std::pair<std::string, std::string>;

struct Element {
  std::string name;  // optionally prefixed, "wsse:Security"
  std::vector<Attribute> attrs;
  std::vector<Node> children;

  Element() = default;
  explicit Element(std::string n) : name(std::move(n)) {}

  Element& set_attr(std::string key, std::string value);
  const std::string* find_attr(std::string_view key) const;

  Element& add_child(Element child);
  Element& add_text(std::string text);  // empty strings are dropped

  // Concatenated text of direct text children.
  std::string text_content() const;

  // First direct child element with the given local name (prefix ignored).
  Element* find_child(std::string_view local);
  const Element* find_child(std::string_view local) const;

  // Depth-first search of this subtree, self excluded.
  Element* find_descendant(std::string_view local);
  const Element* find_descendant(std::string_view local) const;

  bool operator==(const Element&) const = default;
};

struct Node {
  std::variant<Element, std::string> value;

  bool is_element() const;
  bool is_text() const;
  Element& element();
  const Element& element() const;
  const std::string& text() const;

  bool operator==(const Node&) const = default;
};

inline std::string_view local_name(std::string_view qname) {
  auto pos = qname.rfind(':');
  return pos == std::string_view::npos ? qname : qname.substr(pos + 1);
}

inline std::string_view prefix_of(std::string_view qname) {
  auto pos = qname.rfind(':');
  return pos == std::string_view::npos ? std::string_view{} : qname.substr(0, pos);
}

// Serializes one element subtree. `ambient_prefixes` lists namespace prefixes
// bound by enclosing elements; any other prefix must be declared within the
// fragment or serialization fails.
std::string serialize_element(const Element& root,
                              const std::vector<std::string>& ambient_prefixes = {});

// Parses exactly one element (leading XML declaration, comments and PIs are
// skipped; trailing garbage is an error).
Element parse_element(std::string_view octets);

std::string escape_text(std::string_view raw);
std::string escape_attr(std::string_view raw);

}  // namespace mwss::xml

#endif  // MWSS_XML_HPP
