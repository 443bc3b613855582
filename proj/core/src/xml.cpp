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

#include "mwss/xml.hpp"

#include <algorithm>
#include <cctype>

#include "mwss/error.hpp"

namespace mwss::xml {

bool Node::is_element() const { return std::holds_alternative<Element>(value); }
bool Node::is_text() const { return std::holds_alternative<std::string>(value); }
Element& Node::element() { return std::get<Element>(value); }
const Element& Node::element() const { return std::get<Element>(value); }
const std::string& Node::text() const { return std::get<std::string>(value); }

Element& Element::set_attr(std::string key, std::string value) {
  for (auto& [k, v] : attrs) {
    if (k == key) {
      v = std::move(value);
      return *this;
    }
  }
  attrs.emplace_back(std::move(key), std::move(value));
  return *this;
}

const std::string* Element::find_attr(std::string_view key) const {
  for (const auto& [k, v] : attrs) {
    if (k == key) return &v;
  }
  return nullptr;
}

Element& Element::add_child(Element child) {
  children.push_back(Node{std::move(child)});
  return *this;
}

Element& Element::add_text(std::string text) {
  if (!text.empty()) children.push_back(Node{std::move(text)});
  return *this;
}

std::string Element::text_content() const {
  std::string out;
  for (const auto& n : children) {
    if (n.is_text()) out += n.text();
  }
  return out;
}

Element* Element::find_child(std::string_view local) {
  for (auto& n : children) {
    if (n.is_element() && local_name(n.element().name) == local) return &n.element();
  }
  return nullptr;
}

const Element* Element::find_child(std::string_view local) const {
  return const_cast<Element*>(this)->find_child(local);
}

Element* Element::find_descendant(std::string_view local) {
  for (auto& n : children) {
    if (!n.is_element()) continue;
    if (local_name(n.element().name) == local) return &n.element();
    if (Element* hit = n.element().find_descendant(local)) return hit;
  }
  return nullptr;
}

const Element* Element::find_descendant(std::string_view local) const {
  return const_cast<Element*>(this)->find_descendant(local);
}

std::string escape_text(std::string_view raw) {
  std::string out;
  out.reserve(raw.size());
  for (char c : raw) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '\r': out += "&#xD;"; break;
      default: out.push_back(c);
    }
  }
  return out;
}

std::string escape_attr(std::string_view raw) {
  std::string out;
  out.reserve(raw.size());
  for (char c : raw) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '"': out += "&quot;"; break;
      case '\t': out += "&#x9;"; break;
      case '\n': out += "&#xA;"; break;
      case '\r': out += "&#xD;"; break;
      default: out.push_back(c);
    }
  }
  return out;
}

namespace {

bool valid_name(std::string_view name) {
  if (name.empty()) return false;
  auto name_start = [](unsigned char c) {
    return std::isalpha(c) || c == '_' || c >= 0x80;
  };
  auto name_char = [&](unsigned char c) {
    return name_start(c) || std::isdigit(c) || c == '-' || c == '.';
  };
  // at most one ':' separating a non-empty prefix and local part
  auto colon = name.find(':');
  if (colon != std::string_view::npos) {
    if (colon == 0 || colon + 1 == name.size()) return false;
    if (name.find(':', colon + 1) != std::string_view::npos) return false;
  }
  for (std::size_t i = 0; i < name.size(); ++i) {
    unsigned char c = static_cast<unsigned char>(name[i]);
    if (c == ':') continue;
    if (i == 0 ? !name_start(c) : !name_char(c)) return false;
  }
  return true;
}

class Writer {
 public:
  explicit Writer(const std::vector<std::string>& ambient) : scope_(ambient) {}

  std::string take() { return std::move(out_); }

  void write(const Element& el) {
    if (!valid_name(el.name)) fail(Errc::serialization_error, "bad element name '" + el.name + "'");
    std::size_t scope_mark = scope_.size();
    for (const auto& [k, v] : el.attrs) {
      if (k == "xmlns") {
        scope_.emplace_back("");
      } else if (k.rfind("xmlns:", 0) == 0) {
        scope_.push_back(k.substr(6));
      }
    }
    check_prefix(el.name);
    out_.push_back('<');
    out_ += el.name;
    for (const auto& [k, v] : el.attrs) {
      if (!valid_name(k) && k != "xmlns") fail(Errc::serialization_error, "bad attribute name '" + k + "'");
      if (k != "xmlns" && k.rfind("xmlns:", 0) != 0 && k.rfind("xml:", 0) != 0) check_prefix(k);
      out_.push_back(' ');
      out_ += k;
      out_ += "=\"";
      out_ += escape_attr(v);
      out_.push_back('"');
    }
    out_.push_back('>');
    for (const auto& n : el.children) {
      if (n.is_text()) {
        out_ += escape_text(n.text());
      } else {
        write(n.element());
      }
    }
    out_ += "</";
    out_ += el.name;
    out_.push_back('>');
    scope_.resize(scope_mark);
  }

 private:
  void check_prefix(std::string_view qname) {
    auto p = prefix_of(qname);
    if (p.empty() || p == "xml" || p == "xmlns") return;
    if (std::find(scope_.begin(), scope_.end(), p) == scope_.end()) {
      fail(Errc::serialization_error, "unbound namespace prefix '" + std::string(p) + "'");
    }
  }

  std::string out_;
  std::vector<std::string> scope_;
};

class Parser {
 public:
  explicit Parser(std::string_view in) : in_(in) {}

  Element parse_document() {
    skip_prolog();
    Element root = parse_one();
    skip_misc();
    if (pos_ != in_.size()) fail(Errc::parse_error, "trailing content after document element");
    return root;
  }

 private:
  [[noreturn]] void err(const std::string& what) {
    fail(Errc::parse_error, what + " at offset " + std::to_string(pos_));
  }

  bool starts_with(std::string_view s) const { return in_.substr(pos_, s.size()) == s; }
  char peek() const { return pos_ < in_.size() ? in_[pos_] : '\0'; }
  bool eof() const { return pos_ >= in_.size(); }

  void expect(char c) {
    if (eof() || in_[pos_] != c) err(std::string("expected '") + c + "'");
    ++pos_;
  }

  void skip_ws() {
    while (!eof() && (in_[pos_] == ' ' || in_[pos_] == '\t' || in_[pos_] == '\n' || in_[pos_] == '\r')) ++pos_;
  }

  void skip_prolog() {
    skip_ws();
    if (starts_with("<?xml")) {
      auto end = in_.find("?>", pos_);
      if (end == std::string_view::npos) err("unterminated XML declaration");
      pos_ = end + 2;
    }
    skip_misc();
    if (starts_with("<!DOCTYPE")) err("DOCTYPE not accepted");
  }

  void skip_misc() {
    for (;;) {
      skip_ws();
      if (starts_with("<!--")) {
        auto end = in_.find("-->", pos_ + 4);
        if (end == std::string_view::npos) err("unterminated comment");
        pos_ = end + 3;
      } else if (starts_with("<?")) {
        auto end = in_.find("?>", pos_ + 2);
        if (end == std::string_view::npos) err("unterminated processing instruction");
        pos_ = end + 2;
      } else {
        return;
      }
    }
  }

  std::string parse_name() {
    std::size_t start = pos_;
    while (!eof()) {
      char c = in_[pos_];
      if (c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '>' || c == '/' || c == '=') break;
      ++pos_;
    }
    if (pos_ == start) err("expected name");
    std::string name(in_.substr(start, pos_ - start));
    if (!valid_name(name)) err("invalid name '" + name + "'");
    return name;
  }

  std::string parse_attr_value() {
    char quote = peek();
    if (quote != '"' && quote != '\'') err("expected quoted attribute value");
    ++pos_;
    std::string out;
    while (!eof() && in_[pos_] != quote) {
      char c = in_[pos_];
      if (c == '<') err("'<' in attribute value");
      if (c == '&') {
        out += parse_entity();
      } else {
        out.push_back(c);
        ++pos_;
      }
    }
    if (eof()) err("unterminated attribute value");
    ++pos_;
    return out;
  }

  std::string parse_entity() {
    // positioned on '&'
    auto end = in_.find(';', pos_);
    if (end == std::string_view::npos || end - pos_ > 12) err("malformed entity");
    std::string_view body = in_.substr(pos_ + 1, end - pos_ - 1);
    pos_ = end + 1;
    if (body == "amp") return "&";
    if (body == "lt") return "<";
    if (body == "gt") return ">";
    if (body == "quot") return "\"";
    if (body == "apos") return "'";
    if (!body.empty() && body[0] == '#') {
      unsigned long code = 0;
      try {
        code = (body.size() > 1 && (body[1] == 'x' || body[1] == 'X'))
                   ? std::stoul(std::string(body.substr(2)), nullptr, 16)
                   : std::stoul(std::string(body.substr(1)), nullptr, 10);
      } catch (const std::exception&) {
        err("malformed character reference");
      }
      if (code == 0 || code > 0x10FFFF) err("character reference out of range");
      // encode as UTF-8
      std::string out;
      if (code < 0x80) {
        out.push_back(static_cast<char>(code));
      } else if (code < 0x800) {
        out.push_back(static_cast<char>(0xC0 | (code >> 6)));
        out.push_back(static_cast<char>(0x80 | (code & 0x3F)));
      } else if (code < 0x10000) {
        out.push_back(static_cast<char>(0xE0 | (code >> 12)));
        out.push_back(static_cast<char>(0x80 | ((code >> 6) & 0x3F)));
        out.push_back(static_cast<char>(0x80 | (code & 0x3F)));
      } else {
        out.push_back(static_cast<char>(0xF0 | (code >> 18)));
        out.push_back(static_cast<char>(0x80 | ((code >> 12) & 0x3F)));
        out.push_back(static_cast<char>(0x80 | ((code >> 6) & 0x3F)));
        out.push_back(static_cast<char>(0x80 | (code & 0x3F)));
      }
      return out;
    }
    err("unknown entity '&" + std::string(body) + ";'");
  }

  Element parse_one() {
    expect('<');
    Element el;
    el.name = parse_name();
    for (;;) {
      skip_ws();
      if (eof()) err("unterminated start tag");
      if (peek() == '>') {
        ++pos_;
        parse_content(el);
        return el;
      }
      if (peek() == '/') {
        ++pos_;
        expect('>');
        return el;  // empty element
      }
      std::string key = parse_name();
      if (el.find_attr(key) != nullptr) err("duplicate attribute '" + key + "'");
      skip_ws();
      expect('=');
      skip_ws();
      el.attrs.emplace_back(std::move(key), parse_attr_value());
    }
  }

  void parse_content(Element& el) {
    std::string text;
    bool has_child_element = false;
    auto flush_text = [&]() {
      if (!text.empty()) {
        el.children.push_back(Node{std::move(text)});
        text.clear();
      }
    };
    for (;;) {
      if (eof()) err("unterminated element '" + el.name + "'");
      if (starts_with("</")) {
        pos_ += 2;
        std::string name = parse_name();
        skip_ws();
        expect('>');
        if (name != el.name) err("mismatched end tag '" + name + "'");
        flush_text();
        normalize_content(el, has_child_element);
        return;
      }
      if (starts_with("<!--")) {
        auto end = in_.find("-->", pos_ + 4);
        if (end == std::string_view::npos) err("unterminated comment");
        pos_ = end + 3;
        continue;
      }
      if (starts_with("<![CDATA[")) {
        auto end = in_.find("]]>", pos_ + 9);
        if (end == std::string_view::npos) err("unterminated CDATA section");
        text += in_.substr(pos_ + 9, end - pos_ - 9);
        pos_ = end + 3;
        continue;
      }
      if (starts_with("<?")) {
        auto end = in_.find("?>", pos_ + 2);
        if (end == std::string_view::npos) err("unterminated processing instruction");
        pos_ = end + 2;
        continue;
      }
      if (peek() == '<') {
        flush_text();
        el.children.push_back(Node{parse_one()});
        has_child_element = true;
        continue;
      }
      char c = in_[pos_];
      if (c == '&') {
        text += parse_entity();
      } else {
        text.push_back(c);
        ++pos_;
      }
    }
  }

  // In mixed content, whitespace-only text is layout noise and is dropped.
  // Text-only elements keep their text verbatim.
  static void normalize_content(Element& el, bool has_child_element) {
    if (!has_child_element) return;
    auto ws_only = [](const std::string& s) {
      return std::all_of(s.begin(), s.end(), [](char c) {
        return c == ' ' || c == '\t' || c == '\n' || c == '\r';
      });
    };
    std::erase_if(el.children, [&](const Node& n) { return n.is_text() && ws_only(n.text()); });
  }

  std::string_view in_;
  std::size_t pos_ = 0;
};

}  // namespace

std::string serialize_element(const Element& root, const std::vector<std::string>& ambient_prefixes) {
  Writer w(ambient_prefixes);
  w.write(root);
  return w.take();
}

Element parse_element(std::string_view octets) {
  Parser p(octets);
  return p.parse_document();
}

}  // namespace mwss::xml
