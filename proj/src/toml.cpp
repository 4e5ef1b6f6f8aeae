#include "picardium/toml.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

namespace picardium {

long TomlValue::as_int() const {
  if (kind != Kind::Int) throw SchemaError("expected an integer value");
  return i;
}
const std::string& TomlValue::as_str() const {
  if (kind != Kind::Str) throw SchemaError("expected a string value");
  return s;
}
bool TomlValue::as_bool() const {
  if (kind != Kind::Bool) throw SchemaError("expected a boolean value");
  return b;
}
const std::vector<TomlValue>& TomlValue::as_array() const {
  if (kind != Kind::Array) throw SchemaError("expected an array value");
  return arr;
}

const TomlValue& TomlTable::get(const std::string& key) const {
  auto it = values.find(key);
  if (it == values.end()) throw SchemaError("missing required key '" + key + "'");
  return it->second;
}

namespace {

struct Cursor {
  const std::string& text;
  size_t pos = 0;
  int line = 1;

  bool eof() const { return pos >= text.size(); }
  char peek() const { return text[pos]; }
  char take() {
    char c = text[pos++];
    if (c == '\n') ++line;
    return c;
  }
  void skip_ws_inline() {
    while (!eof() && (peek() == ' ' || peek() == '\t')) ++pos;
  }
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError("line " + std::to_string(line) + ": " + what);
  }
};

void skip_to_eol(Cursor& c) {
  while (!c.eof() && c.peek() != '\n') c.take();
  if (!c.eof()) c.take();
}

// a line is blank or a comment when nothing but whitespace precedes # / EOL
bool consume_blank_or_comment(Cursor& c) {
  size_t save = c.pos;
  int save_line = c.line;
  c.skip_ws_inline();
  if (c.eof()) return true;
  if (c.peek() == '\n') {
    c.take();
    return true;
  }
  if (c.peek() == '#') {
    skip_to_eol(c);
    return true;
  }
  c.pos = save;
  c.line = save_line;
  return false;
}

std::string parse_key(Cursor& c) {
  c.skip_ws_inline();
  if (c.eof()) c.fail("expected a key");
  if (c.peek() == '"') {
    c.take();
    std::string k;
    while (!c.eof() && c.peek() != '"') {
      if (c.peek() == '\n') c.fail("unterminated quoted key");
      k.push_back(c.take());
    }
    if (c.eof()) c.fail("unterminated quoted key");
    c.take();
    return k;
  }
  std::string k;
  while (!c.eof() && (std::isalnum(static_cast<unsigned char>(c.peek())) || c.peek() == '_' ||
                      c.peek() == '-')) {
    k.push_back(c.take());
  }
  if (k.empty()) c.fail("expected a key");
  return k;
}

TomlValue parse_value(Cursor& c);

TomlValue parse_array(Cursor& c) {
  TomlValue v;
  v.kind = TomlValue::Kind::Array;
  c.take();  // '['
  for (;;) {
    // arrays may span lines
    while (!c.eof() && (c.peek() == ' ' || c.peek() == '\t' || c.peek() == '\n' ||
                        c.peek() == '\r')) {
      c.take();
    }
    if (!c.eof() && c.peek() == '#') {
      skip_to_eol(c);
      continue;
    }
    if (c.eof()) c.fail("unterminated array");
    if (c.peek() == ']') {
      c.take();
      return v;
    }
    v.arr.push_back(parse_value(c));
    while (!c.eof() && (c.peek() == ' ' || c.peek() == '\t' || c.peek() == '\n' ||
                        c.peek() == '\r')) {
      c.take();
    }
    if (c.eof()) c.fail("unterminated array");
    if (c.peek() == ',') {
      c.take();
      continue;
    }
    if (c.peek() == ']') {
      c.take();
      return v;
    }
    c.fail("expected ',' or ']' in array");
  }
}

TomlValue parse_value(Cursor& c) {
  c.skip_ws_inline();
  if (c.eof()) c.fail("expected a value");
  char ch = c.peek();
  if (ch == '[') return parse_array(c);
  if (ch == '"') {
    c.take();
    TomlValue v;
    v.kind = TomlValue::Kind::Str;
    while (!c.eof() && c.peek() != '"') {
      if (c.peek() == '\n') c.fail("unterminated string");
      v.s.push_back(c.take());
    }
    if (c.eof()) c.fail("unterminated string");
    c.take();
    return v;
  }
  if (ch == 't' || ch == 'f') {
    std::string word;
    while (!c.eof() && std::isalpha(static_cast<unsigned char>(c.peek()))) word.push_back(c.take());
    TomlValue v;
    v.kind = TomlValue::Kind::Bool;
    if (word == "true")
      v.b = true;
    else if (word == "false")
      v.b = false;
    else
      c.fail("unrecognized value '" + word + "'");
    return v;
  }
  if (ch == '-' || ch == '+' || std::isdigit(static_cast<unsigned char>(ch))) {
    std::string num;
    if (ch == '-' || ch == '+') num.push_back(c.take());
    while (!c.eof() && std::isdigit(static_cast<unsigned char>(c.peek()))) num.push_back(c.take());
    if (num.empty() || num == "-" || num == "+") c.fail("malformed integer");
    TomlValue v;
    v.kind = TomlValue::Kind::Int;
    try {
      v.i = std::stol(num);
    } catch (const std::exception&) {
      c.fail("integer out of range: " + num);
    }
    return v;
  }
  c.fail(std::string("unexpected character '") + ch + "' in value");
}

void expect_eol(Cursor& c) {
  c.skip_ws_inline();
  if (c.eof()) return;
  if (c.peek() == '#') {
    skip_to_eol(c);
    return;
  }
  if (c.peek() == '\n' || c.peek() == '\r') {
    skip_to_eol(c);
    return;
  }
  c.fail("trailing content after value");
}

}  // namespace

TomlTable parse_toml(const std::string& text) {
  TomlTable out;
  Cursor c{text};
  std::string section;  // empty = top level
  while (!c.eof()) {
    if (consume_blank_or_comment(c)) continue;
    c.skip_ws_inline();
    if (c.peek() == '[') {
      c.take();
      std::string name = parse_key(c);
      c.skip_ws_inline();
      if (c.eof() || c.peek() != ']') c.fail("expected ']' after section name");
      c.take();
      expect_eol(c);
      section = name;
      out.sections[section];  // a section may legitimately stay empty
      continue;
    }
    std::string key = parse_key(c);
    c.skip_ws_inline();
    if (c.eof() || c.peek() != '=') c.fail("expected '=' after key '" + key + "'");
    c.take();
    TomlValue v = parse_value(c);
    expect_eol(c);
    auto& dst = section.empty() ? out.values : out.sections[section];
    if (!dst.emplace(key, std::move(v)).second) c.fail("duplicate key '" + key + "'");
  }
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot read file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace picardium
