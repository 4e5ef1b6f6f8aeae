#pragma once
// Parser for the TOML subset used by the input files: top-level `key = value`
// pairs, one level of `[section]` tables, integers, quoted strings, booleans,
// and (nested) arrays of integers.  Strict: anything outside the subset is a
// ParseError with a line number.

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace picardium {

struct ParseError : std::runtime_error {
  explicit ParseError(const std::string& w) : std::runtime_error("ParseError: " + w) {}
};

// input parsed fine but does not describe a valid object (bad group table,
// missing field, value out of range, ...)
struct SchemaError : std::runtime_error {
  explicit SchemaError(const std::string& w) : std::runtime_error("SchemaError: " + w) {}
};

struct TomlValue {
  enum class Kind { Int, Str, Bool, Array };
  Kind kind = Kind::Int;
  long i = 0;
  std::string s;
  bool b = false;
  std::vector<TomlValue> arr;

  long as_int() const;
  const std::string& as_str() const;
  bool as_bool() const;
  const std::vector<TomlValue>& as_array() const;
};

struct TomlTable {
  std::map<std::string, TomlValue> values;
  std::map<std::string, std::map<std::string, TomlValue>> sections;

  bool has(const std::string& key) const { return values.count(key) > 0; }
  const TomlValue& get(const std::string& key) const;  // SchemaError when missing
};

TomlTable parse_toml(const std::string& text);

// convenience: read a whole file; ParseError when unreadable
std::string read_file(const std::string& path);

}  // namespace picardium
