#pragma once
// Content-addressed store of solved instances (trivialisation sets, class
// counts, admissibility verdicts).  Entries are immutable once written;
// lookups never recompute on a hit.  Location defaults to
// ~/.cache/picardium and is overridden by the PICARDIUM_CACHE variable.

#include <json.hpp>

#include <optional>
#include <string>
#include <vector>

namespace picardium {

class Catalog {
 public:
  // resolves PICARDIUM_CACHE / default location; creates the directory
  static Catalog open();
  explicit Catalog(std::string dir);

  const std::string& dir() const { return dir_; }

  std::optional<nlohmann::ordered_json> lookup(const std::string& key) const;
  // no-op when the key already exists (entries are immutable)
  void store(const std::string& key, const nlohmann::ordered_json& value);

  struct Entry {
    std::string key;
    std::string summary;
  };
  std::vector<Entry> list() const;
  // removes every entry, returns how many were dropped
  size_t gc();

 private:
  std::string dir_;
  std::string path_of(const std::string& key) const;
};

}  // namespace picardium
