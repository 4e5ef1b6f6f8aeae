#include "picardium/catalog.hpp"

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>

namespace fs = std::filesystem;

namespace picardium {

Catalog Catalog::open() {
  if (const char* env = std::getenv("PICARDIUM_CACHE")) return Catalog(env);
  const char* home = std::getenv("HOME");
  std::string base = home ? std::string(home) + "/.cache" : ".";
  return Catalog(base + "/picardium");
}

Catalog::Catalog(std::string dir) : dir_(std::move(dir)) {
  std::error_code ec;
  fs::create_directories(dir_, ec);  // failure surfaces on first write
}

std::string Catalog::path_of(const std::string& key) const { return dir_ + "/" + key + ".json"; }

std::optional<nlohmann::ordered_json> Catalog::lookup(const std::string& key) const {
  std::ifstream in(path_of(key), std::ios::binary);
  if (!in) return std::nullopt;
  try {
    return nlohmann::ordered_json::parse(in);
  } catch (const std::exception&) {
    return std::nullopt;  // a damaged entry behaves like a miss
  }
}

void Catalog::store(const std::string& key, const nlohmann::ordered_json& value) {
  if (fs::exists(path_of(key))) return;
  std::string tmp = path_of(key) + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary);
    if (!out) return;  // caching is best-effort; the pipeline already has the result
    out << value.dump(2) << "\n";
  }
  std::error_code ec;
  fs::rename(tmp, path_of(key), ec);
}

std::vector<Catalog::Entry> Catalog::list() const {
  std::vector<Entry> out;
  std::error_code ec;
  for (const auto& de : fs::directory_iterator(dir_, ec)) {
    if (!de.is_regular_file() || de.path().extension() != ".json") continue;
    Entry e;
    e.key = de.path().stem().string();
    std::ifstream in(de.path(), std::ios::binary);
    try {
      auto j = nlohmann::ordered_json::parse(in);
      if (j.contains("summary")) e.summary = j["summary"].get<std::string>();
    } catch (const std::exception&) {
      e.summary = "(unreadable)";
    }
    out.push_back(std::move(e));
  }
  std::sort(out.begin(), out.end(), [](const Entry& a, const Entry& b) { return a.key < b.key; });
  return out;
}

size_t Catalog::gc() {
  size_t dropped = 0;
  std::error_code ec;
  for (const auto& de : fs::directory_iterator(dir_, ec)) {
    if (!de.is_regular_file() || de.path().extension() != ".json") continue;
    std::error_code rc;
    if (fs::remove(de.path(), rc)) ++dropped;
  }
  return dropped;
}

}  // namespace picardium
