#include "qetude/cli/cache.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>

#include "qetude/cli/fixtures.hpp"
#include "qetude/lehmer.hpp"
#include "qetude/serialize.hpp"

namespace qetude::cli {

ResultCache::ResultCache(std::filesystem::path dir) : dir_(std::move(dir)) {}

std::optional<ResultCache> ResultCache::from_environment() {
  const char* dir = std::getenv("QETUDE_CACHE");
  if (dir == nullptr || *dir == '\0') return std::nullopt;
  return ResultCache(dir);
}

std::filesystem::path ResultCache::path_for(int n) const {
  return dir_ / ("det-recurrence-" + std::to_string(n) + ".json");
}

std::optional<XQPoly> ResultCache::load(int n, std::ostream& warn) const {
  std::filesystem::path path = path_for(n);
  std::ifstream in(path, std::ios::binary);
  if (!in) return std::nullopt;
  std::ostringstream buf;
  buf << in.rdbuf();
  try {
    Json j = Json::parse(buf.str());
    if (j.at("n").get<int>() != n) throw std::invalid_argument("entry is for another n");
    return xqpoly_from_json(j.at("value"));
  } catch (const std::exception& e) {
    warn << "warning: ignoring corrupt cache file " << path.string() << " (" << e.what() << ")\n";
    return std::nullopt;
  }
}

void ResultCache::store(int n, const XQPoly& value) const {
  Json j{{"n", n}, {"value", to_json(value)}};
  write_file_atomically(path_for(n), j.dump() + "\n");
}

XQPoly det_recurrence_cached(int n, const ResultCache* cache, std::ostream& warn) {
  if (cache != nullptr) {
    if (auto hit = cache->load(n, warn)) return *hit;
  }
  XQPoly value = det_recurrence(n);
  if (cache != nullptr) cache->store(n, value);
  return value;
}

bool cache_roundtrip(int n, const ResultCache* cache, std::ostream& warn) {
  XQPoly computed = det_recurrence(n);
  if (cache == nullptr) return det_recurrence(n) == computed;
  cache->store(n, computed);
  std::optional<XQPoly> loaded = cache->load(n, warn);
  return loaded && *loaded == computed;
}

}  // namespace qetude::cli
