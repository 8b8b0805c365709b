#pragma once

#include <filesystem>
#include <optional>
#include <ostream>

#include "qetude/xqpoly.hpp"

namespace qetude::cli {

/// det_recurrence results stored as det-recurrence-<n>.json in one directory.
class ResultCache {
 public:
  explicit ResultCache(std::filesystem::path dir);

  /// From QETUDE_CACHE; nullopt when the variable is unset or empty.
  static std::optional<ResultCache> from_environment();

  const std::filesystem::path& dir() const { return dir_; }
  std::filesystem::path path_for(int n) const;

  /// nullopt when absent. A file that cannot be read back is reported on
  /// `warn` and treated as absent.
  std::optional<XQPoly> load(int n, std::ostream& warn) const;
  void store(int n, const XQPoly& value) const;

 private:
  std::filesystem::path dir_;
};

/// det_recurrence(n) through the cache when one is given; misses and corrupt
/// entries are recomputed and written back.
XQPoly det_recurrence_cached(int n, const ResultCache* cache, std::ostream& warn);

/// Computes Q_n, stores it, reloads it and compares exactly. With no cache
/// configured this compares two independent computations.
bool cache_roundtrip(int n, const ResultCache* cache, std::ostream& warn);

}  // namespace qetude::cli
