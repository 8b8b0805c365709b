#pragma once

#include <filesystem>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "qetude/qpoly.hpp"
#include "qetude/serialize.hpp"

namespace qetude::cli {

struct ReproduceItem {
  std::string name;
  std::string title;
  bool pass = false;
  std::string detail;  ///< first mismatch when failing
};

struct ReproduceOptions {
  /// Replaces gaussian_poly when set, for fault injection.
  std::function<QPoly(int, int)> gaussian;
  /// Vendored b-files; empty means default_fixture_dir().
  std::filesystem::path fixture_dir;
};

/// Item names in run order.
std::vector<std::string> reproduce_item_names();

/// Regenerates the published displays and diffs them against transcribed
/// expectations. Throws std::invalid_argument for an unknown `only`.
std::vector<ReproduceItem> run_reproduce(const std::optional<std::string>& only = std::nullopt,
                                         const ReproduceOptions& options = {});

Json to_json(const std::vector<ReproduceItem>& items);

}  // namespace qetude::cli
