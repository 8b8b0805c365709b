#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "qetude/rational.hpp"
#include "qetude/series.hpp"

namespace qetude::cli {

/// Raised for b-files that are not "n a(n)" lines with contiguous indices.
class BFileError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct FixtureSequence {
  std::string id;
  long offset = 0;
  std::vector<Integer> values;  ///< values[i] is a(offset + i)

  Integer at(long index) const;
  bool contains(long index) const { return index >= offset && index < offset + static_cast<long>(values.size()); }
};

/// Per-sequence metadata from fixtures.json. The computed series coefficient
/// of q^k is compared with sign * a(k + index_shift).
struct FixtureInfo {
  std::string file;
  long offset = 0;
  long index_shift = 0;
  int sign = 1;
};

struct FixtureSet {
  std::map<std::string, FixtureSequence> sequences;
};

/// Parses b-file text. Blank lines and lines starting with '#' are skipped;
/// anything else must be two integers. `source` names the input in errors.
/// When `expected_offset` is given the first index must equal it.
FixtureSequence parse_bfile(std::string_view text, const std::string& id, const std::string& source,
                            std::optional<long> expected_offset = std::nullopt);

/// Directory compiled into the tool, overridable with --fixtures.
std::filesystem::path default_fixture_dir();

std::map<std::string, FixtureInfo> load_fixture_index(const std::filesystem::path& dir);
FixtureSequence load_fixture(const std::filesystem::path& dir, const std::string& id);
FixtureSet load_fixture_set(const std::filesystem::path& dir);

/// Offline: reads the vendored b-file. Online: downloads it from oeis.org,
/// validates it and replaces the vendored copy; on network failure writes a
/// warning to `warn` and returns the vendored copy.
FixtureSequence fetch_bfile(const std::string& id, bool online, const std::filesystem::path& dir, std::ostream& warn);

/// First index k <= series.order() where series[k] != sign * a(k + shift),
/// with a description; nullopt if all covered coefficients agree. Indices the
/// fixture does not cover are skipped.
std::optional<std::string> compare_with_series(const FixtureSequence& fixture, const FixtureInfo& info,
                                               const RationalSeries& series);

/// Writes `contents` to `path` through a temporary file in the same directory
/// followed by a rename.
void write_file_atomically(const std::filesystem::path& path, std::string_view contents);

}  // namespace qetude::cli
