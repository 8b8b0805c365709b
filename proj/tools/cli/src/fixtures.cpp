#include "qetude/cli/fixtures.hpp"

#include <curl/curl.h>
#include <unistd.h>

#include <fstream>
#include <sstream>

#include "qetude/serialize.hpp"

namespace qetude::cli {

namespace fs = std::filesystem;

namespace {

std::string read_text(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

bool parse_integer(std::string_view token, Integer& out) {
  if (token.empty()) return false;
  std::size_t i = token[0] == '-' || token[0] == '+' ? 1 : 0;
  if (i == token.size()) return false;
  for (std::size_t k = i; k < token.size(); ++k) {
    if (token[k] < '0' || token[k] > '9') return false;
  }
  std::string digits(token[0] == '+' ? token.substr(1) : token);
  return out.set_str(digits, 10) == 0;
}

std::string bfile_name(const std::string& id) {
  if (id.size() != 7 || id[0] != 'A') throw std::invalid_argument("not an OEIS id: " + id);
  for (std::size_t i = 1; i < id.size(); ++i) {
    if (id[i] < '0' || id[i] > '9') throw std::invalid_argument("not an OEIS id: " + id);
  }
  return "b" + id.substr(1) + ".txt";
}

std::size_t append_body(char* data, std::size_t size, std::size_t count, void* target) {
  static_cast<std::string*>(target)->append(data, size * count);
  return size * count;
}

// Empty optional with a reason in `error` on any transport or HTTP failure.
std::optional<std::string> download(const std::string& url, std::string& error) {
  CURL* curl = curl_easy_init();
  if (curl == nullptr) {
    error = "curl initialisation failed";
    return std::nullopt;
  }
  std::string body;
  curl_easy_setopt(curl, CURLOPT_URL, url.c_str());
  curl_easy_setopt(curl, CURLOPT_WRITEFUNCTION, append_body);
  curl_easy_setopt(curl, CURLOPT_WRITEDATA, &body);
  curl_easy_setopt(curl, CURLOPT_FOLLOWLOCATION, 1L);
  curl_easy_setopt(curl, CURLOPT_TIMEOUT, 30L);
  curl_easy_setopt(curl, CURLOPT_FAILONERROR, 1L);
  CURLcode rc = curl_easy_perform(curl);
  curl_easy_cleanup(curl);
  if (rc != CURLE_OK) {
    error = curl_easy_strerror(rc);
    return std::nullopt;
  }
  return body;
}

}  // namespace

Integer FixtureSequence::at(long index) const {
  if (!contains(index)) throw std::out_of_range(id + " has no term at index " + std::to_string(index));
  return values[static_cast<std::size_t>(index - offset)];
}

FixtureSequence parse_bfile(std::string_view text, const std::string& id, const std::string& source,
                            std::optional<long> expected_offset) {
  FixtureSequence seq;
  seq.id = id;
  std::optional<long> next;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);

    std::vector<std::string_view> tokens;
    std::size_t i = 0;
    while (i < line.size()) {
      while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
      std::size_t start = i;
      while (i < line.size() && line[i] != ' ' && line[i] != '\t') ++i;
      if (i > start) tokens.push_back(line.substr(start, i - start));
    }
    if (tokens.empty() || tokens[0][0] == '#') continue;

    auto fail = [&](const std::string& why) {
      throw BFileError(source + ":" + std::to_string(line_no) + ": " + why + ": '" + std::string(line) + "'");
    };
    Integer index;
    Integer value;
    if (tokens.size() != 2 || !parse_integer(tokens[0], index) || !parse_integer(tokens[1], value)) {
      fail("expected 'n a(n)'");
    }
    if (!index.fits_slong_p()) fail("index out of range");
    long n = index.get_si();
    if (!next) {
      if (expected_offset && n != *expected_offset) {
        fail("first index should be the offset " + std::to_string(*expected_offset));
      }
      seq.offset = n;
    } else if (n != *next) {
      fail("index not contiguous, expected " + std::to_string(*next));
    }
    next = n + 1;
    seq.values.push_back(value);
  }
  if (seq.values.empty()) throw BFileError(source + ": no terms");
  return seq;
}

fs::path default_fixture_dir() {
#ifdef QETUDE_FIXTURE_DIR
  return fs::path(QETUDE_FIXTURE_DIR);
#else
  return fs::path("fixtures");
#endif
}

std::map<std::string, FixtureInfo> load_fixture_index(const fs::path& dir) {
  Json j;
  try {
    j = Json::parse(read_text(dir / "fixtures.json"));
  } catch (const Json::exception& e) {
    throw std::runtime_error((dir / "fixtures.json").string() + ": " + e.what());
  }
  std::map<std::string, FixtureInfo> index;
  for (const auto& [id, entry] : j.items()) {
    FixtureInfo info;
    info.file = entry.at("file").get<std::string>();
    info.offset = entry.value("offset", 0L);
    info.index_shift = entry.value("index_shift", 0L);
    info.sign = entry.value("sign", 1);
    if (info.sign != 1 && info.sign != -1) throw std::runtime_error(id + ": sign must be 1 or -1");
    index.emplace(id, info);
  }
  return index;
}

FixtureSequence load_fixture(const fs::path& dir, const std::string& id) {
  auto index = load_fixture_index(dir);
  auto it = index.find(id);
  if (it == index.end()) throw std::invalid_argument("no vendored fixture for " + id);
  fs::path path = dir / it->second.file;
  return parse_bfile(read_text(path), id, path.string(), it->second.offset);
}

FixtureSet load_fixture_set(const fs::path& dir) {
  FixtureSet set;
  for (const auto& [id, info] : load_fixture_index(dir)) set.sequences.emplace(id, load_fixture(dir, id));
  return set;
}

FixtureSequence fetch_bfile(const std::string& id, bool online, const fs::path& dir, std::ostream& warn) {
  std::string file = bfile_name(id);
  if (!online) return load_fixture(dir, id);

  std::string url = "https://oeis.org/" + id + "/" + file;
  std::string error;
  std::optional<std::string> body = download(url, error);
  if (!body) {
    warn << "warning: fetching " << url << " failed (" << error << "); using vendored fixture\n";
    return load_fixture(dir, id);
  }
  std::optional<long> offset;
  auto index = load_fixture_index(dir);
  if (auto it = index.find(id); it != index.end()) {
    offset = it->second.offset;
    file = it->second.file;
  }
  FixtureSequence seq = parse_bfile(*body, id, url, offset);
  write_file_atomically(dir / file, *body);
  return seq;
}

std::optional<std::string> compare_with_series(const FixtureSequence& fixture, const FixtureInfo& info,
                                               const RationalSeries& series) {
  for (std::size_t k = 0; k <= series.order(); ++k) {
    long index = static_cast<long>(k) + info.index_shift;
    if (!fixture.contains(index)) continue;
    Rational expected(fixture.at(index) * info.sign);
    if (series[k] != expected) {
      return fixture.id + ": coefficient of q^" + std::to_string(k) + " is " + to_string(series[k]) +
             ", fixture gives " + to_string(expected);
    }
  }
  return std::nullopt;
}

void write_file_atomically(const fs::path& path, std::string_view contents) {
  if (path.has_parent_path()) fs::create_directories(path.parent_path());
  fs::path tmp = path;
  tmp += ".tmp." + std::to_string(::getpid());
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write " + tmp.string());
    out.write(contents.data(), static_cast<std::streamsize>(contents.size()));
    out.flush();
    if (!out) {
      fs::remove(tmp);
      throw std::runtime_error("short write to " + tmp.string());
    }
  }
  fs::rename(tmp, path);
}

}  // namespace qetude::cli
