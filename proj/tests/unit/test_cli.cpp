#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "qetude/cli/app.hpp"
#include "qetude/cli/cache.hpp"
#include "qetude/cli/fixtures.hpp"
#include "qetude/cli/reproduce.hpp"
#include "qetude/discovery.hpp"
#include "qetude/lehmer.hpp"
#include "qetude/qseries.hpp"

namespace qetude::cli {
namespace {

namespace fs = std::filesystem;

struct Result {
  int status;
  std::string out;
  std::string err;
};

Result run_cli(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  int status = run(args, out, err);
  return {status, out.str(), err.str()};
}

class TempDir {
 public:
  TempDir() {
    std::string pattern = (fs::temp_directory_path() / "qetude-test-XXXXXX").string();
    path_ = ::mkdtemp(pattern.data());
  }
  ~TempDir() { fs::remove_all(path_); }
  const fs::path& path() const { return path_; }

 private:
  fs::path path_;
};

void write(const fs::path& p, const std::string& text) { std::ofstream(p, std::ios::binary) << text; }

std::string read(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

TEST(Cli, DetText) {
  Result r = run_cli({"det", "--n", "4"});
  EXPECT_EQ(r.status, kExitOk);
  EXPECT_EQ(r.out, "1 - (1+q+q^2)*X + q^2*X^2\n");
  EXPECT_EQ(run_cli({"det", "--n", "4", "--method", "oracle"}).out, r.out);
  EXPECT_EQ(run_cli({"closed-form", "--n", "4"}).out, r.out);
}

TEST(Cli, DetJsonRoundTrips) {
  Result r = run_cli({"det", "--n", "9", "--format", "json"});
  ASSERT_EQ(r.status, kExitOk);
  EXPECT_EQ(xqpoly_from_json(Json::parse(r.out)), det_recurrence(9));
}

TEST(Cli, UsageErrors) {
  Result zero = run_cli({"det", "--n", "0"});
  EXPECT_EQ(zero.status, kExitUsage);
  EXPECT_NE(zero.err.find("--n"), std::string::npos);
  EXPECT_TRUE(zero.out.empty());

  Result verb = run_cli({"determinant", "--n", "3"});
  EXPECT_EQ(verb.status, kExitUsage);
  EXPECT_NE(verb.err.find("determinant"), std::string::npos);

  Result flag = run_cli({"det", "--n", "3", "--fast"});
  EXPECT_EQ(flag.status, kExitUsage);
  EXPECT_NE(flag.err.find("--fast"), std::string::npos);

  EXPECT_EQ(run_cli({}).status, kExitUsage);
  EXPECT_EQ(run_cli({"det"}).status, kExitUsage);
  EXPECT_EQ(run_cli({"det", "--n", "3", "--format", "bfile"}).status, kExitUsage);
  EXPECT_EQ(run_cli({"guess", "--mode", "andrews", "--amax", "5", "--nmax", "10"}).status, kExitUsage);
  EXPECT_EQ(run_cli({"verify", "--certificate", "X*q^n", "--solve-certificate", "3"}).status, kExitUsage);
  EXPECT_EQ(run_cli({"series", "--truncate", "5", "--invert"}).status, kExitUsage);
  EXPECT_EQ(run_cli({"reproduce", "--only", "everything"}).status, kExitUsage);
  EXPECT_EQ(run_cli({"--help"}).status, kExitOk);
}

TEST(Cli, SequenceBFile) {
  Result r = run_cli({"sequence", "--r", "-1", "--count", "20", "--format", "bfile"});
  ASSERT_EQ(r.status, kExitOk);
  std::istringstream lines(r.out);
  std::string line;
  std::vector<std::string> all;
  while (std::getline(lines, line)) all.push_back(line);
  ASSERT_EQ(all.size(), 20U);
  EXPECT_EQ(all.front(), "1 1");
  EXPECT_EQ(all.back(), "20 56455");
  EXPECT_EQ(r.out.back(), '\n');
  EXPECT_EQ(r.out.find(" \n"), std::string::npos);
  EXPECT_EQ(run_cli({"sequence", "--r", "2", "--count", "9"}).out, "1, 1, 1, 2, 2, 3, 3, 4, 5\n");
}

TEST(Cli, SeriesReciprocalMatchesSequence) {
  Result series = run_cli({"series", "--truncate", "20", "--x", "q", "--invert", "--format", "bfile"});
  ASSERT_EQ(series.status, kExitOk);
  EXPECT_EQ(series.out, "0 1\n" + format_bfile(sequence_rpartitions(-1, 20), 1));
  Result symbolic = run_cli({"series", "--truncate", "2"});
  EXPECT_EQ(symbolic.out, "1 - (1+q+q^2)*X + q^2*X^2 + O(q^3)\n");
  Json j = Json::parse(run_cli({"series", "--truncate", "6", "--x", "q", "--format", "json"}).out);
  EXPECT_EQ(j.at("coefficients"), Json::parse(R"(["1","-1","-1","-1","0","0","1"])"));
}

TEST(Cli, GuessJsonRoundTrips) {
  for (const char* mode : {"andrews", "ansatz"}) {
    Result r = run_cli({"guess", "--mode", mode, "--amax", "5", "--nmax", "24", "--format", "json"});
    ASSERT_EQ(r.status, kExitOk) << r.err;
    Json j = Json::parse(r.out);
    GuessReport report = guess_report_from_json(j);
    EXPECT_EQ(to_json(report), j);
    EXPECT_TRUE(report.holdout_verified);
  }
  Result text = run_cli({"guess", "--mode", "andrews", "--amax", "2", "--nmax", "12"});
  EXPECT_NE(text.out.find("X^2: q^2 GP(n-4, 2)"), std::string::npos);
}

TEST(Cli, VerifyDefaultsPass) {
  Result r = run_cli({"verify"});
  EXPECT_EQ(r.status, kExitOk) << r.out;
  EXPECT_EQ(r.out.find("FAIL"), std::string::npos);
  Json j = Json::parse(run_cli({"verify", "--numeric", "12", "--format", "json"}).out);
  EXPECT_EQ(j.at("pass"), true);
  EXPECT_EQ(j.at("checks").size(), 2U);
}

TEST(Cli, VerifyReportsBothCertificateOrientations) {
  Result r = run_cli({"verify", "--certificate", "X q^n", "--format", "json"});
  EXPECT_EQ(r.status, kExitOk);
  Json j = Json::parse(r.out);
  ASSERT_EQ(j.at("checks").size(), 2U);
  EXPECT_EQ(j["checks"][0]["pass"], false);
  EXPECT_FALSE(j["checks"][0]["counterexample"].is_null());
  EXPECT_EQ(j["checks"][1]["pass"], true);

  Result zero = run_cli({"verify", "--certificate", "0"});
  EXPECT_EQ(zero.status, kExitFailure);
  EXPECT_NE(zero.out.find("neither orientation"), std::string::npos);
}

TEST(Cli, RogersRamanujanCheck) {
  Result r = run_cli({"rr-check", "--order", "40"});
  EXPECT_EQ(r.status, kExitOk);
  EXPECT_NE(r.out.find("X=-1:   2 + q"), std::string::npos);
  EXPECT_NE(r.out.find("X=-q^2: 1 + q^2"), std::string::npos);
}

TEST(Cli, OutputIsDeterministic) {
  for (std::vector<std::string> args : {std::vector<std::string>{"guess", "--mode", "ansatz", "--amax", "3", "--nmax", "14", "--format", "json"},
                                        std::vector<std::string>{"verify", "--format", "json"},
                                        std::vector<std::string>{"reproduce", "--format", "json"}}) {
    EXPECT_EQ(run_cli(args).out, run_cli(args).out);
  }
}

TEST(Cli, Reproduce) {
  Result all = run_cli({"reproduce"});
  EXPECT_EQ(all.status, kExitOk) << all.out << all.err;
  EXPECT_EQ(all.out.find("FAIL"), std::string::npos);
  Json subset = Json::parse(run_cli({"reproduce", "--only", "sequence", "--format", "json"}).out);
  ASSERT_EQ(subset.at("items").size(), 1U);
  EXPECT_EQ(subset["items"][0]["item"], "sequence");
  EXPECT_EQ(subset["items"][0]["pass"], true);
}

TEST(Reproduce, InjectedPochhammerFaultFailsAtGaussianItem) {
  auto off_by_one = [](int k) { return qpochhammer(static_cast<unsigned>(k == 0 ? 0 : k + 1)); };
  ReproduceOptions options;
  options.gaussian = [&](int m, int n) { return divmod(off_by_one(m + n), off_by_one(m) * off_by_one(n)).first; };
  std::vector<ReproduceItem> items = run_reproduce(std::nullopt, options);
  auto first_fail = std::find_if(items.begin(), items.end(), [](const ReproduceItem& i) { return !i.pass; });
  ASSERT_NE(first_fail, items.end());
  EXPECT_EQ(first_fail->name, "gaussian");
  EXPECT_FALSE(first_fail->detail.empty());
}

TEST(Fixtures, ParseBFile) {
  FixtureSequence s = parse_bfile("# header\n\n3 10\n4 -2\r\n5 7\n", "A000001", "mem");
  EXPECT_EQ(s.offset, 3);
  EXPECT_EQ(s.values, (std::vector<Integer>{10, -2, 7}));
  EXPECT_EQ(s.at(4), -2);
  EXPECT_THROW(s.at(6), std::out_of_range);
}

TEST(Fixtures, MalformedLineNamed) {
  try {
    parse_bfile("1 1\nx y z\n", "A000001", "broken.txt");
    ADD_FAILURE() << "accepted malformed line";
  } catch (const BFileError& e) {
    std::string what = e.what();
    EXPECT_NE(what.find("broken.txt:2"), std::string::npos) << what;
    EXPECT_NE(what.find("x y z"), std::string::npos) << what;
  }
  EXPECT_THROW(parse_bfile("1 1\n3 2\n", "A000001", "gap"), BFileError);
  EXPECT_THROW(parse_bfile("1 1\n", "A000001", "offset", 0), BFileError);
  EXPECT_THROW(parse_bfile("# only comments\n", "A000001", "empty"), BFileError);
}

TEST(Fixtures, VendoredA003116MatchesTwentyTerms) {
  FixtureSequence s = fetch_bfile("A003116", false, default_fixture_dir(), std::cerr);
  std::vector<Integer> expected = sequence_rpartitions(-1, 20);
  for (long n = 1; n <= 20; ++n) EXPECT_EQ(s.at(n), expected[n - 1]);
  EXPECT_EQ(s.at(0), 1);
}

TEST(Fixtures, VendoredA039924MatchesSpecialisedSeries) {
  auto index = load_fixture_index(default_fixture_dir());
  FixtureSequence s = load_fixture(default_fixture_dir(), "A039924");
  RationalSeries series = substitute_x(theorem1_truncated(60), 1, 1);
  EXPECT_EQ(compare_with_series(s, index.at("A039924"), series), std::nullopt);
  FixtureInfo flipped = index.at("A039924");
  flipped.sign = -1;
  EXPECT_TRUE(compare_with_series(s, flipped, series).has_value());
}

TEST(Fixtures, UnknownIdAndCustomDirectory) {
  TempDir dir;
  write(dir.path() / "fixtures.json", R"({"A000045": {"file": "b000045.txt", "offset": 0}})");
  write(dir.path() / "b000045.txt", "0 0\n1 1\n2 1\n3 2\n");
  Result r = run_cli({"fetch", "--id", "A000045", "--fixtures", dir.path().string()});
  EXPECT_EQ(r.status, kExitOk);
  EXPECT_EQ(r.out, "0 0\n1 1\n2 1\n3 2\n");
  EXPECT_EQ(run_cli({"fetch", "--id", "A000046", "--fixtures", dir.path().string()}).status, kExitUsage);
  write(dir.path() / "b000045.txt", "0 0\n1 one\n");
  Result bad = run_cli({"fetch", "--id", "A000045", "--fixtures", dir.path().string()});
  EXPECT_EQ(bad.status, kExitFailure);
  EXPECT_NE(bad.err.find(":2:"), std::string::npos);
}

TEST(Cache, RoundTripAndNoTemporaries) {
  TempDir dir;
  ResultCache cache(dir.path());
  std::ostringstream warn;
  EXPECT_TRUE(cache_roundtrip(30, &cache, warn));
  EXPECT_TRUE(warn.str().empty());
  ASSERT_TRUE(fs::exists(cache.path_for(30)));
  EXPECT_EQ(cache.load(30, warn), det_recurrence(30));
  int files = 0;
  for (const auto& entry : fs::directory_iterator(dir.path())) {
    ++files;
    EXPECT_EQ(entry.path().extension(), ".json");
  }
  EXPECT_EQ(files, 1);
}

TEST(Cache, DisabledRecomputes) {
  std::ostringstream warn;
  EXPECT_TRUE(cache_roundtrip(12, nullptr, warn));
  EXPECT_EQ(det_recurrence_cached(12, nullptr, warn), det_recurrence(12));
}

TEST(Cache, TruncatedFileWarnsRecomputesAndOverwrites) {
  TempDir dir;
  ResultCache cache(dir.path());
  cache.store(20, det_recurrence(20));
  std::string full = read(cache.path_for(20));
  write(cache.path_for(20), full.substr(0, full.size() / 2));
  std::ostringstream warn;
  EXPECT_EQ(det_recurrence_cached(20, &cache, warn), det_recurrence(20));
  EXPECT_NE(warn.str().find("corrupt cache file"), std::string::npos);
  EXPECT_EQ(read(cache.path_for(20)), full);
}

TEST(Cache, WrongEntryIsCorrupt) {
  TempDir dir;
  ResultCache cache(dir.path());
  cache.store(5, det_recurrence(5));
  fs::copy_file(cache.path_for(5), cache.path_for(6));
  std::ostringstream warn;
  EXPECT_EQ(det_recurrence_cached(6, &cache, warn), det_recurrence(6));
  EXPECT_FALSE(warn.str().empty());
}

TEST(Cache, DetCommandUsesEnvironment) {
  TempDir dir;
  ::setenv("QETUDE_CACHE", dir.path().c_str(), 1);
  Result first = run_cli({"det", "--n", "11"});
  Result second = run_cli({"det", "--n", "11"});
  ::unsetenv("QETUDE_CACHE");
  EXPECT_EQ(first.out, second.out);
  EXPECT_TRUE(fs::exists(dir.path() / "det-recurrence-11.json"));
  ASSERT_TRUE(ResultCache::from_environment() == std::nullopt);
}

}  // namespace
}  // namespace qetude::cli
