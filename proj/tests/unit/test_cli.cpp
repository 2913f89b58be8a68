#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <unistd.h>

#include "json.hpp"
#include "paramedial/errors.hpp"
#include "paramedial_cli/cache.hpp"
#include "paramedial_cli/cli.hpp"
#include "paramedial_cli/records.hpp"

using namespace paramedial;
using namespace paramedial::cli;
namespace fs = std::filesystem;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::size_t count_lines_starting(const std::string& text, const std::string& prefix) {
  std::istringstream in(text);
  std::size_t n = 0;
  for (std::string line; std::getline(in, line);) n += line.rfind(prefix, 0) == 0 ? 1 : 0;
  return n;
}

class TempDir {
 public:
  TempDir() {
    path_ = fs::temp_directory_path() / ("paramedial_test_" + std::to_string(::getpid()) + "_" +
                                         ::testing::UnitTest::GetInstance()->current_test_info()->name());
    fs::remove_all(path_);
    fs::create_directories(path_);
  }
  ~TempDir() { fs::remove_all(path_); }
  const fs::path& path() const { return path_; }

 private:
  fs::path path_;
};

}  // namespace

TEST(CliCount, Examples) {
  EXPECT_EQ(run({"count", "--order", "9"}).out, "50\n");
  EXPECT_EQ(run({"count", "--group", "cyclic", "2", "4"}).out, "32\n");
  EXPECT_EQ(run({"count", "--group", "elem2", "3"}).out, "34\n");
  EXPECT_EQ(run({"count", "--order", "12"}).out, "55\n");
  const auto j = nlohmann::json::parse(run({"count", "--group", "cyclic", "5", "2", "--json"}).out);
  EXPECT_EQ(j["count"], 46);
  EXPECT_EQ(j["group"]["kind"], "cyclic");
  EXPECT_EQ(j["group"]["k"], 2);
}

TEST(CliCount, UnsupportedOrder) {
  const auto r = run({"count", "--order", "27"});
  EXPECT_EQ(r.code, kUsage);
  EXPECT_NE(r.err.find("Z_3 x Z_9"), std::string::npos);
  EXPECT_NE(r.err.find("Z_3 x Z_3 x Z_3"), std::string::npos);
}

TEST(CliCount, UsageErrors) {
  EXPECT_EQ(run({"count"}).code, kUsage);
  EXPECT_EQ(run({"count", "--order", "9", "--group", "elem2", "3"}).code, kUsage);
  EXPECT_EQ(run({"count", "--group", "cyclic", "4", "1"}).code, kUsage);
  EXPECT_EQ(run({"count", "--group", "torus", "3"}).code, kUsage);
  EXPECT_EQ(run({"frobnicate"}).code, kUsage);
  EXPECT_EQ(run({}).code, kUsage);
  EXPECT_EQ(run({"--help"}).code, kOk);
}

TEST(CliEnumerate, RecordCounts) {
  const auto all = run({"enumerate", "--group", "elem2", "3", "--format", "json"});
  ASSERT_EQ(all.code, kOk);
  EXPECT_EQ(nlohmann::json::parse(all.out).size(), 34u);
  const auto simple = run({"enumerate", "--group", "elem2", "3", "--simple-only"});
  EXPECT_EQ(nlohmann::json::parse(simple.out).size(), 9u);
  for (const auto& rec : nlohmann::json::parse(simple.out)) EXPECT_TRUE(rec["simple"].get<bool>());
  EXPECT_EQ(run({"enumerate", "--group", "cyclic", "3", "2", "--simple-only"}).out, "[]\n");
}

TEST(CliEnumerate, JsonSchema) {
  const auto j = nlohmann::json::parse(run({"enumerate", "--group", "elem2", "3"}).out);
  const auto& rec = j.at(0);
  EXPECT_EQ(rec["group"], (nlohmann::json{{"kind", "elem2"}, {"p", 3}, {"k", 2}}));
  EXPECT_EQ(rec["phi"].size(), 2u);
  EXPECT_EQ(rec["phi"][0].size(), 2u);
  EXPECT_EQ(rec["c"].size(), 2u);
  EXPECT_TRUE(rec["case"].is_string());
  const auto c = nlohmann::json::parse(run({"enumerate", "--group", "cyclic", "3", "1"}).out);
  EXPECT_EQ(c.at(0)["phi"], nlohmann::json::parse("[[1]]"));
  EXPECT_EQ(c.at(0)["c"], nlohmann::json::parse("[0]"));
}

TEST(CliEnumerate, TablesFormat) {
  const auto r = run({"enumerate", "--group", "cyclic", "3", "1", "--format", "tables"});
  ASSERT_EQ(r.code, kOk);
  EXPECT_EQ(count_lines_starting(r.out, "# "), 5u);
  EXPECT_EQ(count_lines_starting(r.out, "order 3"), 5u);
  std::istringstream in(r.out);
  std::string line, block;
  std::vector<QuasigroupTable> tables;
  while (std::getline(in, line)) {
    if (line.rfind("# ", 0) == 0) {
      if (!block.empty()) tables.push_back(QuasigroupTable::from_text(block));
      block.clear();
    } else {
      block += line + "\n";
    }
  }
  tables.push_back(QuasigroupTable::from_text(block));
  ASSERT_EQ(tables.size(), 5u);
  for (const auto& t : tables) {
    EXPECT_TRUE(is_latin(t));
    EXPECT_TRUE(is_paramedial(t));
  }
}

TEST(CliEnumerate, CsvFormat) {
  const auto r = run({"enumerate", "--group", "elem2", "3", "--format", "csv"});
  std::istringstream in(r.out);
  std::string header;
  std::getline(in, header);
  EXPECT_EQ(header, "group,phi,psi,c,simple,case");
  EXPECT_EQ(count_lines_starting(r.out, "Z_3^2,"), 34u);
  EXPECT_NE(r.out.find("Z_3^2,\"[[1,0],[0,1]]\",\"[[1,0],[0,1]]\",\"[0,0]\",false,scalar: psi=phi\n"), std::string::npos);
}

TEST(Records, JsonRoundTrip) {
  for (auto g : {GroupDescriptor::elem2(2), GroupDescriptor::elem2(5), GroupDescriptor::cyclic(3, 3), GroupDescriptor::cyclic(2, 4)}) {
    const auto records = collect_records(g, false);
    EXPECT_EQ(read_json(write_json(records)), records) << g.name();
  }
}

TEST(Records, RejectsBadInput) {
  EXPECT_THROW(read_json("{"), ParseError);
  EXPECT_THROW(read_json("{}"), ParseError);
  EXPECT_THROW(read_json(R"([{"group":{"kind":"cyclic","p":3,"k":1},"phi":[[1]],"psi":[[1]],"c":[0]}])"), ParseError);
  EXPECT_THROW(read_json(R"([{"group":{"kind":"ring","p":3,"k":1},"phi":[[1]],"psi":[[1]],"c":[0],"simple":true,"case":""}])"), ParseError);
  EXPECT_THROW(read_json(R"([{"group":{"kind":"cyclic","p":5,"k":1},"phi":[[1]],"psi":[[2]],"c":[0],"simple":true,"case":""}])"), NotParamedial);
  EXPECT_THROW(read_json(R"([{"group":{"kind":"cyclic","p":3,"k":1},"phi":[[4]],"psi":[[1]],"c":[0],"simple":true,"case":""}])"), ParseError);
  EXPECT_THROW(read_json(R"([{"group":{"kind":"elem2","p":3,"k":2},"phi":[[1]],"psi":[[1]],"c":[0],"simple":true,"case":""}])"), ParseError);
}

TEST(CliEnumerate, DeterministicFilesAndManifest) {
  TempDir dir;
  const auto a = dir.path() / "a.json";
  const auto b = dir.path() / "b.json";
  ASSERT_EQ(run({"enumerate", "--group", "elem2", "5", "--out", a.string()}).code, kOk);
  ASSERT_EQ(run({"enumerate", "--group", "elem2", "5", "--out", b.string()}).code, kOk);
  EXPECT_EQ(slurp(a), slurp(b));
  const auto manifest = nlohmann::json::parse(slurp(a.string() + ".manifest.json"));
  EXPECT_EQ(manifest["command"], "enumerate");
  EXPECT_EQ(manifest["parameters"]["group"], "elem2 5");
  EXPECT_EQ(manifest["digest"], "fnv1a64:" + hex64(fnv1a(slurp(a))));
  EXPECT_TRUE(manifest.contains("version"));
  EXPECT_TRUE(manifest.contains("timestamp"));
}

TEST(CliEnumerate, CacheGivesIdenticalBytes) {
  TempDir dir;
  const auto cache = dir.path() / "cache";
  const std::vector<std::string> args{"enumerate", "--group", "cyclic", "5", "2", "--format", "csv", "--cache-dir", cache.string()};
  const auto cold = run(args);
  ASSERT_EQ(cold.code, kOk);
  ASSERT_TRUE(fs::exists(cache));
  EXPECT_EQ(std::distance(fs::directory_iterator(cache), fs::directory_iterator()), 1);
  const auto warm = run(args);
  EXPECT_EQ(warm.out, cold.out);
  EXPECT_EQ(run({"enumerate", "--group", "cyclic", "5", "2", "--format", "csv"}).out, cold.out);

  ::setenv(kCacheEnv, cache.string().c_str(), 1);
  const auto from_env = run({"enumerate", "--group", "cyclic", "5", "2", "--format", "json"});
  ::unsetenv(kCacheEnv);
  EXPECT_EQ(from_env.code, kOk);
  EXPECT_EQ(std::distance(fs::directory_iterator(cache), fs::directory_iterator()), 2);
}

TEST(CliEnumerate, UnwritableOutput) {
  const auto r = run({"enumerate", "--group", "cyclic", "3", "1", "--out", "/nonexistent-dir/x.json"});
  EXPECT_EQ(r.code, kResource);
  EXPECT_NE(r.err.find("/nonexistent-dir/x.json"), std::string::npos);
}

TEST(CliVerify, Examples) {
  const auto oracle3 = run({"verify", "--group", "elem2", "3", "--level", "oracle"});
  EXPECT_EQ(oracle3.code, kOk) << oracle3.out;
  EXPECT_EQ(count_lines_starting(oracle3.out, "FAIL"), 0u);
  EXPECT_GT(count_lines_starting(oracle3.out, "PASS"), 5u);

  const auto fast = run({"verify", "--group", "cyclic", "5", "2", "--level", "fast"});
  EXPECT_EQ(fast.code, kOk);
  EXPECT_NE(fast.out.find("PASS count: 46 = 46 = 2*25-5+1"), std::string::npos) << fast.out;

  const auto two = run({"verify", "--group", "elem2", "2", "--level", "oracle"});
  EXPECT_EQ(two.code, kOk);
  EXPECT_NE(two.out.find("PASS orbit count: 7 classes"), std::string::npos) << two.out;
}

TEST(CliVerify, OracleBound) {
  const auto r = run({"verify", "--group", "elem2", "7", "--level", "oracle"});
  EXPECT_EQ(r.code, kResource);
  EXPECT_NE(r.err.find("exceeds"), std::string::npos);
  EXPECT_EQ(run({"verify", "--group", "elem2", "7", "--level", "fast"}).code, kOk);
  EXPECT_EQ(run({"verify", "--group", "elem2", "3", "--level", "slow"}).code, kUsage);
}

TEST(Cache, Fnv1aKnownValues) {
  EXPECT_EQ(fnv1a(""), 0xcbf29ce484222325ULL);
  EXPECT_EQ(fnv1a("a"), 0xaf63dc4c8601ec8cULL);
  EXPECT_EQ(hex64(0xabcULL), "0000000000000abc");
}
