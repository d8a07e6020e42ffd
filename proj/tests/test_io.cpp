#include "oracle.hpp"

#include <gtest/gtest.h>

#include <sys/wait.h>

#include <cstdio>
#include <filesystem>

using namespace hopfalg;

namespace {

std::string text_of(const Object& o) { return canonical_text(object_to_json(o)); }

TEST(Serialization, CatalogRoundTripIsByteStable) {
  for (const std::string& name : catalog_names()) {
    std::string once = text_of(builtin(name));
    std::string twice = text_of(object_from_json(parse_json_text(once, name)));
    EXPECT_EQ(once, twice) << name;
  }
}

TEST(Serialization, ScalarEncodings) {
  json q = object_to_json(builtin("qc2")), f = object_to_json(builtin("f5c5"));
  EXPECT_EQ(q["field"], "Q");
  EXPECT_EQ(f["field"], "GF(5)");
  EXPECT_TRUE(q["total"]["unit"][0].is_string());
  EXPECT_TRUE(f["total"]["unit"][0].is_number_integer());
}

TEST(Serialization, SweedlerDataFileMatchesBuiltin) {
  Object file = load_object(std::string(HOPFALG_DATA_DIR) + "/sweedler-h4.json");
  EXPECT_EQ(text_of(file), text_of(builtin("sweedler-h4")));
}

json doc() { return object_to_json(builtin("qc2")); }

void expect_invalid(const json& j, const std::string& what) {
  EXPECT_THROW(object_from_json(j), InvalidInput) << what;
}

TEST(Schema, RejectsMalformedDocuments) {
  json j = doc();
  j.erase("antipode");
  expect_invalid(j, "missing antipode");

  j = doc();
  j["left"]["extra"] = 1;
  expect_invalid(j, "unknown key");

  j = doc();
  j["total"]["unit"] = json::array({"1"});
  expect_invalid(j, "short unit");

  j = doc();
  j["antipode"][0][0] = "1/0";
  expect_invalid(j, "zero denominator");

  j = doc();
  j["antipode"][0][0] = 0.5;
  expect_invalid(j, "floating point scalar");

  j = doc();
  j["antipode"][0][0] = "one";
  expect_invalid(j, "non-numeric string");

  j = doc();
  j["field"] = "GF(4)";
  expect_invalid(j, "composite characteristic");

  j = object_to_json(builtin("f5c5"));
  j["antipode"][0][0] = "1/5";
  expect_invalid(j, "denominator divisible by p");

  j = doc();
  j["total"]["mult"][0][0] = json::array({"0", "0"});
  expect_invalid(j, "broken unit");

  EXPECT_THROW(parse_json_text("{", "text"), InvalidInput);
  EXPECT_THROW(builtin("nope"), UnknownName);
}

// Input is lenient about scalar spelling; output is canonical.
TEST(Schema, AlternateScalarSpellings) {
  json j = doc();
  j["antipode"][0][0] = 1;
  EXPECT_EQ(text_of(object_from_json(j)), text_of(builtin("qc2")));
  j = object_to_json(builtin("f5c5"));
  j["antipode"][0][0] = "6/1";
  j["antipode"][1][1] = -25;
  EXPECT_EQ(text_of(object_from_json(j)), text_of(builtin("f5c5")));
}

TEST(Schema, CommentsAreIgnored) {
  json j = doc();
  j["comment"] = "anything";
  j["right"]["base"]["comment"] = json::array({"a", "b"});
  EXPECT_EQ(text_of(object_from_json(j)), text_of(builtin("qc2")));
}

// CLI exit codes and byte-identical reports.
struct CliRun {
  int code;
  std::string out;
};

CliRun run(const std::string& args) {
  std::string cmd = std::string(HOPFALG_CLI) + " " + args + " 2>/dev/null";
  FILE* p = popen(cmd.c_str(), "r");
  std::string out;
  char buf[4096];
  size_t k;
  while ((k = fread(buf, 1, sizeof buf, p)) > 0) out.append(buf, k);
  int st = pclose(p);
  return {WIFEXITED(st) ? WEXITSTATUS(st) : -1, out};
}

class Cli : public ::testing::Test {
 protected:
  std::filesystem::path dir = std::filesystem::temp_directory_path() / ("hopfalg_cli_" + std::to_string(getpid()));
  void SetUp() override { std::filesystem::create_directories(dir); }
  void TearDown() override { std::filesystem::remove_all(dir); }
  std::string file(const std::string& n) const { return (dir / n).string(); }
};

TEST_F(Cli, ExitCodes) {
  ASSERT_EQ(run("example qc2 --emit " + file("qc2.json")).code, 0);
  EXPECT_EQ(run("maschke " + file("qc2.json")).code, 0);
  EXPECT_EQ(run("check " + file("missing.json")).code, 2);
  EXPECT_EQ(run("example nope").code, 2);

  json h = object_to_json(builtin("sweedler-h4"));
  h["antipode"] = mat_to_json(Mat<mpq_class>::identity(Field::rationals(), 4));
  write_file(file("bad.json"), canonical_text(h));
  CliRun c = run("check " + file("bad.json"));
  EXPECT_EQ(c.code, 2);
  EXPECT_FALSE(json::parse(c.out)["valid"].get<bool>());
  EXPECT_EQ(run("qf " + file("bad.json")).code, 2);

  // a false verdict is still a decided computation
  ASSERT_EQ(run("example lu-ut2-q --emit " + file("ut2.json")).code, 0);
  CliRun q = run("qf " + file("ut2.json"));
  EXPECT_EQ(q.code, 0);
  json r = json::parse(q.out);
  EXPECT_FALSE(r["leftQF"].get<bool>());
  EXPECT_FALSE(r["rightQF"].get<bool>());
}

TEST_F(Cli, EmitLoadEmitAndSeededReports) {
  ASSERT_EQ(run("example sweedler-h4 --emit " + file("a.json")).code, 0);
  EXPECT_EQ(read_file(file("a.json")), text_of(builtin("sweedler-h4")));
  CliRun a = run("frobenius --seed 9 " + file("a.json")), b = run("frobenius --seed 9 " + file("a.json"));
  EXPECT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
}

}  // namespace
