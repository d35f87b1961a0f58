#include <gtest/gtest.h>

#include <filesystem>

#include "gemforge/util/config_file.hpp"
#include "gemforge/util/csv.hpp"
#include "gemforge/util/io.hpp"

namespace util = gemforge::util;

TEST(Csv, QuotedFieldsAndLineNumbers) {
  auto rows = util::parse_csv("a,b,c\r\n\"x, y\",\"he said \"\"hi\"\"\",\"two\nlines\"\n\nlast,,\n");
  ASSERT_EQ(rows.size(), 3u);
  EXPECT_EQ(rows[1].fields, (std::vector<std::string>{"x, y", "he said \"hi\"", "two\nlines"}));
  EXPECT_EQ(rows[1].line, 2u);
  EXPECT_EQ(rows[2].line, 5u);
  EXPECT_EQ(rows[2].fields, (std::vector<std::string>{"last", "", ""}));
}

TEST(Csv, NoTrailingNewline) {
  auto rows = util::parse_csv("a,b");
  ASSERT_EQ(rows.size(), 1u);
  EXPECT_EQ(rows[0].fields.size(), 2u);
}

TEST(Csv, UnterminatedQuoteIsAnError) {
  try {
    util::parse_csv("a\n\"open\n");
    FAIL();
  } catch (const util::CsvError& e) {
    EXPECT_EQ(e.line(), 2u);
  }
}

TEST(Csv, FieldQuotingRoundTrips) {
  for (std::string s : {"plain", "with,comma", "with \"quote\"", "multi\nline", ""}) {
    auto rows = util::parse_csv(util::csv_field(s) + ",end\n");
    ASSERT_EQ(rows.size(), 1u);
    EXPECT_EQ(rows[0].fields[0], s);
  }
  EXPECT_EQ(util::csv_field("plain"), "plain");
}

TEST(Toml, Subset) {
  auto j = util::parse_toml(R"(# comment
title = "x # not a comment"
n = 42
f = -1.5
yes = true
list = ["a", 'b', 3]

[server]
bind = "127.0.0.1:80"  # trailing
[a.b]
"quoted key" = 1
)");
  EXPECT_EQ(j["title"], "x # not a comment");
  EXPECT_EQ(j["n"], 42);
  EXPECT_DOUBLE_EQ(j["f"].get<double>(), -1.5);
  EXPECT_EQ(j["yes"], true);
  EXPECT_EQ(j["list"], nlohmann::json::array({"a", "b", 3}));
  EXPECT_EQ(j["server"]["bind"], "127.0.0.1:80");
  EXPECT_EQ(j["a"]["b"]["quoted key"], 1);
}

TEST(Toml, Errors) {
  EXPECT_THROW(util::parse_toml("key"), util::ConfigError);
  EXPECT_THROW(util::parse_toml("a = 1\na = 2"), util::ConfigError);
  EXPECT_THROW(util::parse_toml("a = [1,\n2]"), util::ConfigError);
  EXPECT_THROW(util::parse_toml("a = \"unterminated"), util::ConfigError);
  EXPECT_THROW(util::parse_toml("[t"), util::ConfigError);
}

TEST(Config, JsonOrToml) {
  EXPECT_EQ(util::parse_config("  {\"a\": 1}")["a"], 1);
  EXPECT_EQ(util::parse_config("a = 1")["a"], 1);
  EXPECT_THROW(util::parse_config("{ broken"), util::ConfigError);
}

TEST(Io, ReadWriteAndMissingFile) {
  auto path = std::filesystem::temp_directory_path() / "gemforge-util-test.txt";
  util::write_file(path, "bytes\0here");
  EXPECT_EQ(util::read_file(path), "bytes");
  std::filesystem::remove(path);
  EXPECT_THROW(util::read_file(path), util::IoError);
  EXPECT_THROW(util::load_config_file(path), util::IoError);
}
