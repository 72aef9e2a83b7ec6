#include "vsllt/commands.hpp"

#include <gtest/gtest.h>

#include <set>

using namespace vsllt;

namespace {

RunConfig expand_word(const std::string& w, OutputFormat f = OutputFormat::Text) {
  RunConfig cfg;
  cfg.command = Command::Expand;
  cfg.word = w;
  cfg.format = f;
  return cfg;
}

RunConfig with_strips(Command c, const std::string& s) {
  RunConfig cfg;
  cfg.command = c;
  cfg.strips = s;
  return cfg;
}

// (n+1) s_n = 3(2n-1) s_{n-1} - (n-2) s_{n-2}, s_0 = s_1 = 1
std::vector<long> schroeder_recurrence(int max_n) {
  std::vector<long> s{1, 1};
  for (int n = 2; n <= max_n; ++n)
    s.push_back((3 * (2 * n - 1) * s[n - 1] - (n - 2) * s[n - 2]) / (n + 1));
  return s;
}

// First-return decomposition: a path is -, an arbitrary Schroeder path
// shifted up one level (where diagonal steps are allowed), +, then a rest.
std::vector<long> schroeder_first_return(int max_n) {
  std::vector<long> big{1};  // large Schroeder numbers
  for (int n = 1; n <= max_n; ++n) {
    long r = big[n - 1];
    for (int k = 0; k < n; ++k) r += big[k] * big[n - 1 - k];
    big.push_back(r);
  }
  std::vector<long> s{1};
  for (int n = 1; n <= max_n; ++n) {
    long v = 0;
    for (int k = 1; k <= n; ++k) v += big[k - 1] * s[n - k];
    s.push_back(v);
  }
  return s;
}

}  // namespace

TEST(CmdExpand, WorkedExample) {
  const CommandOutput out = cmd_expand(expand_word("-0-0++"));
  EXPECT_TRUE(out.ok);
  EXPECT_NE(out.text.find("e-expansion: q*e[3,1] + (q^2 - q)*e[4]\n"), std::string::npos) << out.text;
  EXPECT_NE(out.text.find("at q -> q+1: (q + 1)*e[3,1] + (q^2 + q)*e[4]\n"), std::string::npos);
  EXPECT_NE(out.text.find("e-positive: yes"), std::string::npos);
}

TEST(CmdExpand, Strips) {
  const CommandOutput out = cmd_expand(with_strips(Command::Expand, "0:2"));
  EXPECT_TRUE(out.ok);
  EXPECT_NE(out.text.find("e-expansion: e[2]\n"), std::string::npos) << out.text;
}

TEST(CmdExpand, Anchors) {
  EXPECT_NE(cmd_expand(expand_word("-+")).text.find("e-expansion: e[1]\n"), std::string::npos);
  EXPECT_NE(cmd_expand(expand_word("-0+")).text.find("e-expansion: e[2]\n"), std::string::npos);
  const std::string two = cmd_expand(expand_word("--++")).text;
  EXPECT_NE(two.find("e-expansion: e[1,1] + (q - 1)*e[2]\n"), std::string::npos) << two;
  EXPECT_NE(two.find("at q -> q+1: e[1,1] + q*e[2]\n"), std::string::npos) << two;
  EXPECT_NE(cmd_expand(expand_word("")).text.find("e-expansion: 1\n"), std::string::npos);
}

TEST(CmdExpand, Json) {
  const CommandOutput out = cmd_expand(expand_word("-0-0++", OutputFormat::Json));
  const Json j = Json::parse(out.text);
  EXPECT_EQ(j.at("n"), 4);
  EXPECT_EQ(j.at("e").at("[4]"), "q^2-q");
  EXPECT_EQ(j.at("qminus1").at("[4]"), Json::parse("[0,1,1]"));
  EXPECT_EQ(j.at("e_positive"), true);
  EXPECT_EQ(j.at("word"), "-0-0++");
  const auto back = positivity_report_from_json(j);
  EXPECT_EQ(back.at_q, e_expansion(parse_path_word("-0-0++")));
}

TEST(CmdExpand, ParseErrors) {
  try {
    cmd_expand(expand_word("-0"));
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.position(), 2u);
    EXPECT_NE(std::string(e.what()).find("unbalanced"), std::string::npos);
  }
  try {
    cmd_expand(expand_word("0+"));
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.position(), 0u);
  }
  EXPECT_THROW(cmd_expand(expand_word("-x+")), ParseError);
  EXPECT_THROW(cmd_expand(with_strips(Command::Expand, "0:")), ParseError);
  RunConfig both = expand_word("-+");
  both.strips = "0:1";
  EXPECT_THROW(cmd_expand(both), std::invalid_argument);
}

TEST(CmdPath, Examples) {
  const std::string fig = cmd_path(with_strips(Command::Path, "0:2;-2:2;-1:1;1:1;-3:2;-1:2")).text;
  EXPECT_NE(fig.find("word: -,-,0,0,-,+,-,-,+,+,0,0,-,+,+,+\n"), std::string::npos) << fig;
  EXPECT_NE(fig.find("area: (0,1,1,1,2,2,3,1,1,2)\n"), std::string::npos) << fig;
  EXPECT_NE(fig.find("crosses: 4 (1,3) (2,4) (6,8) (7,9)\n"), std::string::npos) << fig;
  EXPECT_NE(cmd_path(with_strips(Command::Path, "0:1")).text.find("word: -,+\n"), std::string::npos);
  const std::string two = cmd_path(with_strips(Command::Path, "0:1;0:1")).text;
  EXPECT_NE(two.find("word: -,-,+,+\narea: (0,1)\ncrosses: 0\n"), std::string::npos) << two;
}

TEST(CmdOracle, Examples) {
  const CommandOutput strip = cmd_oracle(with_strips(Command::Oracle, "0:2"));
  EXPECT_TRUE(strip.ok);
  EXPECT_NE(strip.text.find("operator side: x1*x2\n"), std::string::npos) << strip.text;
  EXPECT_NE(strip.text.find("tableau side:  x1*x2\n"), std::string::npos) << strip.text;
  EXPECT_TRUE(cmd_oracle(with_strips(Command::Oracle, "0:1;0:1")).ok);
  const CommandOutput empty = cmd_oracle(with_strips(Command::Oracle, ""));
  EXPECT_TRUE(empty.ok);
  EXPECT_NE(empty.text.find("operator side: (1)\n"), std::string::npos) << empty.text;
  RunConfig bad = with_strips(Command::Oracle, "0:1");
  bad.nvars = 0;
  EXPECT_THROW(cmd_oracle(bad), std::invalid_argument);
}

TEST(CmdVerify, SmallSemilengths) {
  RunConfig cfg;
  cfg.command = Command::Verify;
  cfg.max_semilength = 1;
  CommandOutput one = cmd_verify(cfg);
  EXPECT_TRUE(one.ok);
  EXPECT_NE(one.text.find("passed: 1/1"), std::string::npos);
  cfg.max_semilength = 2;
  EXPECT_NE(cmd_verify(cfg).text.find("semilength 2: 3 paths"), std::string::npos);
  cfg.max_semilength = 0;
  EXPECT_THROW(cmd_verify(cfg), std::invalid_argument);
}

TEST(CmdVerify, ParallelMatchesSerial) {
  const VerifySummary a = run_verify(5, 1);
  const VerifySummary b = run_verify(5, 3);
  EXPECT_EQ(a.total, b.total);
  EXPECT_EQ(a.passed, b.passed);
  EXPECT_EQ(a.paths_per_semilength, b.paths_per_semilength);
  EXPECT_TRUE(a.ok());
}

TEST(PathEnumeration, SmallCases) {
  const auto two = enumerate_paths(2);
  std::set<std::string> words;
  for (const auto& w : two) words.insert(compact_str(w));
  EXPECT_EQ(words, (std::set<std::string>{"-+-+", "--++", "-0+"}));
  EXPECT_EQ(enumerate_paths(1).size(), 1u);
  EXPECT_EQ(compact_str(enumerate_paths(1).front()), "-+");
}

TEST(PathEnumeration, CountsMatchIndependentCounters) {
  const auto rec = schroeder_recurrence(7);
  const auto fr = schroeder_first_return(7);
  EXPECT_EQ(rec, fr);
  EXPECT_EQ(rec, (std::vector<long>{1, 1, 3, 11, 45, 197, 903, 4279}));
  for (int n = 1; n <= 7; ++n) {
    const auto paths = enumerate_paths(n);
    EXPECT_EQ(static_cast<long>(paths.size()), rec[n]) << "n = " << n;
    std::set<PathWord> distinct(paths.begin(), paths.end());
    EXPECT_EQ(distinct.size(), paths.size());
    for (const auto& w : paths) {
      EXPECT_TRUE(is_valid_path(w)) << compact_str(w);
      EXPECT_EQ(semilength(w), n);
    }
  }
}

TEST(PathWordParsing, Forms) {
  EXPECT_EQ(parse_path_word("-,0,+"), parse_path_word("-0+"));
  EXPECT_EQ(comma_str(parse_path_word("-0+")), "-,0,+");
  EXPECT_TRUE(parse_path_word("").empty());
  try {
    parse_path_word("-+0");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.position(), 2u);
  }
  try {
    parse_path_word("+-");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.position(), 0u);
  }
}
