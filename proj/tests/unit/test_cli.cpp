#include <gtest/gtest.h>

#include <sstream>
#include <string>
#include <vector>

#include "fixtures.hpp"
#include "gq_cli/cli.hpp"
#include "json.hpp"

using namespace gq;

namespace {

  struct Result {
    int         code = -1;
    std::string out;
    std::string err;
  };

  Result gq_run(std::vector<std::string> args) {
    std::ostringstream out;
    std::ostringstream err;
    Result             r;
    r.code = cli::run(args, out, err);
    r.out  = out.str();
    r.err  = err.str();
    return r;
  }

  std::string data(std::string const& name) {
    return fixtures::data_path(name);
  }

  // The text following the first line that starts with `marker`.
  std::string after(std::string const& text, std::string const& marker) {
    auto const at = text.find(marker);
    if (at == std::string::npos) {
      return {};
    }
    auto const nl = text.find('\n', at);
    return nl == std::string::npos ? std::string() : text.substr(nl + 1);
  }

  std::vector<std::string> lines(std::string const& text) {
    std::vector<std::string> out;
    std::istringstream       in(text);
    for (std::string l; std::getline(in, l);) {
      out.push_back(l);
    }
    return out;
  }

  Tuple digits(std::string const& line) {
    Tuple              t;
    std::istringstream in(line);
    for (int x; in >> x;) {
      t.push_back(static_cast<Element>(x));
    }
    return t;
  }

}  // namespace

TEST(Cli, CheckGquordAccepts) {
  auto const r = gq_run({"check", "gquord", data("r1.rel")});
  EXPECT_EQ(r.code, cli::kOk);
  EXPECT_EQ(r.out, "reflexive: yes, transitive: yes\n");
}

TEST(Cli, GquordWitnessRefailsWhenFedBack) {
  auto const r = gq_run({"check", "gquord", data("m3a.rel")});
  ASSERT_EQ(r.code, cli::kFalse);
  auto const l = lines(after(r.out, "witness"));
  ASSERT_GE(l.size(), 3U);
  LineTensor const w = LineTensor::matrix({digits(l[0]), digits(l[1])});
  Relation const   rho = fixtures::m3a_rho();
  EXPECT_TRUE(models(rho, w));
  EXPECT_FALSE(rho.contains(w.diagonal()));
  EXPECT_EQ(l[2], "diagonal: 0 2");
}

TEST(Cli, UclCycleThree) {
  auto const r = gq_run({"ucl", "--cycle", "3"});
  EXPECT_EQ(r.code, cli::kOk);
  auto const m = std::get<Monoid>(parse(r.out));
  EXPECT_EQ(m, full_monoid(Universe(3)));
  EXPECT_EQ(lines(r.out).size(), 28U);
}

TEST(Cli, UclTraceListsSteps) {
  auto const r = gq_run({"ucl", "--trace", "--mon", "3: 012 001 000 111 222"});
  EXPECT_EQ(r.code, cli::kOk);
  EXPECT_NE(r.out.find("# step 1: added 0 0 2, |Gamma| = 6"), std::string::npos);
  EXPECT_EQ(std::get<Monoid>(parse(r.out)).size(), 6U);
}

TEST(Cli, UclosedWitnessRefailsWhenFedBack) {
  auto const r = gq_run({"check", "uclosed", data("m3a-end.mon")});
  ASSERT_EQ(r.code, cli::kFalse);
  std::string const block = after(r.out, "witness");
  std::string const fun   = block.substr(0, block.find("delta f"));
  OpTable const     f     = std::get<OpTable>(parse(fun));
  ASSERT_EQ(f.arity(), 2U);

  // The witness is in M* by the CLI's own membership test...
  std::string literal = "2 3: ";
  for (Element e : f.table()) {
    literal += static_cast<char>('0' + e);
  }
  auto const s = gq_run({"star", "--test", literal, data("m3a-end.mon")});
  EXPECT_EQ(s.code, cli::kOk);
  EXPECT_EQ(s.out, "in M*: yes\n");

  // ...and its diagonal is outside M.
  std::string const dline = r.out.substr(r.out.find("delta f: ") + 9);
  Tuple const       d     = digits(dline.substr(0, dline.find('\n')));
  auto const        m     = std::get<Monoid>(parse(gq_run({"end", data("m3a.rel")}).out));
  EXPECT_FALSE(m.contains(OpTable(Universe(3), 1, d)));
  EXPECT_EQ(OpTable(Universe(3), 1, d), preclone_transform(PrecloneOp::delta, f));
}

TEST(Cli, StarTestRejectsNonMembers) {
  auto const r = gq_run({"star", "--test", "1 3: 002", data("m3a-end.mon")});
  EXPECT_EQ(r.code, cli::kFalse);
}

TEST(Cli, StarCountsMatchLibrary) {
  auto const r = gq_run({"star", "--count", "--arity", "2", "--trivial", "3"});
  EXPECT_EQ(r.code, cli::kOk);
  auto const n = count_star_members(trivial_monoid(Universe(3)), 2);
  EXPECT_NE(r.out.find(std::to_string(n)), std::string::npos);
}

TEST(Cli, XiWitnessIsOutsidePol) {
  auto const r = gq_run({"check", "xi", data("m3a.rel")});
  ASSERT_EQ(r.code, cli::kFalse);
  OpTable const f = std::get<OpTable>(parse(after(r.out, "counterexample")));
  EXPECT_FALSE(preserves(f, fixtures::m3a_rho()));
  EXPECT_TRUE(in_star(f, end_of(fixtures::m3a_rho())));
}

TEST(Cli, EndOfTournament) {
  auto const r = gq_run({"end", data("tournament5.rel")});
  EXPECT_EQ(r.code, cli::kOk);
  EXPECT_EQ(std::get<Monoid>(parse(r.out)), trivial_monoid(Universe(5)));
}

TEST(Cli, InlineLiteralsMatchFiles) {
  auto const a = gq_run({"partial", "--rel", "2 3: 00 01 11 12 22"});
  auto const b = gq_run({"partial", data("m3a.rel")});
  EXPECT_EQ(a.code, cli::kOk);
  EXPECT_EQ(a.out, b.out);
  EXPECT_EQ(std::get<Relation>(parse(a.out)), partial(fixtures::m3a_rho()));
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(gq_run({}).code, cli::kUsage);
  EXPECT_EQ(gq_run({"frobnicate"}).code, cli::kUsage);
  EXPECT_EQ(gq_run({"check", "gquord", "--bogus"}).code, cli::kUsage);
  EXPECT_EQ(gq_run({"--max-arity", "9", "star", "--trivial", "3"}).code, cli::kUsage);
  EXPECT_EQ(gq_run({"check", "gquord", "--rel", "2 3: 00 03"}).code, cli::kUsage);
  EXPECT_EQ(gq_run({"check", "gquord", "/nonexistent/file.rel"}).code, cli::kUsage);
  EXPECT_EQ(gq_run({"ucl", "--cycle", "7"}).code, cli::kCapacity);
  EXPECT_EQ(gq_run({"paper-verify", "nope"}).code, cli::kUsage);
}

TEST(Cli, ParseErrorsNameTheLine) {
  auto const r = gq_run({"check", "gquord", "--rel", "2 3: 00 01 01"});
  EXPECT_EQ(r.code, cli::kUsage);
  EXPECT_FALSE(r.err.empty());
}

TEST(Cli, JsonOutputParses) {
  auto const r = gq_run({"--json", "check", "uclosed", data("m3a-end.mon")});
  EXPECT_EQ(r.code, cli::kFalse);
  auto const j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j.at("uclosed"), false);
  EXPECT_EQ(j.at("delta").at("table"), nlohmann::json::array({0, 0, 2}));
  auto const c = gq_run({"--json", "census", "--k", "2"});
  auto const s = nlohmann::json::parse(c.out);
  EXPECT_EQ(s.at("total"), 6);
}

TEST(Cli, OutputIndependentOfThreads) {
  auto const a = gq_run({"--threads", "1", "census", "--k", "3", "--dump"});
  auto const b = gq_run({"--threads", "4", "census", "--k", "3", "--dump"});
  EXPECT_EQ(a.code, cli::kOk);
  EXPECT_EQ(a.out, b.out);
  EXPECT_NE(a.out.find("699"), std::string::npos);
  auto const c = gq_run({"--threads", "1", "paper-verify", "b0min"});
  auto const d = gq_run({"--threads", "3", "paper-verify", "b0min"});
  EXPECT_EQ(c.out, d.out);
}

TEST(Cli, PaperVerifyCases) {
  auto const m = gq_run({"paper-verify", "m3a"});
  EXPECT_EQ(m.code, cli::kOk);
  EXPECT_EQ(m.out.rfind("PASS m3a", 0), 0U);
  auto const c = gq_run({"paper-verify", "census3"});
  EXPECT_EQ(c.code, cli::kOk);
  EXPECT_NE(c.out.find("699"), std::string::npos);
  EXPECT_NE(c.out.find("89"), std::string::npos);
  EXPECT_NE(c.out.find("71"), std::string::npos);
}

TEST(Cli, PaperVerifyAllReportsProductFailure) {
  // The product case fails on 2-element monoids; see the product tests.
  auto const r = gq_run({"paper-verify", "all"});
  EXPECT_EQ(r.code, cli::kFalse);
  EXPECT_NE(r.out.find("8 of 9 cases passed"), std::string::npos);
  EXPECT_NE(r.out.find("FAIL product"), std::string::npos);
}
