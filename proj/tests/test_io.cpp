#include <gtest/gtest.h>

#include "aisr/aisr.hpp"

using namespace aisr;

TEST(Io, SemiringTextRoundTrip) {
  for (auto const& name : {"S7", "B21", "M2", "Sc_abb", "S7_0"}) {
    FiniteSemiring S = semiring_fixture(name);
    FiniteSemiring T = parse_semiring(format_semiring(S));
    EXPECT_EQ(S.names(), T.names()) << name;
    EXPECT_EQ(S.add_table(), T.add_table()) << name;
    EXPECT_EQ(S.mul_table(), T.mul_table()) << name;
    EXPECT_EQ(S.one(), T.one()) << name;
    EXPECT_EQ(S.zero(), T.zero()) << name;
  }
}

TEST(Io, SemiringParseErrors) {
  EXPECT_THROW(parse_semiring("elements: a b\nadd:\n a b\n b b\n"),
               ParseError);
  EXPECT_THROW(parse_semiring("elements: a b\nadd:\n a b\n b q\nmul:\n a a\n"
                              " a a\n"),
               ParseError);
  EXPECT_THROW(parse_semiring("bogus: 1\n"), ParseError);
}

TEST(Io, CommentsAreIgnored) {
  std::string text = "# a comment\n" + format_semiring(s7());
  EXPECT_EQ(parse_semiring(text).size(), 3u);
}

TEST(Io, GroupRoundTrip) {
  FiniteGroup G = symmetric_group_3();
  FiniteGroup H = parse_group(format_group(G));
  EXPECT_EQ(G.names(), H.names());
  EXPECT_EQ(G.mul_table(), H.mul_table());
  EXPECT_EQ(G.identity(), H.identity());
}

TEST(Io, HypergraphRoundTrip) {
  Hypergraph H(7, 3, {{0, 1, 2}, {0, 3, 4}, {0, 5, 6}});
  EXPECT_EQ(parse_hypergraph(format_hypergraph(H)), H);
  try {
    parse_hypergraph("3 4 1\n0 1 x\n");
    FAIL() << "expected a parse error";
  } catch (ParseError const& e) {
    EXPECT_GT(e.offset(), 0u);
  }
  EXPECT_THROW(parse_hypergraph("3 4 2\n0 1 2\n"), ParseError);
}

TEST(Io, JsonRoundTrip) {
  FiniteSemiring S = b21();
  FiniteSemiring T = semiring_from_json(to_json(S));
  EXPECT_EQ(S.names(), T.names());
  EXPECT_EQ(S.add_table(), T.add_table());
  EXPECT_EQ(S.mul_table(), T.mul_table());
}

TEST(Io, ReportJsonIsRecheckable) {
  WitnessReport r = sinm_construction(2);
  Json          j = to_json(r, 7);
  EXPECT_EQ(j["version"], kVersion);
  EXPECT_EQ(j["seed"], 7);
  EXPECT_TRUE(j["ok"].get<bool>());
  auto re = recheck_report(j);
  EXPECT_TRUE(re.axioms) << re.detail;
  EXPECT_TRUE(re.isomorphism) << re.detail;
  EXPECT_NE(format_report(r).find("isomorphism"), std::string::npos);
}

TEST(Io, CapsParsing) {
  Caps c = Caps::parse("carrier=10,candidates=20");
  EXPECT_EQ(c.max_carrier, 10u);
  EXPECT_EQ(c.max_candidates, 20u);
  EXPECT_EQ(c.max_power_base, Caps{}.max_power_base);
  EXPECT_THROW(Caps::parse("nope=1"), Error);
  EXPECT_THROW(Caps::parse("carrier=x"), Error);
}
