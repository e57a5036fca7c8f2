#include <gtest/gtest.h>

#include "aisr/aisr.hpp"
#include "oracles.hpp"

using namespace aisr;

namespace {

  std::vector<Elem> all_of(FiniteGroup const& G) {
    std::vector<Elem> v(G.size());
    for (Elem x = 0; x < G.size(); ++x) {
      v[x] = x;
    }
    return v;
  }

  // Order of x by repeated multiplication.
  std::size_t order(FiniteGroup const& G, Elem x) {
    std::size_t k = 1;
    for (Elem p = x; p != G.identity(); p = G.mul(p, x)) {
      ++k;
    }
    return k;
  }

}  // namespace

TEST(Groups, StandardGroupsAreGroups) {
  for (auto const& name : group_fixture_names()) {
    FiniteGroup G = group_fixture(name);
    EXPECT_TRUE(verify_group(G).empty()) << name;
  }
  EXPECT_THROW(group_fixture("nope"), PreconditionError);
}

TEST(Groups, RejectsNonGroups) {
  // a has no inverse
  FiniteGroup bad({"e", "a"}, {0, 1, 1, 1}, 0);
  auto        v = verify_group(bad);
  ASSERT_FALSE(v.empty());
  EXPECT_EQ(v.front().axiom, "inverse");
}

TEST(Groups, Quaternion) {
  FiniteGroup Q = quaternion_group();
  EXPECT_EQ(Q.size(), 8u);
  EXPECT_FALSE(is_abelian(Q, all_of(Q)));
  EXPECT_EQ(nilpotency_class(Q, all_of(Q)), std::optional<std::size_t>(2));
  EXPECT_EQ(group_exponent(Q), 4u);
  std::size_t order4 = 0;
  for (Elem x = 0; x < 8; ++x) {
    order4 += order(Q, x) == 4 ? 1 : 0;
  }
  EXPECT_EQ(order4, 6u);
}

TEST(Groups, Heisenberg) {
  FiniteGroup H = heisenberg_group();
  EXPECT_EQ(H.size(), 27u);
  EXPECT_FALSE(is_abelian(H, all_of(H)));
  EXPECT_EQ(nilpotency_class(H, all_of(H)), std::optional<std::size_t>(2));
  EXPECT_EQ(group_exponent(H), 3u);
  for (Elem x = 0; x < 27; ++x) {
    EXPECT_LE(order(H, x), 3u);
  }
}

TEST(Groups, S3IsNotNilpotent) {
  FiniteGroup S = symmetric_group_3();
  EXPECT_FALSE(nilpotency_class(S, all_of(S)));
  auto subs = enumerate_subgroups(S);
  // trivial, three of order 2, one of order 3, whole group
  EXPECT_EQ(subs.size(), 6u);
}

TEST(Groups, SubgroupsOfQ8) {
  auto subs = enumerate_subgroups(quaternion_group());
  EXPECT_EQ(subs.size(), 6u);
  for (auto const& w : subs) {
    EXPECT_EQ(8 % w.carrier.size(), 0u);
  }
}

TEST(Groups, FlatExtension) {
  FiniteSemiring F = flat_extension(quaternion_group(), false);
  EXPECT_EQ(F.size(), 9u);
  EXPECT_TRUE(F.is_flat());
  EXPECT_TRUE(oracle::is_ai_semiring(F));
  FiniteSemiring F0 = flat_extension(cyclic_group(3), true);
  EXPECT_EQ(F0.size(), 5u);
  EXPECT_TRUE(F0.zero());
  EXPECT_TRUE(oracle::is_ai_semiring(F0));
}

TEST(Groups, MultiplicativeSubgroupsOfFlatGroup) {
  FiniteSemiring F    = flat_extension(cyclic_group(4), false);
  auto           subs = multiplicative_subgroups(F, false);
  // at the identity (order 4) and at the top (order 1)
  ASSERT_EQ(subs.size(), 2u);
  std::size_t big = std::max(subs[0].carrier.size(), subs[1].carrier.size());
  EXPECT_EQ(big, 4u);
  EXPECT_FALSE(nonabelian_nilpotent_witness(F));
  auto w = nonabelian_nilpotent_witness(flat_q8());
  ASSERT_TRUE(w);
  EXPECT_EQ(w->carrier.size(), 8u);
}

TEST(Groups, ExtractFromFlatGroupItself) {
  FiniteSemiring    F = flat_extension(symmetric_group_3(), false);
  std::vector<Elem> G;
  for (Elem x = 0; x < F.size(); ++x) {
    if (x != *F.top()) {
      G.push_back(x);
    }
  }
  WitnessReport r = extract_flat_group(F, G);
  EXPECT_TRUE(r.ok());
  ASSERT_TRUE(r.find("isomorphism"));
  EXPECT_FALSE(extract_flat_group(F, {G[0], G[1]}).ok());
}

TEST(Groups, QuotientEmbeddingIdentityMap) {
  FiniteSemiring    F = flat_extension(cyclic_group(3), false);
  std::vector<Elem> phi(F.size());
  std::vector<Elem> G;
  for (Elem x = 0; x < F.size(); ++x) {
    phi[x] = x;
    if (x != *F.top()) {
      G.push_back(x);
    }
  }
  auto e = group_quotient_embedding(F, F, phi, G);
  EXPECT_TRUE(e.injective_hom) << e.detail;
  EXPECT_EQ(e.embedding.size(), 3u);
}
