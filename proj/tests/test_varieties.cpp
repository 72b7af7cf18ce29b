#include <gtest/gtest.h>

#include <set>

#include "oracles.hpp"
#include "rotlat/rotlat.hpp"

using namespace rotlat;

namespace {
  OrderIdeal ideal(std::vector<std::uint64_t> m) {
    return validate_ideal(std::move(m));
  }

  RotationalLattice b2xb3() {
    return direct_product(rotational_cube(2), rotational_cube(3));
  }
}  // namespace

TEST(OrderIdeal, Validate) {
  EXPECT_EQ(ideal({1, 2, 4}).members(), (std::vector<std::uint64_t>{1, 2, 4}));
  EXPECT_EQ(ideal({4, 1, 2, 2}).members(), (std::vector<std::uint64_t>{1, 2, 4}));
  EXPECT_THROW(ideal({2}), InvalidIdeal);
  EXPECT_THROW(ideal({1, 6}), InvalidIdeal);
  EXPECT_THROW(ideal({0, 1}), InvalidIdeal);
  EXPECT_TRUE(ideal({}).empty());
}

TEST(OrderIdeal, UpToSixHasSeventeen) {
  auto all = ideals_upto(6);
  EXPECT_EQ(all.size(), 17u);
  EXPECT_TRUE(all.front().empty());
}

TEST(OrderIdeal, CountMatchesSubsetFilter) {
  for (std::size_t N = 1; N <= 10; ++N) {
    std::size_t count = 0;
    for (std::uint32_t m = 0; m < (1u << N); ++m) {
      bool closed = true;
      for (std::size_t k = 1; k <= N; ++k) {
        if ((m >> (k - 1)) & 1u) {
          for (std::size_t d = 1; d < k; ++d) {
            if (k % d == 0 && !((m >> (d - 1)) & 1u)) {
              closed = false;
            }
          }
        }
      }
      count += closed;
    }
    EXPECT_EQ(ideals_upto(N).size(), count) << N;
  }
}

TEST(OrderIdeal, UpToCap) {
  EXPECT_THROW(ideals_upto(21), CapExceeded);
}

TEST(OrderIdeal, LatticeOperations) {
  auto a = ideal({1, 2, 4}), b = ideal({1, 3});
  EXPECT_EQ(a.unite(b).members(), (std::vector<std::uint64_t>{1, 2, 3, 4}));
  EXPECT_EQ(a.intersect(b).members(), (std::vector<std::uint64_t>{1}));
}

TEST(DivisorsIdeal, Examples) {
  EXPECT_EQ(divisors_ideal(1).members(), (std::vector<std::uint64_t>{1}));
  EXPECT_EQ(divisors_ideal(6).members(), (std::vector<std::uint64_t>{1, 2, 3, 6}));
  EXPECT_EQ(divisors_ideal(8).members(), (std::vector<std::uint64_t>{1, 2, 4, 8}));
  EXPECT_THROW(divisors_ideal(0), InvalidArgument);
}

TEST(HsCube, Examples) {
  EXPECT_TRUE(hs_cube(2, 6));
  EXPECT_FALSE(hs_cube(4, 6));
  for (std::uint64_t n = 1; n <= 20; ++n) {
    EXPECT_TRUE(hs_cube(1, n));
  }
  EXPECT_THROW(hs_cube(0, 3), InvalidArgument);
}

TEST(HsCube, MatchesBruteForceUpToFour) {
  for (std::size_t m = 1; m <= 4; ++m) {
    for (std::size_t n = 1; n <= 4; ++n) {
      EXPECT_EQ(hs_cube(m, n), oracle::hs_cube_bruteforce(m, n)) << m << " " << n;
    }
  }
}

TEST(EmbedCube, TwoIntoSix) {
  auto f = embed_cube(2, 6);
  EXPECT_EQ(f.map[cube_element({0})], cube_element({0, 2, 4}));
  EXPECT_EQ(f.map[cube_element({1})], cube_element({1, 3, 5}));
  EXPECT_TRUE(f.is_homomorphism());
  EXPECT_EQ(f.kind(), MapKind::embedding);
}

TEST(EmbedCube, Identity) {
  for (std::size_t m = 1; m <= 5; ++m) {
    auto f = embed_cube(m, m);
    for (index_t x = 0; x < f.map.size(); ++x) {
      EXPECT_EQ(f.map[x], x);
    }
  }
}

TEST(EmbedCube, OneIntoFour) {
  auto f = embed_cube(1, 4);
  EXPECT_EQ(f.map, (std::vector<index_t>{0, 15}));
}

TEST(EmbedCube, AllDivisorPairs) {
  for (std::size_t n = 1; n <= 7; ++n) {
    for (std::size_t m = 1; m <= n; ++m) {
      if (n % m != 0) {
        EXPECT_THROW(embed_cube(m, n), InvalidArgument);
        continue;
      }
      auto f   = embed_cube(m, n);
      auto img = f.image();
      EXPECT_TRUE(f.is_homomorphism());
      EXPECT_TRUE(f.is_injective());
      EXPECT_TRUE(is_spanning(f.target, img));
    }
  }
}

TEST(SiMembers, Examples) {
  EXPECT_EQ(si_members(ideal({1, 2, 3, 6})), (std::vector<std::uint64_t>{1, 2, 3, 6}));
  EXPECT_TRUE(si_members(ideal({})).empty());
  EXPECT_EQ(si_members(ideal({1})), (std::vector<std::uint64_t>{1}));
}

TEST(Membership, Examples) {
  auto in = variety_contains_algebra(ideal({1, 2, 3}), b2xb3());
  EXPECT_TRUE(in.member);
  EXPECT_FALSE(in.theorem_violation);
  ASSERT_EQ(in.certificate.size(), 2u);
  std::set<std::size_t> dims;
  for (auto const& c : in.certificate) {
    dims.insert(c.cube.value());
  }
  EXPECT_EQ(dims, (std::set<std::size_t>{2, 3}));

  EXPECT_FALSE(variety_contains_algebra(ideal({1, 2}), b2xb3()).member);

  for (auto const& X : ideals_upto(8)) {
    if (!X.empty()) {
      EXPECT_TRUE(variety_contains_algebra(X, rotational_cube(1)).member);
    }
  }
}

TEST(Membership, EmptyIdeal) {
  auto singleton = rotational_from_poset(Poset::antichain(0), std::vector<index_t>{});
  EXPECT_TRUE(variety_contains_algebra(ideal({}), singleton).member);
  EXPECT_FALSE(variety_contains_algebra(ideal({}), rotational_cube(1)).member);
  EXPECT_TRUE(variety_contains_algebra(ideal({1}), singleton).member);
}

TEST(Membership, Cubes) {
  EXPECT_TRUE(variety_contains_algebra(ideal({1, 2, 4}), rotational_cube(4)).member);
  EXPECT_FALSE(variety_contains_algebra(ideal({1, 2, 3, 6}), rotational_cube(4)).member);
}

TEST(Membership, NonDistributive) {
  using Pairs = std::vector<std::pair<std::size_t, std::size_t>>;
  auto M3     = with_identity(
      FiniteLattice::from_order(5, Pairs{{0, 1}, {0, 2}, {0, 3}, {1, 4}, {2, 4}, {3, 4}}));
  EXPECT_THROW(variety_contains_algebra(ideal({1}), M3), Unsupported);
}

TEST(Membership, AgreesWithBruteForceHs) {
  // A in V(X) for a subdirectly irreducible A iff A is in HS of some B_k,
  // k in X; checked on the small corpus against the HS oracle.
  auto corpus = build_corpus(3);
  for (auto const& e : corpus.algebras) {
    if (!is_subdirectly_irreducible(e.algebra)) {
      continue;
    }
    auto k = recognize_cube(e.algebra);
    ASSERT_TRUE(k.has_value());
    for (std::size_t n = 1; n <= 4; ++n) {
      auto X = divisors_ideal(n);
      EXPECT_EQ(variety_contains_algebra(X, e.algebra).member, oracle::hs_cube_bruteforce(*k, n));
    }
  }
}

TEST(VarietyLeq, Examples) {
  EXPECT_TRUE(variety_leq(ideal({1, 2}), ideal({1, 2, 4})));
  EXPECT_FALSE(variety_leq(ideal({1, 3}), ideal({1, 2, 4})));
  for (auto const& Y : ideals_upto(6)) {
    EXPECT_TRUE(variety_leq(ideal({}), Y));
  }
}

TEST(VarietyLeq, PartialOrder) {
  auto all = ideals_upto(6);
  for (auto const& X : all) {
    EXPECT_TRUE(variety_leq(X, X));
    for (auto const& Y : all) {
      if (variety_leq(X, Y) && variety_leq(Y, X)) {
        EXPECT_EQ(X, Y);
      }
      for (auto const& Z : all) {
        if (variety_leq(X, Y) && variety_leq(Y, Z)) {
          EXPECT_TRUE(variety_leq(X, Z));
        }
      }
    }
  }
}

TEST(OrderIdentity, Examples) {
  EXPECT_TRUE(satisfies_order_identity(rotational_cube(2), 6));
  EXPECT_FALSE(satisfies_order_identity(rotational_cube(4), 6));
  for (auto const& e : build_corpus(4).algebras) {
    EXPECT_TRUE(satisfies_order_identity(e.algebra, e.algebra.order()));
  }
  EXPECT_THROW(satisfies_order_identity(rotational_cube(2), 0), InvalidArgument);
}

TEST(OrderIdentity, PointwiseAgreesAndMatchesHs) {
  for (std::size_t m = 1; m <= 12; ++m) {
    auto B = rotational_cube(m);
    for (std::uint64_t n = 1; n <= 12; ++n) {
      EXPECT_EQ(satisfies_order_identity(B, n), satisfies_order_identity_pointwise(B, n));
      EXPECT_EQ(satisfies_order_identity(B, n), hs_cube(m, n));
      EXPECT_EQ(satisfies_order_identity(B, n), n % m == 0);
    }
  }
}

TEST(OrderIdentity, DSix) {
  std::set<std::size_t> sat;
  for (std::size_t m = 1; m <= 12; ++m) {
    if (satisfies_order_identity(rotational_cube(m), 6)) {
      sat.insert(m);
    }
  }
  EXPECT_EQ(sat, (std::set<std::size_t>{1, 2, 3, 6}));
}
