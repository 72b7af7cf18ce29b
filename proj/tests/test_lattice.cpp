#include <gtest/gtest.h>

#include "oracles.hpp"
#include "rotlat/rotlat.hpp"

using namespace rotlat;

namespace {
  using Pairs = std::vector<std::pair<std::size_t, std::size_t>>;

  FiniteLattice diamond() {
    return FiniteLattice::from_order(5, Pairs{{0, 1}, {0, 2}, {0, 3}, {1, 4}, {2, 4}, {3, 4}});
  }

  FiniteLattice pentagon() {
    return FiniteLattice::from_order(5, Pairs{{0, 1}, {1, 2}, {2, 4}, {0, 3}, {3, 4}});
  }

  bool is_chain(FiniteLattice const& L) {
    for (index_t a = 0; a < L.size(); ++a) {
      for (index_t b = 0; b < L.size(); ++b) {
        if (!L.leq(a, b) && !L.leq(b, a)) {
          return false;
        }
      }
    }
    return true;
  }
}  // namespace

TEST(DownsetLattice, OneAntichainIsTwoChain) {
  FiniteLattice L = downset_lattice(Poset::antichain(1));
  EXPECT_EQ(L.size(), 2u);
  EXPECT_TRUE(is_chain(L));
}

TEST(DownsetLattice, ThreeAntichainIsBoolean) {
  FiniteLattice L = downset_lattice(Poset::antichain(3));
  EXPECT_EQ(L.size(), 8u);
  // index = subset mask
  for (index_t a = 0; a < 8; ++a) {
    for (index_t b = 0; b < 8; ++b) {
      EXPECT_EQ(L.join(a, b), a | b);
      EXPECT_EQ(L.meet(a, b), a & b);
      EXPECT_EQ(L.leq(a, b), (a & ~b) == 0);
    }
  }
}

TEST(DownsetLattice, TwoChainIsThreeChain) {
  FiniteLattice L = downset_lattice(Poset::chain(2));
  EXPECT_EQ(L.size(), 3u);
  EXPECT_TRUE(is_chain(L));
}

TEST(DownsetLattice, EmptyPosetIsSingleton) {
  FiniteLattice L = downset_lattice(Poset::antichain(0));
  EXPECT_EQ(L.size(), 1u);
  EXPECT_EQ(L.zero(), L.one());
}

TEST(DownsetLattice, Cap) {
  EXPECT_THROW(downset_lattice(Poset::antichain(13)), CapExceeded);
  EXPECT_THROW(downset_lattice(Poset::antichain(4), 15), CapExceeded);
  EXPECT_NO_THROW(downset_lattice(Poset::antichain(4), 16));
}

TEST(DownsetLattice, TablesAgreeWithSetOperations) {
  for (Poset const& p : enumerate_posets(5)) {
    FiniteLattice L  = downset_lattice(p);
    auto          ds = *L.downsets();
    ASSERT_EQ(ds.size(), L.size());
    for (index_t a = 0; a < L.size(); ++a) {
      EXPECT_TRUE(p.is_downset(ds[a]));
      for (index_t b = 0; b < L.size(); ++b) {
        EXPECT_EQ(ds[L.join(a, b)], ds[a] | ds[b]);
        EXPECT_EQ(ds[L.meet(a, b)], ds[a] & ds[b]);
      }
    }
  }
}

TEST(JoinIrreducibles, BooleanGivesAntichain) {
  Poset p = join_irreducibles(downset_lattice(Poset::antichain(3)));
  EXPECT_TRUE(poset_isomorphism(p, Poset::antichain(3)).has_value());
}

TEST(JoinIrreducibles, ThreeChainGivesTwoChain) {
  FiniteLattice L = FiniteLattice::from_order(3, Pairs{{0, 1}, {1, 2}});
  EXPECT_TRUE(poset_isomorphism(join_irreducibles(L), Poset::chain(2)).has_value());
}

TEST(JoinIrreducibles, RoundTripUpToFive) {
  for (Poset const& p : enumerate_posets(5)) {
    FiniteLattice L = downset_lattice(p);
    EXPECT_TRUE(poset_isomorphism(join_irreducibles(L), p).has_value());
    // also through a lattice that has forgotten its down-set origin
    FiniteLattice bare = FiniteLattice::from_leq(L.order());
    EXPECT_FALSE(bare.downsets().has_value());
    EXPECT_TRUE(poset_isomorphism(join_irreducibles(bare), p).has_value());
  }
}

TEST(JoinIrreducibles, NonDistributiveIsUnsupported) {
  EXPECT_THROW(join_irreducibles(diamond()), Unsupported);
  EXPECT_THROW(join_irreducibles(pentagon()), Unsupported);
}

TEST(Distributive, Examples) {
  EXPECT_TRUE(is_distributive(downset_lattice(Poset::antichain(3))));
  EXPECT_FALSE(is_distributive(diamond()));
  EXPECT_FALSE(is_distributive(pentagon()));
}

TEST(Distributive, AgreesWithTripleOracle) {
  for (FiniteLattice const& L : {diamond(), pentagon()}) {
    EXPECT_EQ(is_distributive(L), oracle::distributive_by_triples(L));
  }
  for (Poset const& p : enumerate_posets(4)) {
    FiniteLattice L = downset_lattice(p);
    EXPECT_TRUE(oracle::distributive_by_triples(L));
    EXPECT_TRUE(is_distributive(FiniteLattice::from_leq(L.order())));
  }
}

TEST(FromOrder, RejectsNonLattice) {
  // two incomparable maximal elements: no top
  EXPECT_THROW(FiniteLattice::from_order(3, Pairs{{0, 1}, {0, 2}}), NotALattice);
  // bowtie: 0,1 below both 2,3
  EXPECT_THROW(
      FiniteLattice::from_order(6, Pairs{{4, 0}, {4, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 5},
                                         {3, 5}}),
      NotALattice);
}

TEST(FromOrder, RejectsCycle) {
  EXPECT_THROW(FiniteLattice::from_order(2, Pairs{{0, 1}, {1, 0}}), NotAPoset);
}

TEST(Structure, Boolean) {
  for (std::size_t n = 1; n <= 6; ++n) {
    auto r = structure(downset_lattice(Poset::antichain(n)));
    EXPECT_EQ(r.length, n);
    EXPECT_EQ(r.atoms.size(), n);
    EXPECT_TRUE(r.distributive);
  }
}

TEST(Structure, ThreeChain) {
  auto r = structure(FiniteLattice::from_order(3, Pairs{{0, 1}, {1, 2}}));
  EXPECT_EQ(r.length, 2u);
  EXPECT_EQ(r.atoms.size(), 1u);
  EXPECT_EQ(r.heights, (std::vector<std::size_t>{0, 1, 2}));
}

TEST(Structure, TwoAntichainAtoms) {
  FiniteLattice L  = downset_lattice(Poset::antichain(2));
  auto          r  = structure(L);
  auto          ds = *L.downsets();
  ASSERT_EQ(r.atoms.size(), 2u);
  EXPECT_EQ(ds[r.atoms[0]], mask_t(0b01));
  EXPECT_EQ(ds[r.atoms[1]], mask_t(0b10));
  EXPECT_EQ(r.length, 2u);
}

TEST(Structure, PentagonHeights) {
  auto r = structure(pentagon());
  EXPECT_EQ(r.length, 3u);
  EXPECT_FALSE(r.distributive);
  EXPECT_EQ(r.covers.size(), 5u);
}

TEST(CoveringPairs, FastPathMatchesGeneric) {
  for (Poset const& p : enumerate_posets(5)) {
    FiniteLattice L = downset_lattice(p);
    EXPECT_EQ(covering_pairs(L), covering_pairs(FiniteLattice::from_leq(L.order())));
  }
}
