#include <gtest/gtest.h>

#include "oracles.hpp"
#include "rotlat/rotlat.hpp"

using namespace rotlat;

namespace {
  bool has_iso(Corpus const& c, RotationalLattice const& A) {
    for (auto const& e : c.algebras) {
      if (is_isomorphic(e.algebra, A)) {
        return true;
      }
    }
    return false;
  }
}  // namespace

TEST(Corpus, BoundOne) {
  auto with    = build_corpus(1);
  auto without = build_corpus(1, false);
  EXPECT_EQ(with.algebras.size(), 2u);
  EXPECT_EQ(without.algebras.size(), 1u);
  EXPECT_EQ(without.algebras[0].algebra.size(), 2u);
  EXPECT_EQ(without.algebras[0].algebra.order(), 1u);
}

TEST(Corpus, BoundTwoHasB2) {
  EXPECT_TRUE(has_iso(build_corpus(2), rotational_cube(2)));
}

TEST(Corpus, BoundThree) {
  auto c = build_corpus(3);
  EXPECT_TRUE(has_iso(c, rotational_cube(3)));
  std::vector<index_t> sigma{1, 0, 2};
  auto                 T = rotational_from_poset(Poset::antichain(3), sigma);
  EXPECT_EQ(T.order(), 2u);
  EXPECT_FALSE(recognize_cube(T).has_value());
  EXPECT_TRUE(has_iso(c, T));
}

TEST(Corpus, EntriesAreValid) {
  for (auto const& e : build_corpus(4).algebras) {
    std::vector<index_t> g(e.algebra.permutation().begin(), e.algebra.permutation().end());
    EXPECT_NO_THROW(make_rotational(e.algebra.lattice(), g));
    EXPECT_TRUE(e.poset.is_automorphism(e.sigma));
  }
}

TEST(Corpus, PairwiseNonIsomorphic) {
  auto c = build_corpus(4);
  for (std::size_t i = 0; i < c.algebras.size(); ++i) {
    for (std::size_t j = i + 1; j < c.algebras.size(); ++j) {
      EXPECT_FALSE(is_isomorphic(c.algebras[i].algebra, c.algebras[j].algebra));
    }
  }
}

TEST(Corpus, CompleteAgainstPermutationSearch) {
  // every lattice automorphism of every distributive lattice with at most
  // four join-irreducibles, found by brute force on the elements
  auto                           c = build_corpus(4);
  std::vector<RotationalLattice> brute;
  for (std::size_t n = 0; n <= 4; ++n) {
    for (Poset const& p : posets_of_size(n)) {
      FiniteLattice                  L = downset_lattice(p);
      std::vector<RotationalLattice> here;
      for (auto const& g : oracle::lattice_automorphisms(L)) {
        auto A   = make_rotational(L, g);
        bool dup = false;
        for (auto const& B : here) {
          dup = dup || is_isomorphic(A, B).has_value();
        }
        if (!dup) {
          here.push_back(A);
        }
      }
      brute.insert(brute.end(), here.begin(), here.end());
    }
  }
  EXPECT_EQ(c.algebras.size(), brute.size());
  for (auto const& A : brute) {
    EXPECT_TRUE(has_iso(c, A));
  }
}

TEST(Corpus, Counts) {
  EXPECT_EQ(build_corpus(5).poset_count, 88u);
  EXPECT_EQ(build_corpus(4).poset_count, 25u);
}

TEST(Corpus, Cap) {
  EXPECT_THROW(build_corpus(7), CapExceeded);
}

TEST(Corpus, Deterministic) {
  auto a = build_corpus(4), b = build_corpus(4);
  ASSERT_EQ(a.algebras.size(), b.algebras.size());
  for (std::size_t i = 0; i < a.algebras.size(); ++i) {
    EXPECT_EQ(a.algebras[i].poset, b.algebras[i].poset);
    EXPECT_EQ(a.algebras[i].sigma, b.algebras[i].sigma);
  }
}

TEST(VerifySi, SmallCorpus) {
  auto r = verify_si_classification(build_corpus(4));
  EXPECT_TRUE(r.ok());
  EXPECT_GT(r.instances, 40u);
  for (auto const& c : r.counterexamples) {
    ADD_FAILURE() << c;
  }
}

TEST(VerifySi, SingleAlgebras) {
  EXPECT_TRUE(verify_si_classification(rotational_cube(3)).ok());
  std::vector<index_t> sigma{1, 0, 2};
  auto                 T = rotational_from_poset(Poset::antichain(3), sigma);
  EXPECT_TRUE(verify_si_classification(T).ok());
  EXPECT_FALSE(is_subdirectly_irreducible(T));
}

TEST(VerifyLemmas, SmallCorpus) {
  auto r = verify_lemmas(build_corpus(4));
  EXPECT_TRUE(r.ok());
  for (auto const& c : r.counterexamples) {
    ADD_FAILURE() << c;
  }
  for (char const* name : {"orbit-lcm", "stable-split", "stable-is-bound", "spanning",
                           "height-sum", "orbit-cube", "max-orbit", "product-order",
                           "atom-boolean"}) {
    EXPECT_GT(r.per_check[name], 0u) << name;
  }
}

TEST(VerifyVarieties, UpToSix) {
  auto r = verify_variety_lattice(6);
  EXPECT_TRUE(r.ok());
  EXPECT_EQ(r.per_check["leq-vs-subset"], 289u);
  EXPECT_THROW(verify_variety_lattice(9), CapExceeded);
}
