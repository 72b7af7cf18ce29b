#ifndef ROTLAT_CORPUS_HPP_
#define ROTLAT_CORPUS_HPP_

#include <algorithm>
#include <cstddef>
#include <tuple>
#include <vector>

#include "iso.hpp"
#include "lattice.hpp"
#include "poset.hpp"
#include "poset_enum.hpp"
#include "rotational.hpp"

namespace rotlat {

  struct CorpusEntry {
    Poset                poset;
    std::vector<index_t> sigma;  // automorphism of poset lifted to the algebra
    RotationalLattice    algebra;
  };

  // Every distributive rotational lattice whose join-irreducible poset has
  // at most max_poset_size points, one per isomorphism class.
  struct Corpus {
    std::size_t              max_poset_size = 0;
    std::size_t              poset_count    = 0;
    std::vector<CorpusEntry> algebras;
  };

  namespace detail {
    using corpus_fingerprint =
        std::tuple<std::size_t, std::size_t, std::vector<std::size_t>, std::size_t>;

    // (size, length, orbit-size multiset, atom count)
    inline corpus_fingerprint fingerprint(RotationalLattice const& A) {
      auto                     report = structure(A.lattice());
      std::vector<std::size_t> orbits;
      for (index_t x = 0; x < A.size(); ++x) {
        orbits.push_back(orbit(A, x).size());
      }
      std::sort(orbits.begin(), orbits.end());
      return {A.size(), report.length, std::move(orbits), report.atoms.size()};
    }
  }  // namespace detail

  inline constexpr std::size_t default_corpus_cap = 6;

  // Posets come from enumerate_posets, automorphisms from
  // poset_automorphisms (lexicographic); the first representative of each
  // isomorphism class is kept. The empty poset (one-element algebra) is
  // included only if include_trivial.
  inline Corpus build_corpus(std::size_t max_poset_size, bool include_trivial = true,
                             std::size_t cap = default_corpus_cap) {
    detail::check_cap(max_poset_size, cap, "corpus poset bound");
    Corpus c;
    c.max_poset_size = max_poset_size;
    for (Poset const& p : enumerate_posets(max_poset_size, cap)) {
      if (p.size() == 0 && !include_trivial) {
        continue;
      }
      ++c.poset_count;
      FiniteLattice const L = downset_lattice(p);
      std::vector<std::pair<detail::corpus_fingerprint, std::size_t>> kept;
      for (auto& sigma : poset_automorphisms(p)) {
        auto A  = RotationalLattice::make_unchecked(L, lift_automorphism(L, sigma));
        auto fp = detail::fingerprint(A);
        bool duplicate = false;
        for (auto const& [kfp, idx] : kept) {
          if (kfp == fp && is_isomorphic(A, c.algebras[idx].algebra)) {
            duplicate = true;
            break;
          }
        }
        if (!duplicate) {
          kept.emplace_back(std::move(fp), c.algebras.size());
          c.algebras.push_back({p, std::move(sigma), std::move(A)});
        }
      }
    }
    return c;
  }

}  // namespace rotlat

#endif  // ROTLAT_CORPUS_HPP_
