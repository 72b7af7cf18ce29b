#ifndef ROTLAT_ISO_HPP_
#define ROTLAT_ISO_HPP_

#include <algorithm>
#include <cstddef>
#include <optional>
#include <tuple>
#include <vector>

#include "lattice.hpp"
#include "rotational.hpp"

namespace rotlat {

  namespace detail {
    struct IsoProfile {
      std::vector<index_t>                                       ji;
      std::vector<std::tuple<std::size_t, std::size_t, std::size_t>> fingerprint;
      // below[x] lists the positions (in ji) of join-irreducibles under x
      std::vector<std::vector<std::size_t>> below;
    };

    inline IsoProfile iso_profile(RotationalLattice const& A) {
      IsoProfile p;
      p.ji        = join_irreducible_elements(A.lattice());
      auto report = structure(A.lattice());
      p.below.resize(A.size());
      for (index_t x = 0; x < A.size(); ++x) {
        for (std::size_t k = 0; k < p.ji.size(); ++k) {
          if (A.leq(p.ji[k], x)) {
            p.below[x].push_back(k);
          }
        }
      }
      for (index_t j : p.ji) {
        p.fingerprint.emplace_back(report.heights[j], orbit(A, j).size(), p.below[j].size());
      }
      return p;
    }
  }  // namespace detail

  // An isomorphism A -> B preserving join, meet and g, if one exists. The
  // search assigns join-irreducibles of A (ascending) to join-irreducibles of
  // B (ascending) with matching (height, orbit size, rank) fingerprints,
  // then extends by joins and verifies; the first success is returned.
  inline std::optional<AlgebraMap> is_isomorphic(RotationalLattice const& A,
                                                 RotationalLattice const& B) {
    if (A.size() != B.size() || A.order() != B.order()) {
      return std::nullopt;
    }
    auto const pa = detail::iso_profile(A);
    auto const pb = detail::iso_profile(B);
    if (pa.ji.size() != pb.ji.size()) {
      return std::nullopt;
    }
    {
      auto fa = pa.fingerprint, fb = pb.fingerprint;
      std::sort(fa.begin(), fa.end());
      std::sort(fb.begin(), fb.end());
      if (fa != fb) {
        return std::nullopt;
      }
    }
    std::size_t const        k = pa.ji.size();
    std::vector<std::size_t> sigma(k);
    std::vector<bool>        used(k, false);
    std::optional<AlgebraMap> found;

    auto extend = [&]() -> std::optional<AlgebraMap> {
      std::vector<index_t> map(A.size());
      for (index_t x = 0; x < A.size(); ++x) {
        index_t y = B.zero();
        for (std::size_t j : pa.below[x]) {
          y = B.join(y, pb.ji[sigma[j]]);
        }
        map[x] = y;
      }
      AlgebraMap m{A, B, std::move(map)};
      if (m.is_injective() && m.is_homomorphism()) {
        return m;
      }
      return std::nullopt;
    };

    auto rec = [&](auto&& self, std::size_t i) -> void {
      if (i == k) {
        found = extend();
        return;
      }
      index_t const a = pa.ji[i];
      for (std::size_t j = 0; j < k && !found; ++j) {
        if (used[j] || pa.fingerprint[i] != pb.fingerprint[j]) {
          continue;
        }
        index_t const b  = pb.ji[j];
        bool          ok = (A.g(a) == a) == (B.g(b) == b);
        for (std::size_t t = 0; t < i && ok; ++t) {
          index_t const at = pa.ji[t];
          index_t const bt = pb.ji[sigma[t]];
          ok = A.leq(at, a) == B.leq(bt, b) && A.leq(a, at) == B.leq(b, bt)
               && (A.g(a) == at) == (B.g(b) == bt) && (A.g(at) == a) == (B.g(bt) == b);
        }
        if (!ok) {
          continue;
        }
        sigma[i] = j;
        used[j]  = true;
        self(self, i + 1);
        used[j] = false;
      }
    };
    rec(rec, 0);
    return found;
  }

}  // namespace rotlat

#endif  // ROTLAT_ISO_HPP_
