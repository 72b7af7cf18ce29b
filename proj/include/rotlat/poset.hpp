#ifndef ROTLAT_POSET_HPP_
#define ROTLAT_POSET_HPP_

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "bits.hpp"
#include "error.hpp"

namespace rotlat {

  // Finite partial order on the points 0..size()-1. At most 64 points, since
  // down-sets are stored as single machine words.
  class Poset {
   public:
    static constexpr std::size_t max_points = 64;

    Poset() = default;

    // Reflexive-transitive closure of `pairs` (each pair (i, j) means i <= j).
    // Throws NotAPoset if the closure is not antisymmetric.
    static Poset from_relation(std::size_t                                 size,
                               std::span<std::pair<std::size_t, std::size_t> const> pairs) {
      if (size > max_points) {
        throw CapExceeded("poset has " + std::to_string(size)
                          + " points, at most 64 are supported");
      }
      Poset p;
      p._down.assign(size, 0);
      for (std::size_t i = 0; i < size; ++i) {
        p._down[i] = mask_t(1) << i;
      }
      for (auto [i, j] : pairs) {
        if (i >= size || j >= size) {
          throw InvalidArgument("relation pair (" + std::to_string(i) + ", "
                                + std::to_string(j) + ") out of range");
        }
        p._down[j] |= mask_t(1) << i;
      }
      for (std::size_t k = 0; k < size; ++k) {
        for (std::size_t i = 0; i < size; ++i) {
          if ((p._down[i] >> k) & 1u) {
            p._down[i] |= p._down[k];
          }
        }
      }
      for (std::size_t i = 0; i < size; ++i) {
        for (std::size_t j = i + 1; j < size; ++j) {
          if (p.leq(i, j) && p.leq(j, i)) {
            throw NotAPoset("cycle through points " + std::to_string(i)
                            + " and " + std::to_string(j));
          }
        }
      }
      return p;
    }

    static Poset from_relation(
        std::size_t                                               size,
        std::vector<std::pair<std::size_t, std::size_t>> const& pairs) {
      return from_relation(
          size, std::span<std::pair<std::size_t, std::size_t> const>(pairs));
    }

    static Poset antichain(std::size_t n) {
      return from_relation(n, std::vector<std::pair<std::size_t, std::size_t>>{});
    }

    static Poset chain(std::size_t n) {
      std::vector<std::pair<std::size_t, std::size_t>> pairs;
      for (std::size_t i = 0; i + 1 < n; ++i) {
        pairs.emplace_back(i, i + 1);
      }
      return from_relation(n, pairs);
    }

    // Disjoint union; the points of `other` are shifted by size().
    Poset disjoint_union(Poset const& other) const {
      if (size() + other.size() > max_points) {
        throw CapExceeded("disjoint union exceeds 64 points");
      }
      Poset p = *this;
      for (mask_t d : other._down) {
        p._down.push_back(d << size());
      }
      return p;
    }

    std::size_t size() const noexcept {
      return _down.size();
    }

    bool leq(std::size_t i, std::size_t j) const noexcept {
      return (_down[j] >> i) & 1u;
    }

    // Principal down-set of i (including i).
    mask_t down(std::size_t i) const noexcept {
      return _down[i];
    }

    mask_t up(std::size_t i) const noexcept {
      mask_t m = 0;
      for (std::size_t j = 0; j < size(); ++j) {
        if (leq(i, j)) {
          m |= mask_t(1) << j;
        }
      }
      return m;
    }

    mask_t all_points() const noexcept {
      return size() == 64 ? ~mask_t(0) : (mask_t(1) << size()) - 1;
    }

    bool is_downset(mask_t m) const noexcept {
      bool ok = true;
      detail::for_each_bit(m, [&](std::size_t i) { ok = ok && (_down[i] & ~m) == 0; });
      return ok;
    }

    // Covering pairs (i, j): i < j with nothing strictly between.
    std::vector<std::pair<std::size_t, std::size_t>> covers() const {
      std::vector<std::pair<std::size_t, std::size_t>> result;
      for (std::size_t j = 0; j < size(); ++j) {
        mask_t below = _down[j] & ~(mask_t(1) << j);
        detail::for_each_bit(below, [&](std::size_t i) {
          mask_t between = below & ~_down[i];
          bool   cover   = true;
          detail::for_each_bit(between, [&](std::size_t k) {
            cover = cover && !leq(i, k);
          });
          if (cover) {
            result.emplace_back(i, j);
          }
        });
      }
      std::sort(result.begin(), result.end());
      return result;
    }

    // Image of a set of points under a permutation of the points.
    static mask_t permute(mask_t m, std::span<index_t const> sigma) noexcept {
      mask_t r = 0;
      detail::for_each_bit(m, [&](std::size_t i) { r |= mask_t(1) << sigma[i]; });
      return r;
    }

    bool is_automorphism(std::span<index_t const> sigma) const {
      if (sigma.size() != size()) {
        return false;
      }
      mask_t seen = 0;
      for (index_t s : sigma) {
        if (s >= size() || ((seen >> s) & 1u)) {
          return false;
        }
        seen |= mask_t(1) << s;
      }
      for (std::size_t i = 0; i < size(); ++i) {
        if (permute(_down[i], sigma) != _down[sigma[i]]) {
          return false;
        }
      }
      return true;
    }

    // Relabels point i as sigma[i].
    Poset relabeled(std::span<index_t const> sigma) const {
      Poset p;
      p._down.assign(size(), 0);
      for (std::size_t i = 0; i < size(); ++i) {
        p._down[sigma[i]] = permute(_down[i], sigma);
      }
      return p;
    }

    bool operator==(Poset const&) const = default;

   private:
    std::vector<mask_t> _down;
  };

  // Validates a relation and returns its reflexive-transitive closure.
  inline Poset check_poset(
      std::size_t                                               size,
      std::vector<std::pair<std::size_t, std::size_t>> const& pairs) {
    return Poset::from_relation(size, pairs);
  }

  // All automorphisms of P, in lexicographic order of the image vector.
  inline std::vector<std::vector<index_t>> poset_automorphisms(Poset const& p) {
    std::size_t const                 n = p.size();
    std::vector<std::vector<index_t>> result;
    std::vector<index_t>              sigma(n);
    std::vector<std::size_t>          ndown(n), nup(n);
    for (std::size_t i = 0; i < n; ++i) {
      ndown[i] = std::popcount(p.down(i));
      nup[i]   = std::popcount(p.up(i));
    }
    mask_t used = 0;
    auto   rec  = [&](auto&& self, std::size_t i) -> void {
      if (i == n) {
        result.push_back(sigma);
        return;
      }
      for (std::size_t j = 0; j < n; ++j) {
        if ((used >> j) & 1u || ndown[i] != ndown[j] || nup[i] != nup[j]) {
          continue;
        }
        bool ok = true;
        for (std::size_t k = 0; k < i && ok; ++k) {
          ok = p.leq(k, i) == p.leq(sigma[k], j) && p.leq(i, k) == p.leq(j, sigma[k]);
        }
        if (!ok) {
          continue;
        }
        sigma[i] = static_cast<index_t>(j);
        used |= mask_t(1) << j;
        self(self, i + 1);
        used &= ~(mask_t(1) << j);
      }
    };
    rec(rec, 0);
    return result;
  }

  // Some isomorphism P -> Q (as an image vector), if one exists.
  inline std::optional<std::vector<index_t>> poset_isomorphism(Poset const& p,
                                                               Poset const& q) {
    std::size_t const n = p.size();
    if (q.size() != n) {
      return std::nullopt;
    }
    std::vector<index_t> sigma(n);
    mask_t               used  = 0;
    bool                 found = false;
    auto                 rec   = [&](auto&& self, std::size_t i) -> void {
      if (i == n) {
        found = true;
        return;
      }
      for (std::size_t j = 0; j < n && !found; ++j) {
        if ((used >> j) & 1u
            || std::popcount(p.down(i)) != std::popcount(q.down(j))
            || std::popcount(p.up(i)) != std::popcount(q.up(j))) {
          continue;
        }
        bool ok = true;
        for (std::size_t k = 0; k < i && ok; ++k) {
          ok = p.leq(k, i) == q.leq(sigma[k], j) && p.leq(i, k) == q.leq(j, sigma[k]);
        }
        if (!ok) {
          continue;
        }
        sigma[i] = static_cast<index_t>(j);
        used |= mask_t(1) << j;
        self(self, i + 1);
        used &= ~(mask_t(1) << j);
      }
    };
    rec(rec, 0);
    if (!found) {
      return std::nullopt;
    }
    return sigma;
  }

}  // namespace rotlat

#endif  // ROTLAT_POSET_HPP_
