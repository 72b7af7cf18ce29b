#ifndef ROTLAT_POSET_ENUM_HPP_
#define ROTLAT_POSET_ENUM_HPP_

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <map>
#include <numeric>
#include <tuple>
#include <vector>

#include "poset.hpp"

namespace rotlat {

  inline constexpr std::size_t default_poset_enum_cap = 6;

  namespace detail {
    // Row-major strict-order bits; unique per labelled poset of at most 8
    // points.
    inline std::uint64_t relation_code(Poset const& p) {
      std::uint64_t code = 0;
      std::size_t   n    = p.size();
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
          code <<= 1;
          code |= (i != j && p.leq(i, j)) ? 1 : 0;
        }
      }
      return code;
    }

    struct CanonicalPoset {
      std::uint64_t code;
      Poset         poset;
    };

    // Canonical labelling: points are first sorted by (down-set size,
    // up-set size); the representative is the relabelling with the largest
    // relation code among all orders consistent with that sort.
    inline CanonicalPoset canonical_form(Poset const& p) {
      std::size_t const n = p.size();
      using key_t         = std::pair<int, int>;
      std::vector<key_t> key(n);
      for (std::size_t i = 0; i < n; ++i) {
        key[i] = {std::popcount(p.down(i)), std::popcount(p.up(i))};
      }
      std::vector<index_t> order(n);
      std::iota(order.begin(), order.end(), 0);
      std::sort(order.begin(), order.end(), [&](index_t a, index_t b) {
        return key[a] < key[b] || (key[a] == key[b] && a < b);
      });
      // Blocks of equal key; permute inside each block.
      std::vector<std::pair<std::size_t, std::size_t>> blocks;
      for (std::size_t i = 0; i < n;) {
        std::size_t j = i;
        while (j < n && key[order[j]] == key[order[i]]) {
          ++j;
        }
        blocks.emplace_back(i, j);
        i = j;
      }
      std::uint64_t        best = 0;
      Poset                best_poset;
      bool                 first = true;
      std::vector<index_t> sigma(n);
      auto                 rec = [&](auto&& self, std::size_t b) -> void {
        if (b == blocks.size()) {
          for (std::size_t pos = 0; pos < n; ++pos) {
            sigma[order[pos]] = static_cast<index_t>(pos);
          }
          Poset         q    = p.relabeled(sigma);
          std::uint64_t code = relation_code(q);
          if (first || code > best) {
            best       = code;
            best_poset = q;
            first      = false;
          }
          return;
        }
        auto [lo, hi] = blocks[b];
        std::sort(order.begin() + lo, order.begin() + hi);
        do {
          self(self, b + 1);
        } while (std::next_permutation(order.begin() + lo, order.begin() + hi));
      };
      rec(rec, 0);
      return {best, best_poset};
    }
  }  // namespace detail

  // One representative of every isomorphism class of posets with exactly n
  // points, in ascending order of canonical code.
  inline std::vector<Poset> posets_of_size(std::size_t n,
                                           std::size_t cap = default_poset_enum_cap) {
    if (n > cap || n > 8) {
      throw CapExceeded("poset enumeration size " + std::to_string(n)
                        + " exceeds cap " + std::to_string(std::min<std::size_t>(cap, 8)));
    }
    std::vector<Poset> level{Poset::antichain(0)};
    for (std::size_t k = 1; k <= n; ++k) {
      std::map<std::uint64_t, Poset> next;
      for (Poset const& p : level) {
        // Every poset on k points arises from one on k-1 points by adding a
        // maximal point above some down-set.
        mask_t const all = p.all_points();
        for (mask_t d = 0;; d = (d - all) & all) {
          if (p.is_downset(d)) {
            std::vector<std::pair<std::size_t, std::size_t>> pairs;
            for (std::size_t i = 0; i < p.size(); ++i) {
              for (std::size_t j = 0; j < p.size(); ++j) {
                if (i != j && p.leq(i, j)) {
                  pairs.emplace_back(i, j);
                }
              }
            }
            detail::for_each_bit(d, [&](std::size_t i) { pairs.emplace_back(i, k - 1); });
            auto c = detail::canonical_form(Poset::from_relation(k, pairs));
            next.emplace(c.code, std::move(c.poset));
          }
          if (d == all) {
            break;
          }
        }
      }
      level.clear();
      for (auto& [code, q] : next) {
        level.push_back(std::move(q));
      }
    }
    return level;
  }

  // Every isomorphism class of posets with at most max_size points (including
  // the empty poset), grouped by size.
  inline std::vector<Poset> enumerate_posets(std::size_t max_size,
                                             std::size_t cap = default_poset_enum_cap) {
    if (max_size > cap) {
      throw CapExceeded("poset enumeration size " + std::to_string(max_size)
                        + " exceeds cap " + std::to_string(cap));
    }
    std::vector<Poset> result;
    for (std::size_t n = 0; n <= max_size; ++n) {
      auto level = posets_of_size(n, cap);
      result.insert(result.end(), level.begin(), level.end());
    }
    return result;
  }

}  // namespace rotlat

#endif  // ROTLAT_POSET_ENUM_HPP_
