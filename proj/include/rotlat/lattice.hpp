#ifndef ROTLAT_LATTICE_HPP_
#define ROTLAT_LATTICE_HPP_

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <numeric>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "bits.hpp"
#include "error.hpp"
#include "poset.hpp"

namespace rotlat {

  // A finite lattice on the element indices 0..size()-1, stored as an order
  // bit matrix together with precomputed join and meet tables. Copies share
  // the (immutable) tables.
  class FiniteLattice {
   public:
    FiniteLattice() = default;

    // Lattice whose order is the reflexive-transitive closure of `pairs`.
    // Throws NotAPoset / NotALattice when the relation is not a lattice order.
    static FiniteLattice from_order(
        std::size_t                                               size,
        std::vector<std::pair<std::size_t, std::size_t>> const& pairs,
        std::size_t                                               cap = default_element_cap) {
      if (size == 0) {
        throw NotALattice("a lattice has at least one element");
      }
      detail::check_cap(size, cap, "lattice size");
      BitMatrix leq(size);
      for (auto [i, j] : pairs) {
        if (i >= size || j >= size) {
          throw InvalidArgument("order pair out of range");
        }
        leq.set(i, j);
      }
      leq.close_reflexive_transitive();
      for (std::size_t i = 0; i < size; ++i) {
        for (std::size_t j = i + 1; j < size; ++j) {
          if (leq.get(i, j) && leq.get(j, i)) {
            throw NotAPoset("cycle through elements " + std::to_string(i)
                            + " and " + std::to_string(j));
          }
        }
      }
      return from_leq(std::move(leq));
    }

    // Lattice from a closed order matrix; computes the tables.
    static FiniteLattice from_leq(BitMatrix leq) {
      std::size_t const n   = leq.size();
      BitMatrix         geq = leq.transposed();
      auto              d   = std::make_shared<Data>();
      d->n                  = n;
      d->join.resize(n * n);
      d->meet.resize(n * n);
      std::vector<std::size_t> ndown(n);
      for (std::size_t i = 0; i < n; ++i) {
        ndown[i] = geq.row_count(i);
      }
      std::vector<mask_t> bounds(leq.words());
      // Least element of the set of common upper bounds (resp. greatest of
      // the common lower bounds), if it exists.
      auto extreme = [&](BitMatrix const& up, BitMatrix const& down,
                         std::size_t a, std::size_t b) -> std::size_t {
        auto ra = up.row(a);
        auto rb = up.row(b);
        for (std::size_t w = 0; w < bounds.size(); ++w) {
          bounds[w] = ra[w] & rb[w];
        }
        std::size_t best  = n;
        std::size_t bestc = 0;
        detail::for_each_bit(std::span<mask_t const>(bounds), [&](std::size_t u) {
          std::size_t c = down.row_count(u);
          if (best == n || c < bestc) {
            best  = u;
            bestc = c;
          }
        });
        if (best == n || !detail::subset(bounds, up.row(best))) {
          throw NotALattice("elements " + std::to_string(a) + " and "
                            + std::to_string(b) + " have no least upper / greatest lower bound");
        }
        return best;
      };
      for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = a; b < n; ++b) {
          auto j = static_cast<std::uint16_t>(extreme(leq, geq, a, b));
          auto m = static_cast<std::uint16_t>(extreme(geq, leq, a, b));
          d->join[a * n + b] = d->join[b * n + a] = j;
          d->meet[a * n + b] = d->meet[b * n + a] = m;
        }
      }
      std::size_t z = 0, o = 0;
      for (std::size_t i = 1; i < n; ++i) {
        z = d->meet[z * n + i];
        o = d->join[o * n + i];
      }
      d->zero = static_cast<index_t>(z);
      d->one  = static_cast<index_t>(o);
      d->leq  = std::move(leq);
      FiniteLattice L;
      L._data = std::move(d);
      return L;
    }

    // Lattice from join and meet tables (row-major, size n*n). Used for
    // sublattices, products and quotients whose tables are known exactly.
    static FiniteLattice from_tables(std::size_t                n,
                                     std::vector<std::uint16_t> join,
                                     std::vector<std::uint16_t> meet) {
      if (n == 0) {
        throw NotALattice("a lattice has at least one element");
      }
      auto d  = std::make_shared<Data>();
      d->n    = n;
      d->join = std::move(join);
      d->meet = std::move(meet);
      d->leq  = BitMatrix(n);
      for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = 0; b < n; ++b) {
          if (d->join[a * n + b] == b) {
            d->leq.set(a, b);
          }
        }
      }
      std::size_t z = 0, o = 0;
      for (std::size_t i = 1; i < n; ++i) {
        z = d->meet[z * n + i];
        o = d->join[o * n + i];
      }
      d->zero = static_cast<index_t>(z);
      d->one  = static_cast<index_t>(o);
      FiniteLattice L;
      L._data = std::move(d);
      return L;
    }

    std::size_t size() const noexcept {
      return _data ? _data->n : 0;
    }

    bool leq(index_t a, index_t b) const noexcept {
      return _data->leq.get(a, b);
    }

    index_t join(index_t a, index_t b) const noexcept {
      return _data->join[a * _data->n + b];
    }

    index_t meet(index_t a, index_t b) const noexcept {
      return _data->meet[a * _data->n + b];
    }

    index_t zero() const noexcept {
      return _data->zero;
    }

    index_t one() const noexcept {
      return _data->one;
    }

    BitMatrix const& order() const noexcept {
      return _data->leq;
    }

    // Present when the lattice is the full down-set lattice of a poset:
    // element i is the down-set downsets()[i].
    std::optional<std::span<mask_t const>> downsets() const noexcept {
      if (_data->downsets.empty()) {
        return std::nullopt;
      }
      return std::span<mask_t const>(_data->downsets);
    }

    Poset const& downset_base() const noexcept {
      return _data->base;
    }

    bool same_object(FiniteLattice const& other) const noexcept {
      return _data == other._data;
    }

   private:
    struct Data {
      std::size_t                n = 0;
      BitMatrix                  leq;
      std::vector<std::uint16_t> join;
      std::vector<std::uint16_t> meet;
      index_t                    zero = 0;
      index_t                    one  = 0;
      std::vector<mask_t>        downsets;
      Poset                      base;
    };

    friend FiniteLattice downset_lattice(Poset const&, std::size_t);

    std::shared_ptr<Data const> _data;
  };

  // All down-sets of P in ascending numeric order of their bit masks.
  inline std::vector<mask_t> downsets_of(Poset const& p,
                                         std::size_t  cap = default_element_cap) {
    std::vector<mask_t> result;
    std::size_t const   n = p.size();
    // Depth-first over a linear extension, so a point may join only once its
    // strict down-set is already in.
    std::vector<std::size_t> lin(n);
    std::iota(lin.begin(), lin.end(), 0);
    std::stable_sort(lin.begin(), lin.end(), [&](std::size_t a, std::size_t b) {
      return std::popcount(p.down(a)) < std::popcount(p.down(b));
    });
    auto rec = [&](auto&& self, std::size_t k, mask_t cur) -> void {
      if (k == n) {
        result.push_back(cur);
        detail::check_cap(result.size(), cap, "down-set lattice size");
        return;
      }
      std::size_t x = lin[k];
      self(self, k + 1, cur);
      mask_t below = p.down(x) & ~(mask_t(1) << x);
      if ((below & ~cur) == 0) {
        self(self, k + 1, cur | (mask_t(1) << x));
      }
    };
    rec(rec, 0, 0);
    std::sort(result.begin(), result.end());
    return result;
  }

  // Birkhoff representation: the lattice of down-sets of P under union and
  // intersection. Element i is the i-th down-set in ascending mask order, so
  // the empty set is element 0 and P itself is the last element.
  inline FiniteLattice downset_lattice(Poset const& p,
                                       std::size_t  cap = default_element_cap) {
    std::vector<mask_t> ds = downsets_of(p, cap);
    std::size_t const   n  = ds.size();

    std::vector<std::uint16_t>                         dense;
    std::unordered_map<mask_t, std::uint16_t>          sparse;
    bool const                                         use_dense = p.size() <= 20;
    if (use_dense) {
      dense.assign(std::size_t(1) << p.size(), 0);
      for (std::size_t i = 0; i < n; ++i) {
        dense[ds[i]] = static_cast<std::uint16_t>(i);
      }
    } else {
      for (std::size_t i = 0; i < n; ++i) {
        sparse.emplace(ds[i], static_cast<std::uint16_t>(i));
      }
    }
    auto index_of = [&](mask_t m) -> std::uint16_t {
      return use_dense ? dense[m] : sparse.at(m);
    };

    auto d  = std::make_shared<FiniteLattice::Data>();
    d->n    = n;
    d->leq  = BitMatrix(n);
    d->join.resize(n * n);
    d->meet.resize(n * n);
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = a; b < n; ++b) {
        std::uint16_t j    = index_of(ds[a] | ds[b]);
        std::uint16_t m    = index_of(ds[a] & ds[b]);
        d->join[a * n + b] = d->join[b * n + a] = j;
        d->meet[a * n + b] = d->meet[b * n + a] = m;
        if ((ds[a] & ~ds[b]) == 0) {
          d->leq.set(a, b);
        }
        if ((ds[b] & ~ds[a]) == 0) {
          d->leq.set(b, a);
        }
      }
    }
    d->zero     = 0;
    d->one      = static_cast<index_t>(n - 1);
    d->downsets = std::move(ds);
    d->base     = p;
    FiniteLattice L;
    L._data = std::move(d);
    return L;
  }

  // Brute-force check of x & (y | z) == (x & y) | (x & z) over all triples.
  inline bool is_distributive(FiniteLattice const& L) {
    std::size_t const n = L.size();
    for (index_t x = 0; x < n; ++x) {
      for (index_t y = 0; y < n; ++y) {
        for (index_t z = y + 1; z < n; ++z) {
          if (L.meet(x, L.join(y, z)) != L.join(L.meet(x, y), L.meet(x, z))) {
            return false;
          }
        }
      }
    }
    return true;
  }

  struct StructureReport {
    std::vector<index_t>                         atoms;
    std::vector<std::size_t>                     heights;
    std::size_t                                  length = 0;
    std::vector<std::pair<index_t, index_t>>     covers;
    bool                                         distributive = false;
  };

  // Covering pairs (a, b), a covered by b, sorted lexicographically.
  inline std::vector<std::pair<index_t, index_t>> covering_pairs(FiniteLattice const& L) {
    std::vector<std::pair<index_t, index_t>> result;
    std::size_t const                        n = L.size();
    if (auto ds = L.downsets()) {
      // b covers a iff b = a plus one point.
      for (index_t a = 0; a < n; ++a) {
        for (index_t b = 0; b < n; ++b) {
          mask_t diff = (*ds)[b] & ~(*ds)[a];
          if ((*ds)[a] != (*ds)[b] && ((*ds)[a] & ~(*ds)[b]) == 0
              && std::popcount(diff) == 1) {
            result.emplace_back(a, b);
          }
        }
      }
      std::sort(result.begin(), result.end());
      return result;
    }
    BitMatrix const&    leq = L.order();
    std::vector<mask_t> between(leq.words());
    BitMatrix           geq = leq.transposed();
    for (index_t a = 0; a < n; ++a) {
      for (index_t b = 0; b < n; ++b) {
        if (a == b || !leq.get(a, b)) {
          continue;
        }
        auto up   = leq.row(a);
        auto down = geq.row(b);
        bool any  = false;
        for (std::size_t w = 0; w < between.size() && !any; ++w) {
          mask_t m = up[w] & down[w];
          if (w == a / 64) {
            m &= ~(mask_t(1) << (a % 64));
          }
          if (w == b / 64) {
            m &= ~(mask_t(1) << (b % 64));
          }
          any = m != 0;
        }
        if (!any) {
          result.emplace_back(a, b);
        }
      }
    }
    return result;
  }

  // Heights (longest cover chain from zero), atoms, length, covers.
  inline StructureReport structure(FiniteLattice const& L) {
    StructureReport   r;
    std::size_t const n = L.size();
    r.covers            = covering_pairs(L);
    r.heights.assign(n, 0);
    // Elements in a linear extension: sort by down-set size.
    std::vector<index_t>     order(n);
    std::vector<std::size_t> ndown(n);
    BitMatrix                geq = L.order().transposed();
    for (index_t i = 0; i < n; ++i) {
      order[i] = i;
      ndown[i] = geq.row_count(i);
    }
    std::stable_sort(order.begin(), order.end(),
                     [&](index_t a, index_t b) { return ndown[a] < ndown[b]; });
    std::vector<std::vector<index_t>> lower(n);
    for (auto [a, b] : r.covers) {
      lower[b].push_back(a);
    }
    for (index_t x : order) {
      for (index_t y : lower[x]) {
        r.heights[x] = std::max(r.heights[x], r.heights[y] + 1);
      }
    }
    for (auto [a, b] : r.covers) {
      if (a == L.zero()) {
        r.atoms.push_back(b);
      }
    }
    std::sort(r.atoms.begin(), r.atoms.end());
    r.length       = r.heights[L.one()];
    r.distributive = L.downsets().has_value() || is_distributive(L);
    return r;
  }

  // Join-irreducible elements (exactly one lower cover), ascending.
  inline std::vector<index_t> join_irreducible_elements(FiniteLattice const& L) {
    std::vector<std::size_t> nlower(L.size(), 0);
    for (auto [a, b] : covering_pairs(L)) {
      ++nlower[b];
    }
    std::vector<index_t> result;
    for (index_t x = 0; x < L.size(); ++x) {
      if (nlower[x] == 1) {
        result.push_back(x);
      }
    }
    return result;
  }

  // Inverse Birkhoff direction: the poset of join-irreducibles of a
  // distributive lattice, point k being the k-th join-irreducible.
  inline Poset join_irreducibles(FiniteLattice const& L) {
    if (!L.downsets() && !is_distributive(L)) {
      throw Unsupported("join_irreducibles requires a distributive lattice");
    }
    auto const ji = join_irreducible_elements(L);
    if (ji.size() > Poset::max_points) {
      throw CapExceeded("more than 64 join-irreducibles");
    }
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t i = 0; i < ji.size(); ++i) {
      for (std::size_t j = 0; j < ji.size(); ++j) {
        if (i != j && L.leq(ji[i], ji[j])) {
          pairs.emplace_back(i, j);
        }
      }
    }
    return Poset::from_relation(ji.size(), pairs);
  }

}  // namespace rotlat

#endif  // ROTLAT_LATTICE_HPP_
