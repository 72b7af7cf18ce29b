#ifndef ROTLAT_ROTATIONAL_HPP_
#define ROTLAT_ROTATIONAL_HPP_

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <limits>
#include <numeric>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "bits.hpp"
#include "error.hpp"
#include "lattice.hpp"
#include "poset.hpp"

namespace rotlat {

  // A finite lattice together with an automorphism g; order() is the least n
  // with g^n = identity.
  class RotationalLattice {
   public:
    RotationalLattice() = default;

    // Validates that g is a bijection preserving join and meet.
    static RotationalLattice make(FiniteLattice L, std::vector<index_t> g) {
      std::size_t const n = L.size();
      if (g.size() != n) {
        throw NotAnAutomorphism("permutation has " + std::to_string(g.size())
                                + " entries, lattice has " + std::to_string(n));
      }
      std::vector<bool> seen(n, false);
      for (index_t x : g) {
        if (x >= n || seen[x]) {
          throw NotAnAutomorphism("g is not a bijection");
        }
        seen[x] = true;
      }
      for (index_t a = 0; a < n; ++a) {
        for (index_t b = a + 1; b < n; ++b) {
          if (g[L.join(a, b)] != L.join(g[a], g[b])
              || g[L.meet(a, b)] != L.meet(g[a], g[b])) {
            throw NotAnAutomorphism("g does not preserve the operations at ("
                                    + std::to_string(a) + ", " + std::to_string(b) + ")");
          }
        }
      }
      RotationalLattice A;
      A._lattice = std::move(L);
      A._g       = std::move(g);
      A._order   = cycle_lcm(A._g);
      return A;
    }

    // Skips validation; for constructions that preserve the operations by
    // construction (sub-universes, quotients, products).
    static RotationalLattice make_unchecked(FiniteLattice L, std::vector<index_t> g) {
      RotationalLattice A;
      A._lattice = std::move(L);
      A._g       = std::move(g);
      A._order   = cycle_lcm(A._g);
      return A;
    }

    FiniteLattice const& lattice() const noexcept {
      return _lattice;
    }

    std::size_t size() const noexcept {
      return _lattice.size();
    }

    index_t g(index_t x) const noexcept {
      return _g[x];
    }

    std::span<index_t const> permutation() const noexcept {
      return _g;
    }

    std::uint64_t order() const noexcept {
      return _order;
    }

    index_t join(index_t a, index_t b) const noexcept {
      return _lattice.join(a, b);
    }

    index_t meet(index_t a, index_t b) const noexcept {
      return _lattice.meet(a, b);
    }

    bool leq(index_t a, index_t b) const noexcept {
      return _lattice.leq(a, b);
    }

    index_t zero() const noexcept {
      return _lattice.zero();
    }

    index_t one() const noexcept {
      return _lattice.one();
    }

   private:
    static std::uint64_t cycle_lcm(std::vector<index_t> const& g) {
      std::vector<bool> seen(g.size(), false);
      std::uint64_t     result = 1;
      for (std::size_t x = 0; x < g.size(); ++x) {
        if (seen[x]) {
          continue;
        }
        std::uint64_t len = 0;
        for (std::size_t y = x; !seen[y]; y = g[y]) {
          seen[y] = true;
          ++len;
        }
        std::uint64_t q = result / detail::gcd(result, len);
        if (q > std::numeric_limits<std::uint64_t>::max() / len) {
          throw CapExceeded("order overflows 64 bits");
        }
        result = q * len;
      }
      return result;
    }

    FiniteLattice        _lattice;
    std::vector<index_t> _g;
    std::uint64_t        _order = 1;
  };

  inline RotationalLattice make_rotational(FiniteLattice L, std::vector<index_t> g) {
    return RotationalLattice::make(std::move(L), std::move(g));
  }

  inline RotationalLattice with_identity(FiniteLattice L) {
    std::vector<index_t> id(L.size());
    std::iota(id.begin(), id.end(), 0);
    return RotationalLattice::make_unchecked(std::move(L), std::move(id));
  }

  enum class MapKind { homomorphism, embedding, quotient, isomorphism };

  inline char const* to_string(MapKind k) noexcept {
    switch (k) {
      case MapKind::embedding:
        return "embedding";
      case MapKind::quotient:
        return "quotient";
      case MapKind::isomorphism:
        return "isomorphism";
      default:
        return "homomorphism";
    }
  }

  // A map between rotational lattices given by the image of every element.
  struct AlgebraMap {
    RotationalLattice    source;
    RotationalLattice    target;
    std::vector<index_t> map;

    index_t operator()(index_t x) const noexcept {
      return map[x];
    }

    bool is_homomorphism() const {
      if (map.size() != source.size()) {
        return false;
      }
      for (index_t y : map) {
        if (y >= target.size()) {
          return false;
        }
      }
      for (index_t a = 0; a < source.size(); ++a) {
        if (map[source.g(a)] != target.g(map[a])) {
          return false;
        }
        for (index_t b = a + 1; b < source.size(); ++b) {
          if (map[source.join(a, b)] != target.join(map[a], map[b])
              || map[source.meet(a, b)] != target.meet(map[a], map[b])) {
            return false;
          }
        }
      }
      return true;
    }

    bool is_injective() const {
      std::vector<bool> hit(target.size(), false);
      for (index_t y : map) {
        if (hit[y]) {
          return false;
        }
        hit[y] = true;
      }
      return true;
    }

    bool is_surjective() const {
      std::vector<bool> hit(target.size(), false);
      std::size_t       count = 0;
      for (index_t y : map) {
        if (!hit[y]) {
          hit[y] = true;
          ++count;
        }
      }
      return count == target.size();
    }

    MapKind kind() const {
      bool inj = is_injective();
      bool sur = is_surjective();
      if (inj && sur) {
        return MapKind::isomorphism;
      }
      if (inj) {
        return MapKind::embedding;
      }
      if (sur) {
        return MapKind::quotient;
      }
      return MapKind::homomorphism;
    }

    // Sorted image set.
    std::vector<index_t> image() const {
      std::vector<index_t> im(map);
      std::sort(im.begin(), im.end());
      im.erase(std::unique(im.begin(), im.end()), im.end());
      return im;
    }
  };

  // Lifts a poset automorphism sigma to the down-set lattice of the poset.
  inline std::vector<index_t> lift_automorphism(FiniteLattice const&     L,
                                                std::span<index_t const> sigma) {
    auto ds = L.downsets();
    if (!ds) {
      throw InvalidArgument("lattice is not a down-set lattice");
    }
    if (!L.downset_base().is_automorphism(sigma)) {
      throw NotAnAutomorphism("sigma is not an automorphism of the poset");
    }
    std::vector<index_t> g(L.size());
    for (index_t i = 0; i < L.size(); ++i) {
      mask_t img = Poset::permute((*ds)[i], sigma);
      auto   it  = std::lower_bound(ds->begin(), ds->end(), img);
      g[i]       = static_cast<index_t>(it - ds->begin());
    }
    return g;
  }

  // Down-set lattice of P with the automorphism lifted from sigma.
  inline RotationalLattice rotational_from_poset(Poset const&             p,
                                                 std::span<index_t const> sigma,
                                                 std::size_t cap = default_element_cap) {
    FiniteLattice L = downset_lattice(p, cap);
    auto          g = lift_automorphism(L, sigma);
    return RotationalLattice::make_unchecked(std::move(L), std::move(g));
  }

  // The boolean lattice of subsets of {0..n-1} with g rotating the atoms
  // a_i -> a_{i+1 mod n}. Element index equals the subset's bit mask.
  inline RotationalLattice rotational_cube(std::size_t n,
                                           std::size_t cap = default_element_cap) {
    if (n == 0) {
      throw InvalidArgument("rotational cube dimension must be at least 1");
    }
    if (n >= 63 || (std::size_t(1) << n) > cap) {
      throw CapExceeded("rotational cube B_" + std::to_string(n) + " exceeds element cap "
                        + std::to_string(cap));
    }
    std::vector<index_t> sigma(n);
    for (std::size_t i = 0; i < n; ++i) {
      sigma[i] = static_cast<index_t>((i + 1) % n);
    }
    return rotational_from_poset(Poset::antichain(n), sigma, cap);
  }

  // Element of B_n that is the join of the given atoms.
  inline index_t cube_element(std::initializer_list<std::size_t> atoms) {
    index_t x = 0;
    for (std::size_t a : atoms) {
      x |= index_t(1) << a;
    }
    return x;
  }

  inline std::vector<index_t> orbit(RotationalLattice const& A, index_t a) {
    std::vector<index_t> result{a};
    for (index_t x = A.g(a); x != a; x = A.g(x)) {
      result.push_back(x);
    }
    return result;
  }

  inline std::vector<index_t> stable_elements(RotationalLattice const& A) {
    std::vector<index_t> result;
    for (index_t x = 0; x < A.size(); ++x) {
      if (A.g(x) == x) {
        result.push_back(x);
      }
    }
    return result;
  }

  // Sorted set of elements -> sub-algebra on those elements, listed in the
  // given order; caller guarantees closure under join, meet and g.
  inline RotationalLattice restrict_to(RotationalLattice const& A,
                                       std::span<index_t const> elements) {
    std::size_t const          k = elements.size();
    std::vector<index_t>       pos(A.size(), std::numeric_limits<index_t>::max());
    for (std::size_t i = 0; i < k; ++i) {
      pos[elements[i]] = static_cast<index_t>(i);
    }
    std::vector<std::uint16_t> join(k * k), meet(k * k);
    for (std::size_t i = 0; i < k; ++i) {
      for (std::size_t j = 0; j < k; ++j) {
        join[i * k + j] = static_cast<std::uint16_t>(pos[A.join(elements[i], elements[j])]);
        meet[i * k + j] = static_cast<std::uint16_t>(pos[A.meet(elements[i], elements[j])]);
      }
    }
    std::vector<index_t> g(k);
    for (std::size_t i = 0; i < k; ++i) {
      g[i] = pos[A.g(elements[i])];
    }
    return RotationalLattice::make_unchecked(
        FiniteLattice::from_tables(k, std::move(join), std::move(meet)), std::move(g));
  }

  // True iff the (nonempty) set is closed under join, meet and g.
  inline bool is_subuniverse(RotationalLattice const& A, std::span<index_t const> M) {
    if (M.empty()) {
      return false;
    }
    std::vector<bool> in(A.size(), false);
    for (index_t x : M) {
      if (x >= A.size()) {
        return false;
      }
      in[x] = true;
    }
    for (index_t x : M) {
      if (!in[A.g(x)]) {
        return false;
      }
      for (index_t y : M) {
        if (!in[A.join(x, y)] || !in[A.meet(x, y)]) {
          return false;
        }
      }
    }
    return true;
  }

  // Least subuniverse containing S, sorted ascending.
  inline std::vector<index_t> generated_subuniverse(RotationalLattice const& A,
                                                    std::span<index_t const> S) {
    if (S.empty()) {
      throw InvalidArgument("generating set must be nonempty");
    }
    std::vector<bool>    in(A.size(), false);
    std::vector<index_t> members;
    auto                 add = [&](index_t x) {
      if (!in[x]) {
        in[x] = true;
        members.push_back(x);
      }
    };
    for (index_t s : S) {
      if (s >= A.size()) {
        throw InvalidArgument("generator out of range");
      }
      add(s);
    }
    for (std::size_t i = 0; i < members.size(); ++i) {
      index_t x = members[i];
      add(A.g(x));
      for (std::size_t j = 0; j <= i; ++j) {
        add(A.join(x, members[j]));
        add(A.meet(x, members[j]));
      }
    }
    std::sort(members.begin(), members.end());
    return members;
  }

  // Closure of a set under join and meet only.
  inline std::vector<index_t> generated_sublattice(FiniteLattice const&     L,
                                                   std::span<index_t const> S) {
    std::vector<bool>    in(L.size(), false);
    std::vector<index_t> members;
    auto                 add = [&](index_t x) {
      if (!in[x]) {
        in[x] = true;
        members.push_back(x);
      }
    };
    for (index_t s : S) {
      add(s);
    }
    for (std::size_t i = 0; i < members.size(); ++i) {
      index_t x = members[i];
      for (std::size_t j = 0; j <= i; ++j) {
        add(L.join(x, members[j]));
        add(L.meet(x, members[j]));
      }
    }
    std::sort(members.begin(), members.end());
    return members;
  }

  struct Subalgebra {
    RotationalLattice algebra;
    AlgebraMap        embedding;
  };

  inline Subalgebra subalgebra_on(RotationalLattice const& A,
                                  std::vector<index_t>     members) {
    RotationalLattice sub = restrict_to(A, members);
    AlgebraMap        inc{sub, A, std::move(members)};
    return {std::move(sub), std::move(inc)};
  }

  inline Subalgebra generated_subalgebra(RotationalLattice const& A,
                                         std::span<index_t const> S) {
    return subalgebra_on(A, generated_subuniverse(A, S));
  }

  inline Subalgebra generated_subalgebra(RotationalLattice const&       A,
                                         std::initializer_list<index_t> S) {
    return generated_subalgebra(A, std::span<index_t const>(S.begin(), S.size()));
  }

  inline bool is_spanning(RotationalLattice const& A, std::span<index_t const> M) {
    if (!is_subuniverse(A, M)) {
      throw InvalidArgument("not a subuniverse");
    }
    bool zero = false, one = false;
    for (index_t x : M) {
      zero = zero || x == A.zero();
      one  = one || x == A.one();
    }
    return zero && one;
  }

  // Componentwise product; element (x_1, ..., x_k) has index
  // ((x_1 * |A_2| + x_2) * |A_3| + x_3) ...
  inline RotationalLattice direct_product(std::span<RotationalLattice const> factors,
                                          std::size_t cap = default_element_cap) {
    if (factors.empty()) {
      throw InvalidArgument("direct product of an empty list");
    }
    std::size_t total = 1;
    for (auto const& F : factors) {
      total *= F.size();
      detail::check_cap(total, cap, "product size");
    }
    RotationalLattice acc = factors[0];
    for (std::size_t f = 1; f < factors.size(); ++f) {
      RotationalLattice const&   B  = factors[f];
      std::size_t const          na = acc.size(), nb = B.size(), n = na * nb;
      std::vector<std::uint16_t> join(n * n), meet(n * n);
      std::vector<index_t>       g(n);
      for (index_t a1 = 0; a1 < na; ++a1) {
        for (index_t b1 = 0; b1 < nb; ++b1) {
          std::size_t x = a1 * nb + b1;
          g[x]          = static_cast<index_t>(acc.g(a1) * nb + B.g(b1));
          for (index_t a2 = 0; a2 < na; ++a2) {
            for (index_t b2 = 0; b2 < nb; ++b2) {
              std::size_t y = a2 * nb + b2;
              join[x * n + y] =
                  static_cast<std::uint16_t>(acc.join(a1, a2) * nb + B.join(b1, b2));
              meet[x * n + y] =
                  static_cast<std::uint16_t>(acc.meet(a1, a2) * nb + B.meet(b1, b2));
            }
          }
        }
      }
      acc = RotationalLattice::make_unchecked(
          FiniteLattice::from_tables(n, std::move(join), std::move(meet)), std::move(g));
    }
    return acc;
  }

  inline RotationalLattice direct_product(std::vector<RotationalLattice> const& factors,
                                          std::size_t cap = default_element_cap) {
    return direct_product(std::span<RotationalLattice const>(factors), cap);
  }

  inline RotationalLattice direct_product(RotationalLattice const& A,
                                          RotationalLattice const& B,
                                          std::size_t cap = default_element_cap) {
    std::vector<RotationalLattice> f{A, B};
    return direct_product(f, cap);
  }

  // n if A is isomorphic to B_n: |A| = 2^n, the map x -> {atoms below x} is
  // an order isomorphism onto the subsets of the n atoms, and g permutes the
  // atoms in a single n-cycle.
  inline std::optional<std::size_t> recognize_cube(RotationalLattice const& A) {
    std::size_t const size = A.size();
    if (size < 2 || !std::has_single_bit(size)) {
      return std::nullopt;
    }
    std::size_t const    n = std::countr_zero(size);
    std::vector<index_t> atoms;
    for (index_t x = 0; x < size; ++x) {
      if (x == A.zero()) {
        continue;
      }
      bool atom = true;
      for (index_t y = 0; y < size && atom; ++y) {
        atom = y == x || y == A.zero() || !A.leq(y, x);
      }
      if (atom) {
        atoms.push_back(x);
      }
    }
    if (atoms.size() != n) {
      return std::nullopt;
    }
    std::vector<mask_t> below(size, 0);
    std::vector<bool>   hit(size, false);
    for (index_t x = 0; x < size; ++x) {
      for (std::size_t i = 0; i < n; ++i) {
        if (A.leq(atoms[i], x)) {
          below[x] |= mask_t(1) << i;
        }
      }
      if (hit[below[x]]) {
        return std::nullopt;
      }
      hit[below[x]] = true;
    }
    for (index_t x = 0; x < size; ++x) {
      for (index_t y = 0; y < size; ++y) {
        bool sub = (below[x] & ~below[y]) == 0;
        if (sub != A.leq(x, y)) {
          return std::nullopt;
        }
      }
    }
    // g restricted to atoms is a single n-cycle.
    std::size_t len = 0;
    index_t     a   = atoms[0];
    do {
      a = A.g(a);
      ++len;
      if (!std::binary_search(atoms.begin(), atoms.end(), a)) {
        return std::nullopt;
      }
    } while (a != atoms[0] && len <= n);
    if (len != n) {
      return std::nullopt;
    }
    return n;
  }

  inline constexpr std::size_t subuniverse_oracle_cap = 16;

  // Every nonempty subset closed under join, meet and g, in ascending order
  // of the subset's bit mask. Exhaustive, so limited to 16 elements.
  inline std::vector<std::vector<index_t>> all_subuniverses(RotationalLattice const& A) {
    std::size_t const n = A.size();
    detail::check_cap(n, subuniverse_oracle_cap, "all_subuniverses size");
    std::vector<std::vector<index_t>> result;
    std::vector<index_t>              members;
    for (std::uint32_t m = 1; m < (std::uint32_t(1) << n); ++m) {
      members.clear();
      detail::for_each_bit(m, [&](std::size_t i) { members.push_back(static_cast<index_t>(i)); });
      bool closed = true;
      for (index_t x : members) {
        if (!((m >> A.g(x)) & 1u)) {
          closed = false;
          break;
        }
        for (index_t y : members) {
          if (!((m >> A.join(x, y)) & 1u) || !((m >> A.meet(x, y)) & 1u)) {
            closed = false;
            break;
          }
        }
        if (!closed) {
          break;
        }
      }
      if (closed) {
        result.push_back(members);
      }
    }
    return result;
  }

  // Least common multiple of all orbit sizes.
  inline std::uint64_t orbit_lcm(RotationalLattice const& A) {
    std::uint64_t l = 1;
    for (index_t x = 0; x < A.size(); ++x) {
      l = detail::lcm(l, orbit(A, x).size());
    }
    return l;
  }

}  // namespace rotlat

#endif  // ROTLAT_ROTATIONAL_HPP_
