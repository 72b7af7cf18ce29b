#ifndef ROTLAT_VARIETIES_HPP_
#define ROTLAT_VARIETIES_HPP_

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <iterator>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "congruence.hpp"
#include "error.hpp"
#include "rotational.hpp"

namespace rotlat {

  inline constexpr std::size_t default_ideal_cap = 20;

  // A finite set of positive integers closed under taking divisors. The
  // ideal X names the variety generated by the rotational cubes B_n, n in X.
  class OrderIdeal {
   public:
    OrderIdeal() = default;

    // Throws InvalidIdeal unless the set is divisor closed.
    static OrderIdeal validate(std::vector<std::uint64_t> members) {
      std::sort(members.begin(), members.end());
      members.erase(std::unique(members.begin(), members.end()), members.end());
      for (std::uint64_t x : members) {
        if (x == 0) {
          throw InvalidIdeal("0 is not a positive integer");
        }
      }
      for (std::uint64_t x : members) {
        for (std::uint64_t d = 1; d * d <= x; ++d) {
          if (x % d != 0) {
            continue;
          }
          for (std::uint64_t e : {d, x / d}) {
            if (!std::binary_search(members.begin(), members.end(), e)) {
              throw InvalidIdeal(std::to_string(e) + " divides " + std::to_string(x)
                                 + " but is missing");
            }
          }
        }
      }
      OrderIdeal X;
      X._members = std::move(members);
      return X;
    }

    std::vector<std::uint64_t> const& members() const noexcept {
      return _members;
    }

    bool contains(std::uint64_t n) const noexcept {
      return std::binary_search(_members.begin(), _members.end(), n);
    }

    bool empty() const noexcept {
      return _members.empty();
    }

    std::size_t size() const noexcept {
      return _members.size();
    }

    bool subset_of(OrderIdeal const& other) const noexcept {
      return std::includes(other._members.begin(), other._members.end(),
                           _members.begin(), _members.end());
    }

    OrderIdeal unite(OrderIdeal const& other) const {
      OrderIdeal r;
      std::set_union(_members.begin(), _members.end(), other._members.begin(),
                     other._members.end(), std::back_inserter(r._members));
      return r;
    }

    OrderIdeal intersect(OrderIdeal const& other) const {
      OrderIdeal r;
      std::set_intersection(_members.begin(), _members.end(), other._members.begin(),
                            other._members.end(), std::back_inserter(r._members));
      return r;
    }

    auto operator<=>(OrderIdeal const&) const = default;

   private:
    std::vector<std::uint64_t> _members;
  };

  inline OrderIdeal validate_ideal(std::vector<std::uint64_t> members) {
    return OrderIdeal::validate(std::move(members));
  }

  // Every order ideal whose elements are at most N, ordered by the bit mask
  // of the subset of {1..N} (so the empty ideal comes first).
  inline std::vector<OrderIdeal> ideals_upto(std::size_t N,
                                             std::size_t cap = default_ideal_cap) {
    detail::check_cap(N, cap, "ideals_upto bound");
    std::vector<OrderIdeal> result;
    for (std::uint64_t m = 0; m < (std::uint64_t(1) << N); ++m) {
      std::vector<std::uint64_t> members;
      detail::for_each_bit(m, [&](std::size_t i) { members.push_back(i + 1); });
      bool closed = true;
      for (std::uint64_t x : members) {
        for (std::uint64_t d = 1; d < x && closed; ++d) {
          closed = x % d != 0 || ((m >> (d - 1)) & 1u);
        }
      }
      if (closed) {
        result.push_back(OrderIdeal::validate(std::move(members)));
      }
    }
    return result;
  }

  inline OrderIdeal divisors_ideal(std::uint64_t n) {
    if (n == 0) {
      throw InvalidArgument("divisors_ideal needs n >= 1");
    }
    std::vector<std::uint64_t> d;
    for (std::uint64_t k = 1; k <= n; ++k) {
      if (n % k == 0) {
        d.push_back(k);
      }
    }
    return OrderIdeal::validate(std::move(d));
  }

  // B_m is a homomorphic image of a subalgebra of B_n iff m divides n.
  inline bool hs_cube(std::uint64_t m, std::uint64_t n) {
    if (m == 0 || n == 0) {
      throw InvalidArgument("cube dimensions must be positive");
    }
    return n % m == 0;
  }

  // The embedding B_m -> B_n, m | n, sending atom b_j to
  // a_j v a_{m+j} v a_{2m+j} v ... v a_{(k-1)m+j} with k = n / m.
  inline AlgebraMap embed_cube(std::size_t m, std::size_t n,
                               std::size_t cap = default_element_cap) {
    if (m == 0 || n == 0) {
      throw InvalidArgument("cube dimensions must be positive");
    }
    if (!hs_cube(m, n)) {
      throw InvalidArgument(std::to_string(m) + " does not divide " + std::to_string(n)
                            + ": B_" + std::to_string(m) + " does not embed in B_"
                            + std::to_string(n));
    }
    RotationalLattice    Bm = rotational_cube(m, cap);
    RotationalLattice    Bn = rotational_cube(n, cap);
    std::vector<index_t> atom_image(m, 0);
    for (std::size_t j = 0; j < m; ++j) {
      for (std::size_t t = 0; t < n / m; ++t) {
        atom_image[j] |= index_t(1) << (t * m + j);
      }
    }
    std::vector<index_t> map(Bm.size());
    for (index_t x = 0; x < Bm.size(); ++x) {
      index_t y = 0;
      detail::for_each_bit(x, [&](std::size_t j) { y |= atom_image[j]; });
      map[x] = y;
    }
    return AlgebraMap{std::move(Bm), std::move(Bn), std::move(map)};
  }

  // The subdirectly irreducible members of V(X), as cube dimensions.
  inline std::vector<std::uint64_t> si_members(OrderIdeal const& X) {
    return X.members();
  }

  struct FactorCertificate {
    Congruence                 kernel;
    std::optional<std::size_t> cube;  // dimension k if the factor is B_k
  };

  struct Membership {
    bool                           member = false;
    std::vector<FactorCertificate> certificate;
    // Set when some subdirectly irreducible factor is not a rotational cube,
    // which would contradict the classification; never expected.
    bool theorem_violation = false;
  };

  // A belongs to V(X) iff each of its subdirectly irreducible factors is a
  // cube B_k with k in X.
  inline Membership variety_contains_algebra(OrderIdeal const&        X,
                                             RotationalLattice const& A,
                                             std::size_t              cap = default_con_cap) {
    if (!A.lattice().downsets() && !is_distributive(A.lattice())) {
      throw Unsupported("variety membership requires a distributive algebra");
    }
    Membership result;
    result.member = true;
    for (auto& f : subdirect_factors(A, cap)) {
      auto k = recognize_cube(f.algebra);
      if (!k) {
        result.theorem_violation = true;
        result.member            = false;
      } else if (!X.contains(*k)) {
        result.member = false;
      }
      result.certificate.push_back({std::move(f.kernel), k});
    }
    if (X.empty() && A.size() != 1) {
      result.member = false;
    }
    return result;
  }

  inline bool variety_leq(OrderIdeal const& X, OrderIdeal const& Y) {
    return X.subset_of(Y);
  }

  // Whether g^t(x) = x holds identically in A.
  inline bool satisfies_order_identity(RotationalLattice const& A, std::uint64_t t) {
    if (t == 0) {
      throw InvalidArgument("exponent must be positive");
    }
    return t % A.order() == 0;
  }

  // Evaluates g^t(x) = x at every element directly, independent of order().
  inline bool satisfies_order_identity_pointwise(RotationalLattice const& A,
                                                 std::uint64_t            t) {
    for (index_t x = 0; x < A.size(); ++x) {
      index_t y = x;
      for (std::uint64_t i = 0; i < t; ++i) {
        y = A.g(y);
      }
      if (y != x) {
        return false;
      }
    }
    return true;
  }

}  // namespace rotlat

#endif  // ROTLAT_VARIETIES_HPP_
