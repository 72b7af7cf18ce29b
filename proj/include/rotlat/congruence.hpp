#ifndef ROTLAT_CONGRUENCE_HPP_
#define ROTLAT_CONGRUENCE_HPP_

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "error.hpp"
#include "lattice.hpp"
#include "rotational.hpp"

namespace rotlat {

  // Partition of the element indices of an algebra, stored in canonical form:
  // every element is labelled by the least index of its block.
  class Congruence {
   public:
    Congruence() = default;

    // Canonicalises an arbitrary block labelling.
    static Congruence from_labels(std::span<index_t const> labels) {
      Congruence         c;
      std::size_t const  n = labels.size();
      std::vector<index_t> first(n, std::numeric_limits<index_t>::max());
      c._labels.resize(n);
      for (index_t i = 0; i < n; ++i) {
        index_t l = labels[i];
        if (l >= n) {
          throw InvalidArgument("block label out of range");
        }
        if (first[l] == std::numeric_limits<index_t>::max()) {
          first[l] = i;
        }
        c._labels[i] = first[l];
      }
      return c;
    }

    static Congruence identity(std::size_t n) {
      Congruence c;
      c._labels.resize(n);
      std::iota(c._labels.begin(), c._labels.end(), 0);
      return c;
    }

    static Congruence full(std::size_t n) {
      Congruence c;
      c._labels.assign(n, 0);
      return c;
    }

    std::size_t size() const noexcept {
      return _labels.size();
    }

    std::vector<index_t> const& labels() const noexcept {
      return _labels;
    }

    index_t label(index_t x) const noexcept {
      return _labels[x];
    }

    bool related(index_t a, index_t b) const noexcept {
      return _labels[a] == _labels[b];
    }

    std::size_t num_blocks() const noexcept {
      std::size_t k = 0;
      for (index_t i = 0; i < _labels.size(); ++i) {
        k += _labels[i] == i;
      }
      return k;
    }

    bool is_identity() const noexcept {
      return num_blocks() == size();
    }

    bool is_full() const noexcept {
      return num_blocks() <= 1;
    }

    // Containment of relations: *this is a subset of other.
    bool leq(Congruence const& other) const noexcept {
      for (index_t i = 0; i < _labels.size(); ++i) {
        if (!other.related(i, _labels[i])) {
          return false;
        }
      }
      return true;
    }

    Congruence meet(Congruence const& other) const {
      std::map<std::pair<index_t, index_t>, index_t> ids;
      std::vector<index_t>                           l(size());
      for (index_t i = 0; i < size(); ++i) {
        l[i] = ids.emplace(std::pair(_labels[i], other._labels[i]), i).first->second;
      }
      return from_labels(l);
    }

    std::vector<std::vector<index_t>> blocks() const {
      std::vector<std::vector<index_t>> result;
      std::vector<index_t>              pos(size());
      for (index_t i = 0; i < size(); ++i) {
        if (_labels[i] == i) {
          pos[i] = static_cast<index_t>(result.size());
          result.emplace_back();
        }
        result[pos[_labels[i]]].push_back(i);
      }
      return result;
    }

    auto operator<=>(Congruence const&) const = default;

   private:
    std::vector<index_t> _labels;
  };

  namespace detail {
    class UnionFind {
     public:
      explicit UnionFind(std::size_t n) : _parent(n) {
        std::iota(_parent.begin(), _parent.end(), 0);
      }

      index_t find(index_t x) noexcept {
        while (_parent[x] != x) {
          _parent[x] = _parent[_parent[x]];
          x          = _parent[x];
        }
        return x;
      }

      // Returns true if a and b were in different blocks.
      bool unite(index_t a, index_t b) noexcept {
        a = find(a);
        b = find(b);
        if (a == b) {
          return false;
        }
        if (b < a) {
          std::swap(a, b);
        }
        _parent[b] = a;
        return true;
      }

      Congruence to_congruence() {
        std::vector<index_t> l(_parent.size());
        for (index_t i = 0; i < l.size(); ++i) {
          l[i] = find(i);
        }
        return Congruence::from_labels(l);
      }

     private:
      std::vector<index_t> _parent;
    };

    // Least congruence containing the given pairs. Every pair that merges two
    // blocks is pushed through the basic translations x -> x v c, x -> x ^ c
    // and x -> g(x); transitivity is carried by the union-find.
    inline Congruence close(RotationalLattice const&                       A,
                            UnionFind&                                     uf,
                            std::vector<std::pair<index_t, index_t>> pending) {
      std::size_t const n = A.size();
      while (!pending.empty()) {
        auto [x, y] = pending.back();
        pending.pop_back();
        auto push = [&](index_t u, index_t v) {
          if (uf.unite(u, v)) {
            pending.emplace_back(u, v);
          }
        };
        push(A.g(x), A.g(y));
        for (index_t c = 0; c < n; ++c) {
          push(A.join(x, c), A.join(y, c));
          push(A.meet(x, c), A.meet(y, c));
        }
      }
      return uf.to_congruence();
    }
  }  // namespace detail

  inline bool is_compatible(RotationalLattice const& A, Congruence const& theta) {
    std::size_t const n = A.size();
    if (theta.size() != n) {
      return false;
    }
    for (index_t x = 0; x < n; ++x) {
      index_t y = theta.label(x);
      if (y == x) {
        continue;
      }
      // x ~ rep(x); checking pairs with the representative suffices.
      if (!theta.related(A.g(x), A.g(y))) {
        return false;
      }
      for (index_t c = 0; c < n; ++c) {
        if (!theta.related(A.join(x, c), A.join(y, c))
            || !theta.related(A.meet(x, c), A.meet(y, c))) {
          return false;
        }
      }
    }
    return true;
  }

  inline Congruence principal_congruence(RotationalLattice const& A, index_t a, index_t b) {
    if (a >= A.size() || b >= A.size()) {
      throw InvalidArgument("element out of range");
    }
    detail::UnionFind uf(A.size());
    std::vector<std::pair<index_t, index_t>> pending;
    if (uf.unite(a, b)) {
      pending.emplace_back(a, b);
    }
    return detail::close(A, uf, std::move(pending));
  }

  // Join in the congruence lattice.
  inline Congruence join(RotationalLattice const& A, Congruence const& s,
                         Congruence const& t) {
    detail::UnionFind uf(A.size());
    std::vector<std::pair<index_t, index_t>> pending;
    for (index_t x = 0; x < A.size(); ++x) {
      for (index_t y : {s.label(x), t.label(x)}) {
        if (uf.unite(x, y)) {
          pending.emplace_back(x, y);
        }
      }
    }
    return detail::close(A, uf, std::move(pending));
  }

  inline constexpr std::size_t default_con_cap = 64;

  // All congruences of A, ordered by decreasing number of blocks and then by
  // label vector; `order` is the containment relation.
  struct ConLattice {
    std::vector<Congruence>        congruences;
    std::vector<std::vector<bool>> order;  // order[i][j]: congruences[i] <= congruences[j]

    std::size_t size() const noexcept {
      return congruences.size();
    }

    std::size_t index_of(Congruence const& c) const {
      auto it = std::find(congruences.begin(), congruences.end(), c);
      if (it == congruences.end()) {
        throw InvalidCongruence("not a member of the congruence lattice");
      }
      return static_cast<std::size_t>(it - congruences.begin());
    }

    // Indices of the upper covers of congruence i.
    std::vector<std::size_t> upper_covers(std::size_t i) const {
      std::vector<std::size_t> result;
      for (std::size_t j = 0; j < size(); ++j) {
        if (j == i || !order[i][j]) {
          continue;
        }
        bool cover = true;
        for (std::size_t k = 0; k < size() && cover; ++k) {
          cover = k == i || k == j || !(order[i][k] && order[k][j]);
        }
        if (cover) {
          result.push_back(j);
        }
      }
      return result;
    }

    // Hasse diagram covering pairs (i, j).
    std::vector<std::pair<std::size_t, std::size_t>> covers() const {
      std::vector<std::pair<std::size_t, std::size_t>> result;
      for (std::size_t i = 0; i < size(); ++i) {
        for (std::size_t j : upper_covers(i)) {
          result.emplace_back(i, j);
        }
      }
      return result;
    }
  };

  namespace detail {
    inline bool con_less(Congruence const& a, Congruence const& b) {
      auto na = a.num_blocks(), nb = b.num_blocks();
      return na != nb ? na > nb : a < b;
    }
  }  // namespace detail

  // Principal congruences of all comparable pairs, then closed under joins.
  inline ConLattice all_congruences(RotationalLattice const& A,
                                    std::size_t              cap = default_con_cap) {
    std::size_t const n = A.size();
    detail::check_cap(n, cap, "all_congruences size");
    std::set<Congruence> found;
    found.insert(Congruence::identity(n));
    std::vector<Congruence> principal;
    for (index_t a = 0; a < n; ++a) {
      for (index_t b = 0; b < n; ++b) {
        if (a != b && A.leq(a, b)) {
          Congruence c = principal_congruence(A, a, b);
          if (found.insert(c).second) {
            principal.push_back(std::move(c));
          }
        }
      }
    }
    std::vector<Congruence> frontier(found.begin(), found.end());
    while (!frontier.empty()) {
      std::vector<Congruence> next;
      for (auto const& c : frontier) {
        for (auto const& p : principal) {
          Congruence j = join(A, c, p);
          if (found.insert(j).second) {
            next.push_back(std::move(j));
          }
        }
      }
      frontier = std::move(next);
    }
    ConLattice L;
    L.congruences.assign(found.begin(), found.end());
    std::sort(L.congruences.begin(), L.congruences.end(), detail::con_less);
    std::size_t const k = L.congruences.size();
    L.order.assign(k, std::vector<bool>(k, false));
    for (std::size_t i = 0; i < k; ++i) {
      for (std::size_t j = 0; j < k; ++j) {
        L.order[i][j] = L.congruences[i].leq(L.congruences[j]);
      }
    }
    return L;
  }

  // Intersection of the principal congruences of all covering pairs. Every
  // nonzero congruence collapses some covering pair, so this is the least
  // nonzero congruence whenever it is nonzero.
  inline Congruence covering_pair_meet(RotationalLattice const& A) {
    Congruence mu = Congruence::full(A.size());
    for (auto [a, b] : covering_pairs(A.lattice())) {
      mu = mu.meet(principal_congruence(A, a, b));
      if (mu.is_identity()) {
        break;
      }
    }
    return mu;
  }

  // Least nonzero congruence, if A has one (A is then subdirectly
  // irreducible). The one-element algebra has none.
  inline std::optional<Congruence> monolith(RotationalLattice const& A) {
    if (A.size() <= 1) {
      return std::nullopt;
    }
    Congruence mu = covering_pair_meet(A);
    if (mu.is_identity()) {
      return std::nullopt;
    }
    return mu;
  }

  inline bool is_subdirectly_irreducible(RotationalLattice const& A) {
    return monolith(A).has_value();
  }

  // Exactly two congruences: every covering pair generates the full one.
  inline bool is_simple(RotationalLattice const& A) {
    if (A.size() <= 1) {
      return false;
    }
    for (auto [a, b] : covering_pairs(A.lattice())) {
      if (!principal_congruence(A, a, b).is_full()) {
        return false;
      }
    }
    return true;
  }

  struct Quotient {
    RotationalLattice algebra;
    AlgebraMap        projection;
  };

  // Blocks become elements, ordered by their least member.
  inline Quotient quotient(RotationalLattice const& A, Congruence const& theta) {
    if (!is_compatible(A, theta)) {
      throw InvalidCongruence("partition is not compatible with the operations");
    }
    std::size_t const    n = A.size();
    std::vector<index_t> reps;
    std::vector<index_t> pos(n);
    for (index_t x = 0; x < n; ++x) {
      if (theta.label(x) == x) {
        pos[x] = static_cast<index_t>(reps.size());
        reps.push_back(x);
      }
    }
    std::size_t const k = reps.size();
    std::vector<index_t> proj(n);
    for (index_t x = 0; x < n; ++x) {
      proj[x] = pos[theta.label(x)];
    }
    std::vector<std::uint16_t> join(k * k), meet(k * k);
    std::vector<index_t>       g(k);
    for (std::size_t i = 0; i < k; ++i) {
      g[i] = proj[A.g(reps[i])];
      for (std::size_t j = 0; j < k; ++j) {
        join[i * k + j] = static_cast<std::uint16_t>(proj[A.join(reps[i], reps[j])]);
        meet[i * k + j] = static_cast<std::uint16_t>(proj[A.meet(reps[i], reps[j])]);
      }
    }
    RotationalLattice Q = RotationalLattice::make_unchecked(
        FiniteLattice::from_tables(k, std::move(join), std::move(meet)), std::move(g));
    AlgebraMap p{A, Q, std::move(proj)};
    return {std::move(Q), std::move(p)};
  }

  // One quotient per congruence, in the order of all_congruences.
  inline std::vector<std::pair<Congruence, RotationalLattice>> all_quotient_algebras(
      RotationalLattice const& A, std::size_t cap = default_con_cap) {
    std::vector<std::pair<Congruence, RotationalLattice>> out;
    for (auto const& c : all_congruences(A, cap).congruences) {
      out.emplace_back(c, quotient(A, c).algebra);
    }
    return out;
  }

  struct SubdirectFactor {
    Congruence        kernel;
    RotationalLattice algebra;
  };

  // Quotients by the meet-irreducible congruences other than the full one
  // (those with exactly one upper cover in Con A).
  inline std::vector<SubdirectFactor> subdirect_factors(RotationalLattice const& A,
                                                        std::size_t cap = default_con_cap) {
    ConLattice const             con = all_congruences(A, cap);
    std::vector<SubdirectFactor> result;
    for (std::size_t i = 0; i < con.size(); ++i) {
      if (con.congruences[i].is_full()) {
        continue;
      }
      if (con.upper_covers(i).size() == 1) {
        result.push_back({con.congruences[i], quotient(A, con.congruences[i]).algebra});
      }
    }
    return result;
  }

  // x -> (x / theta_1, ..., x / theta_k); injective iff the kernels meet to
  // the identity.
  inline bool subdirect_embedding_injective(RotationalLattice const&            A,
                                            std::vector<SubdirectFactor> const& factors) {
    Congruence meet = Congruence::full(A.size());
    for (auto const& f : factors) {
      meet = meet.meet(f.kernel);
    }
    return meet.is_identity();
  }

  struct StableSplit {
    Congruence alpha;  // x ~ y iff a v x = a v y
    Congruence beta;   // x ~ y iff a ^ x = a ^ y
  };

  inline StableSplit stable_split_congruences(RotationalLattice const& A, index_t a) {
    if (a >= A.size()) {
      throw InvalidArgument("element out of range");
    }
    if (A.g(a) != a) {
      throw InvalidArgument("element " + std::to_string(a) + " is not stable");
    }
    if (!A.lattice().downsets() && !is_distributive(A.lattice())) {
      throw Unsupported("stable_split_congruences requires a distributive lattice");
    }
    std::vector<index_t> al(A.size()), bl(A.size());
    for (index_t x = 0; x < A.size(); ++x) {
      al[x] = A.join(a, x);
      bl[x] = A.meet(a, x);
    }
    return {Congruence::from_labels(al), Congruence::from_labels(bl)};
  }

}  // namespace rotlat

#endif  // ROTLAT_CONGRUENCE_HPP_
