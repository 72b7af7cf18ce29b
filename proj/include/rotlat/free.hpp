#ifndef ROTLAT_FREE_HPP_
#define ROTLAT_FREE_HPP_

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "bits.hpp"
#include "error.hpp"
#include "lattice.hpp"
#include "rotational.hpp"

namespace rotlat {

  inline constexpr std::size_t default_free_cap = 4;

  // A monotone boolean function in irredundant disjunctive normal form: an
  // antichain of variable sets, each read as the meet of its variables, the
  // whole read as the join of its terms. Constants (the empty antichain and
  // the antichain holding only the empty set) do not occur in the algebras
  // built here.
  class Antichain {
   public:
    Antichain() = default;

    static Antichain variable(std::size_t i) {
      Antichain a;
      a._terms.push_back(mask_t(1) << i);
      return a;
    }

    static Antichain from_terms(std::vector<mask_t> terms) {
      Antichain a;
      a._terms = std::move(terms);
      a.normalise();
      return a;
    }

    std::vector<mask_t> const& terms() const noexcept {
      return _terms;
    }

    Antichain join(Antichain const& other) const {
      std::vector<mask_t> t(_terms);
      t.insert(t.end(), other._terms.begin(), other._terms.end());
      return from_terms(std::move(t));
    }

    Antichain meet(Antichain const& other) const {
      std::vector<mask_t> t;
      for (mask_t a : _terms) {
        for (mask_t b : other._terms) {
          t.push_back(a | b);
        }
      }
      return from_terms(std::move(t));
    }

    // Renames variable i to sigma(i) = (i + 1) mod n.
    Antichain shifted(std::size_t n) const {
      std::vector<mask_t> t;
      for (mask_t a : _terms) {
        mask_t b = 0;
        detail::for_each_bit(a, [&](std::size_t i) { b |= mask_t(1) << ((i + 1) % n); });
        t.push_back(b);
      }
      return from_terms(std::move(t));
    }

    // Value of the function at the assignment whose true variables are `x`.
    bool evaluate(mask_t x) const noexcept {
      for (mask_t a : _terms) {
        if ((a & ~x) == 0) {
          return true;
        }
      }
      return false;
    }

    std::string to_string() const {
      if (_terms.empty()) {
        return "0";
      }
      std::string s;
      for (std::size_t k = 0; k < _terms.size(); ++k) {
        if (k != 0) {
          s += " v ";
        }
        if (_terms[k] == 0) {
          s += "1";
        }
        bool first = true;
        detail::for_each_bit(_terms[k], [&](std::size_t i) {
          if (!first) {
            s += "^";
          }
          first = false;
          s += "x" + std::to_string(i);
        });
      }
      return s;
    }

    auto operator<=>(Antichain const&) const = default;

   private:
    void normalise() {
      std::sort(_terms.begin(), _terms.end());
      _terms.erase(std::unique(_terms.begin(), _terms.end()), _terms.end());
      std::vector<mask_t> keep;
      for (mask_t a : _terms) {
        bool redundant = false;
        for (mask_t b : _terms) {
          if (b != a && (b & ~a) == 0) {
            redundant = true;
            break;
          }
        }
        if (!redundant) {
          keep.push_back(a);
        }
      }
      _terms = std::move(keep);
    }

    std::vector<mask_t> _terms;
  };

  struct FreeAlgebra {
    RotationalLattice      algebra;
    index_t                generator = 0;
    std::size_t            rank      = 0;
    std::vector<Antichain> terms;  // element i is terms[i]
  };

  // Free algebra on one generator x in the class of distributive rotational
  // lattices satisfying g^n(x) = x. Its elements are the nonconstant monotone
  // functions of x, g(x), ..., g^{n-1}(x), here the variables x0..x{n-1}; g
  // renames x_i to x_{i+1 mod n}. Elements are sorted by antichain.
  inline FreeAlgebra free_one_generated(std::size_t n, std::size_t cap = default_free_cap) {
    if (n == 0) {
      throw InvalidArgument("free algebra needs n >= 1");
    }
    detail::check_cap(n, cap, "free algebra rank");
    std::vector<Antichain> elems;
    std::map<Antichain, std::size_t> seen;
    auto add = [&](Antichain a) {
      if (seen.emplace(a, elems.size()).second) {
        elems.push_back(std::move(a));
        detail::check_cap(elems.size(), default_element_cap, "free algebra size");
      }
    };
    for (std::size_t i = 0; i < n; ++i) {
      add(Antichain::variable(i));
    }
    for (std::size_t i = 0; i < elems.size(); ++i) {
      for (std::size_t j = 0; j <= i; ++j) {
        Antichain a = elems[i], b = elems[j];
        add(a.join(b));
        add(a.meet(b));
      }
    }
    std::sort(elems.begin(), elems.end());
    std::size_t const k = elems.size();
    std::map<Antichain, index_t> pos;
    for (std::size_t i = 0; i < k; ++i) {
      pos.emplace(elems[i], static_cast<index_t>(i));
    }
    std::vector<std::uint16_t> join(k * k), meet(k * k);
    for (std::size_t i = 0; i < k; ++i) {
      for (std::size_t j = i; j < k; ++j) {
        join[i * k + j] = join[j * k + i] =
            static_cast<std::uint16_t>(pos.at(elems[i].join(elems[j])));
        meet[i * k + j] = meet[j * k + i] =
            static_cast<std::uint16_t>(pos.at(elems[i].meet(elems[j])));
      }
    }
    std::vector<index_t> g(k);
    for (std::size_t i = 0; i < k; ++i) {
      g[i] = pos.at(elems[i].shifted(n));
    }
    FreeAlgebra F;
    F.algebra   = RotationalLattice::make(FiniteLattice::from_tables(k, std::move(join),
                                                                     std::move(meet)),
                                        std::move(g));
    F.generator = pos.at(Antichain::variable(0));
    F.rank      = n;
    F.terms     = std::move(elems);
    return F;
  }

  // The map F -> A sending the generator to a, given by evaluating each
  // element's normal form at a, g(a), g^2(a), ...
  inline AlgebraMap evaluate_at(FreeAlgebra const& F, RotationalLattice const& A, index_t a) {
    std::vector<index_t> powers{a};
    for (std::size_t i = 1; i < F.rank; ++i) {
      powers.push_back(A.g(powers.back()));
    }
    std::vector<index_t> map(F.terms.size());
    for (std::size_t e = 0; e < F.terms.size(); ++e) {
      bool    first = true;
      index_t acc   = 0;
      for (mask_t m : F.terms[e].terms()) {
        bool    mf = true;
        index_t mt = 0;
        detail::for_each_bit(m, [&](std::size_t i) {
          mt = mf ? powers[i] : A.meet(mt, powers[i]);
          mf = false;
        });
        acc   = first ? mt : A.join(acc, mt);
        first = false;
      }
      map[e] = acc;
    }
    return AlgebraMap{F.algebra, A, std::move(map)};
  }

  // Number of homomorphisms F -> A. A homomorphism is fixed by the image of
  // the generator, so this counts the a in A whose evaluation map is one.
  inline std::size_t count_homomorphisms(FreeAlgebra const& F, RotationalLattice const& A) {
    std::size_t count = 0;
    for (index_t a = 0; a < A.size(); ++a) {
      if (evaluate_at(F, A, a).is_homomorphism()) {
        ++count;
      }
    }
    return count;
  }

}  // namespace rotlat

#endif  // ROTLAT_FREE_HPP_
