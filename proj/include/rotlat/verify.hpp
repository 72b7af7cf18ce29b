#ifndef ROTLAT_VERIFY_HPP_
#define ROTLAT_VERIFY_HPP_

#include <algorithm>
#include <bit>
#include <chrono>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "congruence.hpp"
#include "corpus.hpp"
#include "iso.hpp"
#include "rotational.hpp"
#include "varieties.hpp"

namespace rotlat {

  // Outcome of one sweep. Sweeps never stop at a counterexample: they
  // collect every one so a failure can be diagnosed in full.
  struct VerificationReport {
    std::string                        check;
    std::size_t                        instances = 0;
    std::map<std::string, std::size_t> per_check;
    std::vector<std::string>           counterexamples;
    double                             wall_ms = 0;

    bool ok() const noexcept {
      return counterexamples.empty();
    }
  };

  namespace detail {
    class Stopwatch {
     public:
      double elapsed_ms() const {
        return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now()
                                                         - _start)
            .count();
      }

     private:
      std::chrono::steady_clock::time_point _start = std::chrono::steady_clock::now();
    };

    inline std::string describe(CorpusEntry const& e, std::size_t i) {
      std::string s = "corpus[" + std::to_string(i) + "] (poset size "
                      + std::to_string(e.poset.size()) + ", sigma [";
      for (std::size_t k = 0; k < e.sigma.size(); ++k) {
        s += (k ? "," : "") + std::to_string(e.sigma[k]);
      }
      return s + "], " + std::to_string(e.algebra.size()) + " elements)";
    }

    // The lattice reduct is boolean: 2^k elements, k atoms, and x -> atoms
    // below x is an order isomorphism onto the subsets of the atoms.
    inline std::optional<std::vector<index_t>> boolean_atoms(FiniteLattice const& L) {
      if (L.size() == 1) {
        return std::vector<index_t>{};
      }
      std::size_t const size = L.size();
      if (!std::has_single_bit(size)) {
        return std::nullopt;
      }
      auto report = structure(L);
      if (report.atoms.size() != static_cast<std::size_t>(std::countr_zero(size))) {
        return std::nullopt;
      }
      std::vector<mask_t> below(size, 0);
      std::vector<bool>   hit(size, false);
      for (index_t x = 0; x < size; ++x) {
        for (std::size_t i = 0; i < report.atoms.size(); ++i) {
          if (L.leq(report.atoms[i], x)) {
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
          if (((below[x] & ~below[y]) == 0) != L.leq(x, y)) {
            return std::nullopt;
          }
        }
      }
      return report.atoms;
    }
  }  // namespace detail

  // Subdirectly irreducible iff isomorphic to some B_n; every cube found is
  // simple. When the Con lattice is small enough the SI verdict is also
  // recomputed from it (a unique atom of Con A).
  inline VerificationReport verify_si_classification(Corpus const& corpus) {
    detail::Stopwatch  clock;
    VerificationReport r;
    r.check = "si-classification";
    for (std::size_t i = 0; i < corpus.algebras.size(); ++i) {
      auto const& A    = corpus.algebras[i].algebra;
      bool const  si   = is_subdirectly_irreducible(A);
      auto const  cube = recognize_cube(A);
      ++r.instances;
      ++r.per_check["si-iff-cube"];
      if (si != cube.has_value()) {
        r.counterexamples.push_back(detail::describe(corpus.algebras[i], i)
                                    + (si ? ": SI but not a cube" : ": a cube but not SI"));
      }
      if (cube) {
        ++r.per_check["cube-simple"];
        if (!is_simple(A)) {
          r.counterexamples.push_back(detail::describe(corpus.algebras[i], i)
                                      + ": cube B_" + std::to_string(*cube) + " not simple");
        }
      }
      if (A.size() <= default_con_cap) {
        ++r.per_check["si-via-con-lattice"];
        ConLattice con   = all_congruences(A);
        std::size_t atoms = 0;
        if (con.size() > 1) {
          atoms = con.upper_covers(0).size();
        }
        if ((atoms == 1) != si) {
          r.counterexamples.push_back(detail::describe(corpus.algebras[i], i)
                                      + ": monolith disagrees with Con lattice");
        }
      }
    }
    r.wall_ms = clock.elapsed_ms();
    return r;
  }

  inline VerificationReport verify_si_classification(RotationalLattice const& A) {
    Corpus c;
    c.algebras.push_back({Poset(), {}, A});
    return verify_si_classification(c);
  }

  // Executable forms of the auxiliary statements: orbit lcm, stable
  // elements of SI algebras, orbit cubes, maximal orbits, spanning
  // subalgebras, height sums, atom-generated boolean sublattices,
  // cancellation, the alpha/beta split, and the order of products.
  inline VerificationReport verify_lemmas(Corpus const& corpus,
                                          std::size_t   max_cube_product = 4) {
    detail::Stopwatch  clock;
    VerificationReport r;
    r.check   = "lemmas";
    auto fail = [&](std::string what) { r.counterexamples.push_back(std::move(what)); };

    auto sweep = [&](RotationalLattice const& A, std::string const& name) {
      auto const& L   = A.lattice();
      bool const  si  = is_subdirectly_irreducible(A);
      auto const  rep = structure(L);
      ++r.instances;

      ++r.per_check["orbit-lcm"];
      if (orbit_lcm(A) != A.order()) {
        fail(name + ": order differs from lcm of orbit sizes");
      }

      ++r.per_check["cancellation"];
      for (index_t a = 0; a < A.size(); ++a) {
        for (index_t x = 0; x < A.size(); ++x) {
          for (index_t y = x + 1; y < A.size(); ++y) {
            if (A.join(a, x) == A.join(a, y) && A.meet(a, x) == A.meet(a, y)) {
              fail(name + ": cancellation fails");
            }
          }
        }
      }

      for (index_t a : stable_elements(A)) {
        ++r.per_check["stable-split"];
        auto [alpha, beta] = stable_split_congruences(A, a);
        if (!is_compatible(A, alpha) || !is_compatible(A, beta)) {
          fail(name + ": alpha/beta not a congruence at " + std::to_string(a));
        }
        if (!alpha.meet(beta).is_identity()) {
          fail(name + ": alpha meet beta is not the identity at " + std::to_string(a));
        }
        if (a != A.zero() && a != A.one()
            && (alpha.is_identity() || beta.is_identity())) {
          fail(name + ": alpha or beta trivial at " + std::to_string(a));
        }
        if (si) {
          ++r.per_check["stable-is-bound"];
          if (a != A.zero() && a != A.one()) {
            fail(name + ": SI algebra has stable element " + std::to_string(a));
          }
        }
      }

      // Lattice closure of t >= 2 distinct atoms has 2^t elements, zero
      // among them. A single atom only generates itself.
      if (rep.atoms.size() <= 12) {
        for (mask_t m = 1; m < (mask_t(1) << rep.atoms.size()); ++m) {
          std::vector<index_t> S;
          detail::for_each_bit(m, [&](std::size_t k) { S.push_back(rep.atoms[k]); });
          ++r.per_check["atom-boolean"];
          auto        closure = generated_sublattice(L, S);
          std::size_t expect  = S.size() == 1 ? 1 : std::size_t(1) << S.size();
          bool        zero    = S.size() == 1
                        || std::binary_search(closure.begin(), closure.end(), L.zero());
          if (closure.size() != expect || !zero) {
            fail(name + ": atoms do not generate a boolean sublattice");
          }
        }
      }

      // Subuniverses: all of them when small, otherwise the 1-generated ones.
      std::vector<std::vector<index_t>> subs;
      if (A.size() <= subuniverse_oracle_cap) {
        subs = all_subuniverses(A);
      } else {
        for (index_t a = 0; a < A.size(); ++a) {
          std::vector<index_t> S{a};
          subs.push_back(generated_subuniverse(A, S));
        }
      }
      for (auto const& M : subs) {
        bool g_moves = false;
        for (index_t x : M) {
          g_moves = g_moves || A.g(x) != x;
        }
        if (si && g_moves) {
          ++r.per_check["spanning"];
          if (!is_spanning(A, M)) {
            fail(name + ": non-spanning subalgebra with g not the identity");
          }
        }
        bool spans = std::find(M.begin(), M.end(), A.zero()) != M.end()
                     && std::find(M.begin(), M.end(), A.one()) != M.end();
        if (!spans) {
          continue;
        }
        auto sub   = restrict_to(A, M);
        auto atoms = detail::boolean_atoms(sub.lattice());
        if (atoms) {
          ++r.per_check["height-sum"];
          std::size_t sum = 0;
          for (index_t a : *atoms) {
            sum += rep.heights[M[a]];
          }
          if (sum != rep.length) {
            fail(name + ": height sum of a spanning boolean subalgebra differs from length");
          }
        }
      }

      if (si) {
        std::size_t max_orbit = 1;
        for (index_t a = 0; a < A.size(); ++a) {
          std::size_t k = orbit(A, a).size();
          max_orbit     = std::max(max_orbit, k);
          if (k == 1) {
            continue;
          }
          ++r.per_check["orbit-cube"];
          std::vector<index_t> S{a};
          auto                 gen = generated_subalgebra(A, S);
          auto                 dim = recognize_cube(gen.algebra);
          if (!dim || *dim != k || !is_isomorphic(gen.algebra, rotational_cube(k))) {
            fail(name + ": element " + std::to_string(a)
                 + " does not generate the cube of its orbit size");
          }
        }
        ++r.per_check["max-orbit"];
        auto dim = recognize_cube(A);
        if (!dim || *dim != max_orbit || *dim != A.order()) {
          fail(name + ": SI algebra is not B_n for n = max orbit size = order");
        }
      }
    };

    for (std::size_t i = 0; i < corpus.algebras.size(); ++i) {
      sweep(corpus.algebras[i].algebra, detail::describe(corpus.algebras[i], i));
    }

    // Cube products get the order check and the full sweep.
    for (std::size_t m = 1; m <= max_cube_product; ++m) {
      for (std::size_t n = 1; n <= max_cube_product; ++n) {
        std::string const name = "B_" + std::to_string(m) + " x B_" + std::to_string(n);
        auto              P    = direct_product(rotational_cube(m), rotational_cube(n));
        ++r.per_check["product-order"];
        if (P.order() != detail::lcm(m, n)) {
          fail(name + ": order is not lcm(m, n)");
        }
        sweep(P, name);
      }
    }
    // Sampled corpus pairs whose product stays small.
    std::size_t sampled = 0;
    for (std::size_t i = 0; i < corpus.algebras.size() && sampled < 200; i += 3) {
      for (std::size_t j = i; j < corpus.algebras.size() && sampled < 200; j += 7) {
        auto const& A = corpus.algebras[i].algebra;
        auto const& B = corpus.algebras[j].algebra;
        if (A.size() * B.size() > 256) {
          continue;
        }
        ++sampled;
        ++r.per_check["product-order"];
        if (direct_product(A, B).order() != detail::lcm(A.order(), B.order())) {
          fail("corpus[" + std::to_string(i) + "] x corpus[" + std::to_string(j)
               + "]: order is not lcm");
        }
      }
    }
    r.wall_ms = clock.elapsed_ms();
    return r;
  }

  // Variety inclusion against set inclusion over all ideal pairs, cube
  // membership against ideal membership, and the g^n identity against
  // divisibility.
  inline VerificationReport verify_variety_lattice(std::size_t N) {
    detail::check_cap(N, 8, "verify_variety_lattice bound");
    detail::Stopwatch  clock;
    VerificationReport r;
    r.check      = "variety-lattice";
    auto ideals  = ideals_upto(N);
    auto fail    = [&](std::string what) { r.counterexamples.push_back(std::move(what)); };
    auto show    = [](OrderIdeal const& X) {
      std::string s = "{";
      for (std::size_t k = 0; k < X.members().size(); ++k) {
        s += (k ? "," : "") + std::to_string(X.members()[k]);
      }
      return s + "}";
    };
    r.instances = ideals.size();
    for (auto const& X : ideals) {
      for (auto const& Y : ideals) {
        ++r.per_check["leq-vs-subset"];
        bool subset = true;
        for (auto x : X.members()) {
          subset = subset && Y.contains(x);
        }
        if (variety_leq(X, Y) != subset) {
          fail("variety_leq" + show(X) + show(Y) + " disagrees with inclusion");
        }
      }
      ++r.per_check["lattice-closure"];
      for (auto const& Y : ideals) {
        auto u = X.unite(Y), m = X.intersect(Y);
        if (std::find(ideals.begin(), ideals.end(), u) == ideals.end()
            || std::find(ideals.begin(), ideals.end(), m) == ideals.end()) {
          fail("union or intersection of " + show(X) + show(Y) + " is not an ideal");
        }
      }
    }
    std::vector<RotationalLattice> cubes;
    for (std::size_t k = 1; k <= N; ++k) {
      cubes.push_back(rotational_cube(k));
    }
    for (auto const& X : ideals) {
      auto members = si_members(X);
      if (members != X.members()) {
        fail("si_members" + show(X) + " differs from the ideal");
      }
      for (std::size_t k = 1; k <= N; ++k) {
        ++r.per_check["cube-membership"];
        auto res = variety_contains_algebra(X, cubes[k - 1]);
        if (res.theorem_violation) {
          fail("B_" + std::to_string(k) + " has a non-cube SI factor");
        }
        if (res.member != X.contains(k)) {
          fail("B_" + std::to_string(k) + " membership in V" + show(X) + " is wrong");
        }
      }
    }
    for (std::size_t m = 1; m <= N; ++m) {
      for (std::size_t n = 1; n <= N; ++n) {
        ++r.per_check["order-identity"];
        bool sat = satisfies_order_identity_pointwise(cubes[m - 1], n);
        if (sat != hs_cube(m, n) || sat != divisors_ideal(n).contains(m)
            || sat != satisfies_order_identity(cubes[m - 1], n)) {
          fail("g^" + std::to_string(n) + " identity in B_" + std::to_string(m)
               + " disagrees with divisibility");
        }
      }
    }
    r.wall_ms = clock.elapsed_ms();
    return r;
  }

}  // namespace rotlat

#endif  // ROTLAT_VERIFY_HPP_
