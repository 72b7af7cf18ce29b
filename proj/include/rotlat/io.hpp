#ifndef ROTLAT_IO_HPP_
#define ROTLAT_IO_HPP_

#include <cstddef>
#include <cstdint>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "congruence.hpp"
#include "error.hpp"
#include "free.hpp"
#include "lattice.hpp"
#include "poset.hpp"
#include "rotational.hpp"
#include "varieties.hpp"
#include "verify.hpp"

namespace rotlat {

  using json = nlohmann::json;

  // JSON documents. Every document carries a "kind" tag:
  //   poset              {"kind":"poset","size":p,"covers":[[i,j],...]}
  //   lattice            {"kind":"lattice","size":k,"leq":[[i,j],...]}
  //   rotational_lattice {"kind":"rotational_lattice","size":k,"leq":[...],"g":[...]}
  //   rot_poset          {"kind":"rot_poset","size":p,"covers":[...],"sigma":[...]}
  //   congruence         {"kind":"congruence","algebra_size":k,"labels":[...]}
  //   order_ideal        {"kind":"order_ideal","members":[...]}
  // "leq" lists every strict comparability i < j in lexicographic order;
  // readers accept any generating set of pairs.

  inline json to_json(Poset const& p) {
    json covers = json::array();
    for (auto [i, j] : p.covers()) {
      covers.push_back({i, j});
    }
    return {{"kind", "poset"}, {"size", p.size()}, {"covers", covers}};
  }

  namespace detail {
    inline json strict_leq_pairs(FiniteLattice const& L) {
      json leq = json::array();
      for (index_t i = 0; i < L.size(); ++i) {
        for (index_t j = 0; j < L.size(); ++j) {
          if (i != j && L.leq(i, j)) {
            leq.push_back({i, j});
          }
        }
      }
      return leq;
    }

    inline void expect_kind(json const& doc, char const* kind) {
      if (!doc.is_object() || !doc.contains("kind") || doc.at("kind") != kind) {
        throw InvalidArgument(std::string("expected a JSON document of kind \"") + kind + "\"");
      }
    }

    inline std::vector<std::pair<std::size_t, std::size_t>> read_pairs(json const& arr) {
      std::vector<std::pair<std::size_t, std::size_t>> pairs;
      for (auto const& p : arr) {
        if (!p.is_array() || p.size() != 2) {
          throw InvalidArgument("relation entries must be pairs [i, j]");
        }
        pairs.emplace_back(p[0].get<std::size_t>(), p[1].get<std::size_t>());
      }
      return pairs;
    }
  }  // namespace detail

  inline json to_json(FiniteLattice const& L) {
    return {{"kind", "lattice"}, {"size", L.size()}, {"leq", detail::strict_leq_pairs(L)}};
  }

  inline json to_json(RotationalLattice const& A) {
    return {{"kind", "rotational_lattice"},
            {"size", A.size()},
            {"leq", detail::strict_leq_pairs(A.lattice())},
            {"g", std::vector<index_t>(A.permutation().begin(), A.permutation().end())}};
  }

  inline json rot_poset_json(Poset const& p, std::span<index_t const> sigma) {
    json j     = to_json(p);
    j["kind"]  = "rot_poset";
    j["sigma"] = std::vector<index_t>(sigma.begin(), sigma.end());
    return j;
  }

  inline json to_json(Congruence const& c) {
    return {{"kind", "congruence"}, {"algebra_size", c.size()}, {"labels", c.labels()}};
  }

  inline json to_json(OrderIdeal const& X) {
    return {{"kind", "order_ideal"}, {"members", X.members()}};
  }

  inline json to_json(AlgebraMap const& m) {
    return {{"kind", to_string(m.kind())},
            {"source_size", m.source.size()},
            {"target_size", m.target.size()},
            {"map", m.map}};
  }

  inline json to_json(Membership const& m) {
    json factors = json::array();
    for (auto const& f : m.certificate) {
      json cube = f.cube ? json(*f.cube) : json(nullptr);
      factors.push_back({{"kernel", to_json(f.kernel)}, {"cube", cube}});
    }
    return {{"member", m.member},
            {"theorem_violation", m.theorem_violation},
            {"factors", factors}};
  }

  inline json to_json(VerificationReport const& r) {
    return {{"check", r.check},
            {"instances", r.instances},
            {"per_check", r.per_check},
            {"counterexamples", r.counterexamples},
            {"ok", r.ok()},
            {"wall_ms", r.wall_ms}};
  }

  inline Poset poset_from_json(json const& doc) {
    if (doc.value("kind", "") != "poset" && doc.value("kind", "") != "rot_poset") {
      throw InvalidArgument("expected a poset document");
    }
    return Poset::from_relation(doc.at("size").get<std::size_t>(),
                                detail::read_pairs(doc.at("covers")));
  }

  inline FiniteLattice lattice_from_json(json const& doc) {
    if (doc.value("kind", "") != "lattice" && doc.value("kind", "") != "rotational_lattice") {
      throw InvalidArgument("expected a lattice document");
    }
    return FiniteLattice::from_order(doc.at("size").get<std::size_t>(),
                                     detail::read_pairs(doc.at("leq")));
  }

  // Reads any algebra-like document: rotational_lattice and rot_poset as
  // given, lattice and poset with g the identity.
  inline RotationalLattice algebra_from_json(json const& doc) {
    try {
      std::string const kind = doc.value("kind", "");
      if (kind == "rotational_lattice") {
        return make_rotational(lattice_from_json(doc), doc.at("g").get<std::vector<index_t>>());
      }
      if (kind == "rot_poset") {
        auto sigma = doc.at("sigma").get<std::vector<index_t>>();
        return rotational_from_poset(poset_from_json(doc), sigma);
      }
      if (kind == "lattice") {
        return with_identity(lattice_from_json(doc));
      }
      if (kind == "poset") {
        return with_identity(downset_lattice(poset_from_json(doc)));
      }
    } catch (json::exception const& e) {
      throw InvalidArgument(std::string("malformed document: ") + e.what());
    }
    throw InvalidArgument("unknown document kind");
  }

  inline Congruence congruence_from_json(json const& doc) {
    detail::expect_kind(doc, "congruence");
    auto labels = doc.at("labels").get<std::vector<index_t>>();
    if (labels.size() != doc.at("algebra_size").get<std::size_t>()) {
      throw InvalidArgument("label count differs from algebra_size");
    }
    return Congruence::from_labels(labels);
  }

  inline OrderIdeal ideal_from_json(json const& doc) {
    detail::expect_kind(doc, "order_ideal");
    return OrderIdeal::validate(doc.at("members").get<std::vector<std::uint64_t>>());
  }

  // Hasse diagram in DOT: covering pairs only, elements ranked by height.
  // Elements of a rotational lattice are coloured by orbit.
  inline std::string to_dot(RotationalLattice const& A, std::string const& name = "L") {
    static char const* const palette[] = {"#1f77b4", "#ff7f0e", "#2ca02c", "#d62728",
                                          "#9467bd", "#8c564b", "#e377c2", "#7f7f7f",
                                          "#bcbd22", "#17becf"};
    auto                     rep = structure(A.lattice());
    std::vector<std::size_t> orbit_id(A.size(), A.size());
    std::size_t              next = 0;
    for (index_t x = 0; x < A.size(); ++x) {
      if (orbit_id[x] == A.size()) {
        for (index_t y : orbit(A, x)) {
          orbit_id[y] = next;
        }
        ++next;
      }
    }
    std::ostringstream out;
    out << "digraph " << name << " {\n  rankdir=BT;\n  node [shape=circle, style=filled];\n";
    for (std::size_t h = 0; h <= rep.length; ++h) {
      out << "  { rank=same;";
      for (index_t x = 0; x < A.size(); ++x) {
        if (rep.heights[x] == h) {
          out << ' ' << x << ';';
        }
      }
      out << " }\n";
    }
    for (index_t x = 0; x < A.size(); ++x) {
      out << "  " << x << " [label=\"" << x << "\", fillcolor=\""
          << palette[orbit_id[x] % std::size(palette)] << "\"];\n";
    }
    for (auto [a, b] : rep.covers) {
      out << "  " << a << " -> " << b << " [arrowhead=none];\n";
    }
    out << "}\n";
    return out.str();
  }

  inline std::string to_dot(ConLattice const& con, std::string const& name = "Con") {
    std::ostringstream out;
    out << "digraph " << name << " {\n  rankdir=BT;\n  node [shape=box];\n";
    for (std::size_t i = 0; i < con.size(); ++i) {
      out << "  " << i << " [label=\"";
      auto blocks = con.congruences[i].blocks();
      for (std::size_t b = 0; b < blocks.size(); ++b) {
        out << (b ? " | " : "");
        for (std::size_t k = 0; k < blocks[b].size(); ++k) {
          out << (k ? "," : "") << blocks[b][k];
        }
      }
      out << "\"];\n";
    }
    for (auto [a, b] : con.covers()) {
      out << "  " << a << " -> " << b << " [arrowhead=none];\n";
    }
    out << "}\n";
    return out.str();
  }

}  // namespace rotlat

#endif  // ROTLAT_IO_HPP_
