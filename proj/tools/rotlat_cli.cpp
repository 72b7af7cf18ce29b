// Command-line front end for the rotlat library.
//
// Structured output is JSON on stdout, diagnostics go to stderr. Exit codes:
// 0 success, 1 a verification found counterexamples (or a theorem
// violation), 2 invalid input or arguments.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "rotlat/io.hpp"
#include "rotlat/rotlat.hpp"

namespace {

  using rotlat::json;

  constexpr int exit_ok           = 0;
  constexpr int exit_verification = 1;
  constexpr int exit_invalid      = 2;

  json read_json_file(std::string const& path) {
    std::ifstream in(path);
    if (!in) {
      throw rotlat::InvalidArgument("cannot open " + path);
    }
    try {
      return json::parse(in);
    } catch (json::parse_error const& e) {
      throw rotlat::InvalidArgument(path + ": " + e.what());
    }
  }

  // "B3" or "cube:3" names a rotational cube; anything else is a file.
  rotlat::RotationalLattice read_algebra_arg(std::string const& arg) {
    for (std::string prefix : {"B", "cube:"}) {
      if (arg.rfind(prefix, 0) == 0 && arg.size() > prefix.size()
          && arg.find_first_not_of("0123456789", prefix.size()) == std::string::npos) {
        return rotlat::rotational_cube(std::stoul(arg.substr(prefix.size())));
      }
    }
    return rotlat::algebra_from_json(read_json_file(arg));
  }

  std::vector<std::uint64_t> parse_list(std::string const& text) {
    std::vector<std::uint64_t> out;
    std::stringstream          ss(text);
    std::string                item;
    while (std::getline(ss, item, ',')) {
      if (item.empty()) {
        continue;
      }
      if (item.find_first_not_of("0123456789") != std::string::npos) {
        throw rotlat::InvalidArgument("not a positive integer: " + item);
      }
      out.push_back(std::stoull(item));
    }
    return out;
  }

  void emit(json const& doc) {
    std::cout << doc.dump() << '\n';
  }

  void emit_algebra(rotlat::RotationalLattice const& A, std::string const& format) {
    if (format == "dot") {
      std::cout << rotlat::to_dot(A);
    } else {
      emit(rotlat::to_json(A));
    }
  }

  int emit_report(rotlat::VerificationReport const& r) {
    emit(rotlat::to_json(r));
    for (auto const& c : r.counterexamples) {
      std::cerr << "counterexample: " << c << '\n';
    }
    return r.ok() ? exit_ok : exit_verification;
  }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Distributive rotational lattices: cubes, congruences, varieties"};
  app.require_subcommand(1);

  std::string format = "json";
  auto add_format    = [&](CLI::App* cmd) {
    cmd->add_option("--format", format, "Output format")
        ->check(CLI::IsMember({"json", "dot"}));
  };

  std::size_t n = 0, m = 0;
  std::string file;
  std::vector<std::string> factor_args;
  std::string              ideal_text;
  std::string              which;
  std::size_t              max_poset = 5;
  std::size_t              max_n     = 6;

  auto* cube = app.add_subcommand("cube", "Rotational cube B_N");
  cube->add_option("N", n, "Dimension")->required();
  add_format(cube);

  auto* free = app.add_subcommand("free", "Free one-generated algebra with g^N = id");
  free->add_option("N", n, "Order bound")->required();
  add_format(free);

  auto* product = app.add_subcommand("product", "Direct product of algebras (B<n> or FILE)");
  product->add_option("FACTOR", factor_args, "B<n>, cube:<n> or a JSON file")->required();
  add_format(product);

  auto* con = app.add_subcommand("con", "Congruence lattice of an algebra");
  con->add_option("FILE", file)->required();
  add_format(con);

  auto* si = app.add_subcommand("si", "Subdirect irreducibility and simplicity");
  si->add_option("FILE", file)->required();

  auto* factors = app.add_subcommand("factors", "Subdirectly irreducible factors");
  factors->add_option("FILE", file)->required();

  auto* hs = app.add_subcommand("hs", "Is B_M in HS(B_N)?");
  hs->add_option("M", m)->required();
  hs->add_option("N", n)->required();

  auto* embed = app.add_subcommand("embed", "Embedding B_M -> B_N for M | N");
  embed->add_option("M", m)->required();
  embed->add_option("N", n)->required();

  auto* member = app.add_subcommand("member", "Membership of an algebra in V(X)");
  member->add_option("--ideal", ideal_text, "Comma separated order ideal X")->required();
  member->add_option("FILE", file)->required();

  auto* verify = app.add_subcommand("verify", "Exhaustive verification sweeps");
  verify->add_option("CHECK", which)->required()->check(
      CLI::IsMember({"si", "lemmas", "varieties"}));
  verify->add_option("--max-poset", max_poset, "Largest join-irreducible poset");
  verify->add_option("--max", max_n, "Largest ideal element");

  auto* enumerate = app.add_subcommand("enumerate", "List the corpus");
  enumerate->add_option("--max-poset", max_poset, "Largest join-irreducible poset");

  auto* export_dot = app.add_subcommand("export-dot", "Hasse diagram of an algebra");
  export_dot->add_option("FILE", file)->required();

  try {
    app.parse(argc, argv);
  } catch (CLI::CallForHelp const& e) {
    return app.exit(e);
  } catch (CLI::ParseError const& e) {
    app.exit(e);
    return exit_invalid;
  }

  try {
    if (*cube) {
      emit_algebra(rotlat::rotational_cube(n), format);
    } else if (*free) {
      auto F = rotlat::free_one_generated(n);
      if (format == "dot") {
        std::cout << rotlat::to_dot(F.algebra);
      } else {
        json terms = json::array();
        for (auto const& t : F.terms) {
          terms.push_back(t.to_string());
        }
        json doc         = rotlat::to_json(F.algebra);
        doc["generator"] = F.generator;
        doc["terms"]     = terms;
        emit(doc);
      }
    } else if (*product) {
      std::vector<rotlat::RotationalLattice> fs;
      for (auto const& s : factor_args) {
        fs.push_back(read_algebra_arg(s));
      }
      emit_algebra(rotlat::direct_product(fs), format);
    } else if (*con) {
      auto A   = read_algebra_arg(file);
      auto Con = rotlat::all_congruences(A);
      if (format == "dot") {
        std::cout << rotlat::to_dot(Con);
      } else {
        json cs = json::array(), covers = json::array();
        for (auto const& c : Con.congruences) {
          cs.push_back(rotlat::to_json(c));
        }
        for (auto [a, b] : Con.covers()) {
          covers.push_back({a, b});
        }
        emit({{"kind", "con_lattice"}, {"congruences", cs}, {"covers", covers}});
      }
    } else if (*si) {
      auto A    = read_algebra_arg(file);
      auto mono = rotlat::monolith(A);
      auto cube = rotlat::recognize_cube(A);
      emit({{"subdirectly_irreducible", mono.has_value()},
            {"simple", rotlat::is_simple(A)},
            {"monolith", mono ? rotlat::to_json(*mono) : json(nullptr)},
            {"cube", cube ? json(*cube) : json(nullptr)}});
    } else if (*factors) {
      auto A  = read_algebra_arg(file);
      json fs = json::array();
      for (auto const& f : rotlat::subdirect_factors(A)) {
        auto k = rotlat::recognize_cube(f.algebra);
        fs.push_back({{"kernel", rotlat::to_json(f.kernel)},
                      {"algebra", rotlat::to_json(f.algebra)},
                      {"cube", k ? json(*k) : json(nullptr)}});
      }
      emit({{"factors", fs}});
    } else if (*hs) {
      bool ok = rotlat::hs_cube(m, n);
      emit({{"hs", ok},
            {"reason", std::to_string(m) + (ok ? " divides " : " does not divide ")
                           + std::to_string(n)}});
    } else if (*embed) {
      emit(rotlat::to_json(rotlat::embed_cube(m, n)));
    } else if (*member) {
      auto X   = rotlat::validate_ideal(parse_list(ideal_text));
      auto A   = read_algebra_arg(file);
      auto res = rotlat::variety_contains_algebra(X, A);
      json doc = rotlat::to_json(res);
      doc["ideal"] = rotlat::to_json(X);
      emit(doc);
      if (res.theorem_violation) {
        std::cerr << "theorem violation: a subdirectly irreducible factor is not a cube\n";
        return exit_verification;
      }
    } else if (*verify) {
      if (which == "varieties") {
        return emit_report(rotlat::verify_variety_lattice(max_n));
      }
      auto corpus = rotlat::build_corpus(max_poset);
      std::cerr << "corpus: " << corpus.poset_count << " posets, " << corpus.algebras.size()
                << " algebras\n";
      return emit_report(which == "si" ? rotlat::verify_si_classification(corpus)
                                       : rotlat::verify_lemmas(corpus));
    } else if (*enumerate) {
      auto corpus = rotlat::build_corpus(max_poset);
      json list   = json::array();
      for (auto const& e : corpus.algebras) {
        json doc     = rotlat::rot_poset_json(e.poset, e.sigma);
        doc["order"] = e.algebra.order();
        doc["elements"] = e.algebra.size();
        list.push_back(doc);
      }
      emit({{"kind", "corpus"}, {"max_poset", max_poset}, {"algebras", list}});
    } else if (*export_dot) {
      std::cout << rotlat::to_dot(read_algebra_arg(file));
    }
  } catch (rotlat::Error const& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_invalid;
  } catch (json::exception const& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_invalid;
  }
  return exit_ok;
}
