#include <gtest/gtest.h>

#include "rotlat/io.hpp"
#include "rotlat/rotlat.hpp"

using namespace rotlat;

TEST(Json, CubeDocument) {
  json doc = to_json(rotational_cube(3));
  EXPECT_EQ(doc["kind"], "rotational_lattice");
  EXPECT_EQ(doc["size"], 8);
  EXPECT_EQ(doc["g"], json({0, 2, 4, 6, 1, 3, 5, 7}));
  // strict comparabilities of B_3: pairs of distinct nested subsets
  EXPECT_EQ(doc["leq"].size(), 19u);
  EXPECT_EQ(doc["leq"][0], json({0, 1}));
}

TEST(Json, CubeRoundTrip) {
  for (std::size_t n = 1; n <= 5; ++n) {
    auto B = rotational_cube(n);
    auto C = algebra_from_json(json::parse(to_json(B).dump()));
    EXPECT_TRUE(is_isomorphic(B, C).has_value());
  }
}

TEST(Json, RotPoset) {
  std::vector<index_t> sigma{1, 0, 2};
  json                 doc = rot_poset_json(Poset::antichain(3), sigma);
  EXPECT_EQ(doc["kind"], "rot_poset");
  auto A = algebra_from_json(doc);
  EXPECT_EQ(A.size(), 8u);
  EXPECT_EQ(A.order(), 2u);
}

TEST(Json, PosetAndLatticeGetIdentity) {
  json p = to_json(Poset::chain(2));
  EXPECT_EQ(p["covers"], json::array({json({0, 1})}));
  auto A = algebra_from_json(p);
  EXPECT_EQ(A.size(), 3u);
  EXPECT_EQ(A.order(), 1u);
  auto L = algebra_from_json(to_json(rotational_cube(2).lattice()));
  EXPECT_EQ(L.order(), 1u);
  EXPECT_EQ(L.size(), 4u);
}

TEST(Json, CongruenceRoundTrip) {
  auto B2xB3 = direct_product(rotational_cube(2), rotational_cube(3));
  for (auto const& c : all_congruences(B2xB3).congruences) {
    EXPECT_EQ(congruence_from_json(to_json(c)), c);
  }
}

TEST(Json, IdealRoundTrip) {
  for (auto const& X : ideals_upto(6)) {
    json doc = to_json(X);
    EXPECT_EQ(doc["kind"], "order_ideal");
    EXPECT_EQ(ideal_from_json(doc), X);
  }
  EXPECT_THROW(ideal_from_json(json::parse(R"({"kind":"order_ideal","members":[2]})")),
               InvalidIdeal);
}

TEST(Json, MembershipCertificate) {
  auto X   = validate_ideal({1, 2, 3});
  auto res = variety_contains_algebra(X, direct_product(rotational_cube(2), rotational_cube(3)));
  json doc = to_json(res);
  EXPECT_TRUE(doc["member"].get<bool>());
  EXPECT_EQ(doc["factors"].size(), 2u);
  for (auto const& f : doc["factors"]) {
    EXPECT_EQ(f["kernel"]["kind"], "congruence");
    EXPECT_TRUE(f["cube"].is_number());
  }
}

TEST(Json, Report) {
  json doc = to_json(verify_variety_lattice(3));
  EXPECT_TRUE(doc["ok"].get<bool>());
  EXPECT_TRUE(doc["counterexamples"].empty());
  EXPECT_EQ(doc["check"], "variety-lattice");
}

TEST(Json, Errors) {
  EXPECT_THROW(algebra_from_json(json::parse(R"({"kind":"banana"})")), InvalidArgument);
  EXPECT_THROW(algebra_from_json(json::parse(R"([1,2])")), InvalidArgument);
  EXPECT_THROW(algebra_from_json(json::parse(R"({"kind":"lattice","size":3})")), InvalidArgument);
  EXPECT_THROW(algebra_from_json(json::parse(
                   R"({"kind":"rotational_lattice","size":3,"leq":[[0,1],[1,2]],"g":[2,1,0]})")),
               NotAnAutomorphism);
  EXPECT_THROW(
      algebra_from_json(json::parse(R"({"kind":"lattice","size":3,"leq":[[0,1],[0,2]]})")),
      NotALattice);
  EXPECT_THROW(algebra_from_json(json::parse(R"({"kind":"poset","size":2,"covers":[[0,1],[1,0]]})")),
               NotAPoset);
  EXPECT_THROW(algebra_from_json(json::parse(R"({"kind":"poset","size":2,"covers":[[0,5]]})")),
               InvalidArgument);
  EXPECT_THROW(congruence_from_json(json::parse(
                   R"({"kind":"congruence","algebra_size":3,"labels":[0,0]})")),
               InvalidArgument);
}

TEST(Dot, Cube) {
  std::string dot = to_dot(rotational_cube(2));
  EXPECT_EQ(dot.rfind("digraph", 0), 0u);
  // four covering edges in the square
  std::size_t edges = 0;
  for (std::size_t p = dot.find("->"); p != std::string::npos; p = dot.find("->", p + 2)) {
    ++edges;
  }
  EXPECT_EQ(edges, 4u);
}

TEST(Dot, ConLattice) {
  auto con = all_congruences(direct_product(rotational_cube(2), rotational_cube(3)));
  std::string dot = to_dot(con);
  EXPECT_NE(dot.find("digraph"), std::string::npos);
  std::size_t edges = 0;
  for (std::size_t p = dot.find("->"); p != std::string::npos; p = dot.find("->", p + 2)) {
    ++edges;
  }
  EXPECT_EQ(edges, 4u);
}
