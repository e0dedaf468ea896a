#include <doctest.h>

#include <algorithm>

#include "frobcrit/error.hpp"
#include "frobcrit/rootsys.hpp"
#include "oracles.hpp"

using namespace frobcrit;

namespace {

const std::vector<std::string> kSpecs = {"A1", "A2", "A3", "A4", "B2", "B3", "B4", "C2", "C3",
                                         "C4", "D4", "D5", "G2", "F4", "E6", "E7", "A1,A1",
                                         "B2,G2"};

}  // namespace

TEST_CASE("positive root counts") {
  std::map<std::string, std::size_t> expected{{"A1", 1},  {"A2", 3},  {"A3", 6},  {"A4", 10},
                                              {"B2", 4},  {"B3", 9},  {"B4", 16}, {"C2", 4},
                                              {"C3", 9},  {"C4", 16}, {"D4", 12}, {"D5", 20},
                                              {"G2", 6},  {"F4", 24}, {"E6", 36}, {"E7", 63},
                                              {"A1,A1", 2}, {"B2,G2", 10}};
  for (const auto& s : kSpecs) {
    INFO(s);
    CHECK(RootSystem::from_spec(s).num_positive_roots() == expected.at(s));
  }
  CHECK(RootSystem::from_spec("E8").num_positive_roots() == 120);
}

TEST_CASE("root-string closure agrees with the reflection-orbit oracle") {
  for (const auto& s : kSpecs) {
    INFO(s);
    auto rs = RootSystem::from_spec(s);
    auto expected = oracle::positive_roots(rs.cartan_matrix());
    std::set<IntVec> got(rs.positive_roots().begin(), rs.positive_roots().end());
    CHECK(got == expected);
  }
}

TEST_CASE("Cartan matrices follow the Bourbaki convention") {
  // entry (i,j) = <alpha_j, alpha_i^vee>
  auto b2 = RootSystem::from_spec("B2").cartan_matrix();
  CHECK(b2 == IntMatrix{{2, -1}, {-2, 2}});
  auto c2 = RootSystem::from_spec("C2").cartan_matrix();
  CHECK(c2 == IntMatrix{{2, -2}, {-1, 2}});
  auto g2 = RootSystem::from_spec("G2").cartan_matrix();
  CHECK(g2 == IntMatrix{{2, -3}, {-1, 2}});
  auto f4 = RootSystem::from_spec("F4").cartan_matrix();
  CHECK(f4[1][2] == -1);
  CHECK(f4[2][1] == -2);
  auto e6 = RootSystem::from_spec("E6").cartan_matrix();
  CHECK(e6[0][2] == -1);
  CHECK(e6[1][3] == -1);
  CHECK(e6[0][1] == 0);
  auto d4 = RootSystem::from_spec("D4").cartan_matrix();
  CHECK(d4[1][3] == -1);
  CHECK(d4[2][3] == 0);
}

TEST_CASE("short roots get symmetrizer 1") {
  auto c2 = RootSystem::from_spec("C2");
  CHECK(c2.symmetrizer(0) == 1);
  CHECK(c2.symmetrizer(1) == 2);
  auto b3 = RootSystem::from_spec("B3");
  CHECK(b3.symmetrizer(2) == 1);
  CHECK(b3.symmetrizer(0) == 2);
  auto g2 = RootSystem::from_spec("G2");
  CHECK(g2.symmetrizer(0) == 1);
  CHECK(g2.symmetrizer(1) == 3);
}

TEST_CASE("classification from a bare Cartan matrix") {
  for (const auto& s : {"A3", "B3", "C3", "D4", "G2", "F4", "E6", "B2", "C2"}) {
    INFO(s);
    auto rs = RootSystem::from_spec(s);
    auto bare = RootSystem::from_cartan(rs.cartan_matrix());
    CHECK(bare.spec() == s);
  }
  CHECK(RootSystem::from_cartan({{2, -1, 0}, {-1, 2, 0}, {0, 0, 2}}).spec() == "A2,A1");
  CHECK_THROWS_AS(RootSystem::from_cartan({{2, -2}, {-2, 2}}), Error);
  CHECK_THROWS_AS(RootSystem::from_cartan({{2, -1}, {0, 2}}), Error);
}

TEST_CASE("spec grammar") {
  CHECK(RootSystem::from_spec("A3,A3,A3").rank() == 9);
  CHECK(RootSystem::from_spec("").rank() == 0);
  CHECK_THROWS_AS(RootSystem::from_spec("X3"), Error);
  CHECK_THROWS_AS(RootSystem::from_spec("B1"), Error);
  CHECK(RootSystem::from_spec("D3").num_positive_roots() == 6);
  CHECK_THROWS_AS(RootSystem::from_spec("A"), Error);
  CHECK_THROWS_AS(RootSystem::from_spec("E9"), Error);
}

TEST_CASE("rho and rho_J") {
  auto c2 = RootSystem::from_spec("C2");
  CHECK(c2.rho_J({0}) == Weight(IntVec{1, 0}));
  CHECK(c2.rho_J({0, 1}) == c2.rho());
  CHECK(c2.rho_J({}) == Weight::zero(2));
  CHECK(c2.rho() == Weight(IntVec{1, 1}));
  CHECK_THROWS_AS(c2.rho_J({2}), Error);
  CHECK_THROWS_AS(c2.rho_J({-1}), Error);
}

TEST_CASE("dominance") {
  auto rs = RootSystem::from_spec("A2");
  CHECK(is_dominant(rs.rho()));
  CHECK(is_regular_dominant(rs.rho()));
  CHECK_FALSE(is_dominant(-rs.rho()));
  CHECK(is_dominant(Weight::zero(2)));
  CHECK_FALSE(is_regular_dominant(Weight::zero(2)));
  CHECK(is_dominant(Weight(RatVec{Rational(1, 3), 0})));
  CHECK_FALSE(is_dominant(Weight(RatVec{Rational(-1, 3), 5})));

  // In C2 with H the Levi of the short root: 2 rho_H - rho| pairs to 1.
  auto c2 = RootSystem::from_spec("C2");
  auto pairing = 2 * 1 - c2.cartan_pairing(c2.rho(), {1, 0});
  CHECK(pairing == 1);
}

TEST_CASE("sum of positive roots pairs to 2 with every simple coroot") {
  for (const auto& s : kSpecs) {
    INFO(s);
    auto rs = RootSystem::from_spec(s);
    auto sum = rs.positive_root_sum(rs.all_indices());
    for (std::size_t i = 0; i < rs.rank(); ++i) CHECK(sum[i] == 2);
  }
}

TEST_CASE("reflections permute the positive roots other than alpha_i") {
  for (const auto& s : kSpecs) {
    INFO(s);
    auto rs = RootSystem::from_spec(s);
    const auto& roots = rs.positive_roots();
    std::set<IntVec> all(roots.begin(), roots.end());
    for (const auto& beta : roots) {
      IntVec neg = beta;
      for (auto& x : neg) x = -x;
      bool negative = false;
      CHECK(rs.find_root(neg, &negative).has_value());
      CHECK(negative);
      CHECK(all.count(neg) == 0);
    }
    for (std::size_t i = 0; i < rs.rank(); ++i) {
      std::set<IntVec> image;
      for (const auto& beta : roots) {
        if (std::count(beta.begin(), beta.end(), 0) == static_cast<long>(rs.rank() - 1) &&
            beta[i] == 1)
          continue;
        IntVec out = beta;
        std::int64_t c = 0;
        for (std::size_t j = 0; j < rs.rank(); ++j) c += rs.cartan(i, j) * beta[j];
        out[i] -= c;
        image.insert(out);
      }
      std::set<IntVec> rest = all;
      IntVec ai(rs.rank(), 0);
      ai[i] = 1;
      rest.erase(ai);
      CHECK(image == rest);
    }
  }
}

TEST_CASE("inner product is W-invariant and matches pairings") {
  auto rs = RootSystem::from_spec("B3");
  oracle::Gen gen(3);
  for (int t = 0; t < 100; ++t) {
    Weight a(gen.int_vec(3, -4, 4)), b(gen.int_vec(3, -4, 4));
    for (std::size_t i = 0; i < 3; ++i) {
      IntVec ai(3, 0);
      ai[i] = 1;
      auto alpha = rs.root_weight(ai);
      // <a, alpha_i^vee> = 2 (a, alpha_i) / (alpha_i, alpha_i)
      CHECK(a[i] == 2 * rs.inner_product(a, alpha) / rs.inner_product(alpha, alpha));
      auto ra = a - a[i] * alpha;
      auto rb = b - b[i] * alpha;
      CHECK(rs.inner_product(ra, rb) == rs.inner_product(a, b));
    }
  }
}

TEST_CASE("Weyl group orders from closed forms") {
  CHECK(RootSystem::from_spec("C2").weyl_order() == 8);
  CHECK(RootSystem::from_spec("A3").weyl_order() == 24);
  CHECK(RootSystem::from_spec("F4").weyl_order() == 1152);
  CHECK(RootSystem::from_spec("E6").weyl_order() == 51840);
  CHECK(RootSystem::from_spec("E8").weyl_order() == 696729600ULL);
  auto a3 = RootSystem::from_spec("A3");
  CHECK(a3.weyl_order({0, 2}) == 4);
  CHECK(a3.weyl_order({}) == 1);
}

TEST_CASE("dominance is closed under addition") {
  oracle::Gen gen(5);
  for (int t = 0; t < 300; ++t) {
    RatVec a(4), b(4);
    for (auto& q : a) q = abs(gen.rational(20, 7));
    for (auto& q : b) q = abs(gen.rational(20, 7));
    CHECK(is_dominant(Weight(a) + Weight(b)));
  }
}
