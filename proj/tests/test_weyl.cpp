#include <doctest.h>

#include <cstdlib>
#include <map>

#include "frobcrit/error.hpp"
#include "frobcrit/weyl.hpp"
#include "oracles.hpp"

using namespace frobcrit;

namespace {

bool sends_J_roots_to_negative(const RootSystem& rs, const WeylElement& w, const IndexSet& J) {
  for (const auto& beta : rs.positive_roots()) {
    bool inside = true;
    for (std::size_t i = 0; i < beta.size(); ++i)
      if (beta[i] != 0 && std::find(J.begin(), J.end(), static_cast<int>(i)) == J.end())
        inside = false;
    auto img = act_on_root(rs, w, beta);
    bool neg = std::any_of(img.begin(), img.end(), [](auto x) { return x < 0; });
    if (inside != neg) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("from_word canonical form") {
  auto c2 = RootSystem::from_spec("C2");
  auto a = WeylElement::from_word(c2, {0, 1, 0, 1});
  auto b = WeylElement::from_word(c2, {1, 0, 1, 0});
  CHECK(a == b);
  CHECK(a == longest_element(c2, {0, 1}));
  CHECK(length(c2, WeylElement::from_word(c2, {})) == 0);
  auto a2 = RootSystem::from_spec("A2");
  CHECK(WeylElement::from_word(a2, {0, 0}) == WeylElement::identity(a2));
  CHECK_THROWS_AS(WeylElement::from_word(a2, {2}), Error);
}

TEST_CASE("reflection action") {
  for (const auto& s : {"A2", "C2", "G2", "B3"}) {
    auto rs = RootSystem::from_spec(s);
    for (std::size_t i = 0; i < rs.rank(); ++i) {
      IntVec ai(rs.rank(), 0);
      ai[i] = 1;
      auto si = WeylElement::simple_reflection(rs, static_cast<int>(i));
      CHECK(si.act(rs.rho()) == rs.rho() - rs.root_weight(ai));
    }
    CHECK(WeylElement::identity(rs).act(rs.rho()) == rs.rho());
  }
}

TEST_CASE("w_0 rho = -rho, length |R+|, involution") {
  for (const auto& s : {"A1", "A2", "C2", "G2", "F4", "E6", "D5"}) {
    INFO(s);
    auto rs = RootSystem::from_spec(s);
    auto w0 = longest_element(rs, rs.all_indices());
    CHECK(w0.act(rs.rho()) == -rs.rho());
    CHECK(length(rs, w0) == rs.num_positive_roots());
    CHECK(w0 * w0 == WeylElement::identity(rs));
  }
}

TEST_CASE("longest element of a parabolic") {
  auto c2 = RootSystem::from_spec("C2");
  CHECK(longest_element(c2, {}) == WeylElement::identity(c2));
  CHECK(longest_element(c2, {0}) == WeylElement::simple_reflection(c2, 0));
  CHECK(length(c2, longest_element(c2, {0, 1})) == 4);

  // On A1 x A1 the longest element of one factor fixes the other rho_J.
  auto a1a1 = RootSystem::from_spec("A1,A1");
  CHECK(longest_element(a1a1, {0}).act(a1a1.rho_J({1})) == a1a1.rho_J({1}));

  for (const auto& s : {"B3", "A4", "D4", "F4"}) {
    auto rs = RootSystem::from_spec(s);
    for (std::uint64_t mask = 0; mask < (1u << rs.rank()); ++mask) {
      IndexSet J;
      for (std::size_t i = 0; i < rs.rank(); ++i)
        if (mask >> i & 1) J.push_back(static_cast<int>(i));
      auto w = longest_element(rs, J);
      INFO(s, " mask ", mask);
      CHECK(sends_J_roots_to_negative(rs, w, J));
    }
  }
}

TEST_CASE("enumeration sizes") {
  std::map<std::string, std::uint64_t> orders{{"C2", 8}, {"A3", 24}, {"G2", 12}, {"B3", 48},
                                              {"F4", 1152}};
  for (const auto& [s, n] : orders) {
    auto rs = RootSystem::from_spec(s);
    auto all = enumerate(rs, rs.all_indices());
    CHECK(all.size() == n);
    std::set<IntMatrix> distinct;
    for (const auto& w : all) distinct.insert(w.matrix());
    CHECK(distinct.size() == n);
    // breadth-first words are reduced
    for (const auto& w : all) CHECK(length(rs, w) == w.word().size());
    CHECK(oracle::orbit_size(rs.cartan_matrix(), IntVec(rs.rank(), 1)) == n);
  }
  auto c2 = RootSystem::from_spec("C2");
  CHECK(enumerate(c2, {}).size() == 1);
  CHECK(enumerate(c2, {1}).size() == 2);
}

TEST_CASE("enumeration cap") {
  auto e6 = RootSystem::from_spec("E6");
  CHECK_THROWS_AS(enumerate(e6, e6.all_indices(), 1000), CapExceeded);
  try {
    enumerate(e6, e6.all_indices(), 1000);
  } catch (const CapExceeded& e) {
    CHECK(e.order() == 51840);
  }
  auto e8 = RootSystem::from_spec("E8");
  CHECK_THROWS_AS(enumerate(e8, e8.all_indices()), CapExceeded);
  ::setenv("FROBCRIT_ENUM_CAP", "10", 1);
  CHECK(default_enum_cap() == 10);
  CHECK_THROWS_AS(enumerate(RootSystem::from_spec("A3"), {0, 1, 2}), CapExceeded);
  ::unsetenv("FROBCRIT_ENUM_CAP");
  CHECK(default_enum_cap() == 1'000'000);
}

TEST_CASE("reduced words") {
  auto b3 = RootSystem::from_spec("B3");
  auto w = WeylElement::from_word(b3, {0, 1, 1, 2, 0, 0, 2});
  auto r = reduced(b3, w);
  CHECK(r == w);
  CHECK(r.word().size() == length(b3, w));
}

TEST_CASE("inverse") {
  auto g2 = RootSystem::from_spec("G2");
  auto w = WeylElement::from_word(g2, {0, 1, 0});
  CHECK(w * w.inverse(g2) == WeylElement::identity(g2));
}

TEST_CASE("sum of R_J^+ equals rho_J - w_0^J rho_J") {
  auto a2 = RootSystem::from_spec("A2");
  auto full = verify_st_decomp(a2, {0, 1});
  CHECK(full.equal);
  CHECK(full.lhs == Rational(2) * a2.rho());

  auto c2 = RootSystem::from_spec("C2");
  auto d = verify_st_decomp(c2, {0});
  CHECK(d.equal);
  CHECK(d.lhs == c2.root_weight({1, 0}));
  CHECK(verify_st_decomp(c2, {}).lhs == Weight::zero(2));

  // oracle: roots summed from the reflection orbit, w_0^J from J-antidominance
  for (const auto& s : {"A3", "B3", "C3", "G2", "F4", "D4"}) {
    auto rs = RootSystem::from_spec(s);
    for (std::uint64_t mask = 0; mask < (1u << rs.rank()); ++mask) {
      IndexSet J;
      for (std::size_t i = 0; i < rs.rank(); ++i)
        if (mask >> i & 1) J.push_back(static_cast<int>(i));
      auto r = verify_st_decomp(rs, J);
      IntVec rhoJ = rs.rho_J(J).to_int();
      auto img = oracle::w0J_image(rs.cartan_matrix(), J, rhoJ);
      IntVec rhs(rs.rank());
      for (std::size_t i = 0; i < rs.rank(); ++i) rhs[i] = rhoJ[i] - img[i];
      INFO(s, " mask ", mask);
      CHECK(r.lhs.to_int() == oracle::sum_of_roots(rs.cartan_matrix(), J));
      CHECK(r.rhs.to_int() == rhs);
      CHECK(r.equal);
    }
  }
}

TEST_CASE("Steinberg weights") {
  auto c2 = RootSystem::from_spec("C2");
  auto [a, b] = steinberg_weights(c2, {0, 1}, 3);
  CHECK(a == Rational(2) * c2.rho());
  CHECK(b == Rational(2) * c2.rho());
  auto a2 = RootSystem::from_spec("A2");
  auto [c, d] = steinberg_weights(a2, {0, 1}, 2);
  CHECK(c == Weight(IntVec{1, 1}));
  CHECK(d == Weight(IntVec{1, 1}));
  auto [e, f] = steinberg_weights(c2, {}, 2);
  CHECK(e == Weight::zero(2));
  CHECK(f == Weight::zero(2));
  CHECK_THROWS_AS(steinberg_weights(c2, {0}, 1), Error);
  CHECK_THROWS_AS(steinberg_weights(c2, {0}, 4), Error);

  // J-dominance of the second weight, and the sum is (p-1)(rho_J - w_0^J rho_J).
  auto b3 = RootSystem::from_spec("B3");
  for (IndexSet J : {IndexSet{0}, IndexSet{1, 2}, IndexSet{0, 2}, IndexSet{0, 1, 2}}) {
    auto [x, y] = steinberg_weights(b3, J, 5);
    for (int j : J) CHECK(y[j] >= 0);
    CHECK(x + y == Rational(4) * verify_st_decomp(b3, J).rhs);
  }
}

TEST_CASE("length is subadditive and detects reduced words on rank 2") {
  for (const auto& s : {"A2", "B2", "G2", "A1,A1"}) {
    auto rs = RootSystem::from_spec(s);
    std::map<IntMatrix, std::size_t> min_len;
    for (const auto& w : enumerate(rs, rs.all_indices())) min_len[w.matrix()] = w.word().size();
    // all words up to length 7
    std::vector<Word> words{{}};
    for (std::size_t k = 0; k < words.size(); ++k) {
      if (words[k].size() == 7) continue;
      for (int i = 0; i < 2; ++i) {
        auto next = words[k];
        next.push_back(i);
        words.push_back(next);
      }
    }
    for (const auto& word : words) {
      auto w = WeylElement::from_word(rs, word);
      auto l = length(rs, w);
      CHECK(l <= word.size());
      CHECK((l == word.size()) == (min_len.at(w.matrix()) == word.size()));
    }
    oracle::Gen gen(7);
    for (int t = 0; t < 200; ++t) {
      auto u = WeylElement::from_word(rs, gen.word(2, 8));
      auto v = WeylElement::from_word(rs, gen.word(2, 8));
      CHECK(length(rs, u * v) <= length(rs, u) + length(rs, v));
    }
  }
}

TEST_CASE("stabilizers of dominant weights are parabolic") {
  for (const auto& s : {"A3", "B3", "G2"}) {
    auto rs = RootSystem::from_spec(s);
    auto all = enumerate(rs, rs.all_indices());
    oracle::Gen gen(13);
    for (int t = 0; t < 20; ++t) {
      IntVec lam = gen.int_vec(rs.rank(), 0, 2);
      IndexSet stab;
      for (std::size_t i = 0; i < lam.size(); ++i)
        if (lam[i] == 0) stab.push_back(static_cast<int>(i));
      auto parabolic = enumerate(rs, stab);
      std::set<IntMatrix> inside;
      for (const auto& w : parabolic) inside.insert(w.matrix());
      for (const auto& w : all)
        if (w.act(lam) == lam) CHECK(inside.count(w.matrix()) == 1);
    }
  }
}

TEST_CASE("prime helper") {
  CHECK(is_prime(2));
  CHECK(is_prime(97));
  CHECK_FALSE(is_prime(1));
  CHECK_FALSE(is_prime(91));
  CHECK_FALSE(is_prime(-3));
}
