#include <doctest.h>

#include "frobcrit/criteria.hpp"
#include "frobcrit/error.hpp"
#include "frobcrit/registry.hpp"

using namespace frobcrit;

namespace {

CriterionInput full_input(Embedding e, std::int64_t p) {
  CriterionInput in{std::move(e), {}, p};
  in.J = in.embedding.g().all_indices();
  return in;
}

const Conclusion* find(const CriterionReport& r, std::string_view tag, std::string_view theorem) {
  for (const auto& c : r.conclusions)
    if (c.tag == tag && c.theorem == theorem) return &c;
  return nullptr;
}

}  // namespace

TEST_CASE("lemma53 bound") {
  CHECK(lemma53_min_p(identity_embedding(RootSystem::from_spec("A1"))) == 2);
  CHECK(lemma53_min_p(identity_embedding(RootSystem::from_spec("A2"))) == 3);
  // rho_H + omega| pairs to 1 + 1 on the single root
  CHECK(lemma53_min_p(diagonal(RootSystem::from_spec("A1"), 3)) == 2);
  CHECK(lemma53_min_p(frobenius_twisted_diagonal(RootSystem::from_spec("A1"), 5)) == 6);
  CHECK(lemma53_min_p(levi(RootSystem::from_spec("C2"), {})) == 0);
  CHECK(lemma53_min_p(folding_E6F4()) == 15);
  CHECK(lemma53_min_p(folding_B3G2()) == 8);
}

TEST_CASE("surjectivity resolution") {
  auto e = folding_B3G2();
  auto v = resolve_surjectivity(e, 3, SurjectivitySource::Auto);
  CHECK(v.status == TriState::Holds);
  CHECK(v.source == "donkin-registry");
  v = resolve_surjectivity(e, 3, SurjectivitySource::LargeP);
  CHECK(v.status == TriState::Unknown);
  v = resolve_surjectivity(e, 11, SurjectivitySource::LargeP);
  CHECK(v.status == TriState::Holds);
  CHECK(v.source == "large-p");
  CHECK(resolve_surjectivity(e, 2, SurjectivitySource::Auto).status == TriState::Unknown);
  CHECK(resolve_surjectivity(e, 2, SurjectivitySource::UserAsserted).status == TriState::Holds);
  CHECK(resolve_surjectivity(e, 3, SurjectivitySource::None).status == TriState::Unknown);
}

TEST_CASE("enum string round trips") {
  for (auto s : {SurjectivitySource::Auto, SurjectivitySource::DonkinRegistry, SurjectivitySource::LargeP,
                 SurjectivitySource::UserAsserted, SurjectivitySource::None})
    CHECK(parse_surjectivity_source(to_string(s)) == s);
  for (auto t : {TriState::Holds, TriState::Fails, TriState::Unknown}) CHECK(parse_tristate(to_string(t)) == t);
  CHECK_THROWS_AS(parse_surjectivity_source("maybe"), Error);
  CHECK_THROWS_AS(parse_tristate("yes"), Error);
}

TEST_CASE("single-weight hypotheses") {
  auto a2 = RootSystem::from_spec("A2");
  auto zero = thm41_hypotheses(identity_embedding(a2), Weight::zero(2), 5);
  CHECK(zero.splitting_dominant);
  CHECK(zero.canonical_dominant);
  CHECK(zero.splitting_weight == Weight(IntVec{8, 8}));

  for (std::int64_t p : {3, 5, 7}) {
    auto h = RootSystem::from_spec("A1");
    auto tri = diagonal(h, 3);
    auto r = thm41_hypotheses(tri, Rational(p - 1) * tri.g().rho(), p);
    CHECK_FALSE(r.splitting_dominant);
    CHECK(r.splitting_weight == Weight(IntVec{-(p - 1)}));
    CHECK(r.base_splitting.find("(p-1)rho_J") != std::string::npos);

    auto id = thm41_hypotheses(identity_embedding(a2), Rational(p - 1) * a2.rho(), p);
    CHECK(id.splitting_dominant);
    CHECK(id.splitting_weight == Rational(p - 1) * a2.rho());
    CHECK(id.canonical_weight == Weight::zero(2));
    CHECK(id.canonical_dominant);
  }
  CHECK(thm41_hypotheses(identity_embedding(a2), Weight(IntVec{1, 0}), 5).base_splitting == "assumed");
  CHECK_THROWS_AS(thm41_hypotheses(identity_embedding(a2), Weight(IntVec{-1, 0}), 5), Error);
  CHECK_THROWS_AS(thm41_hypotheses(identity_embedding(a2), Weight::zero(2), 6), Error);
}

TEST_CASE("SO_6 in SL_6 with J = I minus the middle node") {
  CriterionInput in{so_in_sl(6), {0, 1, 3, 4}, 5};
  auto r = check_main(in);
  CHECK(r.dominance);
  CHECK(r.has_conclusion(tags::kSplitPJ));
  REQUIRE(r.divisor);
  CHECK(r.divisor->weight == Weight(IntVec{4, 4, 0, 4, 4}));
  CHECK(r.divisor->multiplicity == 4);
  CHECK(r.lie_separability == TriState::Unknown);
  CHECK(r.has_conclusion(tags::kConditional));
  CHECK_FALSE(r.has_conclusion(tags::kCor72HPJ));
  CHECK_FALSE(r.has_conclusion(tags::kCor73Flag));
}

TEST_CASE("B3 > G2 full flag") {
  for (std::int64_t p : {3, 5, 7}) {
    auto r = check_main(full_input(folding_B3G2(), p));
    CHECK(r.dominance);
    CHECK(r.has_conclusion(tags::kSplitPJ));
    CHECK(r.has_conclusion(tags::kCor73Flag));
    CHECK(r.has_conclusion(tags::kCohomologyVanishing));
    CHECK(r.has_conclusion(tags::kCor72HPJ));
    CHECK(r.lie_separability == TriState::Holds);
  }
}

TEST_CASE("triple diagonal has no conclusions") {
  for (const auto& s : {"A1", "A2", "G2"}) {
    auto h = RootSystem::from_spec(s);
    auto r = check_main(full_input(diagonal(h, 3), 3));
    CHECK(r.restricted_rho_J == Rational(3) * h.rho());
    CHECK(r.test_weight == -h.rho());
    CHECK_FALSE(r.dominance);
    CHECK_FALSE(r.regular);
    CHECK(r.conclusions.empty());
    CHECK_FALSE(r.divisor);
  }
}

TEST_CASE("identity embedding is regular everywhere") {
  auto c2 = RootSystem::from_spec("C2");
  auto r = check_main(full_input(identity_embedding(c2), 3));
  CHECK(r.regular);
  CHECK(r.test_weight == c2.rho());
  auto f = find(r, tags::kGloballyFRegular, "induced-flag-regularity");
  REQUIRE(f);
  CHECK(f->orbit_count == 8);
  CHECK(f->orbit_labels.size() == 8);
  CHECK_FALSE(f->labels_truncated);
  CHECK(find(r, tags::kGloballyFRegular, "orbit-closure-regularity"));
  CHECK(r.divisor->weight == Weight(IntVec{2, 2}));
  CHECK(r.divisor->J == IndexSet{0, 1});
}

TEST_CASE("hypothesis lists") {
  auto r = check_main(full_input(identity_embedding(RootSystem::from_spec("A2")), 3));
  for (const auto& c : r.conclusions) {
    CHECK_FALSE(c.theorem.empty());
    CHECK_FALSE(c.hypotheses.empty());
    CHECK(c.conditional_on.empty());
  }
  auto cor73 = find(r, tags::kCor73Flag, "full-flag-splitting");
  REQUIRE(cor73);
  CHECK(cor73->hypotheses.back() == "J = I");
}

TEST_CASE("unknown surjectivity gives conditional records") {
  auto in = full_input(folding_B3G2(), 3);
  in.surjectivity_source = SurjectivitySource::None;
  auto r = check_main(in);
  CHECK(r.dominance);
  CHECK_FALSE(r.conclusions.empty());
  for (const auto& c : r.conclusions) {
    CHECK(c.tag == tags::kConditional);
    CHECK(std::find(c.conditional_on.begin(), c.conditional_on.end(), "surjectivity") !=
          c.conditional_on.end());
  }
  CHECK_FALSE(r.divisor);
  CHECK_THROWS_AS(divisor_weights(r), Error);
}

TEST_CASE("lie separability defaults and overrides") {
  auto c2 = RootSystem::from_spec("C2");
  CriterionInput in{identity_embedding(c2), {0}, 3};
  CHECK(check_main(in).lie_separability == TriState::Unknown);
  in.lie_separability = TriState::Holds;
  auto r = check_main(in);
  CHECK(r.lie_separability == TriState::Holds);
  CHECK(r.has_conclusion(tags::kCor72HPJ));
  in.lie_separability = TriState::Fails;
  CHECK_FALSE(check_main(in).has_conclusion(tags::kCor72HPJ));

  for (std::int64_t p : {2, 3, 5}) {
    CriterionInput tw{frobenius_twisted_diagonal(RootSystem::from_spec("A1"), p), {0}, p};
    tw.surjectivity_source = SurjectivitySource::UserAsserted;
    auto t = check_main(tw);
    CHECK(t.twist_detected);
    CHECK(t.lie_separability == TriState::Fails);
    CHECK(t.has_conclusion(tags::kSplitPJ));
    CHECK_FALSE(t.has_conclusion(tags::kCor72HPJ));
  }
}

TEST_CASE("orbit labels are truncated at the limit") {
  auto in = full_input(folding_E6F4(), 3);
  auto r = check_main(in);
  auto c = find(r, tags::kSplitPJ, "induced-flag-splitting");
  REQUIRE(c);
  CHECK(c->orbit_count == 51840);
  CHECK(c->orbit_labels.size() == 256);
  CHECK(c->labels_truncated);
  CHECK(c->orbit_labels.front().empty());
  in.label_limit = 3;
  CHECK(find(check_main(in), tags::kSplitPJ, "induced-flag-splitting")->orbit_labels.size() == 3);
}

TEST_CASE("J is normalized") {
  auto in = CriterionInput{identity_embedding(RootSystem::from_spec("A3")), {2, 0}, 3};
  auto r = check_main(in);
  CHECK(r.input.J == IndexSet{0, 2});
  in.J = {2, 0, 2};
  CHECK_THROWS_AS(check_main(in), Error);
  in.J = {5};
  CHECK_THROWS_AS(check_main(in), Error);
}

TEST_CASE("non-prime characteristic is rejected") {
  for (std::int64_t p : {-3, 0, 1, 4, 9, 15}) {
    CHECK_THROWS_AS(check_main(full_input(identity_embedding(RootSystem::from_spec("A1")), p)), Error);
  }
}

TEST_CASE("invalid embeddings are rejected") {
  auto bad = custom_embedding(RootSystem::from_spec("A2"), RootSystem::from_spec("A1"),
                              {{Rational(-1), Rational(0)}});
  CHECK_THROWS_AS(check_main(full_input(bad, 3)), Error);
  CHECK_THROWS_AS(lemma53_min_p(bad), Error);
}

TEST_CASE("Sp4 conjugated Borels") {
  auto ex = example_sp4();
  const auto& e = ex.embedding;
  auto all = e.g().all_indices();
  for (std::size_t k = 0; k < 4; ++k) CHECK(conjugated_borel_check(e, ex.conjugators[k], all) == ex.expected[k]);
  auto s2 = conjugated_borel_detail(e, ex.conjugators[1], all);
  CHECK(s2.test_weight == Weight(IntVec{-1}));
  CHECK_FALSE(s2.dominant);
  auto s212 = conjugated_borel_detail(e, ex.conjugators[3], all);
  // x4 fixes the short simple root and x4 rho pairs to 1 with its coroot
  CHECK(s212.test_weight == Weight(IntVec{1}));
  CHECK(s212.dominant);
}

TEST_CASE("conjugated Borel at the identity is the plain dominance check") {
  auto a3 = RootSystem::from_spec("A3");
  auto e = levi(a3, {0, 2});
  for (std::uint64_t mask = 0; mask < 8; ++mask) {
    IndexSet J;
    for (int i = 0; i < 3; ++i)
      if (mask >> i & 1) J.push_back(i);
    auto c = conjugated_borel_detail(e, WeylElement::identity(a3), J);
    auto r = check_main(CriterionInput{e, J, 3});
    CHECK(c.dominant == r.dominance);
    CHECK(c.test_weight == r.test_weight);
  }
}

TEST_CASE("conjugated Borel precondition") {
  // x = s1 flips one of the two lifts of the diagonal root
  auto g = RootSystem::from_spec("A1,A1");
  auto e = diagonal(RootSystem::from_spec("A1"), 2);
  auto x = WeylElement::from_word(g, {0});
  CHECK_THROWS_WITH_AS(conjugated_borel_detail(e, x, {0, 1}), doctest::Contains("not Borel"), Error);
  CHECK_NOTHROW(conjugated_borel_detail(e, WeylElement::from_word(g, {0, 1}), {0, 1}));
  CHECK_THROWS_AS(conjugated_borel_detail(e, WeylElement::identity(RootSystem::from_spec("A3")), {0}),
                  Error);
}

TEST_CASE("divisor weights") {
  auto c2 = RootSystem::from_spec("C2");
  CriterionInput empty{identity_embedding(c2), {}, 3};
  auto r = check_main(empty);
  REQUIRE(r.divisor);
  CHECK(r.divisor->weight == Weight::zero(2));
  CHECK(r.divisor->J.empty());
  auto full = check_main(full_input(identity_embedding(c2), 3));
  CHECK(divisor_weights(full).weight == Rational(2) * c2.rho());
  CHECK(divisor_weights(full).multiplicity == 2);
}
