#include "frobcrit/registry.hpp"

#include <algorithm>

#include "frobcrit/error.hpp"

namespace frobcrit {

namespace {

bool is_builder(const Embedding& e, std::string_view name) { return e.builder() == name; }

bool diagonal_copies(const Embedding& e, std::int64_t k) {
  return is_builder(e, "diagonal") && e.params().k && *e.params().k == k;
}

}  // namespace

const std::vector<DonkinPairRecord>& donkin_records() {
  static const std::vector<DonkinPairRecord> records = {
      {"levi", [](const Embedding& e) { return is_builder(e, "levi"); }, 2,
       "Levi subgroups: restriction of a good filtration has a good filtration"},
      {"identity", [](const Embedding& e) { return diagonal_copies(e, 1); }, 2,
       "H = G"},
      {"diagonal-2", [](const Embedding& e) { return diagonal_copies(e, 2); }, 3,
       "diagonal H in H x H, the fixed points of the swap involution"},
      {"folding_AC", [](const Embedding& e) { return is_builder(e, "folding_AC"); }, 3,
       "Sp_2m in SL_2m, fixed points of a graph automorphism"},
      {"folding_DB", [](const Embedding& e) { return is_builder(e, "folding_DB"); }, 3,
       "Spin_2n-1 in Spin_2n, fixed points of a graph automorphism"},
      {"folding_E6F4", [](const Embedding& e) { return is_builder(e, "folding_E6F4"); }, 3,
       "F4 in E6, fixed points of a graph automorphism"},
      {"folding_B3G2", [](const Embedding& e) { return is_builder(e, "folding_B3G2"); }, 3,
       "G2 in Spin_7, listed with the minimal rank pairs"},
      {"so_in_sl", [](const Embedding& e) { return is_builder(e, "so_in_sl"); }, 3,
       "SO_n in SL_n, fixed points of an involution"},
  };
  return records;
}

DonkinVerdict lookup_donkin(const Embedding& emb, std::int64_t p) {
  for (const auto& r : donkin_records()) {
    if (r.matcher(emb) && p >= r.min_p) return {true, r.name + ": " + r.citation};
  }
  return {};
}

std::vector<std::string> check_expectation(const CriterionReport& report, const Expectation& e) {
  std::vector<std::string> out;
  auto yn = [](bool b) { return b ? std::string("true") : std::string("false"); };
  if (e.dominance && *e.dominance != report.dominance)
    out.push_back("dominance: expected " + yn(*e.dominance) + ", got " + yn(report.dominance));
  if (e.regular && *e.regular != report.regular)
    out.push_back("regular: expected " + yn(*e.regular) + ", got " + yn(report.regular));
  if (e.conclusions_empty && *e.conclusions_empty != report.conclusions.empty())
    out.push_back("conclusions_empty: expected " + yn(*e.conclusions_empty) + ", got " +
                  yn(report.conclusions.empty()));
  for (const auto& t : e.tags_present)
    if (!report.has_conclusion(t)) out.push_back("missing conclusion " + t);
  for (const auto& t : e.tags_absent)
    if (report.has_conclusion(t)) out.push_back("unexpected conclusion " + t);
  if (e.lie_separability && *e.lie_separability != report.lie_separability)
    out.push_back("lie_separability: expected " + to_string(*e.lie_separability) + ", got " +
                  to_string(report.lie_separability));
  return out;
}

namespace {

ExampleCase full_case(std::string name, Embedding emb, std::int64_t p) {
  CriterionInput in{std::move(emb), {}, p};
  in.J = in.embedding.g().all_indices();
  return {std::move(name), std::move(in), {}};
}

}  // namespace

std::vector<ExampleCase> minimal_rank_suite(std::int64_t p) {
  std::vector<Embedding> embs{identity_embedding(RootSystem::from_spec("A2")),
                              diagonal(RootSystem::from_spec("B2"), 2)};
  for (int m = 2; m <= 4; ++m) embs.push_back(folding_AC(m));
  for (int n = 4; n <= 6; ++n) embs.push_back(folding_DB(n));
  embs.push_back(folding_E6F4());
  embs.push_back(folding_B3G2());

  std::vector<ExampleCase> out;
  for (auto& e : embs) {
    auto name = "minimal-rank/" + e.label();
    auto c = full_case(std::move(name), std::move(e), p);
    c.expected.dominance = true;
    if (p >= 3) c.expected.tags_present = {tags::kSplitPJ, tags::kCor73Flag,
                                           tags::kCohomologyVanishing};
    out.push_back(std::move(c));
  }
  return out;
}

Sp4Example example_sp4() {
  const auto g = RootSystem::from_spec("C2");
  auto x = [&](Word w) { return WeylElement::from_word(g, w); };
  Sp4Example ex{
      levi(g, {0}),
      {x({}), x({1}), x({1, 0}), x({1, 0, 1})},
      {true, false, false, true},
      {"X8", "X9", "X10", "X11"},
      {},
      {},
      {},
      {"X3"},
  };
  for (int i = 1; i <= 11; ++i) ex.diagram.nodes.push_back("X" + std::to_string(i));
  ex.diagram.edges = {
      {"X1", "X2", 1}, {"X1", "X3", 2}, {"X1", "X4", 1},  {"X2", "X5", 1},
      {"X3", "X6", 1}, {"X4", "X7", 1}, {"X5", "X8", 1},  {"X5", "X9", 1},
      {"X6", "X9", 1}, {"X6", "X10", 1}, {"X7", "X10", 1}, {"X7", "X11", 1},
  };
  ex.compatible_chains[0] = {"X2", "X5", "X8"};
  ex.compatible_chains[3] = {"X4", "X7", "X11"};
  // x_2 P_1 = x_3 P_1, so X6 appears for both middle Borels with the short root.
  ex.pair_claims = {
      {"X5", "X9", 1, {1}, false},
      {"X6", "X9", 1, {0}, true},
      {"X7", "X10", 2, {1}, false},
      {"X6", "X10", 2, {0}, true},
  };
  return ex;
}

std::vector<ExampleCase> example_sln_son(int n, std::int64_t p) {
  auto emb = so_in_sl(n);
  std::vector<int> removed;  // 1-based nodes of A_{n-1}
  if (n % 2 == 0) removed = {n / 2};
  else removed = {(n - 1) / 2, (n + 1) / 2};
  std::vector<ExampleCase> out;
  for (int r : removed) {
    CriterionInput in{emb, {}, p};
    for (int i = 1; i < n; ++i)
      if (i != r) in.J.push_back(i - 1);
    ExampleCase c{"sln-son:" + std::to_string(n) + "/J=I-{" + std::to_string(r) + "}",
                  std::move(in), {}};
    c.expected.dominance = true;
    if (p >= 3) c.expected.tags_present = {tags::kSplitPJ};
    out.push_back(std::move(c));
  }
  return out;
}

ExampleCase example_triple_diagonal(const RootSystem& h, std::int64_t p) {
  auto c = full_case("triple-diagonal:" + h.spec(), diagonal(h, 3), p);
  c.expected.dominance = false;
  c.expected.conclusions_empty = true;
  return c;
}

ExampleCase example_frobenius_twist(std::int64_t p) {
  CriterionInput in{frobenius_twisted_diagonal(RootSystem::from_spec("A1"), p), {0}, p};
  in.surjectivity_source = SurjectivitySource::UserAsserted;
  ExampleCase c{"frobenius-twist:" + std::to_string(p), std::move(in), {}};
  c.expected.dominance = true;
  c.expected.lie_separability = TriState::Fails;
  c.expected.tags_present = {tags::kSplitPJ};
  c.expected.tags_absent = {tags::kCor72HPJ};
  return c;
}

}  // namespace frobcrit
