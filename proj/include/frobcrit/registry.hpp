#pragma once

// Curated data: Donkin-pair facts and ready-to-run worked examples.

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "frobcrit/criteria.hpp"

namespace frobcrit {

struct DonkinPairRecord {
  std::string name;
  std::function<bool(const Embedding&)> matcher;
  std::int64_t min_p = 2;
  std::string citation;
};

const std::vector<DonkinPairRecord>& donkin_records();

struct DonkinVerdict {
  bool yes = false;
  std::string citation;  // empty when unknown
};

/// Never answers "no": absence of a matching record means unknown.
DonkinVerdict lookup_donkin(const Embedding& emb, std::int64_t p);

/// Expected verdicts attached to a registry input.
struct Expectation {
  std::optional<bool> dominance;
  std::optional<bool> regular;
  std::optional<bool> conclusions_empty;
  std::vector<std::string> tags_present;
  std::vector<std::string> tags_absent;
  std::optional<TriState> lie_separability;
};

/// Human-readable descriptions of every expectation the report violates.
std::vector<std::string> check_expectation(const CriterionReport& report, const Expectation& e);

struct ExampleCase {
  std::string name;
  CriterionInput input;
  Expectation expected;
};

std::vector<ExampleCase> minimal_rank_suite(std::int64_t p = 3);

struct HasseDiagram {
  std::vector<std::string> nodes;
  /// (upper, lower, multiplicity); multiplicity 2 marks the doubled edge.
  std::vector<std::tuple<std::string, std::string, int>> edges;
};

/// A splitting claim about a pair of orbit closures, checked via a
/// conjugated Borel subgroup x B x^-1 and a minimal parabolic J.
struct OrbitPairClaim {
  std::string ambient;   // orbit closure that gets split
  std::string split;     // orbit closure it is compatible with
  std::size_t borel = 0; // index into the conjugators x_1..x_4
  IndexSet J;
  bool expect_regular = false;
};

struct Sp4Example {
  Embedding embedding;
  std::array<WeylElement, 4> conjugators;
  std::array<bool, 4> expected;
  /// Closed orbit attached to each conjugated Borel: X8, X9, X10, X11.
  std::array<std::string, 4> closed_orbits;
  HasseDiagram diagram;
  /// Chains of Schubert-type closures split together with x_1 and x_4.
  std::array<std::vector<std::string>, 4> compatible_chains;
  std::vector<OrbitPairClaim> pair_claims;
  std::vector<std::string> unknown;  // closures with no splitting statement
};

Sp4Example example_sp4();

/// One case for even n, two for odd n.
std::vector<ExampleCase> example_sln_son(int n, std::int64_t p = 3);

ExampleCase example_triple_diagonal(const RootSystem& h, std::int64_t p = 3);

/// H = {(g, F(g))} in SL2 x SL2 with P_J = SL2 x B.
ExampleCase example_frobenius_twist(std::int64_t p);

}  // namespace frobcrit
