#pragma once

// Hypothesis checks for Frobenius splitting and global F-regularity of
// H-orbit closures HBwB/B, and the conclusions they license.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "frobcrit/embed.hpp"
#include "frobcrit/weyl.hpp"

namespace frobcrit {

enum class SurjectivitySource { Auto, DonkinRegistry, LargeP, UserAsserted, None };
enum class TriState { Holds, Fails, Unknown };

std::string to_string(SurjectivitySource s);
std::string to_string(TriState t);
SurjectivitySource parse_surjectivity_source(std::string_view text);
TriState parse_tristate(std::string_view text);

/// Stable tag vocabulary for report conclusions.
namespace tags {
inline constexpr const char* kSplitPJ = "SPLIT_PJ";
inline constexpr const char* kGloballyFRegular = "GLOBALLY_F_REGULAR";
inline constexpr const char* kCanonicalSplit = "CANONICAL_SPLIT";
inline constexpr const char* kCor72HPJ = "COR72_HPJ";
inline constexpr const char* kCor73Flag = "COR73_FLAG";
inline constexpr const char* kCohomologyVanishing = "COHOMOLOGY_VANISHING";
inline constexpr const char* kConditional = "CONDITIONAL";
}  // namespace tags

struct CriterionInput {
  Embedding embedding;
  IndexSet J;  // 0-based subset of the simple roots of G
  std::int64_t p = 3;
  SurjectivitySource surjectivity_source = SurjectivitySource::Auto;
  /// Explicit override; otherwise defaulted from J = I and detect_twist.
  std::optional<TriState> lie_separability;
  /// Maximum number of orbit-closure words listed per conclusion.
  std::size_t label_limit = 256;
};

struct SurjectivityVerdict {
  TriState status = TriState::Unknown;
  std::string source;  // which certificate was used, empty when unknown
  std::string reason;
};

struct Conclusion {
  std::string tag;
  std::string statement;
  std::string theorem;
  std::vector<std::string> hypotheses;
  std::vector<std::string> conditional_on;  // only for CONDITIONAL records
  std::vector<Word> orbit_labels;           // elements w of W_J (or W)
  std::uint64_t orbit_count = 0;
  bool labels_truncated = false;
};

struct DivisorData {
  Weight weight;  // (p-1) rho_J
  std::int64_t multiplicity = 0;
  IndexSet J;
};

struct CriterionReport {
  CriterionInput input;
  Weight restricted_rho_J;  // rho_J|T_H
  Weight test_weight;       // 2 rho_H - rho_J|T_H
  bool dominance = false;
  bool regular = false;
  bool canonical_dominance = false;  // rho_H - rho_J|T_H dominant
  SurjectivityVerdict surjectivity;
  TriState lie_separability = TriState::Unknown;
  std::string lie_reason;
  bool twist_detected = false;
  std::int64_t lemma53_min_p = 0;
  std::vector<Conclusion> conclusions;
  std::optional<DivisorData> divisor;

  bool has_conclusion(std::string_view tag) const;
};

/// max over fundamental weights omega_i of G and positive roots beta of H of
/// <rho_H + omega_i|T_H, beta^vee>, rounded up; 0 when H has no roots.
std::int64_t lemma53_min_p(const Embedding& emb);

SurjectivityVerdict resolve_surjectivity(const Embedding& emb, std::int64_t p,
                                         SurjectivitySource source);

struct InducedSplittingHypotheses {
  Weight splitting_weight;   // 2(p-1) rho_H - lambda|T_H
  bool splitting_dominant = false;
  Weight canonical_weight;   // (p-1) rho_H - lambda|T_H
  bool canonical_dominant = false;
  SurjectivityVerdict surjectivity;
  /// How the splitting of the base variety is obtained.
  std::string base_splitting;
};

InducedSplittingHypotheses thm41_hypotheses(const Embedding& emb, const Weight& lambda,
                                            std::int64_t p,
                                            SurjectivitySource source = SurjectivitySource::Auto);

CriterionReport check_main(const CriterionInput& input);

/// Dominance of 2 rho_H - (x rho_J)|T_H for the Borel subgroup x B x^-1 of G,
/// measured against the positive system of H cut out by x(R^+).
struct ConjugatedBorelResult {
  bool dominant = false;
  bool regular = false;
  Weight test_weight;  // transported back to the standard chamber of H
};

ConjugatedBorelResult conjugated_borel_detail(const Embedding& emb, const WeylElement& x,
                                              const IndexSet& J);
bool conjugated_borel_check(const Embedding& emb, const WeylElement& x, const IndexSet& J);

/// Weight of the line bundle whose section cuts out the splitting divisor.
DivisorData divisor_weights(const CriterionReport& report);

}  // namespace frobcrit
