#pragma once

// Characteristic-zero characters: Freudenthal multiplicities and branching
// along an embedding.

#include <cstdint>
#include <map>
#include <vector>

#include "frobcrit/embed.hpp"
#include "frobcrit/rootsys.hpp"

namespace frobcrit {

/// Weight (fundamental coordinates) -> multiplicity.
using Character = std::map<IntVec, std::int64_t>;

struct DominantCharacter {
  Weight highest_weight;
  Character multiplicities;  // dominant weights only
  std::uint64_t dimension = 0;
};

IntVec dominant_representative(const RootSystem& rs, IntVec mu);
std::vector<IntVec> weyl_orbit(const RootSystem& rs, const IntVec& dominant);

/// Weyl dimension formula.
std::uint64_t weyl_dimension(const RootSystem& rs, const Weight& lambda);

DominantCharacter freudenthal(const RootSystem& rs, const Weight& lambda);

/// Every weight of the module with its multiplicity (orbits expanded).
Character full_character(const RootSystem& rs, const DominantCharacter& ch);

/// Decomposition of res^G_H of the irreducible G-module of highest weight
/// lambda into irreducible H-modules: dominant H-weight -> multiplicity.
/// The decomposition is in Weyl characters; a Frobenius-twisted restriction
/// is only a virtual character, so negative multiplicities can occur there.
Character branch(const Embedding& emb, const Weight& lambda);

struct SurjectivityScanRow {
  std::size_t index = 0;  // 0-based fundamental weight of G
  Weight restricted;
  std::int64_t top_multiplicity = 0;
  bool multiplicity_one = false;
  Character branching;
};

std::vector<SurjectivityScanRow> fundamental_weight_surjectivity_scan(const Embedding& emb);

}  // namespace frobcrit
