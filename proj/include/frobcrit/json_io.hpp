#pragma once

// JSON boundary. Indices (J, words, simple roots) are 1-based here and
// 0-based everywhere else. Rationals are strings "a" or "a/b".

#include <json.hpp>

#include <optional>

#include "frobcrit/criteria.hpp"
#include "frobcrit/registry.hpp"

namespace frobcrit {

using json = nlohmann::json;

json rational_to_json(const Rational& q);
Rational rational_from_json(const json& j);

json weight_to_json(const Weight& w);
Weight weight_from_json(const json& j);

/// Accepts a JSON array or a comma separated list such as "1,0,1/2".
Weight parse_weight_text(std::string_view text);

json index_set_to_json(const IndexSet& J);
IndexSet index_set_from_json(const json& j);

json word_to_json(const Word& w);

/// {"builder": name, "params": {...}} or {"custom": {"g", "h", "matrix"}}.
Embedding embedding_from_json(const json& j);
json embedding_to_json(const Embedding& emb);

struct ParsedInput {
  CriterionInput input;
  std::optional<Expectation> expected;
  std::string name;
};

/// Fields: embedding, J, p, surjectivity_source, lie_separability,
/// label_limit, and optionally name and expect.
ParsedInput input_from_json(const json& j);
json input_to_json(const CriterionInput& in);
json expectation_to_json(const Expectation& e);

json report_to_json(const CriterionReport& r);

}  // namespace frobcrit
