#include "frobcrit/json_io.hpp"

#include <algorithm>

#include "frobcrit/error.hpp"

namespace frobcrit {

namespace {

const json& require(const json& j, const char* key, const char* where) {
  if (!j.is_object() || !j.contains(key))
    throw Error(std::string(where) + ": missing field '" + key + "'");
  return j.at(key);
}

std::int64_t integer_field(const json& j, const char* key) {
  if (!j.is_number_integer())
    throw Error(std::string("field '") + key + "' must be an integer, got " + j.dump());
  return j.get<std::int64_t>();
}

std::string string_field(const json& j, const char* key) {
  if (!j.is_string())
    throw Error(std::string("field '") + key + "' must be a string, got " + j.dump());
  return j.get<std::string>();
}

int small_int(const json& params, const char* key, const char* builder) {
  auto v = integer_field(require(params, key, builder), key);
  if (v < -1'000'000 || v > 1'000'000) throw Error(std::string(builder) + ": '" + key + "' out of range");
  return static_cast<int>(v);
}

RootSystem system_field(const json& params, const char* key, const char* builder) {
  return RootSystem::from_spec(string_field(require(params, key, builder), key));
}

}  // namespace

json rational_to_json(const Rational& q) { return to_string(q); }

Rational rational_from_json(const json& j) {
  if (j.is_number_integer()) return Rational(j.get<std::int64_t>());
  if (j.is_string()) return parse_rational(j.get<std::string>());
  throw Error("expected an integer or a rational string, got " + j.dump());
}

json weight_to_json(const Weight& w) {
  json out = json::array();
  for (const auto& q : w.coords()) out.push_back(rational_to_json(q));
  return out;
}

Weight weight_from_json(const json& j) {
  if (!j.is_array()) throw Error("a weight must be a JSON array, got " + j.dump());
  RatVec coords;
  for (const auto& x : j) coords.push_back(rational_from_json(x));
  return Weight(std::move(coords));
}

Weight parse_weight_text(std::string_view text) {
  auto first = text.find_first_not_of(" \t\n");
  if (first != std::string_view::npos && text[first] == '[') {
    json j;
    try {
      j = json::parse(text);
    } catch (const json::exception& e) {
      throw Error(std::string("malformed weight: ") + e.what());
    }
    return weight_from_json(j);
  }
  RatVec coords;
  std::size_t start = 0;
  while (start <= text.size()) {
    auto end = text.find(',', start);
    if (end == std::string_view::npos) end = text.size();
    auto piece = text.substr(start, end - start);
    while (!piece.empty() && piece.front() == ' ') piece.remove_prefix(1);
    while (!piece.empty() && piece.back() == ' ') piece.remove_suffix(1);
    coords.push_back(parse_rational(piece));
    start = end + 1;
  }
  return Weight(std::move(coords));
}

json index_set_to_json(const IndexSet& J) {
  json out = json::array();
  for (int i : J) out.push_back(i + 1);
  return out;
}

IndexSet index_set_from_json(const json& j) {
  if (!j.is_array()) throw Error("J must be an array of 1-based indices, got " + j.dump());
  IndexSet J;
  for (const auto& x : j) {
    auto v = integer_field(x, "J");
    if (v < 1 || v > 1'000'000) throw Error("J index " + std::to_string(v) + " out of range");
    J.push_back(static_cast<int>(v - 1));
  }
  return J;
}

json word_to_json(const Word& w) {
  json out = json::array();
  for (int i : w) out.push_back(i + 1);
  return out;
}

Embedding embedding_from_json(const json& j) {
  if (!j.is_object()) throw Error("embedding must be a JSON object, got " + j.dump());
  if (j.contains("custom")) {
    const auto& c = j.at("custom");
    auto g = system_field(c, "g", "custom");
    auto h = system_field(c, "h", "custom");
    const auto& m = require(c, "matrix", "custom");
    if (!m.is_array()) throw Error("custom: matrix must be an array of rows");
    RatMatrix matrix;
    for (const auto& row : m) {
      if (!row.is_array()) throw Error("custom: matrix rows must be arrays");
      RatVec r;
      for (const auto& x : row) r.push_back(rational_from_json(x));
      matrix.push_back(std::move(r));
    }
    return custom_embedding(g, h, std::move(matrix));
  }
  const auto name = string_field(require(j, "builder", "embedding"), "builder");
  const json params = j.contains("params") ? j.at("params") : json::object();
  const char* b = name.c_str();
  if (name == "levi") return levi(system_field(params, "g", b), index_set_from_json(require(params, "J", b)));
  if (name == "diagonal") return diagonal(system_field(params, "h", b), small_int(params, "k", b));
  if (name == "identity") return identity_embedding(system_field(params, "g", b));
  if (name == "folding_AC") return folding_AC(small_int(params, "m", b));
  if (name == "folding_DB") return folding_DB(small_int(params, "n", b));
  if (name == "folding_E6F4") return folding_E6F4();
  if (name == "folding_B3G2") return folding_B3G2();
  if (name == "so_in_sl") return so_in_sl(small_int(params, "n", b));
  if (name == "frobenius_twisted_diagonal")
    return frobenius_twisted_diagonal(system_field(params, "h", b), small_int(params, "p", b));
  throw Error("unknown builder '" + name + "'");
}

json embedding_to_json(const Embedding& emb) {
  if (emb.builder() == "custom") {
    json matrix = json::array();
    for (const auto& row : emb.restriction()) {
      json r = json::array();
      for (const auto& q : row) r.push_back(rational_to_json(q));
      matrix.push_back(r);
    }
    return {{"custom", {{"g", emb.g().spec()}, {"h", emb.h().spec()}, {"matrix", matrix}}}};
  }
  const auto& p = emb.params();
  json params = json::object();
  std::string builder = emb.builder();
  if (builder == "diagonal" && p.k && *p.k == 1) {
    builder = "identity";
    params["g"] = *p.h;
  } else {
    if (p.g) params["g"] = *p.g;
    if (p.h) params["h"] = *p.h;
    if (p.J) params["J"] = index_set_to_json(*p.J);
    if (p.k) params["k"] = *p.k;
    if (p.m) params["m"] = *p.m;
    if (p.n) params["n"] = *p.n;
    if (p.p) params["p"] = *p.p;
  }
  return {{"builder", builder}, {"params", params}};
}

ParsedInput input_from_json(const json& j) {
  if (!j.is_object()) throw Error("input must be a JSON object");
  // G, H and embedding_label are echoed by reports and ignored on input.
  static const std::vector<std::string> known{"name",  "embedding", "J", "p",
                                              "surjectivity_source", "lie_separability",
                                              "label_limit", "expect", "G", "H",
                                              "embedding_label"};
  for (const auto& [key, _] : j.items())
    if (std::find(known.begin(), known.end(), key) == known.end())
      throw Error("unknown input field '" + key + "'");

  ParsedInput out{CriterionInput{embedding_from_json(require(j, "embedding", "input"))}, {}, {}};
  auto& in = out.input;
  if (j.contains("name")) out.name = string_field(j.at("name"), "name");
  in.J = j.contains("J") ? index_set_from_json(j.at("J")) : in.embedding.g().all_indices();
  in.p = integer_field(require(j, "p", "input"), "p");
  if (j.contains("surjectivity_source"))
    in.surjectivity_source =
        parse_surjectivity_source(string_field(j.at("surjectivity_source"), "surjectivity_source"));
  if (j.contains("lie_separability") && !j.at("lie_separability").is_null())
    in.lie_separability =
        parse_tristate(string_field(j.at("lie_separability"), "lie_separability"));
  if (j.contains("label_limit")) {
    auto v = integer_field(j.at("label_limit"), "label_limit");
    if (v < 0) throw Error("label_limit must be nonnegative");
    in.label_limit = static_cast<std::size_t>(v);
  }
  if (j.contains("expect")) {
    const auto& e = j.at("expect");
    if (!e.is_object()) throw Error("expect must be an object");
    Expectation x;
    for (const auto& [key, v] : e.items()) {
      if (key == "dominance") x.dominance = v.get<bool>();
      else if (key == "regular") x.regular = v.get<bool>();
      else if (key == "conclusions_empty") x.conclusions_empty = v.get<bool>();
      else if (key == "tags_present") x.tags_present = v.get<std::vector<std::string>>();
      else if (key == "tags_absent") x.tags_absent = v.get<std::vector<std::string>>();
      else if (key == "lie_separability") x.lie_separability = parse_tristate(v.get<std::string>());
      else throw Error("unknown expectation field '" + key + "'");
    }
    out.expected = x;
  }
  return out;
}

json input_to_json(const CriterionInput& in) {
  json out = {
      {"embedding", embedding_to_json(in.embedding)},
      {"embedding_label", in.embedding.label()},
      {"G", in.embedding.g().spec()},
      {"H", in.embedding.h().spec()},
      {"J", index_set_to_json(in.J)},
      {"p", in.p},
      {"surjectivity_source", to_string(in.surjectivity_source)},
      {"label_limit", in.label_limit},
  };
  out["lie_separability"] =
      in.lie_separability ? json(to_string(*in.lie_separability)) : json(nullptr);
  return out;
}

json expectation_to_json(const Expectation& e) {
  json out = json::object();
  if (e.dominance) out["dominance"] = *e.dominance;
  if (e.regular) out["regular"] = *e.regular;
  if (e.conclusions_empty) out["conclusions_empty"] = *e.conclusions_empty;
  if (!e.tags_present.empty()) out["tags_present"] = e.tags_present;
  if (!e.tags_absent.empty()) out["tags_absent"] = e.tags_absent;
  if (e.lie_separability) out["lie_separability"] = to_string(*e.lie_separability);
  return out;
}

json report_to_json(const CriterionReport& r) {
  json conclusions = json::array();
  for (const auto& c : r.conclusions) {
    json labels = json::array();
    for (const auto& w : c.orbit_labels) labels.push_back(word_to_json(w));
    conclusions.push_back({
        {"tag", c.tag},
        {"statement", c.statement},
        {"theorem", c.theorem},
        {"hypotheses", c.hypotheses},
        {"conditional_on", c.conditional_on},
        {"orbit_labels", labels},
        {"orbit_count", c.orbit_count},
        {"labels_truncated", c.labels_truncated},
    });
  }
  json out = {
      {"input", input_to_json(r.input)},
      {"hypotheses",
       {
           {"dominance_2rhoH_minus_rhoJ", r.dominance},
           {"regular", r.regular},
           {"canonical_dominance", r.canonical_dominance},
           {"surjectivity",
            {{"status", to_string(r.surjectivity.status)},
             {"source", r.surjectivity.source},
             {"reason", r.surjectivity.reason}}},
           {"lie_separability",
            {{"status", to_string(r.lie_separability)}, {"reason", r.lie_reason}}},
           {"twist_detected", r.twist_detected},
       }},
      {"weights",
       {
           {"rho_H", weight_to_json(rho_h(r.input.embedding))},
           {"restricted_rho_J", weight_to_json(r.restricted_rho_J)},
           {"test_weight", weight_to_json(r.test_weight)},
       }},
      {"lemma53_min_p", r.lemma53_min_p},
      {"conclusions", conclusions},
  };
  if (r.divisor)
    out["divisor"] = {{"weight", weight_to_json(r.divisor->weight)},
                      {"multiplicity", r.divisor->multiplicity},
                      {"J", index_set_to_json(r.divisor->J)}};
  else
    out["divisor"] = nullptr;
  return out;
}

}  // namespace frobcrit
