#include "frobcrit/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <array>
#include <charconv>
#include <map>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "frobcrit/charalg.hpp"
#include "frobcrit/error.hpp"

namespace frobcrit {

namespace {

json parse_json_text(const std::string& text, const std::string& where) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error("malformed JSON in " + where + " at byte " + std::to_string(e.byte) + ": " +
                e.what());
  }
}

std::string read_source(const std::string& path, std::istream& in) {
  std::ostringstream buf;
  if (path == "-") {
    buf << in.rdbuf();
    return buf.str();
  }
  std::ifstream f(path);
  if (!f) throw Error("cannot open '" + path + "'");
  buf << f.rdbuf();
  return buf.str();
}

/// Inline JSON when the argument looks like an object, else a path.
json json_argument(const std::string& arg, std::istream& in) {
  auto first = arg.find_first_not_of(" \t\n");
  if (first != std::string::npos && arg[first] == '{') return parse_json_text(arg, "argument");
  return parse_json_text(read_source(arg, in), arg);
}

json case_json(const ExampleCase& c, bool& matched) {
  auto report = check_main(c.input);
  auto mismatches = check_expectation(report, c.expected);
  matched = matched && mismatches.empty();
  return {{"name", c.name},
          {"report", report_to_json(report)},
          {"expected", expectation_to_json(c.expected)},
          {"mismatches", mismatches}};
}

json cases_json(const std::string& name, const std::vector<ExampleCase>& cases, bool& matched) {
  json arr = json::array();
  for (const auto& c : cases) arr.push_back(case_json(c, matched));
  return {{"example", name}, {"cases", arr}};
}

struct Sp4Run {
  json doc;
  bool matched = true;
  std::array<bool, 4> dominant{};
};

Sp4Run run_sp4() {
  Sp4Run run;
  const auto ex = example_sp4();
  const auto& emb = ex.embedding;
  const auto I = emb.g().all_indices();

  json borels = json::array();
  for (std::size_t i = 0; i < 4; ++i) {
    auto d = conjugated_borel_detail(emb, ex.conjugators[i], I);
    run.dominant[i] = d.dominant;
    run.matched = run.matched && d.dominant == ex.expected[i];
    borels.push_back({{"borel", "B" + std::to_string(i + 1)},
                      {"x", word_to_json(ex.conjugators[i].word())},
                      {"closed_orbit", ex.closed_orbits[i]},
                      {"test_weight", weight_to_json(d.test_weight)},
                      {"dominant", d.dominant},
                      {"regular", d.regular},
                      {"expected", ex.expected[i]},
                      {"compatibly_split", ex.compatible_chains[i]}});
  }
  json claims = json::array();
  for (const auto& c : ex.pair_claims) {
    auto d = conjugated_borel_detail(emb, ex.conjugators[c.borel], c.J);
    bool ok = d.dominant && d.regular == c.expect_regular;
    run.matched = run.matched && ok;
    claims.push_back({{"ambient", c.ambient},
                      {"split", c.split},
                      {"borel", "B" + std::to_string(c.borel + 1)},
                      {"J", index_set_to_json(c.J)},
                      {"test_weight", weight_to_json(d.test_weight)},
                      {"dominant", d.dominant},
                      {"regular", d.regular},
                      {"expected_regular", c.expect_regular}});
  }
  json edges = json::array();
  for (const auto& [u, l, m] : ex.diagram.edges)
    edges.push_back({{"upper", u}, {"lower", l}, {"multiplicity", m}});
  run.doc = {{"example", "sp4"},
             {"embedding", embedding_to_json(emb)},
             {"embedding_label", emb.label()},
             {"borels", borels},
             {"pair_claims", claims},
             {"diagram", {{"nodes", ex.diagram.nodes}, {"edges", edges}}},
             {"unknown", ex.unknown},
             {"verdicts", json(std::vector<bool>(run.dominant.begin(), run.dominant.end()))}};
  return run;
}

std::int64_t parse_suffix_int(const std::string& text, const std::string& name) {
  std::int64_t v = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc() || ptr != text.data() + text.size())
    throw Error("bad parameter '" + text + "' in example name '" + name + "'");
  return v;
}

std::string text_summary(const json& doc) {
  std::ostringstream os;
  if (doc.contains("cases")) {
    for (const auto& c : doc["cases"]) {
      const auto& r = c["report"];
      os << c["name"].get<std::string>()
         << ": dominance=" << r["hypotheses"]["dominance_2rhoH_minus_rhoJ"].dump()
         << " regular=" << r["hypotheses"]["regular"].dump()
         << " surjectivity=" << r["hypotheses"]["surjectivity"]["status"].get<std::string>()
         << " lemma53_min_p=" << r["lemma53_min_p"].dump() << " tags=";
      std::string tags;
      for (const auto& k : r["conclusions"]) tags += (tags.empty() ? "" : ",") + k["tag"].get<std::string>();
      os << (tags.empty() ? "-" : tags);
      os << (c["mismatches"].empty() ? "" : " MISMATCH") << "\n";
    }
  } else if (doc.contains("borels")) {
    for (const auto& b : doc["borels"])
      os << b["borel"].get<std::string>() << " (" << b["closed_orbit"].get<std::string>()
         << "): dominant=" << b["dominant"].dump() << " expected=" << b["expected"].dump()
         << "\n";
    for (const auto& c : doc["pair_claims"])
      os << "(" << c["ambient"].get<std::string>() << "," << c["split"].get<std::string>()
         << ") via " << c["borel"].get<std::string>() << ": dominant=" << c["dominant"].dump()
         << " regular=" << c["regular"].dump() << "\n";
  } else {
    os << doc.dump(2) << "\n";
  }
  return os.str();
}

}  // namespace

std::vector<std::pair<std::string, std::string>> example_catalog() {
  return {
      {"minimal-rank", "identity, diagonal and folding pairs with J = I"},
      {"sp4", "Levi subgroup of Sp4 and four conjugated Borel subgroups"},
      {"sln-son:<n>", "SO_n in SL_n with J = I minus the middle node(s)"},
      {"triple-diagonal:<type><rank>", "H diagonally in H x H x H, J = I"},
      {"frobenius-twist[:p]", "{(g, F(g))} in SL2 x SL2 with P_J = SL2 x B"},
  };
}

std::pair<json, bool> run_example(const std::string& name, std::int64_t p) {
  bool matched = true;
  if (name == "minimal-rank")
    return {cases_json(name, minimal_rank_suite(p), matched), matched};
  if (name == "sp4") {
    auto run = run_sp4();
    return {run.doc, run.matched};
  }
  const auto colon = name.find(':');
  const std::string head = name.substr(0, colon);
  const std::string arg = colon == std::string::npos ? "" : name.substr(colon + 1);
  if (head == "sln-son" && !arg.empty()) {
    auto n = parse_suffix_int(arg, name);
    if (n < 3 || n > 64) throw Error("sln-son: n must be between 3 and 64");
    return {cases_json(name, example_sln_son(static_cast<int>(n), p), matched), matched};
  }
  if (head == "triple-diagonal" && !arg.empty()) {
    auto c = example_triple_diagonal(RootSystem::from_spec(arg), p);
    return {cases_json(name, {c}, matched), matched};
  }
  if (head == "frobenius-twist") {
    auto q = arg.empty() ? p : parse_suffix_int(arg, name);
    return {cases_json(name, {example_frobenius_twist(q)}, matched), matched};
  }
  throw Error("unknown example '" + name + "' (see `examples list`)");
}

std::string sp4_dot() {
  auto run = run_sp4();
  const auto ex = example_sp4();
  std::map<std::string, std::string> note;
  for (std::size_t i = 0; i < 4; ++i) {
    const bool dom = run.dominant[i];
    note[ex.closed_orbits[i]] = "B" + std::to_string(i + 1) + (dom ? " dominant" : " not dominant");
    for (const auto& x : ex.compatible_chains[i])
      if (x != ex.closed_orbits[i] && dom) note[x] = "split with B" + std::to_string(i + 1);
  }
  for (const auto& c : ex.pair_claims) {
    auto& n = note[c.ambient];
    if (n.find("F-regular") != std::string::npos) continue;
    if (c.expect_regular) n = "split, F-regular";
    else if (n.empty()) n = "split along ample";
  }
  for (const auto& u : ex.unknown) note[u] = "unknown";

  std::ostringstream os;
  os << "graph sp4_orbits {\n  rankdir=TB;\n  node [shape=box];\n";
  for (const auto& node : ex.diagram.nodes) {
    os << "  " << node << " [label=\"" << node;
    if (auto it = note.find(node); it != note.end() && !it->second.empty())
      os << "\\n" << it->second;
    os << "\"";
    if (note[node] == "unknown") os << ", style=dashed";
    os << "];\n";
  }
  for (const auto& [u, l, m] : ex.diagram.edges) {
    os << "  " << u << " -- " << l;
    if (m == 2) os << " [color=\"black:black\"]";
    os << ";\n";
  }
  os << "}\n";
  return os.str();
}

json verify_identities(int max_rank) {
  std::vector<Component> systems;
  for (int n = 1; n <= max_rank; ++n) {
    systems.push_back({'A', n});
    if (n >= 2) systems.push_back({'B', n});
    if (n >= 3) systems.push_back({'C', n});
    if (n >= 4) systems.push_back({'D', n});
    if (n >= 6 && n <= 8) systems.push_back({'E', n});
  }
  for (Component extra : {Component{'G', 2}, Component{'F', 4}, Component{'E', 6}})
    if (std::find(systems.begin(), systems.end(), extra) == systems.end()) systems.push_back(extra);

  json rows = json::array();
  std::uint64_t checked = 0, failed = 0;
  for (const auto& c : systems) {
    auto rs = RootSystem::from_components({c});
    json failures = json::array();
    const std::size_t n = rs.rank();
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
      IndexSet J;
      for (std::size_t i = 0; i < n; ++i)
        if (mask >> i & 1) J.push_back(static_cast<int>(i));
      auto d = verify_st_decomp(rs, J);
      ++checked;
      if (!d.equal) {
        ++failed;
        failures.push_back({{"J", index_set_to_json(J)},
                            {"lhs", weight_to_json(d.lhs)},
                            {"rhs", weight_to_json(d.rhs)}});
      }
    }
    rows.push_back({{"system", rs.spec()},
                    {"subsets", std::uint64_t{1} << n},
                    {"failures", failures}});
  }
  return {{"identity", "sum of R_J^+ = rho_J - w_0^J rho_J"},
          {"max_rank", max_rank},
          {"checked", checked},
          {"failed", failed},
          {"systems", rows}};
}

int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"Check Frobenius splitting criteria for subgroup pairs H in G", "frobcrit"};
  app.require_subcommand(1);
  app.fallthrough();  // global options may follow the subcommand
  std::string format = "json";
  app.add_option("--format", format, "Output format")
      ->check(CLI::IsMember({"json", "dot", "text"}));
  std::uint64_t cap = 0;
  bool allow_large_cap = false;
  app.add_option("--enum-cap", cap, "Cap on |W_J| for full Weyl group enumeration");
  app.add_flag("--allow-large-cap", allow_large_cap, "Permit --enum-cap above the default");

  auto* check = app.add_subcommand("check", "Evaluate the criteria for a JSON input");
  std::string check_path;
  check->add_option("input", check_path, "Input file, or - for standard input")->required();

  auto* examples = app.add_subcommand("examples", "Worked examples");
  examples->require_subcommand(1);
  auto* ex_list = examples->add_subcommand("list", "List example names");
  auto* ex_run = examples->add_subcommand("run", "Run one example");
  std::string ex_name;
  std::int64_t ex_p = 3;
  ex_run->add_option("name", ex_name, "Example name")->required();
  ex_run->add_option("-p,--prime", ex_p, "Characteristic");

  auto* verify = app.add_subcommand("verify-identities", "Check sum R_J^+ = rho_J - w_0^J rho_J");
  int max_rank = 6;
  verify->add_option("--max-rank", max_rank, "Largest classical rank")->check(CLI::Range(1, 8));

  auto* minp = app.add_subcommand("min-p", "Smallest p certified by the large-p bound");
  std::string minp_arg;
  minp->add_option("embedding", minp_arg, "Embedding JSON (inline or file)")->required();

  auto* br = app.add_subcommand("branch", "Decompose a G-module into H-modules (char 0)");
  std::string br_emb, br_weight;
  br->add_option("embedding", br_emb, "Embedding JSON (inline or file)")->required();
  br->add_option("weight", br_weight, "Highest weight, e.g. 1,0 or [1,0]")->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return exit_code::kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return exit_code::kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return exit_code::kInputError;
  }

  auto emit = [&](const json& doc) {
    if (format == "text") out << text_summary(doc);
    else out << doc.dump(2) << "\n";
  };

  try {
    if (cap != 0) {
      if (cap > default_enum_cap() && !allow_large_cap)
        throw Error("--enum-cap above the default requires --allow-large-cap");
      ::setenv("FROBCRIT_ENUM_CAP", std::to_string(cap).c_str(), 1);
    }
    if (format == "dot" && !(ex_run->parsed() && ex_name == "sp4"))
      throw Error("--format dot is only available for `examples run sp4`");

    if (check->parsed()) {
      auto doc = parse_json_text(read_source(check_path, in), check_path);
      auto parsed = input_from_json(doc);
      auto report = check_main(parsed.input);
      json j = report_to_json(report);
      int code = exit_code::kOk;
      if (parsed.expected) {
        auto mismatches = check_expectation(report, *parsed.expected);
        j["expectation"] = {{"expected", expectation_to_json(*parsed.expected)},
                            {"mismatches", mismatches},
                            {"matched", mismatches.empty()}};
        if (!mismatches.empty()) code = exit_code::kMismatch;
      }
      if (format == "text") {
        out << "dominance=" << j["hypotheses"]["dominance_2rhoH_minus_rhoJ"].dump()
            << " regular=" << j["hypotheses"]["regular"].dump()
            << " surjectivity=" << to_string(report.surjectivity.status)
            << " lie=" << to_string(report.lie_separability)
            << " lemma53_min_p=" << report.lemma53_min_p << "\n";
        for (const auto& c : report.conclusions) out << c.tag << " [" << c.theorem << "] " << c.statement << "\n";
      } else {
        out << j.dump(2) << "\n";
      }
      return code;
    }
    if (ex_list->parsed()) {
      json doc = json::array();
      for (const auto& [n, d] : example_catalog()) doc.push_back({{"name", n}, {"description", d}});
      if (format == "text")
        for (const auto& [n, d] : example_catalog()) out << n << "  " << d << "\n";
      else
        out << doc.dump(2) << "\n";
      return exit_code::kOk;
    }
    if (ex_run->parsed()) {
      if (format == "dot") {
        auto run = run_sp4();
        out << sp4_dot();
        return run.matched ? exit_code::kOk : exit_code::kMismatch;
      }
      auto [doc, matched] = run_example(ex_name, ex_p);
      doc["matched"] = matched;
      emit(doc);
      return matched ? exit_code::kOk : exit_code::kMismatch;
    }
    if (verify->parsed()) {
      auto doc = verify_identities(max_rank);
      emit(doc);
      return doc["failed"].get<std::uint64_t>() == 0 ? exit_code::kOk : exit_code::kMismatch;
    }
    if (minp->parsed()) {
      auto emb = embedding_from_json(json_argument(minp_arg, in));
      json doc = {{"embedding", embedding_to_json(emb)},
                  {"embedding_label", emb.label()},
                  {"lemma53_min_p", lemma53_min_p(emb)}};
      emit(doc);
      return exit_code::kOk;
    }
    if (br->parsed()) {
      auto emb = embedding_from_json(json_argument(br_emb, in));
      auto lambda = parse_weight_text(br_weight);
      emb.g().check_rank(lambda, "branch");
      auto pieces = branch(emb, lambda);
      json rows = json::array();
      std::int64_t total = 0;
      bool is_virtual = false;
      for (const auto& [nu, m] : pieces) {
        auto d = weyl_dimension(emb.h(), Weight(nu));
        total += m * static_cast<std::int64_t>(d);
        is_virtual = is_virtual || m < 0;
        rows.push_back({{"highest_weight", weight_to_json(Weight(nu))},
                        {"multiplicity", m},
                        {"dimension", d}});
      }
      json doc = {{"embedding", embedding_to_json(emb)},
                  {"weight", weight_to_json(lambda)},
                  {"restricted", weight_to_json(restrict(emb, lambda))},
                  {"dimension", weyl_dimension(emb.g(), lambda)},
                  {"branching_dimension", total},
                  {"virtual", is_virtual},
                  {"branching", rows}};
      emit(doc);
      return exit_code::kOk;
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return exit_code::kInputError;
  } catch (const json::exception& e) {
    err << "error: " << e.what() << "\n";
    return exit_code::kInputError;
  }
  return exit_code::kInputError;
}

}  // namespace frobcrit
