// JSON strings cross the boundary; python/frobcrit/__init__.py decodes them.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "frobcrit/charalg.hpp"
#include "frobcrit/cli.hpp"
#include "frobcrit/error.hpp"

namespace py = pybind11;
using namespace frobcrit;

namespace {

json parse(const std::string& text) { return json::parse(text); }

IndexSet zero_based(const std::vector<int>& one_based) { return index_set_from_json(json(one_based)); }

json character_json(const RootSystem& rs, const Character& ch) {
  json rows = json::array();
  for (const auto& [nu, m] : ch)
    rows.push_back({{"highest_weight", weight_to_json(Weight(nu))},
                    {"multiplicity", m},
                    {"dimension", weyl_dimension(rs, Weight(nu))}});
  return rows;
}

}  // namespace

PYBIND11_MODULE(_frobcrit, m) {
  m.doc() = "Frobenius splitting criteria for subgroup pairs (C++ core)";

  py::register_exception<Error>(m, "FrobcritError", PyExc_ValueError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const json::exception& e) {
      PyErr_SetString(PyExc_ValueError, e.what());
    }
  });

  m.def("check", [](const std::string& input) {
    auto parsed = input_from_json(parse(input));
    return report_to_json(check_main(parsed.input)).dump();
  }, py::arg("input_json"));

  m.def("run_example", [](const std::string& name, std::int64_t p) {
    auto [doc, matched] = run_example(name, p);
    return std::make_pair(doc.dump(), matched);
  }, py::arg("name"), py::arg("p") = 3);

  m.def("example_names", [] {
    std::vector<std::string> out;
    for (const auto& [name, desc] : example_catalog()) out.push_back(name);
    return out;
  });

  m.def("lemma53_min_p", [](const std::string& emb) {
    return lemma53_min_p(embedding_from_json(parse(emb)));
  }, py::arg("embedding_json"));

  m.def("validate", [](const std::string& emb) {
    return validate(embedding_from_json(parse(emb)));
  }, py::arg("embedding_json"));

  m.def("restrict", [](const std::string& emb, const std::string& weight) {
    return weight_to_json(restrict(embedding_from_json(parse(emb)), weight_from_json(parse(weight)))).dump();
  }, py::arg("embedding_json"), py::arg("weight_json"));

  m.def("branch", [](const std::string& emb, const std::string& weight) {
    auto e = embedding_from_json(parse(emb));
    return character_json(e.h(), branch(e, weight_from_json(parse(weight)))).dump();
  }, py::arg("embedding_json"), py::arg("weight_json"));

  m.def("character", [](const std::string& spec, const std::string& weight) {
    auto rs = RootSystem::from_spec(spec);
    auto ch = freudenthal(rs, weight_from_json(parse(weight)));
    json rows = json::array();
    for (const auto& [mu, mult] : ch.multiplicities)
      rows.push_back({{"weight", weight_to_json(Weight(mu))}, {"multiplicity", mult}});
    return json{{"dimension", ch.dimension}, {"dominant_weights", rows}}.dump();
  }, py::arg("spec"), py::arg("weight_json"));

  m.def("weyl_order", [](const std::string& spec) { return RootSystem::from_spec(spec).weyl_order(); },
        py::arg("spec"));

  m.def("num_positive_roots", [](const std::string& spec) {
    return RootSystem::from_spec(spec).num_positive_roots();
  }, py::arg("spec"));

  m.def("conjugated_borel_check", [](const std::string& emb, const std::vector<int>& word,
                                     const std::vector<int>& J) {
    auto e = embedding_from_json(parse(emb));
    Word w;
    for (int i : word) {
      if (i < 1 || static_cast<std::size_t>(i) > e.g().rank()) throw Error("word letter out of range");
      w.push_back(i - 1);
    }
    auto r = conjugated_borel_detail(e, WeylElement::from_word(e.g(), w), zero_based(J));
    return json{{"dominant", r.dominant}, {"regular", r.regular}, {"test_weight", weight_to_json(r.test_weight)}}
        .dump();
  }, py::arg("embedding_json"), py::arg("word"), py::arg("J"));

  m.def("verify_identities", [](int max_rank) { return verify_identities(max_rank).dump(); },
        py::arg("max_rank") = 4);

  m.def("run_cli", [](const std::vector<std::string>& args, const std::string& stdin_text) {
    std::istringstream in(stdin_text);
    std::ostringstream out, err;
    int code = run_cli(args, in, out, err);
    return py::make_tuple(code, out.str(), err.str());
  }, py::arg("args"), py::arg("stdin") = "");
}
