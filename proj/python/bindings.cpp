#include <sstream>

#include <pybind11/pybind11.h>
#include <pybind11/operators.h>
#include <pybind11/stl.h>

#include "bbflow/cli.hpp"
#include "bbflow/io.hpp"

namespace py = pybind11;
using namespace bbflow;

namespace {

using Pair = std::pair<ComponentId, ComponentId>;
using PairList = std::vector<Pair>;

InvariantSubset to_subset(const PairList &cells) {
  std::vector<Stratum> strata;
  for (auto [i, j] : cells)
    strata.push_back({i, j});
  return InvariantSubset(std::move(strata));
}

PairList to_pairs(const std::vector<Stratum> &strata) {
  PairList out;
  for (const auto &s : strata)
    out.emplace_back(s.src, s.dst);
  return out;
}

WeightFactor to_factor(const std::vector<std::pair<long long, int>> &blocks) {
  WeightFactor f;
  for (auto [w, m] : blocks)
    f.push_back({w, m});
  return f;
}

py::object json_to_py(const io::json &j) {
  return py::module_::import("json").attr("loads")(j.dump());
}

} // namespace

PYBIND11_MODULE(_bbflow, m) {
  m.doc() = "Bialynicki-Birula flow graphs, semi-sections and proper quotients";

  static py::exception<Error> error_type(m, "BBFlowError");
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p)
        std::rethrow_exception(p);
    } catch (const Error &e) {
      auto cls = py::reinterpret_borrow<py::object>(error_type.ptr());
      py::object exc = cls(std::string(to_string(e.code())) + ": " + e.what());
      exc.attr("code") = std::string(to_string(e.code()));
      PyErr_SetObject(error_type.ptr(), exc.ptr());
    }
  });

  py::class_<FlowGraph>(m, "FlowGraph")
      .def_property_readonly("k", &FlowGraph::k)
      .def_property_readonly("source", &FlowGraph::source)
      .def_property_readonly("sink", &FlowGraph::sink)
      .def_property_readonly("names", &FlowGraph::names)
      .def_property_readonly("weights", &FlowGraph::weights)
      .def_property_readonly("strata",
                             [](const FlowGraph &g) { return to_pairs(g.strata()); })
      .def_property_readonly(
          "direct", [](const FlowGraph &g) { return to_pairs(g.direct_edges()); })
      .def("less", &FlowGraph::less)
      .def("leq", &FlowGraph::leq)
      .def("closure",
           [](const FlowGraph &g, Pair s) {
             return to_pairs(g.closure({s.first, s.second}));
           })
      .def("to_json",
           [](const FlowGraph &g) { return json_to_py(io::graph_to_json(g)); })
      .def("__repr__", [](const FlowGraph &g) {
        std::ostringstream os;
        os << "<FlowGraph k=" << g.k() << " strata=" << g.stratum_count()
           << " source=" << g.source() << " sink=" << g.sink() << ">";
        return os.str();
      });

  py::class_<SemiSection>(m, "SemiSection")
      .def(py::init<std::vector<ComponentId>, std::vector<ComponentId>,
                    std::vector<ComponentId>>(),
           py::arg("minus"), py::arg("zero"), py::arg("plus"))
      .def_readonly("minus", &SemiSection::minus)
      .def_readonly("zero", &SemiSection::zero)
      .def_readonly("plus", &SemiSection::plus)
      .def(py::self == py::self)
      .def("__repr__", [](const SemiSection &t) {
        return io::semisection_to_json(t).dump();
      });

  m.def("build_graph",
        [](std::size_t k, const PairList &direct) { return build_graph(k, direct); },
        py::arg("k"), py::arg("direct"));
  m.def("graph_from_json",
        [](const std::string &text) {
          return io::graph_from_json(io::json::parse(text));
        });
  m.def("graph_from_weights",
        [](const std::vector<std::pair<long long, int>> &blocks) {
          return graph_from_weights(to_factor(blocks));
        },
        py::arg("blocks"));
  m.def("product_graph",
        [](const std::vector<std::vector<std::pair<long long, int>>> &factors) {
          LinearAction a;
          for (const auto &f : factors)
            a.factors.push_back(to_factor(f));
          return product_graph(a);
        },
        py::arg("factors"));

  m.def("transitive_less", &transitive_less);
  m.def("find_source_sink", &find_source_sink);
  m.def("validate_geometric", [](const FlowGraph &g) {
    std::vector<std::pair<std::string, std::string>> out;
    for (const auto &v : validate_geometric(g).violations)
      out.emplace_back(std::string(to_string(v.kind)), v.detail);
    return out;
  });
  m.def("is_closed_family",
        [](const FlowGraph &g, const std::set<ComponentId> &family,
           const std::string &sign) {
          return is_closed_family(g, family,
                                  sign == "plus" ? Sign::Plus : Sign::Minus);
        },
        py::arg("g"), py::arg("family"), py::arg("sign") = "minus");
  m.def("is_open_subset", [](const FlowGraph &g, const PairList &u) {
    return is_open_subset(g, to_subset(u));
  });
  m.def("is_dense_subset", [](const FlowGraph &g, const PairList &u) {
    return is_dense_subset(g, to_subset(u));
  });
  m.def("monotone_weighting_exists", &monotone_weighting_exists);

  m.def("is_semisection", &is_semisection);
  m.def("is_section", &is_section);
  m.def("enumerate_semisections", &enumerate_semisections);
  m.def("semisection_bound", &semisection_bound);
  m.def("semisectional_subset", [](const FlowGraph &g, const SemiSection &t) {
    return to_pairs(semisectional_subset(g, t).strata());
  });
  m.def("recover_semisection", [](const FlowGraph &g, const PairList &u) {
    return recover_semisection(g, to_subset(u));
  });
  m.def("covering_semisection", [](const FlowGraph &g, Pair s) {
    return covering_semisection(g, {s.first, s.second});
  });

  m.def("enumerate_maximal_chains", [](const FlowGraph &g) {
    std::vector<std::vector<ComponentId>> out;
    for (const auto &c : enumerate_maximal_chains(g))
      out.push_back(c.nodes);
    return out;
  });
  m.def("classify_chain",
        [](const FlowGraph &g, const PairList &u,
           const std::vector<ComponentId> &nodes) {
          MaximalChain c{nodes};
          return std::string(
              to_string(classify_trace(chain_trace(g, to_subset(u), c), c.length())));
        });
  m.def("check_E", [](const FlowGraph &g, const PairList &u) {
    return check_E(g, to_subset(u));
  });
  m.def("check_S", [](const FlowGraph &g, const PairList &u) {
    return check_S(g, to_subset(u));
  });
  m.def("check_Theta", [](const FlowGraph &g, const PairList &u) {
    return check_Theta(g, to_subset(u));
  });
  m.def("has_proper_quotient", [](const FlowGraph &g, const PairList &u) {
    return has_proper_quotient(g, to_subset(u));
  });
  m.def("complement_component_count", [](const FlowGraph &g, const PairList &u) {
    return complement_components(g, to_subset(u)).count();
  });
  m.def("oracle_enumerate_proper_opens",
        [](const FlowGraph &g, std::size_t budget) {
          std::vector<PairList> out;
          for (const auto &u : oracle_enumerate_proper_opens(g, budget))
            out.push_back(to_pairs(u.strata()));
          return out;
        },
        py::arg("g"), py::arg("budget") = kDefaultStratumBudget);
  m.def("chain_from_monomial_ideal",
        [](const std::vector<std::pair<int, int>> &points) {
          ExponentSet e;
          for (auto [a, b] : points)
            e.points.push_back({a, b});
          return json_to_py(io::blowup_to_json(chain_from_monomial_ideal(e)));
        });

  m.def("run_cli", [](const std::vector<std::string> &args) {
    std::ostringstream out, err;
    int code = cli::run(args, out, err);
    return py::make_tuple(code, out.str(), err.str());
  });
}
