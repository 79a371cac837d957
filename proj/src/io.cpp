#include "bbflow/io.hpp"

#include <fstream>
#include <sstream>

namespace bbflow::io {

namespace {

[[noreturn]] void bad(const std::string &what) {
  throw Error(ErrorCode::InvalidInput, what);
}

ComponentId id_from(const json &v) {
  if (!v.is_number_integer() || v.get<long long>() < 0)
    bad("component ids must be non-negative integers, got " + v.dump());
  return v.get<ComponentId>();
}

Stratum pair_from(const json &v) {
  if (!v.is_array() || v.size() != 2)
    bad("expected a pair [i,j], got " + v.dump());
  return {id_from(v[0]), id_from(v[1])};
}

Stratum key_from(const std::string &key) {
  auto comma = key.find(',');
  if (comma == std::string::npos)
    bad("stratum key must look like \"i,j\", got \"" + key + "\"");
  try {
    std::size_t used = 0;
    long long i = std::stoll(key.substr(0, comma), &used);
    long long j = std::stoll(key.substr(comma + 1));
    if (i < 0 || j < 0)
      throw std::invalid_argument("negative");
    return {static_cast<ComponentId>(i), static_cast<ComponentId>(j)};
  } catch (const std::exception &) {
    bad("stratum key must look like \"i,j\", got \"" + key + "\"");
  }
}

std::string key_of(const Stratum &s) {
  return std::to_string(s.src) + "," + std::to_string(s.dst);
}

json ids_to_json(const std::vector<ComponentId> &ids) {
  json out = json::array();
  for (ComponentId i : ids)
    out.push_back(i);
  return out;
}

std::vector<ComponentId> ids_from(const json &j, const char *field) {
  if (!j.contains(field))
    return {};
  const json &v = j.at(field);
  if (!v.is_array())
    bad(std::string("\"") + field + "\" must be a list of ids");
  std::vector<ComponentId> out;
  for (const auto &x : v)
    out.push_back(id_from(x));
  return out;
}

} // namespace

json load_json_arg(const std::string &text) {
  std::size_t first = text.find_first_not_of(" \t\r\n");
  try {
    if (first != std::string::npos && (text[first] == '{' || text[first] == '['))
      return json::parse(text);
    std::ifstream in(text);
    if (!in)
      bad("cannot open input file '" + text + "'");
    return json::parse(in);
  } catch (const json::parse_error &e) {
    bad(std::string("malformed JSON: ") + e.what());
  }
}

FlowGraph graph_from_json(const json &j) {
  if (!j.is_object())
    bad("graph must be a JSON object");
  if (!j.contains("k") || !j.at("k").is_number_integer() ||
      j.at("k").get<long long>() < 1)
    bad("graph needs an integer \"k\" >= 1");
  GraphSpec spec;
  spec.k = j.at("k").get<std::size_t>();
  if (j.contains("direct")) {
    if (!j.at("direct").is_array())
      bad("\"direct\" must be a list of pairs");
    for (const auto &e : j.at("direct")) {
      auto s = pair_from(e);
      spec.direct.emplace_back(s.src, s.dst);
    }
  }
  if (j.contains("strata")) {
    std::vector<Stratum> strata;
    for (const auto &e : j.at("strata"))
      strata.push_back(pair_from(e));
    spec.strata = std::move(strata);
  }
  if (j.contains("closure")) {
    if (!j.at("closure").is_object())
      bad("\"closure\" must map \"i,j\" keys to lists of pairs");
    std::map<Stratum, std::vector<Stratum>> closure;
    for (const auto &[key, cells] : j.at("closure").items()) {
      auto &dst = closure[key_from(key)];
      for (const auto &c : cells)
        dst.push_back(pair_from(c));
    }
    spec.closure = std::move(closure);
  }
  if (j.contains("names"))
    spec.names = j.at("names").get<std::vector<std::string>>();
  if (j.contains("dims")) {
    const json &d = j.at("dims");
    GraphDims dims;
    if (d.contains("components"))
      dims.components = d.at("components").get<std::vector<int>>();
    if (d.contains("strata"))
      for (const auto &[key, value] : d.at("strata").items())
        dims.strata[key_from(key)] = value.get<int>();
    spec.dims = std::move(dims);
  }
  if (j.contains("weights"))
    spec.weights = j.at("weights").get<std::vector<long long>>();
  if (j.contains("source"))
    spec.source = id_from(j.at("source"));
  if (j.contains("sink"))
    spec.sink = id_from(j.at("sink"));
  return build_graph(spec);
}

json strata_to_json(const std::vector<Stratum> &strata) {
  json out = json::array();
  for (const auto &s : strata)
    out.push_back({s.src, s.dst});
  return out;
}

json graph_to_json(const FlowGraph &g) {
  json out;
  out["k"] = g.k();
  out["direct"] = strata_to_json(g.direct_edges());
  out["strata"] = strata_to_json(g.strata());
  json closure = json::object();
  for (const auto &s : g.strata())
    closure[key_of(s)] = strata_to_json(g.closure(s));
  out["closure"] = closure;
  if (!g.names().empty())
    out["names"] = g.names();
  if (g.dims()) {
    json strata = json::object();
    for (const auto &[s, d] : g.dims()->strata)
      strata[key_of(s)] = d;
    out["dims"] = {{"components", g.dims()->components}, {"strata", strata}};
  }
  if (g.weights())
    out["weights"] = *g.weights();
  out["source"] = g.source();
  out["sink"] = g.sink();
  return out;
}

LinearAction action_from_json(const json &j) {
  if (!j.is_object() || !j.contains("factors") || !j.at("factors").is_array())
    bad("action must be {\"factors\": [[[w,mult],...],...]}");
  LinearAction action;
  for (const auto &f : j.at("factors")) {
    if (!f.is_array())
      bad("each factor must be a list of [weight, multiplicity] pairs");
    WeightFactor factor;
    for (const auto &b : f) {
      if (!b.is_array() || b.size() != 2 || !b[0].is_number_integer() ||
          !b[1].is_number_integer())
        bad("weight block must be [weight, multiplicity], got " + b.dump());
      factor.push_back({b[0].get<long long>(), b[1].get<int>()});
    }
    action.factors.push_back(std::move(factor));
  }
  return action;
}

json action_to_json(const LinearAction &action) {
  json factors = json::array();
  for (const auto &f : action.factors) {
    json blocks = json::array();
    for (const auto &b : f)
      blocks.push_back({b.weight, b.multiplicity});
    factors.push_back(blocks);
  }
  return {{"factors", factors}};
}

SemiSection semisection_from_json(const json &j) {
  if (!j.is_object())
    bad("semi-section must be {\"minus\":[..],\"zero\":[..],\"plus\":[..]}");
  return SemiSection(ids_from(j, "minus"), ids_from(j, "zero"),
                     ids_from(j, "plus"));
}

json semisection_to_json(const SemiSection &t) {
  return {{"minus", ids_to_json(t.minus)},
          {"zero", ids_to_json(t.zero)},
          {"plus", ids_to_json(t.plus)}};
}

InvariantSubset subset_from_json(const json &j) {
  const json *cells = &j;
  if (j.is_object()) {
    if (!j.contains("strata"))
      bad("subset object needs a \"strata\" list");
    cells = &j.at("strata");
  }
  if (!cells->is_array())
    bad("subset must be a list of [i,j] pairs");
  std::vector<Stratum> strata;
  for (const auto &c : *cells)
    strata.push_back(pair_from(c));
  return InvariantSubset(std::move(strata));
}

json subset_to_json(const InvariantSubset &u) {
  return {{"strata", strata_to_json(u.strata())}};
}

ExponentSet exponents_from_json(const json &j) {
  const json *pts = &j;
  if (j.is_object()) {
    if (!j.contains("points"))
      bad("exponent set object needs a \"points\" list");
    pts = &j.at("points");
  }
  if (!pts->is_array())
    bad("exponent set must be a list of [a,b] pairs");
  ExponentSet e;
  for (const auto &p : *pts) {
    if (!p.is_array() || p.size() != 2 || !p[0].is_number_integer() ||
        !p[1].is_number_integer())
      bad("exponent must be [a,b], got " + p.dump());
    e.points.push_back({p[0].get<int>(), p[1].get<int>()});
  }
  return e;
}

json blowup_to_json(const BlowupTree &tree) {
  json charts = json::array();
  for (const auto &n : tree.nodes) {
    json gens = json::array();
    for (const auto &p : n.generators)
      gens.push_back({p.a, p.b});
    charts.push_back({{"path", n.path},
                      {"level", n.depth()},
                      {"generators", gens},
                      {"stripped", {n.stripped.a, n.stripped.b}},
                      {"weights", {n.weights.w, n.weights.v}},
                      {"principal", n.principal}});
  }
  return {{"guard_exponent", tree.guard_exponent},
          {"depth", tree.depth},
          {"charts", charts}};
}

json chain_to_json(const MaximalChain &chain) {
  return {{"nodes", ids_to_json(chain.nodes)}};
}

json trace_to_json(const ChainTrace &trace) {
  json edges = json::array(), nodes = json::array();
  for (auto t : trace.edges_in)
    edges.push_back(t);
  for (auto t : trace.nodes_in)
    nodes.push_back(t);
  return {{"edges", edges}, {"nodes", nodes}};
}

json verify_report(const FlowGraph &g, const InvariantSubset &u) {
  const bool theta = check_Theta(g, u);
  const bool s = check_S(g, u);
  const bool e = check_E(g, u);
  auto recovered = recover_semisection(g, u);
  return {{"subset", strata_to_json(u.strata())},
          {"theta", theta},
          {"s", s},
          {"e", e},
          {"proper", theta && s && e},
          {"complement_components", complement_components(g, u).count()},
          {"semisection",
           recovered ? semisection_to_json(*recovered) : json(nullptr)}};
}

} // namespace bbflow::io
