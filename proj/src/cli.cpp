#include "bbflow/cli.hpp"

#include <ostream>
#include <sstream>

#include "CLI11.hpp"

#include "bbflow/io.hpp"

namespace bbflow::cli {

namespace {

using io::json;

struct Options {
  std::string graph;
  std::string weights;
  std::string subset;
  std::string semisection;
  std::string ideal;
  std::string format = "json";
  std::size_t budget = kDefaultStratumBudget;
  bool unsafe_budget = false;
};

class UsageError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

FlowGraph load_graph(const Options &o) {
  if (!o.graph.empty() && !o.weights.empty())
    throw UsageError("give either --graph or --weights, not both");
  if (!o.graph.empty())
    return io::graph_from_json(io::load_json_arg(o.graph));
  if (!o.weights.empty())
    return graph_from_action(io::action_from_json(io::load_json_arg(o.weights)));
  throw UsageError("an input graph is required (--graph or --weights)");
}

std::string ids(const json &list) {
  std::string s = "{";
  for (std::size_t t = 0; t < list.size(); ++t)
    s += (t ? "," : "") + list[t].dump();
  return s + "}";
}

std::string triple(const json &t) {
  if (t.is_null())
    return "-";
  return "(" + ids(t["minus"]) + ", " + ids(t["zero"]) + ", " + ids(t["plus"]) +
         ")";
}

std::string cells(const json &list) {
  std::string s;
  for (const auto &c : list)
    s += (s.empty() ? "" : " ") + std::string("(") + c[0].dump() + "," +
         c[1].dump() + ")";
  return s.empty() ? "(none)" : s;
}

void render_table(const std::string &cmd, const json &r, std::ostream &out) {
  if (cmd == "validate") {
    out << "source " << r["source"] << "  sink " << r["sink"] << "  "
        << (r["valid"].get<bool>() ? "valid" : "INVALID") << "\n";
    for (const auto &v : r["violations"])
      out << "  " << v["kind"].get<std::string>() << ": "
          << v["detail"].get<std::string>() << "\n";
  } else if (cmd == "enumerate") {
    out << "k=" << r["k"] << "  semi-sections=" << r["count"]
        << "  sections=" << r["sections"] << "  bound=" << r["bound"]
        << (r["sharp"].get<bool>() ? "  (sharp)" : "") << "\n";
    out << "  #   A-            A0            A+\n";
    std::size_t n = 0;
    for (const auto &t : r["semisections"]) {
      std::ostringstream line;
      line << "  " << n++ << "   " << ids(t["minus"]);
      out << line.str() << std::string(std::max<int>(1, 20 - int(line.str().size())), ' ')
          << ids(t["zero"]) << std::string(std::max<int>(1, 14 - int(ids(t["zero"]).size())), ' ')
          << ids(t["plus"]) << "\n";
    }
  } else if (cmd == "subset") {
    out << cells(r["strata"]) << "\n";
  } else if (cmd == "recover") {
    out << triple(r["semisection"]) << "\n";
  } else if (cmd == "verify") {
    out << "subset " << cells(r["subset"]) << "\n"
        << "  theta " << r["theta"] << "  s " << r["s"] << "  e " << r["e"]
        << "  proper " << r["proper"] << "\n"
        << "  complement components " << r["complement_components"]
        << "  semi-section " << triple(r["semisection"]) << "\n";
  } else if (cmd == "chains") {
    for (const auto &c : r["chains"]) {
      out << ids(c["nodes"]);
      if (c.contains("form"))
        out << "  " << c["form"].get<std::string>() << "  edges "
            << ids(c["trace"]["edges"]) << " nodes " << ids(c["trace"]["nodes"]);
      out << "\n";
    }
  } else if (cmd == "cover") {
    for (const auto &c : r["covers"])
      out << "(" << c["stratum"][0] << "," << c["stratum"][1] << ")  "
          << triple(c["semisection"]) << "\n";
  } else if (cmd == "oracle") {
    out << "proper opens " << r["count"] << "  semi-sectional "
        << r["semisectional_count"] << "  equivalence "
        << r["equivalence"].get<std::string>() << "\n";
    for (const auto &p : r["proper_opens"])
      out << "  " << triple(p["semisection"]) << "  " << cells(p["subset"])
          << "\n";
  } else if (cmd == "weights") {
    out << (r["acyclic"].get<bool>() ? "acyclic" : "cyclic") << "\n";
    if (!r["weighting"].is_null())
      for (std::size_t i = 0; i < r["weighting"].size(); ++i)
        out << "  " << i << "  " << r["weighting"][i] << "\n";
  } else if (cmd == "blowup") {
    out << "guard n=" << r["guard_exponent"] << "  depth " << r["depth"]
        << "\n";
    for (const auto &c : r["charts"]) {
      std::string path = c["path"].get<std::string>();
      out << "  " << (path.empty() ? "." : path) << "  weights ("
          << c["weights"][0] << "," << c["weights"][1] << ")  "
          << cells(c["generators"])
          << (c["principal"].get<bool>() ? "  principal" : "") << "\n";
    }
  }
}

json cmd_validate(const Options &o) {
  const FlowGraph g = load_graph(o);
  const auto report = validate_geometric(g);
  json violations = json::array();
  for (const auto &v : report.violations)
    violations.push_back(
        {{"kind", std::string(to_string(v.kind))}, {"detail", v.detail}});
  return {{"valid", report.ok()},
          {"k", g.k()},
          {"source", g.source()},
          {"sink", g.sink()},
          {"violations", violations}};
}

json cmd_enumerate(const Options &o) {
  const FlowGraph g = load_graph(o);
  const auto all = enumerate_semisections(g);
  json list = json::array();
  std::size_t sections = 0;
  for (const auto &t : all) {
    list.push_back(io::semisection_to_json(t));
    sections += is_section(t) ? 1 : 0;
  }
  const auto bound = semisection_bound(g.k());
  return {{"k", g.k()},
          {"count", all.size()},
          {"sections", sections},
          {"bound", bound},
          {"sharp", all.size() == bound},
          {"semisections", list}};
}

SemiSection require_semisection(const FlowGraph &g, const Options &o) {
  if (o.semisection.empty())
    throw UsageError("--semisection is required");
  SemiSection t = io::semisection_from_json(io::load_json_arg(o.semisection));
  if (!is_semisection(g, t))
    throw Error(ErrorCode::InvalidInput, "not a semi-section of this graph");
  return t;
}

InvariantSubset require_subset(const Options &o) {
  if (o.subset.empty())
    throw UsageError("--subset is required");
  return io::subset_from_json(io::load_json_arg(o.subset));
}

json cmd_subset(const Options &o) {
  const FlowGraph g = load_graph(o);
  const SemiSection t = require_semisection(g, o);
  return io::subset_to_json(semisectional_subset(g, t));
}

json cmd_recover(const Options &o) {
  const FlowGraph g = load_graph(o);
  const auto t = recover_semisection(g, require_subset(o));
  return {{"semisection", t ? io::semisection_to_json(*t) : json(nullptr)}};
}

json cmd_verify(const Options &o) {
  const FlowGraph g = load_graph(o);
  return io::verify_report(g, require_subset(o));
}

json cmd_chains(const Options &o) {
  const FlowGraph g = load_graph(o);
  std::optional<InvariantSubset> u;
  if (!o.subset.empty()) {
    u = io::subset_from_json(io::load_json_arg(o.subset));
    g.check_subset(*u);
  }
  json list = json::array();
  for (const auto &c : enumerate_maximal_chains(g)) {
    json entry = io::chain_to_json(c);
    if (u) {
      const auto trace = chain_trace(g, *u, c);
      entry["trace"] = io::trace_to_json(trace);
      entry["form"] = std::string(to_string(classify_trace(trace, c.length())));
    }
    list.push_back(entry);
  }
  return {{"count", list.size()}, {"chains", list}};
}

json cmd_cover(const Options &o) {
  const FlowGraph g = load_graph(o);
  json list = json::array();
  for (const auto &s : g.strata()) {
    const SemiSection t = covering_semisection(g, s);
    list.push_back({{"stratum", {s.src, s.dst}},
                    {"semisection", io::semisection_to_json(t)}});
  }
  return {{"covers", list}};
}

json cmd_oracle(const Options &o) {
  if (o.budget > kDefaultStratumBudget && !o.unsafe_budget)
    throw UsageError("--budget above " + std::to_string(kDefaultStratumBudget) +
                     " needs --unsafe-budget");
  const FlowGraph g = load_graph(o);
  const auto proper = oracle_enumerate_proper_opens(g, o.budget);
  std::set<InvariantSubset> from_sections;
  for (const auto &t : enumerate_semisections(g))
    from_sections.insert(semisectional_subset(g, t));
  const std::set<InvariantSubset> from_oracle(proper.begin(), proper.end());

  json opens = json::array(), only_oracle = json::array(),
       only_sections = json::array();
  for (const auto &u : proper)
    opens.push_back(io::verify_report(g, u));
  for (const auto &u : from_oracle)
    if (!from_sections.contains(u))
      only_oracle.push_back(io::strata_to_json(u.strata()));
  for (const auto &u : from_sections)
    if (!from_oracle.contains(u))
      only_sections.push_back(io::strata_to_json(u.strata()));
  return {{"count", proper.size()},
          {"semisectional_count", from_sections.size()},
          {"equivalence", from_oracle == from_sections ? "exact" : "mismatch"},
          {"only_oracle", only_oracle},
          {"only_semisectional", only_sections},
          {"proper_opens", opens}};
}

json cmd_weights(const Options &o) {
  const FlowGraph g = load_graph(o);
  const auto w = monotone_weighting_exists(g);
  json weighting = nullptr;
  if (w) {
    weighting = json::array();
    for (const auto &[i, value] : *w)
      weighting.push_back(value);
  }
  return {{"acyclic", w.has_value()},
          {"weighting", weighting},
          {"linearization", g.weights() ? json(*g.weights()) : json(nullptr)}};
}

json cmd_blowup(const Options &o) {
  if (o.ideal.empty())
    throw UsageError("--ideal is required");
  return io::blowup_to_json(
      chain_from_monomial_ideal(io::exponents_from_json(io::load_json_arg(o.ideal))));
}

} // namespace

int run(const std::vector<std::string> &args, std::ostream &out,
        std::ostream &err) {
  CLI::App app{"Bialynicki-Birula flow analysis: semi-sections and proper "
               "quotients of Gm-actions"};
  app.require_subcommand(1, 1);
  Options o;

  struct Command {
    const char *name;
    const char *help;
    json (*fn)(const Options &);
  };
  const std::vector<Command> commands = {
      {"validate", "check the graph against the geometric constraints", cmd_validate},
      {"enumerate", "list all semi-sections and the counting bound", cmd_enumerate},
      {"subset", "semi-sectional subset of a semi-section", cmd_subset},
      {"recover", "recover the semi-section of a subset", cmd_recover},
      {"verify", "Theta/S/E report for an open dense subset", cmd_verify},
      {"chains", "maximal chains, with traces for an optional subset", cmd_chains},
      {"cover", "covering semi-section for every stratum", cmd_cover},
      {"oracle", "brute-force proper opens vs semi-sectional subsets", cmd_oracle},
      {"weights", "monotone integer weighting of the flow relation", cmd_weights},
      {"blowup", "blow-up chart tree of a monomial ideal in (y, pi)", cmd_blowup},
  };
  for (const auto &s : commands) {
    auto *sub = app.add_subcommand(s.name, s.help);
    sub->add_option("--format", o.format, "output format")
        ->check(CLI::IsMember({"json", "table"}));
    if (std::string(s.name) == "blowup") {
      sub->add_option("--ideal", o.ideal,
                      "exponent pairs [[a,b],...] (inline JSON or file)");
      continue;
    }
    sub->add_option("--graph", o.graph, "flow graph (inline JSON or file)");
    sub->add_option("--weights", o.weights,
                    "linear action {\"factors\": ...} (inline JSON or file)");
    const std::string name = s.name;
    if (name == "subset")
      sub->add_option("--semisection", o.semisection,
                      "{\"minus\":[..],\"zero\":[..],\"plus\":[..]}");
    if (name == "recover" || name == "verify" || name == "chains")
      sub->add_option("--subset", o.subset, "strata [[i,j],...]");
    if (name == "oracle") {
      sub->add_option("--budget", o.budget, "maximum number of strata");
      sub->add_flag("--unsafe-budget", o.unsafe_budget,
                    "allow budgets above the default cap");
    }
  }

  std::vector<const char *> argv{"bbflow"};
  for (const auto &a : args)
    argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp &e) {
    app.exit(e, out, err);
    return kExitOk;
  } catch (const CLI::ParseError &e) {
    app.exit(e, out, err);
    return kExitUsage;
  }

  for (const auto &s : commands) {
    if (!app.got_subcommand(s.name))
      continue;
    try {
      const json result = s.fn(o);
      if (o.format == "table")
        render_table(s.name, result, out);
      else
        out << result.dump(2) << "\n";
      return kExitOk;
    } catch (const UsageError &e) {
      err << "usage error: " << e.what() << "\n";
      return kExitUsage;
    } catch (const Error &e) {
      out << json{{"error", std::string(to_string(e.code()))},
                  {"message", e.what()}}
                 .dump(2)
          << "\n";
      return kExitDomainError;
    } catch (const json::exception &e) {
      out << json{{"error", "InvalidInput"}, {"message", e.what()}}.dump(2)
          << "\n";
      return kExitDomainError;
    }
  }
  return kExitUsage;
}

} // namespace bbflow::cli
