// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails. Time limits are wall-clock per criterion.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>

#include "bbflow/cli.hpp"
#include "bbflow/io.hpp"
#include "oracles.hpp"

using namespace bbflow;
using bbflow::testing::brute_semisections;
using bbflow::testing::brute_subset;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;

  void fail(const std::string &why) {
    if (ok)
      detail = why;
    ok = false;
  }
};

FlowGraph single_factor(std::size_t k, std::mt19937 &rng) {
  std::uniform_int_distribution<int> mult(1, 3);
  WeightFactor f;
  long long w = -static_cast<long long>(k);
  for (std::size_t i = 0; i < k; ++i) {
    w += 1 + static_cast<long long>(rng() % 3);
    f.push_back({w, mult(rng)});
  }
  return graph_from_weights(f);
}

FlowGraph product_of_sizes(const std::vector<std::size_t> &sizes) {
  LinearAction a;
  for (auto n : sizes) {
    WeightFactor f;
    for (std::size_t i = 0; i < n; ++i)
      f.push_back({static_cast<long long>(i), 1});
    a.factors.push_back(f);
  }
  return product_graph(a);
}

// Single-factor graphs for k = 2..8 and every product of at least two
// nontrivial factors with at most 8 components.
std::vector<FlowGraph> bound_family() {
  std::mt19937 rng(2024);
  std::vector<FlowGraph> out;
  for (std::size_t k = 2; k <= 8; ++k) {
    out.push_back(bbflow::testing::projective_space(k - 1));
    out.push_back(single_factor(k, rng));
  }
  for (const auto &sizes : std::vector<std::vector<std::size_t>>{
           {2, 2}, {2, 3}, {3, 2}, {2, 4}, {4, 2}, {2, 2, 2}})
    out.push_back(product_of_sizes(sizes));
  return out;
}

std::vector<FlowGraph> oracle_family() {
  std::vector<FlowGraph> out;
  for (std::size_t n = 1; n <= 4; ++n)
    out.push_back(bbflow::testing::projective_space(n));
  out.push_back(product_of_sizes({2, 2}));
  out.push_back(product_of_sizes({2, 3}));
  return out;
}

std::set<std::set<Stratum>> as_sets(const std::vector<InvariantSubset> &us) {
  std::set<std::set<Stratum>> out;
  for (const auto &u : us)
    out.insert({u.strata().begin(), u.strata().end()});
  return out;
}

Outcome p1_sharpness() {
  Outcome r;
  std::ostringstream out, err;
  const int code = cli::run(
      {"enumerate", "--weights", R"({"factors":[[[0,1],[1,1]]]})"}, out, err);
  if (code != 0)
    return r.fail("exit " + std::to_string(code)), r;
  const auto j = io::json::parse(out.str());
  if (j["count"] != 3 || j["bound"] != 3 || j["sharp"] != true)
    r.fail(out.str());
  r.detail = "count=3 bound=3";
  return r;
}

Outcome bound() {
  Outcome r;
  std::size_t graphs = 0;
  for (const auto &g : bound_family()) {
    ++graphs;
    const auto n = enumerate_semisections(g).size();
    if (n != brute_semisections(g).size())
      r.fail("enumeration disagrees with brute force at k=" + std::to_string(g.k()));
    if (n > semisection_bound(g.k()))
      r.fail(std::to_string(n) + " > bound at k=" + std::to_string(g.k()));
  }
  if (r.ok)
    r.detail = std::to_string(graphs) + " graphs";
  return r;
}

Outcome oracle_equivalence() {
  Outcome r;
  std::string counts;
  for (const auto &g : oracle_family()) {
    const auto oracle = as_sets(oracle_enumerate_proper_opens(g, kDefaultStratumBudget));
    std::set<std::set<Stratum>> family;
    for (const auto &t : brute_semisections(g))
      family.insert(brute_subset(g, t));
    if (oracle != family)
      r.fail("mismatch at k=" + std::to_string(g.k()));
    counts += (counts.empty() ? "" : ",") + std::to_string(oracle.size());
  }
  if (r.ok)
    r.detail = "counts " + counts;
  return r;
}

Outcome injectivity() {
  Outcome r;
  std::size_t pairs = 0;
  for (const auto &g : bound_family()) {
    const auto all = enumerate_semisections(g);
    std::vector<InvariantSubset> images;
    for (const auto &t : all)
      images.push_back(semisectional_subset(g, t));
    for (std::size_t a = 0; a < all.size(); ++a)
      for (std::size_t b = a + 1; b < all.size(); ++b, ++pairs)
        if (images[a] == images[b])
          r.fail("collision at k=" + std::to_string(g.k()));
  }
  if (r.ok)
    r.detail = std::to_string(pairs) + " pairs";
  return r;
}

Outcome covering() {
  Outcome r;
  std::size_t cells = 0;
  for (const auto &g : bound_family()) {
    if (!monotone_weighting_exists(g) || !validate_geometric(g).ok())
      continue;
    for (const auto &s : g.strata()) {
      ++cells;
      const auto t = covering_semisection(g, s);
      if (!is_semisection(g, t) || !semisectional_subset(g, t).contains(s))
        r.fail("stratum " + to_string(s) + " uncovered at k=" + std::to_string(g.k()));
    }
  }
  if (r.ok)
    r.detail = std::to_string(cells) + " strata";
  return r;
}

Outcome complement() {
  Outcome r;
  std::size_t subsets = 0;
  for (const auto &g : oracle_family())
    for (const auto &t : enumerate_semisections(g)) {
      ++subsets;
      const auto u = semisectional_subset(g, t);
      const auto report = complement_components(g, u);
      const bool boundary = u.contains_component(g.source()) ||
                            u.contains_component(g.sink());
      const bool good = boundary ? report.count() == 1
                                 : report.count() == 2 && report.separates_source_sink();
      if (!good)
        r.fail("k=" + std::to_string(g.k()) + " pieces=" +
               std::to_string(report.count()));
    }
  if (r.ok)
    r.detail = std::to_string(subsets) + " subsets";
  return r;
}

// Closedness of the union of cells read off the closure table.
bool closed_by_closure(const FlowGraph &g, const std::set<ComponentId> &family,
                       Sign sign) {
  auto member = [&](const Stratum &s) {
    return family.contains(sign == Sign::Minus ? s.src : s.dst);
  };
  for (const auto &s : g.strata())
    if (member(s))
      for (const auto &t : g.closure(s))
        if (!member(t))
          return false;
  return true;
}

Outcome saturation() {
  Outcome r;
  std::vector<FlowGraph> graphs;
  for (const auto &g : bound_family())
    if (g.k() <= 6)
      graphs.push_back(g);
  std::mt19937 rng(7);
  for (int round = 0; round < 50; ++round)
    graphs.push_back(bbflow::testing::random_dag(rng, 2 + rng() % 5, 0.4));
  std::size_t checks = 0;
  for (const auto &g : graphs)
    for (std::uint32_t m = 0; m < (1u << g.k()); ++m) {
      std::set<ComponentId> family;
      for (std::size_t i = 0; i < g.k(); ++i)
        if (m >> i & 1u)
          family.insert(i);
      for (Sign sign : {Sign::Minus, Sign::Plus}) {
        ++checks;
        if (is_saturated(g, family, sign) != closed_by_closure(g, family, sign))
          r.fail("disagreement at k=" + std::to_string(g.k()));
      }
    }
  if (r.ok)
    r.detail = std::to_string(checks) + " families";
  return r;
}

Outcome monotone() {
  Outcome r;
  std::mt19937 rng(8);
  std::size_t mutants = 0;
  for (const auto &g : bound_family()) {
    const auto w = monotone_weighting_exists(g);
    if (!w) {
      r.fail("no weighting on an acyclic graph");
      continue;
    }
    if (g.weights()) {
      const auto &lin = *g.weights();
      for (ComponentId i = 0; i < g.k(); ++i)
        for (ComponentId j = 0; j < g.k(); ++j)
          if (g.less(i, j) && !(w->at(i) < w->at(j) && lin[i] < lin[j]))
            r.fail("order disagrees with linearization");
    }
    // Inject a back edge between two comparable components.
    std::vector<std::pair<ComponentId, ComponentId>> edges;
    for (const auto &e : g.direct_edges())
      edges.emplace_back(e.src, e.dst);
    const auto &back = g.direct_edges()[rng() % g.direct_edges().size()];
    edges.emplace_back(back.dst, back.src);
    GraphSpec spec;
    spec.k = g.k();
    spec.direct = edges;
    spec.source = g.source();
    spec.sink = g.sink();
    ++mutants;
    if (monotone_weighting_exists(build_graph(spec)))
      r.fail("weighting found on a cyclic mutant");
  }
  for (std::size_t n = 1; n <= 7; ++n) {
    const auto g = bbflow::testing::projective_space(n);
    const auto w = monotone_weighting_exists(g);
    for (ComponentId i = 0; i < g.k(); ++i)
      for (ComponentId j = 0; j < g.k(); ++j)
        if ((w->at(i) < w->at(j)) != ((*g.weights())[i] < (*g.weights())[j]))
          r.fail("single-factor order mismatch");
  }
  if (r.ok)
    r.detail = std::to_string(mutants) + " mutants rejected";
  return r;
}

Outcome blowup() {
  Outcome r;
  auto tree = [](std::vector<Exponent> pts) {
    return chain_from_monomial_ideal(ExponentSet{std::move(pts)});
  };
  auto shape = [](const BlowupTree &t) {
    std::string s;
    for (const auto &n : t.nodes)
      s += (n.path.empty() ? "." : n.path) + (n.principal ? "*" : "") + " ";
    return s;
  };
  const auto m = tree({{1, 0}, {0, 1}});
  if (shape(m) != ". A* B* " || m.depth != 1)
    r.fail("(y,pi) tree " + shape(m));
  const auto sq = tree({{2, 0}, {0, 1}});
  if (shape(sq) != ". A* B BA* BB* " || sq.depth != 2)
    r.fail("(y^2,pi) tree " + shape(sq));

  std::mt19937 rng(9);
  std::uniform_int_distribution<int> entry(0, 6);
  std::size_t weights = 0;
  std::vector<BlowupTree> trees{m, sq};
  for (int round = 0; round < 100; ++round) {
    ExponentSet e;
    e.points.push_back({1 + entry(rng) % 6, 0});
    e.points.push_back({0, 1 + entry(rng) % 6});
    for (int i = entry(rng); i > 0; --i)
      e.points.push_back({entry(rng), entry(rng)});
    trees.push_back(chain_from_monomial_ideal(e));
    if (trees.back().depth > static_cast<std::size_t>(trees.back().guard_exponent))
      r.fail("depth above guard");
  }
  for (const auto &t : trees)
    for (const auto &n : t.nodes) {
      ++weights;
      if (n.weights.w <= n.weights.v)
        r.fail("weight pair with w <= v at " + n.path);
    }
  if (r.ok)
    r.detail = std::to_string(weights) + " weight pairs";
  return r;
}

} // namespace

int main() {
  struct Criterion {
    int id;
    const char *name;
    double limit_s;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria{
      {1, "P1 sharpness", 0.1, p1_sharpness},
      {2, "semi-section bound", 5.0, bound},
      {3, "oracle equivalence", 30.0, oracle_equivalence},
      {4, "injectivity", 5.0, injectivity},
      {5, "covering", 5.0, covering},
      {6, "complement connectivity", 5.0, complement},
      {7, "saturation equivalence", 5.0, saturation},
      {8, "monotone weights", 1.0, monotone},
      {9, "blow-up chains", 2.0, blowup},
  };
  int failures = 0;
  for (const auto &c : criteria) {
    Outcome o;
    const auto start = std::chrono::steady_clock::now();
    try {
      o = c.run();
    } catch (const std::exception &e) {
      o.fail(std::string("exception: ") + e.what());
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (secs > c.limit_s)
      o.fail("over time limit");
    failures += !o.ok;
    std::printf("%s  criterion %d  %-24s %8.3fs (limit %.1fs)  %s\n",
                o.ok ? "PASS" : "FAIL", c.id, c.name, secs, c.limit_s,
                o.detail.c_str());
  }
  std::printf("%d/%zu criteria passed\n",
              static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
