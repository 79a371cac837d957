#include "bbflow/chains.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>

namespace bbflow {

std::vector<Stratum> MaximalChain::edges() const {
  std::vector<Stratum> out;
  for (std::size_t t = 0; t + 1 < nodes.size(); ++t)
    out.push_back({nodes[t], nodes[t + 1]});
  return out;
}

std::string_view to_string(IntersectionForm form) {
  switch (form) {
  case IntersectionForm::Empty: return "Empty";
  case IntersectionForm::SingleOrbit: return "SingleOrbit";
  case IntersectionForm::TwoOrbitsJoined: return "TwoOrbitsJoined";
  case IntersectionForm::SourceOrbitWithFixedPoint:
    return "SourceOrbitWithFixedPoint";
  case IntersectionForm::SinkOrbitWithFixedPoint:
    return "SinkOrbitWithFixedPoint";
  case IntersectionForm::Other: return "Other";
  }
  return "Other";
}

std::vector<MaximalChain> enumerate_maximal_chains(const FlowGraph &g) {
  if (g.k() < 2)
    throw Error(ErrorCode::DegenerateGraph,
                "a graph with one component has no maximal chains");
  std::vector<MaximalChain> out;
  std::vector<ComponentId> path{g.source()};
  std::vector<char> on_path(g.k(), 0);
  on_path[g.source()] = 1;

  std::function<void(ComponentId)> walk = [&](ComponentId u) {
    if (u == g.sink()) {
      out.push_back({path});
      return;
    }
    for (ComponentId v : g.successors(u)) {
      if (on_path[v])
        continue;
      on_path[v] = 1;
      path.push_back(v);
      walk(v);
      path.pop_back();
      on_path[v] = 0;
    }
  };
  walk(g.source());
  return out;
}

ChainTrace chain_trace(const FlowGraph &g, const InvariantSubset &u,
                       const MaximalChain &chain) {
  g.check_subset(u);
  ChainTrace trace;
  for (std::size_t t = 0; t < chain.nodes.size(); ++t) {
    if (u.contains({chain.nodes[t], chain.nodes[t]}))
      trace.nodes_in.insert(t);
    if (t + 1 < chain.nodes.size() &&
        u.contains({chain.nodes[t], chain.nodes[t + 1]}))
      trace.edges_in.insert(t);
  }
  return trace;
}

IntersectionForm classify_trace(const ChainTrace &trace,
                                std::size_t chain_length) {
  const auto &e = trace.edges_in;
  const auto &n = trace.nodes_in;
  if (e.empty() && n.empty())
    return IntersectionForm::Empty;
  if (e.size() == 1 && n.empty())
    return IntersectionForm::SingleOrbit;
  if (e.size() == 2 && n.size() == 1) {
    std::size_t t = *e.begin();
    if (*e.rbegin() == t + 1 && *n.begin() == t + 1)
      return IntersectionForm::TwoOrbitsJoined;
  }
  if (e.size() == 1 && n.size() == 1) {
    if (*e.begin() == 0 && *n.begin() == 0)
      return IntersectionForm::SourceOrbitWithFixedPoint;
    if (chain_length >= 1 && *e.begin() == chain_length - 1 &&
        *n.begin() == chain_length)
      return IntersectionForm::SinkOrbitWithFixedPoint;
  }
  return IntersectionForm::Other;
}

namespace {

void require_open(const FlowGraph &g, const InvariantSubset &u) {
  if (!is_open_subset(g, u))
    throw Error(ErrorCode::PreconditionViolated, "subset is not open");
}

void require_open_dense(const FlowGraph &g, const InvariantSubset &u) {
  require_open(g, u);
  if (!is_dense_subset(g, u))
    throw Error(ErrorCode::PreconditionViolated, "subset is not dense");
}

bool all_chains_meet(const FlowGraph &g, const InvariantSubset &u,
                     const std::vector<MaximalChain> &chains) {
  return std::all_of(chains.begin(), chains.end(), [&](const auto &c) {
    return !chain_trace(g, u, c).empty();
  });
}

bool all_forms_admissible(const FlowGraph &g, const InvariantSubset &u,
                          const std::vector<MaximalChain> &chains) {
  return std::all_of(chains.begin(), chains.end(), [&](const auto &c) {
    return classify_trace(chain_trace(g, u, c), c.length()) !=
           IntersectionForm::Other;
  });
}

std::vector<MaximalChain> chains_or_none(const FlowGraph &g) {
  if (g.k() < 2)
    return {};
  return enumerate_maximal_chains(g);
}

bool theta_holds(const FlowGraph &g, const InvariantSubset &u) {
  const auto &strata = g.strata();
  for (ComponentId i = 0; i < g.k(); ++i) {
    if (!u.contains({i, i}))
      continue;
    for (Sign sign : {Sign::Minus, Sign::Plus}) {
      auto in_family = [&](const Stratum &s) {
        return (sign == Sign::Minus ? s.src : s.dst) == i && u.contains(s);
      };
      // The family must be closed in U: closure(t) n U stays in the family.
      for (std::size_t a = 0; a < strata.size(); ++a) {
        if (!in_family(strata[a]))
          continue;
        for (std::size_t b : g.closure_indices(a))
          if (u.contains(strata[b]) && !in_family(strata[b]))
            return false;
      }
    }
  }
  return true;
}

} // namespace

bool check_E(const FlowGraph &g, const InvariantSubset &u) {
  require_open_dense(g, u);
  return all_chains_meet(g, u, chains_or_none(g));
}

bool check_S(const FlowGraph &g, const InvariantSubset &u) {
  require_open_dense(g, u);
  return all_forms_admissible(g, u, chains_or_none(g));
}

bool check_Theta(const FlowGraph &g, const InvariantSubset &u) {
  require_open(g, u);
  return theta_holds(g, u);
}

bool has_proper_quotient(const FlowGraph &g, const InvariantSubset &u) {
  require_open_dense(g, u);
  const auto chains = chains_or_none(g);
  return theta_holds(g, u) && all_forms_admissible(g, u, chains) &&
         all_chains_meet(g, u, chains);
}

ComplementReport complement_components(const FlowGraph &g,
                                       const InvariantSubset &u) {
  require_open(g, u);
  const auto &strata = g.strata();
  const std::size_t n = strata.size();
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  std::function<std::size_t(std::size_t)> find = [&](std::size_t x) {
    return parent[x] == x ? x : parent[x] = find(parent[x]);
  };
  for (std::size_t a = 0; a < n; ++a) {
    if (u.contains(strata[a]))
      continue;
    for (std::size_t b : g.closure_indices(a))
      if (!u.contains(strata[b]))
        parent[find(a)] = find(b);
  }

  ComplementReport report;
  std::vector<std::size_t> slot(n, n);
  for (std::size_t a = 0; a < n; ++a) {
    if (u.contains(strata[a]))
      continue;
    std::size_t root = find(a);
    if (slot[root] == n) {
      slot[root] = report.components.size();
      report.components.emplace_back();
    }
    report.components[slot[root]].push_back(strata[a]);
    if (strata[a] == Stratum{g.source(), g.source()})
      report.source_component = slot[root];
    if (strata[a] == Stratum{g.sink(), g.sink()})
      report.sink_component = slot[root];
  }
  return report;
}

namespace {

using Mask = std::uint64_t;

InvariantSubset subset_from_mask(const FlowGraph &g, Mask m) {
  std::vector<Stratum> cells;
  for (std::size_t a = 0; a < g.stratum_count(); ++a)
    if (m >> a & 1u)
      cells.push_back(g.strata()[a]);
  return InvariantSubset(std::move(cells));
}

} // namespace

std::vector<InvariantSubset>
enumerate_open_dense_subsets(const FlowGraph &g, std::size_t budget) {
  const std::size_t n = g.stratum_count();
  if (n > std::min(budget, kHardStratumLimit))
    throw Error(ErrorCode::BudgetExceeded,
                "graph has " + std::to_string(n) + " strata; budget is " +
                    std::to_string(std::min(budget, kHardStratumLimit)));
  auto big = g.stratum_index(g.big_stratum());
  if (!big)
    throw Error(ErrorCode::StratumMissing, "big stratum is not in the graph");

  // closure_of[a]: cells in closure(a); above[a]: cells whose closure holds a.
  std::vector<Mask> closure_of(n, 0), above(n, 0);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b : g.closure_indices(a)) {
      closure_of[a] |= Mask{1} << b;
      above[b] |= Mask{1} << a;
    }
  // Decide larger cells first so exclusions prune early.
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](auto x, auto y) {
    return g.closure_indices(x).size() > g.closure_indices(y).size();
  });

  std::vector<Mask> found;
  std::function<void(std::size_t, Mask, Mask)> decide =
      [&](std::size_t d, Mask in, Mask out) {
        if (d == n) {
          found.push_back(in);
          return;
        }
        const std::size_t a = order[d];
        const Mask bit = Mask{1} << a;
        // An open set containing a contains every cell above a.
        if ((above[a] & ~bit & out) == 0)
          decide(d + 1, in | bit, out);
        // A cell outside an open set has its whole closure outside.
        if (a != *big && (closure_of[a] & ~bit & in) == 0)
          decide(d + 1, in, out | bit);
      };
  decide(0, 0, 0);

  std::vector<InvariantSubset> out;
  out.reserve(found.size());
  for (Mask m : found)
    out.push_back(subset_from_mask(g, m));
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<InvariantSubset>
oracle_enumerate_proper_opens(const FlowGraph &g, std::size_t budget) {
  const auto candidates = enumerate_open_dense_subsets(g, budget);
  const auto chains = chains_or_none(g);
  std::vector<InvariantSubset> out;
  for (const auto &u : candidates)
    if (theta_holds(g, u) && all_forms_admissible(g, u, chains) &&
        all_chains_meet(g, u, chains))
      out.push_back(u);
  return out;
}

std::vector<Exponent> minimal_generators(const std::vector<Exponent> &points) {
  std::vector<Exponent> sorted = points;
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  // Sorted by a ascending: a point survives iff its b is strictly below every
  // b seen so far.
  std::vector<Exponent> out;
  for (const auto &p : sorted)
    if (out.empty() || p.b < out.back().b)
      out.push_back(p);
  return out;
}

namespace {

bool divides_some(const std::vector<Exponent> &gens, int a, int b) {
  return std::any_of(gens.begin(), gens.end(), [&](const Exponent &p) {
    return p.a <= a && p.b <= b;
  });
}

} // namespace

int guard_exponent(const ExponentSet &e) {
  if (e.points.empty())
    throw Error(ErrorCode::NotCofinite, "empty exponent set");
  for (const auto &p : e.points)
    if (p.a < 0 || p.b < 0)
      throw Error(ErrorCode::InvalidInput, "exponents must be non-negative");
  const auto gens = minimal_generators(e.points);
  int pure_y = -1, pure_pi = -1;
  for (const auto &p : gens) {
    if (p.b == 0)
      pure_y = p.a;
    if (p.a == 0)
      pure_pi = p.b;
  }
  if (pure_y < 0 || pure_pi < 0)
    throw Error(ErrorCode::NotCofinite,
                "ideal lacks a pure power of y or of pi");
  for (int n = 0;; ++n) {
    bool inside = true;
    for (int a = 0; a <= n && inside; ++a)
      inside = divides_some(gens, a, n - a);
    if (inside)
      return n;
  }
}

namespace {

constexpr std::size_t kMaxBlowupDepth = 256;

void blow_up(std::vector<Exponent> gens, std::string path, Exponent stripped,
             WeightPair weights, BlowupTree &tree) {
  BlowupNode node;
  node.path = path;
  node.generators = gens;
  node.stripped = stripped;
  node.weights = weights;
  node.principal = gens.size() == 1;
  tree.depth = std::max(tree.depth, path.size());
  const bool principal = node.principal;
  tree.nodes.push_back(std::move(node));
  if (principal)
    return;
  if (path.size() >= kMaxBlowupDepth)
    throw Error(ErrorCode::OracleMismatch, "blow-up did not terminate");

  // Chart A: y = y' pi, so y^a pi^b -> y'^a pi^(a+b).
  {
    std::vector<Exponent> pts;
    int c = -1;
    for (const auto &p : gens) {
      pts.push_back({p.a, p.a + p.b});
      c = c < 0 ? p.a + p.b : std::min(c, p.a + p.b);
    }
    for (auto &p : pts)
      p.b -= c;
    blow_up(minimal_generators(pts), path + "A", {0, c},
            {weights.w - weights.v, weights.v}, tree);
  }
  // Chart B: pi = y pi', so y^a pi^b -> y^(a+b) pi'^b.
  {
    std::vector<Exponent> pts;
    int c = -1;
    for (const auto &p : gens) {
      pts.push_back({p.a + p.b, p.b});
      c = c < 0 ? p.a + p.b : std::min(c, p.a + p.b);
    }
    for (auto &p : pts)
      p.a -= c;
    blow_up(minimal_generators(pts), path + "B", {c, 0},
            {weights.w, weights.v - weights.w}, tree);
  }
}

} // namespace

BlowupTree chain_from_monomial_ideal(const ExponentSet &e) {
  BlowupTree tree;
  tree.guard_exponent = guard_exponent(e);
  // y has weight 1 and pi weight 0 in the original chart.
  blow_up(minimal_generators(e.points), "", {0, 0}, {1, 0}, tree);
  return tree;
}

} // namespace bbflow
