#include "bbflow/flowgraph.hpp"

#include <algorithm>
#include <deque>

namespace bbflow {

std::string to_string(const Stratum &s) {
  return "(" + std::to_string(s.src) + "," + std::to_string(s.dst) + ")";
}

InvariantSubset::InvariantSubset(std::vector<Stratum> strata)
    : strata_(std::move(strata)) {
  std::sort(strata_.begin(), strata_.end());
  strata_.erase(std::unique(strata_.begin(), strata_.end()), strata_.end());
}

bool InvariantSubset::contains(const Stratum &s) const {
  return std::binary_search(strata_.begin(), strata_.end(), s);
}

std::string FlowGraph::name(ComponentId i) const {
  if (i < names_.size() && !names_[i].empty())
    return names_[i];
  return std::to_string(i);
}

bool FlowGraph::is_direct(ComponentId i, ComponentId j) const {
  check_component(i);
  check_component(j);
  return direct_bits_[i * k_ + j] != 0;
}

bool FlowGraph::less(ComponentId i, ComponentId j) const {
  check_component(i);
  check_component(j);
  return less_bits_[i * k_ + j] != 0;
}

std::vector<ComponentId> FlowGraph::successors(ComponentId i) const {
  check_component(i);
  std::vector<ComponentId> out;
  for (ComponentId j = 0; j < k_; ++j)
    if (direct_bits_[i * k_ + j])
      out.push_back(j);
  return out;
}

std::vector<ComponentId> FlowGraph::predecessors(ComponentId i) const {
  check_component(i);
  std::vector<ComponentId> out;
  for (ComponentId j = 0; j < k_; ++j)
    if (direct_bits_[j * k_ + i])
      out.push_back(j);
  return out;
}

std::optional<std::size_t> FlowGraph::stratum_index(const Stratum &s) const {
  auto it = stratum_ids_.find(s);
  if (it == stratum_ids_.end())
    return std::nullopt;
  return it->second;
}

std::vector<Stratum> FlowGraph::closure(const Stratum &s) const {
  auto idx = stratum_index(s);
  if (!idx)
    throw Error(ErrorCode::StratumMissing,
                "stratum " + to_string(s) + " is not in the graph");
  std::vector<Stratum> out;
  for (std::size_t t : closure_[*idx])
    out.push_back(strata_[t]);
  return out;
}

void FlowGraph::check_component(ComponentId i) const {
  if (i >= k_)
    throw Error(ErrorCode::InvalidEdge,
                "component id " + std::to_string(i) + " out of range [0," +
                    std::to_string(k_) + ")");
}

void FlowGraph::check_subset(const InvariantSubset &u) const {
  for (const auto &s : u.strata())
    if (!has_stratum(s))
      throw Error(ErrorCode::InvalidInput,
                  "subset stratum " + to_string(s) + " is not in the graph");
}

namespace {

// Reachability by BFS from every node; entry [i*k+j] is set iff a path of
// length >= 1 leads from i to j.
std::vector<char> reachability(std::size_t k, const std::vector<char> &direct) {
  std::vector<char> reach(k * k, 0);
  for (std::size_t s = 0; s < k; ++s) {
    std::deque<std::size_t> queue;
    for (std::size_t j = 0; j < k; ++j)
      if (direct[s * k + j]) {
        reach[s * k + j] = 1;
        queue.push_back(j);
      }
    while (!queue.empty()) {
      std::size_t u = queue.front();
      queue.pop_front();
      for (std::size_t j = 0; j < k; ++j)
        if (direct[u * k + j] && !reach[s * k + j]) {
          reach[s * k + j] = 1;
          queue.push_back(j);
        }
    }
  }
  return reach;
}

std::pair<ComponentId, ComponentId>
source_sink_from(std::size_t k, const std::vector<char> &direct,
                 const std::vector<char> &less) {
  auto leq = [&](std::size_t i, std::size_t j) {
    return i == j || less[i * k + j] != 0;
  };
  std::vector<ComponentId> sources, sinks;
  for (std::size_t c = 0; c < k; ++c) {
    bool has_in = false, has_out = false, below_all = true, above_all = true;
    for (std::size_t x = 0; x < k; ++x) {
      has_in = has_in || direct[x * k + c];
      has_out = has_out || direct[c * k + x];
      below_all = below_all && leq(c, x);
      above_all = above_all && leq(x, c);
    }
    if (!has_in && below_all)
      sources.push_back(c);
    if (!has_out && above_all)
      sinks.push_back(c);
  }
  if (sources.size() != 1)
    throw Error(ErrorCode::NoUniqueSource,
                sources.empty() ? "no component lies below all others"
                                : "several candidate sources");
  if (sinks.size() != 1)
    throw Error(ErrorCode::NoUniqueSink,
                sinks.empty() ? "no component lies above all others"
                              : "several candidate sinks");
  return {sources.front(), sinks.front()};
}

} // namespace

FlowGraph build_graph(const GraphSpec &spec) {
  if (spec.k == 0)
    throw Error(ErrorCode::InvalidInput, "graph needs at least one component");
  const std::size_t k = spec.k;
  FlowGraph g;
  g.k_ = k;

  auto check_id = [k](ComponentId i) {
    if (i >= k)
      throw Error(ErrorCode::InvalidEdge,
                  "component id " + std::to_string(i) + " out of range [0," +
                      std::to_string(k) + ")");
  };

  g.direct_bits_.assign(k * k, 0);
  for (auto [i, j] : spec.direct) {
    check_id(i);
    check_id(j);
    if (i == j)
      throw Error(ErrorCode::InvalidEdge,
                  "direct edge (" + std::to_string(i) + "," +
                      std::to_string(j) + ") is a loop");
    g.direct_bits_[i * k + j] = 1;
  }
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j)
      if (g.direct_bits_[i * k + j])
        g.direct_.push_back({i, j});
  g.less_bits_ = reachability(k, g.direct_bits_);

  // Strata: the diagonal and the direct edges are always present.
  std::set<Stratum> strata;
  for (std::size_t i = 0; i < k; ++i)
    strata.insert({i, i});
  for (const auto &e : g.direct_)
    strata.insert(e);
  if (spec.strata) {
    for (const auto &s : *spec.strata) {
      check_id(s.src);
      check_id(s.dst);
      strata.insert(s);
    }
  } else {
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j)
        if (i != j && g.less_bits_[i * k + j])
          strata.insert({i, j});
  }
  g.strata_.assign(strata.begin(), strata.end());
  for (std::size_t t = 0; t < g.strata_.size(); ++t)
    g.stratum_ids_[g.strata_[t]] = t;

  const std::size_t n = g.strata_.size();
  g.closure_bits_.assign(n * n, 0);
  auto leq = [&](std::size_t i, std::size_t j) {
    return i == j || g.less_bits_[i * k + j] != 0;
  };
  for (std::size_t a = 0; a < n; ++a) {
    const Stratum &s = g.strata_[a];
    const std::vector<Stratum> *given = nullptr;
    if (spec.closure) {
      auto it = spec.closure->find(s);
      if (it != spec.closure->end())
        given = &it->second;
    }
    g.closure_bits_[a * n + a] = 1;
    if (given) {
      for (const auto &t : *given) {
        auto idx = g.stratum_index(t);
        if (!idx)
          throw Error(ErrorCode::InvalidInput,
                      "closure of " + to_string(s) + " names unknown stratum " +
                          to_string(t));
        g.closure_bits_[a * n + *idx] = 1;
      }
    } else {
      for (std::size_t b = 0; b < n; ++b) {
        const Stratum &t = g.strata_[b];
        if (leq(s.src, t.src) && leq(t.dst, s.dst))
          g.closure_bits_[a * n + b] = 1;
      }
    }
  }
  if (spec.closure) {
    for (const auto &[s, unused] : *spec.closure)
      if (!g.has_stratum(s))
        throw Error(ErrorCode::InvalidInput,
                    "closure given for unknown stratum " + to_string(s));
    // Transitive hull.
    for (std::size_t m = 0; m < n; ++m)
      for (std::size_t a = 0; a < n; ++a)
        if (g.closure_bits_[a * n + m])
          for (std::size_t b = 0; b < n; ++b)
            if (g.closure_bits_[m * n + b])
              g.closure_bits_[a * n + b] = 1;
  }
  g.closure_.assign(n, {});
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      if (g.closure_bits_[a * n + b])
        g.closure_[a].push_back(b);

  if (!spec.names.empty() && spec.names.size() != k)
    throw Error(ErrorCode::InvalidInput, "names must list every component");
  g.names_ = spec.names;
  if (spec.dims) {
    if (spec.dims->components.size() != k)
      throw Error(ErrorCode::InvalidInput,
                  "component dims must list every component");
    for (const auto &[s, d] : spec.dims->strata)
      if (!g.has_stratum(s))
        throw Error(ErrorCode::InvalidInput,
                    "dims given for unknown stratum " + to_string(s));
    g.dims_ = spec.dims;
  }
  if (spec.weights) {
    if (spec.weights->size() != k)
      throw Error(ErrorCode::InvalidInput, "weights must list every component");
    g.weights_ = spec.weights;
  }

  if (spec.source && spec.sink) {
    check_id(*spec.source);
    check_id(*spec.sink);
    g.source_ = *spec.source;
    g.sink_ = *spec.sink;
  } else {
    auto [src, snk] = source_sink_from(k, g.direct_bits_, g.less_bits_);
    g.source_ = spec.source.value_or(src);
    g.sink_ = spec.sink.value_or(snk);
    check_id(g.source_);
    check_id(g.sink_);
  }
  return g;
}

FlowGraph build_graph(
    std::size_t k,
    const std::vector<std::pair<ComponentId, ComponentId>> &direct) {
  GraphSpec spec;
  spec.k = k;
  spec.direct = direct;
  return build_graph(spec);
}

bool transitive_less(const FlowGraph &g, ComponentId i, ComponentId j) {
  return g.less(i, j);
}

std::pair<ComponentId, ComponentId> find_source_sink(const FlowGraph &g) {
  const std::size_t k = g.k();
  std::vector<char> direct(k * k, 0), less(k * k, 0);
  for (const auto &e : g.direct_edges())
    direct[e.src * k + e.dst] = 1;
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j)
      less[i * k + j] = g.less(i, j) ? 1 : 0;
  return source_sink_from(k, direct, less);
}

std::string_view to_string(ViolationKind kind) {
  switch (kind) {
  case ViolationKind::SourceHasIncomingEdge: return "source has incoming edge";
  case ViolationKind::SinkHasOutgoingEdge: return "sink has outgoing edge";
  case ViolationKind::NotAboveSource: return "component not above source";
  case ViolationKind::NotBelowSink: return "component not below sink";
  case ViolationKind::StratumNotOrdered: return "stratum endpoints not ordered";
  case ViolationKind::BigStratumMissing: return "big stratum missing";
  }
  return "unknown";
}

bool ValidationReport::has(ViolationKind kind) const {
  return std::any_of(violations.begin(), violations.end(),
                     [kind](const Violation &v) { return v.kind == kind; });
}

ValidationReport validate_geometric(const FlowGraph &g) {
  ValidationReport report;
  const ComponentId src = g.source(), snk = g.sink();
  for (ComponentId p : g.predecessors(src))
    report.violations.push_back({ViolationKind::SourceHasIncomingEdge,
                                 "edge " + to_string(Stratum{p, src})});
  for (ComponentId q : g.successors(snk))
    report.violations.push_back({ViolationKind::SinkHasOutgoingEdge,
                                 "edge " + to_string(Stratum{snk, q})});
  for (ComponentId i = 0; i < g.k(); ++i) {
    if (i != src && !g.less(src, i))
      report.violations.push_back(
          {ViolationKind::NotAboveSource, "component " + std::to_string(i)});
    if (i != snk && !g.less(i, snk))
      report.violations.push_back(
          {ViolationKind::NotBelowSink, "component " + std::to_string(i)});
  }
  for (const auto &s : g.strata())
    if (!g.leq(s.src, s.dst))
      report.violations.push_back(
          {ViolationKind::StratumNotOrdered, "stratum " + to_string(s)});
  if (!g.has_stratum(g.big_stratum()))
    report.violations.push_back(
        {ViolationKind::BigStratumMissing, "stratum " + to_string(g.big_stratum())});
  return report;
}

namespace {

void check_family(const FlowGraph &g, const std::set<ComponentId> &family) {
  for (ComponentId i : family)
    g.check_component(i);
}

bool in_family(const Stratum &s, const std::set<ComponentId> &family,
               Sign sign) {
  return family.contains(sign == Sign::Minus ? s.src : s.dst);
}

} // namespace

bool is_saturated(const FlowGraph &g, const std::set<ComponentId> &family,
                  Sign sign) {
  check_family(g, family);
  for (ComponentId i : family)
    for (ComponentId j = 0; j < g.k(); ++j) {
      bool related = sign == Sign::Minus ? g.less(i, j) : g.less(j, i);
      if (related && !family.contains(j))
        return false;
    }
  return true;
}

bool is_closed_family(const FlowGraph &g, const std::set<ComponentId> &family,
                      Sign sign) {
  const bool saturated = is_saturated(g, family, sign);

  bool closed = true;
  const auto &strata = g.strata();
  for (std::size_t a = 0; a < strata.size() && closed; ++a) {
    if (!in_family(strata[a], family, sign))
      continue;
    for (std::size_t b : g.closure_indices(a))
      if (!in_family(strata[b], family, sign)) {
        closed = false;
        break;
      }
  }
  if (saturated != closed)
    throw Error(ErrorCode::OracleMismatch,
                "saturation and closure disagree; the closure relation is "
                "inconsistent with the flow relation");
  return closed;
}

bool is_open_subset(const FlowGraph &g, const InvariantSubset &u) {
  g.check_subset(u);
  const auto &strata = g.strata();
  for (std::size_t a = 0; a < strata.size(); ++a) {
    if (u.contains(strata[a]))
      continue;
    for (std::size_t b : g.closure_indices(a))
      if (u.contains(strata[b]))
        return false;
  }
  return true;
}

bool is_dense_subset(const FlowGraph &g, const InvariantSubset &u) {
  g.check_subset(u);
  if (!g.has_stratum(g.big_stratum()))
    throw Error(ErrorCode::StratumMissing,
                "big stratum " + to_string(g.big_stratum()) +
                    " is not in the graph");
  return u.contains(g.big_stratum());
}

} // namespace bbflow
