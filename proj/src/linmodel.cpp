#include "bbflow/linmodel.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace bbflow {

namespace {

WeightFactor normalized(const WeightFactor &factor) {
  if (factor.empty())
    throw Error(ErrorCode::EmptyAction, "a factor has no weight blocks");
  WeightFactor sorted = factor;
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t t = 0; t < sorted.size(); ++t) {
    if (sorted[t].multiplicity < 1)
      throw Error(ErrorCode::InvalidInput,
                  "multiplicity must be positive for weight " +
                      std::to_string(sorted[t].weight));
    if (t > 0 && sorted[t].weight == sorted[t - 1].weight)
      throw Error(ErrorCode::InvalidInput,
                  "weight " + std::to_string(sorted[t].weight) +
                      " repeated within a factor");
  }
  return sorted;
}

// Dimension of the cell between blocks lo..hi of one factor.
int interval_dim(const WeightFactor &f, std::size_t lo, std::size_t hi) {
  int total = 0;
  for (std::size_t t = lo; t <= hi; ++t)
    total += f[t].multiplicity;
  return total - 1;
}

std::vector<std::size_t> digits(std::size_t id,
                                const std::vector<std::size_t> &radix) {
  std::vector<std::size_t> out(radix.size());
  for (std::size_t f = radix.size(); f-- > 0;) {
    out[f] = id % radix[f];
    id /= radix[f];
  }
  return out;
}

} // namespace

FlowGraph graph_from_weights(const WeightFactor &factor) {
  const WeightFactor f = normalized(factor);
  const std::size_t k = f.size();

  GraphSpec spec;
  spec.k = k;
  GraphDims dims;
  std::vector<long long> weights;
  for (std::size_t i = 0; i < k; ++i) {
    spec.names.push_back("w=" + std::to_string(f[i].weight));
    dims.components.push_back(f[i].multiplicity - 1);
    weights.push_back(f[i].weight);
    for (std::size_t j = i; j < k; ++j) {
      if (j > i)
        spec.direct.emplace_back(i, j);
      dims.strata[{i, j}] = interval_dim(f, i, j);
    }
  }
  spec.dims = std::move(dims);
  spec.weights = std::move(weights);
  return build_graph(spec);
}

FlowGraph graph_from_weights(const LinearAction &action) {
  if (action.factors.empty())
    throw Error(ErrorCode::EmptyAction, "action has no factors");
  if (action.factors.size() != 1)
    throw Error(ErrorCode::InvalidInput,
                "graph_from_weights takes a single factor");
  return graph_from_weights(action.factors.front());
}

FlowGraph product_graph(const LinearAction &action) {
  if (action.factors.empty())
    throw Error(ErrorCode::EmptyAction, "action has no factors");
  if (action.factors.size() == 1)
    return graph_from_weights(action.factors.front());

  std::vector<WeightFactor> factors;
  std::vector<std::size_t> radix;
  for (const auto &f : action.factors) {
    factors.push_back(normalized(f));
    radix.push_back(factors.back().size());
  }
  const std::size_t k = std::accumulate(radix.begin(), radix.end(),
                                        std::size_t{1}, std::multiplies<>());

  GraphSpec spec;
  spec.k = k;
  GraphDims dims;
  std::vector<long long> weights(k, 0);
  std::vector<Stratum> strata;
  std::vector<std::vector<std::size_t>> tuple(k);
  for (std::size_t a = 0; a < k; ++a)
    tuple[a] = digits(a, radix);

  for (std::size_t a = 0; a < k; ++a) {
    std::string label = "(";
    int dim = 0;
    for (std::size_t f = 0; f < factors.size(); ++f) {
      const auto &block = factors[f][tuple[a][f]];
      weights[a] += block.weight;
      dim += block.multiplicity - 1;
      label += (f ? "," : "") + std::to_string(tuple[a][f]);
    }
    spec.names.push_back(label + ")");
    dims.components.push_back(dim);

    for (std::size_t b = 0; b < k; ++b) {
      bool below = true;
      int cell_dim = 0;
      for (std::size_t f = 0; f < factors.size() && below; ++f) {
        below = tuple[a][f] <= tuple[b][f];
        if (below)
          cell_dim += interval_dim(factors[f], tuple[a][f], tuple[b][f]);
      }
      if (!below)
        continue;
      strata.push_back({a, b});
      dims.strata[{a, b}] = cell_dim;
      // Every strict coordinate step is realized inside P(V_f), so each
      // componentwise-below pair is a direct edge.
      if (a != b)
        spec.direct.emplace_back(a, b);
    }
  }
  spec.strata = std::move(strata);
  spec.dims = std::move(dims);
  spec.weights = std::move(weights);
  return build_graph(spec);
}

FlowGraph graph_from_action(const LinearAction &action) {
  if (action.factors.size() == 1)
    return graph_from_weights(action);
  return product_graph(action);
}

std::optional<std::map<ComponentId, long long>>
monotone_weighting_exists(const FlowGraph &g) {
  const std::size_t k = g.k();
  std::vector<std::size_t> indegree(k, 0);
  for (const auto &e : g.direct_edges())
    ++indegree[e.dst];
  std::vector<ComponentId> ready, order;
  for (ComponentId i = 0; i < k; ++i)
    if (indegree[i] == 0)
      ready.push_back(i);
  while (!ready.empty()) {
    ComponentId u = ready.back();
    ready.pop_back();
    order.push_back(u);
    for (ComponentId v : g.successors(u))
      if (--indegree[v] == 0)
        ready.push_back(v);
  }
  if (order.size() != k)
    return std::nullopt;

  std::map<ComponentId, long long> layer;
  for (ComponentId i = 0; i < k; ++i)
    layer[i] = 0;
  for (ComponentId u : order)
    for (ComponentId v : g.successors(u))
      layer[v] = std::max(layer[v], layer[u] + 1);
  return layer;
}

} // namespace bbflow
