#pragma once

#include <map>
#include <optional>
#include <vector>

#include "bbflow/flowgraph.hpp"

namespace bbflow {

/// A weight space of the linear action: Gm acts on `multiplicity`
/// coordinates with character t^weight.
struct WeightBlock {
  long long weight = 0;
  int multiplicity = 1;

  friend auto operator<=>(const WeightBlock &, const WeightBlock &) = default;
};

/// Weight decomposition of V for the action on P(V).
using WeightFactor = std::vector<WeightBlock>;

/// Diagonal linear Gm-action on P(V_1) x ... x P(V_n).
struct LinearAction {
  std::vector<WeightFactor> factors;
};

/// Single projective space: one component per weight block, ordered by weight.
FlowGraph graph_from_weights(const LinearAction &action);
FlowGraph graph_from_weights(const WeightFactor &factor);

/// Product of projective spaces with the diagonal action. Component ids are
/// mixed-radix tuples with the last factor varying fastest.
FlowGraph product_graph(const LinearAction &action);

/// Dispatches on the number of factors.
FlowGraph graph_from_action(const LinearAction &action);

/// A strictly monotone integer weighting along direct edges (longest-path
/// layering), or nullopt if the direct relation has a cycle.
std::optional<std::map<ComponentId, long long>>
monotone_weighting_exists(const FlowGraph &g);

} // namespace bbflow
