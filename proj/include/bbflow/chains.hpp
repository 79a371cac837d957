#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <string_view>
#include <vector>

#include "bbflow/flowgraph.hpp"
#include "bbflow/semisection.hpp"

namespace bbflow {

/// A source-to-sink path along direct edges. Each edge stands for one orbit
/// closure; each node for the fixed point joining consecutive orbits.
struct MaximalChain {
  std::vector<ComponentId> nodes;

  std::size_t length() const { return nodes.empty() ? 0 : nodes.size() - 1; }
  std::vector<Stratum> edges() const;

  friend auto operator<=>(const MaximalChain &, const MaximalChain &) = default;
};

/// Which chain cells lie in U: edge t is (c_t, c_t+1), node t is (c_t, c_t).
struct ChainTrace {
  std::set<std::size_t> edges_in;
  std::set<std::size_t> nodes_in;

  bool empty() const { return edges_in.empty() && nodes_in.empty(); }
  friend bool operator==(const ChainTrace &, const ChainTrace &) = default;
};

enum class IntersectionForm {
  Empty,
  SingleOrbit,
  TwoOrbitsJoined,
  SourceOrbitWithFixedPoint,
  SinkOrbitWithFixedPoint,
  Other,
};

std::string_view to_string(IntersectionForm form);

/// Self-avoiding source-to-sink paths in lexicographic order.
std::vector<MaximalChain> enumerate_maximal_chains(const FlowGraph &g);

ChainTrace chain_trace(const FlowGraph &g, const InvariantSubset &u,
                       const MaximalChain &chain);

IntersectionForm classify_trace(const ChainTrace &trace,
                                std::size_t chain_length);

/// Every maximal chain meets U. Requires U open and dense.
bool check_E(const FlowGraph &g, const InvariantSubset &u);
/// Every maximal chain meets U in an admissible form (Empty allowed).
/// Requires U open and dense.
bool check_S(const FlowGraph &g, const InvariantSubset &u);
/// For each fixed component in U, its attracting and repelling families are
/// closed in U. Requires U open.
bool check_Theta(const FlowGraph &g, const InvariantSubset &u);

bool has_proper_quotient(const FlowGraph &g, const InvariantSubset &u);

struct ComplementReport {
  std::vector<std::vector<Stratum>> components;
  std::optional<std::size_t> source_component;
  std::optional<std::size_t> sink_component;

  std::size_t count() const { return components.size(); }
  bool separates_source_sink() const {
    return source_component && sink_component &&
           *source_component != *sink_component;
  }
};

/// Connected components of the complement of U, with cells adjacent when
/// one lies in the closure of the other.
ComplementReport complement_components(const FlowGraph &g,
                                       const InvariantSubset &u);

inline constexpr std::size_t kDefaultStratumBudget = 24;
inline constexpr std::size_t kHardStratumLimit = 63;

/// Every open dense U with a proper quotient (Theta, S and E all hold),
/// sorted. Throws BudgetExceeded when the graph has more than `budget`
/// strata.
std::vector<InvariantSubset>
oracle_enumerate_proper_opens(const FlowGraph &g,
                              std::size_t budget = kDefaultStratumBudget);

/// All open subsets containing the big stratum, sorted.
std::vector<InvariantSubset>
enumerate_open_dense_subsets(const FlowGraph &g,
                             std::size_t budget = kDefaultStratumBudget);

// Monomial ideals in (y, pi) and their resolution by blow-ups.

struct Exponent {
  int a = 0; // power of y
  int b = 0; // power of pi

  friend auto operator<=>(const Exponent &, const Exponent &) = default;
};

/// Generators y^a pi^b of a monomial ideal.
struct ExponentSet {
  std::vector<Exponent> points;
};

/// Gm-weights of the chart coordinates (y, pi).
struct WeightPair {
  long long w = 0;
  long long v = 0;

  friend auto operator<=>(const WeightPair &, const WeightPair &) = default;
};

struct BlowupNode {
  std::string path;                // "" for the original chart, then A/B
  std::vector<Exponent> generators; // minimal generators after stripping
  Exponent stripped;               // common monomial factor removed
  WeightPair weights;
  bool principal = false;

  std::size_t depth() const { return path.size(); }
};

struct BlowupTree {
  int guard_exponent = 0;     // least n with (y, pi)^n inside the ideal
  std::vector<BlowupNode> nodes; // preorder, chart A before chart B
  std::size_t depth = 0;      // number of blow-up levels used
};

/// Minimal generating set of the ideal, sorted by a.
std::vector<Exponent> minimal_generators(const std::vector<Exponent> &points);

/// Least n with (y, pi)^n contained in the ideal; throws NotCofinite.
int guard_exponent(const ExponentSet &e);

/// Blows up the origin repeatedly, following both charts
///   A: (y, pi) -> (y' pi, pi)   B: (y, pi) -> (y, y pi')
/// until every leaf ideal is principal.
BlowupTree chain_from_monomial_ideal(const ExponentSet &e);

} // namespace bbflow
