#pragma once

#include <compare>
#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "bbflow/error.hpp"

namespace bbflow {

/// Index of a fixed-point component; ids are dense in [0, k).
using ComponentId = std::size_t;

/// A flow cell (src, dst): points flowing out of component `src` and into
/// component `dst`. The diagonal cell (i, i) is the component itself.
struct Stratum {
  ComponentId src = 0;
  ComponentId dst = 0;

  bool is_diagonal() const { return src == dst; }
  friend auto operator<=>(const Stratum &, const Stratum &) = default;
};

std::string to_string(const Stratum &s);

enum class Sign { Minus, Plus };

/// A set of strata of one graph, kept sorted by (src, dst).
class InvariantSubset {
public:
  InvariantSubset() = default;
  explicit InvariantSubset(std::vector<Stratum> strata);

  const std::vector<Stratum> &strata() const { return strata_; }
  bool contains(const Stratum &s) const;
  bool contains_component(ComponentId i) const { return contains({i, i}); }
  std::size_t size() const { return strata_.size(); }
  bool empty() const { return strata_.empty(); }

  friend auto operator<=>(const InvariantSubset &,
                          const InvariantSubset &) = default;

private:
  std::vector<Stratum> strata_;
};

struct GraphDims {
  std::vector<int> components;
  std::map<Stratum, int> strata;
};

/// Optional inputs to build_graph. Anything left empty takes its default.
struct GraphSpec {
  std::size_t k = 0;
  std::vector<std::pair<ComponentId, ComponentId>> direct;
  std::optional<std::vector<Stratum>> strata;
  std::optional<std::map<Stratum, std::vector<Stratum>>> closure;
  std::vector<std::string> names;
  std::optional<GraphDims> dims;
  std::optional<std::vector<long long>> weights;
  // Explicit source/sink bypass find_source_sink. Used to load graphs that
  // are meant to be diagnosed by validate_geometric.
  std::optional<ComponentId> source;
  std::optional<ComponentId> sink;
};

/// Flow combinatorics of a Gm-action: components, the directly-less-than
/// relation, nonempty strata and their closure relation. Immutable.
class FlowGraph {
public:
  std::size_t k() const { return k_; }

  const std::vector<std::string> &names() const { return names_; }
  std::string name(ComponentId i) const;
  const std::optional<GraphDims> &dims() const { return dims_; }
  const std::optional<std::vector<long long>> &weights() const {
    return weights_;
  }

  /// Direct edges sorted lexicographically.
  const std::vector<Stratum> &direct_edges() const { return direct_; }
  bool is_direct(ComponentId i, ComponentId j) const;
  /// Transitive relation i <* j (a path of length >= 1).
  bool less(ComponentId i, ComponentId j) const;
  /// Reflexive-transitive relation.
  bool leq(ComponentId i, ComponentId j) const {
    return i == j || less(i, j);
  }
  std::vector<ComponentId> successors(ComponentId i) const;
  std::vector<ComponentId> predecessors(ComponentId i) const;

  const std::vector<Stratum> &strata() const { return strata_; }
  std::size_t stratum_count() const { return strata_.size(); }
  std::optional<std::size_t> stratum_index(const Stratum &s) const;
  bool has_stratum(const Stratum &s) const {
    return stratum_index(s).has_value();
  }

  /// Stratum indices in the closure of stratum `index`, ascending.
  const std::vector<std::size_t> &closure_indices(std::size_t index) const {
    return closure_[index];
  }
  /// Whether stratum `inner` lies in the closure of stratum `outer`.
  bool in_closure(std::size_t outer, std::size_t inner) const {
    return closure_bits_[outer * strata_.size() + inner] != 0;
  }
  std::vector<Stratum> closure(const Stratum &s) const;

  ComponentId source() const { return source_; }
  ComponentId sink() const { return sink_; }
  /// The big cell (source, sink).
  Stratum big_stratum() const { return {source_, sink_}; }

  /// All strata of the graph as a subset.
  InvariantSubset all_strata() const { return InvariantSubset(strata_); }

  void check_component(ComponentId i) const;
  void check_subset(const InvariantSubset &u) const;

private:
  friend FlowGraph build_graph(const GraphSpec &spec);

  std::size_t k_ = 0;
  std::vector<std::string> names_;
  std::optional<GraphDims> dims_;
  std::optional<std::vector<long long>> weights_;
  std::vector<Stratum> direct_;
  std::vector<char> direct_bits_;
  std::vector<char> less_bits_;
  std::vector<Stratum> strata_;
  std::map<Stratum, std::size_t> stratum_ids_;
  std::vector<std::vector<std::size_t>> closure_;
  std::vector<char> closure_bits_;
  ComponentId source_ = 0;
  ComponentId sink_ = 0;
};

/// Builds a graph. Strata default to the diagonal, the direct edges and every
/// (i, j) with i <* j; closure defaults to interval closure
/// closure(i, j) = {(p, q) : i <= p, q <= j}. A user closure is completed to
/// its reflexive-transitive hull.
FlowGraph build_graph(const GraphSpec &spec);

FlowGraph build_graph(std::size_t k,
                      const std::vector<std::pair<ComponentId, ComponentId>> &direct);

bool transitive_less(const FlowGraph &g, ComponentId i, ComponentId j);

/// Unique component without incoming (resp. outgoing) direct edges lying
/// below (resp. above) every other component.
std::pair<ComponentId, ComponentId> find_source_sink(const FlowGraph &g);

enum class ViolationKind {
  SourceHasIncomingEdge,
  SinkHasOutgoingEdge,
  NotAboveSource,
  NotBelowSink,
  StratumNotOrdered,
  BigStratumMissing,
};

std::string_view to_string(ViolationKind kind);

struct Violation {
  ViolationKind kind;
  std::string detail;
};

struct ValidationReport {
  std::vector<Violation> violations;

  bool ok() const { return violations.empty(); }
  bool has(ViolationKind kind) const;
};

ValidationReport validate_geometric(const FlowGraph &g);

/// Whether the union of attracting (Minus) or repelling (Plus) cells of the
/// family is closed. Computed both as a saturation predicate and from the
/// closure relation; throws OracleMismatch if they disagree.
bool is_closed_family(const FlowGraph &g, const std::set<ComponentId> &family,
                      Sign sign);

/// Saturation half of is_closed_family only.
bool is_saturated(const FlowGraph &g, const std::set<ComponentId> &family,
                  Sign sign);

bool is_open_subset(const FlowGraph &g, const InvariantSubset &u);

/// True iff the big stratum lies in U.
bool is_dense_subset(const FlowGraph &g, const InvariantSubset &u);

} // namespace bbflow
