#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "bbflow/flowgraph.hpp"

namespace bbflow {

enum class Side : std::uint8_t { Minus = 0, Zero = 1, Plus = 2 };

/// A division (A-, A0, A+) of the components. Each part is kept sorted.
/// A semi-section is such a division that is non-trivial and closed under
/// the flow order; see is_semisection.
struct SemiSection {
  std::vector<ComponentId> minus;
  std::vector<ComponentId> zero;
  std::vector<ComponentId> plus;

  SemiSection() = default;
  SemiSection(std::vector<ComponentId> m, std::vector<ComponentId> z,
              std::vector<ComponentId> p);

  /// Side of each component; throws NotAPartition unless the parts are a
  /// disjoint cover of [0, k).
  std::vector<Side> coloring(std::size_t k) const;
  static SemiSection from_coloring(const std::vector<Side> &colors);

  friend auto operator<=>(const SemiSection &, const SemiSection &) = default;
};

/// Checks non-triviality (A- u A0 and A0 u A+ both nonempty) and the
/// downward-closure condition. The mirrored upward condition is evaluated
/// too and must agree.
bool is_semisection(const FlowGraph &g, const SemiSection &t);

bool is_section(const SemiSection &t);

/// All semi-sections, lexicographic in the coloring (Minus < Zero < Plus,
/// component 0 most significant). Filters all 3^k colorings.
std::vector<SemiSection> enumerate_semisections(const FlowGraph &g);

/// 2 + 3^(k-2) for k >= 2; 1 for k = 1.
std::uint64_t semisection_bound(std::size_t k);

/// Strata flowing out of A- u A0 and into A0 u A+.
InvariantSubset semisectional_subset(const FlowGraph &g, const SemiSection &t);

/// Inverse of semisectional_subset, or nullopt if U is not semi-sectional.
std::optional<SemiSection> recover_semisection(const FlowGraph &g,
                                               const InvariantSubset &u);

/// A semi-section whose subset contains `s`. Seeds A- with everything at or
/// below s.src and A+ with everything at or above s.dst, then places the
/// remaining components in ascending order, A- first when allowed.
/// Throws CyclicGraph unless the direct relation is acyclic.
SemiSection covering_semisection(const FlowGraph &g, const Stratum &s);

} // namespace bbflow
