#include "bbflow/semisection.hpp"

#include <algorithm>
#include <iostream>

#include "bbflow/linmodel.hpp"

namespace bbflow {

namespace {

std::vector<ComponentId> sorted(std::vector<ComponentId> v) {
  std::sort(v.begin(), v.end());
  return v;
}

bool left_side(Side s) { return s != Side::Plus; }  // A- u A0
bool right_side(Side s) { return s != Side::Minus; } // A0 u A+

bool coloring_is_semisection(const FlowGraph &g,
                             const std::vector<Side> &color) {
  const std::size_t k = g.k();
  bool any_left = false, any_right = false;
  for (Side c : color) {
    any_left = any_left || left_side(c);
    any_right = any_right || right_side(c);
  }
  if (!any_left || !any_right)
    return false;

  bool downward = true, upward = true;
  for (ComponentId i = 0; i < k; ++i)
    for (ComponentId j = 0; j < k; ++j) {
      if (!g.less(j, i))
        continue;
      // j < i
      if (left_side(color[i]) && color[j] != Side::Minus)
        downward = false;
      if (right_side(color[j]) && color[i] != Side::Plus)
        upward = false;
    }
  if (downward != upward)
    throw Error(ErrorCode::OracleMismatch,
                "the two defining conditions of a semi-section disagree");
  return downward;
}

} // namespace

SemiSection::SemiSection(std::vector<ComponentId> m, std::vector<ComponentId> z,
                         std::vector<ComponentId> p)
    : minus(sorted(std::move(m))), zero(sorted(std::move(z))),
      plus(sorted(std::move(p))) {}

std::vector<Side> SemiSection::coloring(std::size_t k) const {
  std::vector<int> seen(k, 0);
  std::vector<Side> color(k, Side::Minus);
  auto mark = [&](const std::vector<ComponentId> &part, Side side) {
    for (ComponentId i : part) {
      if (i >= k)
        throw Error(ErrorCode::NotAPartition,
                    "component " + std::to_string(i) + " out of range");
      if (seen[i]++)
        throw Error(ErrorCode::NotAPartition,
                    "component " + std::to_string(i) + " listed twice");
      color[i] = side;
    }
  };
  mark(minus, Side::Minus);
  mark(zero, Side::Zero);
  mark(plus, Side::Plus);
  for (std::size_t i = 0; i < k; ++i)
    if (!seen[i])
      throw Error(ErrorCode::NotAPartition,
                  "component " + std::to_string(i) + " not assigned");
  return color;
}

SemiSection SemiSection::from_coloring(const std::vector<Side> &colors) {
  SemiSection t;
  for (ComponentId i = 0; i < colors.size(); ++i) {
    switch (colors[i]) {
    case Side::Minus: t.minus.push_back(i); break;
    case Side::Zero: t.zero.push_back(i); break;
    case Side::Plus: t.plus.push_back(i); break;
    }
  }
  return t;
}

bool is_semisection(const FlowGraph &g, const SemiSection &t) {
  return coloring_is_semisection(g, t.coloring(g.k()));
}

bool is_section(const SemiSection &t) { return t.zero.empty(); }

std::uint64_t semisection_bound(std::size_t k) {
  if (k < 2)
    return 1;
  std::uint64_t p = 1;
  for (std::size_t i = 2; i < k; ++i)
    p *= 3;
  return 2 + p;
}

std::vector<SemiSection> enumerate_semisections(const FlowGraph &g) {
  const std::size_t k = g.k();
  if (k > 12)
    std::cerr << "warning: enumerating 3^" << k
              << " colorings; this may take a long time\n";
  std::vector<SemiSection> out;
  // Odometer over colorings with component k-1 varying fastest gives
  // lexicographic order with component 0 most significant.
  std::vector<Side> color(k, Side::Minus);
  while (true) {
    if (coloring_is_semisection(g, color))
      out.push_back(SemiSection::from_coloring(color));
    std::size_t pos = k;
    while (pos > 0) {
      --pos;
      if (color[pos] != Side::Plus) {
        color[pos] = static_cast<Side>(static_cast<int>(color[pos]) + 1);
        break;
      }
      color[pos] = Side::Minus;
      if (pos == 0)
        return out;
    }
  }
}

InvariantSubset semisectional_subset(const FlowGraph &g, const SemiSection &t) {
  const auto color = t.coloring(g.k());
  std::vector<Stratum> cells;
  for (const auto &s : g.strata())
    if (left_side(color[s.src]) && right_side(color[s.dst]))
      cells.push_back(s);
  return InvariantSubset(std::move(cells));
}

std::optional<SemiSection> recover_semisection(const FlowGraph &g,
                                               const InvariantSubset &u) {
  g.check_subset(u);
  const std::size_t k = g.k();
  std::vector<Side> color(k, Side::Plus);
  for (ComponentId i = 0; i < k; ++i)
    if (u.contains({i, i}))
      color[i] = Side::Zero;
  for (const auto &s : u.strata())
    if (color[s.src] != Side::Zero)
      color[s.src] = Side::Minus;
  if (!coloring_is_semisection(g, color))
    return std::nullopt;
  SemiSection t = SemiSection::from_coloring(color);
  if (semisectional_subset(g, t) != u)
    return std::nullopt;
  return t;
}

SemiSection covering_semisection(const FlowGraph &g, const Stratum &s) {
  if (!monotone_weighting_exists(g))
    throw Error(ErrorCode::CyclicGraph,
                "covering needs an acyclic flow relation");
  if (!g.has_stratum(s))
    throw Error(ErrorCode::StratumMissing,
                "stratum " + to_string(s) + " is not in the graph");
  if (!g.leq(s.src, s.dst))
    throw Error(ErrorCode::PreconditionViolated,
                "stratum " + to_string(s) + " does not flow upward");

  const std::size_t k = g.k();
  std::vector<char> in_minus(k, 0), in_plus(k, 0);
  for (ComponentId l = 0; l < k; ++l) {
    in_minus[l] = g.leq(l, s.src);
    in_plus[l] = g.leq(s.dst, l);
  }
  // Invariant: no p in A-, q in A+ with p != q and q < p.
  auto can_join_minus = [&](ComponentId l) {
    for (ComponentId q = 0; q < k; ++q)
      if (in_plus[q] && q != l && g.less(q, l))
        return false;
    return true;
  };
  auto can_join_plus = [&](ComponentId l) {
    for (ComponentId p = 0; p < k; ++p)
      if (in_minus[p] && p != l && g.less(l, p))
        return false;
    return true;
  };
  for (ComponentId l = 0; l < k; ++l) {
    if (in_minus[l] || in_plus[l])
      continue;
    if (can_join_minus(l))
      in_minus[l] = 1;
    else if (can_join_plus(l))
      in_plus[l] = 1;
    else
      throw Error(ErrorCode::OracleMismatch,
                  "component " + std::to_string(l) + " fits on neither side");
  }

  std::vector<Side> color(k);
  for (ComponentId l = 0; l < k; ++l)
    color[l] = in_minus[l] && in_plus[l] ? Side::Zero
               : in_minus[l]             ? Side::Minus
                                         : Side::Plus;
  return SemiSection::from_coloring(color);
}

} // namespace bbflow
