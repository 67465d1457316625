#pragma once

#include <optional>
#include <vector>

#include "latcover/halfspace.hpp"

namespace latcover {

/// Result of an exact feasibility query.
struct LpFeasible {
  Vec point;
};
struct LpInfeasible {};

struct LpResult {
  std::optional<Vec> point;  // nullopt = infeasible
  bool feasible() const { return point.has_value(); }
};

/// Exact feasibility for a mixed strict/non-strict halfspace system.
/// strict_flags[i] marks constraints that must hold strictly; when empty all
/// constraints are non-strict. `dim` is only needed when constraints is empty.
/// Deterministic for fixed input order (simplex with Bland's rule).
/// Throws DimensionMismatch.
LpResult lp_feasible(const std::vector<Halfspace>& constraints,
                     const std::vector<bool>& strict_flags = {}, int dim = -1);

enum class LpStatus { Optimal, Infeasible, Unbounded };

struct LpOptimum {
  LpStatus status;
  Rat value;  // objective at optimum (valid when Optimal)
  Vec point;
};

/// max objective . x subject to the halfspace constraints, x free.
LpOptimum lp_maximize(const std::vector<Halfspace>& constraints, const Vec& objective);

}  // namespace latcover
