#ifndef MAPPERFORGE_LP_HPP
#define MAPPERFORGE_LP_HPP

#include <variant>

#include "mapperforge/rational.hpp"

namespace mapperforge {

/// Solution of { E x = d, x >= 0 }.
struct LpFeasible {
  RatVec x;
};

/// Farkas certificate of infeasibility: y with y^T E <= 0 componentwise
/// and y^T d > 0.
struct LpInfeasible {
  RatVec y;
};

using LpResult = std::variant<LpFeasible, LpInfeasible>;

/// Exact phase-1 simplex with Bland's rule.  `columns` holds E column-major
/// (columns[j][i] = E[i][j]), `rhs` holds d.  Every returned certificate is
/// re-verified arithmetically before this returns.
LpResult lp_equality_feasibility(const RatMat& columns, const RatVec& rhs);

bool lp_verify_feasible(const RatMat& columns, const RatVec& rhs, const RatVec& x);
bool lp_verify_farkas(const RatMat& columns, const RatVec& rhs, const RatVec& y);

} // namespace mapperforge

#endif
