#pragma once

#include <vector>

#include "crepant/numeric.hpp"

namespace crepant {

enum class LpStatus { Optimal, Infeasible, Unbounded };

struct LpSolution {
  LpStatus status = LpStatus::Infeasible;
  Rat value;               // objective at optimum
  std::vector<Rat> x;      // primal solution
};

// max c.x subject to A x = b, x >= 0, over exact rationals.
// Two-phase dense simplex with Bland's rule, so it terminates on every input.
LpSolution maximize_equality_lp(const std::vector<std::vector<Rat>>& a,
                                const std::vector<Rat>& b,
                                const std::vector<Rat>& c);

// Is target a non-negative rational combination of the generators?
bool in_nonneg_span(const std::vector<IntVec>& generators, const IntVec& target);

}  // namespace crepant
