#pragma once

#include <cstddef>
#include <vector>

#include "oneshot/ratmat.hpp"

namespace oneshot {

// Exact vertex enumeration of {x >= 0, a x = b} by the double description
// method. Vertices come back sorted lexicographically. Throws CapExceeded
// when the generator count passes `cap` (no silent truncation) and
// InputError when the region is unbounded (a recession ray survives).
std::vector<RatVec> enumerate_polytope_vertices(const RatMat& a, const RatVec& b,
                                                std::size_t cap = 1'000'000);

// {x >= 0, equalities x = rhs}, all rational.
struct RationalPolytope {
  int var_count = 0;
  RatMat equalities;
  RatVec rhs;

  bool feasible() const;  // decided by the exact LP core
  std::vector<RatVec> vertices(std::size_t cap = 1'000'000) const;
  Rational maximize(const RatVec& objective) const;  // throws if infeasible/unbounded
};

}  // namespace oneshot
