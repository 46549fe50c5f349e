#pragma once

#include <vector>

#include "oneshot/ratmat.hpp"

namespace oneshot {

// Exact primal simplex with Bland's rule over {x >= 0, Ax = b}.
// Phase 1 runs once; successive objectives warm-start from the last basis.
class ExactLp {
 public:
  ExactLp(RatMat a, RatVec b);

  bool feasible();

  enum class Status { Optimal, Unbounded, Infeasible };
  struct Result {
    Status status;
    Rational value;
    RatVec x;  // basic optimal solution (a vertex of the feasible region)
  };

  Result maximize(const RatVec& c);

  int var_count() const { return n_; }

 private:
  void pivot(int row, int col);
  void run_phase1();

  int n_ = 0;                    // structural variables
  int m_ = 0;                    // rows after redundancy elimination
  RatMat t_;                     // m x (cols+1) tableau, last column = rhs
  int cols_ = 0;                 // current column count (without rhs)
  std::vector<int> basis_;
  bool phase1_done_ = false;
  bool feasible_ = false;
};

}  // namespace oneshot
