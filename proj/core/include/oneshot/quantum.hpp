#pragma once

#include <Eigen/Dense>

#include <optional>
#include <string>
#include <vector>

namespace oneshot {

using CMat = Eigen::MatrixXcd;

inline constexpr double kQuantumTol = 1e-9;   // validation
inline constexpr double kIdentityTol = 1e-12;  // exact-identity checks

struct DensityMatrix {
  int dim = 0;
  CMat m;
};

struct Povm {
  std::string setting;
  std::vector<std::pair<std::string, CMat>> elements;  // outcome label -> PSD effect
};

struct EnsembleEntry {
  std::string label;
  double probability = 0.0;
  std::optional<CMat> state;  // omitted for zero-probability outcomes
};
using Ensemble = std::vector<EnsembleEntry>;

struct QuantumViolation {
  std::string what;
  double magnitude = 0.0;
};

CMat kron(const CMat& a, const CMat& b);
CMat identity(int d);
// Bipartite dims da x db; row/col index = i_a * db + i_b.
CMat partial_trace_first(const CMat& m, int da, int db);
CMat partial_trace_second(const CMat& m, int da, int db);

// Rank-1 projector onto (1/sqrt(d)) sum_i |i>|i> in dimension d^2.
DensityMatrix max_entangled(int d);

// v*rho + (1-v)*I/d.
DensityMatrix depolarize(const DensityMatrix& rho, double v);

// Alice's POVM steers Bob's side of rho_ab: outcome x has probability
// Tr[(E_x (x) I) rho] and normalized conditional state on B.
Ensemble steered_ensemble(const DensityMatrix& rho_ab, const Povm& alice_povm);

std::vector<QuantumViolation> validate_density(const DensityMatrix& rho,
                                               double tol = kQuantumTol);
std::vector<QuantumViolation> validate_povm(const Povm& p, int dim, double tol = kQuantumTol);

double hermiticity_defect(const CMat& m);
double min_eigenvalue(const CMat& hermitian_part);

}  // namespace oneshot
