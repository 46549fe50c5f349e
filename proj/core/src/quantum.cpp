#include "oneshot/quantum.hpp"

#include <cmath>

#include "oneshot/errors.hpp"

namespace oneshot {

CMat kron(const CMat& a, const CMat& b) {
  CMat out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

CMat identity(int d) { return CMat::Identity(d, d); }

CMat partial_trace_first(const CMat& m, int da, int db) {
  CMat out = CMat::Zero(db, db);
  for (int i = 0; i < da; ++i)
    out += m.block(i * db, i * db, db, db);
  return out;
}

CMat partial_trace_second(const CMat& m, int da, int db) {
  CMat out = CMat::Zero(da, da);
  for (int i = 0; i < da; ++i)
    for (int j = 0; j < da; ++j)
      out(i, j) = m.block(i * db, j * db, db, db).trace();
  return out;
}

DensityMatrix max_entangled(int d) {
  if (d < 2) throw InputError("maximally entangled state needs local dimension >= 2");
  Eigen::VectorXcd psi = Eigen::VectorXcd::Zero(d * d);
  double amp = 1.0 / std::sqrt(static_cast<double>(d));
  for (int i = 0; i < d; ++i) psi(i * d + i) = amp;
  DensityMatrix rho;
  rho.dim = d * d;
  rho.m = psi * psi.adjoint();
  return rho;
}

DensityMatrix depolarize(const DensityMatrix& rho, double v) {
  if (v < 0.0 || v > 1.0) throw InputError("depolarizing visibility outside [0,1]");
  DensityMatrix out;
  out.dim = rho.dim;
  out.m = v * rho.m + (1.0 - v) / rho.dim * identity(rho.dim);
  return out;
}

Ensemble steered_ensemble(const DensityMatrix& rho_ab, const Povm& alice_povm) {
  if (alice_povm.elements.empty()) throw InputError("empty POVM");
  int da = static_cast<int>(alice_povm.elements.front().second.rows());
  if (da <= 0 || rho_ab.dim % da != 0)
    throw InputError("state dimension does not factor through Alice's POVM dimension");
  int db = rho_ab.dim / da;
  CMat id_b = identity(db);
  Ensemble out;
  for (const auto& [label, effect] : alice_povm.elements) {
    CMat sigma = partial_trace_first((kron(effect, id_b) * rho_ab.m).eval(), da, db);
    double p = sigma.trace().real();
    EnsembleEntry entry;
    entry.label = label;
    entry.probability = p;
    if (p > kQuantumTol) entry.state = (sigma / p).eval();
    out.push_back(std::move(entry));
  }
  return out;
}

double hermiticity_defect(const CMat& m) {
  return (m - m.adjoint()).cwiseAbs().maxCoeff();
}

double min_eigenvalue(const CMat& hermitian_part) {
  Eigen::SelfAdjointEigenSolver<CMat> solver(hermitian_part);
  return solver.eigenvalues().minCoeff();
}

std::vector<QuantumViolation> validate_density(const DensityMatrix& rho, double tol) {
  std::vector<QuantumViolation> v;
  if (rho.m.rows() != rho.dim || rho.m.cols() != rho.dim) {
    v.push_back({"density matrix shape mismatch", 0.0});
    return v;
  }
  double herm = hermiticity_defect(rho.m);
  if (herm > tol) v.push_back({"density matrix not Hermitian", herm});
  double tr = std::abs(rho.m.trace().real() - 1.0) + std::abs(rho.m.trace().imag());
  if (tr > tol) v.push_back({"density matrix trace != 1", tr});
  CMat h = (rho.m + rho.m.adjoint()) / 2.0;
  double lo = min_eigenvalue(h);
  if (lo < -tol) v.push_back({"density matrix not positive semidefinite", -lo});
  return v;
}

std::vector<QuantumViolation> validate_povm(const Povm& p, int dim, double tol) {
  std::vector<QuantumViolation> v;
  CMat sum = CMat::Zero(dim, dim);
  for (const auto& [label, effect] : p.elements) {
    if (effect.rows() != dim || effect.cols() != dim) {
      v.push_back({"POVM element " + label + " shape mismatch", 0.0});
      continue;
    }
    double herm = hermiticity_defect(effect);
    if (herm > tol)
      v.push_back({"POVM element " + label + " (setting " + p.setting + ") not Hermitian", herm});
    CMat h = (effect + effect.adjoint()) / 2.0;
    double lo = min_eigenvalue(h);
    if (lo < -tol)
      v.push_back({"POVM element " + label + " (setting " + p.setting + ") not PSD", -lo});
    sum += effect;
  }
  double defect = (sum - identity(dim)).cwiseAbs().maxCoeff();
  if (defect > tol)
    v.push_back({"POVM for setting " + p.setting + " does not sum to identity", defect});
  return v;
}

}  // namespace oneshot
