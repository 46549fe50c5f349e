#include <doctest.h>

#include <cmath>
#include <complex>

#include "oneshot/bruteforce.hpp"
#include "oneshot/kssets.hpp"
#include "oneshot/quantum.hpp"
#include "oneshot/strategy.hpp"

using namespace oneshot;

namespace {

using Complex = std::complex<double>;

CMat random_psd(bruteforce::Rng& rng, int d) {
  CMat g(d, d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) g(i, j) = Complex(rng.unit() - 0.5, rng.unit() - 0.5);
  return g * g.adjoint();
}

DensityMatrix random_state(bruteforce::Rng& rng, int d) {
  CMat m = random_psd(rng, d);
  DensityMatrix rho;
  rho.dim = d;
  rho.m = m / m.trace().real();
  return rho;
}

Povm random_povm(bruteforce::Rng& rng, int d, int outcomes) {
  // Random PSD pieces conjugated by S^{-1/2} so they sum to the identity.
  std::vector<CMat> parts;
  CMat sum = CMat::Zero(d, d);
  for (int k = 0; k < outcomes; ++k) {
    parts.push_back(random_psd(rng, d));
    sum += parts.back();
  }
  Eigen::SelfAdjointEigenSolver<CMat> eig(sum);
  CMat isqrt = eig.operatorInverseSqrt();
  Povm p;
  p.setting = "r";
  for (int k = 0; k < outcomes; ++k)
    p.elements.emplace_back(std::to_string(k), (isqrt * parts[k] * isqrt).eval());
  return p;
}

}  // namespace

TEST_CASE("maximally entangled state basics") {
  CHECK_THROWS_AS(max_entangled(1), InputError);
  for (int d : {2, 4}) {
    DensityMatrix rho = max_entangled(d);
    CHECK(rho.dim == d * d);
    CHECK(std::abs(rho.m.trace().real() - 1.0) < 1e-12);
    CHECK(validate_density(rho).empty());
    CMat ra = partial_trace_second(rho.m, d, d);
    CMat rb = partial_trace_first(rho.m, d, d);
    CHECK((ra - identity(d) / d).cwiseAbs().maxCoeff() < 1e-12);
    CHECK((rb - identity(d) / d).cwiseAbs().maxCoeff() < 1e-12);
    // Rank one: purity 1.
    CHECK(std::abs((rho.m * rho.m).trace().real() - 1.0) < 1e-12);
  }
}

TEST_CASE("depolarizing map") {
  bruteforce::Rng rng(57);
  DensityMatrix rho = random_state(rng, 4);
  CHECK((depolarize(rho, 1.0).m - rho.m).cwiseAbs().maxCoeff() < 1e-15);
  CHECK((depolarize(rho, 0.0).m - identity(4) / 4).cwiseAbs().maxCoeff() < 1e-15);
  for (double v : {0.3, 0.7}) {
    DensityMatrix out = depolarize(rho, v);
    CHECK(std::abs(out.m.trace().real() - 1.0) < 1e-12);
    CHECK(validate_density(out).empty());
  }
  CHECK_THROWS_AS(depolarize(rho, -0.1), InputError);
  CHECK_THROWS_AS(depolarize(rho, 1.1), InputError);
}

TEST_CASE("steering the other side of the maximally entangled state") {
  DensityMatrix phi = max_entangled(2);
  Povm z;
  z.setting = "Z";
  CMat p0 = CMat::Zero(2, 2), p1 = CMat::Zero(2, 2);
  p0(0, 0) = 1;
  p1(1, 1) = 1;
  z.elements.emplace_back("0", p0);
  z.elements.emplace_back("1", p1);
  Ensemble ens = steered_ensemble(phi, z);
  REQUIRE(ens.size() == 2);
  for (const auto& entry : ens) {
    CHECK(std::abs(entry.probability - 0.5) < 1e-12);
    REQUIRE(entry.state.has_value());
  }
  CHECK((*ens[0].state - p0).cwiseAbs().maxCoeff() < 1e-12);
  CHECK((*ens[1].state - p1).cwiseAbs().maxCoeff() < 1e-12);
}

TEST_CASE("steered ensemble averages to the reduced state") {
  bruteforce::Rng rng(59);
  for (int trial = 0; trial < 10; ++trial) {
    int da = 2 + rng.below(2), db = 2 + rng.below(2);
    DensityMatrix rho = random_state(rng, da * db);
    Povm povm = random_povm(rng, da, 2 + rng.below(3));
    Ensemble ens = steered_ensemble(rho, povm);
    CMat avg = CMat::Zero(db, db);
    double total = 0.0;
    for (const auto& e : ens) {
      total += e.probability;
      if (e.state) avg += e.probability * *e.state;
    }
    CHECK(std::abs(total - 1.0) < 1e-9);
    CMat reduced = partial_trace_first(rho.m, da, db);
    CHECK((avg - reduced).cwiseAbs().maxCoeff() < 1e-9);
  }
}

TEST_CASE("steering with a dotted measurement of the 24-ray set") {
  Scenario s = load_builtin("peres24");
  auto [strat, wiring] = cubitt_strategy(s);
  Ensemble ens = steered_ensemble(strat.rho_ab, strat.alice.front());
  REQUIRE(ens.size() == 4);
  for (const auto& e : ens) {
    CHECK(std::abs(e.probability - 0.25) < 1e-12);
    REQUIRE(e.state.has_value());
    // Conjugate-ray state: pure.
    CHECK(std::abs(((*e.state) * (*e.state)).trace().real() - 1.0) < 1e-9);
  }
}

TEST_CASE("validators catch broken objects") {
  DensityMatrix bad;
  bad.dim = 2;
  bad.m = CMat::Zero(2, 2);
  bad.m(0, 1) = 1;  // not Hermitian, trace 0
  CHECK(validate_density(bad).size() >= 2);

  Povm twice;
  twice.setting = "t";
  twice.elements.emplace_back("0", identity(2));
  twice.elements.emplace_back("1", identity(2));
  auto v = validate_povm(twice, 2);
  REQUIRE(v.size() == 1);
  CHECK(v[0].magnitude == doctest::Approx(1.0));
}

TEST_CASE("random strategies produce normalized Born probabilities") {
  bruteforce::Rng rng(61);
  for (int trial = 0; trial < 6; ++trial) {
    QuantumStrategy s;
    s.dim_a = 2;
    s.dim_b = 2;
    s.rho_ab = random_state(rng, 4);
    for (int m = 0; m < 2; ++m) {
      Povm p = random_povm(rng, 2, 2);
      p.setting = "m" + std::to_string(m);
      s.alice.push_back(std::move(p));
    }
    for (int v = 0; v < 2; ++v) {
      Povm p = random_povm(rng, 2, 2);
      p.setting = "v" + std::to_string(v);
      s.bob.push_back(std::move(p));
    }
    REQUIRE(validate_strategy(s).empty());
    CorrelationBox box = box_from_strategy(s);
    auto violations = validate_box(box);
    CHECK(violations.empty());
  }
}
