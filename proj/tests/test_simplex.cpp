#include <doctest.h>

#include "oneshot/bruteforce.hpp"
#include "oneshot/errors.hpp"
#include "oneshot/simplex.hpp"

using namespace oneshot;

namespace {

Rational q(long n, long d = 1) { return make_rational(n, d); }

}  // namespace

TEST_CASE("simple equality LP") {
  // x + y = 1, x,y >= 0; max 2x + y = 2 at (1,0).
  ExactLp lp({{q(1), q(1)}}, {q(1)});
  auto r = lp.maximize({q(2), q(1)});
  REQUIRE(r.status == ExactLp::Status::Optimal);
  CHECK(r.value == q(2));
  CHECK(r.x == RatVec{q(1), q(0)});
}

TEST_CASE("warm restart across objectives") {
  ExactLp lp({{q(1), q(1), q(0)}, {q(0), q(1), q(1)}}, {q(1), q(1)});
  auto r1 = lp.maximize({q(1), q(0), q(0)});
  CHECK(r1.value == q(1));
  auto r2 = lp.maximize({q(0), q(1), q(0)});
  CHECK(r2.value == q(1));
  auto r3 = lp.maximize({q(-1), q(0), q(-1)});
  CHECK(r3.value == q(0));  // y = 1 covers both rows
}

TEST_CASE("infeasible system detected") {
  // x = 1 and x = 2 simultaneously.
  ExactLp lp({{q(1)}, {q(1)}}, {q(1), q(2)});
  CHECK_FALSE(lp.feasible());
  CHECK(lp.maximize({q(1)}).status == ExactLp::Status::Infeasible);
}

TEST_CASE("unbounded objective detected") {
  // x - y = 0: the ray x = y grows forever.
  ExactLp lp({{q(1), q(-1)}}, {q(0)});
  CHECK(lp.maximize({q(1), q(0)}).status == ExactLp::Status::Unbounded);
}

TEST_CASE("redundant rows survive phase 1") {
  ExactLp lp({{q(1), q(1)}, {q(2), q(2)}}, {q(1), q(2)});
  auto r = lp.maximize({q(1), q(0)});
  REQUIRE(r.status == ExactLp::Status::Optimal);
  CHECK(r.value == q(1));
}

TEST_CASE("exact values on a fractional optimum") {
  // x + 2y = 1, 3x + y = 1 -> x = 1/5, y = 2/5.
  ExactLp lp({{q(1), q(2)}, {q(3), q(1)}}, {q(1), q(1)});
  auto r = lp.maximize({q(1), q(1)});
  REQUIRE(r.status == ExactLp::Status::Optimal);
  CHECK(r.x == RatVec{q(1, 5), q(2, 5)});
  CHECK(r.value == q(3, 5));
}

TEST_CASE("rank and nullspace") {
  RatMat a = {{q(1), q(2), q(3)}, {q(2), q(4), q(6)}, {q(0), q(1), q(1)}};
  CHECK(rat_rank(a) == 2);
  RatMat null = rat_nullspace(a);
  REQUIRE(null.size() == 3);
  REQUIRE(null[0].size() == 1);
  // The kernel vector annihilates every row.
  for (const auto& row : a) {
    Rational dot = 0;
    for (int i = 0; i < 3; ++i) dot += row[i] * null[i][0];
    CHECK(dot == 0);
  }
}

TEST_CASE("canonical ray scaling") {
  RatVec v = {q(-8), q(-4), q(20)};
  CHECK(rat_canonical_ray(v) == RatVec{q(2), q(1), q(-5)});
  RatVec w = {q(1, 2), q(-1, 3)};
  CHECK(rat_canonical_ray(w) == RatVec{q(3), q(-2)});
  CHECK(rat_scale_primitive(v) == RatVec{q(-2), q(-1), q(5)});
}
