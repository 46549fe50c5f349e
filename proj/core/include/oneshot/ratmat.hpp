#pragma once

#include <vector>

#include "oneshot/rational.hpp"

namespace oneshot {

using RatVec = std::vector<Rational>;
using RatMat = std::vector<RatVec>;  // row-major

int rat_rank(RatMat a);

// Columns of the returned matrix span ker(a). Deterministic: Gauss-Jordan
// with first-nonzero pivoting, free variables in ascending column order.
RatMat rat_nullspace(RatMat a);

// Scales a rational vector to a primitive integer vector (gcd of entries 1)
// with the first nonzero entry positive. Zero vector stays zero.
RatVec rat_canonical_ray(const RatVec& v);

// Same scaling but strictly positive factor; the direction is preserved.
RatVec rat_scale_primitive(const RatVec& v);

Rational rat_dot(const RatVec& a, const RatVec& b);

}  // namespace oneshot
