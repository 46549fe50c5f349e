#include "oneshot/polytope.hpp"

#include <algorithm>
#include <bitset>
#include <unordered_set>

#include "oneshot/errors.hpp"
#include "oneshot/simplex.hpp"

namespace oneshot {

namespace {

constexpr std::size_t kMaxHalfspaces = 192;
using TightSet = std::bitset<kMaxHalfspaces>;

struct Ray {
  RatVec dir;      // canonical primitive integer direction in nullspace coords
  TightSet tight;  // halfspace indices the ray lies on
};

std::string ray_key(const RatVec& v) {
  std::string k;
  for (const auto& q : v) {
    k += q.get_num().get_str();
    k += ':';
  }
  return k;
}

}  // namespace

std::vector<RatVec> enumerate_polytope_vertices(const RatMat& a, const RatVec& b,
                                                std::size_t cap) {
  if (a.empty()) throw InputError("polytope needs at least one constraint");
  std::size_t n = a[0].size();
  if (n + 1 > kMaxHalfspaces) throw InputError("polytope exceeds supported dimension");

  // Homogenize: cone {z >= 0 : [a | -b] z = 0}; vertices are rays with z_n > 0.
  RatMat m(a.size(), RatVec(n + 1, Rational(0)));
  for (std::size_t r = 0; r < a.size(); ++r) {
    for (std::size_t c = 0; c < n; ++c) m[r][c] = a[r][c];
    m[r][n] = -b[r];
  }
  RatMat null = rat_nullspace(std::move(m));  // (n+1) x dim
  std::size_t dim = null.empty() ? 0 : null[0].size();
  if (dim == 0) return {};

  // Halfspace i in nullspace coordinates is row i of `null`.
  std::vector<RatVec> halfspace(n + 1);
  for (std::size_t i = 0; i <= n; ++i) halfspace[i] = null[i];

  // Start from the full space: lineality basis, no rays.
  std::vector<RatVec> lines;
  for (std::size_t k = 0; k < dim; ++k) {
    RatVec e(dim, Rational(0));
    e[k] = 1;
    lines.push_back(std::move(e));
  }
  std::vector<Ray> rays;

  for (std::size_t h = 0; h <= n; ++h) {
    const RatVec& normal = halfspace[h];

    int hit = -1;
    for (std::size_t k = 0; k < lines.size(); ++k) {
      if (rat_dot(normal, lines[k]) != 0) {
        hit = static_cast<int>(k);
        break;
      }
    }

    if (hit >= 0) {
      RatVec l0 = lines[hit];
      lines.erase(lines.begin() + hit);
      Rational v0 = rat_dot(normal, l0);
      if (v0 < 0)
        for (auto& q : l0) q = -q;
      v0 = rat_dot(normal, l0);
      for (auto& l : lines) {
        Rational v = rat_dot(normal, l);
        if (v == 0) continue;
        Rational f = v / v0;
        for (std::size_t c = 0; c < dim; ++c) l[c] -= f * l0[c];
      }
      for (auto& r : rays) {
        Rational v = rat_dot(normal, r.dir);
        if (v != 0) {
          Rational f = v / v0;
          for (std::size_t c = 0; c < dim; ++c) r.dir[c] -= f * l0[c];
          r.dir = rat_scale_primitive(r.dir);
        }
        r.tight.set(h);
      }
      Ray born;
      born.dir = rat_scale_primitive(l0);
      for (std::size_t g = 0; g < h; ++g) born.tight.set(g);
      rays.push_back(std::move(born));
    } else {
      std::vector<Rational> val(rays.size());
      std::vector<std::size_t> pos, neg;
      for (std::size_t k = 0; k < rays.size(); ++k) {
        val[k] = rat_dot(normal, rays[k].dir);
        if (val[k] > 0)
          pos.push_back(k);
        else if (val[k] < 0)
          neg.push_back(k);
        else
          rays[k].tight.set(h);
      }
      if (neg.empty()) continue;

      std::vector<Ray> next;
      std::unordered_set<std::string> seen;
      for (std::size_t k = 0; k < rays.size(); ++k) {
        if (val[k] >= 0) {
          seen.insert(ray_key(rays[k].dir));
          next.push_back(rays[k]);
        }
      }
      for (std::size_t p : pos) {
        for (std::size_t q : neg) {
          TightSet common = rays[p].tight & rays[q].tight;
          // Adjacency (combinatorial test): no third ray is tight on all of `common`.
          bool adjacent = true;
          for (std::size_t r = 0; r < rays.size(); ++r) {
            if (r == p || r == q) continue;
            if ((common & ~rays[r].tight).none()) {
              adjacent = false;
              break;
            }
          }
          if (!adjacent) continue;
          RatVec dir(dim);
          for (std::size_t c = 0; c < dim; ++c)
            dir[c] = val[p] * rays[q].dir[c] - val[q] * rays[p].dir[c];
          dir = rat_scale_primitive(dir);
          if (!seen.insert(ray_key(dir)).second) continue;
          Ray born;
          born.dir = std::move(dir);
          born.tight = common;
          born.tight.set(h);
          next.push_back(std::move(born));
        }
      }
      rays = std::move(next);
      if (rays.size() > cap)
        throw CapExceeded("vertex enumeration exceeded cap", rays.size());
    }
  }

  if (!lines.empty())
    throw InputError("feasible region contains a line; not a polytope");

  std::vector<RatVec> vertices;
  for (const auto& r : rays) {
    RatVec z(n + 1, Rational(0));
    for (std::size_t c = 0; c <= n; ++c) z[c] = rat_dot(null[c], r.dir);
    if (z[n] == 0) throw InputError("feasible region unbounded; not a polytope");
    RatVec x(n);
    for (std::size_t c = 0; c < n; ++c) x[c] = z[c] / z[n];
    vertices.push_back(std::move(x));
  }
  std::sort(vertices.begin(), vertices.end(),
            [](const RatVec& u, const RatVec& v) {
              for (std::size_t i = 0; i < u.size(); ++i) {
                if (u[i] != v[i]) return u[i] < v[i];
              }
              return false;
            });
  vertices.erase(std::unique(vertices.begin(), vertices.end()), vertices.end());
  if (vertices.size() > cap) throw CapExceeded("vertex count exceeds cap", vertices.size());
  return vertices;
}

bool RationalPolytope::feasible() const {
  ExactLp lp(equalities, rhs);
  return lp.feasible();
}

std::vector<RatVec> RationalPolytope::vertices(std::size_t cap) const {
  return enumerate_polytope_vertices(equalities, rhs, cap);
}

Rational RationalPolytope::maximize(const RatVec& objective) const {
  ExactLp lp(equalities, rhs);
  auto r = lp.maximize(objective);
  if (r.status == ExactLp::Status::Infeasible) throw InputError("polytope is empty");
  if (r.status == ExactLp::Status::Unbounded) throw InputError("objective unbounded");
  return r.value;
}

}  // namespace oneshot
