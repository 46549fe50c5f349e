#include "oneshot/simplex.hpp"

#include <numeric>

#include "oneshot/errors.hpp"

namespace oneshot {

int rat_rank(RatMat a) {
  if (a.empty()) return 0;
  std::size_t rows = a.size(), cols = a[0].size();
  int rank = 0;
  std::size_t row = 0;
  for (std::size_t col = 0; col < cols && row < rows; ++col) {
    std::size_t piv = row;
    while (piv < rows && a[piv][col] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(a[row], a[piv]);
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == row || a[r][col] == 0) continue;
      Rational f = a[r][col] / a[row][col];
      for (std::size_t c = col; c < cols; ++c) a[r][c] -= f * a[row][c];
    }
    ++row;
    ++rank;
  }
  return rank;
}

RatMat rat_nullspace(RatMat a) {
  if (a.empty()) return {};
  std::size_t rows = a.size(), cols = a[0].size();
  std::vector<int> pivot_col_of_row;
  std::vector<bool> is_pivot(cols, false);
  std::size_t row = 0;
  for (std::size_t col = 0; col < cols && row < rows; ++col) {
    std::size_t piv = row;
    while (piv < rows && a[piv][col] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(a[row], a[piv]);
    Rational d = a[row][col];
    for (std::size_t c = 0; c < cols; ++c) a[row][c] /= d;
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == row || a[r][col] == 0) continue;
      Rational f = a[r][col];
      for (std::size_t c = 0; c < cols; ++c) a[r][c] -= f * a[row][c];
    }
    pivot_col_of_row.push_back(static_cast<int>(col));
    is_pivot[col] = true;
    ++row;
  }
  RatMat basis;  // rows = cols of A; one column per free variable
  std::vector<int> free_cols;
  for (std::size_t c = 0; c < cols; ++c)
    if (!is_pivot[c]) free_cols.push_back(static_cast<int>(c));
  basis.assign(cols, RatVec(free_cols.size(), Rational(0)));
  for (std::size_t k = 0; k < free_cols.size(); ++k) {
    int fc = free_cols[k];
    basis[fc][k] = 1;
    for (std::size_t r = 0; r < pivot_col_of_row.size(); ++r)
      basis[pivot_col_of_row[r]][k] = -a[r][fc];
  }
  return basis;
}

namespace {

RatVec primitive_ints(const RatVec& v, bool normalize_sign) {
  mpz_class lcm_den = 1;
  for (const auto& q : v) lcm_den = lcm(lcm_den, q.get_den());
  std::vector<mpz_class> ints;
  ints.reserve(v.size());
  mpz_class g = 0;
  for (const auto& q : v) {
    mpz_class z = q.get_num() * (lcm_den / q.get_den());
    g = gcd(g, z);
    ints.push_back(z);
  }
  if (g == 0) return RatVec(v.size(), Rational(0));
  int sign = 1;
  if (normalize_sign) {
    for (const auto& z : ints) {
      if (z != 0) {
        sign = z > 0 ? 1 : -1;
        break;
      }
    }
  }
  RatVec out;
  out.reserve(v.size());
  for (const auto& z : ints) out.emplace_back(Rational(z / g * sign));
  return out;
}

}  // namespace

RatVec rat_canonical_ray(const RatVec& v) { return primitive_ints(v, true); }

RatVec rat_scale_primitive(const RatVec& v) { return primitive_ints(v, false); }

Rational rat_dot(const RatVec& a, const RatVec& b) {
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

ExactLp::ExactLp(RatMat a, RatVec b) {
  m_ = static_cast<int>(a.size());
  n_ = m_ ? static_cast<int>(a[0].size()) : 0;
  t_.assign(m_, RatVec(n_ + 1, Rational(0)));
  for (int i = 0; i < m_; ++i) {
    if (static_cast<int>(a[i].size()) != n_) throw InputError("ragged LP matrix");
    for (int j = 0; j < n_; ++j) t_[i][j] = a[i][j];
    t_[i][n_] = b[i];
    if (t_[i][n_] < 0)
      for (auto& q : t_[i]) q = -q;
  }
  cols_ = n_;
}

void ExactLp::pivot(int row, int col) {
  Rational d = t_[row][col];
  for (auto& q : t_[row]) q /= d;
  for (int r = 0; r < m_; ++r) {
    if (r == row || t_[r][col] == 0) continue;
    Rational f = t_[r][col];
    for (int c = 0; c <= cols_; ++c) t_[r][c] -= f * t_[row][c];
  }
  basis_[row] = col;
}

void ExactLp::run_phase1() {
  if (phase1_done_) return;
  phase1_done_ = true;

  // Artificial columns n_..n_+m_-1, rhs moves to the end.
  for (int i = 0; i < m_; ++i) {
    Rational rhs = t_[i][cols_];
    t_[i].resize(n_ + m_ + 1, Rational(0));
    t_[i][n_ + i] = 1;
    t_[i][n_ + m_] = rhs;
  }
  cols_ = n_ + m_;
  basis_.resize(m_);
  for (int i = 0; i < m_; ++i) basis_[i] = n_ + i;

  // Maximize -(sum of artificials) with Bland's rule.
  auto reduced = [&](int j) {
    Rational z = 0;
    for (int i = 0; i < m_; ++i)
      if (basis_[i] >= n_) z += t_[i][j];
    if (j >= n_) z -= 1;
    return z;  // z_j - c_j for c = -sum(artificials), negated convention below
  };
  while (true) {
    int enter = -1;
    for (int j = 0; j < cols_; ++j) {
      if (reduced(j) > 0 && (j >= n_ ? false : true)) { /* artificials never re-enter */
        enter = j;
        break;
      }
    }
    if (enter == -1) break;
    int leave = -1;
    Rational best;
    for (int i = 0; i < m_; ++i) {
      if (t_[i][enter] <= 0) continue;
      Rational ratio = t_[i][cols_] / t_[i][enter];
      if (leave == -1 || ratio < best || (ratio == best && basis_[i] < basis_[leave])) {
        best = ratio;
        leave = i;
      }
    }
    if (leave == -1) break;  // cannot happen in phase 1
    pivot(leave, enter);
  }

  Rational infeas = 0;
  for (int i = 0; i < m_; ++i)
    if (basis_[i] >= n_) infeas += t_[i][cols_];
  if (infeas != 0) {
    feasible_ = false;
    return;
  }

  // Drive remaining (degenerate) artificials out; drop redundant rows.
  for (int i = m_ - 1; i >= 0; --i) {
    if (basis_[i] < n_) continue;
    int col = -1;
    for (int j = 0; j < n_; ++j) {
      if (t_[i][j] != 0) {
        col = j;
        break;
      }
    }
    if (col >= 0) {
      pivot(i, col);
    } else {
      t_.erase(t_.begin() + i);
      basis_.erase(basis_.begin() + i);
      --m_;
    }
  }

  // Truncate artificial columns.
  for (int i = 0; i < m_; ++i) {
    t_[i][n_] = t_[i][cols_];
    t_[i].resize(n_ + 1);
  }
  cols_ = n_;
  feasible_ = true;
}

bool ExactLp::feasible() {
  run_phase1();
  return feasible_;
}

ExactLp::Result ExactLp::maximize(const RatVec& c) {
  if (static_cast<int>(c.size()) != n_) throw InputError("objective length mismatch");
  run_phase1();
  if (!feasible_) return {Status::Infeasible, Rational(0), {}};

  auto zrow = [&](int j) -> Rational {
    Rational z = 0;
    for (int i = 0; i < m_; ++i) {
      if (t_[i][j] == 0) continue;
      z += c[basis_[i]] * t_[i][j];
    }
    return z - c[j];
  };

  while (true) {
    int enter = -1;  // Bland: smallest improving index
    for (int j = 0; j < n_; ++j) {
      if (zrow(j) < 0) {
        enter = j;
        break;
      }
    }
    if (enter == -1) break;
    int leave = -1;
    Rational best;
    for (int i = 0; i < m_; ++i) {
      if (t_[i][enter] <= 0) continue;
      Rational ratio = t_[i][n_] / t_[i][enter];
      if (leave == -1 || ratio < best || (ratio == best && basis_[i] < basis_[leave])) {
        best = ratio;
        leave = i;
      }
    }
    if (leave == -1) return {Status::Unbounded, Rational(0), {}};
    pivot(leave, enter);
  }

  Result res;
  res.status = Status::Optimal;
  res.x.assign(n_, Rational(0));
  for (int i = 0; i < m_; ++i) res.x[basis_[i]] = t_[i][n_];
  res.value = rat_dot(c, res.x);
  return res;
}

}  // namespace oneshot
