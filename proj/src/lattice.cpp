#include "knspec/lattice.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

namespace knspec {

IMat identity_mat(std::size_t n) {
  IMat m(n, IVec(n, 0));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

IMat mat_mul(const IMat& a, const IMat& b) {
  if (a.empty()) return {};
  std::size_t r = a.size(), k = a[0].size(), c = b.empty() ? 0 : b[0].size();
  assert(b.size() == k);
  IMat out(r, IVec(c, 0));
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < k; ++j) {
      if (a[i][j] == 0) continue;
      for (std::size_t l = 0; l < c; ++l) out[i][l] += a[i][j] * b[j][l];
    }
  return out;
}

IVec vec_mat(const IVec& v, const IMat& m) {
  std::size_t r = m.size(), c = r ? m[0].size() : 0;
  assert(v.size() == r);
  IVec out(c, 0);
  for (std::size_t i = 0; i < r; ++i) {
    if (v[i] == 0) continue;
    for (std::size_t j = 0; j < c; ++j) out[j] += v[i] * m[i][j];
  }
  return out;
}

namespace {

BigInt floor_div(const BigInt& a, const BigInt& b) {
  BigInt q = a / b, r = a % b;
  if (r != 0 && ((r < 0) != (b < 0))) --q;
  return q;
}

} // namespace

IMat hnf_rows(IMat m) {
  if (m.empty()) return {};
  const std::size_t cols = m[0].size();
  std::size_t row = 0;
  std::vector<std::size_t> pivot_col;
  for (std::size_t col = 0; col < cols && row < m.size(); ++col) {
    // gcd out the column below `row` by repeated row combination
    while (true) {
      std::size_t best = m.size();
      for (std::size_t i = row; i < m.size(); ++i)
        if (m[i][col] != 0 &&
            (best == m.size() || abs(m[i][col]) < abs(m[best][col])))
          best = i;
      if (best == m.size()) break; // column clear
      std::swap(m[row], m[best]);
      bool clean = true;
      for (std::size_t i = row + 1; i < m.size(); ++i) {
        if (m[i][col] == 0) continue;
        BigInt q = floor_div(m[i][col], m[row][col]);
        for (std::size_t j = 0; j < cols; ++j) m[i][j] -= q * m[row][j];
        if (m[i][col] != 0) clean = false;
      }
      if (clean) break;
    }
    if (row < m.size() && m[row][col] != 0) {
      if (m[row][col] < 0)
        for (std::size_t j = 0; j < cols; ++j) m[row][j] = -m[row][j];
      // reduce entries above the pivot into [0, pivot)
      for (std::size_t i = 0; i < row; ++i) {
        BigInt q = floor_div(m[i][col], m[row][col]);
        if (q != 0)
          for (std::size_t j = 0; j < cols; ++j) m[i][j] -= q * m[row][j];
      }
      pivot_col.push_back(col);
      ++row;
    }
  }
  m.resize(row);
  return m;
}

bool in_rowspace(const IMat& hnf, IVec v) {
  for (const auto& r : hnf) {
    std::size_t p = 0;
    while (p < r.size() && r[p] == 0) ++p;
    if (p == r.size()) continue;
    BigInt q = floor_div(v[p], r[p]);
    if (q != 0)
      for (std::size_t j = 0; j < v.size(); ++j) v[j] -= q * r[j];
  }
  for (const auto& x : v)
    if (x != 0) return false;
  return true;
}

bool same_lattice(const IMat& a, const IMat& b) {
  return hnf_rows(a) == hnf_rows(b);
}

std::size_t lattice_rank(const IMat& rows) { return hnf_rows(rows).size(); }

SmithResult smith_normal_form(const IMat& a, std::size_t rows, std::size_t cols) {
  SmithResult res;
  IMat m = a;
  m.resize(rows, IVec(cols, 0));
  for (auto& r : m) r.resize(cols, 0);
  res.P = identity_mat(rows);
  res.Q = identity_mat(cols);
  res.Qinv = identity_mat(cols);

  auto row_sub = [&](std::size_t dst, std::size_t src, const BigInt& q) {
    for (std::size_t j = 0; j < cols; ++j) m[dst][j] -= q * m[src][j];
    for (std::size_t j = 0; j < rows; ++j) res.P[dst][j] -= q * res.P[src][j];
  };
  auto col_sub = [&](std::size_t dst, std::size_t src, const BigInt& q) {
    for (std::size_t i = 0; i < rows; ++i) m[i][dst] -= q * m[i][src];
    for (std::size_t i = 0; i < cols; ++i) res.Q[i][dst] -= q * res.Q[i][src];
    // (Q * Qinv == I) maintained: column op on Q pairs with row op on Qinv
    for (std::size_t j = 0; j < cols; ++j) res.Qinv[src][j] += q * res.Qinv[dst][j];
  };
  auto row_swap = [&](std::size_t i, std::size_t k) {
    std::swap(m[i], m[k]);
    std::swap(res.P[i], res.P[k]);
  };
  auto col_swap = [&](std::size_t j, std::size_t k) {
    for (std::size_t i = 0; i < rows; ++i) std::swap(m[i][j], m[i][k]);
    for (std::size_t i = 0; i < cols; ++i) std::swap(res.Q[i][j], res.Q[i][k]);
    std::swap(res.Qinv[j], res.Qinv[k]);
  };
  auto row_neg = [&](std::size_t i) {
    for (std::size_t j = 0; j < cols; ++j) m[i][j] = -m[i][j];
    for (std::size_t j = 0; j < rows; ++j) res.P[i][j] = -res.P[i][j];
  };

  const std::size_t nmin = std::min(rows, cols);
  for (std::size_t t = 0; t < nmin; ++t) {
    while (true) {
      // move a minimal nonzero entry of the trailing block to (t, t)
      std::size_t bi = rows, bj = cols;
      for (std::size_t i = t; i < rows; ++i)
        for (std::size_t j = t; j < cols; ++j)
          if (m[i][j] != 0 &&
              (bi == rows || abs(m[i][j]) < abs(m[bi][bj]))) {
            bi = i;
            bj = j;
          }
      if (bi == rows) break; // block is zero
      if (bi != t) row_swap(t, bi);
      if (bj != t) col_swap(t, bj);
      if (m[t][t] < 0) row_neg(t);

      bool again = false;
      for (std::size_t i = t + 1; i < rows; ++i)
        if (m[i][t] != 0) {
          row_sub(i, t, floor_div(m[i][t], m[t][t]));
          if (m[i][t] != 0) again = true;
        }
      for (std::size_t j = t + 1; j < cols; ++j)
        if (m[t][j] != 0) {
          col_sub(j, t, floor_div(m[t][j], m[t][t]));
          if (m[t][j] != 0) again = true;
        }
      if (again) continue;

      // enforce divisibility d_t | m[i][j]
      bool fixed = true;
      for (std::size_t i = t + 1; i < rows && fixed; ++i)
        for (std::size_t j = t + 1; j < cols && fixed; ++j)
          if (m[i][j] % m[t][t] != 0) {
            row_sub(t, i, BigInt(-1)); // adds row i into row t
            fixed = false;
          }
      if (fixed) break;
    }
  }

  res.diag.resize(nmin);
  for (std::size_t t = 0; t < nmin; ++t) res.diag[t] = m[t][t];
  return res;
}

IMat right_kernel(const IMat& a, std::size_t rows, std::size_t cols) {
  // Column-reduce A while tracking the column transform; kernel = columns of
  // the transform under the zero columns of the echelon form.
  IMat m = a;
  m.resize(rows, IVec(cols, 0));
  for (auto& r : m) r.resize(cols, 0);
  IMat q = identity_mat(cols);

  auto col_sub = [&](std::size_t dst, std::size_t src, const BigInt& f) {
    for (std::size_t i = 0; i < rows; ++i) m[i][dst] -= f * m[i][src];
    for (std::size_t i = 0; i < cols; ++i) q[i][dst] -= f * q[i][src];
  };
  auto col_swap = [&](std::size_t j, std::size_t k) {
    for (std::size_t i = 0; i < rows; ++i) std::swap(m[i][j], m[i][k]);
    for (std::size_t i = 0; i < cols; ++i) std::swap(q[i][j], q[i][k]);
  };

  std::size_t lead = 0;
  for (std::size_t row = 0; row < rows && lead < cols; ++row) {
    while (true) {
      std::size_t best = cols;
      for (std::size_t j = lead; j < cols; ++j)
        if (m[row][j] != 0 && (best == cols || abs(m[row][j]) < abs(m[row][best])))
          best = j;
      if (best == cols) break;
      if (best != lead) col_swap(lead, best);
      bool clean = true;
      for (std::size_t j = lead + 1; j < cols; ++j)
        if (m[row][j] != 0) {
          col_sub(j, lead, floor_div(m[row][j], m[row][lead]));
          if (m[row][j] != 0) clean = false;
        }
      if (clean) break;
    }
    if (lead < cols && m[row][lead] != 0) ++lead;
  }

  IMat kernel;
  for (std::size_t j = lead; j < cols; ++j) {
    IVec v(cols);
    for (std::size_t i = 0; i < cols; ++i) v[i] = q[i][j];
    kernel.push_back(std::move(v));
  }
  return kernel;
}

QuotientBasis lattice_quotient(const IMat& l_rows, const IMat& d_rows, std::size_t dim) {
  QuotientBasis out;
  IMat l_hnf = hnf_rows(l_rows);
  if (d_rows.empty()) {
    out.reps = l_hnf;
    out.rank = l_hnf.size();
    return out;
  }
  IMat d_hnf = hnf_rows(d_rows);
  const std::size_t r = d_hnf.size();

  SmithResult snf = smith_normal_form(d_hnf, r, dim);
  for (std::size_t t = 0; t < std::min(r, dim); ++t)
    if (snf.diag[t] != 1 && snf.diag[t] != 0)
      throw std::runtime_error("lattice_quotient: dependency lattice not saturated");

  // coordinates c = e * Q; D becomes the span of the first r unit vectors
  IMat projected;
  for (const auto& e : l_hnf) {
    IVec c = vec_mat(e, snf.Q);
    projected.push_back(IVec(c.begin() + r, c.end()));
  }
  IMat q_hnf = hnf_rows(projected);
  out.rank = q_hnf.size();

  for (const auto& g : q_hnf) {
    IVec c(dim, 0);
    for (std::size_t j = 0; j < dim - r; ++j) c[r + j] = g[j];
    IVec e = vec_mat(c, snf.Qinv);
    // canonical representative modulo D
    for (const auto& drow : d_hnf) {
      std::size_t p = 0;
      while (p < dim && drow[p] == 0) ++p;
      if (p == dim) continue;
      BigInt qq = floor_div(e[p], drow[p]);
      if (qq != 0)
        for (std::size_t j = 0; j < dim; ++j) e[j] -= qq * drow[j];
    }
    out.reps.push_back(std::move(e));
  }
  return out;
}

} // namespace knspec
