#include "dcq/symexpr/matrix.hpp"
#include "dcq/symexpr/rational_function.hpp"

#include <cmath>

namespace dcq {

namespace {

using RM = std::vector<std::vector<rf::RatFun>>;

RM to_rm(const Matrix& m) {
  RM r(m.size());
  for (std::size_t i = 0; i < m.size(); ++i)
    for (const auto& e : m[i]) r[i].push_back(rf::to_ratfun(e));
  return r;
}

rf::RatFun det_rec(const RM& m, std::vector<std::size_t>& cols, std::size_t row) {
  if (row == m.size()) return rf::RatFun::constant(1);
  rf::RatFun acc;
  int sign = 1;
  for (std::size_t idx = 0; idx < cols.size(); ++idx) {
    std::size_t c = cols[idx];
    const rf::RatFun& e = m[row][c];
    if (!e.is_zero()) {
      cols.erase(cols.begin() + static_cast<std::ptrdiff_t>(idx));
      rf::RatFun minor = det_rec(m, cols, row + 1);
      cols.insert(cols.begin() + static_cast<std::ptrdiff_t>(idx), c);
      if (!minor.is_zero()) acc = sign > 0 ? acc + e * minor : acc - e * minor;
    }
    sign = -sign;
  }
  return acc;
}

rf::RatFun det_rm(const RM& m) {
  std::vector<std::size_t> cols(m.size());
  for (std::size_t i = 0; i < cols.size(); ++i) cols[i] = i;
  return det_rec(m, cols, 0);
}

Expr finish(const rf::RatFun& r, const SideRelations& rel) {
  Expr e = rf::to_expr(r);
  return rel.empty() ? e : reduce(e, rel);
}

}  // namespace

Matrix zero_matrix(std::size_t n) { return Matrix(n, std::vector<Expr>(n, Expr(0))); }

Matrix identity_matrix(std::size_t n) {
  Matrix m = zero_matrix(n);
  for (std::size_t i = 0; i < n; ++i) m[i][i] = Expr(1);
  return m;
}

Expr determinant(const Matrix& m, const SideRelations& rel) { return finish(det_rm(to_rm(m)), rel); }

Matrix inverse(const Matrix& m, const SideRelations& rel) {
  const std::size_t n = m.size();
  RM rm = to_rm(m);
  rf::RatFun det = det_rm(rm);
  if (det.is_zero()) throw DivisionByZeroError("matrix is singular");
  rf::RatFun inv_det = det.inverse();
  Matrix out = zero_matrix(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      // cofactor C_ji -> entry (i, j) of the adjugate
      RM minor;
      for (std::size_t r = 0; r < n; ++r) {
        if (r == j) continue;
        std::vector<rf::RatFun> row;
        for (std::size_t c = 0; c < n; ++c)
          if (c != i) row.push_back(rm[r][c]);
        minor.push_back(std::move(row));
      }
      rf::RatFun cof = det_rm(minor);
      if ((i + j) % 2) cof = -cof;
      out[i][j] = finish(cof * inv_det, rel);
    }
  }
  return out;
}

Matrix multiply(const Matrix& a, const Matrix& b, const SideRelations& rel) {
  Matrix out(a.size(), std::vector<Expr>(b.empty() ? 0 : b[0].size()));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < out[i].size(); ++j) {
      rf::RatFun acc;
      for (std::size_t k = 0; k < b.size(); ++k) acc = acc + rf::to_ratfun(a[i][k]) * rf::to_ratfun(b[k][j]);
      out[i][j] = finish(acc, rel);
    }
  return out;
}

NumMatrix eval_matrix(const Matrix& m, const Binding& b) {
  NumMatrix out(m.size());
  for (std::size_t i = 0; i < m.size(); ++i)
    for (const auto& e : m[i]) out[i].push_back(eval(e, b));
  return out;
}

NumMatrix multiply(const NumMatrix& a, const NumMatrix& b) {
  NumMatrix out(a.size(), std::vector<Complex>(b.empty() ? 0 : b[0].size()));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < out[i].size(); ++j)
      for (std::size_t k = 0; k < b.size(); ++k) out[i][j] += a[i][k] * b[k][j];
  return out;
}

NumMatrix inverse(const NumMatrix& m, double tol) {
  const std::size_t n = m.size();
  NumMatrix a = m;
  NumMatrix inv(n, std::vector<Complex>(n));
  for (std::size_t i = 0; i < n; ++i) inv[i][i] = 1.0;
  double scale = 0.0;
  for (const auto& row : m)
    for (const auto& v : row) scale = std::max(scale, std::abs(v));
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    for (std::size_t r = c + 1; r < n; ++r)
      if (std::abs(a[r][c]) > std::abs(a[piv][c])) piv = r;
    if (std::abs(a[piv][c]) <= tol * std::max(scale, 1.0)) throw DivisionByZeroError("numeric matrix is singular");
    std::swap(a[piv], a[c]);
    std::swap(inv[piv], inv[c]);
    Complex p = a[c][c];
    for (std::size_t j = 0; j < n; ++j) {
      a[c][j] /= p;
      inv[c][j] /= p;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == c || a[r][c] == Complex(0.0, 0.0)) continue;
      Complex f = a[r][c];
      for (std::size_t j = 0; j < n; ++j) {
        a[r][j] -= f * a[c][j];
        inv[r][j] -= f * inv[c][j];
      }
    }
  }
  return inv;
}

}  // namespace dcq
