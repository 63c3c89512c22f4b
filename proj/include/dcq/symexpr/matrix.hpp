#pragma once

#include "dcq/symexpr/expr.hpp"

#include <vector>

namespace dcq {

using Matrix = std::vector<std::vector<Expr>>;
using NumMatrix = std::vector<std::vector<Complex>>;

Matrix zero_matrix(std::size_t n);
Matrix identity_matrix(std::size_t n);

/// Laplace expansion over the canonical form, then reduced by `rel`.
Expr determinant(const Matrix& m, const SideRelations& rel = {});
/// Adjugate over determinant, each entry reduced by `rel`.
/// Throws DivisionByZeroError when the determinant vanishes.
Matrix inverse(const Matrix& m, const SideRelations& rel = {});
Matrix multiply(const Matrix& a, const Matrix& b, const SideRelations& rel = {});

NumMatrix eval_matrix(const Matrix& m, const Binding& b);
NumMatrix multiply(const NumMatrix& a, const NumMatrix& b);
/// Gauss-Jordan with partial pivoting; throws DivisionByZeroError if singular.
NumMatrix inverse(const NumMatrix& m, double tol = 1e-13);

}  // namespace dcq
