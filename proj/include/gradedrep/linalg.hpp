#pragma once

#include <span>

#include "gradedrep/common.hpp"

namespace gradedrep {

/// Largest entry modulus; 0 for an empty matrix.
double max_abs(const Matrix& m);

inline Matrix commutator(const Matrix& a, const Matrix& b) { return a * b - b * a; }

/// Numerical rank via singular values, relative to max(1, largest singular value).
Eigen::Index numerical_rank(const Matrix& m, double tol);

/// Basis of the column span of `m` in reduced row-echelon form (returned as
/// columns). Deterministic, and reproduces coordinate vectors whenever the
/// span is coordinate-aligned.
Matrix canonical_basis(const Matrix& m, double tol);

/// Horizontal concatenation of column blocks with a common row count.
Matrix hstack(std::span<const Matrix> blocks, Eigen::Index rows);

Matrix matrix_power(const Matrix& m, int k);

/// Orthonormal frame of a subspace, used for membership tests.
class Span {
 public:
  Span(const Matrix& basis, double tol);

  Eigen::Index dim() const { return q_.cols(); }
  Eigen::Index ambient_dim() const { return q_.rows(); }

  /// ‖v − P v‖∞ where P is the orthogonal projector onto the span.
  double residual(const Vector& v) const;

 private:
  Matrix q_;
};

/// Spectral projector of an operator with `r^order = Id` onto the eigenvalue
/// exp(2πi·label/order).
Matrix root_of_unity_projector(const Matrix& r, int order, int label);

}  // namespace gradedrep
