#pragma once

#include <vector>

#include "gradedrep/common.hpp"
#include "gradedrep/lie_algebra.hpp"

namespace gradedrep {

/// Matrices r(E_kl), 1 ≤ k,l ≤ n, realizing gl(n) (and hence sl(n)) on a
/// d-dimensional space. Labels are 1-based to match E_kl.
class Realization {
 public:
  Realization(int n, int dim);

  int n() const { return n_; }
  int dim() const { return dim_; }

  Matrix& gen(int k, int l) { return gens_.at(slot(k, l)); }
  const Matrix& gen(int k, int l) const { return gens_.at(slot(k, l)); }

  /// r(X) for the traceless part of X: Σ_kl (X − tr(X)/n·I)_kl r(E_kl).
  Matrix image(const Matrix& x) const;

  /// The realization restricted to the sl_algebra(n) basis.
  lie::MatrixRep on_sl() const;

  /// max over label pairs of ‖[r(E_ij), r(E_kl)] − δ_jk r(E_il) + δ_li r(E_kj)‖∞.
  double commutator_residual() const;
  /// max over labels of ‖r(E_ij)ᵀ − r(E_ji)‖∞.
  double transpose_residual() const;

 private:
  std::size_t slot(int k, int l) const;

  int n_;
  int dim_;
  std::vector<Matrix> gens_;
};

}  // namespace gradedrep
