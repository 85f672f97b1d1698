#include "gradedrep/realization.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "gradedrep/linalg.hpp"

namespace gradedrep {

Realization::Realization(int n, int dim)
    : n_(n), dim_(dim), gens_(static_cast<std::size_t>(n) * n, Matrix::Zero(dim, dim)) {
  if (n < 1 || dim < 0) throw std::invalid_argument("Realization: bad sizes");
}

std::size_t Realization::slot(int k, int l) const {
  if (k < 1 || l < 1 || k > n_ || l > n_)
    throw std::out_of_range("generator label (" + std::to_string(k) + "," + std::to_string(l) + ")");
  return static_cast<std::size_t>(k - 1) * n_ + (l - 1);
}

Matrix Realization::image(const Matrix& x) const {
  if (x.rows() != n_ || x.cols() != n_) throw std::invalid_argument("Realization::image: expected n x n matrix");
  const Complex shift = x.trace() / static_cast<double>(n_);
  Matrix out = Matrix::Zero(dim_, dim_);
  for (int k = 1; k <= n_; ++k)
    for (int l = 1; l <= n_; ++l) {
      const Complex c = x(k - 1, l - 1) - (k == l ? shift : Complex(0.0));
      if (c != Complex(0.0)) out += c * gen(k, l);
    }
  return out;
}

lie::MatrixRep Realization::on_sl() const {
  lie::MatrixRep rep;
  for (const auto& b : lie::sl_basis_matrices(n_)) rep.mats.push_back(image(b));
  return rep;
}

double Realization::commutator_residual() const {
  double worst = 0.0;
  for (int i = 1; i <= n_; ++i)
    for (int j = 1; j <= n_; ++j)
      for (int k = 1; k <= n_; ++k)
        for (int l = 1; l <= n_; ++l) {
          Matrix expect = Matrix::Zero(dim_, dim_);
          if (j == k) expect += gen(i, l);
          if (l == i) expect -= gen(k, j);
          worst = std::max(worst, max_abs(commutator(gen(i, j), gen(k, l)) - expect));
        }
  return worst;
}

double Realization::transpose_residual() const {
  double worst = 0.0;
  for (int i = 1; i <= n_; ++i)
    for (int j = 1; j <= n_; ++j) worst = std::max(worst, max_abs(gen(i, j).transpose() - gen(j, i)));
  return worst;
}

}  // namespace gradedrep
