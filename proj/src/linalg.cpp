#include "gradedrep/linalg.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace gradedrep {

std::string to_string(const Rational& q) {
  if (q.denominator() == 1) return std::to_string(q.numerator());
  return std::to_string(q.numerator()) + "/" + std::to_string(q.denominator());
}

Rational parse_rational(const std::string& text) {
  try {
    auto slash = text.find('/');
    std::size_t used = 0;
    if (slash == std::string::npos) {
      auto num = std::stoll(text, &used);
      if (used != text.size()) throw std::invalid_argument(text);
      return Rational(num);
    }
    auto num_text = text.substr(0, slash);
    auto den_text = text.substr(slash + 1);
    auto num = std::stoll(num_text, &used);
    if (used != num_text.size()) throw std::invalid_argument(text);
    auto den = std::stoll(den_text, &used);
    if (used != den_text.size() || den == 0) throw std::invalid_argument(text);
    return Rational(num, den);
  } catch (const std::logic_error&) {
    throw std::invalid_argument("not a rational number: '" + text + "'");
  }
}

double max_abs(const Matrix& m) {
  if (m.size() == 0) return 0.0;
  return m.cwiseAbs().maxCoeff();
}

Eigen::Index numerical_rank(const Matrix& m, double tol) {
  if (m.size() == 0) return 0;
  Eigen::JacobiSVD<Matrix> svd(m);
  const auto& s = svd.singularValues();
  const double scale = std::max(1.0, s.size() ? s(0) : 0.0);
  Eigen::Index r = 0;
  for (Eigen::Index i = 0; i < s.size(); ++i)
    if (s(i) > tol * scale) ++r;
  return r;
}

Matrix canonical_basis(const Matrix& m, double tol) {
  // Row-reduce the transpose: its row space is the column space of m.
  Matrix a = m.transpose();
  const Eigen::Index rows = a.rows();
  const Eigen::Index cols = a.cols();
  Eigen::Index pivot_row = 0;
  for (Eigen::Index c = 0; c < cols && pivot_row < rows; ++c) {
    Eigen::Index best = pivot_row;
    double best_abs = 0.0;
    for (Eigen::Index r = pivot_row; r < rows; ++r) {
      if (std::abs(a(r, c)) > best_abs) {
        best_abs = std::abs(a(r, c));
        best = r;
      }
    }
    if (best_abs <= tol) {
      for (Eigen::Index r = pivot_row; r < rows; ++r) a(r, c) = 0.0;
      continue;
    }
    a.row(pivot_row).swap(a.row(best));
    a.row(pivot_row) /= a(pivot_row, c);
    a(pivot_row, c) = 1.0;
    for (Eigen::Index r = 0; r < rows; ++r) {
      if (r == pivot_row || a(r, c) == Complex(0.0)) continue;
      a.row(r) -= a(r, c) * a.row(pivot_row);
      a(r, c) = 0.0;
    }
    ++pivot_row;
  }
  return a.topRows(pivot_row).transpose();
}

Matrix hstack(std::span<const Matrix> blocks, Eigen::Index rows) {
  Eigen::Index cols = 0;
  for (const auto& b : blocks) {
    if (b.cols() > 0 && b.rows() != rows) throw std::invalid_argument("hstack: row count mismatch");
    cols += b.cols();
  }
  Matrix out(rows, cols);
  Eigen::Index at = 0;
  for (const auto& b : blocks) {
    if (b.cols() == 0) continue;
    out.middleCols(at, b.cols()) = b;
    at += b.cols();
  }
  return out;
}

Matrix matrix_power(const Matrix& m, int k) {
  Matrix out = Matrix::Identity(m.rows(), m.cols());
  for (int i = 0; i < k; ++i) out = out * m;
  return out;
}

Span::Span(const Matrix& basis, double tol) {
  if (basis.cols() == 0) {
    q_ = Matrix(basis.rows(), 0);
    return;
  }
  Eigen::JacobiSVD<Matrix> svd(basis, Eigen::ComputeThinU);
  const auto& s = svd.singularValues();
  const double scale = std::max(1.0, s(0));
  Eigen::Index r = 0;
  while (r < s.size() && s(r) > tol * scale) ++r;
  q_ = svd.matrixU().leftCols(r);
}

double Span::residual(const Vector& v) const {
  if (q_.cols() == 0) return v.size() ? v.cwiseAbs().maxCoeff() : 0.0;
  Vector rest = v - q_ * (q_.adjoint() * v);
  return rest.cwiseAbs().maxCoeff();
}

Matrix root_of_unity_projector(const Matrix& r, int order, int label) {
  const Eigen::Index d = r.rows();
  Matrix acc = Matrix::Zero(d, d);
  Matrix power = Matrix::Identity(d, d);
  for (int t = 0; t < order; ++t) {
    // λ^{-t} with λ = exp(2πi label / order); exact for the quarter turns.
    const int turn = ((-label * t) % order + order) % order;
    Complex w;
    if (4 * turn % order == 0) {
      static constexpr Complex quarter[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
      w = quarter[(4 * turn / order) % 4];
    } else {
      const double angle = 2.0 * std::numbers::pi * turn / order;
      w = Complex(std::cos(angle), std::sin(angle));
    }
    acc += w * power;
    power = power * r;
  }
  return acc / static_cast<double>(order);
}

}  // namespace gradedrep
