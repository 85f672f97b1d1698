#include "gradedrep/simulation.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>
#include <stdexcept>

#include "gradedrep/linalg.hpp"

namespace gradedrep::sim {

namespace {

int eta(int s) { return s % 2; }

// e^{iπq} for rational q, exact at multiples of 1/2.
Complex exp_i_pi(const Rational& q) {
  // Reduce into [0, 2).
  const std::int64_t num = q.numerator(), den = q.denominator();
  const std::int64_t two_den = 2 * den;
  const std::int64_t r = ((num % two_den) + two_den) % two_den;
  if ((2 * r) % den == 0) {
    static constexpr Complex quarter[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
    return quarter[(2 * r) / den];
  }
  const double angle = std::numbers::pi * static_cast<double>(r) / static_cast<double>(den);
  return {std::cos(angle), std::sin(angle)};
}

// Representative of q modulo 2 in (−1, 1].
Rational wrap_mod2(Rational q) {
  const auto num = q.numerator(), den = q.denominator();
  const std::int64_t two_den = 2 * den;
  std::int64_t r = ((num % two_den) + two_den) % two_den;
  if (r > den) r -= two_den;
  return Rational(r, den);
}

}  // namespace

Matrix Automorphism::apply(const Matrix& x) const {
  if (x.rows() != n() || x.cols() != n()) throw std::invalid_argument("automorphism: size mismatch");
  const Matrix a_inv = a.fullPivLu().inverse();
  switch (kind) {
    case Kind::Inner: return a * x * a_inv;
    case Kind::OuterComposed: return -(a * x.transpose() * a_inv);
  }
  return x;
}

Matrix Automorphism::on_sl() const {
  const auto basis = lie::sl_basis_matrices(n());
  const auto k = static_cast<Eigen::Index>(basis.size());
  Matrix g(k, k);
  for (Eigen::Index i = 0; i < k; ++i) g.col(i) = lie::sl_coordinates(apply(basis[i]));
  return g;
}

double Automorphism::order_residual() const {
  const Matrix g = on_sl();
  return max_abs(matrix_power(g, order) - Matrix::Identity(g.rows(), g.cols()));
}

Automorphism auto_inner(int n, int s) {
  if (n < 2) throw std::invalid_argument("auto_inner: n must be >= 2");
  if (s < 0 || s > n / 2) throw std::invalid_argument("auto_inner: s must lie in [0, n/2]");
  Automorphism g;
  g.kind = Automorphism::Kind::Inner;
  g.a = Matrix::Identity(n, n);
  for (int k = n - s; k < n; ++k) g.a(k, k) = -1.0;
  if (eta(s)) g.scale = std::polar(1.0, std::numbers::pi / n);
  g.order = s == 0 ? 1 : 2;
  return g;
}

Automorphism auto_outer(int n) {
  if (n < 2) throw std::invalid_argument("auto_outer: n must be >= 2");
  Automorphism g;
  g.kind = Automorphism::Kind::OuterComposed;
  g.a = Matrix::Identity(n, n);
  g.order = 2;
  return g;
}

lie::Grading grading_from_automorphism(const lie::LieAlgebra& a, const Automorphism& g, double tol) {
  const int n = g.n();
  if (a.dim() != n * n - 1) throw std::invalid_argument("grading_from_automorphism: algebra is not sl(n)");
  if (g.order < 1) throw std::invalid_argument("grading_from_automorphism: order must be positive");
  const Matrix action = g.on_sl();
  if (max_abs(matrix_power(action, g.order) - Matrix::Identity(a.dim(), a.dim())) > tol)
    throw std::invalid_argument("automorphism is not diagonalizable with eigenvalues of order " +
                                std::to_string(g.order));
  lie::Grading out{AbelianGroup::cyclic(g.order), {}};
  Eigen::Index total = 0;
  for (int label = 0; label < g.order; ++label) {
    Matrix basis = canonical_basis(root_of_unity_projector(action, g.order, label), tol);
    if (basis.cols() == 0) continue;
    total += basis.cols();
    out.parts.emplace(out.group.element(label), std::move(basis));
  }
  if (total != a.dim()) throw std::invalid_argument("automorphism eigenspaces do not span the algebra");
  return out;
}

std::string to_string(SimulationMatrix::Kind kind) {
  switch (kind) {
    case SimulationMatrix::Kind::Diagonal: return "diagonal";
    case SimulationMatrix::Kind::SignedPermutation: return "signed_permutation";
    case SimulationMatrix::Kind::Dense: return "dense";
  }
  return "dense";
}

Matrix rep_of_xns(const gt::HighestWeight& hw, int s) {
  const int n = hw.n();
  if (s < 0 || s > n / 2) throw std::invalid_argument("rep_of_xns: s must lie in [0, n/2]");
  const auto basis = gt::enumerate_patterns(hw);
  const auto d = static_cast<Eigen::Index>(basis.size());
  Matrix out = Matrix::Zero(d, d);
  if (s == 0) return out;
  const int e = eta(s);
  for (Eigen::Index a = 0; a < d; ++a) {
    const auto& p = basis[a];
    Rational v(e * gt::row_sum(p, n), n);
    for (int k = 1; k <= s - 1; ++k) v += 2 * (k % 2 ? 1 : -1) * gt::row_sum(p, n - s + k);
    v -= gt::row_sum(p, n - s);
    v -= (e ? -1 : 1) * gt::row_sum(p, n);
    out(a, a) = Complex(0.0, std::numbers::pi * static_cast<double>(v.numerator()) / static_cast<double>(v.denominator()));
  }
  return out;
}

SimulationMatrix simulation_inner(const gt::HighestWeight& hw, int s) {
  const int n = hw.n();
  if (s < 0 || s > n / 2) throw std::invalid_argument("simulation_inner: s must lie in [0, n/2]");
  const auto basis = gt::enumerate_patterns(hw);
  const auto d = static_cast<Eigen::Index>(basis.size());
  SimulationMatrix out{Matrix::Identity(d, d), s == 0 ? 1 : 2, SimulationMatrix::Kind::Diagonal};
  if (s == 0) return out;

  std::vector<Rational> phase(d);
  for (Eigen::Index a = 0; a < d; ++a)
    phase[a] = Rational((eta(s) - n) * gt::row_sum(basis[a], n), n) - gt::row_sum(basis[a], n - s);
  // R² = e^{2iπθ(m)} is one scalar on an irreducible space; divide by its
  // principal square root.
  const Rational shift = wrap_mod2(2 * phase[0]) / 2;
  for (Eigen::Index a = 0; a < d; ++a) out.r(a, a) = exp_i_pi(phase[a] - shift);
  return out;
}

gt::HighestWeight contragredient_weight(const gt::HighestWeight& hw) {
  const int n = hw.n();
  std::vector<int> m(n);
  for (int i = 0; i < n; ++i) m[i] = hw[0] - hw[n - 1 - i];
  return gt::HighestWeight(std::move(m));
}

bool is_self_contragredient(const gt::HighestWeight& hw) { return contragredient_weight(hw) == hw; }

gt::Pattern pattern_conjugate(const gt::Pattern& p) {
  const int n = p.n();
  const int top = p.at(1, n);
  std::vector<std::vector<int>> rows;
  for (int j = n; j >= 1; --j) {
    std::vector<int> row(j);
    for (int i = 1; i <= j; ++i) row[i - 1] = top - p.at(j - i + 1, j);
    rows.push_back(std::move(row));
  }
  return gt::Pattern(std::move(rows));
}

Matrix contragredient_intertwiner(const gt::HighestWeight& hw) {
  const auto source = gt::enumerate_patterns(hw);
  const auto target = gt::enumerate_patterns(contragredient_weight(hw));
  if (source.size() != target.size()) throw std::logic_error("contragredient dimension mismatch");
  const auto d = static_cast<Eigen::Index>(source.size());
  Matrix j = Matrix::Zero(d, d);
  for (Eigen::Index a = 0; a < d; ++a) {
    const auto image = pattern_conjugate(source[a]);
    auto it = std::lower_bound(target.begin(), target.end(), image);
    if (it == target.end() || *it != image) throw std::logic_error("conjugate pattern " + image.str() + " invalid");
    j(it - target.begin(), a) = source[a].entry_sum() % 2 ? -1.0 : 1.0;
  }
  return j;
}

SimulationMatrix j_matrix(const gt::HighestWeight& hw) {
  if (!is_self_contragredient(hw))
    throw std::invalid_argument("highest weight " + hw.str() + " is not self-contragredient");
  SimulationMatrix out{contragredient_intertwiner(hw), 2, SimulationMatrix::Kind::SignedPermutation};
  const auto d = out.r.rows();
  if (d > 0 && (out.r * out.r)(0, 0).real() < 0) {
    out.r *= Complex(0.0, 1.0);
    out.kind = SimulationMatrix::Kind::Dense;
  }
  return out;
}

DoubledRep doubled_rep(const gt::HighestWeight& hw) {
  const auto base = gt::build_representation(hw);
  const int n = hw.n();
  const int d = base.dim();
  Realization rep(n, 2 * d);
  for (int k = 1; k <= n; ++k)
    for (int l = 1; l <= n; ++l) {
      Matrix& g = rep.gen(k, l);
      g.topLeftCorner(d, d) = base.gens.gen(k, l);
      g.bottomRightCorner(d, d) = -base.gens.gen(k, l).transpose();
    }
  Matrix swap = Matrix::Zero(2 * d, 2 * d);
  swap.topRightCorner(d, d) = Matrix::Identity(d, d);
  swap.bottomLeftCorner(d, d) = Matrix::Identity(d, d);
  return {std::move(rep), {std::move(swap), 2, SimulationMatrix::Kind::SignedPermutation}};
}

Report verify_simulation(const Realization& rep, const Automorphism& g, const SimulationMatrix& r, double tol) {
  if (rep.n() != g.n()) throw std::invalid_argument("verify_simulation: algebra size mismatch");
  if (r.dim() != rep.dim() || r.r.cols() != r.r.rows())
    throw std::invalid_argument("verify_simulation: simulation matrix size mismatch");
  if (r.dim() > 0 && numerical_rank(r.r, tol) < r.dim())
    throw std::invalid_argument("verify_simulation: simulation matrix is singular");
  Report report;
  const Matrix r_inv = r.r.fullPivLu().inverse();
  const auto names = lie::sl_algebra(rep.n()).basis_names();
  const auto basis = lie::sl_basis_matrices(rep.n());
  for (std::size_t i = 0; i < basis.size(); ++i) {
    const double res = max_abs(rep.image(g.apply(basis[i])) - r.r * rep.image(basis[i]) * r_inv);
    report.note(res, tol, "conjugation fails on " + names[i]);
  }
  const double power = max_abs(matrix_power(r.r, r.order) - Matrix::Identity(r.dim(), r.dim()));
  report.note(power, tol, "R^" + std::to_string(r.order) + " != Id");
  return report;
}

lie::Grading decompose_rep_space(const SimulationMatrix& r, double tol) {
  const auto d = r.r.rows();
  if (r.order < 1) throw std::invalid_argument("decompose_rep_space: order must be positive");
  if (max_abs(matrix_power(r.r, r.order) - Matrix::Identity(d, d)) > tol)
    throw std::invalid_argument("decompose_rep_space: R^order != Id");
  lie::Grading out{AbelianGroup::cyclic(r.order), {}};
  Eigen::Index total = 0;
  for (int label = 0; label < r.order; ++label) {
    Matrix basis = canonical_basis(root_of_unity_projector(r.r, r.order, label), tol);
    if (basis.cols() == 0) continue;
    total += basis.cols();
    out.parts.emplace(out.group.element(label), std::move(basis));
  }
  if (total != d) throw std::logic_error("decompose_rep_space: eigenspaces do not span (defective R)");
  return out;
}

Report check_compatibility(const lie::MatrixRep& rep, const lie::Grading& grading, const lie::Grading& vspace,
                           double tol) {
  if (!(grading.group == vspace.group)) throw std::invalid_argument("check_compatibility: group mismatch");
  Report report;
  const int d = rep.dim();
  std::map<GroupElement, Span> spans;
  for (int idx = 0; idx < vspace.group.size(); ++idx) {
    const auto g = vspace.group.element(idx);
    Matrix part = vspace.part(g);
    if (part.cols() == 0) part = Matrix(d, 0);
    spans.emplace(g, Span(part, tol));
  }
  for (const auto& [gi, xi] : grading.parts) {
    std::vector<Matrix> images;
    for (Eigen::Index c = 0; c < xi.cols(); ++c) images.push_back(rep.image(xi.col(c)));
    for (const auto& [gj, vj] : vspace.parts) {
      const auto target = grading.group.add(gi, gj);
      double worst = 0.0;
      for (const auto& m : images)
        for (Eigen::Index c = 0; c < vj.cols(); ++c) worst = std::max(worst, spans.at(target).residual(m * vj.col(c)));
      report.note(worst, tol, "r(L_" + gi.label() + ") V_" + gj.label() + " not in V_" + target.label());
    }
  }
  return report;
}

std::optional<lie::Grading> search_compatible_split(const lie::MatrixRep& rep, const lie::Grading& grading,
                                                    double tol) {
  const int d = rep.dim();
  if (d > 6) throw std::invalid_argument("search_compatible_split: only for d <= 6");
  const auto& group = grading.group;
  const int g = group.size();

  // Coordinate splits.
  std::vector<int> labels(d, 0);
  while (true) {
    lie::Grading v{group, {}};
    for (int label = 0; label < g; ++label) {
      std::vector<int> cols;
      for (int i = 0; i < d; ++i)
        if (labels[i] == label) cols.push_back(i);
      if (cols.empty()) continue;
      Matrix b = Matrix::Zero(d, static_cast<Eigen::Index>(cols.size()));
      for (std::size_t c = 0; c < cols.size(); ++c) b(cols[c], c) = 1.0;
      v.parts.emplace(group.element(label), std::move(b));
    }
    if (check_compatibility(rep, grading, v, tol).ok) return v;
    int i = d - 1;
    while (i >= 0 && labels[i] == g - 1) labels[i--] = 0;
    if (i < 0) break;
    ++labels[i];
  }
  if (g != 2) return std::nullopt;

  // Eigensplits of signed-permutation involutions.
  std::vector<int> perm(d, -1);
  std::optional<lie::Grading> found;
  std::function<void(int)> pair_up = [&](int i) {
    if (found) return;
    while (i < d && perm[i] != -1) ++i;
    if (i == d) {
      for (int mask = 0; mask < (1 << d) && !found; ++mask) {
        Matrix s = Matrix::Zero(d, d);
        bool ok = true;
        for (int a = 0; a < d; ++a) {
          const int sa = (mask >> a) & 1, sb = (mask >> perm[a]) & 1;
          if (sa != sb) ok = false;
          s(perm[a], a) = sa ? -1.0 : 1.0;
        }
        if (!ok) continue;
        auto split = decompose_rep_space({s, 2, SimulationMatrix::Kind::SignedPermutation}, tol);
        for (int flip = 0; flip < 2 && !found; ++flip) {
          lie::Grading v{group, {}};
          for (const auto& [label, basis] : split.parts) {
            GroupElement key = label;
            if (flip) key.residues[0] = 1 - key.residues[0];
            v.parts.emplace(key, basis);
          }
          if (check_compatibility(rep, grading, v, tol).ok) found = std::move(v);
        }
      }
      return;
    }
    perm[i] = i;
    pair_up(i + 1);
    perm[i] = -1;
    for (int j = i + 1; j < d && !found; ++j) {
      if (perm[j] != -1) continue;
      perm[i] = j;
      perm[j] = i;
      pair_up(i + 1);
      perm[i] = perm[j] = -1;
    }
  };
  if (group.orders().size() == 1) pair_up(0);
  return found;
}

}  // namespace gradedrep::sim
