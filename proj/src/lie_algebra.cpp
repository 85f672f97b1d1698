#include "gradedrep/lie_algebra.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>

#include "gradedrep/linalg.hpp"

namespace gradedrep::lie {

LieAlgebra::LieAlgebra(std::vector<std::string> basis_names)
    : dim_(static_cast<int>(basis_names.size())),
      names_(std::move(basis_names)),
      table_(static_cast<std::size_t>(dim_) * dim_) {
  if (dim_ < 1) throw std::invalid_argument("Lie algebra needs a non-empty basis");
}

void LieAlgebra::set(int i, int j, std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) { return a.index < b.index; });
  std::erase_if(terms, [](const Term& t) { return t.coeff == Complex(0.0); });
  std::vector<Term> neg = terms;
  for (auto& t : neg) t.coeff = -t.coeff;
  table_[i * dim_ + j] = std::move(terms);
  table_[j * dim_ + i] = std::move(neg);
}

LieAlgebra LieAlgebra::from_constants(std::vector<std::string> basis_names, std::span<const Constant> constants) {
  LieAlgebra alg(std::move(basis_names));
  const int k = alg.dim_;
  using Terms = std::map<int, Complex>;
  // Keyed by (min, max); entries given as (j, i) with i < j are negated.
  std::map<std::pair<int, int>, Terms> upper, lower;
  for (const auto& c : constants) {
    if (c.i < 0 || c.j < 0 || c.l < 0 || c.i >= k || c.j >= k || c.l >= k)
      throw std::invalid_argument("structure constant index out of range");
    if (c.i == c.j) {
      if (c.value != Complex(0.0)) throw std::invalid_argument("[e_i, e_i] must vanish");
      continue;
    }
    if (c.i < c.j)
      upper[{c.i, c.j}][c.l] += c.value;
    else
      lower[{c.j, c.i}][c.l] -= c.value;
  }
  auto prune = [](Terms t) {
    std::erase_if(t, [](const auto& kv) { return kv.second == Complex(0.0); });
    return t;
  };
  for (const auto& [key, terms] : lower) {
    auto it = upper.find(key);
    if (it == upper.end()) {
      upper.emplace(key, terms);
    } else if (prune(it->second) != prune(terms)) {
      throw std::invalid_argument("structure constants not antisymmetric at (" + std::to_string(key.first) + "," +
                                  std::to_string(key.second) + ")");
    }
  }
  for (const auto& [key, terms] : upper) {
    std::vector<Term> out;
    for (const auto& [l, v] : terms) out.push_back({l, v});
    alg.set(key.first, key.second, std::move(out));
  }
  return alg;
}

std::vector<LieAlgebra::Constant> LieAlgebra::constants() const {
  std::vector<Constant> out;
  for (int i = 0; i < dim_; ++i)
    for (int j = i + 1; j < dim_; ++j)
      for (const auto& t : structure(i, j)) out.push_back({i, j, t.index, t.coeff});
  return out;
}

Vector LieAlgebra::bracket(const Vector& x, const Vector& y) const {
  if (x.size() != dim_ || y.size() != dim_) throw std::invalid_argument("bracket: dimension mismatch");
  Vector out = Vector::Zero(dim_);
  for (int i = 0; i < dim_; ++i) {
    if (x(i) == Complex(0.0)) continue;
    for (int j = 0; j < dim_; ++j) {
      if (y(j) == Complex(0.0)) continue;
      const Complex w = x(i) * y(j);
      for (const auto& t : structure(i, j)) out(t.index) += w * t.coeff;
    }
  }
  return out;
}

Vector bracket(const Vector& x, const Vector& y, const LieAlgebra& a) { return a.bracket(x, y); }

Report check_jacobi(const LieAlgebra& a, double tol) {
  Report report;
  const int k = a.dim();
  std::vector<Vector> basis;
  for (int i = 0; i < k; ++i) basis.push_back(a.basis_vector(i));
  std::vector<Vector> br(static_cast<std::size_t>(k) * k);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) br[i * k + j] = a.bracket(basis[i], basis[j]);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j)
      for (int l = 0; l < k; ++l) {
        Vector s = a.bracket(basis[i], br[j * k + l]) + a.bracket(basis[j], br[l * k + i]) +
                   a.bracket(basis[l], br[i * k + j]);
        const double r = s.size() ? s.cwiseAbs().maxCoeff() : 0.0;
        report.note(r, tol,
                    "(" + a.basis_names()[i] + "," + a.basis_names()[j] + "," + a.basis_names()[l] + ")");
      }
  return report;
}

namespace {

Matrix elementary(int n, int k, int l) {
  Matrix e = Matrix::Zero(n, n);
  e(k, l) = 1.0;
  return e;
}

}  // namespace

std::vector<Matrix> sl_basis_matrices(int n) {
  if (n < 2) throw std::invalid_argument("sl(n) requires n >= 2");
  std::vector<Matrix> out;
  for (int k = 0; k < n; ++k)
    for (int l = k + 1; l < n; ++l) out.push_back(elementary(n, k, l));
  for (int k = 0; k + 1 < n; ++k) out.push_back(elementary(n, k, k) - elementary(n, k + 1, k + 1));
  for (int k = 0; k < n; ++k)
    for (int l = 0; l < k; ++l) out.push_back(elementary(n, k, l));
  return out;
}

Vector sl_coordinates(const Matrix& x) {
  const auto n = x.rows();
  if (n < 2 || x.cols() != n) throw std::invalid_argument("sl_coordinates: expected a square matrix, n >= 2");
  const Complex tr = x.trace();
  if (std::abs(tr) > kDefaultTolerance * std::max(1.0, max_abs(x)))
    throw std::invalid_argument("sl_coordinates: matrix is not traceless");
  Vector c(n * n - 1);
  Eigen::Index at = 0;
  for (Eigen::Index k = 0; k < n; ++k)
    for (Eigen::Index l = k + 1; l < n; ++l) c(at++) = x(k, l);
  Complex partial = 0.0;
  for (Eigen::Index k = 0; k + 1 < n; ++k) {
    partial += x(k, k);
    c(at++) = partial;
  }
  for (Eigen::Index k = 0; k < n; ++k)
    for (Eigen::Index l = 0; l < k; ++l) c(at++) = x(k, l);
  return c;
}

Matrix sl_matrix(int n, const Vector& coords) {
  auto basis = sl_basis_matrices(n);
  if (coords.size() != static_cast<Eigen::Index>(basis.size()))
    throw std::invalid_argument("sl_matrix: coordinate length mismatch");
  Matrix x = Matrix::Zero(n, n);
  for (std::size_t i = 0; i < basis.size(); ++i) x += coords(i) * basis[i];
  return x;
}

LieAlgebra sl_algebra(int n) {
  if (n < 2) throw std::invalid_argument("sl(n) requires n >= 2");
  std::vector<std::string> names;
  for (int k = 1; k <= n; ++k)
    for (int l = k + 1; l <= n; ++l) names.push_back("E" + std::to_string(k) + "_" + std::to_string(l));
  for (int k = 1; k < n; ++k) names.push_back("H" + std::to_string(k));
  for (int k = 1; k <= n; ++k)
    for (int l = 1; l < k; ++l) names.push_back("E" + std::to_string(k) + "_" + std::to_string(l));

  const auto basis = sl_basis_matrices(n);
  const int dim = static_cast<int>(basis.size());
  std::vector<LieAlgebra::Constant> constants;
  for (int i = 0; i < dim; ++i)
    for (int j = i + 1; j < dim; ++j) {
      Vector c = sl_coordinates(commutator(basis[i], basis[j]));
      for (int l = 0; l < dim; ++l)
        if (c(l) != Complex(0.0)) constants.push_back({i, j, l, c(l)});
    }
  return LieAlgebra::from_constants(std::move(names), constants);
}

Matrix MatrixRep::image(const Vector& x) const {
  if (x.size() != static_cast<Eigen::Index>(mats.size())) throw std::invalid_argument("MatrixRep: coordinate mismatch");
  const int d = dim();
  Matrix out = Matrix::Zero(d, d);
  for (std::size_t i = 0; i < mats.size(); ++i)
    if (x(i) != Complex(0.0)) out += x(i) * mats[i];
  return out;
}

MatrixRep adjoint_rep(const LieAlgebra& a) {
  const int k = a.dim();
  MatrixRep rep;
  for (int i = 0; i < k; ++i) {
    Matrix m = Matrix::Zero(k, k);
    for (int j = 0; j < k; ++j)
      for (const auto& t : a.structure(i, j)) m(t.index, j) = t.coeff;
    rep.mats.push_back(std::move(m));
  }
  return rep;
}

double homomorphism_residual(const LieAlgebra& a, const MatrixRep& rep) {
  if (static_cast<int>(rep.mats.size()) != a.dim()) throw std::invalid_argument("representation/algebra size mismatch");
  double worst = 0.0;
  for (int i = 0; i < a.dim(); ++i)
    for (int j = i + 1; j < a.dim(); ++j) {
      Matrix rhs = rep.image(a.bracket(a.basis_vector(i), a.basis_vector(j)));
      worst = std::max(worst, max_abs(commutator(rep.mats[i], rep.mats[j]) - rhs));
    }
  return worst;
}

int burnside_span_dim(std::span<const Matrix> mats, double tol) {
  if (mats.empty()) return 0;
  const auto d = mats.front().rows();
  const auto cap = d * d;
  std::vector<Vector> frame;
  std::deque<Matrix> pending;

  auto try_add = [&](const Matrix& m) {
    const double n0 = m.norm();
    if (n0 <= tol) return;
    Vector v = m.reshaped() / n0;
    for (int pass = 0; pass < 2; ++pass)
      for (const auto& q : frame) v -= q * q.dot(v);
    const double n1 = v.norm();
    if (n1 <= tol) return;
    frame.push_back(v / n1);
    pending.push_back(m / n0);
  };

  for (const auto& m : mats) {
    if (m.rows() != d || m.cols() != d) throw std::invalid_argument("burnside_span_dim: size mismatch");
    if (static_cast<Eigen::Index>(frame.size()) < cap) try_add(m);
  }
  while (!pending.empty() && static_cast<Eigen::Index>(frame.size()) < cap) {
    Matrix m = std::move(pending.front());
    pending.pop_front();
    for (const auto& g : mats) {
      if (static_cast<Eigen::Index>(frame.size()) >= cap) break;
      try_add(g * m);
    }
  }
  return static_cast<int>(frame.size());
}

int Grading::ambient_dim() const {
  for (const auto& [g, basis] : parts)
    if (basis.rows() > 0) return static_cast<int>(basis.rows());
  return 0;
}

Matrix Grading::part(const GroupElement& g) const {
  auto it = parts.find(g);
  if (it != parts.end()) return it->second;
  return Matrix(ambient_dim(), 0);
}

Grading trivial_grading(const LieAlgebra& a) {
  Grading g;
  g.parts[g.group.zero()] = Matrix::Identity(a.dim(), a.dim());
  return g;
}

Report verify_grading(const LieAlgebra& a, const Grading& grading, double tol) {
  Report report;
  const int k = a.dim();
  std::vector<Matrix> blocks;
  for (const auto& [g, basis] : grading.parts) {
    if (!grading.group.contains(g)) throw std::invalid_argument("grading label '" + g.label() + "' not in group");
    if (basis.cols() > 0 && basis.rows() != k) throw std::invalid_argument("grading part dimension mismatch");
    blocks.push_back(basis);
  }
  Matrix all = hstack(blocks, k);
  if (all.cols() != k || numerical_rank(all, tol) != k) {
    report.ok = false;
    report.violations.push_back("direct sum: parts do not decompose the algebra (" + std::to_string(all.cols()) +
                                " vectors, dim " + std::to_string(k) + ")");
  }
  std::map<GroupElement, Span> spans;
  for (int idx = 0; idx < grading.group.size(); ++idx) {
    auto g = grading.group.element(idx);
    spans.emplace(g, Span(grading.part(g), tol));
  }
  for (const auto& [gj, bj] : grading.parts)
    for (const auto& [gk, bk] : grading.parts) {
      const auto target = grading.group.add(gj, gk);
      const Span& s = spans.at(target);
      double worst = 0.0;
      for (Eigen::Index p = 0; p < bj.cols(); ++p)
        for (Eigen::Index q = 0; q < bk.cols(); ++q)
          worst = std::max(worst, s.residual(a.bracket(bj.col(p), bk.col(q))));
      report.note(worst, tol, "[L_" + gj.label() + ", L_" + gk.label() + "] not in L_" + target.label());
    }
  return report;
}

std::string to_string(TwoPartCase c) {
  switch (c) {
    case TwoPartCase::Z2Grading: return "Z2Grading";
    case TwoPartCase::BothClosed: return "BothClosed";
    case TwoPartCase::NeitherClosed: return "NeitherClosed";
    case TwoPartCase::OnePartOnly: return "OnePartOnly";
    case TwoPartCase::NotAGrading: return "NotAGrading";
  }
  return "?";
}

TwoPartCase classify_two_part(const LieAlgebra& a, const Matrix& pa, const Matrix& pb, double tol) {
  const int k = a.dim();
  if (pa.rows() != k || pb.rows() != k) throw std::invalid_argument("classify_two_part: dimension mismatch");
  Matrix both(k, pa.cols() + pb.cols());
  both << pa, pb;
  if (both.cols() != k || numerical_rank(both, tol) != k)
    throw std::invalid_argument("classify_two_part: subspaces are not complementary");

  const Span sa(pa, tol), sb(pb, tol);
  // inside[s][t]: bracket set t ∈ {[a,a], [a,b], [b,b]} lies in part s ∈ {a, b}.
  bool inside[2][3];
  const Matrix* lhs[3] = {&pa, &pa, &pb};
  const Matrix* rhs[3] = {&pa, &pb, &pb};
  for (int t = 0; t < 3; ++t) {
    double ra = 0.0, rb = 0.0;
    for (Eigen::Index p = 0; p < lhs[t]->cols(); ++p)
      for (Eigen::Index q = 0; q < rhs[t]->cols(); ++q) {
        Vector v = a.bracket(lhs[t]->col(p), rhs[t]->col(q));
        ra = std::max(ra, sa.residual(v));
        rb = std::max(rb, sb.residual(v));
      }
    inside[0][t] = ra <= tol;
    inside[1][t] = rb <= tol;
  }
  auto consistent = [&](int x, int y, int z) { return inside[x][0] && inside[y][1] && inside[z][2]; };
  constexpr int A = 0, B = 1;
  if (consistent(A, B, A) || consistent(B, A, B)) return TwoPartCase::Z2Grading;
  if (consistent(A, A, B) || consistent(A, B, B)) return TwoPartCase::BothClosed;
  if (consistent(B, A, A) || consistent(B, B, A)) return TwoPartCase::NeitherClosed;
  if (consistent(A, A, A) || consistent(B, B, B)) return TwoPartCase::OnePartOnly;
  return TwoPartCase::NotAGrading;
}

}  // namespace gradedrep::lie
