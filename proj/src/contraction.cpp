#include "gradedrep/contraction.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "gradedrep/linalg.hpp"
#include "gradedrep/simulation.hpp"

namespace gradedrep::contract {

namespace {

double gap(const Complex& a, const Complex& b) { return std::abs(a - b); }
double gap(const Rational& a, const Rational& b) {
  const Rational d = abs(a - b);
  return static_cast<double>(d.numerator()) / static_cast<double>(d.denominator());
}

std::string triple(const AbelianGroup& g, int i, int j, int k) {
  return "(" + g.element(i).label() + "|" + g.element(j).label() + "|" + g.element(k).label() + ")";
}

template <class T>
Report check_epsilon(const ScalarTable<T>& e, double tol) {
  Report report;
  const auto& g = e.group();
  const int n = g.size();
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      report.note(gap(e.at(a, b), e.at(b, a)), tol,
                  "asymmetric at (" + g.element(a).label() + "|" + g.element(b).label() + ")");
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        const T t1 = e.at(i, j) * e.at(g.add(i, j), k);
        const T t2 = e.at(j, k) * e.at(g.add(j, k), i);
        const T t3 = e.at(k, i) * e.at(g.add(k, i), j);
        report.note(std::max(gap(t1, t2), gap(t2, t3)), tol, "epsilon equation fails at " + triple(g, i, j, k));
      }
  return report;
}

template <class T>
Report check_psi(const ScalarTable<T>& psi, const ScalarTable<T>& eps, double tol) {
  if (!(psi.group() == eps.group())) throw std::invalid_argument("verify_psi: group mismatch");
  Report report;
  const auto& g = psi.group();
  const int n = g.size();
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        const T t1 = psi.at(j, k) * psi.at(i, g.add(j, k));
        const T t2 = psi.at(i, k) * psi.at(j, g.add(i, k));
        const T t3 = eps.at(i, j) * psi.at(g.add(i, j), k);
        report.note(std::max(gap(t1, t2), gap(t2, t3)), tol, "psi equation fails at " + triple(g, i, j, k));
      }
  return report;
}

void guard(const AbelianGroup& group) {
  if (group.size() > kMaxEnumerationGroupSize)
    throw std::length_error("binary enumeration limited to |G| <= " + std::to_string(kMaxEnumerationGroupSize) +
                            " (got " + std::to_string(group.size()) + ")");
}

// Columns of all parts side by side, with the label index of each column.
struct HomogeneousBasis {
  Matrix p;
  Matrix p_inv;
  std::vector<int> label;
};

HomogeneousBasis homogeneous_basis(const lie::Grading& grading, Eigen::Index dim) {
  HomogeneousBasis hb;
  std::vector<Matrix> blocks;
  for (const auto& [g, basis] : grading.parts) {
    blocks.push_back(basis);
    for (Eigen::Index c = 0; c < basis.cols(); ++c) hb.label.push_back(grading.group.index(g));
  }
  hb.p = hstack(blocks, dim);
  if (hb.p.cols() != dim) throw std::invalid_argument("grading parts do not form a basis");
  Eigen::FullPivLU<Matrix> lu(hb.p);
  if (!lu.isInvertible()) throw std::invalid_argument("grading parts are linearly dependent");
  hb.p_inv = lu.inverse();
  return hb;
}

}  // namespace

ComplexTable to_complex(const RationalTable& t) {
  std::vector<Complex> values;
  for (const auto& q : t.values())
    values.emplace_back(static_cast<double>(q.numerator()) / static_cast<double>(q.denominator()));
  return ComplexTable(t.group(), std::move(values));
}

Report verify_epsilon(const ComplexTable& eps, double tol) { return check_epsilon(eps, tol); }
Report verify_epsilon(const RationalTable& eps) { return check_epsilon(eps, 0.0); }

Report verify_psi(const ComplexTable& psi, const ComplexTable& eps, double tol) { return check_psi(psi, eps, tol); }
Report verify_psi(const RationalTable& psi, const RationalTable& eps) { return check_psi(psi, eps, 0.0); }

std::vector<EpsilonTable> enumerate_binary_epsilon(const AbelianGroup& group) {
  guard(group);
  const int n = group.size();
  std::vector<std::pair<int, int>> cells;
  for (int a = 0; a < n; ++a)
    for (int b = a; b < n; ++b) cells.emplace_back(a, b);
  const int c = static_cast<int>(cells.size());
  std::vector<EpsilonTable> out;
  for (std::uint32_t mask = 0; mask < (1u << c); ++mask) {
    EpsilonTable t(group);
    for (int idx = 0; idx < c; ++idx) {
      const Rational v((mask >> (c - 1 - idx)) & 1u);
      t.at(cells[idx].first, cells[idx].second) = v;
      t.at(cells[idx].second, cells[idx].first) = v;
    }
    if (verify_epsilon(t).ok) out.push_back(std::move(t));
  }
  return out;
}

std::vector<PsiTable> enumerate_binary_psi(const EpsilonTable& eps) {
  guard(eps.group());
  const int n = eps.size();
  const int c = n * n;
  std::vector<PsiTable> out;
  for (std::uint32_t mask = 0; mask < (1u << c); ++mask) {
    PsiTable t(eps.group());
    for (int idx = 0; idx < c; ++idx) t.at(idx / n, idx % n) = Rational((mask >> (c - 1 - idx)) & 1u);
    if (verify_psi(t, eps).ok) out.push_back(std::move(t));
  }
  return out;
}

ContractedAlgebra contract_algebra(const lie::LieAlgebra& a, const lie::Grading& grading, const EpsilonTable& eps,
                                   double tol) {
  if (!(grading.group == eps.group())) throw std::invalid_argument("contract_algebra: group mismatch");
  if (auto r = lie::verify_grading(a, grading, tol); !r.ok)
    throw std::invalid_argument("contract_algebra: invalid grading: " + r.violations.front());
  if (auto r = verify_epsilon(eps); !r.ok)
    throw std::invalid_argument("contract_algebra: invalid epsilon: " + r.violations.front());

  const int k = a.dim();
  const auto hb = homogeneous_basis(grading, k);
  const auto eps_c = to_complex(eps);

  // w[a*k+b] = ε_{label a, label b} [u_a, u_b]
  std::vector<Vector> w(static_cast<std::size_t>(k) * k);
  double scale = 0.0;
  for (int p = 0; p < k; ++p)
    for (int q = 0; q < k; ++q) {
      w[p * k + q] = eps_c.at(hb.label[p], hb.label[q]) * a.bracket(hb.p.col(p), hb.p.col(q));
      scale = std::max(scale, w[p * k + q].cwiseAbs().maxCoeff());
    }
  // Round-off from the change of basis is cleared below this level.
  const double floor = 64.0 * std::numeric_limits<double>::epsilon() * std::max(1.0, scale);

  std::vector<lie::LieAlgebra::Constant> constants;
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j) {
      Vector c = Vector::Zero(k);
      for (int p = 0; p < k; ++p) {
        if (hb.p_inv(p, i) == Complex(0.0)) continue;
        for (int q = 0; q < k; ++q) {
          if (hb.p_inv(q, j) == Complex(0.0)) continue;
          c += hb.p_inv(p, i) * hb.p_inv(q, j) * w[p * k + q];
        }
      }
      for (int l = 0; l < k; ++l)
        if (std::abs(c(l)) > floor) constants.push_back({i, j, l, c(l)});
    }
  auto result = lie::LieAlgebra::from_constants(a.basis_names(), constants);
  return {a, grading, eps, std::move(result)};
}

ContractedRep contract_rep(const lie::MatrixRep& rep, const lie::Grading& grading, const lie::Grading& vgrading,
                           const PsiTable& psi, const EpsilonTable& eps, double tol, bool validate) {
  if (!(grading.group == vgrading.group) || !(grading.group == psi.group()) || !(psi.group() == eps.group()))
    throw std::invalid_argument("contract_rep: group mismatch");
  if (validate) {
    if (auto r = sim::check_compatibility(rep, grading, vgrading, tol); !r.ok)
      throw std::invalid_argument("contract_rep: representation not compatible: " + r.violations.front());
    if (auto r = verify_epsilon(eps); !r.ok)
      throw std::invalid_argument("contract_rep: invalid epsilon: " + r.violations.front());
    if (auto r = verify_psi(psi, eps); !r.ok)
      throw std::invalid_argument("contract_rep: invalid psi: " + r.violations.front());
  }
  const int k = static_cast<int>(rep.mats.size());
  const int d = rep.dim();
  const auto hb = homogeneous_basis(grading, k);
  const auto vb = homogeneous_basis(vgrading, d);
  const auto psi_c = to_complex(psi);

  // Oblique projectors onto each V_j along the other parts.
  std::map<int, Matrix> proj;
  for (int c = 0; c < d; ++c) {
    auto [it, fresh] = proj.try_emplace(vb.label[c], Matrix::Zero(d, d));
    it->second += vb.p.col(c) * vb.p_inv.row(c);
  }

  std::vector<Matrix> homogeneous(k);
  for (int p = 0; p < k; ++p) {
    const Matrix r = rep.image(hb.p.col(p));
    homogeneous[p] = Matrix::Zero(d, d);
    for (const auto& [label, pr] : proj) {
      const Complex s = psi_c.at(hb.label[p], label);
      if (s != Complex(0.0)) homogeneous[p] += s * (r * pr);
    }
  }
  lie::MatrixRep result;
  for (int e = 0; e < k; ++e) {
    Matrix m = Matrix::Zero(d, d);
    for (int p = 0; p < k; ++p)
      if (hb.p_inv(p, e) != Complex(0.0)) m += hb.p_inv(p, e) * homogeneous[p];
    result.mats.push_back(std::move(m));
  }
  return {rep, vgrading, psi, std::move(result)};
}

Report verify_rep_homomorphism(const ContractedRep& crep, const ContractedAlgebra& calg, double tol) {
  const int k = calg.result.dim();
  if (static_cast<int>(crep.result.mats.size()) != k)
    throw std::invalid_argument("verify_rep_homomorphism: size mismatch");
  const auto hb = homogeneous_basis(calg.grading, k);
  std::vector<Matrix> images(k);
  for (int p = 0; p < k; ++p) images[p] = crep.result.image(hb.p.col(p));
  Report report;
  for (int p = 0; p < k; ++p)
    for (int q = p + 1; q < k; ++q) {
      const Matrix rhs = crep.result.image(calg.result.bracket(hb.p.col(p), hb.p.col(q)));
      report.note(max_abs(commutator(images[p], images[q]) - rhs), tol,
                  "pair (" + std::to_string(p) + "," + std::to_string(q) + ")");
    }
  return report;
}

}  // namespace gradedrep::contract
