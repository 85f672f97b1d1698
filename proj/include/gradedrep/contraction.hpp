#pragma once

#include <vector>

#include "gradedrep/common.hpp"
#include "gradedrep/group.hpp"
#include "gradedrep/lie_algebra.hpp"

// Graded contractions: brackets rescaled per grading block by a table ε that
// solves ε_{i,j}ε_{i+j,k} = ε_{j,k}ε_{j+k,i} = ε_{k,i}ε_{k+i,j}, and
// representations rescaled per (algebra part, space part) by a table ψ with
// ψ_{j,k}ψ_{i,j+k} = ψ_{i,k}ψ_{j,i+k} = ε_{i,j}ψ_{i+j,k}.
namespace gradedrep::contract {

/// Dense G×G table of scalars, indexed by group element indices.
template <class T>
class ScalarTable {
 public:
  explicit ScalarTable(AbelianGroup group, T fill = T(0))
      : group_(std::move(group)), values_(static_cast<std::size_t>(group_.size()) * group_.size(), fill) {}
  /// Row-major values; throws std::invalid_argument on a size mismatch.
  ScalarTable(AbelianGroup group, std::vector<T> row_major) : group_(std::move(group)), values_(std::move(row_major)) {
    if (values_.size() != static_cast<std::size_t>(group_.size()) * group_.size())
      throw std::invalid_argument("table needs |G|^2 = " + std::to_string(group_.size() * group_.size()) +
                                  " values, got " + std::to_string(values_.size()));
  }

  const AbelianGroup& group() const { return group_; }
  int size() const { return group_.size(); }
  T& at(int a, int b) { return values_.at(static_cast<std::size_t>(a) * group_.size() + b); }
  const T& at(int a, int b) const { return values_.at(static_cast<std::size_t>(a) * group_.size() + b); }
  T at(const GroupElement& a, const GroupElement& b) const { return at(group_.index(a), group_.index(b)); }
  const std::vector<T>& values() const { return values_; }

  bool operator==(const ScalarTable&) const = default;

 private:
  AbelianGroup group_;
  std::vector<T> values_;
};

using RationalTable = ScalarTable<Rational>;
using ComplexTable = ScalarTable<Complex>;
using EpsilonTable = RationalTable;
using PsiTable = RationalTable;

ComplexTable to_complex(const RationalTable& t);

/// Symmetry and all |G|³ triple equations, within tol.
Report verify_epsilon(const ComplexTable& eps, double tol = kDefaultTolerance);
/// Exact check for rational tables.
Report verify_epsilon(const RationalTable& eps);

/// All |G|³ triple equations for ψ relative to ε.
Report verify_psi(const ComplexTable& psi, const ComplexTable& eps, double tol = kDefaultTolerance);
Report verify_psi(const RationalTable& psi, const RationalTable& eps);

/// Largest group handled by the binary enumerators (|G| ≤ 4: at most 10
/// independent ε cells and 16 ψ cells).
inline constexpr int kMaxEnumerationGroupSize = 4;

/// Every symmetric 0/1 table solving the ε-system, in lexicographic order of
/// the upper-triangle cells. Throws std::length_error beyond the guard.
std::vector<EpsilonTable> enumerate_binary_epsilon(const AbelianGroup& group);

/// Every 0/1 table solving the ψ-system for `eps`, in lexicographic order of
/// the row-major cells. Throws std::length_error beyond the guard.
std::vector<PsiTable> enumerate_binary_psi(const EpsilonTable& eps);

struct ContractedAlgebra {
  lie::LieAlgebra base;
  lie::Grading grading;
  EpsilonTable eps;
  lie::LieAlgebra result;
};

/// [x, y]_new = ε_{j,k}[x, y] for x ∈ L_j, y ∈ L_k, expressed in the base
/// algebra's basis. Throws std::invalid_argument if the grading or ε fails
/// verification.
ContractedAlgebra contract_algebra(const lie::LieAlgebra& a, const lie::Grading& grading, const EpsilonTable& eps,
                                   double tol = kDefaultTolerance);

struct ContractedRep {
  lie::MatrixRep base;
  lie::Grading vgrading;
  PsiTable psi;
  lie::MatrixRep result;
};

/// r^ε(X_i) v_j = ψ_{i,j} r(X_i) v_j. With `validate`, throws
/// std::invalid_argument unless the representation is compatible and ψ solves
/// the system for ε.
ContractedRep contract_rep(const lie::MatrixRep& rep, const lie::Grading& grading, const lie::Grading& vgrading,
                           const PsiTable& psi, const EpsilonTable& eps, double tol = kDefaultTolerance,
                           bool validate = true);

/// ‖[r^ε(x), r^ε(y)] − r^ε([x, y]_new)‖∞ over homogeneous basis pairs.
Report verify_rep_homomorphism(const ContractedRep& crep, const ContractedAlgebra& calg,
                               double tol = kDefaultTolerance);

}  // namespace gradedrep::contract
