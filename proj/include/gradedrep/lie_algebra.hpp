#pragma once

#include <map>
#include <span>
#include <string>
#include <vector>

#include "gradedrep/common.hpp"
#include "gradedrep/group.hpp"

namespace gradedrep::lie {

/// Finite-dimensional Lie algebra given by complex structure constants
/// [e_i, e_j] = Σ_l c_{ij}^l e_l over a named basis. Antisymmetry is enforced
/// on construction; the Jacobi identity is checked separately.
class LieAlgebra {
 public:
  struct Term {
    int index;
    Complex coeff;
  };
  struct Constant {
    int i, j, l;
    Complex value;
  };

  /// Abelian algebra on the given basis.
  explicit LieAlgebra(std::vector<std::string> basis_names);

  /// Throws std::invalid_argument for out-of-range indices, nonzero [e_i,e_i],
  /// or an (i,j)/(j,i) pair that is not antisymmetric.
  static LieAlgebra from_constants(std::vector<std::string> basis_names, std::span<const Constant> constants);

  int dim() const { return dim_; }
  const std::vector<std::string>& basis_names() const { return names_; }

  /// Sparse expansion of [e_i, e_j].
  const std::vector<Term>& structure(int i, int j) const { return table_[i * dim_ + j]; }

  /// Constants with i < j, in (i, j, l) order.
  std::vector<Constant> constants() const;

  Vector bracket(const Vector& x, const Vector& y) const;
  Vector basis_vector(int i) const { return Vector::Unit(dim_, i); }

 private:
  void set(int i, int j, std::vector<Term> terms);

  int dim_;
  std::vector<std::string> names_;
  std::vector<std::vector<Term>> table_;
};

Vector bracket(const Vector& x, const Vector& y, const LieAlgebra& a);

/// max over basis triples of ‖[x,[y,z]] + [y,[z,x]] + [z,[x,y]]‖∞.
Report check_jacobi(const LieAlgebra& a, double tol = kDefaultTolerance);

/// sl(n,ℂ) in the basis E_{kl} (k<l, lexicographic), H_k = E_kk − E_{k+1,k+1},
/// E_{kl} (k>l, lexicographic). For n = 2 this is {e, h, f}.
LieAlgebra sl_algebra(int n);

/// The n×n matrices of the sl_algebra(n) basis, in basis order.
std::vector<Matrix> sl_basis_matrices(int n);

/// Coordinates of a traceless n×n matrix in the sl_algebra(n) basis.
Vector sl_coordinates(const Matrix& x);

/// Inverse of sl_coordinates.
Matrix sl_matrix(int n, const Vector& coords);

/// Matrices indexed by the basis of an algebra: basis element i ↦ mats[i].
struct MatrixRep {
  std::vector<Matrix> mats;

  int dim() const { return mats.empty() ? 0 : static_cast<int>(mats.front().rows()); }
  /// Image of an algebra element given in coordinates.
  Matrix image(const Vector& x) const;
};

MatrixRep adjoint_rep(const LieAlgebra& a);

/// max over basis pairs of ‖[M_i, M_j] − M_{[e_i,e_j]}‖∞.
double homomorphism_residual(const LieAlgebra& a, const MatrixRep& rep);

/// Dimension of the associative algebra spanned by all finite products of
/// `mats`. Equals d² iff the family is irreducible (Burnside).
int burnside_span_dim(std::span<const Matrix> mats, double tol = kDefaultTolerance);

/// G-labelled direct-sum decomposition of a vector space. Each part is a
/// matrix whose columns span the subspace; empty parts are allowed.
struct Grading {
  AbelianGroup group;
  std::map<GroupElement, Matrix> parts;

  int ambient_dim() const;
  /// Part for a label, or an empty k×0 matrix when absent.
  Matrix part(const GroupElement& g) const;
};

Grading trivial_grading(const LieAlgebra& a);

/// Direct-sum and closure ([L_j, L_k] ⊆ L_{j+k}) checks.
Report verify_grading(const LieAlgebra& a, const Grading& grading, double tol = kDefaultTolerance);

enum class TwoPartCase {
  Z2Grading,      // [a,a]⊆a, [a,b]⊆b, [b,b]⊆a (up to swapping a and b)
  BothClosed,     // [a,a]⊆a, [b,b]⊆b
  NeitherClosed,  // [a,a]⊆b, [b,b]⊆a, not a ℤ₂ pattern
  OnePartOnly,    // [L,L] lies inside a single part; impossible for perfect L
  NotAGrading,
};

std::string to_string(TwoPartCase c);

/// Tries every target assignment x,y,z ∈ {a,b} for [a,a]⊆x, [a,b]⊆y,
/// [b,b]⊆z and reports the strongest consistent pattern.
TwoPartCase classify_two_part(const LieAlgebra& a, const Matrix& pa, const Matrix& pb,
                              double tol = kDefaultTolerance);

}  // namespace gradedrep::lie
