#pragma once

#include <optional>
#include <string>

#include "gradedrep/common.hpp"
#include "gradedrep/gt.hpp"
#include "gradedrep/lie_algebra.hpp"
#include "gradedrep/realization.hpp"

// Finite-order automorphisms of sl(n,ℂ), the gradings they induce, and
// simulation matrices R with r(g(x)) = R r(x) R⁻¹, R^order = Id.
namespace gradedrep::sim {

struct Automorphism {
  enum class Kind {
    Inner,          // X ↦ A X A⁻¹
    OuterComposed,  // X ↦ −A Xᵀ A⁻¹
  };

  Kind kind = Kind::Inner;
  /// The group element is scale·a; the action only depends on a.
  Matrix a;
  Complex scale{1.0, 0.0};
  int order = 1;

  Matrix group_element() const { return scale * a; }

  int n() const { return static_cast<int>(a.rows()); }
  Matrix apply(const Matrix& x) const;
  /// Action on sl_algebra(n) coordinates (column i = image of basis i).
  Matrix on_sl() const;
  /// ‖g^order − Id‖∞ on sl_algebra(n) coordinates.
  double order_residual() const;
};

/// Ad_A with A = ω^η(s) diag(I_{n−s}, −I_s), ω = e^{iπ/n}, η(s) = s mod 2.
/// Order 2 for s ≥ 1; the identity (order 1) for s = 0.
Automorphism auto_inner(int n, int s);

/// Out_I X = −Xᵀ.
Automorphism auto_outer(int n);

/// Eigenspace grading by ℤ_order, eigenvalue e^{2πiℓ/order} ↦ label ℓ.
/// `a` must be sl_algebra(g.n()). Throws std::invalid_argument when the action
/// is not of the declared order (hence not diagonalizable over the labels).
lie::Grading grading_from_automorphism(const lie::LieAlgebra& a, const Automorphism& g,
                                       double tol = kDefaultTolerance);

struct SimulationMatrix {
  enum class Kind { Diagonal, SignedPermutation, Dense };

  Matrix r;
  int order = 1;
  Kind kind = Kind::Dense;

  int dim() const { return static_cast<int>(r.rows()); }
};

std::string to_string(SimulationMatrix::Kind kind);

/// Diagonal r(X_{n,s}) on the GT basis:
/// iπ(η/n·r_n + 2Σ_{k<s}(−1)^{k−1} r_{n−s+k} − r_{n−s} − (−1)^η r_n).
/// Valid for s ≥ 1; s = 0 gives the zero matrix.
Matrix rep_of_xns(const gt::HighestWeight& hw, int s);

/// Diagonal simulation matrix of auto_inner(n, s) on r(hw):
/// e^{iπ((η/n − 1) r_n − r_{n−s})}, rescaled by one global phase so that
/// R² = Id exactly.
SimulationMatrix simulation_inner(const gt::HighestWeight& hw, int s);

/// m'_i = m_1 − m_{n−i+1}.
gt::HighestWeight contragredient_weight(const gt::HighestWeight& hw);
bool is_self_contragredient(const gt::HighestWeight& hw);

/// m'_{i,j} = m_{1,n} − m_{j−i+1,j}.
gt::Pattern pattern_conjugate(const gt::Pattern& p);

/// J ξ(m) = (−1)^{Σ m_ij} ξ(m') from the space of r(hw) to the space of
/// r(contragredient_weight(hw)); satisfies −J r(X)ᵀ = r_c(X) J on sl(n).
Matrix contragredient_intertwiner(const gt::HighestWeight& hw);

/// Simulation matrix of Out_I on a self-contragredient r(hw). When the raw
/// J squares to −Id it is rescaled by i (and reported as Dense).
SimulationMatrix j_matrix(const gt::HighestWeight& hw);

struct DoubledRep {
  Realization rep;       // r₀ ⊕ (−r₀ᵀ)
  SimulationMatrix swap; // [[0, I], [I, 0]]
};

DoubledRep doubled_rep(const gt::HighestWeight& hw);

/// ‖r(g(x)) − R r(x) R⁻¹‖∞ over the sl(n) basis, and ‖R^order − Id‖∞.
/// Throws std::invalid_argument for a singular R or mismatched sizes.
Report verify_simulation(const Realization& rep, const Automorphism& g, const SimulationMatrix& r,
                         double tol = kDefaultTolerance);

/// Eigenspaces of R labelled by ℤ_order (eigenvalue e^{2πiℓ/order} ↦ ℓ).
lie::Grading decompose_rep_space(const SimulationMatrix& r, double tol = kDefaultTolerance);

/// r(X_i) V_j ⊆ V_{i+j} for all labels. `rep` is indexed by the algebra basis
/// the grading is expressed in. Throws on group mismatch.
Report check_compatibility(const lie::MatrixRep& rep, const lie::Grading& grading, const lie::Grading& vspace,
                           double tol = kDefaultTolerance);

/// Desk-scale search for a compatible decomposition of the representation
/// space: every labelling of coordinate vectors, then (for ℤ₂) eigensplits of
/// every signed-permutation involution. Only for d ≤ 6.
std::optional<lie::Grading> search_compatible_split(const lie::MatrixRep& rep, const lie::Grading& grading,
                                                    double tol = kDefaultTolerance);

}  // namespace gradedrep::sim
