#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "gradedrep/common.hpp"
#include "gradedrep/realization.hpp"

// Gel'fand-Tseitlin construction of the irreducible representations of
// sl(n,ℂ). A representation is labelled by its highest weight
// (m_1n ≥ … ≥ m_nn = 0); its basis vectors ξ(m) by triangular patterns.
namespace gradedrep::gt {

class HighestWeight {
 public:
  /// Throws std::invalid_argument unless n ≥ 2, entries are non-increasing,
  /// non-negative, and the last entry is 0.
  explicit HighestWeight(std::vector<int> m);

  int n() const { return static_cast<int>(m_.size()); }
  const std::vector<int>& entries() const { return m_; }
  int operator[](int i) const { return m_.at(i); }
  std::string str() const;

  auto operator<=>(const HighestWeight&) const = default;

 private:
  std::vector<int> m_;
};

/// Triangular array m_{i,j}, 1 ≤ i ≤ j ≤ n. Rows are stored top-down: the
/// first stored row is row n (the highest weight), the last is row 1.
class Pattern {
 public:
  explicit Pattern(std::vector<std::vector<int>> rows_top_down);

  int n() const { return static_cast<int>(rows_.size()); }
  /// m_{i,j}, 1-based.
  int at(int i, int j) const { return rows_[n() - j][i - 1]; }
  int& at(int i, int j) { return rows_[n() - j][i - 1]; }

  const std::vector<std::vector<int>>& rows() const { return rows_; }
  std::vector<int> flattened() const;
  /// Row-major rendering, rows separated by " / ", e.g. "2 1 0 / 2 1 / 2".
  std::string str() const;
  int entry_sum() const;

  /// Betweenness m_{i,j+1} ≥ m_{i,j} ≥ m_{i+1,j+1}.
  bool valid() const;

  auto operator<=>(const Pattern&) const = default;

 private:
  std::vector<std::vector<int>> rows_;
};

/// All patterns with top row hw, each once, in lexicographic order of the
/// rows read top-down. This order is the basis order of build_representation.
std::vector<Pattern> enumerate_patterns(const HighestWeight& hw);

/// ∏_{i<j} (m_i − m_j + j − i)/(j − i).
std::int64_t weyl_dim(const HighestWeight& hw);

/// r_k = m_{1,k} + … + m_{k,k}; r_0 = 0.
int row_sum(const Pattern& p, int k);

/// Eigenvalue of E_kk on ξ(p): r_k − r_{k−1}.
int act_diagonal(const Pattern& p, int k);

/// Coefficient sign·√value with exact rational value.
struct Radicand {
  int sign = 0;
  Rational value{0};

  double coefficient() const;
  /// "sign*sqrt(p/q)".
  std::string str() const;
  bool operator==(const Radicand&) const = default;
};

struct Move {
  Pattern target;
  Radicand coefficient;
};

/// Terms of r(E_{k,k−1}) ξ(p): targets lower m_{j,k−1} by one.
std::vector<Move> act_lowering(const Pattern& p, int k);
/// Terms of r(E_{k−1,k}) ξ(p): targets raise m_{j,k−1} by one.
std::vector<Move> act_raising(const Pattern& p, int k);

struct Representation {
  HighestWeight hw;
  std::vector<Pattern> basis;
  Realization gens;

  int dim() const { return gens.dim(); }
  /// Position of a pattern in `basis`; throws std::out_of_range if absent.
  int index_of(const Pattern& p) const;
};

/// Populates all n² generators. E_kl with |k − l| ≥ 2 come from the
/// recursion E_kl = [E_{k,k∓1}, E_{k∓1,l}].
Representation build_representation(const HighestWeight& hw);

}  // namespace gradedrep::gt
