#include "gradedrep/gt.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <stdexcept>

#include "gradedrep/linalg.hpp"

namespace gradedrep::gt {

HighestWeight::HighestWeight(std::vector<int> m) : m_(std::move(m)) {
  if (m_.size() < 2) throw std::invalid_argument("highest weight needs n >= 2 entries");
  for (std::size_t i = 0; i + 1 < m_.size(); ++i)
    if (m_[i] < m_[i + 1]) throw std::invalid_argument("highest weight " + str() + " is not non-increasing");
  if (m_.back() != 0) throw std::invalid_argument("highest weight " + str() + " must end in 0");
}

std::string HighestWeight::str() const {
  std::string out = "(";
  for (std::size_t i = 0; i < m_.size(); ++i) out += (i ? "," : "") + std::to_string(m_[i]);
  return out + ")";
}

Pattern::Pattern(std::vector<std::vector<int>> rows_top_down) : rows_(std::move(rows_top_down)) {
  const int n = static_cast<int>(rows_.size());
  for (int r = 0; r < n; ++r)
    if (static_cast<int>(rows_[r].size()) != n - r) throw std::invalid_argument("pattern rows must be triangular");
}

std::vector<int> Pattern::flattened() const {
  std::vector<int> out;
  for (const auto& row : rows_) out.insert(out.end(), row.begin(), row.end());
  return out;
}

std::string Pattern::str() const {
  std::string out;
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    if (r) out += " / ";
    for (std::size_t i = 0; i < rows_[r].size(); ++i) out += (i ? " " : "") + std::to_string(rows_[r][i]);
  }
  return out;
}

int Pattern::entry_sum() const {
  int s = 0;
  for (const auto& row : rows_)
    for (int v : row) s += v;
  return s;
}

bool Pattern::valid() const {
  for (int j = 1; j < n(); ++j)
    for (int i = 1; i <= j; ++i)
      if (!(at(i, j + 1) >= at(i, j) && at(i, j) >= at(i + 1, j + 1))) return false;
  return true;
}

namespace {

void extend(std::vector<std::vector<int>>& rows, std::vector<Pattern>& out) {
  const std::vector<int> above = rows.back();
  if (above.size() == 1) {
    out.emplace_back(rows);
    return;
  }
  const std::size_t len = above.size() - 1;
  std::vector<int> row(len);
  // Odometer over row[i] ∈ [above[i+1], above[i]], last index fastest.
  for (std::size_t i = 0; i < len; ++i) row[i] = above[i + 1];
  while (true) {
    rows.push_back(row);
    extend(rows, out);
    rows.pop_back();
    std::size_t i = len;
    while (i > 0 && row[i - 1] == above[i - 1]) {
      row[i - 1] = above[i];
      --i;
    }
    if (i == 0) break;
    ++row[i - 1];
  }
}

}  // namespace

std::vector<Pattern> enumerate_patterns(const HighestWeight& hw) {
  std::vector<Pattern> out;
  std::vector<std::vector<int>> rows{hw.entries()};
  extend(rows, out);
  std::sort(out.begin(), out.end());
  return out;
}

std::int64_t weyl_dim(const HighestWeight& hw) {
  const int n = hw.n();
  Rational d(1);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) d *= Rational(hw[i] - hw[j] + j - i, j - i);
  if (d.denominator() != 1) throw std::logic_error("Weyl dimension is not an integer");
  return d.numerator();
}

int row_sum(const Pattern& p, int k) {
  if (k < 0 || k > p.n()) throw std::out_of_range("row_sum: k out of range");
  int s = 0;
  for (int i = 1; i <= k; ++i) s += p.at(i, k);
  return s;
}

int act_diagonal(const Pattern& p, int k) {
  if (k < 1 || k > p.n()) throw std::out_of_range("act_diagonal: k out of range");
  return row_sum(p, k) - row_sum(p, k - 1);
}

double Radicand::coefficient() const {
  return sign * std::sqrt(static_cast<double>(value.numerator()) / static_cast<double>(value.denominator()));
}

std::string Radicand::str() const {
  return std::to_string(sign) + "*sqrt(" + std::to_string(value.numerator()) + "/" +
         std::to_string(value.denominator()) + ")";
}

namespace {

// Shared body of the two adjacent-generator formulas; `shift` is −1 for
// E_{k,k−1} and +1 for E_{k−1,k}. With c = 1 for lowering and c = 0 for
// raising, the factors are
//   Π_{i≤k}   (m_{i,k} − m_{j,k−1} − i + j + c)
//   Π_{i≤k−2} (m_{i,k−2} − m_{j,k−1} − i + j + c − 1)
//   Π_{i≠j}   (m_{i,k−1} − m_{j,k−1} − i + j + c)(m_{i,k−1} − m_{j,k−1} − i + j + c − 1)
std::vector<Move> act_adjacent(const Pattern& p, int k, int shift) {
  if (k < 2 || k > p.n()) throw std::out_of_range("adjacent generator index k out of range");
  const std::int64_t c = shift < 0 ? 1 : 0;
  std::vector<Move> out;
  for (int j = 1; j <= k - 1; ++j) {
    Pattern target = p;
    target.at(j, k - 1) += shift;
    const std::int64_t mj = p.at(j, k - 1);

    std::int64_t num = 1;
    for (int i = 1; i <= k; ++i) num *= p.at(i, k) - mj - i + j + c;
    for (int i = 1; i <= k - 2; ++i) num *= p.at(i, k - 2) - mj - i + j + c - 1;

    if (!target.valid()) {
      assert(num == 0 && "boundary move with nonvanishing numerator");
      continue;
    }
    std::int64_t den = 1;
    for (int i = 1; i <= k - 1; ++i) {
      if (i == j) continue;
      const std::int64_t diff = p.at(i, k - 1) - mj - i + j + c;
      den *= diff * (diff - 1);
    }
    if (den == 0) throw std::logic_error("zero denominator for a valid pattern " + p.str());
    const Rational radicand = -Rational(num, den);
    if (radicand < Rational(0)) throw std::logic_error("negative radicand at pattern " + p.str());
    if (radicand == Rational(0)) continue;
    out.push_back({std::move(target), Radicand{1, radicand}});
  }
  return out;
}

}  // namespace

std::vector<Move> act_lowering(const Pattern& p, int k) { return act_adjacent(p, k, -1); }
std::vector<Move> act_raising(const Pattern& p, int k) { return act_adjacent(p, k, +1); }

int Representation::index_of(const Pattern& p) const {
  auto it = std::lower_bound(basis.begin(), basis.end(), p);
  if (it == basis.end() || *it != p) throw std::out_of_range("pattern " + p.str() + " not in basis");
  return static_cast<int>(it - basis.begin());
}

Representation build_representation(const HighestWeight& hw) {
  const int n = hw.n();
  auto basis = enumerate_patterns(hw);
  const int d = static_cast<int>(basis.size());
  Representation rep{hw, std::move(basis), Realization(n, d)};

  for (int a = 0; a < d; ++a) {
    const Pattern& p = rep.basis[a];
    for (int k = 1; k <= n; ++k) rep.gens.gen(k, k)(a, a) = act_diagonal(p, k);
    for (int k = 2; k <= n; ++k) {
      for (const auto& mv : act_lowering(p, k)) rep.gens.gen(k, k - 1)(rep.index_of(mv.target), a) = mv.coefficient.coefficient();
      for (const auto& mv : act_raising(p, k)) rep.gens.gen(k - 1, k)(rep.index_of(mv.target), a) = mv.coefficient.coefficient();
    }
  }
  for (int gap = 2; gap < n; ++gap)
    for (int k = gap + 1; k <= n; ++k) {
      const int l = k - gap;
      rep.gens.gen(k, l) = commutator(rep.gens.gen(k, k - 1), rep.gens.gen(k - 1, l));
      rep.gens.gen(l, k) = commutator(rep.gens.gen(l, l + 1), rep.gens.gen(l + 1, k));
    }
  return rep;
}

}  // namespace gradedrep::gt
