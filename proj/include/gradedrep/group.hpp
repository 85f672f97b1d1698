#pragma once

#include <compare>
#include <string>
#include <vector>

namespace gradedrep {

/// Element of ℤ_{n1} × … × ℤ_{nr}, stored as residues.
struct GroupElement {
  std::vector<int> residues;

  auto operator<=>(const GroupElement&) const = default;
  bool operator==(const GroupElement&) const = default;

  /// "r1,r2,…", the key format used in grading JSON.
  std::string label() const;
  static GroupElement parse(const std::string& label);
};

/// Finite abelian group ℤ_{n1} × … × ℤ_{nr}. Elements are enumerated in
/// mixed-radix order with the first factor most significant.
class AbelianGroup {
 public:
  AbelianGroup() : AbelianGroup(std::vector<int>{1}) {}
  explicit AbelianGroup(std::vector<int> orders);

  static AbelianGroup cyclic(int order) { return AbelianGroup({order}); }

  const std::vector<int>& orders() const { return orders_; }
  int size() const { return size_; }

  GroupElement zero() const;
  GroupElement element(int index) const;
  int index(const GroupElement& g) const;
  bool contains(const GroupElement& g) const;
  GroupElement add(const GroupElement& a, const GroupElement& b) const;
  int add(int a, int b) const { return index(add(element(a), element(b))); }

  bool operator==(const AbelianGroup&) const = default;

 private:
  std::vector<int> orders_;
  int size_ = 1;
};

}  // namespace gradedrep
