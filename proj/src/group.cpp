#include "gradedrep/group.hpp"

#include <sstream>
#include <stdexcept>

namespace gradedrep {

std::string GroupElement::label() const {
  std::string out;
  for (std::size_t i = 0; i < residues.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(residues[i]);
  }
  return out;
}

GroupElement GroupElement::parse(const std::string& label) {
  GroupElement g;
  std::stringstream ss(label);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      g.residues.push_back(std::stoi(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::logic_error&) {
      throw std::invalid_argument("bad group element label '" + label + "'");
    }
  }
  if (g.residues.empty()) throw std::invalid_argument("empty group element label");
  return g;
}

AbelianGroup::AbelianGroup(std::vector<int> orders) : orders_(std::move(orders)) {
  if (orders_.empty()) throw std::invalid_argument("group needs at least one cyclic factor");
  for (int n : orders_) {
    if (n < 1) throw std::invalid_argument("cyclic orders must be positive");
    size_ *= n;
  }
}

GroupElement AbelianGroup::zero() const { return GroupElement{std::vector<int>(orders_.size(), 0)}; }

GroupElement AbelianGroup::element(int index) const {
  if (index < 0 || index >= size_) throw std::out_of_range("group element index");
  GroupElement g{std::vector<int>(orders_.size())};
  for (std::size_t i = orders_.size(); i-- > 0;) {
    g.residues[i] = index % orders_[i];
    index /= orders_[i];
  }
  return g;
}

bool AbelianGroup::contains(const GroupElement& g) const {
  if (g.residues.size() != orders_.size()) return false;
  for (std::size_t i = 0; i < orders_.size(); ++i)
    if (g.residues[i] < 0 || g.residues[i] >= orders_[i]) return false;
  return true;
}

int AbelianGroup::index(const GroupElement& g) const {
  if (!contains(g)) throw std::invalid_argument("element '" + g.label() + "' not in group");
  int idx = 0;
  for (std::size_t i = 0; i < orders_.size(); ++i) idx = idx * orders_[i] + g.residues[i];
  return idx;
}

GroupElement AbelianGroup::add(const GroupElement& a, const GroupElement& b) const {
  if (!contains(a) || !contains(b)) throw std::invalid_argument("group element outside group");
  GroupElement s{std::vector<int>(orders_.size())};
  for (std::size_t i = 0; i < orders_.size(); ++i) s.residues[i] = (a.residues[i] + b.residues[i]) % orders_[i];
  return s;
}

}  // namespace gradedrep
