#include "gradedrep/io.hpp"

#include <charconv>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace gradedrep::io {

namespace {

double real_from_json(const json& j) {
  if (j.is_number()) return j.get<double>();
  if (j.is_string()) {
    const auto s = j.get<std::string>();
    double x = 0.0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), x);
    if (ec != std::errc() || ptr != s.data() + s.size()) throw std::invalid_argument("not a real number: " + s);
    return x;
  }
  throw std::invalid_argument("expected a number or decimal string, got " + j.dump());
}

std::vector<int> int_list(const json& j) { return j.get<std::vector<int>>(); }

json group_to_json(const AbelianGroup& g) { return g.orders(); }

const json& field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw std::invalid_argument(std::string("missing field \"") + key + "\"");
  return j.at(key);
}

std::string pair_key(int k, int l) { return std::to_string(k) + "," + std::to_string(l); }

}  // namespace

std::string format_real(double x) {
  if (x == 0.0) x = 0.0;  // drop the sign of -0
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, x);
  if (ec != std::errc()) throw std::runtime_error("format_real failed");
  return std::string(buf, ptr);
}

json scalar_to_json(const Complex& z) {
  if (z.imag() == 0.0) return format_real(z.real());
  return json::array({format_real(z.real()), format_real(z.imag())});
}

Complex scalar_from_json(const json& j) {
  if (j.is_array()) {
    if (j.size() != 2) throw std::invalid_argument("complex value must be [re, im]");
    return {real_from_json(j[0]), real_from_json(j[1])};
  }
  return {real_from_json(j), 0.0};
}

json matrix_to_json(const Matrix& m) {
  json rows = json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (Eigen::Index c = 0; c < m.cols(); ++c) row.push_back(scalar_to_json(m(r, c)));
    rows.push_back(std::move(row));
  }
  return rows;
}

Matrix matrix_from_json(const json& j) {
  if (!j.is_array()) throw std::invalid_argument("matrix must be a list of rows");
  const auto rows = static_cast<Eigen::Index>(j.size());
  const auto cols = rows ? static_cast<Eigen::Index>(j[0].size()) : 0;
  Matrix m(rows, cols);
  for (Eigen::Index r = 0; r < rows; ++r) {
    if (static_cast<Eigen::Index>(j[r].size()) != cols) throw std::invalid_argument("ragged matrix rows");
    for (Eigen::Index c = 0; c < cols; ++c) m(r, c) = scalar_from_json(j[r][c]);
  }
  return m;
}

json algebra_to_json(const lie::LieAlgebra& a) {
  json constants = json::array();
  for (const auto& c : a.constants())
    constants.push_back({c.i, c.j, c.l, format_real(c.value.real()), format_real(c.value.imag())});
  json out;
  out["dim"] = a.dim();
  out["basis"] = a.basis_names();
  out["constants"] = std::move(constants);
  return out;
}

lie::LieAlgebra algebra_from_json(const json& j) {
  const int dim = field(j, "dim").get<int>();
  std::vector<std::string> names;
  if (j.contains("basis")) {
    names = j.at("basis").get<std::vector<std::string>>();
  } else {
    for (int i = 0; i < dim; ++i) names.push_back("e" + std::to_string(i));
  }
  if (static_cast<int>(names.size()) != dim) throw std::invalid_argument("basis length differs from dim");
  std::vector<lie::LieAlgebra::Constant> constants;
  for (const auto& c : field(j, "constants")) {
    if (c.size() != 4 && c.size() != 5) throw std::invalid_argument("constant entries are [i, j, l, re(, im)]");
    const double im = c.size() == 5 ? real_from_json(c[4]) : 0.0;
    constants.push_back({c[0].get<int>(), c[1].get<int>(), c[2].get<int>(), Complex(real_from_json(c[3]), im)});
  }
  return lie::LieAlgebra::from_constants(std::move(names), constants);
}

json grading_to_json(const lie::Grading& g) {
  json parts = json::object();
  for (const auto& [label, basis] : g.parts) {
    json vectors = json::array();
    for (Eigen::Index c = 0; c < basis.cols(); ++c) {
      json v = json::array();
      for (Eigen::Index r = 0; r < basis.rows(); ++r) v.push_back(scalar_to_json(basis(r, c)));
      vectors.push_back(std::move(v));
    }
    parts[label.label()] = std::move(vectors);
  }
  json out;
  out["group"] = group_to_json(g.group);
  out["parts"] = std::move(parts);
  return out;
}

lie::Grading grading_from_json(const json& j) {
  lie::Grading g;
  g.group = AbelianGroup(int_list(field(j, "group")));
  int dim = -1;
  for (const auto& [key, vectors] : field(j, "parts").items()) {
    const auto label = GroupElement::parse(key);
    if (!g.group.contains(label)) throw std::invalid_argument("label " + key + " not in group");
    const auto cols = static_cast<Eigen::Index>(vectors.size());
    const auto rows = cols ? static_cast<Eigen::Index>(vectors[0].size()) : 0;
    if (cols && dim >= 0 && rows != dim) throw std::invalid_argument("part vectors differ in length");
    if (cols) dim = static_cast<int>(rows);
    Matrix basis(rows, cols);
    for (Eigen::Index c = 0; c < cols; ++c) {
      if (static_cast<Eigen::Index>(vectors[c].size()) != rows) throw std::invalid_argument("ragged part vectors");
      for (Eigen::Index r = 0; r < rows; ++r) basis(r, c) = scalar_from_json(vectors[c][r]);
    }
    if (!g.parts.emplace(label, std::move(basis)).second) throw std::invalid_argument("duplicate label " + key);
  }
  if (dim < 0) throw std::invalid_argument("grading has no nonempty part");
  for (auto& [label, basis] : g.parts)
    if (basis.cols() == 0) basis.resize(dim, 0);
  return g;
}

std::string grading_hash(const lie::Grading& g) {
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char ch : grading_to_json(g).dump()) {
    h ^= ch;
    h *= 1099511628211ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

json rep_to_json(const gt::Representation& rep) {
  const int n = rep.hw.n();
  json basis = json::array();
  for (const auto& p : rep.basis) basis.push_back(p.flattened());
  json gens = json::object();
  for (int k = 1; k <= n; ++k)
    for (int l = 1; l <= n; ++l) gens[pair_key(k, l)] = matrix_to_json(rep.gens.gen(k, l).real());
  json out;
  out["n"] = n;
  out["highest_weight"] = rep.hw.entries();
  out["dim"] = rep.dim();
  out["basis"] = std::move(basis);
  out["generators"] = std::move(gens);
  return out;
}

gt::Representation rep_from_json(const json& j) {
  const int n = field(j, "n").get<int>();
  gt::HighestWeight hw(int_list(field(j, "highest_weight")));
  if (hw.n() != n) throw std::invalid_argument("highest_weight length differs from n");
  const int dim = field(j, "dim").get<int>();
  std::vector<gt::Pattern> basis;
  for (const auto& flat : field(j, "basis")) {
    const auto v = int_list(flat);
    if (static_cast<int>(v.size()) != n * (n + 1) / 2) throw std::invalid_argument("flattened pattern has wrong length");
    std::vector<std::vector<int>> rows;
    std::size_t at = 0;
    for (int len = n; len >= 1; --len) {
      rows.emplace_back(v.begin() + at, v.begin() + at + len);
      at += len;
    }
    basis.emplace_back(std::move(rows));
  }
  if (static_cast<int>(basis.size()) != dim) throw std::invalid_argument("basis length differs from dim");
  gt::Representation rep{hw, std::move(basis), Realization(n, dim)};
  const auto& gens = field(j, "generators");
  for (int k = 1; k <= n; ++k)
    for (int l = 1; l <= n; ++l) {
      Matrix m = matrix_from_json(field(gens, pair_key(k, l).c_str()));
      if (m.rows() != dim || m.cols() != dim) throw std::invalid_argument("generator " + pair_key(k, l) + " has wrong size");
      rep.gens.gen(k, l) = std::move(m);
    }
  return rep;
}

json matrix_rep_to_json(const lie::MatrixRep& rep, const std::vector<std::string>& basis_names) {
  if (basis_names.size() != rep.mats.size()) throw std::invalid_argument("basis names do not match representation");
  json gens = json::object();
  for (std::size_t i = 0; i < rep.mats.size(); ++i) gens[basis_names[i]] = matrix_to_json(rep.mats[i]);
  json out;
  out["dim"] = rep.dim();
  out["basis"] = basis_names;
  out["generators"] = std::move(gens);
  return out;
}

json simulation_to_json(const sim::SimulationMatrix& r) {
  json out;
  out["dim"] = r.dim();
  out["order"] = r.order;
  out["kind"] = sim::to_string(r.kind);
  switch (r.kind) {
    case sim::SimulationMatrix::Kind::Diagonal: {
      json diag = json::array();
      for (int i = 0; i < r.dim(); ++i) diag.push_back(scalar_to_json(r.r(i, i)));
      out["diagonal"] = std::move(diag);
      break;
    }
    case sim::SimulationMatrix::Kind::SignedPermutation: {
      json perm = json::array(), signs = json::array();
      for (int i = 0; i < r.dim(); ++i)
        for (int c = 0; c < r.dim(); ++c)
          if (r.r(i, c) != Complex(0.0)) {
            perm.push_back(c);
            signs.push_back(r.r(i, c).real() > 0 ? 1 : -1);
          }
      out["permutation"] = std::move(perm);
      out["signs"] = std::move(signs);
      break;
    }
    case sim::SimulationMatrix::Kind::Dense:
      out["matrix"] = matrix_to_json(r.r);
      break;
  }
  return out;
}

sim::SimulationMatrix simulation_from_json(const json& j) {
  sim::SimulationMatrix r;
  const int d = field(j, "dim").get<int>();
  r.order = field(j, "order").get<int>();
  const auto kind = field(j, "kind").get<std::string>();
  r.r = Matrix::Zero(d, d);
  if (kind == "diagonal") {
    r.kind = sim::SimulationMatrix::Kind::Diagonal;
    const auto& diag = field(j, "diagonal");
    if (static_cast<int>(diag.size()) != d) throw std::invalid_argument("diagonal has wrong length");
    for (int i = 0; i < d; ++i) r.r(i, i) = scalar_from_json(diag[i]);
  } else if (kind == "signed_permutation") {
    r.kind = sim::SimulationMatrix::Kind::SignedPermutation;
    const auto perm = int_list(field(j, "permutation"));
    const auto signs = int_list(field(j, "signs"));
    if (static_cast<int>(perm.size()) != d || static_cast<int>(signs.size()) != d)
      throw std::invalid_argument("permutation/signs have wrong length");
    for (int i = 0; i < d; ++i) {
      if (perm[i] < 0 || perm[i] >= d) throw std::invalid_argument("permutation index out of range");
      r.r(i, perm[i]) = static_cast<double>(signs[i]);
    }
  } else if (kind == "dense") {
    r.kind = sim::SimulationMatrix::Kind::Dense;
    r.r = matrix_from_json(field(j, "matrix"));
    if (r.r.rows() != d || r.r.cols() != d) throw std::invalid_argument("matrix has wrong size");
  } else {
    throw std::invalid_argument("unknown simulation kind " + kind);
  }
  return r;
}

json table_to_json(const contract::RationalTable& t) {
  json values = json::array();
  for (int a = 0; a < t.size(); ++a)
    for (int b = 0; b < t.size(); ++b) {
      const auto& q = t.at(a, b);
      values.push_back({t.group().element(a).residues, t.group().element(b).residues, q.numerator(), q.denominator()});
    }
  json out;
  out["group"] = group_to_json(t.group());
  out["values"] = std::move(values);
  return out;
}

contract::RationalTable table_from_json(const json& j) {
  contract::RationalTable t(AbelianGroup(int_list(field(j, "group"))));
  std::vector<bool> seen(static_cast<std::size_t>(t.size()) * t.size(), false);
  for (const auto& v : field(j, "values")) {
    if (v.size() != 4) throw std::invalid_argument("table entries are [[i…], [j…], num, den]");
    const GroupElement a{int_list(v[0])}, b{int_list(v[1])};
    if (!t.group().contains(a) || !t.group().contains(b)) throw std::invalid_argument("table label not in group");
    const auto den = v[3].get<std::int64_t>();
    if (den == 0) throw std::invalid_argument("zero denominator in table");
    const int ia = t.group().index(a), ib = t.group().index(b);
    t.at(ia, ib) = Rational(v[2].get<std::int64_t>(), den);
    seen[static_cast<std::size_t>(ia) * t.size() + ib] = true;
  }
  for (bool s : seen)
    if (!s) throw std::invalid_argument("table is missing entries");
  return t;
}

json contracted_algebra_to_json(const contract::ContractedAlgebra& c) {
  json out = algebra_to_json(c.result);
  json block;
  block["grading_hash"] = grading_hash(c.grading);
  block["epsilon"] = table_to_json(c.eps);
  out["contraction"] = std::move(block);
  return out;
}

json radicand_dump(const gt::Representation& rep) {
  const int n = rep.hw.n();
  json out = json::object();
  for (int k = 2; k <= n; ++k) {
    json low = json::array(), high = json::array();
    for (int a = 0; a < rep.dim(); ++a) {
      for (const auto& mv : gt::act_lowering(rep.basis[a], k))
        low.push_back({rep.index_of(mv.target), a, mv.coefficient.str()});
      for (const auto& mv : gt::act_raising(rep.basis[a], k))
        high.push_back({rep.index_of(mv.target), a, mv.coefficient.str()});
    }
    out[pair_key(k, k - 1)] = std::move(low);
    out[pair_key(k - 1, k)] = std::move(high);
  }
  return out;
}

json read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw std::invalid_argument(path + ": " + e.what());
  }
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

}  // namespace gradedrep::io
