#include "doctest.h"

#include <random>

#include "gradedrep/contraction.hpp"
#include "gradedrep/gt.hpp"
#include "gradedrep/linalg.hpp"
#include "gradedrep/simulation.hpp"

using namespace gradedrep;
using contract::RationalTable;

namespace {

RationalTable z2(std::int64_t e00, std::int64_t e01, std::int64_t e10, std::int64_t e11) {
  return RationalTable(AbelianGroup::cyclic(2), std::vector<Rational>{Rational(e00), Rational(e01), Rational(e10), Rational(e11)});
}

// The ε-system written out by hand for ℤ₂ (symmetric tables).
bool z2_epsilon_oracle(const RationalTable& e) {
  const Rational e00 = e.at(0, 0), e01 = e.at(0, 1), e11 = e.at(1, 1);
  return e.at(0, 1) == e.at(1, 0) && (e00 - e01) * e01 == Rational(0) && (e00 - e01) * e11 == Rational(0);
}

// The ψ-system written out by hand for ℤ₂ and ε = [[1,1],[1,0]].
bool z2_psi_oracle(const RationalTable& p) {
  const Rational p00 = p.at(0, 0), p01 = p.at(0, 1), p10 = p.at(1, 0), p11 = p.at(1, 1);
  return p00 * p00 == p00 && p10 * p01 == p10 && p00 * p10 == p10 && p01 * p01 == p01 && p11 * p00 == p11 &&
         p01 * p11 == p11 && p10 * p11 == Rational(0);
}

lie::Grading gamma1() { return sim::grading_from_automorphism(lie::sl_algebra(3), sim::auto_inner(3, 1)); }

int label_of(const lie::Grading& g, int coordinate) {
  for (const auto& [label, basis] : g.parts)
    for (Eigen::Index c = 0; c < basis.cols(); ++c)
      if (basis(coordinate, c) != Complex(0.0)) return g.group.index(label);
  return -1;
}

}  // namespace

TEST_CASE("ε-system agrees with the hand-written ℤ₂ equations") {
  int solutions = 0;
  for (int mask = 0; mask < 16; ++mask) {
    const auto t = z2(mask & 1, (mask >> 1) & 1, (mask >> 2) & 1, (mask >> 3) & 1);
    CHECK(contract::verify_epsilon(t).ok == z2_epsilon_oracle(t));
    solutions += z2_epsilon_oracle(t);
  }
  CHECK(solutions == 5);

  std::mt19937 rng(11);
  std::uniform_int_distribution<int> v(-2, 2);
  for (int t = 0; t < 500; ++t) {
    const int a = v(rng), b = v(rng), c = v(rng);
    const auto table = z2(a, b, b, c);
    CHECK(contract::verify_epsilon(table).ok == z2_epsilon_oracle(table));
  }
  CHECK_FALSE(contract::verify_epsilon(z2(1, 1, 0, 1)).ok);
}

TEST_CASE("ψ-system agrees with the hand-written ℤ₂ equations") {
  const auto eps = z2(1, 1, 1, 0);
  for (int mask = 0; mask < 16; ++mask) {
    const auto t = z2((mask >> 3) & 1, (mask >> 2) & 1, (mask >> 1) & 1, mask & 1);
    CHECK(contract::verify_psi(t, eps).ok == z2_psi_oracle(t));
  }
  std::mt19937 rng(5);
  std::uniform_int_distribution<int> v(-1, 2);
  for (int t = 0; t < 500; ++t) {
    const auto table = z2(v(rng), v(rng), v(rng), v(rng));
    CHECK(contract::verify_psi(table, eps).ok == z2_psi_oracle(table));
  }
}

TEST_CASE("binary enumeration order and guard") {
  const auto eps = contract::enumerate_binary_epsilon(AbelianGroup::cyclic(2));
  REQUIRE(eps.size() == 5);
  CHECK(eps.front() == z2(0, 0, 0, 0));
  CHECK(eps.back() == z2(1, 1, 1, 1));
  for (const auto& e : eps) CHECK(contract::verify_epsilon(e).ok);
  CHECK(contract::enumerate_binary_epsilon(AbelianGroup::cyclic(1)).size() == 2);
  CHECK_NOTHROW(contract::enumerate_binary_epsilon(AbelianGroup({2, 2})));
  CHECK_THROWS_AS(contract::enumerate_binary_epsilon(AbelianGroup::cyclic(5)), std::length_error);
  CHECK_THROWS_AS(contract::enumerate_binary_psi(RationalTable(AbelianGroup({2, 3}))), std::length_error);

  // The trivial ψ for ε all ones includes the all-ones table.
  const auto psi = contract::enumerate_binary_psi(z2(1, 1, 1, 1));
  CHECK(std::find(psi.begin(), psi.end(), z2(1, 1, 1, 1)) != psi.end());
}

TEST_CASE("real tables are checked within tolerance") {
  const contract::ComplexTable half(AbelianGroup::cyclic(2), std::vector<Complex>{0.5, 0.5, 0.5, 0.0});
  CHECK(contract::verify_epsilon(half).ok);
  const contract::ComplexTable off(AbelianGroup::cyclic(2), std::vector<Complex>{0.5, 0.5 + 1e-6, 0.5 + 1e-6, 0.0});
  CHECK_FALSE(contract::verify_epsilon(off, 1e-9).ok);
  CHECK(contract::verify_epsilon(off, 1e-3).ok);
  CHECK_THROWS_AS(RationalTable(AbelianGroup::cyclic(2), std::vector<Rational>{Rational(1)}), std::invalid_argument);
}

TEST_CASE("contracted sl(3) brackets match rescaled matrix commutators") {
  const auto sl3 = lie::sl_algebra(3);
  const auto g = gamma1();
  const auto mats = lie::sl_basis_matrices(3);
  for (const auto& eps : contract::enumerate_binary_epsilon(AbelianGroup::cyclic(2))) {
    const auto c = contract::contract_algebra(sl3, g, eps);
    CHECK(lie::check_jacobi(c.result, 0.0).ok);
    for (int i = 0; i < 8; ++i)
      for (int j = 0; j < 8; ++j) {
        const Rational s = eps.at(label_of(g, i), label_of(g, j));
        const double scale = static_cast<double>(s.numerator()) / static_cast<double>(s.denominator());
        const Vector oracle = scale * lie::sl_coordinates(commutator(mats[i], mats[j]));
        CHECK(max_abs(c.result.bracket(sl3.basis_vector(i), sl3.basis_vector(j)) - oracle) == 0.0);
      }
  }
}

TEST_CASE("contraction along a non-coordinate grading") {
  const auto sl3 = lie::sl_algebra(3);
  const auto g2 = sim::grading_from_automorphism(sl3, sim::auto_outer(3));
  for (const auto& eps : contract::enumerate_binary_epsilon(AbelianGroup::cyclic(2))) {
    const auto c = contract::contract_algebra(sl3, g2, eps);
    CHECK(lie::check_jacobi(c.result, 1e-12).ok);
  }
  const auto same = contract::contract_algebra(sl3, g2, z2(1, 1, 1, 1));
  for (int i = 0; i < 8; ++i)
    for (int j = 0; j < 8; ++j)
      CHECK(max_abs(same.result.bracket(sl3.basis_vector(i), sl3.basis_vector(j)) -
                    sl3.bracket(sl3.basis_vector(i), sl3.basis_vector(j))) <= 1e-12);
}

TEST_CASE("contract_algebra rejects invalid input") {
  const auto sl3 = lie::sl_algebra(3);
  CHECK_THROWS_AS(contract::contract_algebra(sl3, gamma1(), z2(1, 1, 0, 1)), std::invalid_argument);
  CHECK_THROWS_AS(contract::contract_algebra(sl3, gamma1(), RationalTable(AbelianGroup::cyclic(3))),
                  std::invalid_argument);
}

TEST_CASE("contracted representations have the block form") {
  const gt::HighestWeight hw({1, 0, 0});
  const auto rep = gt::build_representation(hw);
  const auto g = gamma1();
  const auto v = sim::decompose_rep_space(sim::simulation_inner(hw, 1));
  const auto base = rep.gens.on_sl();
  for (const auto& eps : contract::enumerate_binary_epsilon(AbelianGroup::cyclic(2))) {
    const auto calg = contract::contract_algebra(lie::sl_algebra(3), g, eps);
    for (const auto& psi : contract::enumerate_binary_psi(eps)) {
      const auto crep = contract::contract_rep(base, g, v, psi, eps);
      CHECK(contract::verify_rep_homomorphism(crep, calg).ok);
      for (int i = 0; i < 8; ++i) {
        Matrix oracle = base.mats[i];
        for (int col = 0; col < 3; ++col) {
          const Rational s = psi.at(label_of(g, i), label_of(v, col));
          oracle.col(col) *= static_cast<double>(s.numerator());
        }
        CHECK(max_abs(crep.result.mats[i] - oracle) == 0.0);
      }
    }
  }
}

TEST_CASE("contract_rep validates its inputs") {
  const gt::HighestWeight hw({1, 0, 0});
  const auto rep = gt::build_representation(hw);
  const auto g = gamma1();
  const auto v = sim::decompose_rep_space(sim::simulation_inner(hw, 1));
  const auto eps = z2(1, 1, 1, 0);
  CHECK_THROWS_AS(contract::contract_rep(rep.gens.on_sl(), g, v, z2(0, 1, 1, 1), eps), std::invalid_argument);
  const auto trivial_v = sim::decompose_rep_space(sim::simulation_inner(hw, 0));
  CHECK_THROWS_AS(contract::contract_rep(rep.gens.on_sl(), g, trivial_v, z2(1, 1, 1, 1), eps), std::invalid_argument);
  lie::Grading mixed{AbelianGroup::cyclic(2), {}};
  mixed.parts[GroupElement{{0}}] = Matrix::Identity(3, 3).leftCols(2);
  mixed.parts[GroupElement{{1}}] = Matrix::Identity(3, 3).rightCols(1);
  CHECK_THROWS_AS(contract::contract_rep(rep.gens.on_sl(), g, mixed, z2(1, 1, 1, 1), z2(1, 1, 1, 1)),
                  std::invalid_argument);
}

TEST_CASE("a ψ outside the solution set breaks the homomorphism") {
  const gt::HighestWeight hw({2, 1, 0});
  const auto rep = gt::build_representation(hw);
  const auto g = gamma1();
  const auto v = sim::decompose_rep_space(sim::simulation_inner(hw, 1));
  const auto eps = z2(1, 1, 1, 0);
  const auto bad = z2(1, 0, 1, 1);
  REQUIRE_FALSE(contract::verify_psi(bad, eps).ok);
  const auto calg = contract::contract_algebra(lie::sl_algebra(3), g, eps);
  const auto crep = contract::contract_rep(rep.gens.on_sl(), g, v, bad, eps, kDefaultTolerance, false);
  CHECK_FALSE(contract::verify_rep_homomorphism(crep, calg).ok);
}
