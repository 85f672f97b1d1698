#include "doctest.h"

#include <random>

#include "gradedrep/gt.hpp"
#include "gradedrep/linalg.hpp"
#include "gradedrep/simulation.hpp"

using namespace gradedrep;
using gt::HighestWeight;

namespace {

std::vector<HighestWeight> weights(int n, int top) {
  std::vector<HighestWeight> out;
  std::vector<int> m(n, 0);
  std::function<void(int)> fill = [&](int i) {
    if (i == n - 1) {
      out.emplace_back(m);
      return;
    }
    for (int v = 0; v <= (i == 0 ? top : m[i - 1]); ++v) {
      m[i] = v;
      fill(i + 1);
    }
  };
  fill(0);
  return out;
}

Matrix random_integer_matrix(int n, std::mt19937& rng) {
  std::uniform_int_distribution<int> entry(-2, 2);
  while (true) {
    Matrix p(n, n);
    for (int r = 0; r < n; ++r)
      for (int c = 0; c < n; ++c) p(r, c) = static_cast<double>(entry(rng));
    if (std::abs(p.determinant()) >= 1.0) return p;
  }
}

}  // namespace

TEST_CASE("inner automorphisms have the expected order and eigenspaces") {
  const auto sl3 = lie::sl_algebra(3);
  const auto g = sim::auto_inner(3, 1);
  CHECK(g.order == 2);
  CHECK(g.order_residual() == 0.0);
  const Matrix ge = g.group_element();
  CHECK(std::abs(ge.determinant() - Complex(1.0)) < 1e-12);
  const auto gamma = sim::grading_from_automorphism(sl3, g);
  CHECK(gamma.part(GroupElement{{0}}).cols() == 4);
  CHECK(gamma.part(GroupElement{{1}}).cols() == 4);
  CHECK(lie::verify_grading(sl3, gamma).ok);
  CHECK_THROWS_AS(sim::auto_inner(3, 2), std::invalid_argument);
  CHECK(sim::auto_inner(4, 2).order == 2);
  CHECK(sim::auto_inner(3, 0).order == 1);
}

TEST_CASE("outer automorphism splits sl(3) into antisymmetric and symmetric parts") {
  const auto sl3 = lie::sl_algebra(3);
  const auto gamma = sim::grading_from_automorphism(sl3, sim::auto_outer(3));
  const Matrix l0 = gamma.part(GroupElement{{0}}), l1 = gamma.part(GroupElement{{1}});
  REQUIRE(l0.cols() == 3);
  REQUIRE(l1.cols() == 5);
  for (Eigen::Index c = 0; c < l0.cols(); ++c) {
    const Matrix x = lie::sl_matrix(3, l0.col(c));
    CHECK(max_abs(x + x.transpose()) <= 1e-12);
  }
  for (Eigen::Index c = 0; c < l1.cols(); ++c) {
    const Matrix x = lie::sl_matrix(3, l1.col(c));
    CHECK(max_abs(x - x.transpose()) <= 1e-12);
  }
}

TEST_CASE("automorphisms of the wrong order are rejected") {
  sim::Automorphism g;
  g.kind = sim::Automorphism::Kind::Inner;
  g.a = Matrix::Identity(3, 3);
  g.a(0, 0) = Complex(0.0, 1.0);
  g.order = 2;
  CHECK_THROWS_AS(sim::grading_from_automorphism(lie::sl_algebra(3), g), std::invalid_argument);
}

TEST_CASE("inner simulation matrices on every small weight") {
  for (int n = 2; n <= 4; ++n)
    for (const auto& hw : weights(n, 3)) {
      const auto rep = gt::build_representation(hw);
      for (int s = 1; s <= n / 2; ++s) {
        CAPTURE(hw.str());
        CAPTURE(s);
        const auto r = sim::simulation_inner(hw, s);
        CHECK(r.kind == sim::SimulationMatrix::Kind::Diagonal);
        CHECK(max_abs(r.r * r.r - Matrix::Identity(r.dim(), r.dim())) <= 1e-12);
        CHECK(sim::verify_simulation(rep.gens, sim::auto_inner(n, s), r).ok);

        // exp(r(X_{n,s})) matches R up to one global phase.
        const Matrix x = sim::rep_of_xns(hw, s);
        const Complex ratio = std::exp(x(0, 0)) / r.r(0, 0);
        CHECK(std::abs(std::abs(ratio) - 1.0) < 1e-12);
        for (int a = 0; a < rep.dim(); ++a) CHECK(std::abs(std::exp(x(a, a)) - ratio * r.r(a, a)) < 1e-9);
      }
    }
}

TEST_CASE("the global phase is trivial when the centre acts trivially") {
  const HighestWeight hw({2, 1, 0});
  const Matrix x = sim::rep_of_xns(hw, 1);
  const auto r = sim::simulation_inner(hw, 1);
  for (int a = 0; a < r.dim(); ++a) CHECK(std::abs(std::exp(x(a, a)) - r.r(a, a)) < 1e-12);
  CHECK(max_abs(sim::rep_of_xns(hw, 0)) == 0.0);
}

TEST_CASE("contragredient weights and patterns") {
  CHECK(sim::contragredient_weight(HighestWeight({1, 0, 0})) == HighestWeight({1, 1, 0}));
  CHECK(sim::contragredient_weight(HighestWeight({3, 1, 0})) == HighestWeight({3, 2, 0}));
  CHECK(sim::is_self_contragredient(HighestWeight({2, 1, 0})));
  CHECK(sim::is_self_contragredient(HighestWeight({4, 2, 0})));
  CHECK(sim::is_self_contragredient(HighestWeight({2, 1, 1, 0})));
  CHECK_FALSE(sim::is_self_contragredient(HighestWeight({2, 0, 0})));
  const gt::Pattern p({{2, 1, 0}, {2, 0}, {2}});
  CHECK(sim::pattern_conjugate(p) == gt::Pattern({{2, 1, 0}, {2, 0}, {0}}));
}

TEST_CASE("J intertwines r with its contragredient") {
  for (const auto& w : std::vector<std::vector<int>>{{1, 0, 0}, {3, 1, 0}, {2, 0, 0, 0}, {2, 1, 0, 0}}) {
    const HighestWeight hw(w);
    const auto rep = gt::build_representation(hw);
    const auto rc = gt::build_representation(sim::contragredient_weight(hw));
    const Matrix j = sim::contragredient_intertwiner(hw);
    for (const auto& x : lie::sl_basis_matrices(hw.n()))
      CHECK(max_abs(-j * rep.gens.image(x).transpose() - rc.gens.image(x) * j) <= 1e-9);
  }
}

TEST_CASE("J simulates the outer automorphism on self-contragredient weights") {
  for (const auto& w : std::vector<std::vector<int>>{
           {1, 0}, {2, 0}, {3, 0}, {2, 1, 0}, {4, 2, 0}, {1, 1, 0, 0}, {2, 1, 1, 0}, {2, 2, 0, 0}}) {
    const HighestWeight hw(w);
    CAPTURE(hw.str());
    const auto rep = gt::build_representation(hw);
    const auto j = sim::j_matrix(hw);
    CHECK(max_abs(j.r * j.r - Matrix::Identity(j.dim(), j.dim())) <= 1e-12);
    CHECK(sim::verify_simulation(rep.gens, sim::auto_outer(hw.n()), j).ok);
    const auto v = sim::decompose_rep_space(j);
    const auto gamma = sim::grading_from_automorphism(lie::sl_algebra(hw.n()), sim::auto_outer(hw.n()));
    CHECK(sim::check_compatibility(rep.gens.on_sl(), gamma, v).ok);
  }
  // Odd m_1n with n = 2 squares to -Id before rescaling.
  CHECK(sim::j_matrix(HighestWeight({1, 0})).kind == sim::SimulationMatrix::Kind::Dense);
  CHECK(sim::j_matrix(HighestWeight({2, 0})).kind == sim::SimulationMatrix::Kind::SignedPermutation);
  CHECK_THROWS_AS(sim::j_matrix(HighestWeight({2, 0, 0})), std::invalid_argument);
}

TEST_CASE("doubled representations are compatible with the outer grading") {
  for (const auto& w : std::vector<std::vector<int>>{{1, 0, 0}, {2, 0, 0}, {3, 1, 0}}) {
    const HighestWeight hw(w);
    const auto d = sim::doubled_rep(hw);
    CHECK(d.rep.dim() == 2 * gt::weyl_dim(hw));
    CHECK(d.rep.commutator_residual() <= 1e-9);
    CHECK(sim::verify_simulation(d.rep, sim::auto_outer(3), d.swap).ok);
    const auto gamma = sim::grading_from_automorphism(lie::sl_algebra(3), sim::auto_outer(3));
    CHECK(sim::check_compatibility(d.rep.on_sl(), gamma, sim::decompose_rep_space(d.swap)).ok);
  }
}

TEST_CASE("compatibility fails for a mislabelled space") {
  const HighestWeight hw({2, 1, 0});
  const auto rep = gt::build_representation(hw);
  const auto gamma = sim::grading_from_automorphism(lie::sl_algebra(3), sim::auto_inner(3, 1));
  auto v = sim::decompose_rep_space(sim::simulation_inner(hw, 1));
  CHECK(sim::check_compatibility(rep.gens.on_sl(), gamma, v).ok);
  Matrix first = v.parts.begin()->second;
  Matrix second = std::next(v.parts.begin())->second;
  // Move one vector across.
  Matrix a(first.rows(), first.cols() - 1), b(second.rows(), second.cols() + 1);
  a = first.leftCols(first.cols() - 1);
  b << second, first.rightCols(1);
  v.parts.begin()->second = a;
  std::next(v.parts.begin())->second = b;
  CHECK_FALSE(sim::check_compatibility(rep.gens.on_sl(), gamma, v).ok);
  lie::Grading wrong_group = v;
  wrong_group.group = AbelianGroup::cyclic(3);
  CHECK_THROWS(sim::check_compatibility(rep.gens.on_sl(), gamma, wrong_group));
}

TEST_CASE("desk-scale split search") {
  const auto gamma2 = sim::grading_from_automorphism(lie::sl_algebra(3), sim::auto_outer(3));
  const auto r100 = gt::build_representation(HighestWeight({1, 0, 0}));
  CHECK_FALSE(sim::search_compatible_split(r100.gens.on_sl(), gamma2).has_value());
  const auto gamma1 = sim::grading_from_automorphism(lie::sl_algebra(3), sim::auto_inner(3, 1));
  const auto found = sim::search_compatible_split(r100.gens.on_sl(), gamma1);
  REQUIRE(found.has_value());
  CHECK(sim::check_compatibility(r100.gens.on_sl(), gamma1, *found).ok);
}

TEST_CASE("conjugated involutions give Z2-gradings") {
  std::mt19937 rng(7);
  for (int t = 0; t < 30; ++t) {
    const int n = 2 + t % 3;
    const Matrix p = random_integer_matrix(n, rng);
    sim::Automorphism g;
    g.order = 2;
    if (t % 2) {
      g.kind = sim::Automorphism::Kind::OuterComposed;
      g.a = p * p.transpose();
    } else {
      g.kind = sim::Automorphism::Kind::Inner;
      g.a = p * sim::auto_inner(n, 1).a * p.fullPivLu().inverse();
    }
    const auto alg = lie::sl_algebra(n);
    CHECK(g.order_residual() <= 1e-9);
    const auto gamma = sim::grading_from_automorphism(alg, g);
    CHECK(lie::verify_grading(alg, gamma).ok);
    const Matrix a = gamma.part(GroupElement{{0}}), b = gamma.part(GroupElement{{1}});
    REQUIRE(a.cols() > 0);
    REQUIRE(b.cols() > 0);
    CHECK(lie::classify_two_part(alg, a, b) == lie::TwoPartCase::Z2Grading);
  }
}
