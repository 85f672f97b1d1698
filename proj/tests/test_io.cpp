#include "doctest.h"

#include "gradedrep/io.hpp"
#include "gradedrep/linalg.hpp"

using namespace gradedrep;
using io::json;

TEST_CASE("reals are written as shortest round-trip strings") {
  CHECK(io::format_real(0.0) == "0");
  CHECK(io::format_real(-0.0) == "0");
  CHECK(io::format_real(1.0) == "1");
  CHECK(io::format_real(-2.5) == "-2.5");
  CHECK(io::format_real(0.1) == "0.1");
  const double r2 = std::sqrt(2.0);
  CHECK(io::scalar_from_json(io::scalar_to_json(r2)).real() == r2);
  CHECK(io::scalar_to_json(Complex(0.0, 1.0)) == json::array({"0", "1"}));
  CHECK(io::scalar_from_json(json(3)) == Complex(3.0));
  CHECK(io::scalar_from_json(json::array({1, "-0.5"})) == Complex(1.0, -0.5));
  CHECK_THROWS_AS(io::scalar_from_json(json("1x")), std::invalid_argument);
  CHECK_THROWS_AS(io::scalar_from_json(json::array({1, 2, 3})), std::invalid_argument);
}

TEST_CASE("algebra JSON round-trips") {
  const auto sl3 = lie::sl_algebra(3);
  const json j = io::algebra_to_json(sl3);
  CHECK(j["dim"] == 8);
  CHECK(j["basis"][3] == "H1");
  const auto back = io::algebra_from_json(j);
  CHECK(io::algebra_to_json(back) == j);

  const json minimal = json::parse(R"({"dim": 2, "constants": [[0, 1, 1, 1]]})");
  const auto a = io::algebra_from_json(minimal);
  CHECK(a.basis_names() == std::vector<std::string>{"e0", "e1"});
  CHECK_THROWS_AS(io::algebra_from_json(json::parse(R"({"dim": 2})")), std::invalid_argument);
}

TEST_CASE("grading JSON round-trips and hashes deterministically") {
  const auto g = sim::grading_from_automorphism(lie::sl_algebra(3), sim::auto_outer(3));
  const json j = io::grading_to_json(g);
  CHECK(j["group"] == json::array({2}));
  CHECK(j["parts"]["0"].size() == 3);
  CHECK(j["parts"]["1"].size() == 5);
  const auto back = io::grading_from_json(j);
  CHECK(io::grading_to_json(back) == j);
  CHECK(io::grading_hash(back) == io::grading_hash(g));
  CHECK(io::grading_hash(g).size() == 16);
  CHECK(io::grading_hash(g) !=
        io::grading_hash(sim::grading_from_automorphism(lie::sl_algebra(3), sim::auto_inner(3, 1))));

  CHECK_THROWS_AS(io::grading_from_json(json::parse(R"({"group": [2], "parts": {"2": [[1]]}})")),
                  std::invalid_argument);
  CHECK_THROWS_AS(io::grading_from_json(json::parse(R"({"group": [2], "parts": {"0": [[1, 0]], "1": [[1]]}})")),
                  std::invalid_argument);
}

TEST_CASE("representation JSON round-trips") {
  const auto rep = gt::build_representation(gt::HighestWeight({2, 1, 0}));
  const json j = io::rep_to_json(rep);
  CHECK(j["dim"] == 8);
  CHECK(j["basis"][0] == json::array({2, 1, 0, 1, 0, 0}));
  CHECK(j["generators"].size() == 9);
  const auto back = io::rep_from_json(j);
  CHECK(back.basis == rep.basis);
  for (int k = 1; k <= 3; ++k)
    for (int l = 1; l <= 3; ++l) CHECK(max_abs(back.gens.gen(k, l) - rep.gens.gen(k, l)) == 0.0);

  json broken = j;
  broken["generators"].erase("1,2");
  CHECK_THROWS_AS(io::rep_from_json(broken), std::invalid_argument);

  const json rad = io::radicand_dump(rep);
  CHECK(rad.contains("2,1"));
  CHECK(rad.contains("2,3"));
  CHECK(rad["2,1"][0][2].get<std::string>().rfind("1*sqrt(", 0) == 0);
}

TEST_CASE("simulation JSON payload follows the kind") {
  const auto j = sim::j_matrix(gt::HighestWeight({2, 1, 0}));
  const json jj = io::simulation_to_json(j);
  CHECK(jj["kind"] == "signed_permutation");
  CHECK(jj["permutation"].size() == 8);
  CHECK(max_abs(io::simulation_from_json(jj).r - j.r) == 0.0);

  const auto r = sim::simulation_inner(gt::HighestWeight({1, 0, 0}), 1);
  const json rj = io::simulation_to_json(r);
  CHECK(rj["kind"] == "diagonal");
  CHECK(max_abs(io::simulation_from_json(rj).r - r.r) == 0.0);

  const auto dense = sim::j_matrix(gt::HighestWeight({1, 0}));
  const json dj = io::simulation_to_json(dense);
  CHECK(dj["kind"] == "dense");
  CHECK(max_abs(io::simulation_from_json(dj).r - dense.r) == 0.0);
  CHECK_THROWS_AS(io::simulation_from_json(json::parse(R"({"dim": 1, "order": 1, "kind": "other"})")),
                  std::invalid_argument);
}

TEST_CASE("tables use exact rational pairs") {
  contract::RationalTable t(AbelianGroup::cyclic(2),
                            std::vector<Rational>{Rational(1), Rational(1, 2), Rational(1, 2), Rational(0)});
  const json j = io::table_to_json(t);
  CHECK(j["values"][1] == json::parse("[[0], [1], 1, 2]"));
  CHECK(io::table_from_json(j) == t);
  json missing = j;
  missing["values"].erase(0);
  CHECK_THROWS_AS(io::table_from_json(missing), std::invalid_argument);
}

TEST_CASE("contracted algebra carries its provenance") {
  const auto sl3 = lie::sl_algebra(3);
  const auto g = sim::grading_from_automorphism(sl3, sim::auto_inner(3, 1));
  contract::RationalTable eps(AbelianGroup::cyclic(2),
                              std::vector<Rational>{Rational(1), Rational(1), Rational(1), Rational(0)});
  const auto c = contract::contract_algebra(sl3, g, eps);
  const json j = io::contracted_algebra_to_json(c);
  CHECK(j["contraction"]["grading_hash"] == io::grading_hash(g));
  CHECK(io::table_from_json(j["contraction"]["epsilon"]) == eps);
  CHECK(io::dump(j) == io::dump(io::contracted_algebra_to_json(contract::contract_algebra(sl3, g, eps))));
  const auto back = io::algebra_from_json(j);
  CHECK(back.dim() == 8);
}
