#pragma once

#include <cstdint>
#include <string>

#include "json.hpp"

#include "gradedrep/contraction.hpp"
#include "gradedrep/gt.hpp"
#include "gradedrep/lie_algebra.hpp"
#include "gradedrep/simulation.hpp"

// JSON import/export. Reals are written as shortest round-trip decimal
// strings and complex values with a nonzero imaginary part as [re, im];
// readers also accept plain JSON numbers.
namespace gradedrep::io {

using json = nlohmann::ordered_json;

std::string format_real(double x);
json scalar_to_json(const Complex& z);
Complex scalar_from_json(const json& j);

json matrix_to_json(const Matrix& m);
Matrix matrix_from_json(const json& j);

json algebra_to_json(const lie::LieAlgebra& a);
lie::LieAlgebra algebra_from_json(const json& j);

/// Parts are stored as lists of coordinate vectors (one per basis column).
json grading_to_json(const lie::Grading& g);
lie::Grading grading_from_json(const json& j);
/// FNV-1a of the compact grading JSON, as 16 hex digits.
std::string grading_hash(const lie::Grading& g);

json rep_to_json(const gt::Representation& rep);
gt::Representation rep_from_json(const json& j);

json matrix_rep_to_json(const lie::MatrixRep& rep, const std::vector<std::string>& basis_names);

json simulation_to_json(const sim::SimulationMatrix& r);
sim::SimulationMatrix simulation_from_json(const json& j);

json table_to_json(const contract::RationalTable& t);
contract::RationalTable table_from_json(const json& j);

/// Algebra JSON plus a "contraction" block with the grading hash and ε.
json contracted_algebra_to_json(const contract::ContractedAlgebra& c);

/// Exact coefficients of the adjacent generators, "k,l" → [[row, col, "sign*sqrt(p/q)"], …].
json radicand_dump(const gt::Representation& rep);

json read_file(const std::string& path);
/// Pretty-printed with two-space indent and a trailing newline.
std::string dump(const json& j);

}  // namespace gradedrep::io
