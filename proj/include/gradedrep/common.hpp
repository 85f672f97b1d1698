#pragma once

#include <complex>
#include <cstdint>
#include <string>
#include <vector>

#include <Eigen/Dense>
#include <boost/rational.hpp>

namespace gradedrep {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;
using Rational = boost::rational<std::int64_t>;

inline constexpr double kDefaultTolerance = 1e-9;

// Outcome of a verification predicate. `violations` holds human-readable
// descriptions of the offending items (pairs, triples, labels).
struct Report {
  bool ok = true;
  double max_residual = 0.0;
  std::vector<std::string> violations;

  void note(double residual, double tol, std::string what) {
    if (residual > max_residual) max_residual = residual;
    if (residual > tol) {
      ok = false;
      violations.push_back(std::move(what));
    }
  }
};

std::string to_string(const Rational& q);
Rational parse_rational(const std::string& text);

}  // namespace gradedrep
