#pragma once

#include <Eigen/Dense>
#include <vector>

#include "invariants/two_phase.hpp"

namespace invariants::dense {

/// Singular values in descending order (LAPACK zgesdd, values only).
std::vector<double> singular_values(const Eigen::MatrixXcd& m);

/// Eigenvalues of a general complex square matrix (LAPACK zgeev).
std::vector<Complex> eigenvalues(const Eigen::MatrixXcd& m);

/// Eigenvalues plus right eigenvectors (columns).
struct Eigensystem {
  Eigen::VectorXcd values;
  Eigen::MatrixXcd vectors;
};
Eigensystem eigensystem(const Eigen::MatrixXcd& m);

}  // namespace invariants::dense
