#include "invariants/dense.hpp"

#include <lapacke.h>

#include <stdexcept>

namespace invariants::dense {

namespace {

lapack_complex_double* lapack_ptr(Eigen::MatrixXcd& m) {
  return reinterpret_cast<lapack_complex_double*>(m.data());
}

[[noreturn]] void fail(const char* routine, lapack_int info) {
  throw std::runtime_error(std::string(routine) + " failed with info " +
                           std::to_string(info));
}

}  // namespace

std::vector<double> singular_values(const Eigen::MatrixXcd& m) {
  Eigen::MatrixXcd work = m;  // column-major, destroyed by the driver
  const lapack_int rows = static_cast<lapack_int>(m.rows());
  const lapack_int cols = static_cast<lapack_int>(m.cols());
  std::vector<double> s(static_cast<std::size_t>(std::min(rows, cols)));
  const lapack_int info =
      LAPACKE_zgesdd(LAPACK_COL_MAJOR, 'N', rows, cols, lapack_ptr(work),
                     rows, s.data(), nullptr, 1, nullptr, 1);
  if (info != 0) fail("zgesdd", info);
  return s;
}

std::vector<Complex> eigenvalues(const Eigen::MatrixXcd& m) {
  if (m.rows() != m.cols())
    throw std::invalid_argument("eigenvalues of a non-square matrix");
  Eigen::MatrixXcd work = m;
  const lapack_int n = static_cast<lapack_int>(m.rows());
  std::vector<Complex> w(static_cast<std::size_t>(n));
  const lapack_int info = LAPACKE_zgeev(
      LAPACK_COL_MAJOR, 'N', 'N', n, lapack_ptr(work), n,
      reinterpret_cast<lapack_complex_double*>(w.data()), nullptr, 1,
      nullptr, 1);
  if (info != 0) fail("zgeev", info);
  return w;
}

Eigensystem eigensystem(const Eigen::MatrixXcd& m) {
  if (m.rows() != m.cols())
    throw std::invalid_argument("eigensystem of a non-square matrix");
  Eigen::MatrixXcd work = m;
  const lapack_int n = static_cast<lapack_int>(m.rows());
  Eigensystem out;
  out.values.resize(n);
  out.vectors.resize(n, n);
  const lapack_int info = LAPACKE_zgeev(
      LAPACK_COL_MAJOR, 'N', 'V', n, lapack_ptr(work), n,
      reinterpret_cast<lapack_complex_double*>(out.values.data()), nullptr, 1,
      reinterpret_cast<lapack_complex_double*>(out.vectors.data()), n);
  if (info != 0) fail("zgeev", info);
  return out;
}

}  // namespace invariants::dense
