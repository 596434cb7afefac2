#pragma once

// Dense complex matrix kernels used by the operator algebra.
//
// Every kernel has an OpenMP implementation and a `_serial` reference twin
// kept for testing and benchmarking. The parallel versions partition work by
// output column, so results do not depend on the thread count.

#include <complex>
#include <cstddef>
#include <span>

#include <Eigen/Dense>

namespace qhydro::kernels {

// Extended precision: relation residuals are differences of entries that grow
// like [n]_q^2 (~1e7 at q = 2, n = 13), so double rounding alone would exceed 1e-9.
using Real = long double;
using Complex = std::complex<Real>;
using Matrix = Eigen::Matrix<Complex, Eigen::Dynamic, Eigen::Dynamic>;
using Vector = Eigen::Matrix<Complex, Eigen::Dynamic, 1>;

/// C = A * B. Skips zero entries of B, which keeps the ladder-operator
/// products (one nonzero per column) close to linear in the dimension.
Matrix multiply(const Matrix& a, const Matrix& b);
Matrix multiply_serial(const Matrix& a, const Matrix& b);

/// AB - BA.
Matrix commutator(const Matrix& a, const Matrix& b);
Matrix commutator_serial(const Matrix& a, const Matrix& b);

/// max |M(r, c)| over r, c in `indices`.
double max_abs_on(const Matrix& m, std::span<const std::size_t> indices);
double max_abs_on_serial(const Matrix& m, std::span<const std::size_t> indices);

/// The principal submatrix M[indices, indices].
Matrix restrict_to(const Matrix& m, std::span<const std::size_t> indices);

/// Number of OpenMP threads the parallel kernels will use.
int thread_count();

}  // namespace qhydro::kernels
