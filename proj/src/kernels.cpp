#include "qhydro/kernels.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include <omp.h>

namespace qhydro::kernels {

namespace {

void require_conformable(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("matrix dimensions do not conform");
}

}  // namespace

Matrix multiply(const Matrix& a, const Matrix& b) {
  require_conformable(a, b);
  const Eigen::Index rows = a.rows();
  const Eigen::Index inner = a.cols();
  const Eigen::Index cols = b.cols();
  Matrix c = Matrix::Zero(rows, cols);

#pragma omp parallel for schedule(static)
  for (Eigen::Index j = 0; j < cols; ++j) {
    for (Eigen::Index k = 0; k < inner; ++k) {
      const auto bkj = b(k, j);
      if (bkj == Complex(0.0)) continue;
      for (Eigen::Index i = 0; i < rows; ++i) c(i, j) += a(i, k) * bkj;
    }
  }
  return c;
}

Matrix multiply_serial(const Matrix& a, const Matrix& b) {
  require_conformable(a, b);
  Matrix c(a.rows(), b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < b.cols(); ++j) {
      Complex sum(0.0);
      for (Eigen::Index k = 0; k < a.cols(); ++k) sum += a(i, k) * b(k, j);
      c(i, j) = sum;
    }
  }
  return c;
}

Matrix commutator(const Matrix& a, const Matrix& b) {
  Matrix ab = multiply(a, b);
  const Matrix ba = multiply(b, a);
  const Eigen::Index n = ab.size();
  auto* out = ab.data();
  const auto* sub = ba.data();
#pragma omp parallel for schedule(static)
  for (Eigen::Index i = 0; i < n; ++i) out[i] -= sub[i];
  return ab;
}

Matrix commutator_serial(const Matrix& a, const Matrix& b) {
  return multiply_serial(a, b) - multiply_serial(b, a);
}

double max_abs_on(const Matrix& m, std::span<const std::size_t> indices) {
  const auto n = static_cast<std::ptrdiff_t>(indices.size());
  Real worst = 0.0L;
#pragma omp parallel for reduction(max : worst) schedule(static)
  for (std::ptrdiff_t cj = 0; cj < n; ++cj) {
    const auto c = static_cast<Eigen::Index>(indices[cj]);
    for (std::size_t r : indices) worst = std::max<Real>(worst, std::abs(m(static_cast<Eigen::Index>(r), c)));
  }
  return static_cast<double>(worst);
}

double max_abs_on_serial(const Matrix& m, std::span<const std::size_t> indices) {
  Real worst = 0.0L;
  for (std::size_t c : indices)
    for (std::size_t r : indices)
      worst = std::max<Real>(worst, std::abs(m(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c))));
  return static_cast<double>(worst);
}

Matrix restrict_to(const Matrix& m, std::span<const std::size_t> indices) {
  const auto n = static_cast<Eigen::Index>(indices.size());
  Matrix out(n, n);
  for (Eigen::Index c = 0; c < n; ++c)
    for (Eigen::Index r = 0; r < n; ++r)
      out(r, c) = m(static_cast<Eigen::Index>(indices[r]), static_cast<Eigen::Index>(indices[c]));
  return out;
}

int thread_count() { return omp_get_max_threads(); }

}  // namespace qhydro::kernels
