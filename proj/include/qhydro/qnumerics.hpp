#pragma once

#include <complex>
#include <span>
#include <vector>

namespace qhydro {

using Scalar = std::complex<double>;
/// Working precision of the operator algebra.
using ExtendedScalar = std::complex<long double>;

enum class QRegime { RealPositive, UnitCircle };

/// Deformation parameter q.
///
/// Either a real number q > 0, or a unit-modulus complex number e^{iθ} that
/// is not a root of unity of order up to `max_root_order`. Rationality of θ/π
/// is tested against every denominator d ≤ max_root_order with absolute
/// tolerance 1e-12; roots of larger order pass silently.
class QParam {
 public:
  static constexpr int kDefaultMaxRootOrder = 64;

  /// Real q > 0. Throws DomainError otherwise.
  static QParam real(double q);
  /// q = e^{iθ}. Throws DomainError if q is a guarded root of unity.
  static QParam unit_circle(double theta, int max_root_order = kDefaultMaxRootOrder);
  /// Classifies an arbitrary complex value into one of the two regimes.
  static QParam from_complex(Scalar q, int max_root_order = kDefaultMaxRootOrder);

  Scalar value() const { return value_; }
  QRegime regime() const { return regime_; }
  bool is_real() const { return regime_ == QRegime::RealPositive; }
  /// Real part; only meaningful for the real-positive regime.
  double real_value() const { return value_.real(); }
  /// log q on the principal branch. Real for real-positive q, iθ on the circle.
  Scalar log() const { return Scalar(log_); }
  ExtendedScalar log_extended() const { return log_; }
  /// q → 1/q.
  QParam inverse() const;
  /// Throws UnsupportedRegimeError unless the regime is real-positive.
  void require_real(const char* context) const;

 private:
  QParam(Scalar value, QRegime regime, ExtendedScalar log) : value_(value), regime_(regime), log_(log) {}

  Scalar value_;
  QRegime regime_;
  ExtendedScalar log_;
};

/// Below this |q - 1| the series branch of q_number is used.
inline constexpr double kNearOneThreshold = 1e-6;

/// [x]_q = (q^x - q^{-x}) / (q - q^{-1}), limit-safe at and near q = 1.
Scalar q_number(double x, const QParam& q);

/// q_number evaluated in extended precision.
ExtendedScalar q_number_extended(long double x, const QParam& q);

/// Real part of q_number for the real-positive regime.
double q_real(double x, const QParam& q);
long double q_real_extended(long double x, const QParam& q);

/// [n]_q = q^{n-1} + q^{n-3} + ... + q^{-(n-1)}; exact n at q = 1.
/// Throws DomainError for n < 0.
Scalar q_integer(int n, const QParam& q);

/// [A]_q of a diagonal operator given its eigenvalues.
std::vector<Scalar> q_bracket_diagonal(std::span<const double> eigenvalues, const QParam& q);

}  // namespace qhydro
