#include "qhydro/qnumerics.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

#include "qhydro/errors.hpp"

namespace qhydro {

namespace {

constexpr double kRootTolerance = 1e-12;
constexpr double kModulusTolerance = 1e-12;

// sinh(y)/y summed term by term until the tail drops below 1e-17 relative.
template <typename T>
T sinhc_series(T y) {
  using R = decltype(std::abs(y));
  const R stop = std::numeric_limits<R>::epsilon() * R(0.1);
  const T y2 = y * y;
  T term = T(1.0);
  T sum = T(1.0);
  for (int k = 1; k < 40; ++k) {
    term *= y2 / T(R((2 * k) * (2 * k + 1)));
    sum += term;
    if (std::abs(term) <= stop * std::abs(sum)) break;
  }
  return sum;
}

void require_finite(ExtendedScalar v, long double x) {
  if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) {
    std::ostringstream os;
    os << "q-number [" << x << "] is not finite for this q";
    throw DomainError(os.str());
  }
}

}  // namespace

QParam QParam::real(double q) {
  if (!std::isfinite(q) || q <= 0.0) {
    std::ostringstream os;
    os << "q must be a finite real number > 0, got " << q;
    throw DomainError(os.str());
  }
  return QParam(Scalar(q, 0.0), QRegime::RealPositive, ExtendedScalar(std::log((long double)q), 0.0L));
}

QParam QParam::unit_circle(double theta, int max_root_order) {
  if (!std::isfinite(theta)) throw DomainError("q phase must be finite");
  // Wrap to (-pi, pi].
  double wrapped = std::remainder(theta, 2.0 * std::numbers::pi);
  if (wrapped <= -std::numbers::pi) wrapped += 2.0 * std::numbers::pi;
  const double r = wrapped / std::numbers::pi;
  for (int d = 1; d <= max_root_order; ++d) {
    const double p = std::round(r * d);
    if (std::abs(r - p / d) <= kRootTolerance) {
      std::ostringstream os;
      os << "q = exp(i*" << theta << ") is a root of unity (theta/pi ~ " << p << "/" << d << ")";
      throw DomainError(os.str());
    }
  }
  return QParam(std::polar(1.0, wrapped), QRegime::UnitCircle, ExtendedScalar(0.0L, wrapped));
}

QParam QParam::from_complex(Scalar q, int max_root_order) {
  if (q.imag() == 0.0 && q.real() > 0.0) return real(q.real());
  if (std::abs(std::abs(q) - 1.0) <= kModulusTolerance) return unit_circle(std::arg(q), max_root_order);
  throw DomainError("q must be real and positive or lie on the unit circle");
}

QParam QParam::inverse() const {
  if (is_real()) return real(1.0 / value_.real());
  return QParam(std::conj(value_), regime_, -log_);
}

void QParam::require_real(const char* context) const {
  if (!is_real()) {
    throw UnsupportedRegimeError(std::string(context) + " requires a real q > 0");
  }
}

ExtendedScalar q_number_extended(long double x, const QParam& q) {
  const ExtendedScalar t = q.log_extended();
  if (t == ExtendedScalar(0.0L)) return ExtendedScalar(x, 0.0L);

  const bool near_one = std::abs(q.value() - 1.0) < kNearOneThreshold;
  ExtendedScalar result;
  if (q.is_real()) {
    const long double tr = t.real();
    if (near_one && std::abs(x * tr) <= 1.0L) {
      result = x * sinhc_series(x * tr) / sinhc_series(tr);
    } else {
      result = std::sinh(x * tr) / std::sinh(tr);
    }
  } else {
    if (near_one && std::abs(x * t) <= 1.0L) {
      result = x * sinhc_series(x * t) / sinhc_series(t);
    } else {
      result = std::sinh(x * t) / std::sinh(t);
    }
  }
  require_finite(result, x);
  return result;
}

Scalar q_number(double x, const QParam& q) { return Scalar(q_number_extended(x, q)); }

double q_real(double x, const QParam& q) {
  q.require_real("q_real");
  return q_number(x, q).real();
}

long double q_real_extended(long double x, const QParam& q) {
  q.require_real("q_real");
  return q_number_extended(x, q).real();
}

Scalar q_integer(int n, const QParam& q) {
  if (n < 0) throw DomainError("q_integer requires n >= 0");
  if (n == 0) return Scalar(0.0);
  if (q.value() == Scalar(1.0)) return Scalar(double(n), 0.0);
  // Pair symmetric terms q^k + q^{-k}; the middle term (odd n) is 1.
  Scalar sum(0.0);
  for (int k = n - 1; k > 0; k -= 2) {
    const ExtendedScalar qk = std::exp((long double)k * q.log_extended());
    sum += Scalar(qk + 1.0L / qk);
  }
  if (n % 2 == 1) sum += 1.0;
  require_finite(ExtendedScalar(sum), n);
  return sum;
}

std::vector<Scalar> q_bracket_diagonal(std::span<const double> eigenvalues, const QParam& q) {
  std::vector<Scalar> out;
  out.reserve(eigenvalues.size());
  for (double e : eigenvalues) out.push_back(q_number(e, q));
  return out;
}

}  // namespace qhydro
