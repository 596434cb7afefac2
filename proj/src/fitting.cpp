#include "qhydro/fitting.hpp"

#include <cmath>
#include <sstream>

#include "qhydro/errors.hpp"

namespace qhydro {

double splitting_ratio(const QParam& q) {
  q.require_real("splitting");
  const double t = q.log().real();
  const double s = q_real(2.0, q);             // [2]
  const double sh = std::sinh(0.5 * t);
  const double s_minus_two = 4.0 * sh * sh;    // [2] - 2 = (q - 1)^2 / q
  const double a = s + 2.0;                    // nu_1100 / 2
  const double b = s + q_real(3.0, q) + 3.0;   // nu_2000 / 2
  const double b_minus_2a = s_minus_two * (s + 1.0);
  return 4.0 * b_minus_2a * (b + 2.0 * a) / (a * a * b * b);
}

SplittingResult splitting_exact(double q, const AtomConfig& config, EnergyUnit unit) {
  const auto qp = QParam::real(q);
  SplittingResult result;
  result.q = q;
  result.delta_exact = convert(splitting_ratio(qp), EnergyUnit::RatioOfE0, unit, config);
  result.delta_quadratic = splitting_quadratic(q, config, unit);
  result.unit = unit;
  result.config = config;
  return result;
}

double splitting_quadratic(double q, const AtomConfig& config, EnergyUnit unit) {
  QParam::real(q);
  const double dq = q - 1.0;
  return convert(3.0 / 16.0 * dq * dq, EnergyUnit::RatioOfE0, unit, config);
}

FitResult fit_q(double target, EnergyUnit unit, const AtomConfig& config, double tol) {
  if (!(tol > 0.0)) throw DomainError("fit tolerance must be > 0");
  config.validate();
  if (!(target > 0.0) || !std::isfinite(target)) {
    throw FitDomainError("fit target must be a finite magnitude > 0");
  }
  auto magnitude = [&](double q) { return std::abs(convert(splitting_ratio(QParam::real(q)), EnergyUnit::RatioOfE0, unit, config)); };

  double lo = 1.0 + 1e-9;
  if (magnitude(lo) >= target) {
    throw FitDomainError("fit target is below the smallest resolvable splitting");
  }
  double hi = lo;
  for (int k = 0;; ++k) {
    const double next = std::min(1.0 + 0.01 * std::ldexp(1.0, k), kFitQCeiling);
    if (magnitude(next) >= target) {
      hi = next;
      break;
    }
    lo = next;
    if (next >= kFitQCeiling) {
      std::ostringstream os;
      os << "fit target " << target << " " << to_string(unit) << " exceeds every splitting reachable with q <= "
         << kFitQCeiling;
      throw FitDomainError(os.str());
    }
  }

  FitResult result;
  result.bracket = {lo, hi};
  double best_q = hi;
  double best_residual = std::abs(magnitude(hi) - target);
  for (int it = 1; it <= 200; ++it) {
    const double mid = 0.5 * (lo + hi);
    const double f = magnitude(mid) - target;
    result.iterations = it;
    if (std::abs(f) <= best_residual) {
      best_residual = std::abs(f);
      best_q = mid;
    }
    if (f < 0.0) {
      lo = mid;
    } else {
      hi = mid;
    }
    if (best_residual <= tol && hi - lo <= kFitQTolerance) break;
    if (std::nextafter(lo, hi) >= hi) break;
  }
  if (best_residual > tol) {
    std::ostringstream os;
    os << "bisection stalled with residual " << best_residual << " > tolerance " << tol;
    throw FitDomainError(os.str());
  }
  result.q_fitted = best_q;
  result.q_conjugate = 1.0 / best_q;
  result.residual = best_residual;
  result.bracket = {std::min(lo, best_q), std::max(hi, best_q)};
  result.signed_delta = convert(splitting_ratio(QParam::real(best_q)), EnergyUnit::RatioOfE0, unit, config);
  return result;
}

}  // namespace qhydro
