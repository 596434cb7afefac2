#pragma once

#include <utility>

#include "qhydro/qnumerics.hpp"
#include "qhydro/units.hpp"

namespace qhydro {

/// Splitting of the n = 2 shell, Delta = E_1100 - E_2000, in a chosen unit.
struct SplittingResult {
  double q = 1.0;
  double delta_exact = 0.0;
  double delta_quadratic = 0.0;
  EnergyUnit unit = EnergyUnit::Wavenumber;
  AtomConfig config;
};

/// (E_1100 - E_2000) / E0 evaluated in closed form without cancellation. Non-negative.
double splitting_ratio(const QParam& q);

SplittingResult splitting_exact(double q, const AtomConfig& config = {},
                                EnergyUnit unit = EnergyUnit::Wavenumber);

/// (3/16) E0 (q - 1)^2 in `unit`.
double splitting_quadratic(double q, const AtomConfig& config = {},
                           EnergyUnit unit = EnergyUnit::Wavenumber);

struct FitResult {
  double q_fitted = 1.0;     // the q >= 1 root
  double q_conjugate = 1.0;  // 1 / q_fitted, the equivalent root below 1
  double residual = 0.0;     // | |Delta(q_fitted)| - target | in the target unit
  int iterations = 0;
  std::pair<double, double> bracket;
  double signed_delta = 0.0;  // Delta(q_fitted) with its sign
};

inline constexpr double kDefaultFitTolerance = 1e-12;
/// Bracket width in q at which bisection is allowed to stop.
inline constexpr double kFitQTolerance = 1e-10;
/// Upper end of the bracket search.
inline constexpr double kFitQCeiling = 10.0;

/// Finds q >= 1 with | |Delta_exact(q)| - target | <= tol by bracketed bisection.
/// Throws FitDomainError when the target cannot be bracketed in (1, 10].
FitResult fit_q(double target_magnitude, EnergyUnit unit = EnergyUnit::Wavenumber,
                const AtomConfig& config = {}, double tol = kDefaultFitTolerance);

}  // namespace qhydro
