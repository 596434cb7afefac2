#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "qhydro/qnumerics.hpp"

namespace qhydro {

// All energies here are dimensionless ratios E / E0; see units.hpp for E0.

/// One level of the spectrum obtained by deforming both su(2) factors of so(4).
struct PauliLevel {
  int two_j = 0;
  double energy_ratio = 1.0;
  int degeneracy = 1;  // (2j + 1)^2
};

/// 1 / (4 [j][j+1] + 1). Throws DomainError for two_j < 0 or non-real q.
double pauli_energy(int two_j, const QParam& q);

/// Levels 2j = 0 .. max_two_j, ground state first.
std::vector<PauliLevel> pauli_spectrum(int max_two_j, const QParam& q);

/// Oscillator quanta (n1, n2, n3, n4) of the four-dimensional oscillator.
using KSQuadruple = std::array<int, 4>;

std::string quadruple_label(const KSQuadruple& quad);

/// nu = sum_i ([n_i] + [n_i + 1]).
double ks_nu(const KSQuadruple& quad, const QParam& q);
/// 16 / nu^2.
double ks_energy(const KSQuadruple& quad, const QParam& q);

struct KSLevel {
  int shell = 1;
  double nu = 4.0;
  double energy_ratio = 1.0;
  std::vector<KSQuadruple> members;  // lexicographic
  int oscillator_multiplicity = 0;
  std::optional<int> physical_multiplicity;  // set for shells 1 and 2 only
};

/// Relative tolerance for merging quadruples into one level: |nu - nu'| <= tol * nu.
inline constexpr double kDefaultGroupingTolerance = 1e-9;

/// All quadruples with n1 + n2 + n3 + n4 = 2 shell - 2, in lexicographic order.
std::vector<KSQuadruple> ks_shell_quadruples(int shell);

/// Levels of one shell, grouped by nu and sorted ground-most (largest ratio) first.
std::vector<KSLevel> ks_shell_levels(int shell, const QParam& q,
                                     double grouping_tol = kDefaultGroupingTolerance);

/// Shells 1 .. max_shell concatenated; shells are evaluated in parallel.
std::vector<KSLevel> ks_spectrum(int max_shell, const QParam& q,
                                 double grouping_tol = kDefaultGroupingTolerance);

/// A hydrogen state of the n = 2 shell expanded over oscillator states.
struct DoubletState {
  std::string label;                     // e.g. "Psi_210"
  std::array<KSQuadruple, 4> components;
  std::array<Scalar, 4> coefficients;    // normalization already applied
};

struct DoubletLevel {
  KSQuadruple representative;  // 2000 or 1100
  std::array<DoubletState, 2> states;
};

struct DoubletTable {
  double normalization = 0.5;
  std::array<DoubletLevel, 2> levels;
};

/// The n = 2 doublet states of the two split levels.
DoubletTable doublet_table();

/// <a|b> over the oscillator labels.
Scalar overlap(const DoubletState& a, const DoubletState& b);

}  // namespace qhydro
