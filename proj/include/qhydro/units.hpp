#pragma once

#include <string>
#include <string_view>

namespace qhydro {

enum class EnergyUnit { RatioOfE0, ElectronVolt, Wavenumber, Rydberg };

enum class MassModel { Hydrogen, Deuterium, InfiniteNucleus, ExplicitRatio };

/// Hydrogen-like atom: nuclear charge Z and the reduced-mass convention.
struct AtomConfig {
  int z = 1;
  MassModel mass = MassModel::Hydrogen;
  double explicit_ratio = 1.0;  // mu / m_e, used only with ExplicitRatio

  /// Throws DomainError unless z >= 1 and an explicit ratio lies in (0, 1].
  void validate() const;
};

/// Embedded physical constants (CODATA 2018 recommended values).
struct ConstantTable {
  std::string_view version;
  double rydberg_wavenumber;          // R_inf in cm^-1
  double rydberg_electronvolt;        // R_inf h c in eV
  double proton_electron_mass_ratio;  // m_p / m_e
  double deuteron_electron_mass_ratio;
};

const ConstantTable& constants();

/// mu / m_e for the configured nucleus.
double reduced_mass_ratio(const AtomConfig& config);

/// E0 = -Z^2 (mu/m_e) R_inf expressed in `unit` (exactly 1 in RatioOfE0).
double ground_energy(const AtomConfig& config, EnergyUnit unit);

/// Linear conversion between energy units; RatioOfE0 is resolved through `config`.
double convert(double value, EnergyUnit from, EnergyUnit to, const AtomConfig& config = {});

/// "e0", "ev", "cm-1", "ry".
std::string_view to_string(EnergyUnit unit);
EnergyUnit parse_unit(std::string_view text);

/// "h", "d", "inf" or "ratio:<value>".
std::string mass_spec(const AtomConfig& config);
AtomConfig parse_mass(std::string_view text, int z = 1);

}  // namespace qhydro
