#include "qhydro/units.hpp"

#include <charconv>
#include <cmath>
#include <sstream>

#include "qhydro/errors.hpp"

namespace qhydro {

namespace {

constexpr ConstantTable kCodata2018{
    "codata-2018/1",
    109737.31568160,
    13.605693122994,
    1836.15267343,
    3670.48296788,
};

double to_wavenumber(double value, EnergyUnit unit, const AtomConfig& config) {
  const auto& c = constants();
  switch (unit) {
    case EnergyUnit::Wavenumber: return value;
    case EnergyUnit::Rydberg: return value * c.rydberg_wavenumber;
    case EnergyUnit::ElectronVolt: return value * c.rydberg_wavenumber / c.rydberg_electronvolt;
    case EnergyUnit::RatioOfE0: return value * ground_energy(config, EnergyUnit::Wavenumber);
  }
  throw DomainError("unknown energy unit");
}

double from_wavenumber(double value, EnergyUnit unit, const AtomConfig& config) {
  const auto& c = constants();
  switch (unit) {
    case EnergyUnit::Wavenumber: return value;
    case EnergyUnit::Rydberg: return value / c.rydberg_wavenumber;
    case EnergyUnit::ElectronVolt: return value * c.rydberg_electronvolt / c.rydberg_wavenumber;
    case EnergyUnit::RatioOfE0: return value / ground_energy(config, EnergyUnit::Wavenumber);
  }
  throw DomainError("unknown energy unit");
}

}  // namespace

void AtomConfig::validate() const {
  if (z < 1) throw DomainError("nuclear charge Z must be >= 1");
  if (mass == MassModel::ExplicitRatio && !(explicit_ratio > 0.0 && explicit_ratio <= 1.0)) {
    throw DomainError("explicit reduced-mass ratio must lie in (0, 1]");
  }
}

const ConstantTable& constants() { return kCodata2018; }

double reduced_mass_ratio(const AtomConfig& config) {
  config.validate();
  const auto& c = constants();
  switch (config.mass) {
    case MassModel::Hydrogen: return 1.0 / (1.0 + 1.0 / c.proton_electron_mass_ratio);
    case MassModel::Deuterium: return 1.0 / (1.0 + 1.0 / c.deuteron_electron_mass_ratio);
    case MassModel::InfiniteNucleus: return 1.0;
    case MassModel::ExplicitRatio: return config.explicit_ratio;
  }
  throw DomainError("unknown mass model");
}

double ground_energy(const AtomConfig& config, EnergyUnit unit) {
  if (unit == EnergyUnit::RatioOfE0) {
    config.validate();
    return 1.0;
  }
  const double z2 = double(config.z) * double(config.z);
  const double e0_rydberg = -z2 * reduced_mass_ratio(config);
  if (unit == EnergyUnit::Rydberg) return e0_rydberg;
  return from_wavenumber(e0_rydberg * constants().rydberg_wavenumber, unit, config);
}

double convert(double value, EnergyUnit from, EnergyUnit to, const AtomConfig& config) {
  if (from == to) return value;
  return from_wavenumber(to_wavenumber(value, from, config), to, config);
}

std::string_view to_string(EnergyUnit unit) {
  switch (unit) {
    case EnergyUnit::RatioOfE0: return "e0";
    case EnergyUnit::ElectronVolt: return "ev";
    case EnergyUnit::Wavenumber: return "cm-1";
    case EnergyUnit::Rydberg: return "ry";
  }
  return "?";
}

EnergyUnit parse_unit(std::string_view text) {
  if (text == "e0") return EnergyUnit::RatioOfE0;
  if (text == "ev") return EnergyUnit::ElectronVolt;
  if (text == "cm-1") return EnergyUnit::Wavenumber;
  if (text == "ry" || text == "rydberg") return EnergyUnit::Rydberg;
  throw DomainError("unknown energy unit '" + std::string(text) + "' (expected e0, ev, cm-1, ry)");
}

std::string mass_spec(const AtomConfig& config) {
  switch (config.mass) {
    case MassModel::Hydrogen: return "h";
    case MassModel::Deuterium: return "d";
    case MassModel::InfiniteNucleus: return "inf";
    case MassModel::ExplicitRatio: {
      std::ostringstream os;
      os.precision(15);
      os << "ratio:" << config.explicit_ratio;
      return os.str();
    }
  }
  return "?";
}

AtomConfig parse_mass(std::string_view text, int z) {
  AtomConfig config;
  config.z = z;
  if (text == "h") {
    config.mass = MassModel::Hydrogen;
  } else if (text == "d") {
    config.mass = MassModel::Deuterium;
  } else if (text == "inf") {
    config.mass = MassModel::InfiniteNucleus;
  } else if (text.starts_with("ratio:")) {
    const auto number = text.substr(6);
    double value = 0.0;
    const auto [ptr, ec] = std::from_chars(number.data(), number.data() + number.size(), value);
    if (ec != std::errc() || ptr != number.data() + number.size()) {
      throw DomainError("cannot parse mass ratio '" + std::string(number) + "'");
    }
    config.mass = MassModel::ExplicitRatio;
    config.explicit_ratio = value;
  } else {
    throw DomainError("unknown mass model '" + std::string(text) + "' (expected h, d, inf, ratio:<x>)");
  }
  config.validate();
  return config;
}

}  // namespace qhydro
