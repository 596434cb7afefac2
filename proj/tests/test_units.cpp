#include <catch2/catch_amalgamated.hpp>

#include "qhydro/errors.hpp"
#include "qhydro/units.hpp"

using namespace qhydro;
using Catch::Approx;

TEST_CASE("ground energy", "[units]") {
  const AtomConfig hydrogen;
  CHECK(ground_energy(hydrogen, EnergyUnit::Wavenumber) == Approx(-109677.58340280320).epsilon(1e-14));
  CHECK(ground_energy(hydrogen, EnergyUnit::RatioOfE0) == 1.0);

  AtomConfig infinite;
  infinite.mass = MassModel::InfiniteNucleus;
  CHECK(ground_energy(infinite, EnergyUnit::Rydberg) == -1.0);

  AtomConfig helium_ion = hydrogen;
  helium_ion.z = 2;
  CHECK(ground_energy(helium_ion, EnergyUnit::ElectronVolt) / ground_energy(hydrogen, EnergyUnit::ElectronVolt) ==
        Approx(4.0).epsilon(1e-15));

  AtomConfig ratio;
  ratio.mass = MassModel::ExplicitRatio;
  ratio.explicit_ratio = 0.5;
  CHECK(ground_energy(ratio, EnergyUnit::Rydberg) == -0.5);

  AtomConfig deuterium;
  deuterium.mass = MassModel::Deuterium;
  CHECK(ground_energy(deuterium, EnergyUnit::Wavenumber) < ground_energy(hydrogen, EnergyUnit::Wavenumber));
}

TEST_CASE("unit conversion", "[units]") {
  const AtomConfig hydrogen;
  CHECK(convert(1.0, EnergyUnit::Rydberg, EnergyUnit::ElectronVolt) == Approx(13.605693122994).epsilon(1e-15));
  CHECK(convert(0.25, EnergyUnit::RatioOfE0, EnergyUnit::Wavenumber, hydrogen) ==
        Approx(-27419.395850700801).epsilon(1e-14));
  CHECK(convert(3.7, EnergyUnit::Wavenumber, EnergyUnit::Wavenumber) == 3.7);

  const EnergyUnit units[] = {EnergyUnit::RatioOfE0, EnergyUnit::ElectronVolt, EnergyUnit::Wavenumber,
                              EnergyUnit::Rydberg};
  AtomConfig deuterium;
  deuterium.mass = MassModel::Deuterium;
  deuterium.z = 3;
  for (const auto& config : {hydrogen, deuterium})
    for (auto a : units)
      for (auto b : units)
        for (double x : {-2.5e4, -0.33, 1e-3, 7.0}) {
          const double back = convert(convert(x, a, b, config), b, a, config);
          CHECK(std::abs(back - x) <= 1e-12 * std::abs(x));
        }
}

TEST_CASE("unit and mass parsing", "[units]") {
  CHECK(parse_unit("cm-1") == EnergyUnit::Wavenumber);
  CHECK(parse_unit("ry") == EnergyUnit::Rydberg);
  CHECK(to_string(parse_unit("ev")) == "ev");
  CHECK(to_string(EnergyUnit::RatioOfE0) == "e0");
  CHECK_THROWS_AS(parse_unit("joule"), DomainError);

  CHECK(parse_mass("d").mass == MassModel::Deuterium);
  CHECK(parse_mass("inf", 2).z == 2);
  const auto r = parse_mass("ratio:0.75");
  CHECK(r.mass == MassModel::ExplicitRatio);
  CHECK(r.explicit_ratio == 0.75);
  CHECK(mass_spec(r) == "ratio:0.75");
  CHECK_THROWS_AS(parse_mass("ratio:1.5"), DomainError);
  CHECK_THROWS_AS(parse_mass("ratio:x"), DomainError);
  CHECK_THROWS_AS(parse_mass("h", 0), DomainError);
  CHECK_THROWS_AS(parse_mass("proton"), DomainError);
}

TEST_CASE("constant table", "[units]") {
  CHECK(constants().version == "codata-2018/1");
  CHECK(constants().rydberg_wavenumber == 109737.31568160);
}
