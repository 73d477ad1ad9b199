#pragma once

#include <string>
#include <string_view>

namespace pks {

enum class UnitSystem { natural, si, lorentz_heaviside };

[[nodiscard]] std::string_view to_string(UnitSystem u);
[[nodiscard]] UnitSystem unit_system_from_string(std::string_view name);

// Constants of the (possibly conducting) medium. c is derived from eps0, mu0.
struct MediumParams {
  double epsilon0 = 1.0;
  double mu0 = 1.0;
  double c = 1.0;
  double hbar = 1.0;
  double sigma = 0.0;
  UnitSystem unit_system = UnitSystem::natural;

  // hbar = c = eps0 = mu0 = 1
  static MediumParams natural(double sigma = 0.0);
  // CODATA 2018 values
  static MediumParams si(double sigma = 0.0);
  static MediumParams lorentz_heaviside(double sigma = 0.0);
  // c is computed from eps0 and mu0; throws StructuralError on bad input.
  static MediumParams custom(double epsilon0, double mu0, double hbar, double sigma, UnitSystem units);

  // Damping factor sigma / eps0 of the ohmic mode equation.
  [[nodiscard]] double gamma() const noexcept { return sigma / epsilon0; }
  [[nodiscard]] bool is_free_space() const noexcept { return sigma == 0.0; }

  // Throws StructuralError if c^2 eps0 mu0 != 1 or sigma < 0.
  void validate() const;
};

}  // namespace pks
