#pragma once

#include "pks/fields.hpp"
#include "pks/medium.hpp"

namespace pks {

// Transverse field pair (E(k,t), B(k,t)) on one grid at one time.
class MaxwellState {
 public:
  MaxwellState(SpectralVectorField electric, SpectralVectorField magnetic, MediumParams medium);

  [[nodiscard]] const SpectralVectorField& electric() const noexcept { return electric_; }
  [[nodiscard]] const SpectralVectorField& magnetic() const noexcept { return magnetic_; }
  [[nodiscard]] const MediumParams& medium() const noexcept { return medium_; }
  [[nodiscard]] const KGrid& grid() const noexcept { return electric_.grid(); }
  [[nodiscard]] double time() const noexcept { return electric_.time(); }

  // max_k |k.E| / (|k| max|E|), same for B.
  [[nodiscard]] double electric_divergence() const;
  [[nodiscard]] double magnetic_divergence() const;

 private:
  SpectralVectorField electric_;
  SpectralVectorField magnetic_;
  MediumParams medium_;
};

// Max-norms over modes of the four k-space Maxwell equations.
struct MaxwellResiduals {
  double gauss_electric = 0.0;  // i k.E - rho/eps0
  double gauss_magnetic = 0.0;  // i k.B
  double faraday = 0.0;         // i k x E + dB/dt
  double ampere = 0.0;          // i k x B - mu0 J - (1/c^2) dE/dt

  [[nodiscard]] double max() const;
};

[[nodiscard]] MaxwellResiduals maxwell_residuals(const MaxwellState& state, const ScalarSpectrum& rho,
                                                 const SpectralVectorField& current,
                                                 const SpectralVectorField& dE_dt,
                                                 const SpectralVectorField& dB_dt);

// Max-norm of i k.J + d rho/dt.
[[nodiscard]] double continuity_residual(const ScalarSpectrum& rho, const ScalarSpectrum& drho_dt,
                                         const SpectralVectorField& current);

// B(k) = i k x [sigma mu0 / k^2 + (1/(ck)^2) d/dt] E(k); the k = 0 mode and
// unpaired Nyquist modes are set to zero.
[[nodiscard]] SpectralVectorField b_from_e(const SpectralVectorField& electric, const SpectralVectorField& dE_dt,
                                           const MediumParams& medium);

struct ModeState {
  CVec3 value;
  CVec3 rate;
};

// Exact solution of x'' + gamma x' + omega^2 x = 0 for a vector amplitude.
// Branch: critical when |gamma - 2 omega| / (2 omega) < kCriticalTolerance.
// omega = 0 gives the first-order damped (or, with gamma = 0, linear) mode.
inline constexpr double kCriticalTolerance = 1e-12;
[[nodiscard]] ModeState damped_oscillator(const CVec3& x0, const CVec3& v0, double omega, double gamma, double t);

// Free-space mode: E'' + (ck)^2 E = 0.
[[nodiscard]] ModeState evolve_free_mode(const CVec3& e0, const CVec3& de0_dt, const Vec3& k,
                                         const MediumParams& medium, double t);

// Ohmic mode: E'' + (sigma/eps0) E' + (ck)^2 E = 0.
[[nodiscard]] ModeState evolve_ohmic_mode(const CVec3& e0, const CVec3& de0_dt, const Vec3& k,
                                          const MediumParams& medium, double t);

// Time derivative of E implied by Ampere's law with J = sigma E:
// dE/dt = i c^2 k x B - (sigma/eps0) E.
[[nodiscard]] SpectralVectorField electric_rate(const MaxwellState& state);

// Advances every mode by t (any sign) and rebuilds B from the evolved E.
[[nodiscard]] MaxwellState evolve_state(const MaxwellState& state, double t);

// dB/dt consistent with Faraday's law: -i k x E.
[[nodiscard]] SpectralVectorField magnetic_rate(const MaxwellState& state);

}  // namespace pks
