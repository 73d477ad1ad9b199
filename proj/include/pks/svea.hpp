#pragma once

#include <string>
#include <vector>

#include "pks/photon.hpp"

namespace pks {

// Exact ohmic evolution of phi'' + gamma phi' + omega^2 phi = 0 per mode,
// started from phi'(0) = -i omega phi(0) so that sigma -> 0 is continuous.
// `first` holds the component on the root -gamma/2 - i omega_d (the
// positive-frequency branch when underdamped), `second` the other root.
// At critical damping the split is degenerate: everything is in `first`.
struct OhmicEvolution {
  PhotonWaveFunction total;
  ModeValues first;
  ModeValues second;
};

[[nodiscard]] OhmicEvolution evolve_phi_ohmic(const PhotonWaveFunction& phi, double t);

inline constexpr double kDefaultSveaThreshold = 0.1;

// Envelope Upsilon(k,t) of phi = Upsilon e^{-i omega_bar t}.
struct EnvelopeState {
  KGrid grid;
  ModeValues upsilon;
  double omega_bar = 1.0;
  double gamma = 0.0;
  double time = 0.0;
  double threshold = kDefaultSveaThreshold;
  std::vector<std::string> warnings;

  EnvelopeState(KGrid g, ModeValues values, double omega_bar, double gamma, double time = 0.0,
                double threshold = kDefaultSveaThreshold);

  // gamma / omega_bar below the threshold
  [[nodiscard]] bool admissible() const noexcept { return gamma / omega_bar < threshold; }
};

// Upsilon(t) = Upsilon(0) exp(-i (omega^2 - omega_bar^2) t / (2 omega_bar) - gamma t / 2)
// per mode. Throws ConstraintError on an inadmissible envelope unless
// allow_inadmissible is set, in which case a warning is recorded.
[[nodiscard]] EnvelopeState svea_evolve(const EnvelopeState& env, const std::vector<double>& omega, double t,
                                        bool allow_inadmissible = false);

// |d^2 Upsilon/dt^2| / (omega_bar |d Upsilon/dt|) along an SVEA trajectory.
[[nodiscard]] double svea_admissibility_ratio(double omega, double omega_bar, double gamma);

// omega = c|k| for every node of the grid.
[[nodiscard]] std::vector<double> mode_frequencies(const KGrid& grid, const MediumParams& medium);

struct SveaErrorPoint {
  double t = 0.0;
  double exact_norm = 0.0;
  double svea_norm = 0.0;
  double rel_error = 0.0;
  double gamma_over_omegabar = 0.0;
};

// Relative L2 distance between the exact ohmic solution, re-enveloped with
// e^{+i omega_bar t}, and the SVEA prediction, at each elapsed time.
[[nodiscard]] std::vector<SveaErrorPoint> svea_error(const PhotonWaveFunction& phi0, const MediumParams& medium,
                                                     double omega_bar, const std::vector<double>& times);

}  // namespace pks
