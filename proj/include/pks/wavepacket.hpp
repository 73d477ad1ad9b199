#pragma once

#include <string>
#include <vector>

#include "pks/photon.hpp"

namespace pks {

// Gaussian packet exp(-|k - k0|^2 / (2 delta_k^2)) carried by a transverse
// polarization and centered at r0 in the box-centered frame.
struct WavePacketSpec {
  Vec3 k0 = Vec3::Zero();
  double delta_k = 1.0;
  Vec3 r0 = Vec3::Zero();
  CVec3 polarization = CVec3::Zero();
  double amplitude = 1.0;
};

// Every violated bound, phrased with the field it concerns.
[[nodiscard]] std::vector<std::string> validate_packet(const WavePacketSpec& spec, const KGrid& grid);

// Fraction of the spectral density exp(-|k-k0|^2/dk^2) falling outside the
// k-grid, summed over axes (Gaussian tail estimate).
[[nodiscard]] double packet_edge_weight(const WavePacketSpec& spec, const KGrid& grid);

// phi(k) = A P_T(k) pol exp(-|k-k0|^2/(2 dk^2)) exp(-i k.r0), normalized to
// unit norm. P_T = 1 - khat khat^T makes every mode transverse.
// Throws ValidationError listing the failed bounds.
[[nodiscard]] PhotonWaveFunction build_gaussian_packet(const WavePacketSpec& spec, const KGrid& grid,
                                                       const MediumParams& medium);

struct MomentReport {
  Vec3 mean_r = Vec3::Zero();
  double delta_r = 0.0;
  Vec3 mean_k = Vec3::Zero();
  double delta_k = 0.0;
  double product = 0.0;
  double time = 0.0;
  double wrap_weight = 0.0;
  std::vector<std::string> warnings;
};

inline constexpr double kWrapAroundThreshold = 1e-6;

// Moments of |psi(r)|^2 with psi = sum_k phi(k) e^{ik.r} dk^d (positive
// frequency field) and of phi*.phi. Widths are RMS second moments averaged
// over the d present axes.
[[nodiscard]] MomentReport spatial_moments(const PhotonWaveFunction& phi);

struct GroupVelocity {
  Vec3 velocity = Vec3::Zero();
  std::vector<std::string> warnings;
};

// (mean_r(t2) - mean_r(t1)) / (t2 - t1) after free evolution by t1 and t2.
[[nodiscard]] GroupVelocity group_velocity_estimate(const PhotonWaveFunction& phi, double t1, double t2);

struct DispersionCheck {
  double exact = 0.0;
  double quadratic_model = 0.0;
};

// omega(k0 + kappa) = c|k0 + kappa| against its second-order Taylor model
// omega0 + kappa.v_g + kappa^T H kappa / 2, H = (c/|k0|)(1 - k0hat k0hat^T).
[[nodiscard]] DispersionCheck dispersion_expansion_check(const Vec3& k0, const Vec3& kappa, double c);

// Group velocity c khat of omega = c|k| and its Hessian.
[[nodiscard]] Vec3 analytic_group_velocity(const Vec3& k0, double c);
[[nodiscard]] Mat3 dispersion_hessian(const Vec3& k0, double c);

}  // namespace pks
