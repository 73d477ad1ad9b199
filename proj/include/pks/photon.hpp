#pragma once

#include "pks/fields.hpp"
#include "pks/medium.hpp"
#include "pks/snapshot.hpp"

namespace pks {

// Photon wave function phi(k,t) on the k-grid. The k = 0 mode and unpaired
// Nyquist modes carry no photon content and are held at zero.
class PhotonWaveFunction {
 public:
  PhotonWaveFunction(KGrid grid, ModeValues values, MediumParams medium, double time = 0.0);

  [[nodiscard]] const KGrid& grid() const noexcept { return grid_; }
  [[nodiscard]] const ModeValues& values() const noexcept { return values_; }
  [[nodiscard]] const CVec3& operator[](std::size_t i) const { return values_[i]; }
  [[nodiscard]] const MediumParams& medium() const noexcept { return medium_; }
  [[nodiscard]] double time() const noexcept { return time_; }

  // sum_k phi* . phi dk^d
  [[nodiscard]] double norm() const;
  // max_k |khat . phi(k)| / max_k |phi(k)|
  [[nodiscard]] double transversality_residual() const;
  [[nodiscard]] bool is_normalized(double tolerance = 1e-8) const;
  [[nodiscard]] PhotonWaveFunction normalized() const;

 private:
  KGrid grid_;
  ModeValues values_;
  MediumParams medium_;
  double time_;
};

// n(k) = sqrt(hbar c k / (2 (2 pi)^d eps0)); d = 3 reproduces the 3-D weight.
[[nodiscard]] double normalization_weight(double k_mod, const MediumParams& medium, int dimension = 3);

struct FieldPair {
  SpectralVectorField electric;
  SpectralVectorField magnetic;
};

// Positive-frequency part phi = [E + (i/ck) dE/dt] / (2 n(k)). Requires
// sigma = 0 and a transverse E (ConstraintError otherwise).
[[nodiscard]] PhotonWaveFunction phi_from_electric(const SpectralVectorField& electric,
                                                   const SpectralVectorField& dE_dt, const MediumParams& medium);

// E = n(k) [phi(k) + phi*(-k)],  B = (n(k)/(ck)) k x [phi(k) - phi*(-k)].
[[nodiscard]] FieldPair electric_from_phi(const PhotonWaveFunction& phi);

// Time derivatives of the pair built by electric_from_phi when phi follows
// i dphi/dt = ck phi.
[[nodiscard]] FieldPair field_rates_from_phi(const PhotonWaveFunction& phi);

// (H phi)_a = hbar c k sum_b (delta_ab - k_a k_b / k^2) phi_b; zero at k = 0.
[[nodiscard]] ModeValues hamiltonian_apply(const PhotonWaveFunction& phi);

// The 3x3 Hamiltonian matrix for one wave vector.
[[nodiscard]] CMat3 hamiltonian_matrix(const Vec3& k, const MediumParams& medium);

// phi(k, t0 + t) = phi(k, t0) exp(-i c k t).
[[nodiscard]] PhotonWaveFunction evolve_phi(const PhotonWaveFunction& phi, double t);

// Analytic dphi/dt = -i c k phi of the free evolution.
[[nodiscard]] ModeValues phi_rate(const PhotonWaveFunction& phi);

// max_k |H phi - i hbar dphi/dt|
[[nodiscard]] double schrodinger_residual(const PhotonWaveFunction& phi, const ModeValues& dphi_dt);

[[nodiscard]] Snapshot to_snapshot(const PhotonWaveFunction& phi);
[[nodiscard]] PhotonWaveFunction phi_from_snapshot(const Snapshot& snap, const MediumParams& medium);

}  // namespace pks
