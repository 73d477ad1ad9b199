#pragma once

#include <array>
#include <string>
#include <vector>

#include "json.hpp"

#include "pks/fields.hpp"
#include "pks/medium.hpp"
#include "pks/photon.hpp"

namespace pks {

// (eps0/2) sum_r [|E|^2 + c^2 |B|^2] dx^d
[[nodiscard]] double energy_realspace(const RealVectorField& e, const RealVectorField& b, const MediumParams& medium);

struct SpectralQuadrature {
  double value = 0.0;
  double imaginary_residue = 0.0;  // |Im| / max(|Re|, tiny)
};

// ((2 pi)^d eps0 / 2) sum_k [E(k).E(-k) + c^2 B(k).B(-k)] dk^d.
// Throws ConstraintError when either spectrum violates reality by more than
// reality_tolerance.
[[nodiscard]] SpectralQuadrature energy_kspace(const SpectralVectorField& e, const SpectralVectorField& b,
                                               const MediumParams& medium, double reality_tolerance = 1e-10);

// sum_k hbar c k phi*.phi dk^d
[[nodiscard]] double energy_phi(const PhotonWaveFunction& phi);

// eps0 sum_r E x B dx^d
[[nodiscard]] Vec3 momentum_realspace(const RealVectorField& e, const RealVectorField& b, const MediumParams& medium);

// hbar sum_k k (phi*.phi) dk^d
[[nodiscard]] Vec3 momentum_phi(const PhotonWaveFunction& phi);

// eps0 sum_r (r - center) x (E x B) dx^d, r in box-centered coordinates.
[[nodiscard]] Vec3 angular_momentum_realspace(const RealVectorField& e, const RealVectorField& b,
                                              const MediumParams& medium, const Vec3& center = Vec3::Zero());

struct AngularMomentumSplit {
  Vec3 orbital = Vec3::Zero();  // M'
  Vec3 spin = Vec3::Zero();     // M''
  double orbital_imaginary_residue = 0.0;
  std::vector<std::string> warnings;
  [[nodiscard]] Vec3 total() const { return orbital + spin; }
};

// M' = sum_k phi* . (L phi) dk^d (real part) with L realized by the order-4
// k-stencil, and M'' = -i hbar sum_k phi* x phi dk^d.
[[nodiscard]] AngularMomentumSplit angular_momentum_phi(const PhotonWaveFunction& phi);

struct HelicityPopulations {
  double minus = 0.0;
  double zero = 0.0;
  double plus = 0.0;
  [[nodiscard]] double total() const { return minus + zero + plus; }
};

// Populations sum_k |<h_s(k), phi(k)>|^2 dk^d in the eigenbasis of khat . S.
[[nodiscard]] HelicityPopulations helicity_decompose(const PhotonWaveFunction& phi);

// Max entrywise deviation of hbar c k (e1 e1^T + e2 e2^T) from the Hamiltonian
// matrix; the transverse pair is first rotated about khat by rotation_angle.
[[nodiscard]] double transverse_energy_identity_check(const Vec3& k, const MediumParams& medium,
                                                      double rotation_angle = 0.0);

struct ObservableReport {
  double energy = 0.0;
  Vec3 momentum = Vec3::Zero();
  Vec3 m_orbital = Vec3::Zero();
  Vec3 m_spin = Vec3::Zero();
  Vec3 m_total = Vec3::Zero();
  std::array<double, 3> helicity{0.0, 0.0, 0.0};  // (minus, zero, plus)
  double norm = 0.0;
  std::vector<std::string> warnings;
};

// Angular momentum and helicity are filled only on 3-D grids.
[[nodiscard]] ObservableReport make_observable_report(const PhotonWaveFunction& phi);

[[nodiscard]] nlohmann::json to_json(const ObservableReport& report);
[[nodiscard]] std::string observable_csv_header();
[[nodiscard]] std::string to_csv_row(const ObservableReport& report);

}  // namespace pks
