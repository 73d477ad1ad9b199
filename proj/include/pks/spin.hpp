#pragma once

#include <array>

#include "pks/photon.hpp"

namespace pks {

// Spin-1 generators acting on the vector index of phi:
// (S_a)_bc = -i hbar eps_abc.
struct SpinMatrices {
  std::array<CMat3, 3> s;

  static SpinMatrices make(double hbar);
  [[nodiscard]] const CMat3& operator[](int axis) const { return s[axis]; }
  // S1^2 + S2^2 + S3^2
  [[nodiscard]] CMat3 squared_total() const;
};

// Levi-Civita symbol with 0-based indices.
[[nodiscard]] int levi_civita(int a, int b, int c) noexcept;

// Worst-case deviations of the spin algebra from its exact identities.
struct SpinAlgebraAudit {
  double commutator = 0.0;       // [S_a, S_b] - i hbar eps_abc S_c
  double hermiticity = 0.0;      // S_a - S_a^dagger
  double eigenvalues = 0.0;      // spectrum vs {-hbar, 0, +hbar}
  double casimir = 0.0;          // S^2 - 2 hbar^2 I
  [[nodiscard]] double max() const;
};

[[nodiscard]] SpinAlgebraAudit audit_spin_algebra(double hbar);

// axis in {1, 2, 3}. Per mode (S_axis phi)_b = -i hbar sum_c eps_{axis b c} phi_c.
[[nodiscard]] ModeValues spin_apply(int axis, const PhotonWaveFunction& phi);

// Orthonormal right-handed transverse pair (e1, e2) with e1 x e2 = khat.
// e1 comes from Gram-Schmidt of the Cartesian axis with the smallest |khat_a|
// (ties go to the lower axis index).
struct TransversePair {
  Vec3 e1;
  Vec3 e2;
};
[[nodiscard]] TransversePair transverse_pair(const Vec3& k);

// Eigenvectors of khat . S: index 0 -> -hbar, 1 -> 0 (khat), 2 -> +hbar.
// h_pm = (e1 -+ i e2) / sqrt(2) in the ordering above.
[[nodiscard]] std::array<CVec3, 3> helicity_basis(const Vec3& k);

}  // namespace pks
