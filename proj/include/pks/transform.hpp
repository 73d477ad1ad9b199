#pragma once

#include "pks/fields.hpp"

namespace pks {

// Fourier convention (continuous integrals mapped to the grid):
//   analysis   F(k) = (2 pi)^-d * sum_r f(r) e^{-i k.r} dx^d
//   synthesis  f(r) = sum_k F(k) e^{+i k.r} dk^d
// with r the box-centered node coordinates. Under this pair
//   sum_r |f|^2 dx^d = (2 pi)^d sum_k |F|^2 dk^d.

[[nodiscard]] SpectralVectorField forward_transform(const RealVectorField& field, FieldRole role);
[[nodiscard]] SpectralVectorField forward_transform(const ComplexSpatialField& field, FieldRole role);

struct RealSynthesis {
  RealVectorField field;
  // max |Im f| / max(|f|, tiny)
  double imaginary_residue;
};

// Real synthesis. Throws ConstraintError carrying the violation when
// reality_violation(spec) exceeds reality_tolerance.
[[nodiscard]] RealSynthesis synthesize(const SpectralVectorField& spec, double reality_tolerance = 1e-10);

// Complex synthesis without any reality requirement.
[[nodiscard]] ComplexSpatialField synthesize_complex(const KGrid& grid, const ModeValues& spectrum, double time);

// spec'(k) = (spec(k) + conj(spec(-k))) / 2; idempotent, makes Nyquist modes real.
[[nodiscard]] SpectralVectorField enforce_reality(const SpectralVectorField& spec);

// max_k |spec(k) - conj(spec(-k))| / (1 + max|spec|), over paired (non-Nyquist) k.
[[nodiscard]] double reality_violation(const SpectralVectorField& spec);
[[nodiscard]] double reality_violation(const KGrid& grid, const ModeValues& spectrum);

// Fraction of sum |F|^2 carried by unpaired Nyquist modes.
[[nodiscard]] double nyquist_energy_fraction(const KGrid& grid, const ModeValues& spectrum);

}  // namespace pks
