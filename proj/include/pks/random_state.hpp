#pragma once

#include <cstdint>

#include "pks/photon.hpp"

namespace pks {

// Transverse phi with independent complex normal components per mode,
// projected onto the plane orthogonal to k and normalized. If
// envelope_width > 0 the amplitudes are tapered by exp(-|k|^2/(2 w^2)).
// Modes are drawn serially in grid order, so a seed fixes the state.
[[nodiscard]] PhotonWaveFunction random_transverse_phi(const KGrid& grid, const MediumParams& medium,
                                                       std::uint64_t seed, double envelope_width = 0.0);

}  // namespace pks
