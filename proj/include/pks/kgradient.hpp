#pragma once

#include "pks/grid.hpp"
#include "pks/types.hpp"

namespace pks {

// Order-4 centered difference along `axis` (0-based) on the periodic k-grid:
// f'(k) ~ [-f(k+2dk) + 8 f(k+dk) - 8 f(k-dk) + f(k-2dk)] / (12 dk).
[[nodiscard]] ModeValues k_derivative(const KGrid& grid, const ModeValues& values, int axis);

// Orbital angular momentum L_axis = -i hbar (k x grad_k)_axis acting on each
// Cartesian component, axis in {1, 2, 3}. Requires a 3-D grid.
[[nodiscard]] ModeValues orbital_apply(int axis, const KGrid& grid, const ModeValues& values, double hbar);

// Fraction of sum |f|^2 within `layers` nodes of the k-grid boundary.
[[nodiscard]] double k_boundary_weight(const KGrid& grid, const ModeValues& values, std::size_t layers = 2);

}  // namespace pks
