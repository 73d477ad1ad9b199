#pragma once

#include <array>
#include <cstddef>

#include "pks/types.hpp"

namespace pks {

// Cubic periodic box with n nodes per axis and its dual wave-vector grid.
//
// Nodes are stored in C order (axis 0 slowest). Spatial node j sits at the
// box-centered coordinate x_j = -L/2 + j*dx. Spectral node j carries the
// signed frequency m*dk with m = j for j < n/2 and m = j - n for j >= n/2
// (transform-native order); j = n/2 is the unpaired Nyquist mode -n/2*dk.
// Axes beyond `dimension` are absent and contribute zero components.
class KGrid {
 public:
  KGrid(int dimension, std::size_t n, double box_length);

  [[nodiscard]] int dimension() const noexcept { return dim_; }
  [[nodiscard]] std::size_t points_per_axis() const noexcept { return n_; }
  [[nodiscard]] double box_length() const noexcept { return length_; }
  [[nodiscard]] double dx() const noexcept { return dx_; }
  [[nodiscard]] double dk() const noexcept { return dk_; }
  [[nodiscard]] std::size_t node_count() const noexcept { return count_; }

  // dx^d and dk^d
  [[nodiscard]] double cell_volume() const noexcept { return cell_volume_; }
  [[nodiscard]] double k_cell_volume() const noexcept { return k_cell_volume_; }

  [[nodiscard]] std::array<std::size_t, 3> unflatten(std::size_t index) const noexcept;
  [[nodiscard]] std::size_t flatten(const std::array<std::size_t, 3>& ijk) const noexcept;

  // Signed integer frequency for a per-axis index.
  [[nodiscard]] long signed_frequency(std::size_t j) const noexcept {
    return j < n_ / 2 ? static_cast<long>(j) : static_cast<long>(j) - static_cast<long>(n_);
  }
  [[nodiscard]] double k_value(std::size_t j) const noexcept { return dk_ * static_cast<double>(signed_frequency(j)); }
  [[nodiscard]] double x_value(std::size_t j) const noexcept { return -0.5 * length_ + dx_ * static_cast<double>(j); }

  [[nodiscard]] Vec3 wave_vector(std::size_t index) const noexcept;
  [[nodiscard]] Vec3 position(std::size_t index) const noexcept;

  // Index of -k. The Nyquist coordinate maps to itself.
  [[nodiscard]] std::size_t mirror(std::size_t index) const noexcept;

  // True if any present axis sits on the Nyquist frequency. Such modes have no
  // partner at -k and are excluded from the physical maps.
  [[nodiscard]] bool is_unpaired(std::size_t index) const noexcept;

  // (-1)^(sum of per-axis indices): the phase that relates the corner-origin
  // DFT to the box-centered coordinates.
  [[nodiscard]] double centering_sign(std::size_t index) const noexcept;

  friend bool operator==(const KGrid& a, const KGrid& b) noexcept {
    return a.dim_ == b.dim_ && a.n_ == b.n_ && a.length_ == b.length_;
  }

 private:
  int dim_;
  std::size_t n_;
  double length_;
  double dx_;
  double dk_;
  std::size_t count_;
  double cell_volume_;
  double k_cell_volume_;
};

}  // namespace pks
