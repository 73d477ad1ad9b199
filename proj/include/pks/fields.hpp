#pragma once

#include <string_view>
#include <vector>

#include "pks/grid.hpp"
#include "pks/types.hpp"

namespace pks {

enum class FieldRole { electric, magnetic, current, photon_wf };

[[nodiscard]] std::string_view to_string(FieldRole role);
[[nodiscard]] FieldRole field_role_from_string(std::string_view name);

// Complex 3-vector amplitude per k-node: E(k,t), B(k,t) or J(k,t).
class SpectralVectorField {
 public:
  SpectralVectorField(KGrid grid, ModeValues values, double time, FieldRole role);
  // All-zero field.
  SpectralVectorField(KGrid grid, double time, FieldRole role);

  [[nodiscard]] const KGrid& grid() const noexcept { return grid_; }
  [[nodiscard]] const ModeValues& values() const noexcept { return values_; }
  [[nodiscard]] const CVec3& operator[](std::size_t i) const { return values_[i]; }
  [[nodiscard]] double time() const noexcept { return time_; }
  [[nodiscard]] FieldRole role() const noexcept { return role_; }

 private:
  KGrid grid_;
  ModeValues values_;
  double time_;
  FieldRole role_;
};

// Complex scalar per k-node, e.g. the charge density spectrum.
struct ScalarSpectrum {
  KGrid grid;
  std::vector<Complex> values;

  ScalarSpectrum(KGrid g, std::vector<Complex> v);
  explicit ScalarSpectrum(KGrid g) : grid(g), values(g.node_count(), Complex{}) {}
};

// Real 3-vector per spatial node: E(r,t), B(r,t), J(r,t).
class RealVectorField {
 public:
  RealVectorField(KGrid grid, std::vector<Vec3> values, double time);

  [[nodiscard]] const KGrid& grid() const noexcept { return grid_; }
  [[nodiscard]] const std::vector<Vec3>& values() const noexcept { return values_; }
  [[nodiscard]] const Vec3& operator[](std::size_t i) const { return values_[i]; }
  [[nodiscard]] double time() const noexcept { return time_; }

 private:
  KGrid grid_;
  std::vector<Vec3> values_;
  double time_;
};

// Complex 3-vector per spatial node (positive-frequency analytic fields).
struct ComplexSpatialField {
  KGrid grid;
  ModeValues values;
  double time = 0.0;
};

void require_same_grid(const KGrid& a, const KGrid& b, std::string_view what);

}  // namespace pks
