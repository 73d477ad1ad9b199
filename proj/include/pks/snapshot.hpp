#pragma once

#include <filesystem>
#include <iosfwd>

#include "pks/fields.hpp"
#include "pks/medium.hpp"

namespace pks {

// PKS1 binary snapshot, all little-endian:
//   offset  0  char[4]  "PKS1"
//   offset  4  uint32   dimension
//   offset  8  uint32   points per axis
//   offset 12  float64  box length
//   offset 20  float64  time
//   offset 28  uint8    role tag (0 electric, 1 magnetic, 2 current, 3 photon_wf)
//   offset 29  uint8    unit system (0 natural, 1 SI, 2 lorentz_heaviside)
//   offset 30  uint8    domain (0 spectral, 1 spatial)
//   offset 31  uint8    reserved, 0
//   offset 32  node-major payload: for each node in grid order, for each of
//              the 3 components, float64 re then float64 im.
enum class SnapshotDomain : std::uint8_t { spectral = 0, spatial = 1 };

struct Snapshot {
  KGrid grid;
  double time = 0.0;
  FieldRole role = FieldRole::electric;
  UnitSystem units = UnitSystem::natural;
  SnapshotDomain domain = SnapshotDomain::spectral;
  ModeValues values;
};

inline constexpr std::size_t kSnapshotHeaderBytes = 32;

void write_snapshot(std::ostream& out, const Snapshot& snap);
[[nodiscard]] Snapshot read_snapshot(std::istream& in);

void write_snapshot_file(const std::filesystem::path& path, const Snapshot& snap);
[[nodiscard]] Snapshot read_snapshot_file(const std::filesystem::path& path);

[[nodiscard]] Snapshot to_snapshot(const SpectralVectorField& field, UnitSystem units);
[[nodiscard]] Snapshot to_snapshot(const RealVectorField& field, FieldRole role, UnitSystem units);
[[nodiscard]] SpectralVectorField spectral_from_snapshot(const Snapshot& snap);

}  // namespace pks
