#pragma once

#include <complex>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Core>
#include <Eigen/Geometry>

namespace pks {

using Complex = std::complex<double>;
using Vec3 = Eigen::Vector3d;
using CVec3 = Eigen::Vector3cd;
using Mat3 = Eigen::Matrix3d;
using CMat3 = Eigen::Matrix3cd;

// One complex 3-vector per grid node.
using ModeValues = std::vector<CVec3>;

// Shape or bookkeeping problem: wrong grid, wrong dimension, bad argument.
class StructuralError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A physical constraint (reality, transversality) is violated by more than
// the allowed tolerance. Carries the measured violation.
class ConstraintError : public std::runtime_error {
 public:
  ConstraintError(const std::string& what, double magnitude)
      : std::runtime_error(what + " (violation " + std::to_string(magnitude) + ")"),
        magnitude_(magnitude) {}
  [[nodiscard]] double magnitude() const noexcept { return magnitude_; }

 private:
  double magnitude_;
};

// Input failed validation; every failed bound is listed.
class ValidationError : public std::runtime_error {
 public:
  explicit ValidationError(std::vector<std::string> issues)
      : std::runtime_error(join(issues)), issues_(std::move(issues)) {}
  [[nodiscard]] const std::vector<std::string>& issues() const noexcept { return issues_; }

 private:
  static std::string join(const std::vector<std::string>& issues) {
    std::string out = "validation failed";
    for (const auto& s : issues) out += "; " + s;
    return out;
  }
  std::vector<std::string> issues_;
};

inline double max_abs(const CVec3& v) { return v.cwiseAbs().maxCoeff(); }

// Bilinear (non-conjugating) dot product, as in E(k)·E(-k).
inline Complex bilinear_dot(const CVec3& a, const CVec3& b) {
  return a(0) * b(0) + a(1) * b(1) + a(2) * b(2);
}

// Non-conjugating cross product. Eigen's cross() conjugates complex results.
inline CVec3 bilinear_cross(const CVec3& a, const CVec3& b) {
  return {a(1) * b(2) - a(2) * b(1), a(2) * b(0) - a(0) * b(2), a(0) * b(1) - a(1) * b(0)};
}

inline CVec3 to_complex(const Vec3& v) { return v.cast<Complex>(); }

}  // namespace pks
