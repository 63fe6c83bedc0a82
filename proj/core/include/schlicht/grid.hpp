#pragma once

#include <vector>

namespace schlicht {

/// Sampling scheme for the unit disk: concentric circles, equispaced angles.
class ProbeGrid {
 public:
  /// Radii must be strictly increasing and inside (0, 1); at least 8 angles.
  ProbeGrid(std::vector<double> radii, int angles_per_circle);

  /// 0.1, 0.2, ..., 0.9, 0.95 with 64 angles.
  static ProbeGrid standard();
  /// A single circle.
  static ProbeGrid circle(double r, int angles_per_circle);

  const std::vector<double>& radii() const noexcept { return radii_; }
  int angles_per_circle() const noexcept { return angles_; }

 private:
  std::vector<double> radii_;
  int angles_;
};

}  // namespace schlicht
