#pragma once

#include <utility>
#include <vector>

#include "disloc2d/field.hpp"

namespace disloc {

/// Radial low-pass profile: 1 on [0, 3/4], 0 on [4/3, inf), a C^inf smooth
/// step in between (non-increasing).
double chi_profile(double s);

/// Annulus profile phi(s) = chi(s/2) - chi(s); equals 1 exactly on [4/3, 3/2],
/// supported in [3/4, 8/3].
double phi_profile(double s);

/// Dyadic multiplier masks for one grid: mask(-1) = chi(|xi|),
/// mask(j) = phi(2^{-j}|xi|) for 0 <= j <= j_max. The partition
/// chi + sum_j phi(2^{-j}.) equals 1 at every lattice frequency.
class DyadicFamily {
 public:
  explicit DyadicFamily(const Grid& grid);

  const Grid& grid() const noexcept { return grid_; }
  int j_min() const noexcept { return -1; }
  int j_max() const noexcept { return j_max_; }
  /// Valid for j in [-1, j_max]; entries are real, radial, in [0, 1].
  const Eigen::ArrayXXd& mask(int j) const;

 private:
  Grid grid_;
  int j_max_;
  std::vector<Eigen::ArrayXXd> masks_;  // index 0 holds j = -1
};

DyadicFamily build_dyadic_family(const Grid& grid);

/// Frequency-localized block Delta_j f; the zero field for j <= -2 or
/// j > j_max.
ScalarField2D delta_j(const ScalarField2D& f, int j, const DyadicFamily& fam);

/// Cumulative low-pass S_j f = sum_{k <= j-1} Delta_k f, realized as the
/// chi(2^{-j} xi) multiplier.
ScalarField2D s_j(const ScalarField2D& f, int j, const DyadicFamily& fam);

struct LPDecomposition {
  Grid grid;
  std::vector<std::pair<int, ScalarField2D>> blocks;  // j = -1 .. j_max
};

LPDecomposition decompose(const ScalarField2D& f, const DyadicFamily& fam);

}  // namespace disloc
