#pragma once

#include <Eigen/Dense>
#include <filesystem>
#include <functional>
#include <memory>
#include <string>
#include <string_view>

#include "disloc2d/errors.hpp"
#include "disloc2d/grid.hpp"

namespace disloc {

/// Real scalar samples on a periodic grid, immutable once constructed.
/// The spectral representation is computed lazily and cached; with the
/// normalization used here a pure mode A*exp(i k.x) has coefficient A at
/// lattice index k and zero elsewhere. Storage is values(i, j) = f(x1_i, x2_j).
class ScalarField2D {
 public:
  ScalarField2D(const Grid& grid, Eigen::ArrayXXd values);

  static ScalarField2D zero(const Grid& grid);
  static ScalarField2D sampled(const Grid& grid,
                               const std::function<double(double, double)>& f);
  /// Inverse transform. Throws NonHermitianSpectrum if the imaginary residue
  /// exceeds 1e-10 relative to the real amplitude.
  static ScalarField2D from_spectrum(const Grid& grid,
                                     const Eigen::ArrayXXcd& coeffs);

  const Grid& grid() const noexcept { return grid_; }
  const Eigen::ArrayXXd& values() const noexcept { return values_; }
  const Eigen::ArrayXXcd& spectrum() const;

  double max_abs() const { return values_.abs().maxCoeff(); }
  bool all_finite() const { return values_.isFinite().all(); }

 private:
  struct SpectrumCache;

  Grid grid_;
  Eigen::ArrayXXd values_;
  std::shared_ptr<SpectrumCache> cache_;
};

/// Two scalar components (v1, v2) on one shared grid.
struct VectorField2D {
  ScalarField2D v1, v2;

  VectorField2D(ScalarField2D a, ScalarField2D b);
  const Grid& grid() const noexcept { return v1.grid(); }
};

Eigen::ArrayXXcd forward_transform(const ScalarField2D& f);
ScalarField2D inverse_transform(const Grid& grid, const Eigen::ArrayXXcd& coeffs);

ScalarField2D operator+(const ScalarField2D& a, const ScalarField2D& b);
ScalarField2D operator-(const ScalarField2D& a, const ScalarField2D& b);
ScalarField2D operator*(const ScalarField2D& a, const ScalarField2D& b);
ScalarField2D operator*(double s, const ScalarField2D& f);
ScalarField2D operator-(const ScalarField2D& f);

void require_same_grid(const ScalarField2D& a, const ScalarField2D& b);

/// Snapshot files: 16-byte magic ("DISLOC2D-FLD\n" + 3 NULs), one ASCII header
/// line "n=<n> period=<float> name=<str>\n", then n*n little-endian float64
/// samples, row-major (x1 index outer).
void save_field(const std::filesystem::path& path, const ScalarField2D& f,
                std::string_view name);

struct LoadedField {
  ScalarField2D field;
  std::string name;
};
LoadedField load_field(const std::filesystem::path& path);

}  // namespace disloc
