#include "disloc2d/field.hpp"

#include <cstdint>
#include <cstdio>
#include <cstring>
#include <fstream>
#include <mutex>
#include <utility>

#include "fft.hpp"

namespace disloc {

struct ScalarField2D::SpectrumCache {
  std::once_flag once;
  Eigen::ArrayXXcd coeffs;
};

ScalarField2D::ScalarField2D(const Grid& grid, Eigen::ArrayXXd values)
    : grid_(grid),
      values_(std::move(values)),
      cache_(std::make_shared<SpectrumCache>()) {
  if (values_.rows() != grid.n() || values_.cols() != grid.n())
    throw InvalidGrid("field sample array does not match grid size");
}

ScalarField2D ScalarField2D::zero(const Grid& grid) {
  return {grid, Eigen::ArrayXXd::Zero(grid.n(), grid.n())};
}

ScalarField2D ScalarField2D::sampled(
    const Grid& grid, const std::function<double(double, double)>& f) {
  const int n = grid.n();
  const double h = grid.spacing();
  Eigen::ArrayXXd v(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) v(i, j) = f(i * h, j * h);
  return {grid, std::move(v)};
}

ScalarField2D ScalarField2D::from_spectrum(const Grid& grid,
                                           const Eigen::ArrayXXcd& coeffs) {
  if (coeffs.rows() != grid.n() || coeffs.cols() != grid.n())
    throw InvalidGrid("spectrum array does not match grid size");
  const Eigen::ArrayXXcd back = detail::idft2d(coeffs);
  const double re_max = back.real().abs().maxCoeff();
  const double im_max = back.imag().abs().maxCoeff();
  if (im_max > 1e-10 * std::max(re_max, 1e-300))
    throw NonHermitianSpectrum(
        "imaginary residue " + std::to_string(im_max) +
        " exceeds 1e-10 relative to field amplitude " + std::to_string(re_max));
  ScalarField2D out(grid, back.real());
  std::call_once(out.cache_->once, [&] { out.cache_->coeffs = coeffs; });
  return out;
}

const Eigen::ArrayXXcd& ScalarField2D::spectrum() const {
  std::call_once(cache_->once, [this] {
    const double n2 = static_cast<double>(grid_.n()) * grid_.n();
    cache_->coeffs = detail::dft2d(values_.cast<std::complex<double>>()) / n2;
  });
  return cache_->coeffs;
}

VectorField2D::VectorField2D(ScalarField2D a, ScalarField2D b)
    : v1(std::move(a)), v2(std::move(b)) {
  if (!(v1.grid() == v2.grid())) throw GridMismatch();
}

Eigen::ArrayXXcd forward_transform(const ScalarField2D& f) {
  return f.spectrum();
}

ScalarField2D inverse_transform(const Grid& grid,
                                const Eigen::ArrayXXcd& coeffs) {
  return ScalarField2D::from_spectrum(grid, coeffs);
}

void require_same_grid(const ScalarField2D& a, const ScalarField2D& b) {
  if (!(a.grid() == b.grid())) throw GridMismatch();
}

ScalarField2D operator+(const ScalarField2D& a, const ScalarField2D& b) {
  require_same_grid(a, b);
  return {a.grid(), a.values() + b.values()};
}

ScalarField2D operator-(const ScalarField2D& a, const ScalarField2D& b) {
  require_same_grid(a, b);
  return {a.grid(), a.values() - b.values()};
}

ScalarField2D operator*(const ScalarField2D& a, const ScalarField2D& b) {
  require_same_grid(a, b);
  return {a.grid(), a.values() * b.values()};
}

ScalarField2D operator*(double s, const ScalarField2D& f) {
  return {f.grid(), s * f.values()};
}

ScalarField2D operator-(const ScalarField2D& f) { return -1.0 * f; }

namespace {

constexpr char kMagic[16] = {'D', 'I', 'S', 'L', 'O', 'C', '2',  'D',
                             '-', 'F', 'L', 'D', '\n', 0,   0,   0};

}  // namespace

void save_field(const std::filesystem::path& path, const ScalarField2D& f,
                std::string_view name) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw SnapshotFormatError("cannot open " + path.string());
  out.write(kMagic, sizeof(kMagic));
  char header[256];
  std::snprintf(header, sizeof(header), "n=%d period=%.17g name=",
                f.grid().n(), f.grid().period());
  out << header << name << '\n';
  const int n = f.grid().n();
  std::vector<double> row(n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) row[j] = f.values()(i, j);
    out.write(reinterpret_cast<const char*>(row.data()),
              n * sizeof(double));
  }
  if (!out) throw SnapshotFormatError("short write to " + path.string());
}

LoadedField load_field(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw SnapshotFormatError("cannot open " + path.string());
  char magic[16];
  in.read(magic, sizeof(magic));
  if (!in || std::memcmp(magic, kMagic, 13) != 0)
    throw SnapshotFormatError("bad magic in " + path.string());
  std::string header;
  if (!std::getline(in, header))
    throw SnapshotFormatError("missing header in " + path.string());
  int n = 0;
  double period = 0.0;
  int name_pos = -1;
  if (std::sscanf(header.c_str(), "n=%d period=%lg name=%n", &n, &period,
                  &name_pos) < 2 ||
      name_pos < 0)
    throw SnapshotFormatError("bad header in " + path.string());
  std::string name = header.substr(name_pos);
  Grid grid = make_grid(n, period);
  Eigen::ArrayXXd v(n, n);
  std::vector<double> row(n);
  for (int i = 0; i < n; ++i) {
    in.read(reinterpret_cast<char*>(row.data()), n * sizeof(double));
    if (!in) throw SnapshotFormatError("truncated samples in " + path.string());
    for (int j = 0; j < n; ++j) v(i, j) = row[j];
  }
  return {ScalarField2D(grid, std::move(v)), std::move(name)};
}

}  // namespace disloc
