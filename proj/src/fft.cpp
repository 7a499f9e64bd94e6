#include "fft.hpp"

#include <unsupported/Eigen/FFT>

namespace disloc::detail {

namespace {

Eigen::FFT<double>& engine() {
  thread_local Eigen::FFT<double> fft;
  return fft;
}

enum class Direction { forward, backward };

Eigen::ArrayXXcd transform2d(Eigen::ArrayXXcd a, Direction dir) {
  const Eigen::Index n = a.rows();
  auto& fft = engine();
  Eigen::VectorXcd in(n), out(n);
  for (Eigen::Index j = 0; j < a.cols(); ++j) {
    in = a.col(j).matrix();
    if (dir == Direction::forward)
      fft.fwd(out, in);
    else
      fft.inv(out, in);
    a.col(j) = out.array();
  }
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    in = a.row(i).transpose().matrix();
    if (dir == Direction::forward)
      fft.fwd(out, in);
    else
      fft.inv(out, in);
    a.row(i) = out.array().transpose();
  }
  return a;
}

}  // namespace

Eigen::ArrayXXcd dft2d(const Eigen::ArrayXXcd& a) {
  return transform2d(a, Direction::forward);
}

Eigen::ArrayXXcd idft2d(const Eigen::ArrayXXcd& a) {
  // Eigen's inv scales each 1D pass by 1/n; undo to keep the plain sum.
  const double n2 = static_cast<double>(a.rows()) * a.cols();
  return transform2d(a, Direction::backward) * n2;
}

}  // namespace disloc::detail
