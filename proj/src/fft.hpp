#pragma once

#include <Eigen/Dense>

namespace disloc::detail {

// Unnormalized 2D DFT over both axes: F(k) = sum_x a(x) exp(-2*pi*i*k.x/n).
Eigen::ArrayXXcd dft2d(const Eigen::ArrayXXcd& a);

// Unnormalized inverse: b(x) = sum_k A(k) exp(+2*pi*i*k.x/n).
Eigen::ArrayXXcd idft2d(const Eigen::ArrayXXcd& a);

}  // namespace disloc::detail
