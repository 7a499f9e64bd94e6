#pragma once

#include <numbers>

namespace disloc {

inline constexpr double two_pi = 2.0 * std::numbers::pi;

/// Square periodic grid: n samples per axis on [0, period)^2, with the DFT
/// frequency lattice {2*pi*k/period : -n/2 <= k < n/2} per axis.
class Grid {
 public:
  Grid(int n, double period);

  int n() const noexcept { return n_; }
  double period() const noexcept { return period_; }
  double spacing() const noexcept { return period_ / n_; }

  /// Integer wavenumber of storage index i, wrapped to [-n/2, n/2).
  int wavenumber(int index) const noexcept {
    return index < n_ / 2 ? index : index - n_;
  }
  /// Physical frequency 2*pi*k/period of storage index i.
  double freq(int index) const noexcept {
    return two_pi * wavenumber(index) / period_;
  }
  /// Largest per-axis frequency magnitude, pi*n/period.
  double nyquist_radius() const noexcept {
    return two_pi * (n_ / 2) / period_;
  }

  friend bool operator==(const Grid&, const Grid&) = default;

 private:
  int n_;
  double period_;
};

/// Throws InvalidGrid unless n is a power of two >= 8 and period > 0.
Grid make_grid(int n, double period = two_pi);

}  // namespace disloc
