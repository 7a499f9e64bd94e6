#include "disloc2d/grid.hpp"

#include <string>

#include "disloc2d/errors.hpp"

namespace disloc {

Grid::Grid(int n, double period) : n_(n), period_(period) {
  if (n < 8 || (n & (n - 1)) != 0)
    throw InvalidGrid("grid size must be a power of two >= 8, got " +
                      std::to_string(n));
  if (!(period > 0.0))
    throw InvalidGrid("grid period must be positive, got " +
                      std::to_string(period));
}

Grid make_grid(int n, double period) { return Grid(n, period); }

}  // namespace disloc
