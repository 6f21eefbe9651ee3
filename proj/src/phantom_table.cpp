#include "tvr/phantom.hpp"

namespace tvr {

// intensity, a, b, x0, y0, phi
const std::vector<PhantomEllipse>& phantom_ellipses() {
  static const std::vector<PhantomEllipse> table = {
      {1.0, 0.6900, 0.9200, 0.00, 0.0000, 0.0},
      {-0.8, 0.6624, 0.8740, 0.00, -0.0184, 0.0},
      {-0.2, 0.1100, 0.3100, 0.22, 0.0000, -18.0},
      {-0.2, 0.1600, 0.4100, -0.22, 0.0000, 18.0},
      {0.1, 0.2100, 0.2500, 0.00, 0.3500, 0.0},
      {0.1, 0.0460, 0.0460, 0.00, 0.1000, 0.0},
      {0.1, 0.0460, 0.0460, 0.00, -0.1000, 0.0},
      {0.1, 0.0460, 0.0230, -0.08, -0.6050, 0.0},
      {0.1, 0.0230, 0.0230, 0.00, -0.6060, 0.0},
      {0.1, 0.0230, 0.0460, 0.06, -0.6050, 0.0},
  };
  return table;
}

}  // namespace tvr
