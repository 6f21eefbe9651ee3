#include "tvr/phantom.hpp"

#include <cmath>
#include <numbers>

namespace tvr {

Image phantom(Index n) {
  if (n < 16) throw std::invalid_argument("phantom: N >= 16 required");
  RMat img = RMat::Zero(n, n);
  for (const PhantomEllipse& e : phantom_ellipses()) {
    const double rad = e.phi_deg * std::numbers::pi / 180.0;
    const double c = std::cos(rad), s = std::sin(rad);
    for (Index r = 0; r < n; ++r) {
      const double y = 1.0 - (static_cast<double>(r) + 0.5) * 2.0 / static_cast<double>(n);
      for (Index k = 0; k < n; ++k) {
        const double x = (static_cast<double>(k) + 0.5) * 2.0 / static_cast<double>(n) - 1.0;
        const double xr = (x - e.x0) * c + (y - e.y0) * s;
        const double yr = -(x - e.x0) * s + (y - e.y0) * c;
        if (xr * xr / (e.a * e.a) + yr * yr / (e.b * e.b) <= 1.0) img(r, k) += e.intensity;
      }
    }
  }
  img = img.cwiseMax(0.0).cwiseMin(1.0);
  return Image::from_real(img);
}

}  // namespace tvr
