#include "tvr/synthetic.hpp"

#include <algorithm>

#include "tvr/gradient.hpp"
#include "tvr/rng.hpp"

namespace tvr {

SyntheticImage synthetic_gradient_sparse(Index n, int s, std::uint64_t seed) {
  if (n < 2) throw std::invalid_argument("synthetic_gradient_sparse: N >= 2 required");
  if (s < 0 || s > n) throw std::invalid_argument("synthetic_gradient_sparse: need 0 <= s <= N");
  DeterministicRng rng(seed);
  RMat img = RMat::Zero(n, n);
  for (int i = 0; i < s; ++i) {
    Index r0 = static_cast<Index>(rng.uniform_below(static_cast<std::uint64_t>(n)));
    Index r1 = static_cast<Index>(rng.uniform_below(static_cast<std::uint64_t>(n)));
    Index c0 = static_cast<Index>(rng.uniform_below(static_cast<std::uint64_t>(n)));
    Index c1 = static_cast<Index>(rng.uniform_below(static_cast<std::uint64_t>(n)));
    if (r0 > r1) std::swap(r0, r1);
    if (c0 > c1) std::swap(c0, c1);
    const double level = rng.uniform01();
    img.block(r0, c0, r1 - r0 + 1, c1 - c0 + 1).setConstant(level);
  }
  SyntheticImage out{Image::from_real(img), 0};
  out.gradient_support = gradient_support_size(out.image);
  return out;
}

}  // namespace tvr
