#include "tvr/padding.hpp"

namespace tvr {

CMat pad_matrix(const CMat& phi, Placement placement) {
  if (phi.rows() + 1 != phi.cols())
    throw std::invalid_argument("pad: expected an (N-1) x N matrix");
  const Index n = phi.cols();
  CMat out = CMat::Zero(n, n);
  if (placement == Placement::top_zeros)
    out.bottomRows(n - 1) = phi;
  else
    out.topRows(n - 1) = phi;
  return out;
}

PaddedMatrix pad(const CMat& phi, Placement placement) {
  return PaddedMatrix{phi, placement, pad_matrix(phi, placement)};
}

}  // namespace tvr
