#pragma once

#include "tvr/image.hpp"

namespace tvr {

enum class Placement { top_zeros, bottom_zeros };

/// An (N-1) x N matrix realized as N x N by concatenating one row of zeros
/// on top (top_zeros) or at the bottom (bottom_zeros).
struct PaddedMatrix {
  CMat source;
  Placement placement;
  CMat realized;
};

PaddedMatrix pad(const CMat& phi, Placement placement);

/// The realized matrix alone, for callers that do not need the record.
CMat pad_matrix(const CMat& phi, Placement placement);

}  // namespace tvr
