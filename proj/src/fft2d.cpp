#include "fft2d.hpp"

#include <fftw3.h>

#include <map>
#include <mutex>

namespace tvr::detail {

namespace {

std::mutex planner_mutex;

fftw_plan get_plan(int rows, int cols, int sign) {
  static std::map<std::tuple<int, int, int>, fftw_plan> cache;
  std::lock_guard<std::mutex> lock(planner_mutex);
  const auto key = std::make_tuple(rows, cols, sign);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;
  // FFTW_UNALIGNED lets the cached plan run on any caller buffer.
  std::vector<fftw_complex> dummy(static_cast<std::size_t>(rows) * cols);
  fftw_plan p = fftw_plan_dft_2d(rows, cols, dummy.data(), dummy.data(), sign,
                                 FFTW_ESTIMATE | FFTW_UNALIGNED);
  cache.emplace(key, p);
  return p;
}

}  // namespace

CMat fft2d_unitary(const CMat& in, bool inverse) {
  const int rows = static_cast<int>(in.rows());
  const int cols = static_cast<int>(in.cols());
  CMat out = in;  // transform in place on the copy
  fftw_plan p = get_plan(rows, cols, inverse ? FFTW_BACKWARD : FFTW_FORWARD);
  auto* buf = reinterpret_cast<fftw_complex*>(out.data());
  fftw_execute_dft(p, buf, buf);
  out *= 1.0 / std::sqrt(static_cast<double>(rows) * static_cast<double>(cols));
  return out;
}

}  // namespace tvr::detail
