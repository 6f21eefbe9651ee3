#include "tvr/pgm.hpp"

#include <cmath>
#include <fstream>
#include <sstream>
#include <vector>

#include <nlohmann/json.hpp>

namespace tvr {

namespace {

void atomic_write(const std::filesystem::path& path, const std::string& bytes) {
  const auto tmp = path.string() + ".tmp";
  {
    std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
    if (!f) throw std::runtime_error("pgm: cannot open " + tmp);
    f.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
    if (!f) throw std::runtime_error("pgm: short write to " + tmp);
  }
  std::filesystem::rename(tmp, path);
}

}  // namespace

void write_pgm16(const std::filesystem::path& path, const Image& img) {
  const RMat re = img.real_part();
  const double lo = re.minCoeff();
  const double hi = re.maxCoeff();
  const double span = hi > lo ? hi - lo : 1.0;

  std::ostringstream out;
  out << "P5\n" << img.cols() << " " << img.rows() << "\n65535\n";
  for (Index r = 0; r < img.rows(); ++r) {
    for (Index c = 0; c < img.cols(); ++c) {
      const double v = (re(r, c) - lo) / span;
      const auto q = static_cast<unsigned>(std::lround(v * 65535.0));
      out.put(static_cast<char>((q >> 8) & 0xff));
      out.put(static_cast<char>(q & 0xff));
    }
  }
  atomic_write(path, out.str());

  nlohmann::json sidecar{{"schema", "pgm-scale-v1"}, {"min", lo}, {"max", hi}};
  atomic_write(path.string() + ".json", sidecar.dump(2) + "\n");
}

Image read_pgm16(const std::filesystem::path& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("pgm: cannot open " + path.string());
  std::string magic;
  long w = 0, h = 0, maxval = 0;
  f >> magic >> w >> h >> maxval;
  if (magic != "P5" || w < 1 || h < 1 || maxval != 65535)
    throw std::runtime_error("pgm: expected 16-bit P5 file");
  f.get();  // single whitespace after header
  std::vector<unsigned char> buf(static_cast<std::size_t>(w * h * 2));
  f.read(reinterpret_cast<char*>(buf.data()), static_cast<std::streamsize>(buf.size()));
  if (!f) throw std::runtime_error("pgm: truncated data");

  double lo = 0.0, hi = 1.0;
  const auto sidecar_path = path.string() + ".json";
  if (std::filesystem::exists(sidecar_path)) {
    std::ifstream sf(sidecar_path);
    nlohmann::json sc = nlohmann::json::parse(sf);
    lo = sc.at("min").get<double>();
    hi = sc.at("max").get<double>();
  }
  const double span = hi > lo ? hi - lo : 0.0;

  RMat img(h, w);
  for (long r = 0; r < h; ++r) {
    for (long c = 0; c < w; ++c) {
      const auto i = static_cast<std::size_t>((r * w + c) * 2);
      const unsigned q = (static_cast<unsigned>(buf[i]) << 8) | buf[i + 1];
      img(r, c) = lo + span * (static_cast<double>(q) / 65535.0);
    }
  }
  return Image::from_real(img);
}

}  // namespace tvr
