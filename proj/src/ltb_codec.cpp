#include "qlab/ltb_codec.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>

#include "qlab/luk_transform.hpp"

namespace qlab {

Image Image::from_bytes(int width, int height, int channels, std::span<const std::uint8_t> planar) {
  if (width < 1 || height < 1 || (channels != 1 && channels != 3)) {
    throw Error(ErrorCode::InvalidArgument, "image needs positive size and 1 or 3 channels");
  }
  if (planar.size() != static_cast<std::size_t>(width) * height * channels) {
    throw Error(ErrorCode::DimMismatch, "sample count does not match image size");
  }
  Image img{width, height, channels, 255, {}};
  img.num.assign(planar.begin(), planar.end());
  return img;
}

std::vector<UnitValue> Image::plane_values(int ch) const {
  std::vector<UnitValue> out;
  out.reserve(static_cast<std::size_t>(width) * height);
  for (int r = 0; r < height; ++r)
    for (int c = 0; c < width; ++c) out.push_back(sample(ch, r, c));
  return out;
}

Image Image::rescaled(std::int64_t new_den) const {
  if (new_den % den != 0) throw Error(ErrorCode::SchemeMismatch, "denominator does not divide the target");
  Image out = *this;
  const std::int64_t f = new_den / den;
  for (auto& v : out.num) v *= f;
  out.den = new_den;
  return out;
}

Image requantize(const Image& img) {
  Image out = img;
  for (auto& v : out.num) {
    // round(v * 255 / den), halves up
    v = (2 * v * 255 + img.den) / (2 * img.den);
  }
  out.den = 255;
  return out;
}

std::vector<std::uint8_t> to_bytes(const Image& img) {
  if (img.den != 255) throw Error(ErrorCode::InvalidArgument, "requantize before writing 8-bit samples");
  return std::vector<std::uint8_t>(img.num.begin(), img.num.end());
}

Image darken(const Image& img, int k) {
  if (k < 0 || k > 255) throw Error(ErrorCode::InvalidArgument, "darkening level must be in 0..255");
  if (img.den % 255 != 0) throw Error(ErrorCode::InvalidArgument, "darkening needs a denominator divisible by 255");
  Image out = img;
  const std::int64_t c = k * (img.den / 255);
  for (auto& v : out.num) v = std::max<std::int64_t>(0, c + v - img.den);
  return out;
}

BlockScheme build_scheme(int m, int n, int mp, int np, int dm, int dn, bool permissive) {
  if (m < 1 || n < 1 || mp < 1 || np < 1 || dm < 1 || dn < 1) {
    throw Error(ErrorCode::BoundsViolation, "scheme sizes must be positive");
  }
  if (m % dm || mp % dm) throw Error(ErrorCode::DivisibilityViolation, "d_m must divide m and m'");
  if (n % dn || np % dn) throw Error(ErrorCode::DivisibilityViolation, "d_n must divide n and n'");
  if (!permissive && (dm <= 1 || dm > mp || dn <= 1 || dn > np)) {
    throw Error(ErrorCode::BoundsViolation, "block grid must satisfy 1 < d_m <= m' and 1 < d_n <= n'");
  }
  BlockScheme s{m, n, mp, np, dm, dn, m / dm, n / dn, mp / dm, np / dn};
  if (s.c * s.d < 2 || s.c * s.d >= s.a * s.b) {
    throw Error(ErrorCode::BoundsViolation, "compressed block must satisfy 2 <= cd < ab");
  }
  return s;
}

BlockScheme scheme_for_blocks(int m, int n, int a, int b, int c, int d, bool permissive) {
  if (a < 1 || b < 1 || c < 1 || d < 1) throw Error(ErrorCode::BoundsViolation, "block shapes must be positive");
  if (m % a || n % b) throw Error(ErrorCode::DivisibilityViolation, "image is not a whole number of blocks");
  const int dm = m / a, dn = n / b;
  return build_scheme(m, n, c * dm, d * dn, dm, dn, permissive);
}

Matrix<std::int64_t> channel_matrix(const Image& img, int ch) {
  Matrix<std::int64_t> out(img.height, std::vector<std::int64_t>(img.width));
  for (int r = 0; r < img.height; ++r)
    for (int c = 0; c < img.width; ++c) out[r][c] = img.at(ch, r, c);
  return out;
}

namespace {

// Coder numerators over D for order `order` on a grid of size m, row-major m x order.
std::vector<std::int64_t> coder_numerators(int order, int m, std::int64_t D) {
  const std::int64_t scale = D / (m - 1);
  std::vector<std::int64_t> p(static_cast<std::size_t>(m) * order);
  for (int x = 0; x < m; ++x)
    for (int k = 0; k < order; ++k) p[static_cast<std::size_t>(x) * order + k] = basis_numerator(order, m, k, x) * scale;
  return p;
}

void require_grid(int order, int m, std::int64_t D) {
  if (order < 2 || m <= order) throw Error(ErrorCode::SchemeMismatch, "transform order must satisfy 2 <= order < grid");
  if (D % (m - 1) != 0) throw Error(ErrorCode::SchemeMismatch, "denominator is not a multiple of grid size - 1");
}

}  // namespace

std::vector<std::int64_t> block_transform(std::span<const std::int64_t> g, int order, std::int64_t D) {
  const int m = static_cast<int>(g.size());
  require_grid(order, m, D);
  const auto p = coder_numerators(order, m, D);
  std::vector<std::int64_t> h(order, 0);
  for (int k = 0; k < order; ++k)
    for (int x = 0; x < m; ++x)
      h[k] = std::max(h[k], std::max<std::int64_t>(0, g[x] + p[static_cast<std::size_t>(x) * order + k] - D));
  return h;
}

std::vector<std::int64_t> block_inverse(std::span<const std::int64_t> h, int grid_size, std::int64_t D) {
  const int order = static_cast<int>(h.size());
  require_grid(order, grid_size, D);
  const auto p = coder_numerators(order, grid_size, D);
  std::vector<std::int64_t> g(grid_size, D);
  for (int x = 0; x < grid_size; ++x)
    for (int k = 0; k < order; ++k)
      g[x] = std::min(g[x], std::min<std::int64_t>(D, D - p[static_cast<std::size_t>(x) * order + k] + h[k]));
  return g;
}

CompressedImage compress(const Image& img, const BlockScheme& s) {
  if (img.height != s.m || img.width != s.n) {
    throw Error(ErrorCode::SchemeMismatch, "image is " + std::to_string(img.height) + "x" + std::to_string(img.width) +
                                               ", scheme expects " + std::to_string(s.m) + "x" + std::to_string(s.n));
  }
  const std::int64_t D = s.denominator();
  if (D % img.den != 0) throw Error(ErrorCode::SchemeMismatch, "image denominator does not divide 255(ab-1)");
  const Image src = img.rescaled(D);
  CompressedImage out{s, img.channels, D, {}};
  out.num.reserve(static_cast<std::size_t>(img.channels) * s.mp * s.np);
  for (int ch = 0; ch < img.channels; ++ch) {
    auto grid = block_split(channel_matrix(src, ch), s.a, s.b);
    Matrix<Matrix<std::int64_t>> coded(s.dm, std::vector<Matrix<std::int64_t>>(s.dn));
    for (int i = 0; i < s.dm; ++i)
      for (int j = 0; j < s.dn; ++j) {
        const auto h = block_transform(vectorize(grid[i][j]), s.c * s.d, D);
        coded[i][j] = devectorize<std::int64_t>(h, s.c, s.d);
      }
    for (const auto& row : block_join(coded)) out.num.insert(out.num.end(), row.begin(), row.end());
  }
  return out;
}

Image reconstruct(const CompressedImage& comp) {
  const BlockScheme& s = comp.scheme;
  const std::int64_t D = s.denominator();
  if (comp.den != D || comp.num.size() != static_cast<std::size_t>(comp.channels) * s.mp * s.np) {
    throw Error(ErrorCode::SchemeMismatch, "compressed planes do not match the scheme");
  }
  Image out{s.n, s.m, comp.channels, D, {}};
  out.num.reserve(static_cast<std::size_t>(comp.channels) * s.m * s.n);
  for (int ch = 0; ch < comp.channels; ++ch) {
    Matrix<std::int64_t> plane(s.mp, std::vector<std::int64_t>(s.np));
    for (int r = 0; r < s.mp; ++r)
      for (int c = 0; c < s.np; ++c) plane[r][c] = comp.at(ch, r, c);
    auto grid = block_split(plane, s.c, s.d);
    Matrix<Matrix<std::int64_t>> blocks(s.dm, std::vector<Matrix<std::int64_t>>(s.dn));
    for (int i = 0; i < s.dm; ++i)
      for (int j = 0; j < s.dn; ++j) {
        const auto g = block_inverse(vectorize(grid[i][j]), s.a * s.b, D);
        blocks[i][j] = devectorize<std::int64_t>(g, s.a, s.b);
      }
    for (const auto& row : block_join(blocks)) out.num.insert(out.num.end(), row.begin(), row.end());
  }
  return out;
}

Metrics metrics(const Image& a, const Image& b) {
  if (a.width != b.width || a.height != b.height || a.channels != b.channels) {
    throw Error(ErrorCode::DimMismatch, "images differ in shape");
  }
  double sum = 0.0;
  for (std::size_t i = 0; i < a.num.size(); ++i) {
    const double d = 255.0 * (static_cast<double>(a.num[i]) / a.den - static_cast<double>(b.num[i]) / b.den);
    sum += d * d;
  }
  Metrics m;
  m.mse = a.num.empty() ? 0.0 : sum / static_cast<double>(a.num.size());
  m.rmse = std::sqrt(m.mse);
  m.psnr = m.rmse == 0.0 ? std::numeric_limits<double>::infinity() : 20.0 * std::log10(255.0 / m.rmse);
  return m;
}

std::string format_metrics(const Metrics& m) {
  char buf[128];
  if (std::isinf(m.psnr)) {
    std::snprintf(buf, sizeof buf, "RMSE=%.6g PSNR=inf MSE=%.6g", m.rmse, m.mse);
  } else {
    std::snprintf(buf, sizeof buf, "RMSE=%.6g PSNR=%.6g MSE=%.6g", m.rmse, m.psnr, m.mse);
  }
  return buf;
}

}  // namespace qlab
