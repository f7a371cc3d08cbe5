#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "qlab/error.hpp"
#include "qlab/unit_value.hpp"

namespace qlab {

/// An image with exact samples num/den in [0, 1], channel-planar and
/// row-major: sample (ch, row, col) at (ch * height + row) * width + col.
/// Images read from 8-bit files have den = 255.
struct Image {
  int width = 0;   // n, columns
  int height = 0;  // m, rows
  int channels = 1;
  std::int64_t den = 255;
  std::vector<std::int64_t> num;

  static Image from_bytes(int width, int height, int channels, std::span<const std::uint8_t> planar);
  std::int64_t at(int ch, int row, int col) const {
    return num[(static_cast<std::size_t>(ch) * height + row) * width + col];
  }
  UnitValue sample(int ch, int row, int col) const { return UnitValue::exact(at(ch, row, col), den); }
  /// One channel as a row-major vector of exact values.
  std::vector<UnitValue> plane_values(int ch) const;
  /// Same image expressed over a multiple of its denominator.
  Image rescaled(std::int64_t new_den) const;
  friend bool operator==(const Image&, const Image&) = default;
};

/// 8-bit requantization round(v * 255), halves rounded up.
Image requantize(const Image& img);
std::vector<std::uint8_t> to_bytes(const Image& img);  // requires den == 255

/// Lukasiewicz darkening c (.) img = max(0, c + v - 1) with c = k/255.
Image darken(const Image& img, int k);

/// m x n original, m' x n' compressed, split into a d_m x d_n grid of blocks.
struct BlockScheme {
  int m = 0, n = 0, mp = 0, np = 0, dm = 0, dn = 0;
  int a = 0, b = 0, c = 0, d = 0;  // block a x b, compressed block c x d

  double ratio() const { return static_cast<double>(c * d) / static_cast<double>(a * b); }
  /// Common denominator of compressed and reconstructed samples, 255 (ab - 1).
  std::int64_t denominator() const { return 255LL * (a * b - 1); }
  friend bool operator==(const BlockScheme&, const BlockScheme&) = default;
};

/// DivisibilityViolation unless d_m | m, m' and d_n | n, n'. BoundsViolation
/// unless 1 < d_m <= m' and 1 < d_n <= n' and 2 <= cd < ab; `permissive`
/// drops the bounds on d_m, d_n.
BlockScheme build_scheme(int m, int n, int mp, int np, int dm, int dn, bool permissive = false);
/// Scheme from block and code shapes for an m x n image: d_m = m/a, d_n = n/b.
BlockScheme scheme_for_blocks(int m, int n, int a, int b, int c, int d, bool permissive = false);

template <class T>
using Matrix = std::vector<std::vector<T>>;

/// d_m x d_n grid of a x b blocks: block(i,j)[k][h] = channel[i*a + k][j*b + h].
template <class T>
Matrix<Matrix<T>> block_split(const Matrix<T>& channel, int a, int b) {
  const int rows = static_cast<int>(channel.size());
  const int cols = rows ? static_cast<int>(channel[0].size()) : 0;
  if (a < 1 || b < 1 || rows % a || cols % b) throw Error(ErrorCode::DimMismatch, "channel is not a whole number of blocks");
  for (const auto& r : channel)
    if (static_cast<int>(r.size()) != cols) throw Error(ErrorCode::DimMismatch, "ragged channel");
  Matrix<Matrix<T>> grid(rows / a, std::vector<Matrix<T>>(cols / b, Matrix<T>(a, std::vector<T>(b))));
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) grid[i / a][j / b][i % a][j % b] = channel[i][j];
  return grid;
}

template <class T>
Matrix<T> block_join(const Matrix<Matrix<T>>& grid) {
  if (grid.empty() || grid[0].empty()) return {};
  const int gr = static_cast<int>(grid.size()), gc = static_cast<int>(grid[0].size());
  const int a = static_cast<int>(grid[0][0].size()), b = a ? static_cast<int>(grid[0][0][0].size()) : 0;
  Matrix<T> out(gr * a, std::vector<T>(gc * b));
  for (int i = 0; i < gr * a; ++i)
    for (int j = 0; j < gc * b; ++j) {
      const auto& blk = grid[i / a][j / b];
      if (static_cast<int>(blk.size()) != a || static_cast<int>(blk[i % a].size()) != b) {
        throw Error(ErrorCode::DimMismatch, "blocks have different shapes");
      }
      out[i][j] = blk[i % a][j % b];
    }
  return out;
}

/// g_k = block[k / b][k % b].
template <class T>
std::vector<T> vectorize(const Matrix<T>& block) {
  std::vector<T> g;
  for (const auto& row : block) g.insert(g.end(), row.begin(), row.end());
  return g;
}

template <class T>
Matrix<T> devectorize(std::span<const T> g, int a, int b) {
  if (static_cast<int>(g.size()) != a * b) throw Error(ErrorCode::DimMismatch, "vector length is not a*b");
  Matrix<T> block(a, std::vector<T>(b));
  for (int k = 0; k < a * b; ++k) block[k / b][k % b] = g[k];
  return block;
}

/// One channel of an image as a matrix of numerators.
Matrix<std::int64_t> channel_matrix(const Image& img, int ch);

/// m' x n' planes of numerators over scheme.denominator().
struct CompressedImage {
  BlockScheme scheme;
  int channels = 1;
  std::int64_t den = 0;
  std::vector<std::int64_t> num;  // channel-planar, row-major m' x n'

  std::int64_t at(int ch, int row, int col) const {
    return num[(static_cast<std::size_t>(ch) * scheme.mp + row) * scheme.np + col];
  }
  friend bool operator==(const CompressedImage&, const CompressedImage&) = default;
};

/// Integer Lukasiewicz transform of one block vector over denominator D with
/// coder numerators of order `order` on a grid of size g.size().
std::vector<std::int64_t> block_transform(std::span<const std::int64_t> g, int order, std::int64_t D);
std::vector<std::int64_t> block_inverse(std::span<const std::int64_t> h, int grid_size, std::int64_t D);

/// SchemeMismatch unless the image is m x n and its denominator divides D.
CompressedImage compress(const Image& img, const BlockScheme& scheme);
/// Output samples over D.
Image reconstruct(const CompressedImage& comp);

struct Metrics {
  double mse = 0.0;
  double rmse = 0.0;
  double psnr = 0.0;  // +inf for identical images
};
/// On the 0-255 scale, pooled over channels. DimMismatch on shape mismatch.
Metrics metrics(const Image& a, const Image& b);
/// "RMSE=<v> PSNR=<v|inf> MSE=<v>" with six significant digits.
std::string format_metrics(const Metrics& m);

}  // namespace qlab
