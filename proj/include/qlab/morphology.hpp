#pragma once

#include <string>
#include <vector>

#include "qlab/tnorm.hpp"

namespace qlab {

enum class Boundary { Torus, Pad };

/// A width x height raster of unit values, row-major. In Pad mode reads
/// outside the raster give bottom for dilation and top for erosion.
struct Grid {
  int width = 0;
  int height = 0;
  std::vector<UnitValue> samples;
  Boundary boundary = Boundary::Torus;

  static Grid filled(int width, int height, const UnitValue& v, Boundary boundary = Boundary::Torus);
  const UnitValue& at(int x, int y) const { return samples[static_cast<std::size_t>(y) * width + x]; }
  UnitValue& at(int x, int y) { return samples[static_cast<std::size_t>(y) * width + x]; }
  /// Pointwise order.
  bool leq(const Grid& other) const;
  friend bool operator==(const Grid& a, const Grid& b) {
    return a.width == b.width && a.height == b.height && a.samples == b.samples;
  }
};

struct Offset {
  int dx = 0;
  int dy = 0;
  friend bool operator==(const Offset&, const Offset&) = default;
};

/// Weighted offsets A(a); offsets not listed have weight bottom.
struct StructuringElement {
  std::vector<Offset> offsets;
  std::vector<UnitValue> weights;

  /// InvalidArgument when empty, mismatched or repeating an offset.
  StructuringElement(std::vector<Offset> offsets, std::vector<UnitValue> weights);
  static StructuringElement flat(std::vector<Offset> offsets);
  /// The origin and its four neighbours, weight 1.
  static StructuringElement cross();
  std::size_t size() const noexcept { return offsets.size(); }
};

/// Sample at p + h equals the old sample at p; wraps on a torus, fills with
/// bottom when padding.
Grid translate(const Grid& g, Offset h);

/// delta(y) = V_a A(a) * X(y - a)
Grid dilate(const Grid& g, const StructuringElement& a, TNormKind kind);
/// eps(x) = /\_a A(a) -> X(x + a)
Grid erode(const Grid& g, const StructuringElement& a, TNormKind kind);

enum class CompositeOp { Open, Close, Outline };
/// Open = dilate o erode, Close = erode o dilate, Outline = max(0, X - erode X).
Grid composite(const Grid& g, const StructuringElement& a, TNormKind kind, CompositeOp op);

}  // namespace qlab
