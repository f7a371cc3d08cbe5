#include "qlab/morphology.hpp"

#include <algorithm>

#include "qlab/error.hpp"

namespace qlab {

namespace {

int wrap(int v, int n) { return ((v % n) + n) % n; }

Backend backend_of(const Grid& g) {
  return g.samples.empty() || g.samples.front().is_exact() ? Backend::Exact : Backend::Float;
}

// Sample at (x, y), or `outside` when the point leaves a padded raster.
const UnitValue& read(const Grid& g, int x, int y, const UnitValue& outside) {
  if (g.boundary == Boundary::Torus) return g.at(wrap(x, g.width), wrap(y, g.height));
  if (x < 0 || y < 0 || x >= g.width || y >= g.height) return outside;
  return g.at(x, y);
}

void require_grid(const Grid& g) {
  if (g.width < 1 || g.height < 1 || g.samples.size() != static_cast<std::size_t>(g.width) * g.height) {
    throw Error(ErrorCode::DimMismatch, "grid sample count does not match its size");
  }
}

}  // namespace

Grid Grid::filled(int width, int height, const UnitValue& v, Boundary boundary) {
  if (width < 1 || height < 1) throw Error(ErrorCode::InvalidArgument, "grid size must be positive");
  return Grid{width, height, std::vector<UnitValue>(static_cast<std::size_t>(width) * height, v), boundary};
}

bool Grid::leq(const Grid& other) const {
  if (width != other.width || height != other.height) throw Error(ErrorCode::DimMismatch, "grids differ in size");
  for (std::size_t i = 0; i < samples.size(); ++i)
    if (!(samples[i] <= other.samples[i])) return false;
  return true;
}

StructuringElement::StructuringElement(std::vector<Offset> offs, std::vector<UnitValue> w)
    : offsets(std::move(offs)), weights(std::move(w)) {
  if (offsets.empty()) throw Error(ErrorCode::InvalidArgument, "structuring element needs at least one offset");
  if (offsets.size() != weights.size()) throw Error(ErrorCode::InvalidArgument, "one weight per offset");
  for (std::size_t i = 0; i < offsets.size(); ++i)
    for (std::size_t j = i + 1; j < offsets.size(); ++j)
      if (offsets[i] == offsets[j]) throw Error(ErrorCode::InvalidArgument, "repeated offset in structuring element");
}

StructuringElement StructuringElement::flat(std::vector<Offset> offs) {
  std::vector<UnitValue> w(offs.size(), UnitValue::one());
  return StructuringElement(std::move(offs), std::move(w));
}

StructuringElement StructuringElement::cross() { return flat({{0, 0}, {1, 0}, {-1, 0}, {0, 1}, {0, -1}}); }

Grid translate(const Grid& g, Offset h) {
  require_grid(g);
  Grid out = g;
  const UnitValue bottom = UnitValue::zero(backend_of(g));
  for (int y = 0; y < g.height; ++y)
    for (int x = 0; x < g.width; ++x) out.at(x, y) = read(g, x - h.dx, y - h.dy, bottom);
  return out;
}

Grid dilate(const Grid& g, const StructuringElement& a, TNormKind kind) {
  require_grid(g);
  Grid out = g;
  const UnitValue bottom = UnitValue::zero(backend_of(g));
  for (int y = 0; y < g.height; ++y)
    for (int x = 0; x < g.width; ++x) {
      UnitValue acc = bottom;
      for (std::size_t i = 0; i < a.size(); ++i) {
        const auto& o = a.offsets[i];
        acc = unit_max(acc, tnorm_apply(kind, a.weights[i], read(g, x - o.dx, y - o.dy, bottom)));
      }
      out.at(x, y) = acc;
    }
  return out;
}

Grid erode(const Grid& g, const StructuringElement& a, TNormKind kind) {
  require_grid(g);
  Grid out = g;
  const UnitValue top = UnitValue::one(backend_of(g));
  for (int y = 0; y < g.height; ++y)
    for (int x = 0; x < g.width; ++x) {
      UnitValue acc = top;
      for (std::size_t i = 0; i < a.size(); ++i) {
        const auto& o = a.offsets[i];
        acc = unit_min(acc, tnorm_residuum(kind, a.weights[i], read(g, x + o.dx, y + o.dy, top)));
      }
      out.at(x, y) = acc;
    }
  return out;
}

Grid composite(const Grid& g, const StructuringElement& a, TNormKind kind, CompositeOp op) {
  switch (op) {
    case CompositeOp::Open:
      return dilate(erode(g, a, kind), a, kind);
    case CompositeOp::Close:
      return erode(dilate(g, a, kind), a, kind);
    case CompositeOp::Outline: {
      const Grid e = erode(g, a, kind);
      Grid out = g;
      // truncated difference max(0, x - e) = x (.) (1 - e) in Lukasiewicz terms
      for (std::size_t i = 0; i < g.samples.size(); ++i)
        out.samples[i] = truncated_sum_minus_one(g.samples[i], complement(e.samples[i]));
      return out;
    }
  }
  return g;
}

}  // namespace qlab
