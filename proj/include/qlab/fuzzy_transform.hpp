#pragma once

#include <span>
#include <vector>

#include "qlab/law_report.hpp"
#include "qlab/tnorm.hpp"
#include "qlab/transforms.hpp"

namespace qlab {

enum class Direction { Up, Down };

/// Basic functions A_1..A_n sampled on nodes p_1..p_l, stored row-major
/// l x n: A_i(p_j) at j * n + i.
struct FuzzyPartition {
  int nodes = 0;      // l
  int functions = 0;  // n
  std::vector<UnitValue> values;
  TNormKind kind = TNormKind::lukasiewicz();

  /// DimMismatch when the sample count is not l * n.
  FuzzyPartition(int nodes, int functions, std::vector<UnitValue> values, TNormKind kind);

  const UnitValue& operator()(int j, int i) const { return values[static_cast<std::size_t>(j) * functions + i]; }
  Backend backend() const noexcept;
  /// The induced kernel k(j, i) = A_i(p_j) over the t-norm quantale.
  Kernel<TNormQuantale> kernel() const;
};

/// Up:   F_k = V_j A_k(p_j) * f(p_j), needs n < l.
/// Down: F_k = /\_j A_k(p_j) -> f(p_j), needs l <= n.
/// Both need n >= 2 and a valid partition; otherwise InvalidPartition.
std::vector<UnitValue> f_transform(const FuzzyPartition& part, std::span<const UnitValue> f, Direction dir);
/// Up:   f(p_j) = /\_k A_k(p_j) -> F_k
/// Down: f(p_j) = V_k A_k(p_j) * F_k
std::vector<UnitValue> f_inverse(const FuzzyPartition& part, std::span<const UnitValue> F, Direction dir);

/// Covering on the nodes, sufficient density, and both conditions restated on
/// the induced kernel.
LawReport validate_partition(const FuzzyPartition& part);

}  // namespace qlab
