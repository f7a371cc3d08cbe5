#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "qlab/law_report.hpp"
#include "qlab/tnorm.hpp"
#include "qlab/transforms.hpp"

namespace qlab {

using LukKernel = Kernel<TNormQuantale>;
using LukVector = FreeVector<TNormQuantale>;

/// p_k(x) for the order-n Lukasiewicz partition of unity. Exact for exact x.
UnitValue basis_value(int n, int k, const UnitValue& x);

/// (m-1) * p_k(x / (m-1)) as an integer, for grid points x in 0..m-1.
std::int64_t basis_numerator(int n, int m, int k, int x);

struct LukCoder {
  int n = 0;
  int m = 0;
  LukKernel kernel;
  CoderClass coder_class;
};

/// p(x, k) = p_k(x / (m-1)) on I_m x I_n, with Y embedded at the grid points
/// nearest to k/(n-1). Requires 2 <= n < m.
LukCoder build_coder(int n, int m, Backend backend = Backend::Exact);

LukVector luk_transform(const LukCoder& c, std::span<const UnitValue> f);
LukVector luk_inverse(const LukCoder& c, std::span<const UnitValue> g);

/// Sum of the basis equals 1 and distinct basis values have zero
/// Lukasiewicz product, on every grid {j/den} for the given denominators.
LawReport partition_check(int n, std::span<const std::int64_t> denominators);

}  // namespace qlab
