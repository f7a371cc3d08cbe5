#include "qlab/luk_transform.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "qlab/error.hpp"

namespace qlab {

namespace {

void require_order(int n, int k) {
  if (n < 2) throw Error(ErrorCode::InvalidArgument, "basis order must be at least 2");
  if (k < 0 || k >= n) throw Error(ErrorCode::IndexOut, "basis index " + std::to_string(k) + " outside 0.." +
                                                            std::to_string(n - 1));
}

// Value of a linear piece a*x + b with integer coefficients at x = num/den,
// clamped to [0, 1].
UnitValue linear_piece(std::int64_t a, std::int64_t b, std::int64_t num, std::int64_t den) {
  const __int128 v = static_cast<__int128>(a) * num + static_cast<__int128>(b) * den;
  if (v <= 0) return UnitValue::zero();
  if (v >= den) return UnitValue::one();
  return UnitValue::exact(static_cast<std::int64_t>(v), den);
}

}  // namespace

UnitValue basis_value(int n, int k, const UnitValue& x) {
  require_order(n, k);
  const std::int64_t s = n - 1;
  if (!x.is_exact()) {
    const double t = x.to_double();
    double v = 0.0;
    if (k == 0) {
      v = -s * t + 1;
    } else if (k == n - 1) {
      v = s * t - (n - 2);
    } else {
      v = t * s <= k ? s * t - (k - 1) : -s * t + k + 1;
    }
    return UnitValue::real(std::clamp(v, 0.0, 1.0));
  }
  const std::int64_t num = x.numerator(), den = x.denominator();
  // pieces as closed intervals in units of 1/(n-1); outside them the value is 0
  const __int128 scaled = static_cast<__int128>(s) * num;  // compare against j * den
  auto at_most = [&](std::int64_t j) { return scaled <= static_cast<__int128>(j) * den; };
  auto at_least = [&](std::int64_t j) { return scaled >= static_cast<__int128>(j) * den; };
  if (k == 0) return at_most(1) ? linear_piece(-s, 1, num, den) : UnitValue::zero();
  if (k == n - 1) return at_least(n - 2) ? linear_piece(s, -(n - 2), num, den) : UnitValue::zero();
  if (at_least(k - 1) && at_most(k)) return linear_piece(s, -(k - 1), num, den);
  if (at_least(k) && at_most(k + 1)) return linear_piece(-s, k + 1, num, den);
  return UnitValue::zero();
}

std::int64_t basis_numerator(int n, int m, int k, int x) {
  require_order(n, k);
  if (m < 2 || x < 0 || x >= m) throw Error(ErrorCode::IndexOut, "grid point outside 0..m-1");
  const std::int64_t d = m - 1;
  const std::int64_t dist = std::abs(static_cast<std::int64_t>(n - 1) * x - static_cast<std::int64_t>(k) * d);
  return std::max<std::int64_t>(0, d - dist);
}

LukCoder build_coder(int n, int m, Backend backend) {
  if (n < 2 || m <= n) throw Error(ErrorCode::InvalidArgument, "Lukasiewicz coder needs 2 <= n < m");
  const TNormQuantale q(TNormKind::lukasiewicz(), backend);
  std::vector<UnitValue> values;
  values.reserve(static_cast<std::size_t>(m) * n);
  for (int x = 0; x < m; ++x) {
    const UnitValue t =
        backend == Backend::Exact ? UnitValue::exact(x, m - 1) : UnitValue::real(static_cast<double>(x) / (m - 1));
    for (int k = 0; k < n; ++k) values.push_back(basis_value(n, k, t));
  }
  std::vector<int> embed(n);
  for (int k = 0; k < n; ++k) {
    // nearest grid point to k/(n-1), ties upward
    embed[k] = static_cast<int>((2LL * k * (m - 1) + (n - 1)) / (2LL * (n - 1)));
  }
  LukKernel kernel(q, m, n, std::move(values), std::move(embed));
  CoderClass cls = classify_coder(kernel);
  return LukCoder{n, m, std::move(kernel), std::move(cls)};
}

LukVector luk_transform(const LukCoder& c, std::span<const UnitValue> f) { return transform_apply(c.kernel, f); }

LukVector luk_inverse(const LukCoder& c, std::span<const UnitValue> g) { return inverse_apply(c.kernel, g); }

LawReport partition_check(int n, std::span<const std::int64_t> denominators) {
  require_order(n, 0);
  LawReport r;
  const auto sum_id = r.declare("sum of basis values is 1");
  const auto orth_id = r.declare("distinct basis values have zero product");
  for (std::int64_t den : denominators) {
    if (den < 1) throw Error(ErrorCode::InvalidArgument, "grid denominator must be positive");
    for (std::int64_t j = 0; j <= den; ++j) {
      const UnitValue x = UnitValue::exact(j, den);
      std::vector<UnitValue> p(n);
      for (int k = 0; k < n; ++k) p[k] = basis_value(n, k, x);
      // exact rational sum over the common denominator den * (values reduce)
      std::int64_t acc_num = 0, acc_den = 1;
      for (const auto& v : p) {
        const std::int64_t l = std::lcm(acc_den, v.denominator());
        acc_num = acc_num * (l / acc_den) + v.numerator() * (l / v.denominator());
        acc_den = l;
      }
      auto w = [&] { return "n=" + std::to_string(n) + ", x=" + x.to_string(); };
      r.record(sum_id, acc_num == acc_den, w);
      for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
          r.record(orth_id, tnorm_apply(TNormKind::lukasiewicz(), p[a], p[b]).is_zero(),
                   [&] { return w() + ", k=" + std::to_string(a) + ", h=" + std::to_string(b); });
    }
  }
  return r;
}

}  // namespace qlab
