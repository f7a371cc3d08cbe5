#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

namespace qlab {

enum class Backend : std::uint8_t { Exact, Float };

/// A point of the real unit interval.
///
/// Exact values are reduced fractions num/den with 0 <= num <= den. Float
/// values carry a double in [0,1]; comparisons involving a Float operand treat
/// values within kFloatTolerance as equal. Mixed Exact/Float arithmetic is
/// carried out in Float.
class UnitValue {
 public:
  static constexpr double kFloatTolerance = 1e-12;

  constexpr UnitValue() = default;

  static UnitValue exact(std::int64_t num, std::int64_t den);
  static UnitValue real(double value);
  static UnitValue zero(Backend backend = Backend::Exact);
  static UnitValue one(Backend backend = Backend::Exact);

  /// Parses "a/b", a decimal such as "0.25" (exact), or "f:<double>" (float).
  static UnitValue parse(std::string_view text);

  Backend backend() const noexcept { return backend_; }
  bool is_exact() const noexcept { return backend_ == Backend::Exact; }
  std::int64_t numerator() const noexcept { return num_; }
  std::int64_t denominator() const noexcept { return den_; }
  double to_double() const noexcept;
  UnitValue to_float() const noexcept { return real(to_double()); }

  bool is_zero() const noexcept;
  bool is_one() const noexcept;

  std::string to_string() const;

  friend std::weak_ordering operator<=>(const UnitValue& a, const UnitValue& b) noexcept;
  friend bool operator==(const UnitValue& a, const UnitValue& b) noexcept {
    return (a <=> b) == 0;
  }

 private:
  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
  double real_ = 0.0;
  Backend backend_ = Backend::Exact;
};

// Lattice and Łukasiewicz-style arithmetic shared by the t-norm layer. All of
// them stay exact when both operands are exact, with the result denominator
// dividing lcm of the operand denominators.
UnitValue unit_max(const UnitValue& a, const UnitValue& b);
UnitValue unit_min(const UnitValue& a, const UnitValue& b);
/// max(0, a + b - 1)
UnitValue truncated_sum_minus_one(const UnitValue& a, const UnitValue& b);
/// min(1, 1 - a + b)
UnitValue truncated_one_minus_plus(const UnitValue& a, const UnitValue& b);
/// 1 - a
UnitValue complement(const UnitValue& a);
/// true iff a + b > 1 (exact when both exact)
bool sum_exceeds_one(const UnitValue& a, const UnitValue& b);

}  // namespace qlab
