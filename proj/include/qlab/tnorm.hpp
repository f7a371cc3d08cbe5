#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "qlab/quantale.hpp"
#include "qlab/unit_value.hpp"

namespace qlab {

enum class TNormFamily { Godel, Product, Lukasiewicz, GeneralizedLukasiewicz, NilpotentMinimum };

struct TNormKind {
  TNormFamily family = TNormFamily::Lukasiewicz;
  int p = 1;  // exponent, GeneralizedLukasiewicz only

  static TNormKind godel() { return {TNormFamily::Godel, 1}; }
  static TNormKind product() { return {TNormFamily::Product, 1}; }
  static TNormKind lukasiewicz() { return {TNormFamily::Lukasiewicz, 1}; }
  static TNormKind generalized_lukasiewicz(int p);
  static TNormKind nilpotent_minimum() { return {TNormFamily::NilpotentMinimum, 1}; }

  /// Accepts godel, product, lukasiewicz, nilpotent-minimum and
  /// generalized-lukasiewicz:<p>.
  static TNormKind parse(std::string_view name);
  std::string name() const;

  /// Product and generalized Łukasiewicz have irrational values in general.
  bool requires_float() const noexcept {
    return family == TNormFamily::Product || family == TNormFamily::GeneralizedLukasiewicz;
  }

  friend bool operator==(const TNormKind&, const TNormKind&) = default;
};

UnitValue tnorm_apply(TNormKind kind, const UnitValue& x, const UnitValue& y);
/// x -> y, the greatest z with z * x <= y.
UnitValue tnorm_residuum(TNormKind kind, const UnitValue& x, const UnitValue& y);

/// The commutative quantale <[0,1], max, *, 0, 1> of a left-continuous t-norm.
class TNormQuantale {
 public:
  using value_type = UnitValue;

  explicit TNormQuantale(TNormKind kind, Backend backend = Backend::Exact);

  TNormKind kind() const noexcept { return kind_; }
  Backend backend() const noexcept { return backend_; }

  UnitValue bottom() const { return UnitValue::zero(backend_); }
  UnitValue top() const { return UnitValue::one(backend_); }
  UnitValue unit() const { return UnitValue::one(backend_); }
  UnitValue join(const UnitValue& a, const UnitValue& b) const { return unit_max(a, b); }
  UnitValue meet(const UnitValue& a, const UnitValue& b) const { return unit_min(a, b); }
  UnitValue mul(const UnitValue& a, const UnitValue& b) const { return tnorm_apply(kind_, a, b); }
  UnitValue under(const UnitValue& x, const UnitValue& y) const { return tnorm_residuum(kind_, x, y); }
  UnitValue over(const UnitValue& y, const UnitValue& x) const { return tnorm_residuum(kind_, x, y); }
  bool leq(const UnitValue& a, const UnitValue& b) const { return a <= b; }
  bool equal(const UnitValue& a, const UnitValue& b) const { return a == b; }
  std::string format(const UnitValue& a) const { return a.to_string(); }

  /// The grid {k/den : 0 <= k <= den} in this quantale's backend.
  std::vector<UnitValue> grid(int den) const;

 private:
  TNormKind kind_;
  Backend backend_;
};

static_assert(QuantaleOps<TNormQuantale>);

}  // namespace qlab
