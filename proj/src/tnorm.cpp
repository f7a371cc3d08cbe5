#include "qlab/tnorm.hpp"

#include <cmath>

#include "qlab/error.hpp"

namespace qlab {

namespace {

void require_backend(TNormKind kind, const UnitValue& x, const UnitValue& y) {
  if (kind.requires_float() && (x.is_exact() || y.is_exact())) {
    throw Error(ErrorCode::BackendMismatch, kind.name() + " is only defined on the float backend");
  }
}

double pow_p(double v, int p) { return std::pow(v, static_cast<double>(p)); }
double root_p(double v, int p) { return p == 1 ? v : std::pow(v, 1.0 / static_cast<double>(p)); }

}  // namespace

TNormKind TNormKind::generalized_lukasiewicz(int p) {
  if (p < 1) throw Error(ErrorCode::InvalidArgument, "generalized Lukasiewicz exponent must be >= 1");
  return {TNormFamily::GeneralizedLukasiewicz, p};
}

TNormKind TNormKind::parse(std::string_view name) {
  if (name == "godel" || name == "minimum") return godel();
  if (name == "product") return product();
  if (name == "lukasiewicz") return lukasiewicz();
  if (name == "nilpotent-minimum") return nilpotent_minimum();
  constexpr std::string_view prefix = "generalized-lukasiewicz:";
  if (name.rfind(prefix, 0) == 0) {
    const std::string digits(name.substr(prefix.size()));
    try {
      std::size_t used = 0;
      const int p = std::stoi(digits, &used);
      if (used == digits.size()) return generalized_lukasiewicz(p);
    } catch (const std::logic_error&) {
    }
  }
  throw Error(ErrorCode::ParseError, "unknown t-norm '" + std::string(name) + "'");
}

std::string TNormKind::name() const {
  switch (family) {
    case TNormFamily::Godel: return "godel";
    case TNormFamily::Product: return "product";
    case TNormFamily::Lukasiewicz: return "lukasiewicz";
    case TNormFamily::GeneralizedLukasiewicz: return "generalized-lukasiewicz:" + std::to_string(p);
    case TNormFamily::NilpotentMinimum: return "nilpotent-minimum";
  }
  return "?";
}

UnitValue tnorm_apply(TNormKind kind, const UnitValue& x, const UnitValue& y) {
  require_backend(kind, x, y);
  switch (kind.family) {
    case TNormFamily::Godel:
      return unit_min(x, y);
    case TNormFamily::Product:
      return UnitValue::real(x.to_double() * y.to_double());
    case TNormFamily::Lukasiewicz:
      return truncated_sum_minus_one(x, y);
    case TNormFamily::GeneralizedLukasiewicz: {
      const double s = pow_p(x.to_double(), kind.p) + pow_p(y.to_double(), kind.p) - 1.0;
      return UnitValue::real(s <= 0.0 ? 0.0 : root_p(s, kind.p));
    }
    case TNormFamily::NilpotentMinimum:
      if (sum_exceeds_one(x, y)) return unit_min(x, y);
      return UnitValue::zero(x.is_exact() && y.is_exact() ? Backend::Exact : Backend::Float);
  }
  return x;
}

UnitValue tnorm_residuum(TNormKind kind, const UnitValue& x, const UnitValue& y) {
  require_backend(kind, x, y);
  const Backend out = x.is_exact() && y.is_exact() ? Backend::Exact : Backend::Float;
  switch (kind.family) {
    case TNormFamily::Godel:
      if (x <= y) return UnitValue::one(out);
      return out == Backend::Exact ? y : y.to_float();
    case TNormFamily::Product:
      if (x.to_double() <= y.to_double()) return UnitValue::one(out);
      return UnitValue::real(y.to_double() / x.to_double());
    case TNormFamily::Lukasiewicz:
      return truncated_one_minus_plus(x, y);
    case TNormFamily::GeneralizedLukasiewicz: {
      const double s = 1.0 - pow_p(x.to_double(), kind.p) + pow_p(y.to_double(), kind.p);
      return UnitValue::real(s >= 1.0 ? 1.0 : root_p(s, kind.p));
    }
    case TNormFamily::NilpotentMinimum:
      if (x <= y) return UnitValue::one(out);
      return unit_max(complement(x), y);
  }
  return y;
}

TNormQuantale::TNormQuantale(TNormKind kind, Backend backend) : kind_(kind), backend_(backend) {
  if (kind.requires_float() && backend == Backend::Exact) {
    throw Error(ErrorCode::BackendMismatch, kind.name() + " is only defined on the float backend");
  }
}

std::vector<UnitValue> TNormQuantale::grid(int den) const {
  if (den < 1) throw Error(ErrorCode::InvalidArgument, "grid denominator must be positive");
  std::vector<UnitValue> out;
  out.reserve(static_cast<std::size_t>(den) + 1);
  for (int k = 0; k <= den; ++k) {
    out.push_back(backend_ == Backend::Exact ? UnitValue::exact(k, den)
                                             : UnitValue::real(static_cast<double>(k) / den));
  }
  return out;
}

}  // namespace qlab
