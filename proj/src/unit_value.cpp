#include "qlab/unit_value.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <limits>
#include <numeric>
#include <sstream>

#include "qlab/error.hpp"

namespace qlab {

namespace {

using i128 = __int128;

std::int64_t narrow(i128 v) {
  if (v > std::numeric_limits<std::int64_t>::max() ||
      v < std::numeric_limits<std::int64_t>::min()) {
    throw Error(ErrorCode::Overflow, "exact unit value exceeds 64-bit range");
  }
  return static_cast<std::int64_t>(v);
}

struct Common {
  i128 a, b, den;
};

constexpr std::int64_t kSmall = std::int64_t{1} << 31;

// Brings two exact values to their least common denominator.
Common common(const UnitValue& a, const UnitValue& b) {
  if (a.denominator() == b.denominator()) return {a.numerator(), b.numerator(), a.denominator()};
  const std::int64_t g = std::gcd(a.denominator(), b.denominator());
  const i128 den = static_cast<i128>(a.denominator() / g) * b.denominator();
  return {static_cast<i128>(a.numerator()) * (den / a.denominator()),
          static_cast<i128>(b.numerator()) * (den / b.denominator()), den};
}

UnitValue from_wide(i128 num, i128 den) {
  if (num < 0) num = 0;
  if (num > den) num = den;
  if (den < kSmall) return UnitValue::exact(static_cast<std::int64_t>(num), static_cast<std::int64_t>(den));
  // reduce before narrowing so large common denominators still fit
  i128 x = num, y = den;
  while (y != 0) {
    i128 t = x % y;
    x = y;
    y = t;
  }
  if (x == 0) x = 1;
  return UnitValue::exact(narrow(num / x), narrow(den / x));
}

double clamp01(double v) { return std::clamp(v, 0.0, 1.0); }

}  // namespace

UnitValue UnitValue::exact(std::int64_t num, std::int64_t den) {
  if (den <= 0 || num < 0 || num > den) {
    throw Error(ErrorCode::InvalidArgument,
                "exact unit value needs 0 <= num <= den, den > 0 (got " +
                    std::to_string(num) + "/" + std::to_string(den) + ")");
  }
  UnitValue v;
  const std::int64_t g = std::gcd(num, den);
  v.num_ = num / g;
  v.den_ = den / g;
  v.backend_ = Backend::Exact;
  return v;
}

UnitValue UnitValue::real(double value) {
  if (!(value >= -kFloatTolerance && value <= 1.0 + kFloatTolerance)) {
    throw Error(ErrorCode::InvalidArgument, "float unit value outside [0,1]");
  }
  UnitValue v;
  v.real_ = clamp01(value);
  v.backend_ = Backend::Float;
  return v;
}

UnitValue UnitValue::zero(Backend backend) {
  return backend == Backend::Exact ? exact(0, 1) : real(0.0);
}

UnitValue UnitValue::one(Backend backend) {
  return backend == Backend::Exact ? exact(1, 1) : real(1.0);
}

UnitValue UnitValue::parse(std::string_view text) {
  auto fail = [&]() -> UnitValue {
    throw Error(ErrorCode::ParseError, "cannot parse unit value '" + std::string(text) + "'");
  };
  if (text.empty()) return fail();
  if (text.rfind("f:", 0) == 0) {
    std::string s(text.substr(2));
    char* end = nullptr;
    const double d = std::strtod(s.c_str(), &end);
    if (end == s.c_str() || *end != '\0') return fail();
    return real(d);
  }
  auto parse_int = [&](std::string_view s, std::int64_t& out) {
    auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
    return ec == std::errc() && p == s.data() + s.size();
  };
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    std::int64_t n = 0, d = 0;
    if (!parse_int(text.substr(0, slash), n) || !parse_int(text.substr(slash + 1), d)) return fail();
    return exact(n, d);
  }
  if (auto dot = text.find('.'); dot != std::string_view::npos) {
    std::int64_t whole = 0, frac = 0;
    const auto ws = text.substr(0, dot);
    const auto fs = text.substr(dot + 1);
    if (ws.empty() && fs.empty()) return fail();
    if (!ws.empty() && !parse_int(ws, whole)) return fail();
    if (fs.size() > 17) return fail();
    if (!fs.empty() && !parse_int(fs, frac)) return fail();
    std::int64_t scale = 1;
    for (std::size_t i = 0; i < fs.size(); ++i) scale *= 10;
    return exact(whole * scale + frac, scale);
  }
  std::int64_t n = 0;
  if (!parse_int(text, n)) return fail();
  return exact(n, 1);
}

double UnitValue::to_double() const noexcept {
  return is_exact() ? static_cast<double>(num_) / static_cast<double>(den_) : real_;
}

bool UnitValue::is_zero() const noexcept {
  return is_exact() ? num_ == 0 : real_ <= kFloatTolerance;
}

bool UnitValue::is_one() const noexcept {
  return is_exact() ? num_ == den_ : real_ >= 1.0 - kFloatTolerance;
}

std::string UnitValue::to_string() const {
  if (is_exact()) {
    if (den_ == 1) return std::to_string(num_);
    return std::to_string(num_) + "/" + std::to_string(den_);
  }
  std::ostringstream os;
  os.precision(17);
  os << "f:" << real_;
  return os.str();
}

std::weak_ordering operator<=>(const UnitValue& a, const UnitValue& b) noexcept {
  if (a.is_exact() && b.is_exact()) {
    if (a.den_ == b.den_) return a.num_ <=> b.num_;
    if (a.den_ < kSmall && b.den_ < kSmall) return a.num_ * b.den_ <=> b.num_ * a.den_;
    const i128 l = static_cast<i128>(a.num_) * b.den_;
    const i128 r = static_cast<i128>(b.num_) * a.den_;
    if (l < r) return std::weak_ordering::less;
    if (l > r) return std::weak_ordering::greater;
    return std::weak_ordering::equivalent;
  }
  const double x = a.to_double(), y = b.to_double();
  if (std::fabs(x - y) <= UnitValue::kFloatTolerance) return std::weak_ordering::equivalent;
  return x < y ? std::weak_ordering::less : std::weak_ordering::greater;
}

UnitValue unit_max(const UnitValue& a, const UnitValue& b) {
  if (a.is_exact() != b.is_exact()) return UnitValue::real(std::max(a.to_double(), b.to_double()));
  return (a <=> b) < 0 ? b : a;
}

UnitValue unit_min(const UnitValue& a, const UnitValue& b) {
  if (a.is_exact() != b.is_exact()) return UnitValue::real(std::min(a.to_double(), b.to_double()));
  return (b <=> a) < 0 ? b : a;
}

UnitValue truncated_sum_minus_one(const UnitValue& a, const UnitValue& b) {
  if (a.is_exact() && b.is_exact()) {
    auto c = common(a, b);
    return from_wide(c.a + c.b - c.den, c.den);
  }
  return UnitValue::real(clamp01(a.to_double() + b.to_double() - 1.0));
}

UnitValue truncated_one_minus_plus(const UnitValue& a, const UnitValue& b) {
  if (a.is_exact() && b.is_exact()) {
    auto c = common(a, b);
    return from_wide(c.den - c.a + c.b, c.den);
  }
  return UnitValue::real(clamp01(1.0 - a.to_double() + b.to_double()));
}

UnitValue complement(const UnitValue& a) {
  if (a.is_exact()) return UnitValue::exact(a.denominator() - a.numerator(), a.denominator());
  return UnitValue::real(1.0 - a.to_double());
}

bool sum_exceeds_one(const UnitValue& a, const UnitValue& b) {
  if (a.is_exact() && b.is_exact()) {
    auto c = common(a, b);
    return c.a + c.b > c.den;
  }
  return a.to_double() + b.to_double() > 1.0;
}

}  // namespace qlab
