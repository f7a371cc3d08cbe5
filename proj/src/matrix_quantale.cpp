#include "qlab/matrix_quantale.hpp"

#include <limits>
#include <random>

#include "qlab/error.hpp"
#include "qlab/quantale_laws.hpp"

namespace qlab {

static_assert(QuantaleOps<MatrixQuantale>);

MatrixQuantale::MatrixQuantale(FiniteQuantale base, int n) : q_(std::move(base)), n_(n) {
  if (n < 1) throw Error(ErrorCode::InvalidArgument, "matrix dimension must be positive");
}

MatrixQuantale::value_type MatrixQuantale::unit() const {
  value_type u = bottom();
  for (int i = 0; i < n_; ++i) u[i * n_ + i] = q_.unit();
  return u;
}

MatrixQuantale::value_type MatrixQuantale::join(const value_type& a, const value_type& b) const {
  value_type c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) c[i] = q_.join(a[i], b[i]);
  return c;
}

MatrixQuantale::value_type MatrixQuantale::meet(const value_type& a, const value_type& b) const {
  value_type c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) c[i] = q_.meet(a[i], b[i]);
  return c;
}

MatrixQuantale::value_type MatrixQuantale::mul(const value_type& a, const value_type& b) const {
  value_type c(a.size());
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j) {
      Elem acc = q_.bottom();
      for (int k = 0; k < n_; ++k) acc = q_.join(acc, q_.mul(at(a, i, k), at(b, k, j)));
      c[i * n_ + j] = acc;
    }
  return c;
}

MatrixQuantale::value_type MatrixQuantale::under(const value_type& a, const value_type& b) const {
  value_type c(a.size());
  for (int k = 0; k < n_; ++k)
    for (int j = 0; j < n_; ++j) {
      Elem acc = q_.top();
      for (int i = 0; i < n_; ++i) acc = q_.meet(acc, q_.under(at(a, i, k), at(b, i, j)));
      c[k * n_ + j] = acc;
    }
  return c;
}

MatrixQuantale::value_type MatrixQuantale::over(const value_type& b, const value_type& a) const {
  value_type c(a.size());
  for (int i = 0; i < n_; ++i)
    for (int k = 0; k < n_; ++k) {
      Elem acc = q_.top();
      for (int j = 0; j < n_; ++j) acc = q_.meet(acc, q_.over(at(b, i, j), at(a, k, j)));
      c[i * n_ + k] = acc;
    }
  return c;
}

bool MatrixQuantale::leq(const value_type& a, const value_type& b) const {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (!q_.leq(a[i], b[i])) return false;
  return true;
}

std::string MatrixQuantale::format(const value_type& a) const {
  std::string s = "[";
  for (int i = 0; i < n_; ++i) {
    s += i ? ";" : "";
    for (int j = 0; j < n_; ++j) s += (j ? "," : "") + q_.format(at(a, i, j));
  }
  return s + "]";
}

std::uint64_t MatrixQuantale::carrier_size() const {
  std::uint64_t total = 1;
  const auto base = static_cast<std::uint64_t>(q_.size());
  for (int i = 0; i < n_ * n_; ++i) {
    if (total > std::numeric_limits<std::uint64_t>::max() / base) return std::numeric_limits<std::uint64_t>::max();
    total *= base;
  }
  return total;
}

std::vector<MatrixQuantale::value_type> MatrixQuantale::carrier(std::uint64_t limit) const {
  const std::uint64_t total = carrier_size();
  if (total > limit) throw Error(ErrorCode::InvalidArgument, "matrix carrier too large to enumerate");
  std::vector<value_type> out;
  out.reserve(total);
  value_type cur(n_ * n_, 0);
  for (std::uint64_t c = 0; c < total; ++c) {
    out.push_back(cur);
    for (int i = n_ * n_ - 1; i >= 0; --i) {
      if (++cur[i] < q_.size()) break;
      cur[i] = 0;
    }
  }
  return out;
}

LawReport check_matrix_quantale_laws(const MatrixQuantale& m, std::uint64_t seed) {
  if (m.carrier_size() <= kMatrixExhaustiveBound) {
    const auto carrier = m.carrier(kMatrixExhaustiveBound);
    return check_quantale_laws(m, std::span<const MatrixQuantale::value_type>(carrier));
  }
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<Elem> pick(0, m.base().size() - 1);
  auto draw = [&] {
    MatrixQuantale::value_type a(m.dim() * m.dim());
    for (auto& v : a) v = pick(rng);
    return a;
  };
  return check_quantale_laws_sampled(m, draw, kMatrixSampleCount);
}

}  // namespace qlab
