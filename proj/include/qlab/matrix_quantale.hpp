#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "qlab/finite_quantale.hpp"
#include "qlab/law_report.hpp"

namespace qlab {

/// n x n matrices over a finite quantale, row-major. Product is
/// (a*b)_ij = join_k a_ik b_kj; order, joins and meets are entrywise.
class MatrixQuantale {
 public:
  using value_type = std::vector<Elem>;

  MatrixQuantale(FiniteQuantale base, int n);

  const FiniteQuantale& base() const noexcept { return q_; }
  int dim() const noexcept { return n_; }

  value_type bottom() const { return value_type(n_ * n_, q_.bottom()); }
  value_type top() const { return value_type(n_ * n_, q_.top()); }
  /// e on the diagonal, bottom elsewhere.
  value_type unit() const;
  value_type join(const value_type& a, const value_type& b) const;
  value_type meet(const value_type& a, const value_type& b) const;
  value_type mul(const value_type& a, const value_type& b) const;
  /// (a\b)_kj = meet_i a_ik \ b_ij
  value_type under(const value_type& a, const value_type& b) const;
  /// (b/a)_ik = meet_j b_ij / a_kj
  value_type over(const value_type& b, const value_type& a) const;
  bool leq(const value_type& a, const value_type& b) const;
  bool equal(const value_type& a, const value_type& b) const { return a == b; }
  std::string format(const value_type& a) const;

  bool is_idempotent(const value_type& u) const { return mul(u, u) == u; }
  /// |Q|^(n^2), saturating at UINT64_MAX.
  std::uint64_t carrier_size() const;
  /// All matrices; InvalidArgument above `limit`.
  std::vector<value_type> carrier(std::uint64_t limit = 4096) const;

 private:
  Elem at(const value_type& a, int i, int j) const { return a[i * n_ + j]; }
  FiniteQuantale q_;
  int n_;
};

/// Matrix carriers up to this size are law-checked on every triple.
inline constexpr std::uint64_t kMatrixExhaustiveBound = 100;
/// Random triples checked above the bound.
inline constexpr std::size_t kMatrixSampleCount = 1000;

/// Exhaustive when carrier_size() <= kMatrixExhaustiveBound, otherwise
/// kMatrixSampleCount seeded random triples.
LawReport check_matrix_quantale_laws(const MatrixQuantale& m, std::uint64_t seed = 1);

}  // namespace qlab
