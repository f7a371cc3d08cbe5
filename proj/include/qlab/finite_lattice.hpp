#pragma once

#include <memory>
#include <span>
#include <vector>

#include "qlab/law_report.hpp"

namespace qlab {

/// Element index into a finite carrier 0..n-1.
using Elem = int;
using Table = std::vector<std::vector<Elem>>;

/// A finite lattice given by its join table. The order is derived from the
/// join (x <= y iff x v y = y) and meets are computed once as the join of all
/// common lower bounds. Copies share the immutable tables.
class FiniteLattice {
 public:
  /// Validates the table (semilattice laws plus a join-neutral element).
  static FiniteLattice from_join_table(const Table& join);
  /// Reports the semilattice laws without throwing. Shape errors still throw.
  static LawReport check_join_table(const Table& join);

  static FiniteLattice chain(int n);
  /// Subsets of a `bits`-element set, element index = bitmask.
  static FiniteLattice boolean(int bits);

  int size() const noexcept { return d_->n; }
  Elem join(Elem a, Elem b) const { return d_->join[index(a, b)]; }
  Elem meet(Elem a, Elem b) const { return d_->meet[index(a, b)]; }
  bool leq(Elem a, Elem b) const { return join(a, b) == b; }
  Elem bottom() const noexcept { return d_->bottom; }
  Elem top() const noexcept { return d_->top; }
  Elem join_all(std::span<const Elem> xs) const;
  Elem meet_all(std::span<const Elem> xs) const;
  Table join_table() const;

  friend bool operator==(const FiniteLattice& a, const FiniteLattice& b) {
    return a.d_->n == b.d_->n && a.d_->join == b.d_->join;
  }

 private:
  struct Data {
    int n = 0;
    Elem bottom = 0;
    Elem top = 0;
    std::vector<Elem> join;
    std::vector<Elem> meet;
  };

  explicit FiniteLattice(std::shared_ptr<const Data> d) : d_(std::move(d)) {}
  std::size_t index(Elem a, Elem b) const {
    return static_cast<std::size_t>(a) * static_cast<std::size_t>(d_->n) + static_cast<std::size_t>(b);
  }

  std::shared_ptr<const Data> d_;
};

/// Throws InvalidAlgebra unless `t` is an n x n table with entries in 0..n-1.
void require_square_table(const Table& t, int n, const char* what);

}  // namespace qlab
