#pragma once

#include <memory>
#include <string>
#include <vector>

#include "qlab/finite_lattice.hpp"
#include "qlab/law_report.hpp"
#include "qlab/quantale.hpp"
#include "qlab/tnorm.hpp"

namespace qlab {

/// Raw operation tables of a finite unital quantale, before validation.
struct QuantaleTables {
  Table join;
  Table product;
  Elem unit = 0;
  Elem bottom = 0;
  std::vector<std::string> labels;  // optional display names
};

/// A validated finite quantale with eagerly derived residual tables.
class FiniteQuantale {
 public:
  using value_type = Elem;

  /// Validates Q1-Q3 and derives x\y and y/x by exhaustion. Throws
  /// InvalidAlgebra with the first violated law.
  static FiniteQuantale build(const QuantaleTables& tables);

  int size() const noexcept { return d_->lattice.size(); }
  const FiniteLattice& lattice() const noexcept { return d_->lattice; }
  bool commutative() const noexcept { return d_->commutative; }
  bool integral() const noexcept { return top() == unit(); }
  const QuantaleTables& tables() const noexcept { return d_->tables; }

  Elem bottom() const noexcept { return d_->lattice.bottom(); }
  Elem top() const noexcept { return d_->lattice.top(); }
  Elem unit() const noexcept { return d_->tables.unit; }
  Elem join(Elem a, Elem b) const { return d_->lattice.join(a, b); }
  Elem meet(Elem a, Elem b) const { return d_->lattice.meet(a, b); }
  Elem mul(Elem a, Elem b) const { return d_->product[idx(a, b)]; }
  /// a \ b = join{z | a*z <= b}
  Elem under(Elem a, Elem b) const { return d_->under[idx(a, b)]; }
  /// b / a = join{z | z*a <= b}; argument order matches the notation b/a.
  Elem over(Elem b, Elem a) const { return d_->over[idx(b, a)]; }
  bool leq(Elem a, Elem b) const { return d_->lattice.leq(a, b); }
  bool equal(Elem a, Elem b) const { return a == b; }
  std::string format(Elem a) const;

  std::vector<Elem> carrier() const;

 private:
  struct Data {
    QuantaleTables tables;
    FiniteLattice lattice;
    std::vector<Elem> product, under, over;
    bool commutative = true;
  };
  explicit FiniteQuantale(std::shared_ptr<const Data> d) : d_(std::move(d)) {}
  std::size_t idx(Elem a, Elem b) const {
    return static_cast<std::size_t>(a) * static_cast<std::size_t>(size()) + static_cast<std::size_t>(b);
  }
  std::shared_ptr<const Data> d_;
};

static_assert(QuantaleOps<FiniteQuantale>);

/// Residual tables by exhaustion over the carrier; same as build().
FiniteQuantale finite_residuals(const QuantaleTables& tables);

/// Law report for raw tables: the quantale axioms, the residual adjunction
/// and the derived residual identities, all on every tuple. Only malformed
/// shapes throw.
LawReport check_quantale_laws(const QuantaleTables& tables);
LawReport check_quantale_laws(const FiniteQuantale& q);
/// t-norm quantale checked on the grid {k/den}.
LawReport check_quantale_laws(const TNormQuantale& q, int grid_den);

struct FiniteMonoid {
  int size = 0;
  Table product;
  Elem unit = 0;

  /// Throws InvalidAlgebra unless associative and unital.
  void validate() const;
  static FiniteMonoid trivial();
  static FiniteMonoid cyclic_group(int n);
};

/// Powerset quantale with complex multiplication; subsets are bitmasks.
FiniteQuantale powerset_quantale(const FiniteMonoid& m, int max_monoid_size = 4);

/// The k-element chain {0, 1/(k-1), ..., 1} under an exact t-norm (closed on
/// the grid for Godel, Lukasiewicz and nilpotent minimum).
FiniteQuantale tnorm_chain(TNormKind kind, int k);
inline FiniteQuantale lukasiewicz_chain(int k) { return tnorm_chain(TNormKind::lukasiewicz(), k); }

}  // namespace qlab
