#pragma once

#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "qlab/finite_lattice.hpp"
#include "qlab/finite_quantale.hpp"
#include "qlab/law_report.hpp"

namespace qlab {

/// Raw tables of a left module over a finite quantale.
struct ModuleTables {
  Table join;    // m x m
  Table action;  // |Q| x m, action[q][x] = q * x
  Elem bottom = 0;
  std::vector<std::string> labels;
};

/// A validated finite left Q-module with derived residuals:
///   under(q, m) = q *\ m = join{n | q*n <= m}       (an element of M)
///   over(m, n)  = m /* n = join{q | q*n <= m}       (a scalar of Q)
/// Note the order in over(): the numerator comes first, as in m /* n.
class FiniteModule {
 public:
  using value_type = Elem;

  static FiniteModule build(const FiniteQuantale& q, const ModuleTables& tables);
  /// Q as a module over itself by left multiplication.
  static FiniteModule self(const FiniteQuantale& q);
  /// Q^k with pointwise join and action; element index is base-|Q| with
  /// component 0 most significant.
  static FiniteModule free(const FiniteQuantale& q, int k);

  const FiniteQuantale& quantale() const noexcept { return d_->q; }
  const FiniteLattice& lattice() const noexcept { return d_->lattice; }
  const ModuleTables& tables() const noexcept { return d_->tables; }
  int size() const noexcept { return d_->lattice.size(); }

  Elem bottom() const noexcept { return d_->lattice.bottom(); }
  Elem top() const noexcept { return d_->lattice.top(); }
  Elem join(Elem a, Elem b) const { return d_->lattice.join(a, b); }
  Elem meet(Elem a, Elem b) const { return d_->lattice.meet(a, b); }
  bool leq(Elem a, Elem b) const { return d_->lattice.leq(a, b); }
  Elem act(Elem q, Elem m) const { return d_->tables.action[q][m]; }
  Elem under(Elem q, Elem m) const { return d_->under[q][m]; }
  Elem over(Elem m, Elem n) const { return d_->over[m][n]; }
  Elem join_all(std::span<const Elem> xs) const { return d_->lattice.join_all(xs); }
  std::string format(Elem m) const;
  std::vector<Elem> carrier() const;

 private:
  struct Data {
    FiniteQuantale q;
    ModuleTables tables;
    FiniteLattice lattice;
    Table under, over;
  };
  explicit FiniteModule(std::shared_ptr<const Data> d) : d_(std::move(d)) {}
  std::shared_ptr<const Data> d_;
};

/// M1-M3 and the nine basic residual properties, exhaustively. Only shape
/// errors throw.
LawReport check_module_laws(const FiniteQuantale& q, const ModuleTables& tables);
LawReport check_module_laws(const FiniteModule& m);

struct ModuleResiduals {
  Table under;  // |Q| x m
  Table over;   // m x m, entries in Q
};
ModuleResiduals module_residuals(const FiniteModule& m);

/// Least submodule containing S, as a sorted element list.
std::vector<Elem> submodule_generated(const FiniteModule& m, std::span<const Elem> s);
/// True iff (x /* v) * v = x for every x.
bool cyclic_generator_check(const FiniteModule& m, Elem v);

/// Elements with top * x = x, ascending.
std::vector<Elem> ideal_elements(const FiniteModule& m);
/// The ideal element generating (S], i.e. top * join(S).
Elem ideal_closure(const FiniteModule& m, std::span<const Elem> s);
/// The interval [bottom, x] as a sorted list.
std::vector<Elem> down_set(const FiniteModule& m, Elem x);
/// Ideal clauses for an arbitrary subset: join closure, downward closure,
/// closure under the action.
LawReport check_ideal(const FiniteModule& m, std::span<const Elem> subset);

/// A partition of the carrier; class_of[x] numbers classes by first occurrence.
struct Congruence {
  std::vector<int> class_of;

  int class_count() const;
  std::vector<std::vector<Elem>> classes() const;
  bool related(Elem x, Elem y) const { return class_of[x] == class_of[y]; }
  /// Every pair related here is related in `other`.
  bool refines(const Congruence& other) const;
  static Congruence from_labels(std::span<const int> labels);
  friend bool operator==(const Congruence&, const Congruence&) = default;
};

bool is_congruence(const FiniteModule& m, const Congruence& c);
/// Every module congruence, by set-partition enumeration. SizeBound above
/// `max_size` elements.
std::vector<Congruence> enumerate_congruences(const FiniteModule& m, int max_size = 6);

struct IdealCongruence {
  Congruence congruence;
  std::vector<Elem> q;  // q[x] = ideal /* x
  /// Set when the carrier is small enough for exhaustive enumeration: true iff
  /// every congruence whose bottom class is the ideal refines this one.
  std::optional<bool> maximal;
};
/// x ~ y iff i /* x = i /* y for the ideal element i. InvalidArgument unless
/// top * i = i.
IdealCongruence congruence_of_ideal(const FiniteModule& m, Elem ideal_element, int certify_up_to = 6);

/// Extensive, monotone, idempotent, structural, plus the equivalent
/// structurality conditions (b)-(e) and their agreement.
LawReport nucleus_validate(const FiniteModule& m, std::span<const Elem> gamma);

/// A validated nucleus (structural closure operator).
class Nucleus {
 public:
  /// Throws InvalidAlgebra naming the first failed property.
  static Nucleus make(const FiniteModule& m, std::vector<Elem> gamma);
  const std::vector<Elem>& table() const noexcept { return gamma_; }
  Elem operator()(Elem x) const { return gamma_[x]; }
  std::vector<Elem> fixed_points() const;

 private:
  explicit Nucleus(std::vector<Elem> g) : gamma_(std::move(g)) {}
  std::vector<Elem> gamma_;
};

/// A module built from a part of another one, with the maps between them.
struct DerivedModule {
  FiniteModule module;
  std::vector<Elem> embed;    // new index -> host element
  std::vector<Elem> project;  // host element -> new index (for quotients)
};

/// Fixed points of gamma with join gamma(a v b), action gamma(q * a) and
/// bottom gamma(bottom). `project` is x -> gamma(x).
DerivedModule quotient_module(const FiniteModule& m, const Nucleus& gamma);

/// For a homomorphism f: M -> N (table over M's carrier), returns f_* o f
/// where f_*(n) = join{x | f(x) <= n}. NotAHomomorphism unless f preserves
/// joins, bottom and the action.
std::vector<Elem> nucleus_from_hom(const FiniteModule& m, const FiniteModule& n, std::span<const Elem> f);

/// [x, top] with action q *_x n = x v q * n. `project` is empty. The
/// action is only associative when top * x = x; InvalidArgument otherwise
/// (every x qualifies over an integral quantale).
DerivedModule interval_module(const FiniteModule& m, Elem x);

}  // namespace qlab
