#include "qlab/finite_quantale.hpp"

#include <algorithm>

#include "qlab/error.hpp"
#include "qlab/quantale_laws.hpp"

namespace qlab {

namespace {

// Quantale operations computed straight from unvalidated tables, so that the
// law checker can report on broken inputs instead of refusing them.
class RawQuantale {
 public:
  using value_type = Elem;

  explicit RawQuantale(const QuantaleTables& t) : labels_(t.labels) {
    n_ = static_cast<int>(t.join.size());
    if (n_ == 0) throw Error(ErrorCode::InvalidAlgebra, "empty carrier");
    require_square_table(t.join, n_, "join");
    require_square_table(t.product, n_, "product");
    if (t.unit < 0 || t.unit >= n_) throw Error(ErrorCode::InvalidAlgebra, "unit index out of range");
    if (t.bottom < 0 || t.bottom >= n_) throw Error(ErrorCode::InvalidAlgebra, "bottom index out of range");
    const std::size_t nn = static_cast<std::size_t>(n_) * n_;
    join_.resize(nn);
    mul_.resize(nn);
    for (Elem a = 0; a < n_; ++a) {
      for (Elem b = 0; b < n_; ++b) {
        join_[idx(a, b)] = t.join[a][b];
        mul_[idx(a, b)] = t.product[a][b];
      }
    }
    unit_ = t.unit;
    bottom_ = t.bottom;
    top_ = bottom_;
    for (Elem x = 0; x < n_; ++x) top_ = join(top_, x);
    meet_.resize(nn);
    under_.resize(nn);
    over_.resize(nn);
    for (Elem a = 0; a < n_; ++a) {
      for (Elem b = 0; b < n_; ++b) {
        Elem m = bottom_, u = bottom_, o = bottom_;
        for (Elem z = 0; z < n_; ++z) {
          if (leq(z, a) && leq(z, b)) m = join(m, z);
          if (leq(mul(a, z), b)) u = join(u, z);  // a \ b
          if (leq(mul(z, b), a)) o = join(o, z);  // a / b
        }
        meet_[idx(a, b)] = m;
        under_[idx(a, b)] = u;
        over_[idx(a, b)] = o;
      }
    }
  }

  int size() const { return n_; }
  Elem bottom() const { return bottom_; }
  Elem top() const { return top_; }
  Elem unit() const { return unit_; }
  Elem join(Elem a, Elem b) const { return join_[idx(a, b)]; }
  Elem meet(Elem a, Elem b) const { return meet_[idx(a, b)]; }
  Elem mul(Elem a, Elem b) const { return mul_[idx(a, b)]; }
  Elem under(Elem a, Elem b) const { return under_[idx(a, b)]; }
  Elem over(Elem a, Elem b) const { return over_[idx(a, b)]; }
  bool leq(Elem a, Elem b) const { return join(a, b) == b; }
  bool equal(Elem a, Elem b) const { return a == b; }
  std::string format(Elem a) const {
    if (static_cast<std::size_t>(a) < labels_.size()) return labels_[a];
    return std::to_string(a);
  }

  const std::vector<Elem>& mul_table() const { return mul_; }
  const std::vector<Elem>& under_table() const { return under_; }
  const std::vector<Elem>& over_table() const { return over_; }

 private:
  std::size_t idx(Elem a, Elem b) const { return static_cast<std::size_t>(a) * n_ + b; }
  int n_ = 0;
  Elem unit_ = 0, bottom_ = 0, top_ = 0;
  std::vector<Elem> join_, meet_, mul_, under_, over_;
  std::vector<std::string> labels_;
};

std::vector<Elem> iota_carrier(int n) {
  std::vector<Elem> c(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) c[i] = i;
  return c;
}

}  // namespace

LawReport check_quantale_laws(const QuantaleTables& tables) {
  const RawQuantale raw(tables);
  const auto carrier = iota_carrier(raw.size());
  return check_quantale_laws<RawQuantale>(raw, carrier);
}

LawReport check_quantale_laws(const FiniteQuantale& q) {
  const auto carrier = q.carrier();
  return check_quantale_laws<FiniteQuantale>(q, carrier);
}

LawReport check_quantale_laws(const TNormQuantale& q, int grid_den) {
  const auto grid = q.grid(grid_den);
  return check_quantale_laws<TNormQuantale>(q, grid);
}

FiniteQuantale FiniteQuantale::build(const QuantaleTables& tables) {
  const RawQuantale raw(tables);
  const LawReport report = check_quantale_laws<RawQuantale>(raw, iota_carrier(raw.size()));
  for (const auto& r : report.results()) {
    if (!r.passed) {
      throw Error(ErrorCode::InvalidAlgebra,
                  "tables violate " + r.law + (r.counterexample.empty() ? "" : " at " + r.counterexample));
    }
  }
  auto d = std::make_shared<Data>(Data{tables, FiniteLattice::from_join_table(tables.join),
                                       raw.mul_table(), raw.under_table(), raw.over_table(), true});
  const int n = raw.size();
  for (Elem a = 0; a < n && d->commutative; ++a)
    for (Elem b = 0; b < n && d->commutative; ++b) d->commutative = raw.mul(a, b) == raw.mul(b, a);
  return FiniteQuantale(std::move(d));
}

FiniteQuantale finite_residuals(const QuantaleTables& tables) { return FiniteQuantale::build(tables); }

std::string FiniteQuantale::format(Elem a) const {
  const auto& labels = d_->tables.labels;
  if (a >= 0 && static_cast<std::size_t>(a) < labels.size()) return labels[a];
  return std::to_string(a);
}

std::vector<Elem> FiniteQuantale::carrier() const { return iota_carrier(size()); }

void FiniteMonoid::validate() const {
  if (size < 1) throw Error(ErrorCode::InvalidAlgebra, "monoid needs at least one element");
  require_square_table(product, size, "monoid product");
  if (unit < 0 || unit >= size) throw Error(ErrorCode::InvalidAlgebra, "monoid unit out of range");
  for (Elem a = 0; a < size; ++a) {
    if (product[unit][a] != a || product[a][unit] != a) {
      throw Error(ErrorCode::InvalidAlgebra, "monoid unit law fails at " + std::to_string(a));
    }
    for (Elem b = 0; b < size; ++b)
      for (Elem c = 0; c < size; ++c)
        if (product[product[a][b]][c] != product[a][product[b][c]]) {
          throw Error(ErrorCode::InvalidAlgebra, "monoid product is not associative");
        }
  }
}

FiniteMonoid FiniteMonoid::trivial() { return FiniteMonoid{1, Table{{0}}, 0}; }

FiniteMonoid FiniteMonoid::cyclic_group(int n) {
  if (n < 1) throw Error(ErrorCode::InvalidArgument, "cyclic group order must be positive");
  FiniteMonoid m{n, Table(n, std::vector<Elem>(n)), 0};
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b) m.product[a][b] = (a + b) % n;
  return m;
}

FiniteQuantale powerset_quantale(const FiniteMonoid& m, int max_monoid_size) {
  m.validate();
  if (m.size > max_monoid_size || m.size > 16) {
    throw Error(ErrorCode::SizeBound, "powerset of a " + std::to_string(m.size) +
                                          "-element monoid exceeds the configured bound");
  }
  const int n = 1 << m.size;
  QuantaleTables t;
  t.join.assign(n, std::vector<Elem>(n));
  t.product.assign(n, std::vector<Elem>(n));
  for (Elem a = 0; a < n; ++a) {
    for (Elem b = 0; b < n; ++b) {
      t.join[a][b] = a | b;
      Elem prod = 0;
      for (int i = 0; i < m.size; ++i) {
        if (!(a >> i & 1)) continue;
        for (int j = 0; j < m.size; ++j)
          if (b >> j & 1) prod |= 1 << m.product[i][j];
      }
      t.product[a][b] = prod;
    }
  }
  t.unit = 1 << m.unit;
  t.bottom = 0;
  for (Elem a = 0; a < n; ++a) {
    std::string label = "{";
    for (int i = 0; i < m.size; ++i) {
      if (a >> i & 1) label += (label.size() > 1 ? "," : "") + std::to_string(i);
    }
    t.labels.push_back(label + "}");
  }
  return FiniteQuantale::build(t);
}

FiniteQuantale tnorm_chain(TNormKind kind, int k) {
  if (k < 2) throw Error(ErrorCode::InvalidArgument, "chain quantale needs at least two elements");
  if (kind.requires_float()) {
    throw Error(ErrorCode::BackendMismatch, kind.name() + " chains are not closed on a finite grid");
  }
  const int den = k - 1;
  QuantaleTables t;
  t.join.assign(k, std::vector<Elem>(k));
  t.product.assign(k, std::vector<Elem>(k));
  for (Elem a = 0; a < k; ++a) {
    t.labels.push_back(UnitValue::exact(a, den).to_string());
    for (Elem b = 0; b < k; ++b) {
      t.join[a][b] = std::max(a, b);
      const UnitValue v = tnorm_apply(kind, UnitValue::exact(a, den), UnitValue::exact(b, den));
      // grid closure: v * den must be integral
      if ((v.numerator() * den) % v.denominator() != 0) {
        throw Error(ErrorCode::InvalidArgument, kind.name() + " is not closed on this chain");
      }
      t.product[a][b] = static_cast<Elem>(v.numerator() * den / v.denominator());
    }
  }
  t.unit = k - 1;
  t.bottom = 0;
  return FiniteQuantale::build(t);
}

}  // namespace qlab
