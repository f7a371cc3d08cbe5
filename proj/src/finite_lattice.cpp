#include "qlab/finite_lattice.hpp"

#include <algorithm>
#include <string>

#include "qlab/error.hpp"

namespace qlab {

void require_square_table(const Table& t, int n, const char* what) {
  if (static_cast<int>(t.size()) != n) {
    throw Error(ErrorCode::InvalidAlgebra, std::string(what) + " table must have " +
                                               std::to_string(n) + " rows");
  }
  for (const auto& row : t) {
    if (static_cast<int>(row.size()) != n) {
      throw Error(ErrorCode::InvalidAlgebra, std::string(what) + " table must be square");
    }
    for (Elem v : row) {
      if (v < 0 || v >= n) {
        throw Error(ErrorCode::InvalidAlgebra, std::string(what) + " table entry out of range");
      }
    }
  }
}

LawReport FiniteLattice::check_join_table(const Table& join) {
  const int n = static_cast<int>(join.size());
  if (n == 0) throw Error(ErrorCode::InvalidAlgebra, "empty carrier");
  require_square_table(join, n, "join");
  LawReport r;
  auto j = [&](Elem a, Elem b) { return join[a][b]; };
  for (Elem x = 0; x < n; ++x) {
    r.record("join idempotence", j(x, x) == x, [&] { return "x=" + std::to_string(x); });
    for (Elem y = 0; y < n; ++y) {
      r.record("join commutativity", j(x, y) == j(y, x),
               [&] { return "x=" + std::to_string(x) + ", y=" + std::to_string(y); });
      for (Elem z = 0; z < n; ++z) {
        r.record("join associativity", j(j(x, y), z) == j(x, j(y, z)), [&] {
          return "x=" + std::to_string(x) + ", y=" + std::to_string(y) + ", z=" + std::to_string(z);
        });
      }
    }
  }
  bool has_bottom = false;
  for (Elem b = 0; b < n && !has_bottom; ++b) {
    bool neutral = true;
    for (Elem x = 0; x < n && neutral; ++x) neutral = j(b, x) == x;
    has_bottom = neutral;
  }
  r.record("join-neutral bottom exists", has_bottom);
  return r;
}

FiniteLattice FiniteLattice::from_join_table(const Table& join) {
  const LawReport report = check_join_table(join);
  if (!report.all_passed()) {
    for (const auto& res : report.results()) {
      if (!res.passed) {
        throw Error(ErrorCode::InvalidAlgebra, "join table violates " + res.law +
                                                   (res.counterexample.empty() ? "" : " at " + res.counterexample));
      }
    }
  }
  auto d = std::make_shared<Data>();
  const int n = static_cast<int>(join.size());
  d->n = n;
  d->join.resize(static_cast<std::size_t>(n) * n);
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b) d->join[static_cast<std::size_t>(a) * n + b] = join[a][b];
  auto leq = [&](Elem a, Elem b) { return join[a][b] == b; };
  for (Elem b = 0; b < n; ++b) {
    bool neutral = true;
    for (Elem x = 0; x < n && neutral; ++x) neutral = join[b][x] == x;
    if (neutral) {
      d->bottom = b;
      break;
    }
  }
  Elem top = d->bottom;
  for (Elem x = 0; x < n; ++x) top = join[top][x];
  d->top = top;
  d->meet.resize(d->join.size());
  for (Elem a = 0; a < n; ++a) {
    for (Elem b = 0; b < n; ++b) {
      Elem m = d->bottom;
      for (Elem z = 0; z < n; ++z)
        if (leq(z, a) && leq(z, b)) m = join[m][z];
      d->meet[static_cast<std::size_t>(a) * n + b] = m;
    }
  }
  return FiniteLattice(std::move(d));
}

FiniteLattice FiniteLattice::chain(int n) {
  if (n < 1) throw Error(ErrorCode::InvalidArgument, "chain needs at least one element");
  Table t(n, std::vector<Elem>(n));
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b) t[a][b] = std::max(a, b);
  return from_join_table(t);
}

FiniteLattice FiniteLattice::boolean(int bits) {
  if (bits < 0 || bits > 4) throw Error(ErrorCode::SizeBound, "boolean lattice limited to 4 atoms");
  const int n = 1 << bits;
  Table t(n, std::vector<Elem>(n));
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b) t[a][b] = a | b;
  return from_join_table(t);
}

Elem FiniteLattice::join_all(std::span<const Elem> xs) const {
  Elem acc = bottom();
  for (Elem x : xs) acc = join(acc, x);
  return acc;
}

Elem FiniteLattice::meet_all(std::span<const Elem> xs) const {
  Elem acc = top();
  for (Elem x : xs) acc = meet(acc, x);
  return acc;
}

Table FiniteLattice::join_table() const {
  const int n = size();
  Table t(n, std::vector<Elem>(n));
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b) t[a][b] = join(a, b);
  return t;
}

}  // namespace qlab
