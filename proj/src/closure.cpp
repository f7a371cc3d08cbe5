#include "qlab/closure.hpp"

#include <algorithm>
#include <functional>
#include <string>

#include "qlab/error.hpp"

namespace qlab {

namespace {

void require_bound(const FiniteLattice& l) {
  if (l.size() > kClosureEnumerationBound) {
    throw Error(ErrorCode::SizeBound, "closure enumeration limited to " +
                                          std::to_string(kClosureEnumerationBound) + " elements");
  }
}

void require_map(const FiniteLattice& l, std::span<const Elem> g) {
  if (static_cast<int>(g.size()) != l.size()) throw Error(ErrorCode::DimMismatch, "map table size");
  for (Elem v : g)
    if (v < 0 || v >= l.size()) throw Error(ErrorCode::IndexOut, "map value out of range");
}

void require_relation(const FiniteLattice& l, const Relation& rel) {
  if (static_cast<int>(rel.size()) != l.size()) throw Error(ErrorCode::DimMismatch, "relation size");
  for (const auto& row : rel)
    if (static_cast<int>(row.size()) != l.size()) throw Error(ErrorCode::DimMismatch, "relation row size");
}

bool pointwise_leq(const FiniteLattice& l, const MapTable& a, const MapTable& b) {
  for (std::size_t x = 0; x < a.size(); ++x)
    if (!l.leq(a[x], b[x])) return false;
  return true;
}

bool subset_of(const std::vector<Elem>& a, const std::vector<Elem>& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

}  // namespace

bool is_closure_operator(const FiniteLattice& l, std::span<const Elem> g) {
  require_map(l, g);
  for (Elem x = 0; x < l.size(); ++x) {
    if (!l.leq(x, g[x]) || g[g[x]] != g[x]) return false;
    for (Elem y = 0; y < l.size(); ++y)
      if (l.leq(x, y) && !l.leq(g[x], g[y])) return false;
  }
  return true;
}

std::vector<std::vector<Elem>> meet_closed_subsets(const FiniteLattice& l) {
  require_bound(l);
  const int n = l.size();
  std::vector<std::vector<Elem>> out;
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    if (!(mask >> l.top() & 1)) continue;
    bool closed = true;
    for (Elem a = 0; a < n && closed; ++a)
      for (Elem b = 0; b < n && closed; ++b)
        if ((mask >> a & 1) && (mask >> b & 1)) closed = mask >> l.meet(a, b) & 1;
    if (!closed) continue;
    std::vector<Elem> s;
    for (Elem x = 0; x < n; ++x)
      if (mask >> x & 1) s.push_back(x);
    out.push_back(std::move(s));
  }
  return out;
}

std::vector<MapTable> closure_operators(const FiniteLattice& l) {
  require_bound(l);
  const int n = l.size();
  // assign values in a linear extension so monotonicity can be checked on
  // already-assigned predecessors
  std::vector<Elem> order(n);
  for (Elem x = 0; x < n; ++x) order[x] = x;
  auto below_count = [&](Elem x) {
    int c = 0;
    for (Elem y = 0; y < n; ++y) c += l.leq(y, x);
    return c;
  };
  std::stable_sort(order.begin(), order.end(), [&](Elem a, Elem b) { return below_count(a) < below_count(b); });
  std::vector<MapTable> out;
  MapTable g(n, -1);
  std::function<void(int)> rec = [&](int i) {
    if (i == n) {
      for (Elem x = 0; x < n; ++x)
        if (g[g[x]] != g[x]) return;
      out.push_back(g);
      return;
    }
    const Elem x = order[i];
    for (Elem v = 0; v < n; ++v) {
      if (!l.leq(x, v)) continue;
      bool ok = true;
      for (Elem y = 0; y < n && ok; ++y) {
        if (g[y] < 0) continue;
        if (l.leq(y, x)) ok = l.leq(g[y], v);
        if (l.leq(x, y)) ok = ok && l.leq(v, g[y]);
      }
      if (!ok) continue;
      g[x] = v;
      rec(i + 1);
      g[x] = -1;
    }
  };
  rec(0);
  std::sort(out.begin(), out.end());
  return out;
}

MapTable closure_of_subset(const FiniteLattice& l, std::span<const Elem> s) {
  MapTable g(l.size());
  for (Elem x = 0; x < l.size(); ++x) {
    Elem acc = l.top();
    for (Elem y : s)
      if (l.leq(x, y)) acc = l.meet(acc, y);
    g[x] = acc;
  }
  return g;
}

std::vector<Elem> closure_image(std::span<const Elem> gamma) {
  std::vector<Elem> img(gamma.begin(), gamma.end());
  std::sort(img.begin(), img.end());
  img.erase(std::unique(img.begin(), img.end()), img.end());
  return img;
}

ClosureCorrespondence closure_meetclosed_bijection(const FiniteLattice& l) {
  ClosureCorrespondence c;
  c.subsets = meet_closed_subsets(l);
  const auto ops = closure_operators(l);
  for (const auto& s : c.subsets) c.operators.push_back(closure_of_subset(l, s));

  // S -> gamma_S -> image is the identity, and gamma -> image -> gamma_image
  // is the identity on every enumerated operator; equal counts make it a
  // bijection between the two enumerations.
  bool ok = c.subsets.size() == ops.size();
  for (std::size_t i = 0; i < c.subsets.size() && ok; ++i) {
    ok = closure_image(c.operators[i]) == c.subsets[i] &&
         std::binary_search(ops.begin(), ops.end(), c.operators[i]);
  }
  for (const auto& g : ops) {
    if (!ok) break;
    const auto img = closure_image(g);
    ok = closure_of_subset(l, img) == g && std::find(c.subsets.begin(), c.subsets.end(), img) != c.subsets.end();
  }
  c.bijective = ok;

  bool rev = true;
  for (std::size_t i = 0; i < c.subsets.size() && rev; ++i)
    for (std::size_t j = 0; j < c.subsets.size() && rev; ++j)
      rev = subset_of(c.subsets[i], c.subsets[j]) == pointwise_leq(l, c.operators[j], c.operators[i]);
  c.order_reversing = rev;
  return c;
}

LawReport check_consequence_relation(const FiniteLattice& l, const Relation& rel) {
  require_relation(l, rel);
  LawReport r;
  const auto refl = r.declare("(i) y <= x implies x |- y");
  const auto trans = r.declare("(ii) transitive");
  const auto sup = r.declare("(iii) x |- join{y | x |- y}");
  const int n = l.size();
  for (Elem x = 0; x < n; ++x) {
    Elem acc = l.bottom();
    for (Elem y = 0; y < n; ++y) {
      auto w = [&] { return "x=" + std::to_string(x) + ", y=" + std::to_string(y); };
      if (l.leq(y, x)) r.record(refl, rel[x][y] != 0, w);
      if (rel[x][y]) {
        acc = l.join(acc, y);
        for (Elem z = 0; z < n; ++z)
          if (rel[y][z])
            r.record(trans, rel[x][z] != 0, [&] { return w() + ", z=" + std::to_string(z); });
      }
    }
    r.record(sup, rel[x][acc] != 0, [&] { return "x=" + std::to_string(x); });
  }
  return r;
}

Relation consequence_of_closure(const FiniteLattice& l, std::span<const Elem> gamma) {
  require_map(l, gamma);
  Relation rel(l.size(), std::vector<char>(l.size(), 0));
  for (Elem x = 0; x < l.size(); ++x)
    for (Elem y = 0; y < l.size(); ++y) rel[x][y] = l.leq(y, gamma[x]);
  return rel;
}

MapTable closure_of_consequence(const FiniteLattice& l, const Relation& rel) {
  const LawReport r = check_consequence_relation(l, rel);
  for (const auto& res : r.results())
    if (!res.passed) {
      throw Error(ErrorCode::InvalidRelation, "relation fails " + res.law +
                                                  (res.counterexample.empty() ? "" : " at " + res.counterexample));
    }
  MapTable g(l.size());
  for (Elem x = 0; x < l.size(); ++x) {
    Elem acc = l.bottom();
    for (Elem y = 0; y < l.size(); ++y)
      if (rel[x][y]) acc = l.join(acc, y);
    g[x] = acc;
  }
  return g;
}

std::vector<Elem> theories(const FiniteLattice& l, const Relation& rel) {
  require_relation(l, rel);
  std::vector<Elem> out;
  for (Elem t = 0; t < l.size(); ++t) {
    bool theory = true;
    for (Elem x = 0; x < l.size() && theory; ++x)
      if (rel[t][x]) theory = l.leq(x, t);
    if (theory) out.push_back(t);
  }
  return out;
}

bool relation_structural(const FiniteModule& m, const Relation& rel) {
  require_relation(m.lattice(), rel);
  for (Elem x = 0; x < m.size(); ++x)
    for (Elem y = 0; y < m.size(); ++y) {
      if (!rel[x][y]) continue;
      for (Elem q = 0; q < m.quantale().size(); ++q)
        if (!rel[m.act(q, x)][m.act(q, y)]) return false;
    }
  return true;
}

bool closure_structural(const FiniteModule& m, std::span<const Elem> gamma) {
  require_map(m.lattice(), gamma);
  for (Elem x = 0; x < m.size(); ++x)
    for (Elem q = 0; q < m.quantale().size(); ++q)
      if (!m.leq(m.act(q, gamma[x]), gamma[m.act(q, x)])) return false;
  return true;
}

}  // namespace qlab
