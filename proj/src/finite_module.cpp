#include "qlab/finite_module.hpp"

#include <algorithm>
#include <functional>

#include "qlab/error.hpp"

namespace qlab {

namespace {

// Module operations straight from unvalidated tables; residuals by exhaustion.
struct RawModule {
  const FiniteQuantale& q;
  const ModuleTables& t;
  int n = 0;
  Elem top = 0;
  Table meet_t, under_t, over_t;

  RawModule(const FiniteQuantale& quantale, const ModuleTables& tables) : q(quantale), t(tables) {
    n = static_cast<int>(t.join.size());
    if (n == 0) throw Error(ErrorCode::InvalidAlgebra, "empty module carrier");
    require_square_table(t.join, n, "module join");
    if (static_cast<int>(t.action.size()) != q.size()) {
      throw Error(ErrorCode::InvalidAlgebra, "action table needs one row per scalar");
    }
    for (const auto& row : t.action) {
      if (static_cast<int>(row.size()) != n) throw Error(ErrorCode::InvalidAlgebra, "action row has wrong length");
      for (Elem v : row)
        if (v < 0 || v >= n) throw Error(ErrorCode::InvalidAlgebra, "action entry out of range");
    }
    if (t.bottom < 0 || t.bottom >= n) throw Error(ErrorCode::InvalidAlgebra, "module bottom out of range");
    top = t.bottom;
    for (Elem x = 0; x < n; ++x) top = join(top, x);
    meet_t.assign(n, std::vector<Elem>(n, t.bottom));
    over_t.assign(n, std::vector<Elem>(n, q.bottom()));
    under_t.assign(q.size(), std::vector<Elem>(n, t.bottom));
    for (Elem a = 0; a < n; ++a)
      for (Elem b = 0; b < n; ++b) {
        for (Elem z = 0; z < n; ++z)
          if (leq(z, a) && leq(z, b)) meet_t[a][b] = join(meet_t[a][b], z);
        for (Elem s = 0; s < q.size(); ++s)
          if (leq(act(s, b), a)) over_t[a][b] = q.join(over_t[a][b], s);
      }
    for (Elem s = 0; s < q.size(); ++s)
      for (Elem a = 0; a < n; ++a)
        for (Elem z = 0; z < n; ++z)
          if (leq(act(s, z), a)) under_t[s][a] = join(under_t[s][a], z);
  }

  Elem join(Elem a, Elem b) const { return t.join[a][b]; }
  Elem meet(Elem a, Elem b) const { return meet_t[a][b]; }
  bool leq(Elem a, Elem b) const { return join(a, b) == b; }
  Elem act(Elem s, Elem x) const { return t.action[s][x]; }
  Elem under(Elem s, Elem x) const { return under_t[s][x]; }
  Elem over(Elem x, Elem y) const { return over_t[x][y]; }
};

std::vector<Elem> iota(int n) {
  std::vector<Elem> v(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) v[i] = i;
  return v;
}

std::string label_of(const ModuleTables& t, Elem x) {
  if (x >= 0 && static_cast<std::size_t>(x) < t.labels.size()) return t.labels[x];
  return std::to_string(x);
}

[[noreturn]] void throw_first_failure(const LawReport& r, ErrorCode code, const std::string& what) {
  for (const auto& res : r.results()) {
    if (!res.passed) {
      throw Error(code, what + " violates " + res.law +
                            (res.counterexample.empty() ? "" : " at " + res.counterexample));
    }
  }
  throw Error(code, what + " is invalid");
}

}  // namespace

LawReport check_module_laws(const FiniteQuantale& q, const ModuleTables& tables) {
  LawReport r = FiniteLattice::check_join_table(tables.join);
  const RawModule m(q, tables);
  const int nq = q.size(), n = m.n;
  const Elem bq = q.bottom(), tq = q.top(), e = q.unit(), bm = tables.bottom, tm = m.top;
  auto S = [&](Elem s) { return q.format(s); };
  auto M = [&](Elem x) { return label_of(tables, x); };

  const auto bottom_neutral = r.declare("module bottom is join-neutral");
  const auto m1 = r.declare("M1 (q1 q2) * m = q1 * (q2 * m)");
  const auto m2i = r.declare("M2(i) q * (m v n) = q*m v q*n, q * bottom = bottom");
  const auto m2ii = r.declare("M2(ii) (q1 v q2) * m = q1*m v q2*m, bottom * m = bottom");
  const auto m3 = r.declare("M3 e * m = m");
  const auto b1 = r.declare("(i) action is monotone");
  const auto b2 = r.declare("(ii) residuals preserve numerator meets, turn denominator joins into meets");
  const auto b3 = r.declare("(iii) (m /* n) * n <= m");
  const auto b4 = r.declare("(iv) q * (q *\\ m) <= m");
  const auto b5 = r.declare("(v) m <= q *\\ (q * m)");
  const auto b6 = r.declare("(vi) (q *\\ m) /* n = q \\ (m /* n)");
  const auto b7 = r.declare("(vii) ((m /* n) * n) /* n = m /* n");
  const auto b8 = r.declare("(viii) e <= m /* m");
  const auto b9 = r.declare("(ix) (m /* m) * m = m");

  for (Elem x = 0; x < n; ++x) {
    auto w = [&] { return "m=" + M(x); };
    r.record(bottom_neutral, m.join(bm, x) == x, w);
    r.record(m3, m.act(e, x) == x, w);
    r.record(m2ii, m.act(bq, x) == bm, w);
    // empty families: m /* bottom = top, top /* m = top, bottom *\ m = top
    r.record(b2, m.over(x, bm) == tq && m.over(tm, x) == tq && m.under(bq, x) == tm, w);
    r.record(b8, q.leq(e, m.over(x, x)), w);
    r.record(b9, m.act(m.over(x, x), x) == x, w);
  }
  for (Elem s = 0; s < nq; ++s) {
    auto w = [&] { return "q=" + S(s); };
    r.record(m2i, m.act(s, bm) == bm, w);
    r.record(b2, m.under(s, tm) == tm, w);
  }
  for (Elem x = 0; x < n; ++x)
    for (Elem y = 0; y < n; ++y) {
      auto w = [&] { return "m=" + M(x) + ", n=" + M(y); };
      const Elem xy = m.over(x, y);
      r.record(b3, m.leq(m.act(xy, y), x), w);
      r.record(b7, m.over(m.act(xy, y), y) == xy, w);
      for (Elem z = 0; z < n; ++z) {
        auto w3 = [&] { return "m=" + M(x) + ", n=" + M(y) + ", p=" + M(z); };
        r.record(b2,
                 m.over(m.meet(x, y), z) == q.meet(m.over(x, z), m.over(y, z)) &&
                     m.over(z, m.join(x, y)) == q.meet(m.over(z, x), m.over(z, y)),
                 w3);
      }
    }
  for (Elem s = 0; s < nq; ++s)
    for (Elem x = 0; x < n; ++x) {
      auto w = [&] { return "q=" + S(s) + ", m=" + M(x); };
      r.record(b4, m.leq(m.act(s, m.under(s, x)), x), w);
      r.record(b5, m.leq(x, m.under(s, m.act(s, x))), w);
      for (Elem y = 0; y < n; ++y) {
        auto w3 = [&] { return "q=" + S(s) + ", m=" + M(x) + ", n=" + M(y); };
        r.record(m2i, m.act(s, m.join(x, y)) == m.join(m.act(s, x), m.act(s, y)), w3);
        if (m.leq(x, y)) r.record(b1, m.leq(m.act(s, x), m.act(s, y)), w3);
        r.record(b2, m.under(s, m.meet(x, y)) == m.meet(m.under(s, x), m.under(s, y)), w3);
        r.record(b6, m.over(m.under(s, x), y) == q.under(s, m.over(x, y)), w3);
      }
      for (Elem t = 0; t < nq; ++t) {
        auto w3 = [&] { return "q1=" + S(s) + ", q2=" + S(t) + ", m=" + M(x); };
        r.record(m1, m.act(q.mul(s, t), x) == m.act(s, m.act(t, x)), w3);
        r.record(m2ii, m.act(q.join(s, t), x) == m.join(m.act(s, x), m.act(t, x)), w3);
        if (q.leq(s, t)) r.record(b1, m.leq(m.act(s, x), m.act(t, x)), w3);
        r.record(b2, m.under(q.join(s, t), x) == m.meet(m.under(s, x), m.under(t, x)), w3);
      }
    }
  return r;
}

LawReport check_module_laws(const FiniteModule& m) { return check_module_laws(m.quantale(), m.tables()); }

FiniteModule FiniteModule::build(const FiniteQuantale& q, const ModuleTables& tables) {
  const LawReport report = check_module_laws(q, tables);
  if (!report.all_passed()) throw_first_failure(report, ErrorCode::InvalidAlgebra, "module tables");
  const RawModule raw(q, tables);
  auto d = std::make_shared<Data>(Data{q, tables, FiniteLattice::from_join_table(tables.join), raw.under_t,
                                       raw.over_t});
  if (d->lattice.bottom() != tables.bottom) {
    throw Error(ErrorCode::InvalidAlgebra, "declared bottom is not the least element");
  }
  return FiniteModule(std::move(d));
}

FiniteModule FiniteModule::self(const FiniteQuantale& q) {
  ModuleTables t;
  t.join = q.lattice().join_table();
  t.action = q.tables().product;
  t.bottom = q.bottom();
  for (Elem x = 0; x < q.size(); ++x) t.labels.push_back(q.format(x));
  return build(q, t);
}

FiniteModule FiniteModule::free(const FiniteQuantale& q, int k) {
  if (k < 1) throw Error(ErrorCode::InvalidArgument, "free module needs at least one generator");
  long long total = 1;
  for (int i = 0; i < k; ++i) {
    total *= q.size();
    if (total > 4096) throw Error(ErrorCode::SizeBound, "free module carrier exceeds 4096 elements");
  }
  const int n = static_cast<int>(total), base = q.size();
  auto digits = [&](Elem x) {
    std::vector<Elem> d(k);
    for (int i = k - 1; i >= 0; --i) {
      d[i] = x % base;
      x /= base;
    }
    return d;
  };
  auto encode = [&](const std::vector<Elem>& d) {
    Elem x = 0;
    for (Elem v : d) x = x * base + v;
    return x;
  };
  ModuleTables t;
  t.join.assign(n, std::vector<Elem>(n));
  t.action.assign(base, std::vector<Elem>(n));
  for (Elem a = 0; a < n; ++a) {
    const auto da = digits(a);
    std::string lab = "(";
    for (int i = 0; i < k; ++i) lab += (i ? "," : "") + q.format(da[i]);
    t.labels.push_back(lab + ")");
    for (Elem b = 0; b < n; ++b) {
      auto db = digits(b);
      for (int i = 0; i < k; ++i) db[i] = q.join(da[i], db[i]);
      t.join[a][b] = encode(db);
    }
    for (Elem s = 0; s < base; ++s) {
      auto ds = da;
      for (auto& v : ds) v = q.mul(s, v);
      t.action[s][a] = encode(ds);
    }
  }
  t.bottom = encode(std::vector<Elem>(k, q.bottom()));
  return build(q, t);
}

std::string FiniteModule::format(Elem m) const { return label_of(d_->tables, m); }

std::vector<Elem> FiniteModule::carrier() const { return iota(size()); }

ModuleResiduals module_residuals(const FiniteModule& m) {
  ModuleResiduals r;
  r.under.assign(m.quantale().size(), std::vector<Elem>(m.size()));
  r.over.assign(m.size(), std::vector<Elem>(m.size()));
  for (Elem s = 0; s < m.quantale().size(); ++s)
    for (Elem x = 0; x < m.size(); ++x) r.under[s][x] = m.under(s, x);
  for (Elem x = 0; x < m.size(); ++x)
    for (Elem y = 0; y < m.size(); ++y) r.over[x][y] = m.over(x, y);
  return r;
}

std::vector<Elem> submodule_generated(const FiniteModule& m, std::span<const Elem> s) {
  std::vector<char> in(m.size(), 0);
  in[m.bottom()] = 1;
  for (Elem x : s) {
    if (x < 0 || x >= m.size()) throw Error(ErrorCode::IndexOut, "generator outside the carrier");
    in[x] = 1;
  }
  for (bool grew = true; grew;) {
    grew = false;
    for (Elem a = 0; a < m.size(); ++a) {
      if (!in[a]) continue;
      for (Elem q = 0; q < m.quantale().size(); ++q) {
        const Elem qa = m.act(q, a);
        if (!in[qa]) in[qa] = 1, grew = true;
      }
      for (Elem b = 0; b < m.size(); ++b) {
        if (!in[b]) continue;
        const Elem ab = m.join(a, b);
        if (!in[ab]) in[ab] = 1, grew = true;
      }
    }
  }
  std::vector<Elem> out;
  for (Elem x = 0; x < m.size(); ++x)
    if (in[x]) out.push_back(x);
  return out;
}

bool cyclic_generator_check(const FiniteModule& m, Elem v) {
  for (Elem x = 0; x < m.size(); ++x)
    if (m.act(m.over(x, v), v) != x) return false;
  return true;
}

std::vector<Elem> ideal_elements(const FiniteModule& m) {
  std::vector<Elem> out;
  const Elem top = m.quantale().top();
  for (Elem x = 0; x < m.size(); ++x)
    if (m.act(top, x) == x) out.push_back(x);
  return out;
}

Elem ideal_closure(const FiniteModule& m, std::span<const Elem> s) {
  return m.act(m.quantale().top(), m.join_all(s));
}

std::vector<Elem> down_set(const FiniteModule& m, Elem x) {
  std::vector<Elem> out;
  for (Elem y = 0; y < m.size(); ++y)
    if (m.leq(y, x)) out.push_back(y);
  return out;
}

LawReport check_ideal(const FiniteModule& m, std::span<const Elem> subset) {
  std::vector<char> in(m.size(), 0);
  for (Elem x : subset) in[x] = 1;
  LawReport r;
  // finite carrier: pairwise joins plus the empty join cover every family
  r.record("ideal (i) closed under joins", in[m.bottom()], [] { return std::string("empty family"); });
  for (Elem x : subset) {
    for (Elem y : subset)
      r.record("ideal (i) closed under joins", in[m.join(x, y)],
               [&] { return "x=" + m.format(x) + ", y=" + m.format(y); });
    for (Elem y = 0; y < m.size(); ++y)
      if (m.leq(y, x))
        r.record("ideal (ii) downward closed", in[y], [&] { return "x=" + m.format(x) + ", y=" + m.format(y); });
    for (Elem q = 0; q < m.quantale().size(); ++q)
      r.record("ideal (iii) closed under the action", in[m.act(q, x)],
               [&] { return "q=" + m.quantale().format(q) + ", x=" + m.format(x); });
  }
  return r;
}

int Congruence::class_count() const {
  int c = 0;
  for (int v : class_of) c = std::max(c, v + 1);
  return c;
}

std::vector<std::vector<Elem>> Congruence::classes() const {
  std::vector<std::vector<Elem>> out(class_count());
  for (Elem x = 0; x < static_cast<Elem>(class_of.size()); ++x) out[class_of[x]].push_back(x);
  return out;
}

bool Congruence::refines(const Congruence& other) const {
  for (std::size_t x = 0; x < class_of.size(); ++x)
    for (std::size_t y = x + 1; y < class_of.size(); ++y)
      if (class_of[x] == class_of[y] && other.class_of[x] != other.class_of[y]) return false;
  return true;
}

Congruence Congruence::from_labels(std::span<const int> labels) {
  Congruence c;
  std::vector<std::pair<int, int>> seen;  // label -> class number
  for (int l : labels) {
    auto it = std::find_if(seen.begin(), seen.end(), [&](const auto& p) { return p.first == l; });
    if (it == seen.end()) {
      seen.emplace_back(l, static_cast<int>(seen.size()));
      c.class_of.push_back(static_cast<int>(seen.size()) - 1);
    } else {
      c.class_of.push_back(it->second);
    }
  }
  return c;
}

bool is_congruence(const FiniteModule& m, const Congruence& c) {
  if (static_cast<int>(c.class_of.size()) != m.size()) throw Error(ErrorCode::DimMismatch, "partition size");
  // an equivalence compatible with binary joins and every scalar section
  for (Elem x = 0; x < m.size(); ++x)
    for (Elem y = x + 1; y < m.size(); ++y) {
      if (!c.related(x, y)) continue;
      for (Elem z = 0; z < m.size(); ++z)
        if (!c.related(m.join(x, z), m.join(y, z))) return false;
      for (Elem q = 0; q < m.quantale().size(); ++q)
        if (!c.related(m.act(q, x), m.act(q, y))) return false;
    }
  return true;
}

std::vector<Congruence> enumerate_congruences(const FiniteModule& m, int max_size) {
  const int n = m.size();
  if (n > max_size) {
    throw Error(ErrorCode::SizeBound, "congruence enumeration limited to " + std::to_string(max_size) + " elements");
  }
  std::vector<Congruence> out;
  Congruence c;
  c.class_of.assign(n, 0);
  // restricted growth strings enumerate each set partition once
  std::function<void(int, int)> rec = [&](int i, int used) {
    if (i == n) {
      if (is_congruence(m, c)) out.push_back(c);
      return;
    }
    for (int k = 0; k <= used; ++k) {
      c.class_of[i] = k;
      rec(i + 1, std::max(used, k + 1));
    }
  };
  rec(0, 0);
  return out;
}

IdealCongruence congruence_of_ideal(const FiniteModule& m, Elem ideal_element, int certify_up_to) {
  if (ideal_element < 0 || ideal_element >= m.size()) throw Error(ErrorCode::IndexOut, "ideal element out of range");
  if (m.act(m.quantale().top(), ideal_element) != ideal_element) {
    throw Error(ErrorCode::InvalidArgument, m.format(ideal_element) + " is not an ideal element");
  }
  IdealCongruence out;
  out.q.resize(m.size());
  for (Elem x = 0; x < m.size(); ++x) out.q[x] = m.over(ideal_element, x);
  out.congruence = Congruence::from_labels(out.q);
  if (m.size() <= certify_up_to) {
    bool maximal = true;
    for (const auto& c : enumerate_congruences(m, certify_up_to)) {
      bool bottom_class_is_ideal = true;
      for (Elem x = 0; x < m.size(); ++x)
        bottom_class_is_ideal &= c.related(x, m.bottom()) == m.leq(x, ideal_element);
      if (bottom_class_is_ideal && !c.refines(out.congruence)) maximal = false;
    }
    out.maximal = maximal;
  }
  return out;
}

LawReport nucleus_validate(const FiniteModule& m, std::span<const Elem> g) {
  if (static_cast<int>(g.size()) != m.size()) throw Error(ErrorCode::DimMismatch, "nucleus table size");
  for (Elem v : g)
    if (v < 0 || v >= m.size()) throw Error(ErrorCode::IndexOut, "nucleus value out of range");
  const auto& q = m.quantale();
  LawReport r;
  const auto ext = r.declare("extensive");
  const auto mono = r.declare("monotone");
  const auto idem = r.declare("idempotent");
  const auto sa = r.declare("(a) structural q * g(m) <= g(q * m)");
  const auto sb = r.declare("(b) g(q * g(m)) = g(q * m)");
  const auto sc = r.declare("(c) g(m) /* n = g(m) /* g(n)");
  const auto sd = r.declare("(d) g(q *\\ m) <= q *\\ g(m)");
  const auto se = r.declare("(e) q *\\ g(m) is g-fixed");
  const auto agree = r.declare("structurality conditions agree");
  for (Elem x = 0; x < m.size(); ++x) {
    auto w = [&] { return "m=" + m.format(x); };
    r.record(ext, m.leq(x, g[x]), w);
    r.record(idem, g[g[x]] == g[x], w);
    for (Elem y = 0; y < m.size(); ++y) {
      auto w2 = [&] { return "m=" + m.format(x) + ", n=" + m.format(y); };
      if (m.leq(x, y)) r.record(mono, m.leq(g[x], g[y]), w2);
      r.record(sc, m.over(g[x], y) == m.over(g[x], g[y]), w2);
    }
    for (Elem s = 0; s < q.size(); ++s) {
      auto w2 = [&] { return "q=" + q.format(s) + ", m=" + m.format(x); };
      r.record(sa, m.leq(m.act(s, g[x]), g[m.act(s, x)]), w2);
      r.record(sb, g[m.act(s, g[x])] == g[m.act(s, x)], w2);
      r.record(sd, m.leq(g[m.under(s, x)], m.under(s, g[x])), w2);
      const Elem u = m.under(s, g[x]);
      r.record(se, g[u] == u, w2);
    }
  }
  // the five conditions are equivalent for closure operators only
  const auto& res = r.results();
  const bool closure = res[ext].passed && res[mono].passed && res[idem].passed;
  if (closure) {
    const bool a = res[sa].passed;
    const bool all_same = res[sb].passed == a && res[sc].passed == a && res[sd].passed == a && res[se].passed == a;
    r.record(agree, all_same, [&] {
      std::string s = "a=" + std::to_string(a);
      for (auto [id, name] : {std::pair{sb, "b"}, {sc, "c"}, {sd, "d"}, {se, "e"}})
        s += std::string(", ") + name + "=" + std::to_string(res[id].passed);
      return s;
    });
  }
  return r;
}

Nucleus Nucleus::make(const FiniteModule& m, std::vector<Elem> gamma) {
  const LawReport r = nucleus_validate(m, gamma);
  if (!r.all_passed()) throw_first_failure(r, ErrorCode::InvalidAlgebra, "nucleus");
  return Nucleus(std::move(gamma));
}

std::vector<Elem> Nucleus::fixed_points() const {
  std::vector<Elem> out;
  for (Elem x = 0; x < static_cast<Elem>(gamma_.size()); ++x)
    if (gamma_[x] == x) out.push_back(x);
  return out;
}

DerivedModule quotient_module(const FiniteModule& m, const Nucleus& gamma) {
  if (static_cast<int>(gamma.table().size()) != m.size()) throw Error(ErrorCode::DimMismatch, "nucleus table size");
  const auto fixed = gamma.fixed_points();
  const int k = static_cast<int>(fixed.size());
  std::vector<Elem> index(m.size(), -1);
  for (int i = 0; i < k; ++i) index[fixed[i]] = i;
  ModuleTables t;
  t.join.assign(k, std::vector<Elem>(k));
  t.action.assign(m.quantale().size(), std::vector<Elem>(k));
  for (int i = 0; i < k; ++i) {
    t.labels.push_back(m.format(fixed[i]));
    for (int j = 0; j < k; ++j) t.join[i][j] = index[gamma(m.join(fixed[i], fixed[j]))];
    for (Elem s = 0; s < m.quantale().size(); ++s) t.action[s][i] = index[gamma(m.act(s, fixed[i]))];
  }
  t.bottom = index[gamma(m.bottom())];
  std::vector<Elem> project(m.size());
  for (Elem x = 0; x < m.size(); ++x) project[x] = index[gamma(x)];
  return DerivedModule{FiniteModule::build(m.quantale(), t), fixed, std::move(project)};
}

std::vector<Elem> nucleus_from_hom(const FiniteModule& m, const FiniteModule& n, std::span<const Elem> f) {
  if (static_cast<int>(f.size()) != m.size()) throw Error(ErrorCode::DimMismatch, "homomorphism table size");
  for (Elem v : f)
    if (v < 0 || v >= n.size()) throw Error(ErrorCode::IndexOut, "homomorphism value out of range");
  if (m.quantale().size() != n.quantale().size()) {
    throw Error(ErrorCode::NotAHomomorphism, "modules are over different quantales");
  }
  if (f[m.bottom()] != n.bottom()) throw Error(ErrorCode::NotAHomomorphism, "bottom is not preserved");
  for (Elem x = 0; x < m.size(); ++x) {
    for (Elem y = 0; y < m.size(); ++y)
      if (f[m.join(x, y)] != n.join(f[x], f[y])) {
        throw Error(ErrorCode::NotAHomomorphism, "join of " + m.format(x) + " and " + m.format(y) + " not preserved");
      }
    for (Elem s = 0; s < m.quantale().size(); ++s)
      if (f[m.act(s, x)] != n.act(s, f[x])) {
        throw Error(ErrorCode::NotAHomomorphism, "action on " + m.format(x) + " not preserved");
      }
  }
  std::vector<Elem> gamma(m.size());
  for (Elem x = 0; x < m.size(); ++x) {
    Elem acc = m.bottom();
    for (Elem z = 0; z < m.size(); ++z)
      if (n.leq(f[z], f[x])) acc = m.join(acc, z);
    gamma[x] = acc;
  }
  return gamma;
}

DerivedModule interval_module(const FiniteModule& m, Elem x) {
  if (x < 0 || x >= m.size()) throw Error(ErrorCode::IndexOut, "interval base out of range");
  // q *_x (r *_x n) = x v q*x v qr*n, so M1 needs q * x <= x for every q
  if (m.act(m.quantale().top(), x) != x) {
    throw Error(ErrorCode::InvalidArgument, "interval base " + m.format(x) + " is not an ideal element (top * x != x)");
  }
  std::vector<Elem> up;
  for (Elem y = 0; y < m.size(); ++y)
    if (m.leq(x, y)) up.push_back(y);
  const int k = static_cast<int>(up.size());
  std::vector<Elem> index(m.size(), -1);
  for (int i = 0; i < k; ++i) index[up[i]] = i;
  ModuleTables t;
  t.join.assign(k, std::vector<Elem>(k));
  t.action.assign(m.quantale().size(), std::vector<Elem>(k));
  for (int i = 0; i < k; ++i) {
    t.labels.push_back(m.format(up[i]));
    for (int j = 0; j < k; ++j) t.join[i][j] = index[m.join(up[i], up[j])];
    for (Elem s = 0; s < m.quantale().size(); ++s) t.action[s][i] = index[m.join(x, m.act(s, up[i]))];
  }
  t.bottom = index[x];
  return DerivedModule{FiniteModule::build(m.quantale(), t), std::move(up), {}};
}

}  // namespace qlab
