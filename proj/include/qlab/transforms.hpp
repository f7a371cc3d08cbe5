#pragma once

#include <algorithm>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "qlab/error.hpp"
#include "qlab/law_report.hpp"
#include "qlab/quantale.hpp"

namespace qlab {

/// Left modules use H f(y) = V_x f(x) p(x,y) and L g(x) = /\_y g(y) / p(x,y);
/// right modules use p(x,y) f(x) and p(x,y) \ g(y).
enum class Handedness { Left, Right };

template <QuantaleOps Q>
using FreeVector = std::vector<typename Q::value_type>;

/// p in Q^(X x Y), row-major: entry (x, y) at x * cols + y. `embedding`
/// optionally identifies Y with a subset of X (y -> x, injective).
template <QuantaleOps Q>
struct Kernel {
  using V = typename Q::value_type;

  Q q;
  int rows = 0;  // |X|
  int cols = 0;  // |Y|
  std::vector<V> p;
  std::optional<std::vector<int>> embedding;

  Kernel(Q quantale, int x, int y, std::vector<V> values, std::optional<std::vector<int>> embed = std::nullopt)
      : q(std::move(quantale)), rows(x), cols(y), p(std::move(values)), embedding(std::move(embed)) {
    if (rows < 1 || cols < 1) throw Error(ErrorCode::InvalidArgument, "kernel index sets must be non-empty");
    if (p.size() != static_cast<std::size_t>(rows) * cols) {
      throw Error(ErrorCode::DimMismatch, "kernel has " + std::to_string(p.size()) + " entries, expected " +
                                              std::to_string(rows * cols));
    }
    if (embedding) {
      if (static_cast<int>(embedding->size()) != cols) throw Error(ErrorCode::DimMismatch, "embedding size");
      std::vector<char> used(rows, 0);
      for (int x : *embedding) {
        if (x < 0 || x >= rows) throw Error(ErrorCode::SubsetViolation, "embedding leaves X");
        if (used[x]) throw Error(ErrorCode::SubsetViolation, "embedding is not injective");
        used[x] = 1;
      }
    }
  }

  const V& operator()(int x, int y) const { return p[static_cast<std::size_t>(x) * cols + y]; }
  V& operator()(int x, int y) { return p[static_cast<std::size_t>(x) * cols + y]; }

  /// pi_Y for Y embedded in X by `embed`: e at (embed[y], y), bottom elsewhere.
  static Kernel projective(const Q& q, int x, std::vector<int> embed) {
    const int y = static_cast<int>(embed.size());
    std::vector<V> v(static_cast<std::size_t>(x) * y, q.bottom());
    for (int j = 0; j < y; ++j) {
      if (embed[j] < 0 || embed[j] >= x) throw Error(ErrorCode::SubsetViolation, "embedding leaves X");
      v[static_cast<std::size_t>(embed[j]) * y + j] = q.unit();
    }
    return Kernel(q, x, y, std::move(v), std::move(embed));
  }

  friend bool operator==(const Kernel& a, const Kernel& b) {
    if (a.rows != b.rows || a.cols != b.cols) return false;
    for (std::size_t i = 0; i < a.p.size(); ++i)
      if (!a.q.equal(a.p[i], b.p[i])) return false;
    return true;
  }
};

template <QuantaleOps Q>
FreeVector<Q> transform_apply(const Kernel<Q>& k, std::span<const typename Q::value_type> f,
                              Handedness hand = Handedness::Left) {
  if (static_cast<int>(f.size()) != k.rows) {
    throw Error(ErrorCode::IndexMismatch, "vector has length " + std::to_string(f.size()) + ", kernel expects " +
                                              std::to_string(k.rows));
  }
  const Q& q = k.q;
  FreeVector<Q> out(k.cols, q.bottom());
  for (int y = 0; y < k.cols; ++y) {
    auto acc = q.bottom();
    for (int x = 0; x < k.rows; ++x)
      acc = q.join(acc, hand == Handedness::Left ? q.mul(f[x], k(x, y)) : q.mul(k(x, y), f[x]));
    out[y] = acc;
  }
  return out;
}

template <QuantaleOps Q>
FreeVector<Q> inverse_apply(const Kernel<Q>& k, std::span<const typename Q::value_type> g,
                            Handedness hand = Handedness::Left) {
  if (static_cast<int>(g.size()) != k.cols) {
    throw Error(ErrorCode::IndexMismatch, "vector has length " + std::to_string(g.size()) + ", kernel expects " +
                                              std::to_string(k.cols));
  }
  const Q& q = k.q;
  FreeVector<Q> out(k.rows, q.top());
  for (int x = 0; x < k.rows; ++x) {
    auto acc = q.top();
    for (int y = 0; y < k.cols; ++y)
      acc = q.meet(acc, hand == Handedness::Left ? q.over(g[y], k(x, y)) : q.under(k(x, y), g[y]));
    out[x] = acc;
  }
  return out;
}

template <QuantaleOps Q>
bool vector_leq(const Q& q, std::span<const typename Q::value_type> a, std::span<const typename Q::value_type> b) {
  if (a.size() != b.size()) throw Error(ErrorCode::IndexMismatch, "vector lengths differ");
  for (std::size_t i = 0; i < a.size(); ++i)
    if (!q.leq(a[i], b[i])) return false;
  return true;
}

template <QuantaleOps Q>
bool vector_equal(const Q& q, std::span<const typename Q::value_type> a, std::span<const typename Q::value_type> b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (!q.equal(a[i], b[i])) return false;
  return true;
}

struct CoderClass {
  bool coder = false;
  bool normal = false;
  bool strong = false;
  bool orthogonal = false;
  bool orthonormal = false;
  /// Witness for the strongest of strong / normal / coder that holds.
  std::optional<std::vector<int>> epsilon;
};

namespace detail {

// Injective y -> x with allowed(x, y) for every y, or nullopt. Tries the
// stored embedding first, then augmenting-path bipartite matching.
template <class Allowed>
std::optional<std::vector<int>> find_injection(int rows, int cols, const std::optional<std::vector<int>>& preferred,
                                               Allowed&& allowed) {
  if (preferred) {
    bool ok = true;
    for (int y = 0; y < cols && ok; ++y) ok = allowed((*preferred)[y], y);
    if (ok) return preferred;
  }
  if (cols > rows) return std::nullopt;
  std::vector<int> match_x(rows, -1), eps(cols, -1);
  std::function<bool(int, std::vector<char>&)> augment = [&](int y, std::vector<char>& seen) {
    for (int x = 0; x < rows; ++x) {
      if (seen[x] || !allowed(x, y)) continue;
      seen[x] = 1;
      if (match_x[x] < 0 || augment(match_x[x], seen)) {
        match_x[x] = y;
        eps[y] = x;
        return true;
      }
    }
    return false;
  };
  for (int y = 0; y < cols; ++y) {
    std::vector<char> seen(rows, 0);
    if (!augment(y, seen)) return std::nullopt;
  }
  return eps;
}

}  // namespace detail

template <QuantaleOps Q>
CoderClass classify_coder(const Kernel<Q>& k) {
  const Q& q = k.q;
  const auto e = q.unit(), bot = q.bottom();
  CoderClass c;
  const auto coder_eps =
      detail::find_injection(k.rows, k.cols, k.embedding, [&](int x, int y) { return q.leq(e, k(x, y)); });
  const auto normal_eps =
      detail::find_injection(k.rows, k.cols, k.embedding, [&](int x, int y) { return q.equal(k(x, y), e); });
  const auto strong_eps = detail::find_injection(k.rows, k.cols, k.embedding, [&](int x, int y) {
    if (!q.equal(k(x, y), e)) return false;
    for (int y2 = 0; y2 < k.cols; ++y2)
      if (y2 != y && !q.equal(k(x, y2), bot)) return false;
    return true;
  });
  c.coder = coder_eps.has_value();
  c.normal = normal_eps.has_value();
  c.strong = strong_eps.has_value();
  c.orthogonal = true;
  for (int x = 0; x < k.rows && c.orthogonal; ++x)
    for (int y1 = 0; y1 < k.cols && c.orthogonal; ++y1)
      for (int y2 = 0; y2 < k.cols && c.orthogonal; ++y2)
        if (y1 != y2) c.orthogonal = q.equal(q.mul(k(x, y1), k(x, y2)), bot);
  c.orthonormal = c.orthogonal && c.normal;
  c.epsilon = c.strong ? strong_eps : c.normal ? normal_eps : coder_eps;
  // orthonormal => strong => normal => coder
  if ((c.orthonormal && !c.strong) || (c.strong && !c.normal) || (c.normal && !c.coder)) {
    throw Error(ErrorCode::InvalidAlgebra, "coder flag implications violated; the quantale tables are inconsistent");
  }
  return c;
}

/// chi_x: e at x, bottom elsewhere.
template <QuantaleOps Q>
FreeVector<Q> basis_vector(const Q& q, int size, int x) {
  FreeVector<Q> v(size, q.bottom());
  v[x] = q.unit();
  return v;
}

template <QuantaleOps Q>
using VectorMap = std::function<FreeVector<Q>(const FreeVector<Q>&)>;

/// Kernel k(x, y) = h(chi_x)(y). The join and action laws are spot-checked on
/// the chi basis and the given scalars; NotAHomomorphism on failure.
template <QuantaleOps Q>
Kernel<Q> kernel_of_hom(const Q& q, int x_size, int y_size, const VectorMap<Q>& h,
                        std::span<const typename Q::value_type> scalars) {
  auto eval = [&](const FreeVector<Q>& f) {
    FreeVector<Q> g = h(f);
    if (static_cast<int>(g.size()) != y_size) throw Error(ErrorCode::IndexMismatch, "map returned wrong length");
    return g;
  };
  auto fail = [](const std::string& why) { throw Error(ErrorCode::NotAHomomorphism, why); };
  const FreeVector<Q> zero(x_size, q.bottom());
  if (!vector_equal<Q>(q, eval(zero), FreeVector<Q>(y_size, q.bottom()))) fail("bottom is not preserved");
  std::vector<FreeVector<Q>> images;
  for (int x = 0; x < x_size; ++x) images.push_back(eval(basis_vector(q, x_size, x)));
  for (int a = 0; a < x_size; ++a) {
    for (int b = a + 1; b < x_size; ++b) {
      FreeVector<Q> f = basis_vector(q, x_size, a);
      f[b] = q.unit();
      FreeVector<Q> expect(y_size);
      for (int y = 0; y < y_size; ++y) expect[y] = q.join(images[a][y], images[b][y]);
      if (!vector_equal<Q>(q, eval(f), expect)) fail("join of basis vectors " + std::to_string(a) + ", " +
                                                     std::to_string(b) + " is not preserved");
    }
    for (const auto& s : scalars) {
      FreeVector<Q> f(x_size, q.bottom());
      f[a] = q.mul(s, q.unit());
      FreeVector<Q> expect(y_size);
      for (int y = 0; y < y_size; ++y) expect[y] = q.mul(s, images[a][y]);
      if (!vector_equal<Q>(q, eval(f), expect)) fail("action of " + q.format(s) + " on basis vector " +
                                                     std::to_string(a) + " is not preserved");
    }
  }
  std::vector<typename Q::value_type> values;
  values.reserve(static_cast<std::size_t>(x_size) * y_size);
  for (int x = 0; x < x_size; ++x)
    for (int y = 0; y < y_size; ++y) values.push_back(images[x][y]);
  return Kernel<Q>(q, x_size, y_size, std::move(values));
}

template <QuantaleOps Q>
VectorMap<Q> hom_of_kernel(const Kernel<Q>& k) {
  return [k](const FreeVector<Q>& f) { return transform_apply<Q>(k, f); };
}

template <QuantaleOps Q>
struct CoderAnatomy {
  std::vector<int> support;  // columns y that differ from the projective pattern
  std::optional<Kernel<Q>> core;  // p restricted to the support; empty when p = pi_Y
  Kernel<Q> closure;         // extension to X x X
};

namespace detail {

template <QuantaleOps Q>
const std::vector<int>& require_embedding(const Kernel<Q>& k) {
  if (!k.embedding) throw Error(ErrorCode::SubsetViolation, "kernel has no embedding of Y in X");
  return *k.embedding;
}

template <QuantaleOps Q>
bool is_projective_column(const Kernel<Q>& k, int y) {
  const int ey = (*k.embedding)[y];
  for (int x = 0; x < k.rows; ++x)
    if (!k.q.equal(k(x, y), x == ey ? k.q.unit() : k.q.bottom())) return false;
  return true;
}

}  // namespace detail

/// Extension to Y subset Z subset X: columns for z in Z (in the given order),
/// p's column where z is the image of some y, pi otherwise.
template <QuantaleOps Q>
Kernel<Q> projective_extension(const Kernel<Q>& k, std::span<const int> z) {
  const auto& emb = detail::require_embedding(k);
  std::vector<char> in_z(k.rows, 0);
  for (int v : z) {
    if (v < 0 || v >= k.rows) throw Error(ErrorCode::SubsetViolation, "Z is not a subset of X");
    if (in_z[v]) throw Error(ErrorCode::SubsetViolation, "Z lists an element twice");
    in_z[v] = 1;
  }
  for (int x : emb)
    if (!in_z[x]) throw Error(ErrorCode::SubsetViolation, "Y is not a subset of Z");
  const int cols = static_cast<int>(z.size());
  std::vector<typename Q::value_type> values(static_cast<std::size_t>(k.rows) * cols, k.q.bottom());
  for (int j = 0; j < cols; ++j) {
    const auto it = std::find(emb.begin(), emb.end(), z[j]);
    for (int x = 0; x < k.rows; ++x) {
      values[static_cast<std::size_t>(x) * cols + j] =
          it != emb.end() ? k(x, static_cast<int>(it - emb.begin())) : (x == z[j] ? k.q.unit() : k.q.bottom());
    }
  }
  return Kernel<Q>(k.q, k.rows, cols, std::move(values), std::vector<int>(z.begin(), z.end()));
}

template <QuantaleOps Q>
CoderAnatomy<Q> coder_anatomy(const Kernel<Q>& k) {
  const auto& emb = detail::require_embedding(k);
  std::vector<int> support;
  for (int y = 0; y < k.cols; ++y)
    if (!detail::is_projective_column(k, y)) support.push_back(y);
  std::vector<int> all(k.rows);
  for (int x = 0; x < k.rows; ++x) all[x] = x;
  Kernel<Q> closure = projective_extension(k, all);
  if (support.empty()) return CoderAnatomy<Q>{support, std::nullopt, std::move(closure)};
  std::vector<typename Q::value_type> core_values;
  std::vector<int> core_embed;
  for (int x = 0; x < k.rows; ++x)
    for (int y : support) core_values.push_back(k(x, y));
  for (int y : support) core_embed.push_back(emb[y]);
  Kernel<Q> core(k.q, k.rows, static_cast<int>(support.size()), std::move(core_values), std::move(core_embed));
  return CoderAnatomy<Q>{std::move(support), std::move(core), std::move(closure)};
}

/// Same support (as subsets of X) and the same columns on it.
template <QuantaleOps Q>
bool equivalent_up_to_projections(const Kernel<Q>& a, const Kernel<Q>& b) {
  if (a.rows != b.rows) return false;
  const auto ca = coder_anatomy(a), cb = coder_anatomy(b);
  if (ca.support.size() != cb.support.size()) return false;
  if (ca.support.empty()) return true;
  // compare columns keyed by their position in X
  std::vector<std::pair<int, int>> ka, kb;  // (x index, column)
  for (std::size_t i = 0; i < ca.support.size(); ++i) ka.emplace_back((*a.embedding)[ca.support[i]], ca.support[i]);
  for (std::size_t i = 0; i < cb.support.size(); ++i) kb.emplace_back((*b.embedding)[cb.support[i]], cb.support[i]);
  std::sort(ka.begin(), ka.end());
  std::sort(kb.begin(), kb.end());
  for (std::size_t i = 0; i < ka.size(); ++i) {
    if (ka[i].first != kb[i].first) return false;
    for (int x = 0; x < a.rows; ++x)
      if (!a.q.equal(a(x, ka[i].second), b(x, kb[i].second))) return false;
  }
  return true;
}

/// Adjunction on every (f, g) pair; nucleus laws of L o H on the f sample
/// (structurality against `scalars`); H o L <= id; and H o L = id when the
/// kernel classifies as strong.
template <QuantaleOps Q>
LawReport adjunction_check(const Kernel<Q>& k, std::span<const FreeVector<Q>> fs, std::span<const FreeVector<Q>> gs,
                           std::span<const typename Q::value_type> scalars, Handedness hand = Handedness::Left) {
  const Q& q = k.q;
  using Vec = std::span<const typename Q::value_type>;
  auto fmt = [&](Vec v) {
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + q.format(v[i]);
    return s + ")";
  };
  LawReport r;
  const auto adj = r.declare("adjunction H f <= g iff f <= L g");
  const auto ext = r.declare("L H extensive");
  const auto mono = r.declare("L H monotone");
  const auto idem = r.declare("L H idempotent");
  const auto structural = r.declare("L H structural");
  const auto coclosure = r.declare("H L g <= g");
  std::optional<std::size_t> strong_id;
  if (classify_coder(k).strong) strong_id = r.declare("strong coder: H L = id");

  std::vector<FreeVector<Q>> hf, lhf, lg;
  for (const auto& f : fs) {
    hf.push_back(transform_apply<Q>(k, f, hand));
    lhf.push_back(inverse_apply<Q>(k, hf.back(), hand));
  }
  for (const auto& g : gs) lg.push_back(inverse_apply<Q>(k, g, hand));

  for (std::size_t i = 0; i < fs.size(); ++i) {
    const auto& f = fs[i];
    auto w = [&] { return "f=" + fmt(f); };
    r.record(ext, vector_leq<Q>(q, f, lhf[i]), w);
    const auto again = inverse_apply<Q>(k, transform_apply<Q>(k, lhf[i], hand), hand);
    r.record(idem, vector_equal<Q>(q, again, lhf[i]), w);
    for (const auto& s : scalars) {
      FreeVector<Q> sf(f.size()), s_lhf(f.size());
      for (std::size_t x = 0; x < f.size(); ++x) {
        sf[x] = hand == Handedness::Left ? q.mul(s, f[x]) : q.mul(f[x], s);
        s_lhf[x] = hand == Handedness::Left ? q.mul(s, lhf[i][x]) : q.mul(lhf[i][x], s);
      }
      const auto lh_sf = inverse_apply<Q>(k, transform_apply<Q>(k, sf, hand), hand);
      r.record(structural, vector_leq<Q>(q, s_lhf, lh_sf), [&] { return w() + ", q=" + q.format(s); });
    }
    for (std::size_t j = 0; j < fs.size(); ++j)
      if (vector_leq<Q>(q, f, fs[j]))
        r.record(mono, vector_leq<Q>(q, lhf[i], lhf[j]), [&] { return w() + ", f'=" + fmt(fs[j]); });
    for (std::size_t j = 0; j < gs.size(); ++j) {
      r.record(adj, vector_leq<Q>(q, hf[i], gs[j]) == vector_leq<Q>(q, f, lg[j]),
               [&] { return w() + ", g=" + fmt(gs[j]); });
    }
  }
  for (std::size_t j = 0; j < gs.size(); ++j) {
    const auto hlg = transform_apply<Q>(k, lg[j], hand);
    auto w = [&] { return "g=" + fmt(gs[j]); };
    r.record(coclosure, vector_leq<Q>(q, hlg, gs[j]), w);
    if (strong_id) r.record(*strong_id, vector_equal<Q>(q, hlg, gs[j]), w);
  }
  return r;
}

}  // namespace qlab
