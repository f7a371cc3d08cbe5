#include <random>
#include <vector>

#include "doctest.h"
#include "qlab/error.hpp"
#include "qlab/finite_quantale.hpp"
#include "qlab/luk_transform.hpp"
#include "qlab/transforms.hpp"

using namespace qlab;

namespace {

using FK = Kernel<FiniteQuantale>;
using FV = FreeVector<FiniteQuantale>;

UnitValue ex(std::int64_t n, std::int64_t d) { return UnitValue::exact(n, d); }

// Identity e plus two left zeros: a x = a, b x = b for x in {a, b}.
FiniteQuantale noncommutative_quantale() {
  FiniteMonoid m{3, {{0, 1, 2}, {1, 1, 1}, {2, 2, 2}}, 0};
  return powerset_quantale(m);
}

// Every vector of length `len` over the carrier.
std::vector<FV> all_vectors(const FiniteQuantale& q, int len) {
  std::vector<FV> out;
  FV v(len, 0);
  for (;;) {
    out.push_back(v);
    int i = 0;
    while (i < len && ++v[i] == q.size()) v[i++] = 0;
    if (i == len) break;
  }
  return out;
}

FK random_kernel(const FiniteQuantale& q, int x, int y, std::mt19937& rng) {
  std::uniform_int_distribution<int> d(0, q.size() - 1);
  std::vector<Elem> v(static_cast<std::size_t>(x) * y);
  for (auto& e : v) e = d(rng);
  return FK(q, x, y, v);
}

// Direct evaluation of the transform formulas, independent of the library's loops.
FV h_oracle(const FK& k, const FV& f, Handedness hand) {
  const auto& q = k.q;
  FV out;
  for (int y = 0; y < k.cols; ++y) {
    Elem acc = q.bottom();
    for (int x = 0; x < k.rows; ++x) {
      const Elem p = k.p[static_cast<std::size_t>(x) * k.cols + y];
      acc = q.join(acc, hand == Handedness::Left ? q.mul(f[x], p) : q.mul(p, f[x]));
    }
    out.push_back(acc);
  }
  return out;
}

// Lambda g(x) as the largest f(x) compatible with H f <= g, found by search:
// componentwise join of all single-entry vectors below the adjoint.
FV lambda_oracle(const FK& k, const FV& g, Handedness hand) {
  const auto& q = k.q;
  FV out(k.rows, q.bottom());
  for (int x = 0; x < k.rows; ++x)
    for (Elem z = 0; z < q.size(); ++z) {
      bool ok = true;
      for (int y = 0; y < k.cols && ok; ++y) {
        const Elem p = k.p[static_cast<std::size_t>(x) * k.cols + y];
        ok = q.leq(hand == Handedness::Left ? q.mul(z, p) : q.mul(p, z), g[y]);
      }
      if (ok) out[x] = q.join(out[x], z);
    }
  return out;
}

std::vector<UnitValue> grid_vector(std::initializer_list<std::pair<int, int>> v) {
  std::vector<UnitValue> out;
  for (auto [n, d] : v) out.push_back(ex(n, d));
  return out;
}

}  // namespace

TEST_CASE("transform and inverse agree with direct evaluation, both hands") {
  std::mt19937 rng(7);
  for (const auto& q : {lukasiewicz_chain(3), noncommutative_quantale(), powerset_quantale(FiniteMonoid::cyclic_group(3))}) {
    for (int t = 0; t < 20; ++t) {
      const auto k = random_kernel(q, 3, 2, rng);
      for (auto hand : {Handedness::Left, Handedness::Right}) {
        for (const auto& f : all_vectors(q, 3)) CHECK(transform_apply(k, f, hand) == h_oracle(k, f, hand));
        for (const auto& g : all_vectors(q, 2)) CHECK(inverse_apply(k, g, hand) == lambda_oracle(k, g, hand));
      }
    }
  }
}

TEST_CASE("transform examples") {
  const auto q = lukasiewicz_chain(3);
  const auto k = FK(q, 3, 2, std::vector<Elem>{2, 0, 1, 1, 0, 2});
  CHECK(transform_apply(k, FV{0, 0, 0}) == FV{0, 0});
  CHECK(inverse_apply(k, FV{2, 2}) == FV{2, 2, 2});
  CHECK_THROWS_AS(transform_apply(k, FV{0, 0}), Error);
  CHECK_THROWS_AS(inverse_apply(k, FV{0, 0, 0}), Error);

  const auto pi = FK::projective(q, 3, {0, 2});
  for (const auto& f : all_vectors(q, 3)) CHECK(transform_apply(pi, f) == FV{f[0], f[2]});

  const auto c35 = build_coder(3, 5);
  const auto chi1 = std::vector<UnitValue>{UnitValue::zero(), UnitValue::one(), UnitValue::zero(), UnitValue::zero(),
                                           UnitValue::zero()};
  CHECK(luk_transform(c35, chi1) == grid_vector({{1, 2}, {1, 2}, {0, 1}}));

  const auto c24 = build_coder(2, 4);
  CHECK(luk_inverse(c24, std::vector<UnitValue>{UnitValue::one(), UnitValue::zero()}) ==
        grid_vector({{1, 1}, {2, 3}, {1, 3}, {0, 1}}));
}

TEST_CASE("coder classification") {
  const auto q = lukasiewicz_chain(3);
  const auto pi = FK::projective(q, 4, {1, 3});
  const auto cp = classify_coder(pi);
  CHECK(cp.orthonormal);
  CHECK(cp.strong);
  CHECK(cp.normal);
  CHECK(cp.coder);
  CHECK(cp.epsilon == std::vector<int>{1, 3});
  CHECK_FALSE(classify_coder(FK(q, 3, 2, std::vector<Elem>(6, 0))).coder);

  const auto c35 = build_coder(3, 5);
  CHECK(c35.coder_class.orthonormal);
  CHECK(c35.coder_class.epsilon == std::vector<int>{0, 2, 4});

  // a coder whose epsilon must be found by matching: columns need rows 1 and 0
  const auto k = FK(q, 3, 2, std::vector<Elem>{0, 2, 2, 0, 0, 0}, std::vector<int>{0, 1});
  const auto ck = classify_coder(k);
  CHECK(ck.normal);
  CHECK(ck.epsilon == std::vector<int>{1, 0});

  // flag implications over random kernels
  std::mt19937 rng(3);
  for (int t = 0; t < 500; ++t) {
    const auto c = classify_coder(random_kernel(q, 3, 2, rng));
    if (c.orthonormal) CHECK(c.strong);
    if (c.strong) CHECK(c.normal);
    if (c.normal) CHECK(c.coder);
    CHECK(c.orthonormal == (c.orthogonal && c.normal));
  }
}

TEST_CASE("kernels and homomorphisms correspond") {
  const auto q = lukasiewicz_chain(3);
  const auto scalars = q.carrier();
  const VectorMap<FiniteQuantale> id = [](const FV& f) { return f; };
  CHECK(kernel_of_hom(q, 3, 3, id, scalars) == FK::projective(q, 3, {0, 1, 2}));
  const VectorMap<FiniteQuantale> zero = [](const FV&) { return FV(2, 0); };
  CHECK(kernel_of_hom(q, 3, 2, zero, scalars) == FK(q, 3, 2, std::vector<Elem>(6, 0)));
  const VectorMap<FiniteQuantale> bad = [](const FV& f) { return FV{f[0] == 2 ? Elem{2} : Elem{0}}; };
  CHECK_THROWS_AS(kernel_of_hom(q, 2, 1, bad, scalars), Error);

  std::mt19937 rng(11);
  for (int t = 0; t < 50; ++t) {
    const auto k = random_kernel(q, 3, 2, rng);
    CHECK(kernel_of_hom(q, 3, 2, hom_of_kernel(k), scalars) == k);
  }
  const auto c35 = build_coder(3, 5);
  const TNormQuantale lq(TNormKind::lukasiewicz());
  const auto grid = lq.grid(4);
  CHECK(kernel_of_hom(lq, 5, 3, hom_of_kernel(c35.kernel), grid) == c35.kernel);
}

TEST_CASE("homomorphism and dual homomorphism laws") {
  std::mt19937 rng(5);
  for (const auto& q : {lukasiewicz_chain(3), noncommutative_quantale()}) {
    const auto fs = all_vectors(q, 2);
    for (int t = 0; t < 10; ++t) {
      const auto k = random_kernel(q, 2, 2, rng);
      for (const auto& f : fs) {
        for (const auto& f2 : fs) {
          FV j(2);
          for (int i = 0; i < 2; ++i) j[i] = q.join(f[i], f2[i]);
          const auto a = transform_apply(k, f), b = transform_apply(k, f2);
          CHECK(transform_apply(k, j) == FV{q.join(a[0], b[0]), q.join(a[1], b[1])});
        }
        for (Elem s = 0; s < q.size(); ++s) {
          const auto hf = transform_apply(k, f);
          CHECK(transform_apply(k, FV{q.mul(s, f[0]), q.mul(s, f[1])}) == FV{q.mul(s, hf[0]), q.mul(s, hf[1])});
          const auto lg = inverse_apply(k, f);
          CHECK(inverse_apply(k, FV{q.under(s, f[0]), q.under(s, f[1])}) == FV{q.under(s, lg[0]), q.under(s, lg[1])});
        }
      }
    }
  }
}

TEST_CASE("coder anatomy") {
  const auto q = lukasiewicz_chain(3);
  const auto pi = FK::projective(q, 4, {0, 2});
  const auto a = coder_anatomy(pi);
  CHECK(a.support.empty());
  CHECK_FALSE(a.core.has_value());
  CHECK(a.closure == FK::projective(q, 4, {0, 1, 2, 3}));

  const auto c35 = build_coder(3, 5);
  CHECK(coder_anatomy(c35.kernel).support == std::vector<int>{0, 1, 2});

  // column 0 follows the projective pattern at x = 0, column 1 does not
  const auto mixed = FK(q, 3, 2, std::vector<Elem>{2, 0, 0, 1, 0, 2}, std::vector<int>{0, 2});
  const auto am = coder_anatomy(mixed);
  CHECK(am.support == std::vector<int>{1});
  REQUIRE(am.core.has_value());
  CHECK(am.core->cols == 1);
  const std::vector<int> z{0, 1, 2};
  const auto ext = projective_extension(mixed, z);
  CHECK(ext(1, 1) == 2);
  CHECK(ext(1, 2) == 1);
  CHECK_THROWS_AS(projective_extension(mixed, std::vector<int>{0, 1}), Error);
  CHECK_THROWS_AS(projective_extension(mixed, std::vector<int>{0, 2, 5}), Error);

  // equivalence up to projections iff equal closures, over random embedded kernels
  std::mt19937 rng(2);
  std::uniform_int_distribution<int> d(0, 2);
  for (int t = 0; t < 300; ++t) {
    std::vector<Elem> v1(6), v2(6);
    for (auto& e : v1) e = d(rng);
    v2 = v1;
    if (t % 2) v2[d(rng) * 2 + (t / 2) % 2] = d(rng);
    const FK k1(q, 3, 2, v1, std::vector<int>{0, 2});
    const FK k2s(q, 3, 2, v2, std::vector<int>{0, 2});
    CHECK(equivalent_up_to_projections(k1, k2s) == (coder_anatomy(k1).closure == coder_anatomy(k2s).closure));
  }
}

TEST_CASE("adjunction harness") {
  const auto q = lukasiewicz_chain(3);
  const auto fs = all_vectors(q, 3), gs = all_vectors(q, 2);
  std::mt19937 rng(9);
  for (int t = 0; t < 30; ++t) {
    const auto k = random_kernel(q, 3, 2, rng);
    for (auto hand : {Handedness::Left, Handedness::Right})
      CHECK(adjunction_check<FiniteQuantale>(k, fs, gs, q.carrier(), hand).all_passed());
  }
  const auto nq = noncommutative_quantale();
  const auto nfs = all_vectors(nq, 2);
  for (int t = 0; t < 10; ++t) {
    const auto k = random_kernel(nq, 2, 2, rng);
    for (auto hand : {Handedness::Left, Handedness::Right})
      CHECK(adjunction_check<FiniteQuantale>(k, nfs, nfs, nq.carrier(), hand).all_passed());
  }
  const auto c35 = build_coder(3, 5);
  const auto g = grid_vector({{1, 5}, {9, 10}, {2, 5}});
  CHECK(luk_transform(c35, luk_inverse(c35, g)) == g);
}

TEST_CASE("Lukasiewicz basis values") {
  CHECK(basis_value(3, 0, ex(0, 1)) == ex(1, 1));
  CHECK(basis_value(3, 0, ex(1, 4)) == ex(1, 2));
  CHECK(basis_value(3, 1, ex(1, 4)) == ex(1, 2));
  CHECK(basis_value(3, 2, ex(1, 2)) == ex(0, 1));
  CHECK_THROWS_AS(basis_value(3, 3, ex(0, 1)), Error);
  // p_k(k/(n-1)) = 1 and the others vanish there
  for (int n = 2; n <= 9; ++n)
    for (int k = 0; k < n; ++k)
      for (int h = 0; h < n; ++h) CHECK(basis_value(n, h, ex(k, n - 1)) == (h == k ? ex(1, 1) : ex(0, 1)));
  // against the triangular form max(0, 1 - |(n-1)x - k|) on a fine grid
  for (int n = 2; n <= 7; ++n)
    for (int j = 0; j <= 60; ++j)
      for (int k = 0; k < n; ++k) {
        const std::int64_t dist = std::abs(static_cast<std::int64_t>(n - 1) * j - 60LL * k);
        CHECK(basis_value(n, k, ex(j, 60)) == ex(std::max<std::int64_t>(0, 60 - dist), 60));
      }
  // float branch
  CHECK(std::abs(basis_value(3, 1, UnitValue::real(0.25)).to_double() - 0.5) < 1e-12);
}

TEST_CASE("Lukasiewicz coders") {
  const auto c35 = build_coder(3, 5);
  CHECK(c35.kernel(2, 1) == ex(1, 1));
  CHECK(c35.kernel(1, 0) == ex(1, 2));
  CHECK(c35.kernel(1, 1) == ex(1, 2));
  const auto c24 = build_coder(2, 4);
  for (int x = 0; x < 4; ++x) {
    CHECK(c24.kernel(x, 0) == ex(3 - x, 3));
    CHECK(c24.kernel(x, 1) == ex(x, 3));
  }
  CHECK(c24.coder_class.orthonormal);
  const auto c = build_coder(25, 64);
  CHECK(c.coder_class.orthogonal);
  CHECK_FALSE(c.coder_class.normal);
  // normality exactly when (n - 1) | (m - 1)
  for (int n = 2; n <= 6; ++n)
    for (int m = n + 1; m <= 13; ++m) {
      const auto cc = build_coder(n, m).coder_class;
      CHECK(cc.orthogonal);
      CHECK(cc.normal == ((m - 1) % (n - 1) == 0));
    }
  CHECK_THROWS_AS(build_coder(3, 3), Error);
  CHECK_THROWS_AS(build_coder(1, 4), Error);
}

TEST_CASE("Lukasiewicz transform examples and second-pass losslessness") {
  const auto c = build_coder(2, 4);
  const auto ramp = grid_vector({{1, 1}, {2, 3}, {1, 3}, {0, 1}});
  const auto h = luk_transform(c, ramp);
  CHECK(h == grid_vector({{1, 1}, {0, 1}}));
  CHECK(luk_inverse(c, h) == ramp);
  const auto zero = grid_vector({{0, 1}, {0, 1}, {0, 1}, {0, 1}});
  const auto h0 = luk_transform(c, zero);
  CHECK(h0 == grid_vector({{0, 1}, {0, 1}}));
  const auto back = luk_inverse(c, h0);
  CHECK(back == grid_vector({{0, 1}, {1, 3}, {1, 3}, {0, 1}}));
  CHECK(luk_transform(c, back) == h0);
}

TEST_CASE("Lukasiewicz transform scalar commutation and denominators") {
  const auto c = build_coder(3, 7);
  const TNormQuantale q(TNormKind::lukasiewicz());
  std::mt19937 rng(4);
  std::uniform_int_distribution<int> d(0, 12);
  for (int t = 0; t < 200; ++t) {
    std::vector<UnitValue> f(7), g(3);
    for (auto& v : f) v = ex(d(rng), 12);
    for (auto& v : g) v = ex(d(rng), 12);
    const auto s = ex(d(rng), 12);
    std::vector<UnitValue> sf, sg;
    for (const auto& v : f) sf.push_back(q.mul(s, v));
    for (const auto& v : g) sg.push_back(q.under(s, v));
    auto hf = luk_transform(c, f);
    for (auto& v : hf) v = q.mul(s, v);
    CHECK(luk_transform(c, sf) == hf);
    auto lg = luk_inverse(c, g);
    for (auto& v : lg) v = q.under(s, v);
    CHECK(luk_inverse(c, sg) == lg);
    // denominators divide lcm(12, m - 1) = 12
    for (const auto& v : luk_inverse(c, luk_transform(c, f))) CHECK(12 % v.denominator() == 0);
  }
}

TEST_CASE("partition of unity") {
  CHECK(partition_check(3, std::vector<std::int64_t>{12}).all_passed());
  CHECK(partition_check(2, std::vector<std::int64_t>{7, 100}).all_passed());
  CHECK(partition_check(17, std::vector<std::int64_t>{255 * 16}).all_passed());
}
