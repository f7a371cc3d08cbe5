#include <algorithm>
#include <cmath>
#include <vector>

#include "doctest.h"
#include "qlab/error.hpp"
#include "qlab/finite_quantale.hpp"
#include "qlab/quantale_laws.hpp"
#include "qlab/tnorm.hpp"

using namespace qlab;

namespace {

UnitValue ex(std::int64_t n, std::int64_t d) { return UnitValue::exact(n, d); }
UnitValue fl(double v) { return UnitValue::real(v); }

// x\y over a chain 0..k-1 with Lukasiewicz product, by direct search.
int luk_chain_residual_oracle(int k, int x, int y) {
  int best = 0;
  for (int z = 0; z < k; ++z)
    if (std::max(0, x + z - (k - 1)) <= y) best = std::max(best, z);
  return best;
}

}  // namespace

TEST_CASE("unit values reduce and compare exactly") {
  CHECK(ex(2, 4) == ex(1, 2));
  CHECK(ex(2, 4).denominator() == 2);
  CHECK(ex(1, 3) < ex(1, 2));
  CHECK(UnitValue::parse("0.25") == ex(1, 4));
  CHECK(UnitValue::parse("2/3") == ex(2, 3));
  CHECK(UnitValue::parse("1") == ex(1, 1));
  CHECK_FALSE(UnitValue::parse("f:0.5").is_exact());
  CHECK_THROWS_AS(UnitValue::exact(3, 2), Error);
  CHECK_THROWS_AS(UnitValue::parse("x"), Error);
  CHECK(fl(0.3) == fl(0.3 + 1e-13));
}

TEST_CASE("t-norm values") {
  CHECK(tnorm_apply(TNormKind::lukasiewicz(), ex(7, 10), ex(6, 10)) == ex(3, 10));
  for (int k = 0; k <= 10; ++k) {
    CHECK(tnorm_apply(TNormKind::godel(), ex(k, 10), UnitValue::one()) == ex(k, 10));
  }
  CHECK(tnorm_apply(TNormKind::nilpotent_minimum(), ex(6, 10), ex(3, 10)) == UnitValue::zero());
  CHECK(tnorm_apply(TNormKind::nilpotent_minimum(), ex(6, 10), ex(5, 10)) == ex(1, 2));
  const auto g2 = tnorm_apply(TNormKind::generalized_lukasiewicz(2), fl(0.8), fl(0.8));
  CHECK(std::fabs(g2.to_double() - std::sqrt(0.28)) <= 1e-12);
  CHECK(std::fabs(g2.to_double() - 0.52915) < 1e-5);
}

TEST_CASE("t-norm residua") {
  CHECK(tnorm_residuum(TNormKind::lukasiewicz(), ex(7, 10), ex(4, 10)) == ex(7, 10));
  CHECK(tnorm_residuum(TNormKind::godel(), ex(3, 10), ex(4, 10)) == UnitValue::one());
  CHECK(tnorm_residuum(TNormKind::godel(), ex(5, 10), ex(4, 10)) == ex(4, 10));
  CHECK(std::fabs(tnorm_residuum(TNormKind::product(), fl(0.8), fl(0.4)).to_double() - 0.5) <= 1e-12);
  CHECK(tnorm_residuum(TNormKind::nilpotent_minimum(), ex(7, 10), ex(1, 10)) == ex(3, 10));
}

TEST_CASE("irrational t-norms refuse exact operands") {
  CHECK_THROWS_AS(tnorm_apply(TNormKind::product(), ex(1, 2), ex(1, 2)), Error);
  CHECK_THROWS_AS(tnorm_residuum(TNormKind::generalized_lukasiewicz(3), ex(1, 2), fl(0.5)), Error);
  CHECK_THROWS_AS(TNormQuantale(TNormKind::product(), Backend::Exact), Error);
  try {
    tnorm_apply(TNormKind::product(), ex(1, 2), ex(1, 2));
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::BackendMismatch);
  }
  CHECK_THROWS_AS(TNormKind::generalized_lukasiewicz(0), Error);
}

TEST_CASE("generalized Lukasiewicz with p = 1 matches Lukasiewicz") {
  const auto g1 = TNormKind::generalized_lukasiewicz(1);
  for (int a = 0; a <= 20; ++a)
    for (int b = 0; b <= 20; ++b) {
      const double x = a / 20.0, y = b / 20.0;
      CHECK(tnorm_apply(g1, fl(x), fl(y)).to_double() ==
            doctest::Approx(std::max(0.0, x + y - 1.0)).epsilon(1e-12));
    }
}

TEST_CASE("adjunction z*x <= y iff z <= x->y on every grid triple") {
  for (auto kind : {TNormKind::godel(), TNormKind::lukasiewicz(), TNormKind::nilpotent_minimum()}) {
    const auto grid = TNormQuantale(kind).grid(20);
    int failures = 0;
    for (const auto& x : grid)
      for (const auto& y : grid)
        for (const auto& z : grid)
          if ((tnorm_apply(kind, z, x) <= y) != (z <= tnorm_residuum(kind, x, y))) ++failures;
    CHECK_MESSAGE(failures == 0, kind.name());
  }
  // float kinds: both directions with the 1e-9 inequality tolerance
  for (auto kind : {TNormKind::product(), TNormKind::generalized_lukasiewicz(2),
                    TNormKind::generalized_lukasiewicz(3)}) {
    const auto grid = TNormQuantale(kind, Backend::Float).grid(20);
    int failures = 0;
    for (const auto& x : grid)
      for (const auto& y : grid)
        for (const auto& z : grid) {
          const double zx = tnorm_apply(kind, z, x).to_double();
          const double r = tnorm_residuum(kind, x, y).to_double();
          if (zx <= y.to_double() - 1e-9 && !(z.to_double() <= r + 1e-9)) ++failures;
          if (z.to_double() <= r - 1e-9 && !(zx <= y.to_double() + 1e-9)) ++failures;
        }
    CHECK_MESSAGE(failures == 0, kind.name());
  }
}

TEST_CASE("Lukasiewicz operations keep a fixed denominator") {
  const int den = 60;
  const auto grid = TNormQuantale(TNormKind::lukasiewicz()).grid(den);
  for (const auto& x : grid)
    for (const auto& y : grid) {
      for (const auto& v : {tnorm_apply(TNormKind::lukasiewicz(), x, y),
                            tnorm_residuum(TNormKind::lukasiewicz(), x, y), unit_max(x, y), unit_min(x, y)}) {
        REQUIRE(v.is_exact());
        CHECK(den % v.denominator() == 0);
      }
    }
}

TEST_CASE("finite_residuals on the 2-chain is Boolean implication") {
  QuantaleTables t{{{0, 1}, {1, 1}}, {{0, 0}, {0, 1}}, 1, 0, {}};
  const auto q = finite_residuals(t);
  const int implication[2][2] = {{1, 1}, {0, 1}};
  for (Elem x = 0; x < 2; ++x)
    for (Elem y = 0; y < 2; ++y) {
      CHECK(q.under(x, y) == implication[x][y]);
      CHECK(q.over(y, x) == implication[x][y]);
    }
}

TEST_CASE("finite_residuals on Lukasiewicz chains match direct search") {
  for (int k = 2; k <= 6; ++k) {
    const auto q = lukasiewicz_chain(k);
    for (Elem x = 0; x < k; ++x)
      for (Elem y = 0; y < k; ++y) {
        CHECK(q.under(x, y) == luk_chain_residual_oracle(k, x, y));
        CHECK(q.over(y, x) == q.under(x, y));  // commutative
      }
  }
  const auto l3 = lukasiewicz_chain(3);
  CHECK(l3.under(1, 0) == 1);  // (1/2)\0 = 1/2
  CHECK(l3.format(1) == "1/2");
  for (Elem x = 0; x < 3; ++x) CHECK(l3.under(l3.unit(), x) == x);
}

TEST_CASE("residual counit holds for every validated finite quantale") {
  std::vector<FiniteQuantale> qs = {lukasiewicz_chain(4), tnorm_chain(TNormKind::godel(), 4),
                                    tnorm_chain(TNormKind::nilpotent_minimum(), 5),
                                    powerset_quantale(FiniteMonoid::cyclic_group(3))};
  for (const auto& q : qs) {
    for (Elem x : q.carrier())
      for (Elem y : q.carrier()) {
        CHECK(q.leq(q.mul(x, q.under(x, y)), y));
        CHECK(q.leq(q.mul(q.over(y, x), x), y));
      }
  }
}

TEST_CASE("law checker: Lukasiewicz 4-chain passes everything") {
  const auto report = check_quantale_laws(lukasiewicz_chain(4));
  CHECK(report.all_passed());
  CHECK(report.results().size() >= 20);
  for (const auto& r : report.results()) CHECK(r.checked > 0);
}

TEST_CASE("law checker: non-associative product is reported with a witness") {
  QuantaleTables t;
  t.join = {{0, 1, 2}, {1, 1, 2}, {2, 2, 2}};
  t.product = {{0, 1, 0}, {0, 0, 1}, {0, 1, 2}};
  t.unit = 2;
  t.bottom = 0;
  const auto report = check_quantale_laws(t);
  const auto* assoc = report.find("Q2 associativity");
  REQUIRE(assoc != nullptr);
  CHECK_FALSE(assoc->passed);
  CHECK(assoc->counterexample.find("x=") != std::string::npos);
  CHECK_THROWS_AS(FiniteQuantale::build(t), Error);
}

TEST_CASE("law checker: t-norm quantales pass exactly on the denominator-100 grid") {
  for (auto kind : {TNormKind::godel(), TNormKind::lukasiewicz(), TNormKind::nilpotent_minimum()}) {
    const auto report = check_quantale_laws(TNormQuantale(kind), 100);
    CHECK_MESSAGE(report.all_passed(), kind.name() << "\n" << report.to_text());
  }
}

TEST_CASE("law checker: float t-norms pass within tolerance on a coarse grid") {
  const auto report = check_quantale_laws(TNormQuantale(TNormKind::product(), Backend::Float), 10);
  CHECK_MESSAGE(report.all_passed(), report.to_text());
}

TEST_CASE("powerset quantale of the trivial monoid is the Boolean quantale") {
  const auto q = powerset_quantale(FiniteMonoid::trivial());
  CHECK(q.size() == 2);
  CHECK(q.unit() == 1);
  CHECK(q.bottom() == 0);
  CHECK(q.mul(1, 1) == 1);
  CHECK(q.mul(0, 1) == 0);
  CHECK(q.under(1, 0) == 0);
  CHECK(q.under(0, 0) == 1);
}

TEST_CASE("powerset quantale of Z_2") {
  const auto q = powerset_quantale(FiniteMonoid::cyclic_group(2));
  const Elem e = 0b01, a = 0b10;
  CHECK(q.mul(a, a) == e);
  for (Elem x = 0; x < 4; ++x) CHECK(q.mul(q.unit(), x) == x);
}

TEST_CASE("powerset quantale distributes over unions on small monoids") {
  std::vector<FiniteMonoid> monoids = {FiniteMonoid::trivial(), FiniteMonoid::cyclic_group(2),
                                       FiniteMonoid::cyclic_group(3),
                                       // {e, a, b} with a, b left zeros
                                       FiniteMonoid{3, {{0, 1, 2}, {1, 1, 1}, {2, 2, 2}}, 0},
                                       // {e, z, a}: z absorbing, a*a = z
                                       FiniteMonoid{3, {{0, 1, 2}, {1, 1, 1}, {2, 1, 1}}, 0}};
  for (const auto& m : monoids) {
    const auto q = powerset_quantale(m);
    for (Elem a : q.carrier())
      for (Elem b : q.carrier())
        for (Elem c : q.carrier()) CHECK(q.mul(a, b | c) == (q.mul(a, b) | q.mul(a, c)));
    CHECK(check_quantale_laws(q).all_passed());
  }
  CHECK_FALSE(powerset_quantale(monoids[3]).commutative());
}

TEST_CASE("powerset quantale respects the size bound") {
  CHECK_THROWS_AS(powerset_quantale(FiniteMonoid::cyclic_group(5)), Error);
  CHECK_NOTHROW(powerset_quantale(FiniteMonoid::cyclic_group(5), 5));
  CHECK_THROWS_AS(powerset_quantale(FiniteMonoid{2, {{0, 1}, {1, 0}}, 1}), Error);  // unit law
}
