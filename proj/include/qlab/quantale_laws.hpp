#pragma once

#include <span>
#include <string>

#include "qlab/law_report.hpp"
#include "qlab/quantale.hpp"

namespace qlab {

namespace detail {

template <QuantaleOps Q>
class QuantaleLawChecker {
 public:
  using V = typename Q::value_type;

  QuantaleLawChecker(const Q& q, LawReport& report) : q_(q), r_(report) {
    join_assoc_ = r_.declare("Q1 join associativity");
    join_comm_ = r_.declare("Q1 join commutativity");
    join_idem_ = r_.declare("Q1 join idempotence");
    bottom_neutral_ = r_.declare("Q1 bottom is join-neutral");
    top_absorbs_ = r_.declare("Q1 top is join-absorbing");
    meet_glb_ = r_.declare("Q1 meet is greatest lower bound");
    assoc_ = r_.declare("Q2 associativity");
    left_unit_ = r_.declare("Q2 left unit");
    right_unit_ = r_.declare("Q2 right unit");
    left_dist_ = r_.declare("Q3 left distributivity");
    right_dist_ = r_.declare("Q3 right distributivity");
    adj_left_ = r_.declare("residual adjunction x*y<=z iff y<=x\\z");
    adj_right_ = r_.declare("residual adjunction x*y<=z iff x<=z/y");
    annihilate_ = r_.declare("bottom annihilates products");
    mul_mono_ = r_.declare("product is monotone");
    res_mono_ = r_.declare("residuals monotone in numerator, antitone in denominator");
    counit_ = r_.declare("residual counit (y/x)x<=y and x(x\\y)<=y");
    unit_res_ = r_.declare("unit residuals x/e = e\\x = x");
    join_denominator_ = r_.declare("residuals turn denominator joins into meets");
    meet_numerator_ = r_.declare("residuals preserve numerator meets");
    currying_ = r_.declare("residual currying y\\(x\\z) = xy\\z and (z/y)/x = z/xy");
  }

  void single(const V& x) {
    const V bot = q_.bottom(), top = q_.top(), e = q_.unit();
    auto w = [&] { return "x=" + q_.format(x); };
    r_.record(join_idem_, eq(q_.join(x, x), x), w);
    r_.record(bottom_neutral_, eq(q_.join(x, bot), x) && eq(q_.join(bot, x), x), w);
    r_.record(top_absorbs_, eq(q_.join(x, top), top), w);
    r_.record(left_unit_, eq(q_.mul(e, x), x), w);
    r_.record(right_unit_, eq(q_.mul(x, e), x), w);
    r_.record(annihilate_, eq(q_.mul(x, bot), bot) && eq(q_.mul(bot, x), bot), w);
    r_.record(unit_res_, eq(q_.over(x, e), x) && eq(q_.under(e, x), x), w);
    // empty families: x/bot = bot\x = top and top/x = x\top = top
    r_.record(join_denominator_, eq(q_.over(x, bot), top) && eq(q_.under(bot, x), top), w);
    r_.record(meet_numerator_, eq(q_.over(top, x), top) && eq(q_.under(x, top), top), w);
  }

  void pair(const V& x, const V& y) {
    auto w = [&] { return "x=" + q_.format(x) + ", y=" + q_.format(y); };
    r_.record(join_comm_, eq(q_.join(x, y), q_.join(y, x)), w);
    const V m = q_.meet(x, y);
    r_.record(meet_glb_, q_.leq(m, x) && q_.leq(m, y), w);
    r_.record(counit_,
              q_.leq(q_.mul(q_.over(y, x), x), y) && q_.leq(q_.mul(x, q_.under(x, y)), y), w);
  }

  void triple(const V& x, const V& y, const V& z) {
    auto w = [&] {
      return "x=" + q_.format(x) + ", y=" + q_.format(y) + ", z=" + q_.format(z);
    };
    r_.record(join_assoc_, eq(q_.join(q_.join(x, y), z), q_.join(x, q_.join(y, z))), w);
    if (q_.leq(z, x) && q_.leq(z, y)) r_.record(meet_glb_, q_.leq(z, q_.meet(x, y)), w);

    const V xy = q_.mul(x, y);
    r_.record(assoc_, eq(q_.mul(xy, z), q_.mul(x, q_.mul(y, z))), w);
    const V yz = q_.join(y, z);
    r_.record(left_dist_, eq(q_.mul(x, yz), q_.join(xy, q_.mul(x, z))), w);
    r_.record(right_dist_, eq(q_.mul(yz, x), q_.join(q_.mul(y, x), q_.mul(z, x))), w);

    const bool prod_le = q_.leq(xy, z);
    r_.record(adj_left_, prod_le == q_.leq(y, q_.under(x, z)), w);
    r_.record(adj_right_, prod_le == q_.leq(x, q_.over(z, y)), w);

    if (q_.leq(x, y)) {
      r_.record(mul_mono_, q_.leq(q_.mul(x, z), q_.mul(y, z)) && q_.leq(q_.mul(z, x), q_.mul(z, y)), w);
      r_.record(res_mono_,
                q_.leq(q_.over(x, z), q_.over(y, z)) && q_.leq(q_.under(z, x), q_.under(z, y)) &&
                    q_.leq(q_.over(z, y), q_.over(z, x)) && q_.leq(q_.under(y, z), q_.under(x, z)),
                w);
    }

    r_.record(join_denominator_,
              eq(q_.over(x, yz), q_.meet(q_.over(x, y), q_.over(x, z))) &&
                  eq(q_.under(yz, x), q_.meet(q_.under(y, x), q_.under(z, x))),
              w);
    const V ymz = q_.meet(y, z);
    r_.record(meet_numerator_,
              eq(q_.over(ymz, x), q_.meet(q_.over(y, x), q_.over(z, x))) &&
                  eq(q_.under(x, ymz), q_.meet(q_.under(x, y), q_.under(x, z))),
              w);
    r_.record(currying_,
              eq(q_.under(y, q_.under(x, z)), q_.under(xy, z)) &&
                  eq(q_.over(q_.over(z, y), x), q_.over(z, xy)),
              w);
  }

 private:
  bool eq(const V& a, const V& b) const { return q_.equal(a, b); }

  const Q& q_;
  LawReport& r_;
  std::size_t join_assoc_, join_comm_, join_idem_, bottom_neutral_, top_absorbs_, meet_glb_;
  std::size_t assoc_, left_unit_, right_unit_, left_dist_, right_dist_, adj_left_, adj_right_;
  std::size_t annihilate_, mul_mono_, res_mono_, counit_, unit_res_, join_denominator_,
      meet_numerator_, currying_;
};

}  // namespace detail

/// Checks the quantale axioms, the residual adjunction and the derived
/// residual identities on every tuple drawn from `carrier`. Failures are
/// reported, never thrown.
template <QuantaleOps Q>
LawReport check_quantale_laws(const Q& q, std::span<const typename Q::value_type> carrier) {
  LawReport report;
  detail::QuantaleLawChecker<Q> checker(q, report);
  for (const auto& x : carrier) {
    checker.single(x);
    for (const auto& y : carrier) {
      checker.pair(x, y);
      for (const auto& z : carrier) checker.triple(x, y, z);
    }
  }
  return report;
}

/// Sampled variant: `draw()` yields carrier elements; `count` triples are checked.
template <QuantaleOps Q, class Draw>
LawReport check_quantale_laws_sampled(const Q& q, Draw&& draw, std::size_t count) {
  LawReport report;
  detail::QuantaleLawChecker<Q> checker(q, report);
  for (std::size_t i = 0; i < count; ++i) {
    const auto x = draw();
    const auto y = draw();
    const auto z = draw();
    checker.single(x);
    checker.pair(x, y);
    checker.triple(x, y, z);
  }
  return report;
}

}  // namespace qlab
