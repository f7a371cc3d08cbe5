#pragma once

#include <concepts>
#include <string>

namespace qlab {

/// Operation contract shared by every quantale the library computes with.
///
///   join/meet/bottom/top  the complete lattice reduct
///   mul/unit              the monoid, distributing over joins
///   under(x, y)           left residual  x \ y = join{z | x*z <= y}
///   over(y, x)            right residual y / x = join{z | z*x <= y}
///
/// Order is derived: leq(x, y) iff join(x, y) equals y.
template <class Q>
concept QuantaleOps = std::copy_constructible<Q> &&
    requires(const Q& q, const typename Q::value_type& a, const typename Q::value_type& b) {
      typename Q::value_type;
      { q.bottom() } -> std::convertible_to<typename Q::value_type>;
      { q.top() } -> std::convertible_to<typename Q::value_type>;
      { q.unit() } -> std::convertible_to<typename Q::value_type>;
      { q.join(a, b) } -> std::convertible_to<typename Q::value_type>;
      { q.meet(a, b) } -> std::convertible_to<typename Q::value_type>;
      { q.mul(a, b) } -> std::convertible_to<typename Q::value_type>;
      { q.under(a, b) } -> std::convertible_to<typename Q::value_type>;
      { q.over(a, b) } -> std::convertible_to<typename Q::value_type>;
      { q.leq(a, b) } -> std::convertible_to<bool>;
      { q.equal(a, b) } -> std::convertible_to<bool>;
      { q.format(a) } -> std::convertible_to<std::string>;
    };

}  // namespace qlab
