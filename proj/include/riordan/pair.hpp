#ifndef RIORDAN_PAIR_HPP
#define RIORDAN_PAIR_HPP

#include <ostream>
#include <utility>

#include "fps/series.hpp"

namespace riordan {

using fps::Int;
using fps::RingSpec;
using fps::TruncatedSeries;

/// A truncated Riordan array as the pair (g, f): g has unit constant
/// term, f has zero constant term and unit linear term, both at the same
/// order. The matrix realization has columns g*f^k.
class Pair {
 public:
  Pair(TruncatedSeries g, TruncatedSeries f) : g_(std::move(g)), f_(std::move(f)) {
    if (!(g_.ring() == f_.ring()) || g_.order() != f_.order())
      throw std::invalid_argument("ring/order mismatch");
    if (!g_.ring().is_unit(g_.coeff(0)))
      throw std::invalid_argument("g must have unit constant term");
    if (f_.coeff(0) != 0)
      throw std::invalid_argument("f must have zero constant term");
    if (f_.order() >= 1 && !f_.ring().is_unit(f_.coeff(1)))
      throw std::invalid_argument("f must have unit linear term");
  }

  static Pair identity(RingSpec ring, std::size_t order) {
    return Pair(TruncatedSeries::one(ring, order), TruncatedSeries::identity_t(ring, order));
  }

  const TruncatedSeries& g() const { return g_; }
  const TruncatedSeries& f() const { return f_; }
  const RingSpec& ring() const { return g_.ring(); }
  std::size_t order() const { return g_.order(); }

  bool is_unit_diagonal() const {
    return g_.coeff(0) == 1 && (order() == 0 || f_.coeff(1) == 1);
  }
  bool is_appell() const { return f_ == TruncatedSeries::identity_t(ring(), order()); }
  bool is_substitution() const { return g_ == TruncatedSeries::one(ring(), order()); }

  bool operator==(const Pair&) const = default;

 private:
  TruncatedSeries g_, f_;
};

/// Group law: (g1, f1)(g2, f2) = (g1 * g2(f1), f2(f1)).
Pair operator*(const Pair& p, const Pair& q);

Pair inverse(const Pair& p);

/// p^-1 q^-1 p q.
Pair commutator(const Pair& p, const Pair& q);

Pair truncate_pair(const Pair& p, std::size_t order);

/// p = appell * lagrange with appell = (g, t) and lagrange = (1, f).
std::pair<Pair, Pair> split_pair(const Pair& p);

/// (1 + beta t^k, t); requires 1 <= k <= order.
Pair appell_gen(std::size_t k, const Int& beta, RingSpec ring, std::size_t order);

/// (1, t + alpha t^(i+1)); i >= order collapses to the identity.
Pair subst_gen(std::size_t i, const Int& alpha, RingSpec ring, std::size_t order);

/// Least k >= 1 with p^k = identity, found by repeated squaring; valid
/// when the order is a power of two (all truncated groups over F2).
std::uint64_t pair_order_pow2(const Pair& p, unsigned max_log2 = 40);

std::ostream& operator<<(std::ostream& os, const Pair& p);

}  // namespace riordan

#endif
