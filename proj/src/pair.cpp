#include "riordan/pair.hpp"

namespace riordan {

Pair operator*(const Pair& p, const Pair& q) {
  if (!(p.ring() == q.ring()) || p.order() != q.order())
    throw std::invalid_argument("ring/order mismatch");
  return Pair(p.g() * compose(q.g(), p.f()), compose(q.f(), p.f()));
}

Pair inverse(const Pair& p) {
  TruncatedSeries fbar = comp_inverse(p.f());
  return Pair(mult_inverse(compose(p.g(), fbar)), fbar);
}

Pair commutator(const Pair& p, const Pair& q) {
  return inverse(p) * inverse(q) * p * q;
}

Pair truncate_pair(const Pair& p, std::size_t order) {
  return Pair(truncated(p.g(), order), truncated(p.f(), order));
}

std::pair<Pair, Pair> split_pair(const Pair& p) {
  Pair appell(p.g(), TruncatedSeries::identity_t(p.ring(), p.order()));
  Pair lagrange(TruncatedSeries::one(p.ring(), p.order()), p.f());
  return {appell, lagrange};
}

Pair appell_gen(std::size_t k, const Int& beta, RingSpec ring, std::size_t order) {
  if (k < 1 || k > order) throw std::invalid_argument("appell generator index out of range");
  TruncatedSeries g = TruncatedSeries::one(ring, order) +
                      TruncatedSeries::monomial(ring, order, k, beta);
  return Pair(g, TruncatedSeries::identity_t(ring, order));
}

Pair subst_gen(std::size_t i, const Int& alpha, RingSpec ring, std::size_t order) {
  if (i < 1) throw std::invalid_argument("substitution generator index out of range");
  TruncatedSeries f = TruncatedSeries::identity_t(ring, order) +
                      TruncatedSeries::monomial(ring, order, i + 1, alpha);
  return Pair(TruncatedSeries::one(ring, order), f);
}

std::uint64_t pair_order_pow2(const Pair& p, unsigned max_log2) {
  const Pair id = Pair::identity(p.ring(), p.order());
  Pair x = p;
  std::uint64_t order = 1;
  for (unsigned k = 0; k <= max_log2; ++k) {
    if (x == id) return order;
    x = x * x;
    order *= 2;
  }
  throw std::domain_error("element order exceeds cap");
}

std::ostream& operator<<(std::ostream& os, const Pair& p) {
  return os << "(" << p.g() << ", " << p.f() << ")";
}

}  // namespace riordan
