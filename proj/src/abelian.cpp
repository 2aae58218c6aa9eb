#include "groupkit/abelian.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <unordered_map>

namespace groupkit {

std::string AbelianType::to_string() const {
  std::string s = "{";
  for (std::size_t i = 0; i < factors.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(factors[i]);
  }
  return s + "}";
}

AbelianType AbelianType::cyclic(std::uint64_t m) {
  AbelianType t;
  for (std::uint64_t p = 2; p * p <= m; ++p) {
    if (m % p) continue;
    std::uint64_t q = 1;
    while (m % p == 0) {
      q *= p;
      m /= p;
    }
    t.factors.push_back(q);
  }
  if (m > 1) t.factors.push_back(m);
  std::sort(t.factors.rbegin(), t.factors.rend());
  return t;
}

AbelianType AbelianType::direct_product(const AbelianType& a, const AbelianType& b) {
  AbelianType t = a;
  t.factors.insert(t.factors.end(), b.factors.begin(), b.factors.end());
  std::sort(t.factors.rbegin(), t.factors.rend());
  return t;
}

std::map<std::uint64_t, std::uint64_t> AbelianType::census() const {
  std::map<std::uint64_t, std::uint64_t> census{{1, 1}};
  for (std::uint64_t q : factors) {
    // Z_q with q a prime power: phi(p^s) elements of order p^s
    std::uint64_t p = 2;
    while (q % p) ++p;
    std::vector<std::pair<std::uint64_t, std::uint64_t>> zq{{1, 1}};
    for (std::uint64_t d = p; d <= q; d *= p) zq.emplace_back(d, d - d / p);
    std::map<std::uint64_t, std::uint64_t> next;
    for (const auto& [ord, cnt] : census)
      for (const auto& [d, c] : zq) next[std::lcm(ord, d)] += cnt * c;
    census = std::move(next);
  }
  return census;
}

namespace {

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> ps;
  for (std::uint64_t p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    ps.push_back(p);
    while (n % p == 0) n /= p;
  }
  if (n > 1) ps.push_back(n);
  return ps;
}

/// Factor extraction from a full order census, prime by prime.
AbelianType invariants_from_census(const std::map<std::uint64_t, std::uint64_t>& census,
                                   std::uint64_t group_order) {
  AbelianType type;
  for (std::uint64_t p : prime_factors(group_order)) {
    // c[s] = #elements killed by p^s
    std::vector<std::uint64_t> c{1};
    for (std::uint64_t q = p;; q *= p) {
      std::uint64_t killed = 0;
      for (const auto& [ord, cnt] : census)
        if (q % ord == 0) killed += cnt;
      if (killed == c.back()) break;  // exponent reached
      c.push_back(killed);
    }
    // at_least[s] = #factors with exponent >= s+1
    std::vector<std::uint64_t> at_least;
    for (std::size_t s = 1; s < c.size(); ++s) {
      std::uint64_t ratio = c[s] / c[s - 1];
      std::uint64_t logp = 0;
      while (ratio > 1) {
        ratio /= p;
        ++logp;
      }
      at_least.push_back(logp);
    }
    std::uint64_t q = 1;
    for (std::size_t s = 0; s < at_least.size(); ++s) {
      q *= p;
      const std::uint64_t next = (s + 1 < at_least.size()) ? at_least[s + 1] : 0;
      for (std::uint64_t i = next; i < at_least[s]; ++i) type.factors.push_back(q);
    }
  }
  std::sort(type.factors.rbegin(), type.factors.rend());
  return type;
}

}  // namespace

AbelianType abelian_invariants(const SubgroupTable& a) {
  if (!is_abelian(a)) throw std::invalid_argument("abelian invariants require an abelian group");
  if (a.order() == 1) return AbelianType{};
  AbelianType type = invariants_from_census(order_census(a), a.order());
  if (type.total() != a.order())
    throw std::logic_error("invariant factor extraction lost elements");
  return type;
}

QuotientTable::QuotientTable(const SubgroupTable& g, const SubgroupTable& n) : ctx_(g.ctx) {
  if (!(g.ctx == n.ctx)) throw std::invalid_argument("ring/order mismatch");
  for (PackedElement e : n.generators)
    if (!g.contains(e)) throw std::invalid_argument("normal subgroup not inside the group");
  if (!is_normal(n, g.generators))
    throw std::invalid_argument("quotient requires a normal subgroup");

  // canonical coset representative = minimal encoding; an ascending sweep
  // meets each coset at its minimum first
  rep_.reserve(g.order() * 2);
  for (PackedElement x : g.elements) {
    if (rep_.count(x)) continue;
    reps_.push_back(x);
    for (PackedElement m : n.elements) rep_[mul(ctx_, x, m)] = x;
  }
  if (reps_.size() * n.order() != g.order())
    throw std::logic_error("coset partition mismatch");

  abelian_ = true;
  for (std::size_t i = 0; i < g.generators.size() && abelian_; ++i)
    for (std::size_t j = i + 1; j < g.generators.size() && abelian_; ++j)
      if (!n.contains(commutator_elem(ctx_, g.generators[i], g.generators[j])))
        abelian_ = false;
}

PackedElement QuotientTable::rep(PackedElement e) const { return rep_.at(e); }

PackedElement QuotientTable::mul_q(PackedElement a, PackedElement b) const {
  return rep_.at(mul(ctx_, a, b));
}

// powers of a representative stay inside the right coset, so quotient
// powers are rep(power in G)
PackedElement QuotientTable::pow_q(PackedElement a, std::uint64_t k) const {
  return rep_.at(power_elem(ctx_, a, k));
}

std::uint64_t QuotientTable::order_of(PackedElement e) const {
  const std::uint64_t qsize = reps_.size();
  std::uint64_t order = 1;
  for (std::uint64_t p : prime_factors(qsize)) {
    std::uint64_t cofactor = qsize;
    while (cofactor % p == 0) cofactor /= p;
    PackedElement z = pow_q(rep(e), cofactor);
    while (z != 0) {
      z = pow_q(z, p);
      order *= p;
    }
  }
  return order;
}

AbelianType quotient_abelian_invariants(const SubgroupTable& g, const SubgroupTable& n) {
  const QuotientTable q(g, n);
  if (!q.abelian()) throw std::invalid_argument("quotient is not abelian");
  if (q.order() == 1) return AbelianType{};
  std::map<std::uint64_t, std::uint64_t> census;
  for (PackedElement x : q.reps()) ++census[q.order_of(x)];
  return invariants_from_census(census, q.order());
}

}  // namespace groupkit
