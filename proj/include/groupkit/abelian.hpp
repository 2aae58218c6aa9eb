#ifndef GROUPKIT_ABELIAN_HPP
#define GROUPKIT_ABELIAN_HPP

#include <map>
#include <string>
#include <unordered_map>
#include <vector>

#include "groupkit/subgroup.hpp"

namespace groupkit {

/// Invariant factors of a finite abelian group as a non-increasing list
/// of prime powers; the trivial group is the empty list.
struct AbelianType {
  std::vector<std::uint64_t> factors;

  std::uint64_t total() const {
    std::uint64_t t = 1;
    for (auto f : factors) t *= f;
    return t;
  }
  std::size_t rank() const { return factors.size(); }
  std::string to_string() const;

  /// Prime-power decomposition of the cyclic group Z_m.
  static AbelianType cyclic(std::uint64_t m);
  /// Multiset union, renormalized to non-increasing order.
  static AbelianType direct_product(const AbelianType& a, const AbelianType& b);
  /// Order census of the abstract product of the factors.
  std::map<std::uint64_t, std::uint64_t> census() const;

  bool operator==(const AbelianType&) const = default;
};

/// Invariant factors recovered from order statistics: with
/// c_s = #{x : x^(p^s) = 1}, the number of factors with exponent >= s is
/// log_p(c_s / c_{s-1}). Requires an abelian input.
AbelianType abelian_invariants(const SubgroupTable& a);

/// The quotient G/N on canonical coset representatives (minimal encoding
/// in each coset). Requires N normal in G.
class QuotientTable {
 public:
  QuotientTable(const SubgroupTable& g, const SubgroupTable& n);

  const GroupContext& ctx() const { return ctx_; }
  std::size_t order() const { return reps_.size(); }
  const std::vector<PackedElement>& reps() const { return reps_; }
  PackedElement rep(PackedElement e) const;
  PackedElement mul_q(PackedElement a, PackedElement b) const;
  PackedElement pow_q(PackedElement a, std::uint64_t k) const;
  std::uint64_t order_of(PackedElement e) const;
  bool abelian() const { return abelian_; }

 private:
  GroupContext ctx_;
  std::vector<PackedElement> reps_;
  std::unordered_map<PackedElement, PackedElement> rep_;
  bool abelian_;
};

/// Same, for the quotient G/N; requires N normal in G and G/N abelian.
AbelianType quotient_abelian_invariants(const SubgroupTable& g, const SubgroupTable& n);

}  // namespace groupkit

#endif
