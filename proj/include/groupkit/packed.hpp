#ifndef GROUPKIT_PACKED_HPP
#define GROUPKIT_PACKED_HPP

#include <array>
#include <bit>
#include <cstdint>

#include "fps/gf2.hpp"
#include "riordan/pair.hpp"

namespace groupkit {

/// Canonical fixed-width encoding of a unit-diagonal truncated Riordan
/// element: digits (g_1..g_n, f_2..f_n) in degree order, base m, packed
/// little-endian into one word. Equal group elements have equal words;
/// the identity is word 0.
using PackedElement = std::uint64_t;

constexpr std::uint32_t kMaxPackedModulus = 16;
constexpr std::size_t kMaxSubgroupSize = std::size_t{1} << 20;

class GroupContext {
 public:
  GroupContext(int level, fps::RingSpec ring);

  int level() const { return level_; }
  const fps::RingSpec& ring() const { return ring_; }
  std::uint32_t modulus() const { return ring_.modulus(); }
  int digit_count() const { return 2 * level_ - 1; }
  int digit_bits() const { return digit_bits_; }
  bool f2() const { return ring_.modulus() == 2; }

  std::uint32_t digit(PackedElement e, int idx) const {
    return static_cast<std::uint32_t>((e >> (idx * digit_bits_)) & digit_mask_);
  }
  /// Coefficient of t^k in the g part (1 <= k <= level).
  std::uint32_t g_digit(PackedElement e, int k) const { return digit(e, k - 1); }
  /// Coefficient of t^k in the f part (2 <= k <= level).
  std::uint32_t f_digit(PackedElement e, int k) const { return digit(e, level_ + k - 2); }

  bool operator==(const GroupContext&) const = default;

 private:
  int level_;
  fps::RingSpec ring_;
  int digit_bits_;
  std::uint64_t digit_mask_;
};

PackedElement pack(const GroupContext& ctx, const riordan::Pair& p);
riordan::Pair unpack(const GroupContext& ctx, PackedElement e);

PackedElement mul(const GroupContext& ctx, PackedElement a, PackedElement b);
PackedElement inverse_elem(const GroupContext& ctx, PackedElement a);
PackedElement power_elem(const GroupContext& ctx, PackedElement a, std::uint64_t k);
/// y^-1 a y.
PackedElement conjugate(const GroupContext& ctx, PackedElement a, PackedElement y);
/// a^-1 b^-1 a b.
PackedElement commutator_elem(const GroupContext& ctx, PackedElement a, PackedElement b);

std::uint64_t element_order(const GroupContext& ctx, PackedElement e);

bool is_appell_elem(const GroupContext& ctx, PackedElement e);
bool is_subst_elem(const GroupContext& ctx, PackedElement e);

// Word-mask kernels for the F2 fast path. An element splits into the two
// polynomial masks (g, f); bit i is the coefficient of t^i.
namespace f2 {

struct Masks {
  fps::gf2::word g, f;
};

inline Masks split(PackedElement e, int n) {
  const auto g = ((e & fps::gf2::low_mask(n - 1)) << 1) | 1;
  const auto f = (((e >> n) & fps::gf2::low_mask(n - 2)) << 2) | 2;
  return {g, f};
}

inline PackedElement join(Masks m, int n) {
  return ((m.g >> 1) & fps::gf2::low_mask(n - 1)) |
         ((((m.f >> 2) & fps::gf2::low_mask(n - 2))) << n);
}

inline Masks mul(Masks a, Masks b, int n) {
  // One pass over powers of a.f composes both parts of b with it.
  fps::gf2::word pow = 1, cg = 0, cf = 0;
  for (int i = 0; i <= n; ++i) {
    if ((b.g >> i) & 1) cg ^= pow;
    if ((b.f >> i) & 1) cf ^= pow;
    if (((b.g | b.f) >> i) >> 1 == 0) break;
    pow = fps::gf2::mul_trunc(pow, a.f, n);
  }
  return {fps::gf2::mul_trunc(a.g, cg, n), cf & fps::gf2::low_mask(n)};
}

inline Masks inverse(Masks a, int n) {
  const auto fbar = fps::gf2::comp_inverse(a.f, n);
  return {fps::gf2::mult_inverse(fps::gf2::compose_trunc(a.g, fbar, n), n), fbar};
}

/// Precomputed powers of a fixed left factor's f part, so that q*x costs
/// a handful of xors per set bit plus one carry-less multiply.
struct LeftTable {
  fps::gf2::word g;
  std::array<fps::gf2::word, 64> fpow;
  int n;
};

inline LeftTable make_left_table(Masks q, int n) {
  LeftTable t;
  t.g = q.g;
  t.n = n;
  fps::gf2::word pow = 1;
  for (int i = 0; i <= n; ++i) {
    t.fpow[i] = pow;
    if (i < n) pow = fps::gf2::mul_trunc(pow, q.f, n);
  }
  return t;
}

inline fps::gf2::word compose_table(fps::gf2::word outer, const LeftTable& t) {
  fps::gf2::word r = 0;
  while (outer) {
    const int i = std::countr_zero(outer);
    outer &= outer - 1;
    r ^= t.fpow[i];
  }
  return r;
}

inline Masks left_mul(const LeftTable& t, Masks x) {
  return {fps::gf2::mul_trunc(t.g, compose_table(x.g, t), t.n), compose_table(x.f, t)};
}

}  // namespace f2

}  // namespace groupkit

#endif
