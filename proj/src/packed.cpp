#include "groupkit/packed.hpp"

#include <stdexcept>
#include <vector>

namespace groupkit {

namespace {

constexpr int kMaxLen = 34;  // coefficient slots for one series, degrees 0..level

// Dense base-m coefficient vectors for the generic (non-F2) path. Small
// moduli only, so plain u32 arithmetic never overflows.
struct Coeffs {
  std::array<std::uint32_t, kMaxLen> c{};
};

struct GPair {
  Coeffs g, f;
};

Coeffs mul_series(const Coeffs& a, const Coeffs& b, int n, std::uint32_t m) {
  Coeffs r;
  for (int i = 0; i <= n; ++i) {
    if (a.c[i] == 0) continue;
    for (int j = 0; i + j <= n; ++j) r.c[i + j] = (r.c[i + j] + a.c[i] * b.c[j]) % m;
  }
  return r;
}

Coeffs compose_series(const Coeffs& outer, const Coeffs& inner, int n, std::uint32_t m) {
  Coeffs acc;
  for (int k = n; k >= 0; --k) {
    acc = mul_series(acc, inner, n, m);
    acc.c[0] = (acc.c[0] + outer.c[k]) % m;
  }
  return acc;
}

Coeffs mult_inverse_series(const Coeffs& a, int n, std::uint32_t m) {
  // constant term is 1 in the unit-diagonal setting
  Coeffs b;
  b.c[0] = 1;
  for (int d = 1; d <= n; ++d) {
    std::uint32_t s = 0;
    for (int i = 1; i <= d; ++i) s = (s + a.c[i] * b.c[d - i]) % m;
    b.c[d] = (m - s) % m;
  }
  return b;
}

Coeffs comp_inverse_series(const Coeffs& f, int n, std::uint32_t m) {
  Coeffs fbar;
  fbar.c[1] = 1;
  for (int d = 2; d <= n; ++d) {
    const Coeffs comp = compose_series(f, fbar, d, m);
    fbar.c[d] = (m - comp.c[d]) % m;
  }
  return fbar;
}

GPair decode(const GroupContext& ctx, PackedElement e) {
  GPair p;
  p.g.c[0] = 1;
  p.f.c[1] = 1;
  const int n = ctx.level();
  for (int k = 1; k <= n; ++k) p.g.c[k] = ctx.g_digit(e, k);
  for (int k = 2; k <= n; ++k) p.f.c[k] = ctx.f_digit(e, k);
  return p;
}

PackedElement encode(const GroupContext& ctx, const GPair& p) {
  PackedElement e = 0;
  const int n = ctx.level();
  const int w = ctx.digit_bits();
  for (int k = 1; k <= n; ++k) e |= PackedElement{p.g.c[k]} << ((k - 1) * w);
  for (int k = 2; k <= n; ++k) e |= PackedElement{p.f.c[k]} << ((n + k - 2) * w);
  return e;
}

GPair mul_generic(const GroupContext& ctx, const GPair& a, const GPair& b) {
  const int n = ctx.level();
  const std::uint32_t m = ctx.modulus();
  GPair r;
  r.g = mul_series(a.g, compose_series(b.g, a.f, n, m), n, m);
  r.f = compose_series(b.f, a.f, n, m);
  return r;
}

GPair inverse_generic(const GroupContext& ctx, const GPair& a) {
  const int n = ctx.level();
  const std::uint32_t m = ctx.modulus();
  GPair r;
  r.f = comp_inverse_series(a.f, n, m);
  r.g = mult_inverse_series(compose_series(a.g, r.f, n, m), n, m);
  return r;
}

}  // namespace

GroupContext::GroupContext(int level, fps::RingSpec ring) : level_(level), ring_(ring) {
  if (level < 1) throw std::invalid_argument("packing requires level >= 1");
  if (!ring.finite() || ring.modulus() > kMaxPackedModulus)
    throw std::invalid_argument("packing requires a finite ring with modulus <= 16");
  digit_bits_ = std::bit_width(ring.modulus() - 1);
  digit_mask_ = (std::uint64_t{1} << digit_bits_) - 1;
  if (digit_count() * digit_bits_ > 63)
    throw std::invalid_argument("level too large for packed encoding");
}

PackedElement pack(const GroupContext& ctx, const riordan::Pair& p) {
  if (!(p.ring() == ctx.ring()) || p.order() != static_cast<std::size_t>(ctx.level()))
    throw std::invalid_argument("ring/order mismatch");
  if (!p.is_unit_diagonal()) throw std::invalid_argument("pack requires unit diagonal");
  PackedElement e = 0;
  const int n = ctx.level();
  const int w = ctx.digit_bits();
  for (int k = 1; k <= n; ++k)
    e |= PackedElement{static_cast<std::uint64_t>(p.g().coeff(k))} << ((k - 1) * w);
  for (int k = 2; k <= n; ++k)
    e |= PackedElement{static_cast<std::uint64_t>(p.f().coeff(k))} << ((n + k - 2) * w);
  return e;
}

riordan::Pair unpack(const GroupContext& ctx, PackedElement e) {
  const std::size_t n = ctx.level();
  std::vector<fps::Int> g(n + 1), f(n + 1);
  g[0] = 1;
  f[1] = 1;
  for (std::size_t k = 1; k <= n; ++k) g[k] = ctx.g_digit(e, static_cast<int>(k));
  for (std::size_t k = 2; k <= n; ++k) f[k] = ctx.f_digit(e, static_cast<int>(k));
  return riordan::Pair(fps::TruncatedSeries(ctx.ring(), n, std::move(g)),
                       fps::TruncatedSeries(ctx.ring(), n, std::move(f)));
}

PackedElement mul(const GroupContext& ctx, PackedElement a, PackedElement b) {
  const int n = ctx.level();
  if (ctx.f2()) return f2::join(f2::mul(f2::split(a, n), f2::split(b, n), n), n);
  return encode(ctx, mul_generic(ctx, decode(ctx, a), decode(ctx, b)));
}

PackedElement inverse_elem(const GroupContext& ctx, PackedElement a) {
  const int n = ctx.level();
  if (ctx.f2()) return f2::join(f2::inverse(f2::split(a, n), n), n);
  return encode(ctx, inverse_generic(ctx, decode(ctx, a)));
}

PackedElement power_elem(const GroupContext& ctx, PackedElement a, std::uint64_t k) {
  PackedElement r = 0, x = a;
  while (k) {
    if (k & 1) r = mul(ctx, r, x);
    k >>= 1;
    if (k) x = mul(ctx, x, x);
  }
  return r;
}

PackedElement conjugate(const GroupContext& ctx, PackedElement a, PackedElement y) {
  return mul(ctx, mul(ctx, inverse_elem(ctx, y), a), y);
}

PackedElement commutator_elem(const GroupContext& ctx, PackedElement a, PackedElement b) {
  const PackedElement ab = mul(ctx, a, b);
  const PackedElement ba = mul(ctx, b, a);
  return mul(ctx, inverse_elem(ctx, ba), ab);
}

std::uint64_t element_order(const GroupContext& ctx, PackedElement e) {
  // the truncated groups here are p-groups whenever m is a prime power
  std::uint32_t m = ctx.modulus();
  std::uint32_t p = 2;
  while (m % p != 0) ++p;
  std::uint32_t q = m;
  while (q % p == 0) q /= p;
  if (q == 1) {
    std::uint64_t order = 1;
    PackedElement x = e;
    while (x != 0) {
      x = power_elem(ctx, x, p);
      order *= p;
      if (order > (std::uint64_t{1} << 40)) throw std::domain_error("element order exceeds cap");
    }
    return order;
  }
  std::uint64_t order = 1;
  PackedElement x = e;
  while (x != 0) {
    x = mul(ctx, x, e);
    if (++order > kMaxSubgroupSize) throw std::domain_error("element order exceeds cap");
  }
  return order;
}

bool is_appell_elem(const GroupContext& ctx, PackedElement e) {
  for (int k = 2; k <= ctx.level(); ++k)
    if (ctx.f_digit(e, k) != 0) return false;
  return true;
}

bool is_subst_elem(const GroupContext& ctx, PackedElement e) {
  for (int k = 1; k <= ctx.level(); ++k)
    if (ctx.g_digit(e, k) != 0) return false;
  return true;
}

}  // namespace groupkit
