#ifndef FPS_GF2_HPP
#define FPS_GF2_HPP

#include <bit>
#include <cstdint>

// Word-packed polynomials over F_2, truncated at t^(n+1) with n <= 63.
// Bit i of a word is the coefficient of t^i. These are the carry-less
// kernels behind both the F2 series fast path and the group engine.

namespace fps::gf2 {

using word = std::uint64_t;

constexpr word low_mask(int n) {  // keep degrees 0..n
  return (n >= 63) ? ~word{0} : ((word{1} << (n + 1)) - 1);
}

/// a*b mod t^(n+1); requires deg a + deg b representable after masking.
inline word mul_trunc(word a, word b, int n) {
  const word m = low_mask(n);
  a &= m;
  b &= m;
  word r = 0;
  while (a) {
    const int i = std::countr_zero(a);
    a &= a - 1;
    r ^= b << i;
  }
  return r & m;
}

/// Frobenius square mod t^(n+1): spreads bit i to bit 2i.
inline word square_trunc(word a, int n) {
  word r = 0;
  word m = a & low_mask(n / 2);
  while (m) {
    const int i = std::countr_zero(m);
    m &= m - 1;
    r |= word{1} << (2 * i);
  }
  return r & low_mask(n);
}

/// outer(inner) mod t^(n+1); inner must have zero constant term.
inline word compose_trunc(word outer, word inner, int n) {
  const word m = low_mask(n);
  outer &= m;
  word pow = 1;  // inner^i
  word r = 0;
  for (int i = 0; i <= n && (outer >> i) != 0; ++i) {
    if ((outer >> i) & 1) r ^= pow;
    pow = mul_trunc(pow, inner, n);
  }
  return r & m;
}

/// 1/a mod t^(n+1) for a with constant term 1, by Newton steps
/// b <- a*b^2 (valid in characteristic 2).
inline word mult_inverse(word a, int n) {
  word b = 1;
  for (int prec = 1; prec <= n; prec *= 2) {
    const int target = (2 * prec < n ? 2 * prec : n) + 1;
    b = mul_trunc(a, square_trunc(b, target - 1), target - 1);
  }
  return b;
}

/// Compositional inverse of f = t + ... mod t^(n+1), solved degree by
/// degree: the t^d defect of f(fbar) is killed by toggling bit d of fbar.
inline word comp_inverse(word f, int n) {
  word fbar = 2;  // t
  for (int d = 2; d <= n; ++d) {
    const word defect = compose_trunc(f, fbar, d);
    fbar ^= (defect >> d & 1) << d;
  }
  return fbar;
}

}  // namespace fps::gf2

#endif
