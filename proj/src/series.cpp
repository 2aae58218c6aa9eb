#include "fps/series.hpp"

#include <algorithm>

#include "fps/gf2.hpp"

namespace fps {

namespace {

void require_same_ring(const TruncatedSeries& a, const TruncatedSeries& b) {
  if (!(a.ring() == b.ring())) throw std::invalid_argument("incompatible rings");
}

bool f2_word_sized(const TruncatedSeries& s) {
  return s.ring().finite() && s.ring().modulus() == 2 && s.order() <= 63;
}

gf2::word to_word(const TruncatedSeries& s) {
  gf2::word w = 0;
  for (std::size_t i = 0; i <= s.order(); ++i)
    if (s.coeff(i) != 0) w |= gf2::word{1} << i;
  return w;
}

TruncatedSeries from_word(RingSpec ring, std::size_t order, gf2::word w) {
  std::vector<Int> cs(order + 1);
  for (std::size_t i = 0; i <= order; ++i) cs[i] = (w >> i) & 1;
  return TruncatedSeries(ring, order, std::move(cs));
}

}  // namespace

TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b) {
  require_same_ring(a, b);
  const std::size_t n = std::min(a.order(), b.order());
  std::vector<Int> cs(n + 1);
  for (std::size_t i = 0; i <= n; ++i) cs[i] = a.ring().add(a.coeff(i), b.coeff(i));
  return TruncatedSeries(a.ring(), n, std::move(cs));
}

TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b) {
  require_same_ring(a, b);
  const std::size_t n = std::min(a.order(), b.order());
  std::vector<Int> cs(n + 1);
  for (std::size_t i = 0; i <= n; ++i) cs[i] = a.ring().sub(a.coeff(i), b.coeff(i));
  return TruncatedSeries(a.ring(), n, std::move(cs));
}

TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
  require_same_ring(a, b);
  const std::size_t n = std::min(a.order(), b.order());
  if (f2_word_sized(a) && f2_word_sized(b)) {
    return from_word(a.ring(), n, gf2::mul_trunc(to_word(a), to_word(b), static_cast<int>(n)));
  }
  std::vector<Int> cs(n + 1);
  for (std::size_t i = 0; i <= n; ++i) {
    if (a.coeff(i) == 0) continue;
    for (std::size_t j = 0; i + j <= n; ++j) {
      if (b.coeff(j) == 0) continue;
      cs[i + j] += a.coeff(i) * b.coeff(j);
    }
  }
  return TruncatedSeries(a.ring(), n, std::move(cs));
}

TruncatedSeries compose(const TruncatedSeries& outer, const TruncatedSeries& inner) {
  require_same_ring(outer, inner);
  if (inner.coeff(0) != 0) throw std::invalid_argument("composition requires depth >= 1");
  const std::size_t n = std::min(outer.order(), inner.order());
  if (f2_word_sized(outer) && f2_word_sized(inner)) {
    return from_word(outer.ring(), n,
                     gf2::compose_trunc(to_word(outer), to_word(inner), static_cast<int>(n)));
  }
  // Horner in the truncated ring.
  TruncatedSeries in = truncated(inner, n);
  TruncatedSeries acc(outer.ring(), n);
  for (std::size_t k = n + 1; k-- > 0;) {
    acc = acc * in;
    acc = acc + TruncatedSeries::monomial(outer.ring(), n, 0, outer.coeff(k));
  }
  return acc;
}

TruncatedSeries mult_inverse(const TruncatedSeries& a) {
  if (!a.ring().is_unit(a.coeff(0))) throw std::domain_error("not invertible");
  const std::size_t n = a.order();
  if (f2_word_sized(a))
    return from_word(a.ring(), n, gf2::mult_inverse(to_word(a), static_cast<int>(n)));
  const Int u = a.ring().invert(a.coeff(0));
  std::vector<Int> b(n + 1);
  b[0] = u;
  for (std::size_t d = 1; d <= n; ++d) {
    Int s = 0;
    for (std::size_t i = 1; i <= d; ++i) s += a.coeff(i) * b[d - i];
    b[d] = a.ring().reduce(-u * s);
  }
  return TruncatedSeries(a.ring(), n, std::move(b));
}

TruncatedSeries comp_inverse(const TruncatedSeries& f) {
  if (f.coeff(0) != 0 || !f.ring().is_unit(f.order() >= 1 ? f.coeff(1) : Int(0)))
    throw std::domain_error("no compositional inverse");
  const std::size_t n = f.order();
  if (f2_word_sized(f))
    return from_word(f.ring(), n, gf2::comp_inverse(to_word(f), static_cast<int>(n)));
  // Degree-by-degree: the t^d defect of f(fbar) determines fbar_d, since
  // f(fbar + c t^d) = f(fbar) + c f1 t^d mod t^(d+1).
  const Int f1_inv = f.ring().invert(f.coeff(1));
  std::vector<Int> fbar(n + 1);
  fbar[1] = f1_inv;
  for (std::size_t d = 2; d <= n; ++d) {
    TruncatedSeries partial(f.ring(), d, std::vector<Int>(fbar.begin(), fbar.begin() + d + 1));
    const Int defect = compose(truncated(f, d), partial).coeff(d);
    fbar[d] = f.ring().reduce(-f1_inv * defect);
  }
  return TruncatedSeries(f.ring(), n, std::move(fbar));
}

TruncatedSeries truncated(const TruncatedSeries& s, std::size_t order) {
  if (order > s.order()) throw std::invalid_argument("cannot extend precision");
  return TruncatedSeries(s.ring(), order,
                         std::vector<Int>(s.coeffs().begin(), s.coeffs().begin() + order + 1));
}

std::ostream& operator<<(std::ostream& os, const TruncatedSeries& s) {
  os << "[";
  for (std::size_t i = 0; i <= s.order(); ++i) {
    if (i) os << ",";
    os << s.coeff(i);
  }
  return os << "] over " << s.ring().to_string();
}

std::uint32_t lucas_binomial(std::uint64_t m, std::uint64_t k, std::uint32_t p) {
  if (!is_small_prime(p)) throw std::invalid_argument("lucas_binomial needs a prime modulus");
  if (k > m) return 0;
  // Pascal triangle mod p for the digit binomials (digits are < p).
  std::vector<std::vector<std::uint32_t>> pascal(p);
  for (std::uint32_t i = 0; i < p; ++i) {
    pascal[i].resize(i + 1);
    pascal[i][0] = pascal[i][i] = 1;
    for (std::uint32_t j = 1; j < i; ++j)
      pascal[i][j] = (pascal[i - 1][j - 1] + pascal[i - 1][j]) % p;
  }
  std::uint64_t r = 1;
  while (m != 0 || k != 0) {
    const auto md = static_cast<std::uint32_t>(m % p);
    const auto kd = static_cast<std::uint32_t>(k % p);
    if (kd > md) return 0;
    r = (r * pascal[md][kd]) % p;
    m /= p;
    k /= p;
  }
  return static_cast<std::uint32_t>(r);
}

}  // namespace fps
