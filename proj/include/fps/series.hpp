#ifndef FPS_SERIES_HPP
#define FPS_SERIES_HPP

#include <cstddef>
#include <ostream>
#include <vector>

#include "fps/ring.hpp"

namespace fps {

/// A formal power series known modulo t^(order+1). Immutable; coeffs()[i]
/// is the coefficient of t^i, always reduced when the ring is finite.
class TruncatedSeries {
 public:
  TruncatedSeries(RingSpec ring, std::size_t order)
      : ring_(ring), coeffs_(order + 1) {}

  /// Coefficients indexed by degree; shorter vectors are zero-padded up
  /// to the order, longer ones rejected.
  TruncatedSeries(RingSpec ring, std::size_t order, std::vector<Int> coeffs)
      : ring_(ring), coeffs_(std::move(coeffs)) {
    if (coeffs_.size() > order + 1)
      throw std::invalid_argument("coefficient list longer than series order allows");
    coeffs_.resize(order + 1);
    for (auto& c : coeffs_) c = ring_.reduce(c);
  }

  static TruncatedSeries one(RingSpec ring, std::size_t order) {
    return monomial(ring, order, 0, 1);
  }
  static TruncatedSeries identity_t(RingSpec ring, std::size_t order) {
    return monomial(ring, order, 1, 1);
  }
  static TruncatedSeries monomial(RingSpec ring, std::size_t order, std::size_t k, Int c) {
    TruncatedSeries s(ring, order);
    if (k <= order) s.coeffs_[k] = ring.reduce(c);
    return s;
  }

  const RingSpec& ring() const { return ring_; }
  std::size_t order() const { return coeffs_.size() - 1; }
  const Int& coeff(std::size_t i) const { return coeffs_.at(i); }
  const std::vector<Int>& coeffs() const { return coeffs_; }

  bool is_zero() const {
    for (const auto& c : coeffs_)
      if (c != 0) return false;
    return true;
  }

  bool operator==(const TruncatedSeries&) const = default;

 private:
  RingSpec ring_;
  std::vector<Int> coeffs_;
};

TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b);
TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b);
TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b);

/// outer(inner(t)) truncated at the smaller order; inner needs zero
/// constant term.
TruncatedSeries compose(const TruncatedSeries& outer, const TruncatedSeries& inner);

/// 1/a at the same order; constant term must be a unit.
TruncatedSeries mult_inverse(const TruncatedSeries& a);

/// fbar with f(fbar) = fbar(f) = t; needs f = (unit)t + ...
TruncatedSeries comp_inverse(const TruncatedSeries& f);

/// Restriction to a smaller order; cannot extend precision.
TruncatedSeries truncated(const TruncatedSeries& s, std::size_t order);

std::ostream& operator<<(std::ostream& os, const TruncatedSeries& s);

/// C(m, k) mod p by digit-wise binomials in base p; returns 0 for k > m.
std::uint32_t lucas_binomial(std::uint64_t m, std::uint64_t k, std::uint32_t p);

}  // namespace fps

#endif
