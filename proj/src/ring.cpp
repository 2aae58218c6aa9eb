#include "fps/ring.hpp"

namespace fps {

bool is_small_prime(std::uint32_t p) {
  if (p < 2) return false;
  for (std::uint32_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

Int RingSpec::invert(const Int& a) const {
  if (!finite()) {
    if (a == 1 || a == -1) return a;
    throw std::domain_error("not invertible");
  }
  // extended Euclid on (a mod m, m)
  Int r0 = reduce(a), r1 = modulus_;
  Int s0 = 1, s1 = 0;
  while (r1 != 0) {
    Int q = r0 / r1;
    Int r2 = r0 - q * r1;
    r0 = r1; r1 = r2;
    Int s2 = s0 - q * s1;
    s0 = s1; s1 = s2;
  }
  if (r0 != 1) throw std::domain_error("not invertible");
  return reduce(s0);
}

std::string RingSpec::to_string() const {
  switch (kind_) {
    case RingKind::PrimeField: return "F" + std::to_string(modulus_);
    case RingKind::ModRing: return "Z/" + std::to_string(modulus_);
    case RingKind::Integers: return "Z";
  }
  return "?";
}

}  // namespace fps
