#ifndef FPS_RING_HPP
#define FPS_RING_HPP

#include <cstdint>
#include <stdexcept>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace fps {

using Int = boost::multiprecision::cpp_int;

enum class RingKind { PrimeField, ModRing, Integers };

bool is_small_prime(std::uint32_t p);

/// Coefficient ring of a truncated series: F_p, Z/m, or Z.
/// Finite-ring values are always kept reduced to [0, m).
class RingSpec {
 public:
  static RingSpec prime_field(std::uint32_t p) {
    if (!is_small_prime(p)) throw std::invalid_argument("prime field modulus must be prime");
    return RingSpec(RingKind::PrimeField, p);
  }
  static RingSpec mod_ring(std::uint32_t m) {
    if (m < 2) throw std::invalid_argument("modulus must be >= 2");
    return RingSpec(RingKind::ModRing, m);
  }
  static RingSpec integers() { return RingSpec(RingKind::Integers, 0); }
  static RingSpec f2() { return prime_field(2); }

  RingKind kind() const { return kind_; }
  std::uint32_t modulus() const { return modulus_; }  // 0 for Z
  bool finite() const { return kind_ != RingKind::Integers; }

  bool operator==(const RingSpec&) const = default;

  Int reduce(const Int& v) const {
    if (!finite()) return v;
    Int r = v % modulus_;
    if (r < 0) r += modulus_;
    return r;
  }

  Int add(const Int& a, const Int& b) const { return reduce(a + b); }
  Int sub(const Int& a, const Int& b) const { return reduce(a - b); }
  Int mul(const Int& a, const Int& b) const { return reduce(a * b); }
  Int neg(const Int& a) const { return reduce(-a); }

  bool is_unit(const Int& a) const {
    if (!finite()) return a == 1 || a == -1;
    return boost::multiprecision::gcd(reduce(a), Int(modulus_)) == 1;
  }

  /// Multiplicative inverse of a unit; throws "not invertible" otherwise.
  Int invert(const Int& a) const;

  std::string to_string() const;

 private:
  RingSpec(RingKind k, std::uint32_t m) : kind_(k), modulus_(m) {}
  RingKind kind_;
  std::uint32_t modulus_;
};

}  // namespace fps

#endif
