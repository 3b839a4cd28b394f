#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace commalg {

using Scalar = mpq_class;

// Exact scalar arithmetic over Q or a prime field F_p. Scalars are always
// stored as mpq_class; over F_p they are kept reduced to integers in [0, p).
class Field {
 public:
  static Field rationals() { return Field(0); }
  static Field prime(std::uint64_t p);

  // Parses "rat" or "fp:<p>".
  static Field parse(const std::string& descriptor);

  bool is_rational() const noexcept { return characteristic_ == 0; }
  std::uint64_t characteristic() const noexcept { return characteristic_; }
  std::string descriptor() const;

  // Maps a rational into the field. Over F_p, throws ValidationError if the
  // denominator is divisible by p.
  Scalar normalize(const Scalar& x) const;

  Scalar zero() const { return Scalar(0); }
  Scalar one() const { return Scalar(1); }
  Scalar add(const Scalar& a, const Scalar& b) const { return reduce(a + b); }
  Scalar sub(const Scalar& a, const Scalar& b) const { return reduce(a - b); }
  Scalar mul(const Scalar& a, const Scalar& b) const { return reduce(a * b); }
  Scalar neg(const Scalar& a) const { return reduce(-a); }
  Scalar inv(const Scalar& a) const;
  Scalar div(const Scalar& a, const Scalar& b) const { return mul(a, inv(b)); }
  static bool is_zero(const Scalar& a) { return sgn(a) == 0; }

  friend bool operator==(const Field& a, const Field& b) {
    return a.characteristic_ == b.characteristic_;
  }

 private:
  explicit Field(std::uint64_t characteristic)
      : characteristic_(characteristic) {}
  // Reduction of an integral value; inputs produced by field operations
  // never carry denominators over F_p.
  Scalar reduce(const Scalar& x) const;

  std::uint64_t characteristic_;
};

bool is_prime(std::uint64_t p);

// Parses "a" or "a/b" with b > 0; throws ValidationError otherwise.
Scalar parse_rational(const std::string& text);
std::string format_scalar(const Scalar& x);

}  // namespace commalg
