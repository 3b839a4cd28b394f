#include "commalg/field.hpp"

#include <cctype>

#include "commalg/errors.hpp"

namespace commalg {

bool is_prime(std::uint64_t p) {
  if (p < 2) return false;
  for (std::uint64_t d = 2; d * d <= p; ++d) {
    if (p % d == 0) return false;
  }
  return true;
}

Field Field::prime(std::uint64_t p) {
  if (!is_prime(p)) {
    throw ValidationError("field characteristic " + std::to_string(p) +
                          " is not prime");
  }
  return Field(p);
}

Field Field::parse(const std::string& descriptor) {
  if (descriptor == "rat" || descriptor == "Q") return rationals();
  const std::string prefix = "fp:";
  if (descriptor.rfind(prefix, 0) == 0) {
    const std::string digits = descriptor.substr(prefix.size());
    if (digits.empty() || digits.size() > 18) {
      throw ValidationError("bad field descriptor '" + descriptor + "'");
    }
    for (char c : digits) {
      if (!std::isdigit(static_cast<unsigned char>(c))) {
        throw ValidationError("bad field descriptor '" + descriptor + "'");
      }
    }
    return prime(std::stoull(digits));
  }
  throw ValidationError("bad field descriptor '" + descriptor +
                        "' (expected rat or fp:<p>)");
}

std::string Field::descriptor() const {
  if (is_rational()) return "rat";
  return "fp:" + std::to_string(characteristic_);
}

Scalar Field::normalize(const Scalar& x) const {
  if (is_rational()) return x;
  const mpz_class p(static_cast<unsigned long>(characteristic_));
  mpz_class num = x.get_num() % p;
  if (num < 0) num += p;
  mpz_class den = x.get_den() % p;
  if (den == 0) {
    throw ValidationError("scalar " + x.get_str() + " is undefined in " +
                          descriptor());
  }
  mpz_class den_inv;
  mpz_invert(den_inv.get_mpz_t(), den.get_mpz_t(), p.get_mpz_t());
  mpz_class r = (num * den_inv) % p;
  return Scalar(r);
}

Scalar Field::reduce(const Scalar& x) const {
  return is_rational() ? x : normalize(x);
}

Scalar Field::inv(const Scalar& a) const {
  if (is_zero(a)) throw InvariantViolation("division by zero scalar");
  if (is_rational()) return Scalar(1) / a;
  return normalize(Scalar(mpz_class(1), a.get_num()));
}

Scalar parse_rational(const std::string& text) {
  std::size_t i = 0;
  std::string num;
  if (i < text.size() && (text[i] == '-' || text[i] == '+')) {
    if (text[i] == '-') num.push_back('-');
    ++i;
  }
  const std::size_t digits_start = i;
  while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
    num.push_back(text[i++]);
  }
  if (i == digits_start) {
    throw ValidationError("bad rational '" + text + "'");
  }
  mpz_class den(1);
  if (i < text.size()) {
    if (text[i] != '/') throw ValidationError("bad rational '" + text + "'");
    ++i;
    const std::size_t den_start = i;
    while (i < text.size() &&
           std::isdigit(static_cast<unsigned char>(text[i]))) {
      ++i;
    }
    if (i == den_start || i != text.size()) {
      throw ValidationError("bad rational '" + text + "'");
    }
    den = mpz_class(text.substr(den_start));
    if (den == 0) throw ValidationError("zero denominator in '" + text + "'");
  }
  Scalar q(mpz_class(num), den);
  q.canonicalize();
  return q;
}

std::string format_scalar(const Scalar& x) { return x.get_str(); }

}  // namespace commalg
