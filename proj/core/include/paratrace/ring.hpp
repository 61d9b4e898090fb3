#pragma once

#include <gmpxx.h>
#include <stdexcept>
#include <string>

namespace paratrace {

using Rat = mpq_class;
using Int = mpz_class;

// One of Q, Z, or a prime field F_p.  Scalars are always carried as mpq_class;
// the ring decides normalization (F_p reduces to a canonical representative in
// [0, p), Z insists on denominator 1) and invertibility.
class ExactRing {
 public:
  enum class Kind { Rationals, Integers, PrimeField };

  static ExactRing Q() { return ExactRing(Kind::Rationals, 0); }
  static ExactRing Z() { return ExactRing(Kind::Integers, 0); }
  static ExactRing Fp(unsigned long p);

  Kind kind() const { return kind_; }
  unsigned long modulus() const { return p_; }
  bool is_field() const { return kind_ != Kind::Integers; }

  bool operator==(const ExactRing& o) const {
    return kind_ == o.kind_ && p_ == o.p_;
  }
  bool operator!=(const ExactRing& o) const { return !(*this == o); }

  // Canonical representative of x in this ring; throws if x is not an
  // element (non-integer over Z, denominator divisible by p over F_p).
  Rat normalize(const Rat& x) const;

  // Multiplicative inverse; throws if not invertible in this ring.
  Rat invert(const Rat& x) const;

  bool is_invertible(const Rat& x) const;

  std::string to_string() const;
  static ExactRing parse(const std::string& s);  // "Q" | "Z" | "Fp:<p>"

 private:
  ExactRing(Kind k, unsigned long p) : kind_(k), p_(p) {}
  Kind kind_;
  unsigned long p_;
};

// Parse "a" or "a/b" into an exact rational.
Rat parse_rat(const std::string& s);
std::string rat_to_string(const Rat& x);

}  // namespace paratrace
