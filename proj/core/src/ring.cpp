#include "paratrace/ring.hpp"

namespace paratrace {

namespace {

bool is_prime(unsigned long n) {
  if (n < 2) return false;
  for (unsigned long d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

}  // namespace

ExactRing ExactRing::Fp(unsigned long p) {
  if (!is_prime(p)) throw std::invalid_argument("prime field modulus must be prime");
  return ExactRing(Kind::PrimeField, p);
}

Rat ExactRing::normalize(const Rat& x) const {
  switch (kind_) {
    case Kind::Rationals:
      return x;
    case Kind::Integers:
      if (x.get_den() != 1) throw std::domain_error("not an integer");
      return x;
    case Kind::PrimeField: {
      Int p(static_cast<unsigned long>(p_));
      Int den = x.get_den();
      if (mpz_divisible_p(den.get_mpz_t(), p.get_mpz_t()))
        throw std::domain_error("denominator not invertible mod p");
      Int den_inv;
      if (!mpz_invert(den_inv.get_mpz_t(), den.get_mpz_t(), p.get_mpz_t()))
        throw std::domain_error("denominator not invertible mod p");
      Int r = (x.get_num() % p) * den_inv % p;
      if (r < 0) r += p;
      return Rat(r);
    }
  }
  throw std::logic_error("unreachable");
}

Rat ExactRing::invert(const Rat& x) const {
  Rat v = normalize(x);
  if (v == 0) throw std::domain_error("division by zero");
  switch (kind_) {
    case Kind::Rationals:
      return 1 / v;
    case Kind::Integers: {
      if (v != 1 && v != -1) throw std::domain_error("not a unit in Z");
      return v;
    }
    case Kind::PrimeField: {
      Int p(static_cast<unsigned long>(p_));
      Int num = v.get_num();
      Int inv;
      if (!mpz_invert(inv.get_mpz_t(), num.get_mpz_t(), p.get_mpz_t()))
        throw std::domain_error("not invertible mod p");
      if (inv < 0) inv += p;
      return Rat(inv);
    }
  }
  throw std::logic_error("unreachable");
}

bool ExactRing::is_invertible(const Rat& x) const {
  Rat v = normalize(x);
  if (v == 0) return false;
  if (kind_ == Kind::Integers) return v == 1 || v == -1;
  return true;
}

std::string ExactRing::to_string() const {
  switch (kind_) {
    case Kind::Rationals: return "Q";
    case Kind::Integers: return "Z";
    case Kind::PrimeField: return "Fp:" + std::to_string(p_);
  }
  return "?";
}

ExactRing ExactRing::parse(const std::string& s) {
  if (s == "Q") return Q();
  if (s == "Z") return Z();
  if (s.rfind("Fp:", 0) == 0) return Fp(std::stoul(s.substr(3)));
  // Bare prime shorthand, e.g. "5".
  if (!s.empty() && s.find_first_not_of("0123456789") == std::string::npos)
    return Fp(std::stoul(s));
  throw std::invalid_argument("unknown ring: " + s);
}

Rat parse_rat(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("empty scalar");
  Rat x;
  if (x.set_str(s, 10) != 0) throw std::invalid_argument("bad scalar: " + s);
  x.canonicalize();
  return x;
}

std::string rat_to_string(const Rat& x) { return x.get_str(); }

}  // namespace paratrace
