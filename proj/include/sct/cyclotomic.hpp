#pragma once

#include <string>
#include <vector>

#include "sct/rational.hpp"

namespace sct {

// Element of Q(zeta_p) for a prime p, written on the basis
// {1, z, ..., z^{p-2}} with z = zeta_p.  The relation
// z^{p-1} = -(1 + z + ... + z^{p-2}) is always applied, so the coefficient
// vector is a unique representation and equality is componentwise.
// For p = 2 the field is Q itself (single coefficient).
class Cyclotomic {
 public:
  explicit Cyclotomic(int prime) : prime_(prime), c_(prime - 1) {}

  static Cyclotomic from_rational(int prime, const Rational& r) {
    Cyclotomic x(prime);
    x.c_[0] = r;
    return x;
  }

  // zeta_p^k, reduced to the basis.
  static Cyclotomic root_power(int prime, long long k) {
    Cyclotomic x(prime);
    long long e = k % prime;
    if (e < 0) e += prime;
    if (e == prime - 1) {
      for (auto& ci : x.c_) ci = Rational(-1);
    } else {
      x.c_[static_cast<size_t>(e)] = Rational(1);
    }
    return x;
  }

  int prime() const { return prime_; }
  const Rational& coeff(int k) const { return c_[static_cast<size_t>(k)]; }
  const std::vector<Rational>& coeffs() const { return c_; }

  bool is_zero() const {
    for (const auto& ci : c_)
      if (!ci.is_zero()) return false;
    return true;
  }

  // True when the value lies in Q, i.e. all basis coefficients beyond the
  // constant term vanish.
  bool is_rational() const {
    for (size_t k = 1; k < c_.size(); ++k)
      if (!c_[k].is_zero()) return false;
    return true;
  }

  // The constant term; throws if the value is not rational.
  Rational rational_part() const {
    if (!is_rational())
      throw std::invalid_argument("Cyclotomic: value not rational");
    return c_[0];
  }

  Cyclotomic operator+(const Cyclotomic& o) const {
    check_same(o);
    Cyclotomic r(prime_);
    for (size_t k = 0; k < c_.size(); ++k) r.c_[k] = c_[k] + o.c_[k];
    return r;
  }

  Cyclotomic& operator+=(const Cyclotomic& o) {
    check_same(o);
    for (size_t k = 0; k < c_.size(); ++k) c_[k] += o.c_[k];
    return *this;
  }

  Cyclotomic operator-(const Cyclotomic& o) const {
    check_same(o);
    Cyclotomic r(prime_);
    for (size_t k = 0; k < c_.size(); ++k) r.c_[k] = c_[k] - o.c_[k];
    return r;
  }

  Cyclotomic operator-() const {
    Cyclotomic r(prime_);
    for (size_t k = 0; k < c_.size(); ++k) r.c_[k] = -c_[k];
    return r;
  }

  Cyclotomic operator*(const Cyclotomic& o) const;

  Cyclotomic scaled(const Rational& s) const {
    Cyclotomic r(prime_);
    for (size_t k = 0; k < c_.size(); ++k) r.c_[k] = c_[k] * s;
    return r;
  }

  // Complex conjugate, realized as z -> z^{p-1}.
  Cyclotomic conj() const;

  bool operator==(const Cyclotomic& o) const {
    return prime_ == o.prime_ && c_ == o.c_;
  }
  bool operator!=(const Cyclotomic& o) const { return !(*this == o); }

  // "a/b" for rational values, else "[a0, a1, ...]" on the power basis.
  std::string str() const;

 private:
  void check_same(const Cyclotomic& o) const {
    if (prime_ != o.prime_)
      throw std::invalid_argument("Cyclotomic: mismatched primes");
  }

  int prime_;
  std::vector<Rational> c_;
};

// The fixed nontrivial additive character theta(t) = zeta_p^t.
// theta(0) = 1 and theta(s + t) = theta(s) * theta(t).
inline Cyclotomic theta(int prime, long long t) {
  return Cyclotomic::root_power(prime, t);
}

}  // namespace sct
