#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace sct {

using BigInt = boost::multiprecision::cpp_int;

// Arbitrary-precision rational in canonical form: gcd(|num|, den) = 1,
// den > 0, zero is 0/1.
class Rational {
 public:
  Rational() : q_(0) {}
  Rational(long long n) : q_(n) {}  // NOLINT: implicit from integers is handy
  Rational(const BigInt& n) : q_(n) {}

  Rational(BigInt num, BigInt den) {
    if (den == 0) throw std::invalid_argument("Rational: zero denominator");
    if (den < 0) {
      num = -num;
      den = -den;
    }
    q_ = boost::multiprecision::cpp_rational(num, den);
  }

  static Rational parse(const std::string& text) {
    auto slash = text.find('/');
    if (slash == std::string::npos) return Rational(BigInt(text));
    return Rational(BigInt(text.substr(0, slash)),
                    BigInt(text.substr(slash + 1)));
  }

  BigInt num() const { return boost::multiprecision::numerator(q_); }
  BigInt den() const { return boost::multiprecision::denominator(q_); }

  bool is_zero() const { return q_ == 0; }
  bool is_integer() const { return den() == 1; }
  int sign() const { return q_ < 0 ? -1 : (q_ > 0 ? 1 : 0); }

  Rational operator-() const { return Rational(-q_); }
  Rational operator+(const Rational& o) const { return Rational(q_ + o.q_); }
  Rational operator-(const Rational& o) const { return Rational(q_ - o.q_); }
  Rational operator*(const Rational& o) const { return Rational(q_ * o.q_); }
  Rational operator/(const Rational& o) const {
    if (o.is_zero()) throw std::invalid_argument("Rational: divide by zero");
    return Rational(q_ / o.q_);
  }
  Rational& operator+=(const Rational& o) {
    q_ += o.q_;
    return *this;
  }
  Rational& operator-=(const Rational& o) {
    q_ -= o.q_;
    return *this;
  }
  Rational& operator*=(const Rational& o) {
    q_ *= o.q_;
    return *this;
  }

  bool operator==(const Rational& o) const { return q_ == o.q_; }
  bool operator!=(const Rational& o) const { return q_ != o.q_; }
  bool operator<(const Rational& o) const { return q_ < o.q_; }
  bool operator<=(const Rational& o) const { return q_ <= o.q_; }
  bool operator>(const Rational& o) const { return q_ > o.q_; }
  bool operator>=(const Rational& o) const { return q_ >= o.q_; }

  // "a" for integers, "a/b" otherwise.
  std::string str() const { return q_.str(); }

 private:
  explicit Rational(boost::multiprecision::cpp_rational q) : q_(std::move(q)) {}
  boost::multiprecision::cpp_rational q_;
};

inline Rational rat_canon(long long n, long long d) {
  return Rational(BigInt(n), BigInt(d));
}

}  // namespace sct
