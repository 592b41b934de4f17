#include "sct/cyclotomic.hpp"

namespace sct {

Cyclotomic Cyclotomic::operator*(const Cyclotomic& o) const {
  check_same(o);
  const size_t m = c_.size();  // = p - 1
  // Convolution product has degree up to 2p - 4.
  std::vector<Rational> d(2 * m - 1);
  for (size_t i = 0; i < m; ++i) {
    if (c_[i].is_zero()) continue;
    for (size_t j = 0; j < m; ++j) {
      if (o.c_[j].is_zero()) continue;
      d[i + j] += c_[i] * o.c_[j];
    }
  }
  // Fold z^p = 1 first, then eliminate z^{p-1} via the minimal polynomial.
  const size_t p = static_cast<size_t>(prime_);
  for (size_t k = d.size(); k-- > p;) {
    if (!d[k].is_zero()) {
      d[k - p] += d[k];
      d[k] = Rational(0);
    }
  }
  Cyclotomic r(prime_);
  if (d.size() >= p && !d[p - 1].is_zero()) {
    for (size_t k = 0; k + 1 < p; ++k) r.c_[k] = d[k] - d[p - 1];
  } else {
    for (size_t k = 0; k + 1 < p; ++k) r.c_[k] = d[k];
  }
  return r;
}

Cyclotomic Cyclotomic::conj() const {
  Cyclotomic r(prime_);
  for (size_t k = 0; k < c_.size(); ++k) {
    if (c_[k].is_zero()) continue;
    // z^k -> z^{p-k}
    size_t e = (k == 0) ? 0 : static_cast<size_t>(prime_) - k;
    if (e == static_cast<size_t>(prime_) - 1) {
      for (auto& ri : r.c_) ri -= c_[k];
    } else {
      r.c_[e] += c_[k];
    }
  }
  return r;
}

std::string Cyclotomic::str() const {
  if (is_rational()) return c_[0].str();
  std::string s = "[";
  for (size_t k = 0; k < c_.size(); ++k) {
    if (k) s += ", ";
    s += c_[k].str();
  }
  s += "]";
  return s;
}

}  // namespace sct
