#include "sct/matrix.hpp"

#include <stdexcept>

namespace sct {

bool FMatrix::supported_on(const Poset& P) const {
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j)
      if (i != j && at(i, j) != 0 && !(i < j && P.less(i, j))) return false;
  return true;
}

std::string FMatrix::str() const {
  std::string s;
  for (int i = 0; i < n_; ++i) {
    s += i ? "\n[" : "[";
    for (int j = 0; j < n_; ++j) {
      if (j) s += " ";
      s += std::to_string(at(i, j));
    }
    s += "]";
  }
  return s;
}

void mat_mul_into(const FMatrix& a, const FMatrix& b, FMatrix& c) {
  const int n = a.n();
  const int p = a.prime();
  const uint8_t* pa = a.data();
  const uint8_t* pb = b.data();
  uint8_t* pc = c.data();
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      int s = 0;
      for (int k = 0; k < n; ++k) s += int(pa[i * n + k]) * int(pb[k * n + j]);
      pc[i * n + j] = static_cast<uint8_t>(s % p);
    }
  }
}

void mul_group_nil_into(const FMatrix& u, const FMatrix& x, FMatrix& out) {
  const int n = u.n();
  const int p = u.prime();
  const uint8_t* pu = u.data();
  const uint8_t* px = x.data();
  uint8_t* po = out.data();
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      int s = px[i * n + j];
      for (int k = i + 1; k < j; ++k) s += int(pu[i * n + k]) * int(px[k * n + j]);
      po[i * n + j] = static_cast<uint8_t>(s % p);
    }
  }
}

void mul_nil_group_into(const FMatrix& x, const FMatrix& u, FMatrix& out) {
  const int n = u.n();
  const int p = u.prime();
  const uint8_t* pu = u.data();
  const uint8_t* px = x.data();
  uint8_t* po = out.data();
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      int s = px[i * n + j];
      for (int k = i + 1; k < j; ++k) s += int(px[i * n + k]) * int(pu[k * n + j]);
      po[i * n + j] = static_cast<uint8_t>(s % p);
    }
  }
}

FMatrix mat_mul(const FMatrix& a, const FMatrix& b) {
  if (a.n() != b.n() || a.prime() != b.prime())
    throw std::invalid_argument("mat_mul: mismatched shape or prime");
  FMatrix c(a.n(), a.prime());
  mat_mul_into(a, b, c);
  return c;
}

FMatrix unipotent_inverse(const FMatrix& u) {
  const int n = u.n();
  const int p = u.prime();
  FMatrix nil = u.to_offset();
  FMatrix inv = FMatrix::identity(n, p);
  FMatrix term = FMatrix::identity(n, p);
  FMatrix scratch(n, p);
  for (int k = 1; k < n; ++k) {
    mat_mul_into(term, nil, scratch);
    term = scratch;
    if (term.is_zero()) break;
    int sign = (k % 2) ? p - 1 : 1;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (term.at(i, j)) inv.add_at(i, j, sign * term.at(i, j) % p);
  }
  return inv;
}

uint64_t encode_on(const FMatrix& m,
                   const std::vector<std::pair<int, int>>& positions) {
  uint64_t key = 0;
  const uint64_t p = static_cast<uint64_t>(m.prime());
  for (auto [i, j] : positions)
    key = key * p + static_cast<uint64_t>(m.at(i, j));
  return key;
}

FMatrix decode_on(uint64_t key, int n, int p,
                  const std::vector<std::pair<int, int>>& positions) {
  FMatrix m(n, p);
  for (size_t k = positions.size(); k-- > 0;) {
    m.set(positions[k].first, positions[k].second,
          static_cast<int>(key % static_cast<uint64_t>(p)));
    key /= static_cast<uint64_t>(p);
  }
  return m;
}

}  // namespace sct
