#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "sct/poset.hpp"

namespace sct {

// Dense n x n matrix over F_p using one byte per entry.  Serves both as a
// unipotent group element (unit diagonal) and as a strictly upper-triangular
// element of the algebra n_P / a dual functional (zero diagonal); the two
// differ exactly by the identity, see to_offset / to_group.
class FMatrix {
 public:
  FMatrix() : n_(0), p_(0) {}
  FMatrix(int n, int p) : n_(n), p_(p), a_(static_cast<size_t>(n) * n, 0) {}

  static FMatrix identity(int n, int p) {
    FMatrix m(n, p);
    for (int i = 0; i < n; ++i) m.set(i, i, 1);
    return m;
  }

  int n() const { return n_; }
  int prime() const { return p_; }

  int at(int i, int j) const { return a_[idx(i, j)]; }
  void set(int i, int j, int v) { a_[idx(i, j)] = static_cast<uint8_t>(v); }
  void add_at(int i, int j, int v) {
    int t = (a_[idx(i, j)] + v) % p_;
    a_[idx(i, j)] = static_cast<uint8_t>(t < 0 ? t + p_ : t);
  }

  const uint8_t* data() const { return a_.data(); }
  uint8_t* data() { return a_.data(); }

  bool is_zero() const {
    for (uint8_t v : a_)
      if (v) return false;
    return true;
  }

  bool has_unit_diagonal() const {
    for (int i = 0; i < n_; ++i)
      if (at(i, i) != 1) return false;
    return true;
  }

  // Support contained in the poset's relations (diagonal ignored).
  bool supported_on(const Poset& P) const;

  FMatrix to_offset() const {  // u -> u - 1
    FMatrix m = *this;
    for (int i = 0; i < n_; ++i) m.set(i, i, (at(i, i) + p_ - 1) % p_);
    return m;
  }
  FMatrix to_group() const {  // x -> 1 + x
    FMatrix m = *this;
    for (int i = 0; i < n_; ++i) m.set(i, i, (at(i, i) + 1) % p_);
    return m;
  }

  FMatrix negated() const {
    FMatrix m(n_, p_);
    for (size_t k = 0; k < a_.size(); ++k)
      m.a_[k] = static_cast<uint8_t>(a_[k] ? p_ - a_[k] : 0);
    return m;
  }

  FMatrix transposed() const {
    FMatrix m(n_, p_);
    for (int i = 0; i < n_; ++i)
      for (int j = 0; j < n_; ++j) m.set(j, i, at(i, j));
    return m;
  }

  // Entry-wise pairing sum_{ij} a_{ij} b_{ij} mod p; applies a functional
  // (matrix form) to an algebra element.
  int pairing(const FMatrix& b) const {
    long long s = 0;
    for (size_t k = 0; k < a_.size(); ++k) s += int(a_[k]) * int(b.a_[k]);
    return static_cast<int>(s % p_);
  }

  bool operator==(const FMatrix& o) const {
    return n_ == o.n_ && p_ == o.p_ && a_ == o.a_;
  }
  bool operator!=(const FMatrix& o) const { return !(*this == o); }
  // Row-major lexicographic order with entries ordered 0 < 1 < ... < p-1.
  bool operator<(const FMatrix& o) const { return a_ < o.a_; }

  std::string str() const;

 private:
  size_t idx(int i, int j) const {
    return static_cast<size_t>(i) * static_cast<size_t>(n_) +
           static_cast<size_t>(j);
  }

  int n_, p_;
  std::vector<uint8_t> a_;
};

// c = a * b.  All three must share shape and prime; c may not alias a or b.
void mat_mul_into(const FMatrix& a, const FMatrix& b, FMatrix& c);

// Triangular fast paths for the induction kernels: u unipotent (unit
// diagonal), x strictly upper triangular, out strictly upper.  `out` must
// start with a zero lower half and may not alias the inputs.
void mul_group_nil_into(const FMatrix& u, const FMatrix& x, FMatrix& out);
void mul_nil_group_into(const FMatrix& x, const FMatrix& u, FMatrix& out);

FMatrix mat_mul(const FMatrix& a, const FMatrix& b);

// Inverse of a unipotent matrix via the finite Neumann series
// (1 + N)^{-1} = 1 - N + N^2 - ...
FMatrix unipotent_inverse(const FMatrix& u);

// Mixed-radix key of the entries at `positions` (first position is the most
// significant digit).  Requires p^{#positions} to fit in 64 bits, which every
// budget-checked enumeration guarantees.
uint64_t encode_on(const FMatrix& m,
                   const std::vector<std::pair<int, int>>& positions);

FMatrix decode_on(uint64_t key, int n, int p,
                  const std::vector<std::pair<int, int>>& positions);

}  // namespace sct
