#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "sct/matrix.hpp"
#include "sct/rational.hpp"
#include "sct/superchar.hpp"

namespace sct {

// F_p-labeled set partition of {1..n} in arc-diagram form: each index is the
// left endpoint of at most one arc and the right endpoint of at most one arc,
// labels lie in {1..p-1}.  Parts are the maximal chains of arcs.  Indexes
// both superclasses and supercharacters of U_n; also serves as the recursion
// state of the Pieri-type products, where adding an arc into an occupied row
// or column is a hard failure rather than an input error.
class SetPartition {
 public:
  struct Arc {
    int src, dst, label;  // 0-based, src < dst
    auto operator<=>(const Arc&) const = default;
  };

  SetPartition(int n, int p);

  int n() const { return n_; }
  int prime() const { return p_; }

  int row_dst(int i) const { return to_[size_t(i)]; }
  int row_label(int i) const { return lab_[size_t(i)]; }
  int col_src(int j) const { return from_[size_t(j)]; }
  int label_of(int i, int j) const {
    return to_[size_t(i)] == j ? lab_[size_t(i)] : 0;
  }

  std::vector<Arc> arcs() const;
  int num_arcs() const;

  void add_arc(int i, int j, int label);
  void remove_arc(int i, int j);

  // Grammar: partition := part ("|" part)*;  part := index (arc index)*;
  // arc := "~" | "~(" label ")".  Indices are 1-based and must cover
  // {1..n} exactly once; n is the largest index present.
  static SetPartition parse(const std::string& text, int p);
  // Canonical text: parts ordered by smallest element, label 1 left implicit.
  std::string format() const;

  FMatrix to_matrix() const;
  // Requires at most one nonzero per row and per column.
  static SetPartition from_matrix(const FMatrix& m);

  // Ground set resizing: extending adds isolated elements; shrinking
  // requires the dropped tail to be isolated.
  SetPartition extended_to(int n) const;
  SetPartition shrunk_to(int n) const;

  // sum over arcs of (dst - src - 1); the supercharacter degree is
  // p^dim_exponent().
  int dim_exponent() const;

  bool operator==(const SetPartition& o) const {
    return n_ == o.n_ && p_ == o.p_ && to_ == o.to_ && lab_ == o.lab_;
  }
  bool operator<(const SetPartition& o) const;

 private:
  int n_, p_;
  std::vector<int> to_, lab_, from_;  // -1 / 0 when empty
};

// Every F_p-labeled set partition of {1..n}, each exactly once, in a fixed
// deterministic order.  The count is sum over set partitions of
// (p-1)^{#arcs}.
std::vector<SetPartition> enumerate_partitions(int n, int p,
                                               const Budget& budget = {});

// Formal finite linear combination of labeled set partitions with exact
// rational coefficients; zero coefficients are never stored.
class Combination {
 public:
  Combination(int n, int p) : n_(n), p_(p) {}

  static Combination single(const SetPartition& part) {
    Combination c(part.n(), part.prime());
    c.add(part, Rational(1));
    return c;
  }

  int n() const { return n_; }
  int prime() const { return p_; }

  void add(const SetPartition& part, const Rational& coeff);
  Combination& operator+=(const Combination& o);
  Combination scaled(const Rational& s) const;

  const std::map<SetPartition, Rational>& terms() const { return terms_; }
  size_t size() const { return terms_.size(); }
  Rational coeff(const SetPartition& part) const;

  bool operator==(const Combination& o) const {
    return n_ == o.n_ && p_ == o.p_ && terms_ == o.terms_;
  }

  // Terms sorted lexicographically on the formatted partition text.
  std::vector<std::pair<std::string, Rational>> sorted_terms() const;
  std::string str() const;

 private:
  int n_, p_;
  std::map<SetPartition, Rational> terms_;
};

// Recursive Pieri-type products on arc diagrams.  The memo table persists
// across calls so iterated inductions revisit shared states cheaply.
class Pieri {
 public:
  // mu *_i {k}: scans rows i, i+1, ..., k deciding what to attach to the
  // inserted element k.  0-based indices, i <= k < mu.n().
  Combination right(const SetPartition& mu, int i, int k);
  // {j} *_l mu: scans columns l, l-1, ..., j.
  Combination left(int j, int l, const SetPartition& mu);

 private:
  std::map<std::tuple<std::string, int, int>, Combination> right_memo_;
  std::map<std::tuple<std::string, int, int>, Combination> left_memo_;
};

// Iterated right product realizing induction along the last-column chain
// U_m <= U_{m+1} <= ... <= U_n: adjoins m+1, ..., n each at scan index 1.
// Verifies the exact degree identity
//   sum_lambda c_lambda p^{dim lambda} = p^{dim mu} * |U_n| / |U_m|.
Combination induce_combinatorial(const SetPartition& mu, int target_n,
                                 Pieri* engine = nullptr);

// Restriction from U_n to U_{n-1} (last-column embedding): the left product
// {i} *_n lambda when an arc i -> n exists, else the partition with n
// dropped.
Combination restrict_combinatorial(const SetPartition& lambda,
                                   Pieri* engine = nullptr);

// Induction along the first-row embedding: {1} *_n mu for mu a partition
// of {2..n} (element 1 isolated).
Combination induce_first_row(const SetPartition& mu, Pieri* engine = nullptr);

// A functional lambda on n_n is left minimal over mu (a partition of
// {1..n-1}) when it restricts to mu and carries the minimal number of
// nonzero entries in the last column within its dual orbit.  Computed
// semantically from the dual orbits of U_n; the minimizer in each qualifying
// orbit is unique, and non-uniqueness is a hard failure.
std::vector<FMatrix> left_minimal_set(const SetPartition& mu, int p,
                                      const Budget& budget = {});

// Fast predicate: lambda restricts to mu, and whenever rows i < j both hit
// the last column, row i also hits some column strictly between j and n.
bool is_left_minimal(const FMatrix& lambda, const SetPartition& mu);

}  // namespace sct
