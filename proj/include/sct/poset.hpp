#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace sct {

// Strict partial order on {0, ..., n-1} refining the natural integer order:
// every relation (i, j) satisfies i < j as integers, and the relation set is
// transitively closed.  Defines the pattern group of unipotent
// upper-triangular matrices supported on the relations.
//
// Indices are 0-based internally; all text and JSON interfaces are 1-based.
class Poset {
 public:
  // Builds from covering (or arbitrary) relations; computes the transitive
  // closure.  Rejects n < 1 and any pair with i >= j, since a relation that
  // does not refine the integer order could never carry a matrix entry.
  static Poset from_covers(int n, const std::vector<std::pair<int, int>>& covers);

  static Poset total(int n);
  static Poset antichain(int n);
  // U_{n-1} inside U_n avoiding the last column: pairs (i,j) with j < n-1.
  static Poset last_column(int n);
  // U_{n-1} inside U_n avoiding the first row: pairs (i,j) with i > 0.
  static Poset first_row(int n);
  // The subgroup of U_n with u_{0j} = 0 for j < m (1-based: u_{1j} = 0 for
  // j <= m).  m = 0 gives U_n, m = n gives the first-row embedding.
  static Poset chain_um(int n, int m);
  // Block-diagonal U_m x U_n inside U_{m+n}.
  static Poset product(int m, int n);

  // Named builder strings: "total:n", "antichain:n", "last-column:n",
  // "first-row:n", "chain-Um:n:m", "product:U_m x U_n".
  static Poset parse_spec(const std::string& spec);

  int n() const { return n_; }
  // Relations in row-major order (sorted by (i, j)).
  const std::vector<std::pair<int, int>>& relations() const { return rel_; }
  int num_relations() const { return static_cast<int>(rel_.size()); }
  bool less(int i, int j) const { return leq_[idx(i, j)]; }

  // Relation containment: every relation of this poset is one of `other`.
  bool subset_of(const Poset& other) const;

  // Position of (i, j) in relations(), or -1.
  int relation_index(int i, int j) const { return rel_index_[idx(i, j)]; }

  // Relations sorted by the fixed element-enumeration total order:
  // (k,l) before (i,j) iff k > i, or k == i and l > j (rows bottom-up,
  // columns right-to-left within a row).
  std::vector<std::pair<int, int>> enumeration_order_relations() const;

  bool operator==(const Poset& o) const { return n_ == o.n_ && rel_ == o.rel_; }

  // Compact display such as "{1<2, 1<3, 2<3}" (1-based).
  std::string str() const;

 private:
  Poset() = default;
  size_t idx(int i, int j) const {
    return static_cast<size_t>(i) * static_cast<size_t>(n_) +
           static_cast<size_t>(j);
  }
  void finalize();  // rebuild rel_ / rel_index_ from leq_

  int n_ = 0;
  std::vector<bool> leq_;       // n*n strict-order adjacency
  std::vector<int> rel_index_;  // n*n -> index in rel_, or -1
  std::vector<std::pair<int, int>> rel_;
};

// The relation set R/P: pairs of R not in P.  Not necessarily transitively
// closed.  Precondition: P subset of R on the same ground set.
std::vector<std::pair<int, int>> quotient_relations(const Poset& P,
                                                    const Poset& R);

}  // namespace sct
