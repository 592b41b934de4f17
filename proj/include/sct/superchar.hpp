#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "sct/cyclotomic.hpp"
#include "sct/errors.hpp"
#include "sct/group.hpp"
#include "sct/matrix.hpp"
#include "sct/poset.hpp"

namespace sct {

// A two-sided orbit, either of superclass offsets u - 1 in n_P or of dual
// functionals lambda.  Elements are stored as mixed-radix keys over the
// poset's relation positions, sorted ascending; the representative is the
// canonical element (see Theory).
struct Orbit {
  FMatrix rep;
  std::vector<uint64_t> keys;
  uint64_t size() const { return keys.size(); }
};

struct AxiomReport {
  bool counts_equal = false;
  bool classes_union_of_conjugacy = false;
  bool constant_on_superclasses = false;
  bool rows_orthogonal = false;
  bool norms_positive_rational = false;
  bool regular_decomposes_positively = false;
  bool degrees_match_left_orbits = false;
  std::vector<std::string> failures;
  bool all_pass() const { return failures.empty(); }
};

// The supercharacter theory of one pattern group U_P(F_p): superclasses,
// dual orbits, exact character values in Q(zeta_p), inner products and
// decomposition into the supercharacter basis.
//
// Values are immutable once built; building the character table parallelizes
// over rows.
class Theory {
 public:
  // Class functions are value vectors aligned with superclass indices.
  using ClassFunction = std::vector<Cyclotomic>;

  Theory(Poset P, int p, Budget budget = {}, bool parallel = true);

  const Poset& poset() const { return P_; }
  int prime() const { return p_; }
  uint64_t order() const { return order_; }
  const Budget& budget() const { return budget_; }

  // --- superclasses ---------------------------------------------------
  int num_classes() const { return static_cast<int>(classes_.size()); }
  const Orbit& superclass(int c) const { return classes_[size_t(c)]; }
  // Representative offsets u - 1; for total orders this is the unique
  // element with at most one nonzero entry per row and column.
  const FMatrix& class_rep(int c) const { return classes_[size_t(c)].rep; }
  int class_of_key(uint64_t key) const { return class_of_[size_t(key)]; }
  int class_of_nil(const FMatrix& x) const;
  int class_of_group_element(const FMatrix& u) const {
    return class_of_nil(u.to_offset());
  }

  // --- supercharacters (dual orbits) ----------------------------------
  int num_chars() const { return static_cast<int>(duals_.size()); }
  const Orbit& dual_orbit(int r) const { return duals_[size_t(r)]; }
  const FMatrix& char_rep(int r) const { return duals_[size_t(r)].rep; }
  uint64_t left_orbit_size(int r) const { return left_sizes_[size_t(r)]; }
  int char_of_nil(const FMatrix& lambda) const;

  // chi^r evaluated on superclass c (cached table) or at an arbitrary group
  // element.
  const Cyclotomic& value(int r, int c) const;
  Cyclotomic value_at(int r, const FMatrix& u) const;
  // chi^r(1) = |U lambda|.
  Rational degree(int r) const { return Rational(BigInt(left_orbit_size(r))); }

  ClassFunction character_row(int r) const;
  ClassFunction trivial_character() const;
  ClassFunction regular_character() const;

  // (1/|G|) sum over classes of |class| * f * conj(g).
  Cyclotomic inner_product(const ClassFunction& f, const ClassFunction& g) const;

  // Exact coordinates of f in the supercharacter basis; coefficients must
  // come out rational and the reconstruction must match f exactly, otherwise
  // a ConsistencyError signals an orbit-computation bug.
  std::vector<Rational> decompose(const ClassFunction& f) const;

  AxiomReport validate_axioms() const;

  // --- orbit engines ---------------------------------------------------
  // Closure of v - 1 under two-sided multiplication by U_P.
  Orbit superclass_orbit(const FMatrix& group_element) const;
  // Closure of lambda under the dual two-sided action (transpose-multiply
  // then project onto the P-support).
  Orbit dual_orbit_of(const FMatrix& lambda) const;
  std::vector<uint64_t> left_orbit_of(const FMatrix& lambda) const;
  // Full dual action u.lambda.v = proj(Tr(u^-1) lambda Tr(v^-1)); used by
  // property tests against the generator closure.
  FMatrix dual_act(const FMatrix& u, const FMatrix& lambda,
                   const FMatrix& v) const;

  uint64_t key_of(const FMatrix& nil) const { return encode_on(nil, rels_); }
  FMatrix nil_of(uint64_t key) const {
    return decode_on(key, P_.n(), p_, rels_);
  }

  // Conjugacy classes (by BFS under generator conjugation); built on demand
  // for the axiom (b) check.
  const std::vector<int>& conjugacy_class_of() const;

 private:
  void build_orbits();
  void ensure_table() const;
  std::vector<uint64_t> closure(uint64_t start, bool left, bool right,
                                bool dual) const;
  void apply_generator_moves(const FMatrix& m, bool left, bool right,
                             bool dual,
                             const std::function<void(const FMatrix&)>& out) const;
  FMatrix total_order_reduced_rep(const std::vector<uint64_t>& keys) const;

  Poset P_;
  int p_;
  Budget budget_;
  bool parallel_;
  uint64_t order_;
  std::vector<std::pair<int, int>> rels_;  // row-major, the key digit order

  std::vector<Orbit> classes_;
  std::vector<int> class_of_;
  std::vector<Orbit> duals_;
  std::vector<int> dual_of_;
  std::vector<uint64_t> left_sizes_;

  mutable std::vector<std::vector<Cyclotomic>> table_;
  mutable bool table_built_ = false;
  mutable std::vector<int> conj_class_of_;
  mutable bool conj_built_ = false;
};

}  // namespace sct
