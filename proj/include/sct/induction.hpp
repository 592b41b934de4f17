#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "sct/superchar.hpp"

namespace sct {

// Induced class function, evaluable at any element of U_R.  Induction of a
// superclass function need not be a superclass function, so the values are
// kept per element and the constancy flag is computed explicitly instead of
// silently averaging.
struct PointFunction {
  std::vector<Cyclotomic> by_key;  // indexed by the element's offset key
  bool is_superclass_function = false;
  const Cyclotomic& at_key(uint64_t k) const { return by_key[size_t(k)]; }
};

struct FrobeniusReport {
  bool all_pass = true;
  std::vector<std::string> failures;
  int pairs_checked = 0;
};

// Per-subgroup-supercharacter outcome of the superinduction vs induction
// comparison, together with what the sufficient-condition checkers predicted.
struct CompareReport {
  bool containment_predicts = false;  // conditions (1) + (2)/(2')
  bool semidirect_predicts = false;   // needs a normal pattern complement
  bool coset_predicts = false;        // coset representative condition
  bool any_predicts() const {
    return containment_predicts || semidirect_predicts ||
           coset_predicts;
  }
  struct PerCharacter {
    bool equal = false;
    bool ind_is_superclass_function = false;
  };
  std::vector<PerCharacter> per_char;
  bool all_equal() const {
    for (const auto& pc : per_char)
      if (!pc.equal) return false;
    return true;
  }
};

// A nested pair of pattern groups U_P <= U_R on a common ground set, with
// the machinery for restriction, induction and superinduction of superclass
// functions between them.
//
// The double sums are organized as integer class-pair counts
//   counts[c][h] = #{(x, y) in G x G : x (g_c - 1) y + 1 lies in H-class h}
// so that superinducing any class function is a rational combination of one
// count matrix.  Count accumulation parallelizes over the outer enumeration
// with per-worker accumulators merged at the end; results are identical to
// the serial reference.
class Embedding {
 public:
  using ClassFunction = Theory::ClassFunction;

  Embedding(const Poset& sub, const Poset& super, int p, Budget budget = {},
            bool parallel = true);

  Theory& sub() { return *H_; }
  Theory& super() { return *G_; }
  const Theory& sub() const { return *H_; }
  const Theory& super() const { return *G_; }
  uint64_t index() const { return G_->order() / H_->order(); }

  // ---- the three functors --------------------------------------------
  ClassFunction restrict_down(const ClassFunction& f_on_G) const;
  ClassFunction superinduce(const ClassFunction& f_on_H);
  // Independent route: average the induced class function over x(g-1)+1.
  // Must agree with superinduce everywhere.
  ClassFunction superinduce_via_induction(const ClassFunction& f_on_H);
  PointFunction induce(const ClassFunction& f_on_H);

  // Superinduction evaluated at one arbitrary element (not just class
  // representatives); used to verify constancy on superclasses.
  Cyclotomic superinduce_at(const ClassFunction& f_on_H, const FMatrix& g);

  // ---- verification suites ---------------------------------------------
  FrobeniusReport verify_frobenius();
  CompareReport compare_sind_ind();

  // Companion condition to the containment checks: no two H-superclasses
  // lie in the same G-superclass.
  bool distinct_superclasses_stay_distinct() const;

  // H-class index of 1 + m for m an offset key over R, or -1 when the
  // element lies outside U_P.
  int h_class_of_key(uint64_t k) const { return h_class_of_[size_t(k)]; }

  // counts[c][h] as above; byproduct of superinduce, exposed for benchmarks.
  const std::vector<std::vector<int64_t>>& sind_class_counts();
  const std::vector<std::vector<int64_t>>& ind_element_counts();

  bool parallel_enabled() const { return parallel_; }
  void set_parallel(bool on) { parallel_ = on; }

 private:
  std::vector<int64_t> sind_counts_at(const FMatrix& g_minus_1) const;
  void ensure_elements();
  void ensure_sind_counts();
  void ensure_ind_counts();

  Poset P_, R_;
  int p_;
  Budget budget_;
  bool parallel_;
  std::unique_ptr<Theory> H_, G_;

  std::vector<int> h_class_of_;      // offset key over R -> H class or -1
  std::vector<FMatrix> g_elements_;  // all of U_R (enumeration order)
  std::vector<std::vector<int64_t>> sind_counts_;  // [G class][H class]
  std::vector<std::vector<int64_t>> ind_counts_;   // [element key][H class]
  bool sind_built_ = false;
  bool ind_built_ = false;
};

}  // namespace sct
