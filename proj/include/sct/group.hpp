#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "sct/errors.hpp"
#include "sct/matrix.hpp"
#include "sct/poset.hpp"

namespace sct {

// Number of elements of U_P over F_p, i.e. p^{#relations}.  Throws
// BudgetError beyond the configured limit.
uint64_t group_order(const Poset& P, int p, const Budget& budget);

// Visits every element of U_P(F_p) exactly once, in the order induced by the
// fixed total order on matrix positions (rows bottom-up, columns
// right-to-left within a row; coefficient tuples compared lexicographically
// along it).  The first element is the identity.
void for_each_element(const Poset& P, int p, const Budget& budget,
                      const std::function<void(const FMatrix&)>& fn);

std::vector<FMatrix> enumerate_group(const Poset& P, int p,
                                     const Budget& budget);

// Same order, over the algebra n_P = U_P - 1 (strictly upper matrices
// supported on P); doubles as the enumeration of dual functionals.
void for_each_nil(const Poset& P, int p, const Budget& budget,
                  const std::function<void(const FMatrix&)>& fn);

FMatrix group_mul(const FMatrix& a, const FMatrix& b);
FMatrix group_inv(const FMatrix& a);

// The simultaneous left/right coset representative set
// I = {u in U_R | u_ij != 0 implies (i,j) in R/P}.
std::vector<FMatrix> coset_reps(const Poset& P, const Poset& R, int p,
                                const Budget& budget);

// Unique decomposition u = h * l with h in U_P and l in I.
struct Factorization {
  FMatrix h;
  FMatrix l;
};
Factorization factorize(const FMatrix& u, const Poset& P, const Poset& R);

// Outcome of a bilinear vanishing condition; `witness` names the offending
// relation pair when the condition fails.
struct CheckResult {
  bool holds = false;
  std::optional<std::pair<std::pair<int, int>, std::pair<int, int>>> witness;
  std::string describe(const std::string& name) const;
};

// Both orientations of a condition that has a left-module and a
// right-module (transposed) form.  Either one suffices for the
// superinduction = induction conclusions.
struct SidedCheck {
  CheckResult left;
  CheckResult right;
  bool either() const { return left.holds || right.holds; }
};

// (k-1)(h-1) = 0 for all h in U_H, k in U_K (left), and the transposed
// (h-1)(k-1) = 0 (right).  Requires U_G = U_H x| U_K: disjoint relation sets
// covering G with U_K normal in U_G; rejects other inputs.  The generator
// test is equivalent to the poset-level test; `exhaustive` additionally
// multiplies out all |U_K| x |U_H| pairs as a cross-check.
SidedCheck check_semidirect_condition(const Poset& H, const Poset& K,
                                      const Poset& G, int p,
                                      bool exhaustive = false,
                                      const Budget& budget = {});

// (l-1)(u-1) = 0 for all l in I, u in U_R (left) and the transposed variant
// (u-1)(l-1) = 0 (right).
SidedCheck check_coset_condition(const Poset& P, const Poset& R, int p,
                                 bool exhaustive = false,
                                 const Budget& budget = {});

// Poset-level containment condition: i<j in R and j<k in P imply i<k in P
// (left), with the transposed variant i<j in P and j<k in R imply i<k in P
// (right).
SidedCheck check_containment_condition(const Poset& P, const Poset& R);

// True when the relation set R/P is transitively closed, so that it defines
// a pattern group complement candidate.
std::optional<Poset> complement_poset(const Poset& P, const Poset& R);

// Semantic normality test: g k g^{-1} stays supported on K for all
// generators g of U_G and k of U_K.
bool is_normal_in(const Poset& K, const Poset& G, int p);

}  // namespace sct
