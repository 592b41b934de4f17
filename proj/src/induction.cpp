#include "sct/induction.hpp"

#include <algorithm>

namespace sct {

Embedding::Embedding(const Poset& sub, const Poset& super, int p,
                     Budget budget, bool parallel)
    : P_(sub), R_(super), p_(p), budget_(budget), parallel_(parallel) {
  if (sub.n() != super.n() || !sub.subset_of(super))
    throw std::invalid_argument(
        "Embedding: sub poset must refine the super poset on the same ground set");
  H_ = std::make_unique<Theory>(P_, p_, budget_, parallel_);
  G_ = std::make_unique<Theory>(R_, p_, budget_, parallel_);

  // Membership and H-class lookup for every offset key over R.
  h_class_of_.assign(size_t(G_->order()), -1);
  for (uint64_t k = 0; k < G_->order(); ++k) {
    FMatrix m = G_->nil_of(k);
    if (m.supported_on(P_)) h_class_of_[size_t(k)] = H_->class_of_nil(m);
  }
}

void Embedding::ensure_elements() {
  if (!g_elements_.empty()) return;
  g_elements_ = enumerate_group(R_, p_, budget_);
}

std::vector<int64_t> Embedding::sind_counts_at(const FMatrix& g_minus_1) const {
  const auto& G = *G_;
  const int H_classes = H_->num_classes();
  const size_t NG = g_elements_.size();
  std::vector<int64_t> counts(size_t(H_classes), 0);

  auto run_range = [&](size_t lo, size_t hi, std::vector<int64_t>& acc) {
    const int n = R_.n();
    FMatrix t(n, p_), m(n, p_);
    for (size_t yi = lo; yi < hi; ++yi) {
      mul_nil_group_into(g_minus_1, g_elements_[yi], t);
      for (size_t xi = 0; xi < NG; ++xi) {
        mul_group_nil_into(g_elements_[xi], t, m);
        int h = h_class_of_[size_t(G.key_of(m))];
        if (h >= 0) acc[size_t(h)]++;
      }
    }
  };

  if (parallel_) {
#pragma omp parallel
    {
      std::vector<int64_t> local(size_t(H_classes), 0);
#pragma omp for schedule(static) nowait
      for (long long yi = 0; yi < static_cast<long long>(NG); ++yi)
        run_range(size_t(yi), size_t(yi) + 1, local);
#pragma omp critical
      for (size_t h = 0; h < local.size(); ++h) counts[h] += local[h];
    }
  } else {
    run_range(0, NG, counts);
  }
  return counts;
}

void Embedding::ensure_sind_counts() {
  if (sind_built_) return;
  uint64_t pairs = G_->order() * G_->order();
  if (pairs > budget_.max_summands)
    throw BudgetError("superinduction double sum", pairs, budget_.max_summands);
  ensure_elements();
  sind_counts_.resize(size_t(G_->num_classes()));
  for (int c = 0; c < G_->num_classes(); ++c)
    sind_counts_[size_t(c)] = sind_counts_at(G_->class_rep(c));
  sind_built_ = true;
}

const std::vector<std::vector<int64_t>>& Embedding::sind_class_counts() {
  ensure_sind_counts();
  return sind_counts_;
}

void Embedding::ensure_ind_counts() {
  if (ind_built_) return;
  uint64_t pairs = G_->order() * G_->order();
  if (pairs > budget_.max_summands)
    throw BudgetError("induction pointwise table", pairs, budget_.max_summands);
  ensure_elements();
  const size_t NG = g_elements_.size();
  const int H_classes = H_->num_classes();
  ind_counts_.assign(size_t(G_->order()),
                     std::vector<int64_t>(size_t(H_classes), 0));
  // Precompute inverses once; Ind(f)(g) averages f over y^{-1} (g-1) y.
  std::vector<FMatrix> inverses(NG);
  for (size_t yi = 0; yi < NG; ++yi) inverses[yi] = group_inv(g_elements_[yi]);

  auto do_element = [&](uint64_t gk) {
    const int n = R_.n();
    FMatrix gm1 = G_->nil_of(gk);
    FMatrix t(n, p_), m(n, p_);
    auto& row = ind_counts_[size_t(gk)];
    for (size_t yi = 0; yi < NG; ++yi) {
      mul_group_nil_into(inverses[yi], gm1, t);
      mul_nil_group_into(t, g_elements_[yi], m);
      int h = h_class_of_[size_t(G_->key_of(m))];
      if (h >= 0) row[size_t(h)]++;
    }
  };

  if (parallel_) {
#pragma omp parallel for schedule(static)
    for (long long gk = 0; gk < static_cast<long long>(G_->order()); ++gk)
      do_element(uint64_t(gk));
  } else {
    for (uint64_t gk = 0; gk < G_->order(); ++gk) do_element(gk);
  }
  ind_built_ = true;
}

const std::vector<std::vector<int64_t>>& Embedding::ind_element_counts() {
  ensure_ind_counts();
  return ind_counts_;
}

Embedding::ClassFunction Embedding::restrict_down(
    const ClassFunction& f_on_G) const {
  if (f_on_G.size() != size_t(G_->num_classes()))
    throw std::invalid_argument("restrict: class function not on the super group");
  ClassFunction out;
  out.reserve(size_t(H_->num_classes()));
  for (int h = 0; h < H_->num_classes(); ++h) {
    // An H-superclass sits inside a single G-superclass (the two-sided
    // U_P-orbit is contained in the U_R-orbit); assert it at desk scale.
    const Orbit& horb = H_->superclass(h);
    int g_class = G_->class_of_nil(horb.rep);
    if (H_->order() <= (1ull << 12)) {
      for (uint64_t k : horb.keys)
        if (G_->class_of_nil(H_->nil_of(k)) != g_class)
          throw ConsistencyError("restrict: H-superclass split across G-superclasses");
    }
    out.push_back(f_on_G[size_t(g_class)]);
  }
  return out;
}

Embedding::ClassFunction Embedding::superinduce(const ClassFunction& f_on_H) {
  if (f_on_H.size() != size_t(H_->num_classes()))
    throw std::invalid_argument("superinduce: class function not on the subgroup");
  ensure_sind_counts();
  Rational scale(BigInt(1), BigInt(G_->order()) * BigInt(H_->order()));
  ClassFunction out;
  out.reserve(size_t(G_->num_classes()));
  for (int c = 0; c < G_->num_classes(); ++c) {
    Cyclotomic acc(p_);
    for (int h = 0; h < H_->num_classes(); ++h) {
      int64_t n = sind_counts_[size_t(c)][size_t(h)];
      if (n) acc += f_on_H[size_t(h)].scaled(Rational(BigInt(n)));
    }
    out.push_back(acc.scaled(scale));
  }
  return out;
}

Cyclotomic Embedding::superinduce_at(const ClassFunction& f_on_H,
                                     const FMatrix& g) {
  ensure_elements();
  auto counts = sind_counts_at(g.to_offset());
  Cyclotomic acc(p_);
  for (int h = 0; h < H_->num_classes(); ++h)
    if (counts[size_t(h)])
      acc += f_on_H[size_t(h)].scaled(Rational(BigInt(counts[size_t(h)])));
  return acc.scaled(Rational(BigInt(1), BigInt(G_->order()) * BigInt(H_->order())));
}

PointFunction Embedding::induce(const ClassFunction& f_on_H) {
  if (f_on_H.size() != size_t(H_->num_classes()))
    throw std::invalid_argument("induce: class function not on the subgroup");
  ensure_ind_counts();
  PointFunction out;
  out.by_key.reserve(size_t(G_->order()));
  Rational scale(BigInt(1), BigInt(H_->order()));
  for (uint64_t k = 0; k < G_->order(); ++k) {
    Cyclotomic acc(p_);
    for (int h = 0; h < H_->num_classes(); ++h) {
      int64_t n = ind_counts_[size_t(k)][size_t(h)];
      if (n) acc += f_on_H[size_t(h)].scaled(Rational(BigInt(n)));
    }
    out.by_key.push_back(acc.scaled(scale));
  }
  out.is_superclass_function = true;
  for (int c = 0; c < G_->num_classes() && out.is_superclass_function; ++c) {
    const auto& keys = G_->superclass(c).keys;
    for (size_t i = 1; i < keys.size(); ++i)
      if (out.by_key[size_t(keys[i])] != out.by_key[size_t(keys[0])]) {
        out.is_superclass_function = false;
        break;
      }
  }
  return out;
}

Embedding::ClassFunction Embedding::superinduce_via_induction(
    const ClassFunction& f_on_H) {
  PointFunction ind = induce(f_on_H);
  ensure_elements();
  // SInd(f)(g) = (1/|G|) sum_x Ind(f)(x (g-1) + 1).
  ClassFunction out;
  out.reserve(size_t(G_->num_classes()));
  const int n = R_.n();
  for (int c = 0; c < G_->num_classes(); ++c) {
    const FMatrix& gm1 = G_->class_rep(c);
    Cyclotomic acc(p_);
    FMatrix m(n, p_);
    for (const FMatrix& x : g_elements_) {
      mul_group_nil_into(x, gm1, m);
      acc += ind.by_key[size_t(G_->key_of(m))];
    }
    out.push_back(acc.scaled(Rational(BigInt(1), BigInt(G_->order()))));
  }
  return out;
}

bool Embedding::distinct_superclasses_stay_distinct() const {
  std::vector<char> hit(size_t(G_->num_classes()), 0);
  for (int h = 0; h < H_->num_classes(); ++h) {
    int g_class = G_->class_of_nil(H_->superclass(h).rep);
    if (hit[size_t(g_class)]) return false;
    hit[size_t(g_class)] = 1;
  }
  return true;
}

FrobeniusReport Embedding::verify_frobenius() {
  FrobeniusReport rep;
  std::vector<ClassFunction> sinds;
  sinds.reserve(size_t(H_->num_classes()));
  for (int r = 0; r < H_->num_chars(); ++r)
    sinds.push_back(superinduce(H_->character_row(r)));
  for (int rg = 0; rg < G_->num_chars(); ++rg) {
    ClassFunction res = restrict_down(G_->character_row(rg));
    for (int rh = 0; rh < H_->num_chars(); ++rh) {
      Cyclotomic lhs = G_->inner_product(sinds[size_t(rh)], G_->character_row(rg));
      Cyclotomic rhs = H_->inner_product(H_->character_row(rh), res);
      ++rep.pairs_checked;
      if (lhs != rhs) {
        rep.all_pass = false;
        rep.failures.push_back(
            "adjunction fails for sub-character " + std::to_string(rh) +
            " and super-character " + std::to_string(rg) + ": " + lhs.str() +
            " vs " + rhs.str());
      }
    }
  }
  return rep;
}

CompareReport Embedding::compare_sind_ind() {
  CompareReport rep;
  auto containment = check_containment_condition(P_, R_);
  rep.containment_predicts =
      distinct_superclasses_stay_distinct() && containment.either();
  rep.semidirect_predicts = false;
  if (auto K = complement_poset(P_, R_)) {
    if (K->num_relations() + P_.num_relations() == R_.num_relations() &&
        is_normal_in(*K, R_, p_)) {
      auto sd = check_semidirect_condition(P_, *K, R_, p_);
      rep.semidirect_predicts = sd.either();
    }
  }
  rep.coset_predicts = check_coset_condition(P_, R_, p_).either();

  for (int r = 0; r < H_->num_chars(); ++r) {
    ClassFunction f = H_->character_row(r);
    ClassFunction s = superinduce(f);
    PointFunction ind = induce(f);
    CompareReport::PerCharacter pc;
    pc.ind_is_superclass_function = ind.is_superclass_function;
    pc.equal = true;
    for (uint64_t k = 0; k < G_->order() && pc.equal; ++k)
      pc.equal = (ind.by_key[size_t(k)] == s[size_t(G_->class_of_key(k))]);
    if (rep.any_predicts() && !pc.equal)
      throw ConsistencyError(
          "a sufficient condition predicted SInd = Ind but the functions differ");
    rep.per_char.push_back(pc);
  }
  return rep;
}

}  // namespace sct
