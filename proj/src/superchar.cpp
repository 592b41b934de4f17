#include "sct/superchar.hpp"

#include <algorithm>
#include <deque>
#include <unordered_set>

namespace sct {

Theory::Theory(Poset P, int p, Budget budget, bool parallel)
    : P_(std::move(P)), p_(p), budget_(budget), parallel_(parallel) {
  if (p_ < 2) throw std::invalid_argument("Theory: prime must be at least 2");
  for (int d = 2; d * d <= p_; ++d)
    if (p_ % d == 0)
      throw std::invalid_argument("Theory: " + std::to_string(p_) +
                                  " is not prime");
  order_ = group_order(P_, p_, budget_);
  rels_ = P_.relations();
  build_orbits();
}

void Theory::apply_generator_moves(
    const FMatrix& m, bool left, bool right, bool dual,
    const std::function<void(const FMatrix&)>& out) const {
  const int n = P_.n();
  for (auto [i, j] : rels_) {
    for (int t = 1; t < p_; ++t) {
      if (left) {
        FMatrix m2 = m;
        if (!dual) {
          // (1 + t e_ij) * m: row i += t * row j.
          for (int k = 0; k < n; ++k)
            if (m.at(j, k)) m2.add_at(i, k, t * m.at(j, k));
        } else {
          // row j += t * row i, then project onto the P-support.
          for (int k = 0; k < n; ++k)
            if (m.at(i, k)) m2.add_at(j, k, t * m.at(i, k));
          for (int k = 0; k < n; ++k)
            if (m2.at(j, k) && !P_.less(j, k)) m2.set(j, k, 0);
        }
        out(m2);
      }
      if (right) {
        FMatrix m2 = m;
        if (!dual) {
          // m * (1 + t e_ij): col j += t * col i.
          for (int k = 0; k < n; ++k)
            if (m.at(k, i)) m2.add_at(k, j, t * m.at(k, i));
        } else {
          // col i += t * col j, then project.
          for (int k = 0; k < n; ++k)
            if (m.at(k, j)) m2.add_at(k, i, t * m.at(k, j));
          for (int k = 0; k < n; ++k)
            if (m2.at(k, i) && !P_.less(k, i)) m2.set(k, i, 0);
        }
        out(m2);
      }
    }
  }
}

std::vector<uint64_t> Theory::closure(uint64_t start, bool left, bool right,
                                      bool dual) const {
  std::vector<uint64_t> keys{start};
  std::unordered_set<uint64_t> seen{start};
  std::deque<uint64_t> queue{start};
  while (!queue.empty()) {
    FMatrix m = nil_of(queue.front());
    queue.pop_front();
    apply_generator_moves(m, left, right, dual, [&](const FMatrix& m2) {
      uint64_t k = key_of(m2);
      if (seen.insert(k).second) {
        keys.push_back(k);
        queue.push_back(k);
      }
    });
  }
  std::sort(keys.begin(), keys.end());
  return keys;
}

FMatrix Theory::total_order_reduced_rep(
    const std::vector<uint64_t>& keys) const {
  const int n = P_.n();
  FMatrix found(0, 0);
  int hits = 0;
  for (uint64_t k : keys) {
    FMatrix m = nil_of(k);
    bool ok = true;
    for (int i = 0; i < n && ok; ++i) {
      int in_row = 0, in_col = 0;
      for (int j = 0; j < n; ++j) {
        if (m.at(i, j)) ++in_row;
        if (m.at(j, i)) ++in_col;
      }
      ok = in_row <= 1 && in_col <= 1;
    }
    if (ok) {
      ++hits;
      found = m;
    }
  }
  if (hits != 1)
    throw ConsistencyError(
        "orbit of a total order does not contain a unique row/column reduced "
        "element (found " +
        std::to_string(hits) + ")");
  return found;
}

void Theory::build_orbits() {
  const bool total = (P_ == Poset::total(P_.n()));
  const size_t N = static_cast<size_t>(order_);

  class_of_.assign(N, -1);
  for (uint64_t k = 0; k < order_; ++k) {
    if (class_of_[size_t(k)] >= 0) continue;
    Orbit orb;
    orb.keys = closure(k, true, true, /*dual=*/false);
    int id = static_cast<int>(classes_.size());
    for (uint64_t e : orb.keys) class_of_[size_t(e)] = id;
    orb.rep = total ? total_order_reduced_rep(orb.keys) : nil_of(orb.keys[0]);
    classes_.push_back(std::move(orb));
  }

  dual_of_.assign(N, -1);
  for (uint64_t k = 0; k < order_; ++k) {
    if (dual_of_[size_t(k)] >= 0) continue;
    Orbit orb;
    orb.keys = closure(k, true, true, /*dual=*/true);
    int id = static_cast<int>(duals_.size());
    for (uint64_t e : orb.keys) dual_of_[size_t(e)] = id;
    orb.rep = total ? total_order_reduced_rep(orb.keys) : nil_of(orb.keys[0]);
    duals_.push_back(std::move(orb));
  }

  left_sizes_.resize(duals_.size());
  for (size_t r = 0; r < duals_.size(); ++r)
    left_sizes_[r] = closure(key_of(duals_[r].rep), true, false, true).size();
}

int Theory::class_of_nil(const FMatrix& x) const {
  if (!x.supported_on(P_))
    throw std::invalid_argument("class_of_nil: matrix not supported on the poset");
  return class_of_[size_t(key_of(x))];
}

int Theory::char_of_nil(const FMatrix& lambda) const {
  if (!lambda.supported_on(P_))
    throw std::invalid_argument("char_of_nil: functional not supported on the poset");
  return dual_of_[size_t(key_of(lambda))];
}

Orbit Theory::superclass_orbit(const FMatrix& u) const {
  FMatrix x = u.to_offset();
  int c = class_of_nil(x);
  return classes_[size_t(c)];
}

Orbit Theory::dual_orbit_of(const FMatrix& lambda) const {
  return duals_[size_t(char_of_nil(lambda))];
}

std::vector<uint64_t> Theory::left_orbit_of(const FMatrix& lambda) const {
  return closure(key_of(lambda), true, false, true);
}

FMatrix Theory::dual_act(const FMatrix& u, const FMatrix& lambda,
                         const FMatrix& v) const {
  FMatrix lt = mat_mul(mat_mul(group_inv(u).transposed(), lambda),
                       group_inv(v).transposed());
  for (int i = 0; i < P_.n(); ++i)
    for (int j = 0; j < P_.n(); ++j)
      if (lt.at(i, j) && !P_.less(i, j)) lt.set(i, j, 0);
  return lt;
}

void Theory::ensure_table() const {
  if (table_built_) return;
  const int R = num_chars();
  const int C = num_classes();
  table_.assign(size_t(R), std::vector<Cyclotomic>());

  auto build_row = [&](int r) {
    const Orbit& orb = duals_[size_t(r)];
    Rational coeff(BigInt(left_sizes_[size_t(r)]), BigInt(orb.size()));
    std::vector<std::vector<uint64_t>> counts(size_t(C),
                                              std::vector<uint64_t>(size_t(p_), 0));
    for (uint64_t k : orb.keys) {
      FMatrix mu = nil_of(k);
      for (int c = 0; c < C; ++c) {
        // Sum over U(-lambda)U: negate the pairing of the stored orbit.
        int r0 = mu.pairing(classes_[size_t(c)].rep);
        counts[size_t(c)][size_t((p_ - r0) % p_)]++;
      }
    }
    std::vector<Cyclotomic> row;
    row.reserve(size_t(C));
    for (int c = 0; c < C; ++c) {
      Cyclotomic v(p_);
      for (int t = 0; t < p_; ++t)
        if (counts[size_t(c)][size_t(t)])
          v += Cyclotomic::root_power(p_, t)
                   .scaled(Rational(BigInt(counts[size_t(c)][size_t(t)])));
      row.push_back(v.scaled(coeff));
    }
    table_[size_t(r)] = std::move(row);
  };

  if (parallel_) {
#pragma omp parallel for schedule(dynamic)
    for (int r = 0; r < R; ++r) build_row(r);
  } else {
    for (int r = 0; r < R; ++r) build_row(r);
  }
  table_built_ = true;
}

const Cyclotomic& Theory::value(int r, int c) const {
  ensure_table();
  return table_[size_t(r)][size_t(c)];
}

Cyclotomic Theory::value_at(int r, const FMatrix& u) const {
  FMatrix x = u.to_offset();
  if (!x.supported_on(P_))
    throw std::invalid_argument("value_at: element not in the pattern group");
  const Orbit& orb = duals_[size_t(r)];
  std::vector<uint64_t> counts(size_t(p_), 0);
  for (uint64_t k : orb.keys) {
    int r0 = nil_of(k).pairing(x);
    counts[size_t((p_ - r0) % p_)]++;
  }
  Cyclotomic v(p_);
  for (int t = 0; t < p_; ++t)
    if (counts[size_t(t)])
      v += Cyclotomic::root_power(p_, t)
               .scaled(Rational(BigInt(counts[size_t(t)])));
  return v.scaled(
      Rational(BigInt(left_sizes_[size_t(r)]), BigInt(orb.size())));
}

Theory::ClassFunction Theory::character_row(int r) const {
  ensure_table();
  return table_[size_t(r)];
}

Theory::ClassFunction Theory::trivial_character() const {
  return ClassFunction(size_t(num_classes()),
                       Cyclotomic::from_rational(p_, Rational(1)));
}

Theory::ClassFunction Theory::regular_character() const {
  ClassFunction f(static_cast<size_t>(num_classes()), Cyclotomic(p_));
  f[size_t(class_of_key(0))] =
      Cyclotomic::from_rational(p_, Rational(BigInt(order_)));
  return f;
}

Cyclotomic Theory::inner_product(const ClassFunction& f,
                                 const ClassFunction& g) const {
  if (f.size() != size_t(num_classes()) || g.size() != size_t(num_classes()))
    throw std::invalid_argument("inner_product: mismatched class function domains");
  Cyclotomic acc(p_);
  for (int c = 0; c < num_classes(); ++c) {
    Cyclotomic term = f[size_t(c)] * g[size_t(c)].conj();
    acc += term.scaled(Rational(BigInt(classes_[size_t(c)].size())));
  }
  return acc.scaled(Rational(BigInt(1), BigInt(order_)));
}

std::vector<Rational> Theory::decompose(const ClassFunction& f) const {
  ensure_table();
  std::vector<Rational> coeffs;
  coeffs.reserve(size_t(num_chars()));
  for (int r = 0; r < num_chars(); ++r) {
    Cyclotomic num = inner_product(f, table_[size_t(r)]);
    Cyclotomic den = inner_product(table_[size_t(r)], table_[size_t(r)]);
    if (!num.is_rational() || !den.is_rational())
      throw ConsistencyError("decompose: non-rational coefficient");
    coeffs.push_back(num.rational_part() / den.rational_part());
  }
  // The supercharacters span the superclass functions; a residual means an
  // orbit computation went wrong.
  for (int c = 0; c < num_classes(); ++c) {
    Cyclotomic sum(p_);
    for (int r = 0; r < num_chars(); ++r) {
      if (coeffs[size_t(r)].is_zero()) continue;
      sum += table_[size_t(r)][size_t(c)].scaled(coeffs[size_t(r)]);
    }
    if (sum != f[size_t(c)])
      throw ConsistencyError("decompose: reconstruction residual at class " +
                             std::to_string(c));
  }
  return coeffs;
}

const std::vector<int>& Theory::conjugacy_class_of() const {
  if (conj_built_) return conj_class_of_;
  const size_t N = static_cast<size_t>(order_);
  conj_class_of_.assign(N, -1);
  int next = 0;
  for (uint64_t k0 = 0; k0 < order_; ++k0) {
    if (conj_class_of_[size_t(k0)] >= 0) continue;
    int id = next++;
    std::deque<uint64_t> queue{k0};
    conj_class_of_[size_t(k0)] = id;
    while (!queue.empty()) {
      FMatrix u = nil_of(queue.front()).to_group();
      queue.pop_front();
      for (auto [i, j] : rels_) {
        for (int t = 1; t < p_; ++t) {
          FMatrix g = FMatrix::identity(P_.n(), p_);
          g.set(i, j, t);
          FMatrix v = mat_mul(mat_mul(group_inv(g), u), g);
          uint64_t k = key_of(v.to_offset());
          if (conj_class_of_[size_t(k)] < 0) {
            conj_class_of_[size_t(k)] = id;
            queue.push_back(k);
          }
        }
      }
    }
  }
  conj_built_ = true;
  return conj_class_of_;
}

AxiomReport Theory::validate_axioms() const {
  ensure_table();
  AxiomReport rep;

  rep.counts_equal = (num_classes() == num_chars());
  if (!rep.counts_equal)
    rep.failures.push_back("superclass count " + std::to_string(num_classes()) +
                           " differs from supercharacter count " +
                           std::to_string(num_chars()));

  // (b) superclasses are unions of conjugacy classes: the conjugacy class id
  // must be constant-to-one within each superclass, i.e. each conjugacy
  // class lands in a single superclass.
  const auto& conj = conjugacy_class_of();
  std::vector<int> conj_to_super;
  rep.classes_union_of_conjugacy = true;
  for (uint64_t k = 0; k < order_; ++k) {
    int cc = conj[size_t(k)];
    if (size_t(cc) >= conj_to_super.size()) conj_to_super.resize(size_t(cc) + 1, -1);
    int sc = class_of_[size_t(k)];
    if (conj_to_super[size_t(cc)] < 0) conj_to_super[size_t(cc)] = sc;
    if (conj_to_super[size_t(cc)] != sc) {
      rep.classes_union_of_conjugacy = false;
      rep.failures.push_back("conjugacy class split across superclasses");
      break;
    }
  }

  // (d) every supercharacter is constant on every superclass.
  rep.constant_on_superclasses = true;
  if (order_ <= (1ull << 12)) {
    for (int r = 0; r < num_chars() && rep.constant_on_superclasses; ++r)
      for (int c = 0; c < num_classes() && rep.constant_on_superclasses; ++c)
        for (uint64_t k : classes_[size_t(c)].keys)
          if (value_at(r, nil_of(k).to_group()) != table_[size_t(r)][size_t(c)]) {
            rep.constant_on_superclasses = false;
            rep.failures.push_back("character " + std::to_string(r) +
                                   " not constant on superclass " +
                                   std::to_string(c));
            break;
          }
  }

  // Orthogonality and positivity stand in for axiom (c), which quantifies
  // over irreducible characters we do not compute.
  rep.rows_orthogonal = true;
  rep.norms_positive_rational = true;
  for (int r = 0; r < num_chars(); ++r) {
    for (int s = r; s < num_chars(); ++s) {
      Cyclotomic ip = inner_product(table_[size_t(r)], table_[size_t(s)]);
      if (r == s) {
        if (!ip.is_rational() || !(ip.rational_part() > Rational(0))) {
          rep.norms_positive_rational = false;
          rep.failures.push_back("norm of character " + std::to_string(r) +
                                 " not a positive rational");
        }
      } else if (!ip.is_zero()) {
        rep.rows_orthogonal = false;
        rep.failures.push_back("characters " + std::to_string(r) + " and " +
                               std::to_string(s) + " not orthogonal");
      }
    }
  }

  rep.regular_decomposes_positively = true;
  try {
    auto coeffs = decompose(regular_character());
    for (const auto& c : coeffs)
      if (!(c > Rational(0))) rep.regular_decomposes_positively = false;
  } catch (const ConsistencyError& e) {
    rep.regular_decomposes_positively = false;
    rep.failures.push_back(std::string("regular character: ") + e.what());
  }
  if (!rep.regular_decomposes_positively)
    rep.failures.push_back("regular character decomposition not positive");

  rep.degrees_match_left_orbits = true;
  for (int r = 0; r < num_chars(); ++r) {
    const Cyclotomic& at_one = table_[size_t(r)][size_t(class_of_key(0))];
    if (!at_one.is_rational() ||
        at_one.rational_part() != Rational(BigInt(left_sizes_[size_t(r)]))) {
      rep.degrees_match_left_orbits = false;
      rep.failures.push_back("degree of character " + std::to_string(r) +
                             " differs from its left orbit size");
    }
  }

  return rep;
}

}  // namespace sct
