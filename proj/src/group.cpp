#include "sct/group.hpp"

#include <stdexcept>

namespace sct {

uint64_t group_order(const Poset& P, int p, const Budget& budget) {
  unsigned __int128 count = 1;
  for (int k = 0; k < P.num_relations(); ++k) {
    count *= static_cast<unsigned __int128>(p);
    if (count > static_cast<unsigned __int128>(UINT64_MAX)) {
      count = UINT64_MAX;  // saturate; far beyond any usable budget anyway
      break;
    }
  }
  if (count > budget.max_elements)
    throw BudgetError("group enumeration over " + P.str(),
                      static_cast<uint64_t>(count), budget.max_elements);
  return static_cast<uint64_t>(count);
}

void for_each_nil(const Poset& P, int p, const Budget& budget,
                  const std::function<void(const FMatrix&)>& fn) {
  const uint64_t count = group_order(P, p, budget);
  const auto positions = P.enumeration_order_relations();
  FMatrix m(P.n(), p);
  fn(m);
  for (uint64_t key = 1; key < count; ++key) {
    // Odometer increment over the position list, least significant last.
    for (size_t k = positions.size(); k-- > 0;) {
      auto [i, j] = positions[k];
      int v = m.at(i, j) + 1;
      if (v < p) {
        m.set(i, j, v);
        break;
      }
      m.set(i, j, 0);
    }
    fn(m);
  }
}

void for_each_element(const Poset& P, int p, const Budget& budget,
                      const std::function<void(const FMatrix&)>& fn) {
  // The product prod (1 + t_ij e_ij) taken along the fixed total order
  // multiplies out with no cross terms, so group elements are exactly
  // 1 + (arbitrary P-supported strictly upper matrix).
  for_each_nil(P, p, budget,
               [&](const FMatrix& m) { fn(m.to_group()); });
}

std::vector<FMatrix> enumerate_group(const Poset& P, int p,
                                     const Budget& budget) {
  std::vector<FMatrix> out;
  out.reserve(static_cast<size_t>(group_order(P, p, budget)));
  for_each_element(P, p, budget,
                   [&](const FMatrix& u) { out.push_back(u); });
  return out;
}

FMatrix group_mul(const FMatrix& a, const FMatrix& b) {
  if (a.n() != b.n() || a.prime() != b.prime())
    throw std::invalid_argument("group_mul: mismatched shape or prime");
  return mat_mul(a, b);
}

FMatrix group_inv(const FMatrix& a) { return unipotent_inverse(a); }

std::vector<FMatrix> coset_reps(const Poset& P, const Poset& R, int p,
                                const Budget& budget) {
  auto diff = quotient_relations(P, R);
  unsigned __int128 wide = 1;
  for (size_t k = 0; k < diff.size(); ++k) {
    wide *= static_cast<unsigned __int128>(p);
    if (wide > static_cast<unsigned __int128>(UINT64_MAX)) {
      wide = UINT64_MAX;
      break;
    }
  }
  if (wide > budget.max_elements)
    throw BudgetError("coset representatives", static_cast<uint64_t>(wide),
                      budget.max_elements);
  uint64_t count = static_cast<uint64_t>(wide);
  std::vector<FMatrix> out;
  out.reserve(static_cast<size_t>(count));
  // Same digit order as the group enumeration, restricted to R/P positions.
  std::sort(diff.begin(), diff.end(), [](const auto& a, const auto& b) {
    if (a.first != b.first) return a.first > b.first;
    return a.second > b.second;
  });
  for (uint64_t key = 0; key < count; ++key)
    out.push_back(decode_on(key, R.n(), p, diff).to_group());
  return out;
}

Factorization factorize(const FMatrix& u, const Poset& P, const Poset& R) {
  if (!P.subset_of(R))
    throw std::invalid_argument("factorize: P must be a sub-order of R");
  if (!u.to_offset().supported_on(R))
    throw std::invalid_argument("factorize: element not in U_R");
  const int n = u.n();
  const int p = u.prime();
  // u = (1 + T)(1 + S) with T supported on P and S on R/P; entries are
  // recovered by increasing band j - i since (TS)_il only involves shorter
  // relations.
  FMatrix T(n, p), S(n, p);
  for (int gap = 1; gap < n; ++gap) {
    for (int i = 0; i + gap < n; ++i) {
      int l = i + gap;
      if (!R.less(i, l)) continue;
      long long cross = 0;
      for (int j = i + 1; j < l; ++j) cross += int(T.at(i, j)) * int(S.at(j, l));
      int v = ((u.at(i, l) - static_cast<int>(cross % p)) % p + p) % p;
      if (P.less(i, l))
        T.set(i, l, v);
      else
        S.set(i, l, v);
    }
  }
  Factorization f{T.to_group(), S.to_group()};
  if (group_mul(f.h, f.l) != u)
    throw ConsistencyError("factorize: h*l does not reproduce u");
  return f;
}

std::string CheckResult::describe(const std::string& name) const {
  if (holds) return name + ": holds";
  std::string s = name + ": fails";
  if (witness) {
    auto [a, b] = *witness;
    s += " (witness " + std::to_string(a.first + 1) + "<" +
         std::to_string(a.second + 1) + " then " + std::to_string(b.first + 1) +
         "<" + std::to_string(b.second + 1) + ")";
  }
  return s;
}

namespace {

// Vanishing of all products e_ab * e_cd with (a,b) from `first` and (c,d)
// from `second`; fails exactly when some b == c.
CheckResult product_vanishes(const std::vector<std::pair<int, int>>& first,
                             const std::vector<std::pair<int, int>>& second) {
  CheckResult r;
  for (auto ab : first)
    for (auto cd : second)
      if (ab.second == cd.first) {
        r.holds = false;
        r.witness = {ab, cd};
        return r;
      }
  r.holds = true;
  return r;
}

void exhaustive_product_check(const Poset& A, const Poset& B, int p,
                              const Budget& budget, const CheckResult& claim,
                              const std::string& what) {
  bool all_zero = true;
  for_each_nil(A, p, budget, [&](const FMatrix& x) {
    if (!all_zero) return;
    for_each_nil(B, p, budget, [&](const FMatrix& y) {
      if (all_zero && !mat_mul(x, y).is_zero()) all_zero = false;
    });
  });
  if (all_zero != claim.holds)
    throw ConsistencyError(what + ": generator test disagrees with exhaustive product check");
}

}  // namespace

bool is_normal_in(const Poset& K, const Poset& G, int p) {
  const int n = G.n();
  for (auto [i, j] : G.relations()) {
    for (int t = 1; t < p; ++t) {
      FMatrix g = FMatrix::identity(n, p);
      g.set(i, j, t);
      FMatrix ginv = group_inv(g);
      for (auto [k, l] : K.relations()) {
        for (int s = 1; s < p; ++s) {
          FMatrix x = FMatrix::identity(n, p);
          x.set(k, l, s);
          FMatrix conj = mat_mul(mat_mul(g, x), ginv);
          if (!conj.to_offset().supported_on(K)) return false;
        }
      }
    }
  }
  return true;
}

SidedCheck check_semidirect_condition(const Poset& H, const Poset& K,
                                      const Poset& G, int p, bool exhaustive,
                                      const Budget& budget) {
  if (!H.subset_of(G) || !K.subset_of(G))
    throw std::invalid_argument("semidirect check: H and K must be sub-orders of G");
  for (auto [i, j] : H.relations())
    if (K.less(i, j))
      throw std::invalid_argument("semidirect check: H and K overlap at " +
                                  std::to_string(i + 1) + "<" +
                                  std::to_string(j + 1));
  if (H.num_relations() + K.num_relations() != G.num_relations())
    throw std::invalid_argument(
        "semidirect check: relations of H and K do not cover G");
  if (!is_normal_in(K, G, p))
    throw std::invalid_argument("semidirect check: U_K is not normal in U_G");

  SidedCheck out;
  out.left = product_vanishes(K.relations(), H.relations());
  out.right = product_vanishes(H.relations(), K.relations());
  if (exhaustive) {
    exhaustive_product_check(K, H, p, budget, out.left, "(k-1)(h-1)");
    exhaustive_product_check(H, K, p, budget, out.right, "(h-1)(k-1)");
  }
  return out;
}

SidedCheck check_coset_condition(const Poset& P, const Poset& R, int p,
                                 bool exhaustive, const Budget& budget) {
  auto diff = quotient_relations(P, R);
  SidedCheck out;
  out.left = product_vanishes(diff, R.relations());
  out.right = product_vanishes(R.relations(), diff);
  if (exhaustive) {
    // I - 1 is exactly the strictly upper matrices supported on R/P; when
    // R/P happens to be closed we can reuse the nil enumeration.
    bool closed = true;
    for (auto ab : diff)
      for (auto cd : diff)
        if (ab.second == cd.first) {
          bool found = false;
          for (auto q : diff) found |= (q == std::pair{ab.first, cd.second});
          closed &= found;
        }
    if (closed) {
      Poset I = Poset::from_covers(R.n(), diff);
      exhaustive_product_check(I, R, p, budget, out.left, "(l-1)(u-1)");
      exhaustive_product_check(R, I, p, budget, out.right, "(u-1)(l-1)");
    }
  }
  return out;
}

SidedCheck check_containment_condition(const Poset& P, const Poset& R) {
  if (!P.subset_of(R))
    throw std::invalid_argument("containment check: P must be a sub-order of R");
  SidedCheck out;
  out.left.holds = true;
  out.right.holds = true;
  for (auto [i, j] : R.relations())
    for (int k = j + 1; k < R.n(); ++k) {
      if (P.less(j, k) && !P.less(i, k)) {
        out.left.holds = false;
        if (!out.left.witness) out.left.witness = {{i, j}, {j, k}};
      }
    }
  for (auto [i, j] : P.relations())
    for (int k = j + 1; k < R.n(); ++k) {
      if (R.less(j, k) && !P.less(i, k)) {
        out.right.holds = false;
        if (!out.right.witness) out.right.witness = {{i, j}, {j, k}};
      }
    }
  return out;
}

std::optional<Poset> complement_poset(const Poset& P, const Poset& R) {
  auto diff = quotient_relations(P, R);
  // Transitive closure must not leave the difference set.
  for (auto ab : diff)
    for (auto cd : diff) {
      if (ab.second != cd.first) continue;
      bool inside = false;
      for (auto q : diff) inside |= (q == std::pair{ab.first, cd.second});
      if (!inside) return std::nullopt;
    }
  return Poset::from_covers(R.n(), diff);
}

}  // namespace sct
