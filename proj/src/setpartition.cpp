#include "sct/setpartition.hpp"

#include <algorithm>
#include <cctype>
#include <functional>

#include "sct/errors.hpp"

namespace sct {

SetPartition::SetPartition(int n, int p)
    : n_(n), p_(p), to_(size_t(n), -1), lab_(size_t(n), 0), from_(size_t(n), -1) {
  if (n < 1) throw std::invalid_argument("SetPartition: n must be at least 1");
  if (p < 2) throw std::invalid_argument("SetPartition: prime must be at least 2");
}

std::vector<SetPartition::Arc> SetPartition::arcs() const {
  std::vector<Arc> out;
  for (int i = 0; i < n_; ++i)
    if (to_[size_t(i)] >= 0) out.push_back({i, to_[size_t(i)], lab_[size_t(i)]});
  return out;
}

int SetPartition::num_arcs() const {
  int c = 0;
  for (int i = 0; i < n_; ++i)
    if (to_[size_t(i)] >= 0) ++c;
  return c;
}

void SetPartition::add_arc(int i, int j, int label) {
  if (i < 0 || j >= n_ || i >= j)
    throw std::invalid_argument("SetPartition: arc must satisfy i < j within the ground set");
  if (label <= 0 || label >= p_)
    throw std::invalid_argument("SetPartition: label must lie in 1..p-1");
  if (to_[size_t(i)] >= 0 || from_[size_t(j)] >= 0)
    throw ConsistencyError("SetPartition: arc would give a row or column two entries");
  to_[size_t(i)] = j;
  lab_[size_t(i)] = label;
  from_[size_t(j)] = i;
}

void SetPartition::remove_arc(int i, int j) {
  if (i < 0 || i >= n_ || to_[size_t(i)] != j)
    throw std::invalid_argument("SetPartition: no such arc to remove");
  to_[size_t(i)] = -1;
  lab_[size_t(i)] = 0;
  from_[size_t(j)] = -1;
}

SetPartition SetPartition::parse(const std::string& text, int p) {
  struct RawArc {
    int i, j, label;
    bool labeled;
  };
  std::vector<RawArc> arcs;
  std::vector<int> seen;
  size_t pos = 0;
  auto fail = [&](const std::string& why) {
    throw std::invalid_argument("partition parse error at offset " +
                                std::to_string(pos) + ": " + why);
  };
  auto read_int = [&]() {
    size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
      ++pos;
    if (pos == start) fail("expected a number");
    return std::stoi(text.substr(start, pos - start));
  };
  int max_index = 0;
  int prev = -1;
  while (true) {
    int idx = read_int();
    if (idx < 1) fail("indices are positive");
    max_index = std::max(max_index, idx);
    seen.push_back(idx);
    if (prev >= 0) {
      arcs.back().j = idx;
      // The label canonically follows the ~, but it may also trail the
      // closing endpoint, as in "1~4(2)~6".
      if (pos < text.size() && text[pos] == '(') {
        if (arcs.back().labeled) fail("arc labeled twice");
        ++pos;
        int label = read_int();
        if (pos >= text.size() || text[pos] != ')') fail("expected ')'");
        ++pos;
        if (label <= 0 || label >= p) fail("label out of range for the prime");
        arcs.back().label = label;
        arcs.back().labeled = true;
      }
    }
    prev = idx;
    if (pos >= text.size()) break;
    if (text[pos] == '|') {
      ++pos;
      prev = -1;
      continue;
    }
    if (text[pos] == '~') {
      ++pos;
      int label = 1;
      bool labeled = false;
      if (pos < text.size() && text[pos] == '(') {
        ++pos;
        label = read_int();
        if (pos >= text.size() || text[pos] != ')') fail("expected ')'");
        ++pos;
        labeled = true;
      }
      if (label <= 0 || label >= p) fail("label out of range for the prime");
      arcs.push_back({idx, -1, label, labeled});
      continue;
    }
    fail("unexpected character");
  }
  int n = max_index;
  std::vector<char> present(size_t(n) + 1, 0);
  for (int v : seen) {
    if (present[size_t(v)]) fail("duplicate ground-set element " + std::to_string(v));
    present[size_t(v)] = 1;
  }
  for (int v = 1; v <= n; ++v)
    if (!present[size_t(v)]) fail("missing ground-set element " + std::to_string(v));
  SetPartition out(n, p);
  for (const auto& a : arcs) {
    if (a.j < 0) fail("dangling arc");
    if (a.i >= a.j) fail("arcs must increase left to right");
    out.add_arc(a.i - 1, a.j - 1, a.label);
  }
  return out;
}

std::string SetPartition::format() const {
  std::string s;
  bool first = true;
  for (int start = 0; start < n_; ++start) {
    if (from_[size_t(start)] >= 0) continue;  // not the head of a chain
    if (!first) s += "|";
    first = false;
    int cur = start;
    s += std::to_string(cur + 1);
    while (to_[size_t(cur)] >= 0) {
      int label = lab_[size_t(cur)];
      s += "~";
      if (label != 1) s += "(" + std::to_string(label) + ")";
      cur = to_[size_t(cur)];
      s += std::to_string(cur + 1);
    }
  }
  return s;
}

FMatrix SetPartition::to_matrix() const {
  FMatrix m(n_, p_);
  for (int i = 0; i < n_; ++i)
    if (to_[size_t(i)] >= 0) m.set(i, to_[size_t(i)], lab_[size_t(i)]);
  return m;
}

SetPartition SetPartition::from_matrix(const FMatrix& m) {
  SetPartition out(m.n(), m.prime());
  for (int i = 0; i < m.n(); ++i)
    for (int j = 0; j < m.n(); ++j)
      if (i != j && m.at(i, j)) {
        if (i > j)
          throw std::invalid_argument("from_matrix: matrix not strictly upper triangular");
        if (out.to_[size_t(i)] >= 0 || out.from_[size_t(j)] >= 0)
          throw std::invalid_argument(
              "from_matrix: more than one nonzero in a row or column");
        out.to_[size_t(i)] = j;
        out.lab_[size_t(i)] = m.at(i, j);
        out.from_[size_t(j)] = i;
      }
  return out;
}

SetPartition SetPartition::extended_to(int n) const {
  if (n < n_) throw std::invalid_argument("extended_to: ground set would shrink");
  SetPartition out(n, p_);
  for (int i = 0; i < n_; ++i)
    if (to_[size_t(i)] >= 0) out.add_arc(i, to_[size_t(i)], lab_[size_t(i)]);
  return out;
}

SetPartition SetPartition::shrunk_to(int n) const {
  SetPartition out(n, p_);
  for (int i = 0; i < n_; ++i)
    if (to_[size_t(i)] >= 0) {
      if (to_[size_t(i)] >= n || i >= n)
        throw std::invalid_argument("shrunk_to: dropped elements must be isolated");
      out.add_arc(i, to_[size_t(i)], lab_[size_t(i)]);
    }
  return out;
}

int SetPartition::dim_exponent() const {
  int d = 0;
  for (int i = 0; i < n_; ++i)
    if (to_[size_t(i)] >= 0) d += to_[size_t(i)] - i - 1;
  return d;
}

bool SetPartition::operator<(const SetPartition& o) const {
  if (n_ != o.n_) return n_ < o.n_;
  if (to_ != o.to_) return to_ < o.to_;
  return lab_ < o.lab_;
}

std::vector<SetPartition> enumerate_partitions(int n, int p,
                                               const Budget& budget) {
  std::vector<SetPartition> out;
  SetPartition work(n, p);
  // Column-by-column: element j either starts a new chain or attaches to a
  // free smaller element; every labeled diagram arises exactly once.
  std::function<void(int)> rec = [&](int j) {
    if (out.size() >= budget.max_elements)
      throw BudgetError("set partition enumeration", out.size() + 1,
                        budget.max_elements);
    if (j == n) {
      out.push_back(work);
      return;
    }
    rec(j + 1);
    for (int i = 0; i < j; ++i) {
      if (work.row_dst(i) >= 0) continue;
      for (int t = 1; t < p; ++t) {
        work.add_arc(i, j, t);
        rec(j + 1);
        work.remove_arc(i, j);
      }
    }
  };
  rec(0);
  return out;
}

void Combination::add(const SetPartition& part, const Rational& coeff) {
  if (part.n() != n_ || part.prime() != p_)
    throw std::invalid_argument("Combination: mixed ground sets or primes");
  if (coeff.is_zero()) return;
  auto it = terms_.find(part);
  if (it == terms_.end()) {
    terms_.emplace(part, coeff);
    return;
  }
  it->second += coeff;
  if (it->second.is_zero()) terms_.erase(it);
}

Combination& Combination::operator+=(const Combination& o) {
  for (const auto& [part, c] : o.terms_) add(part, c);
  return *this;
}

Combination Combination::scaled(const Rational& s) const {
  Combination out(n_, p_);
  if (s.is_zero()) return out;
  for (const auto& [part, c] : terms_) out.terms_.emplace(part, c * s);
  return out;
}

Rational Combination::coeff(const SetPartition& part) const {
  auto it = terms_.find(part);
  return it == terms_.end() ? Rational(0) : it->second;
}

std::vector<std::pair<std::string, Rational>> Combination::sorted_terms() const {
  std::vector<std::pair<std::string, Rational>> out;
  out.reserve(terms_.size());
  for (const auto& [part, c] : terms_) out.emplace_back(part.format(), c);
  std::sort(out.begin(), out.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  return out;
}

std::string Combination::str() const {
  auto ts = sorted_terms();
  if (ts.empty()) return "0";
  std::string s;
  for (size_t k = 0; k < ts.size(); ++k) {
    if (k) s += " + ";
    if (ts[k].second != Rational(1)) s += ts[k].second.str() + "*";
    s += "{" + ts[k].first + "}";
  }
  return s;
}

namespace {

std::string diagram_key(const SetPartition& d) {
  std::string s;
  s.reserve(size_t(d.n()) * 2 + 1);
  s.push_back(static_cast<char>(d.prime()));
  for (int i = 0; i < d.n(); ++i) {
    s.push_back(static_cast<char>(d.row_dst(i) + 1));
    s.push_back(static_cast<char>(d.row_label(i)));
  }
  return s;
}

}  // namespace

Combination Pieri::right(const SetPartition& mu, int i, int k) {
  if (i < 0 || k >= mu.n() || i > k)
    throw std::invalid_argument("pieri right product needs 0 <= i <= k < n");
  if (i == k) return Combination::single(mu);
  auto memo_key = std::make_tuple(diagram_key(mu), i, k);
  if (auto it = right_memo_.find(memo_key); it != right_memo_.end())
    return it->second;

  const int p = mu.prime();
  Combination out(mu.n(), p);
  int j = mu.row_dst(i);
  if (j > k) {
    out = right(mu, i + 1, k).scaled(Rational(p));
  } else if (j == k) {
    SetPartition m2 = mu;
    m2.remove_arc(i, k);
    out = right(m2, i + 1, k);
  } else if (j >= 0) {
    out = right(mu, i + 1, k);
    for (int t = 1; t < p; ++t) {
      SetPartition m2 = mu;
      m2.remove_arc(i, j);
      m2.add_arc(i, k, t);
      out += right(m2, i + 1, j);
    }
  } else {
    out = right(mu, i + 1, k);
    for (int t = 1; t < p; ++t) {
      SetPartition m2 = mu;
      m2.add_arc(i, k, t);
      out.add(m2, Rational(1));
    }
  }
  right_memo_.emplace(std::move(memo_key), out);
  return out;
}

Combination Pieri::left(int j, int l, const SetPartition& mu) {
  if (j < 0 || l >= mu.n() || j > l)
    throw std::invalid_argument("pieri left product needs 0 <= j <= l < n");
  if (j == l) return Combination::single(mu);
  auto memo_key = std::make_tuple(diagram_key(mu), j, l);
  if (auto it = left_memo_.find(memo_key); it != left_memo_.end())
    return it->second;

  const int p = mu.prime();
  Combination out(mu.n(), p);
  int i = mu.col_src(l);
  if (i >= 0 && i < j) {
    out = left(j, l - 1, mu).scaled(Rational(p));
  } else if (i == j) {
    SetPartition m2 = mu;
    m2.remove_arc(j, l);
    out = left(j, l - 1, m2);
  } else if (i > j) {
    out = left(j, l - 1, mu);
    for (int t = 1; t < p; ++t) {
      SetPartition m2 = mu;
      m2.remove_arc(i, l);
      m2.add_arc(j, l, t);
      out += left(i, l - 1, m2);
    }
  } else {
    out = left(j, l - 1, mu);
    for (int t = 1; t < p; ++t) {
      SetPartition m2 = mu;
      m2.add_arc(j, l, t);
      out.add(m2, Rational(1));
    }
  }
  left_memo_.emplace(std::move(memo_key), out);
  return out;
}

namespace {

Rational pow_rational(int base, int exp) {
  Rational r(1);
  for (int k = 0; k < exp; ++k) r *= Rational(base);
  return r;
}

}  // namespace

Combination induce_combinatorial(const SetPartition& mu, int target_n,
                                 Pieri* engine) {
  if (target_n < mu.n())
    throw std::invalid_argument("induce_combinatorial: target below ground set");
  Pieri local;
  Pieri& eng = engine ? *engine : local;
  const int p = mu.prime();
  Combination comb = Combination::single(mu.extended_to(target_n));
  for (int e = mu.n(); e < target_n; ++e) {
    Combination next(target_n, p);
    for (const auto& [part, c] : comb.terms())
      next += eng.right(part, 0, e).scaled(c);
    comb = std::move(next);
  }
  // Degree bookkeeping: the induced degree is the subgroup index times the
  // input degree.
  Rational expected = pow_rational(p, mu.dim_exponent());
  for (int e = mu.n(); e < target_n; ++e) expected *= pow_rational(p, e);
  Rational got(0);
  for (const auto& [part, c] : comb.terms())
    got += c * pow_rational(p, part.dim_exponent());
  if (got != expected)
    throw ConsistencyError("induce_combinatorial: degree identity violated (" +
                           got.str() + " vs " + expected.str() + ")");
  return comb;
}

Combination restrict_combinatorial(const SetPartition& lambda, Pieri* engine) {
  const int n = lambda.n();
  if (n < 2)
    throw std::invalid_argument("restrict_combinatorial: nothing to restrict");
  int i = lambda.col_src(n - 1);
  if (i < 0) {
    Combination out(n - 1, lambda.prime());
    out.add(lambda.shrunk_to(n - 1), Rational(1));
    return out;
  }
  Pieri local;
  Pieri& eng = engine ? *engine : local;
  Combination raw = eng.left(i, n - 1, lambda);
  Combination out(n - 1, lambda.prime());
  for (const auto& [part, c] : raw.terms()) out.add(part.shrunk_to(n - 1), c);
  return out;
}

Combination induce_first_row(const SetPartition& mu, Pieri* engine) {
  if (mu.row_dst(0) >= 0 || mu.col_src(0) >= 0)
    throw std::invalid_argument("induce_first_row: element 1 must be isolated");
  Pieri local;
  Pieri& eng = engine ? *engine : local;
  return eng.left(0, mu.n() - 1, mu);
}

std::vector<FMatrix> left_minimal_set(const SetPartition& mu, int p,
                                      const Budget& budget) {
  const int n = mu.n() + 1;
  Theory theory(Poset::total(n), p, budget);
  FMatrix mu_mat = mu.to_matrix();
  std::vector<FMatrix> out;
  for (int r = 0; r < theory.num_chars(); ++r) {
    const Orbit& orb = theory.dual_orbit(r);
    std::optional<FMatrix> best;
    int best_nonzeros = 0;
    int ties = 0;
    for (uint64_t k : orb.keys) {
      FMatrix lam = theory.nil_of(k);
      bool restricts = true;
      for (int i = 0; i < n - 1 && restricts; ++i)
        for (int j = i + 1; j < n - 1 && restricts; ++j)
          restricts = (lam.at(i, j) == mu_mat.at(i, j));
      if (!restricts) continue;
      int nz = 0;
      for (int i = 0; i < n - 1; ++i)
        if (lam.at(i, n - 1)) ++nz;
      if (!best || nz < best_nonzeros) {
        best = lam;
        best_nonzeros = nz;
        ties = 1;
      } else if (nz == best_nonzeros) {
        ++ties;
      }
    }
    if (!best) continue;
    if (ties != 1)
      throw ConsistencyError(
          "left_minimal_set: minimizer in a dual orbit is not unique");
    out.push_back(*best);
  }
  return out;
}

bool is_left_minimal(const FMatrix& lambda, const SetPartition& mu) {
  const int n = lambda.n();
  if (mu.n() != n - 1)
    throw std::invalid_argument("is_left_minimal: ground sets do not match");
  FMatrix mu_mat = mu.to_matrix();
  for (int i = 0; i < n - 1; ++i)
    for (int j = i + 1; j < n - 1; ++j)
      if (lambda.at(i, j) != mu_mat.at(i, j)) return false;
  for (int i = 0; i < n - 1; ++i) {
    if (!lambda.at(i, n - 1)) continue;
    for (int j = i + 1; j < n - 1; ++j) {
      if (!lambda.at(j, n - 1)) continue;
      bool covered = false;
      for (int k = j + 1; k < n - 1; ++k) covered |= (lambda.at(i, k) != 0);
      if (!covered) return false;
    }
  }
  return true;
}

}  // namespace sct
