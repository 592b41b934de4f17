#include "sct/poset.hpp"

#include <algorithm>
#include <stdexcept>

namespace sct {

Poset Poset::from_covers(int n, const std::vector<std::pair<int, int>>& covers) {
  if (n < 1) throw std::invalid_argument("Poset: n must be at least 1");
  Poset p;
  p.n_ = n;
  p.leq_.assign(static_cast<size_t>(n) * n, false);
  for (auto [i, j] : covers) {
    if (i < 0 || j >= n)
      throw std::invalid_argument("Poset: relation index out of range");
    if (i >= j)
      throw std::invalid_argument(
          "Poset: relation (" + std::to_string(i + 1) + "," +
          std::to_string(j + 1) + ") does not refine the natural order");
    p.leq_[p.idx(i, j)] = true;
  }
  // Floyd-Warshall style closure; the order refinement makes it a DAG.
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < k; ++i)
      if (p.leq_[p.idx(i, k)])
        for (int j = k + 1; j < n; ++j)
          if (p.leq_[p.idx(k, j)]) p.leq_[p.idx(i, j)] = true;
  p.finalize();
  return p;
}

void Poset::finalize() {
  rel_.clear();
  rel_index_.assign(leq_.size(), -1);
  for (int i = 0; i < n_; ++i)
    for (int j = i + 1; j < n_; ++j)
      if (leq_[idx(i, j)]) {
        rel_index_[idx(i, j)] = static_cast<int>(rel_.size());
        rel_.emplace_back(i, j);
      }
}

Poset Poset::total(int n) {
  std::vector<std::pair<int, int>> covers;
  for (int i = 0; i + 1 < n; ++i) covers.emplace_back(i, i + 1);
  return from_covers(n, covers);
}

Poset Poset::antichain(int n) { return from_covers(n, {}); }

Poset Poset::last_column(int n) {
  std::vector<std::pair<int, int>> covers;
  for (int i = 0; i + 2 < n; ++i) covers.emplace_back(i, i + 1);
  return from_covers(n, covers);
}

Poset Poset::first_row(int n) {
  std::vector<std::pair<int, int>> covers;
  for (int i = 1; i + 1 < n; ++i) covers.emplace_back(i, i + 1);
  return from_covers(n, covers);
}

Poset Poset::chain_um(int n, int m) {
  if (m < 0 || m > n) throw std::invalid_argument("chain-Um: need 0 <= m <= n");
  std::vector<std::pair<int, int>> covers;
  for (int i = 1; i + 1 < n; ++i) covers.emplace_back(i, i + 1);
  for (int j = m; j < n; ++j)
    if (0 < j) covers.emplace_back(0, j);
  return from_covers(n, covers);
}

Poset Poset::product(int m, int n) {
  std::vector<std::pair<int, int>> covers;
  for (int i = 0; i + 1 < m; ++i) covers.emplace_back(i, i + 1);
  for (int i = m; i + 1 < m + n; ++i) covers.emplace_back(i, i + 1);
  return from_covers(m + n, covers);
}

bool Poset::subset_of(const Poset& other) const {
  if (n_ != other.n_) return false;
  for (auto [i, j] : rel_)
    if (!other.less(i, j)) return false;
  return true;
}

std::vector<std::pair<int, int>> Poset::enumeration_order_relations() const {
  auto out = rel_;
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    if (a.first != b.first) return a.first > b.first;
    return a.second > b.second;
  });
  return out;
}

std::string Poset::str() const {
  std::string s = "{";
  for (size_t k = 0; k < rel_.size(); ++k) {
    if (k) s += ", ";
    s += std::to_string(rel_[k].first + 1) + "<" +
         std::to_string(rel_[k].second + 1);
  }
  return s + "}";
}

namespace {

int parse_int(const std::string& s) {
  size_t pos = 0;
  int v = std::stoi(s, &pos);
  if (pos != s.size()) throw std::invalid_argument("bad integer: " + s);
  return v;
}

}  // namespace

Poset Poset::parse_spec(const std::string& spec) {
  auto colon = spec.find(':');
  if (colon == std::string::npos)
    throw std::invalid_argument("poset spec needs a ':' (e.g. total:5)");
  std::string kind = spec.substr(0, colon);
  std::string rest = spec.substr(colon + 1);
  if (kind == "total") return total(parse_int(rest));
  if (kind == "antichain") return antichain(parse_int(rest));
  if (kind == "last-column") return last_column(parse_int(rest));
  if (kind == "first-row") return first_row(parse_int(rest));
  if (kind == "chain-Um") {
    auto c2 = rest.find(':');
    if (c2 == std::string::npos)
      throw std::invalid_argument("chain-Um spec is chain-Um:n:m");
    return chain_um(parse_int(rest.substr(0, c2)),
                    parse_int(rest.substr(c2 + 1)));
  }
  if (kind == "product") {
    // "product:U_m x U_n"
    auto u1 = rest.find("U_");
    auto x = rest.find('x');
    auto u2 = rest.rfind("U_");
    if (u1 == std::string::npos || x == std::string::npos || u2 <= u1)
      throw std::invalid_argument("product spec is product:U_m x U_n");
    std::string ms = rest.substr(u1 + 2, x - (u1 + 2));
    std::string ns = rest.substr(u2 + 2);
    while (!ms.empty() && ms.back() == ' ') ms.pop_back();
    return product(parse_int(ms), parse_int(ns));
  }
  throw std::invalid_argument("unknown poset spec: " + spec);
}

std::vector<std::pair<int, int>> quotient_relations(const Poset& P,
                                                    const Poset& R) {
  if (P.n() != R.n() || !P.subset_of(R))
    throw std::invalid_argument("quotient_relations: P must be a sub-order of R");
  std::vector<std::pair<int, int>> out;
  for (auto [i, j] : R.relations())
    if (!P.less(i, j)) out.emplace_back(i, j);
  return out;
}

}  // namespace sct
