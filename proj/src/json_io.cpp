#include "sct/json_io.hpp"

namespace sct {

OrderedJson poset_to_json(const Poset& P) {
  OrderedJson rels = OrderedJson::array();
  for (auto [i, j] : P.relations()) rels.push_back({i + 1, j + 1});
  return OrderedJson{{"n", P.n()}, {"relations", rels}};
}

Poset poset_from_json(const OrderedJson& j) {
  int n = j.at("n").get<int>();
  std::vector<std::pair<int, int>> covers;
  for (const auto& pair : j.at("relations"))
    covers.emplace_back(pair.at(0).get<int>() - 1, pair.at(1).get<int>() - 1);
  return Poset::from_covers(n, covers);
}

OrderedJson cyclotomic_to_json(const Cyclotomic& v) {
  if (v.is_rational()) return v.rational_part().str();
  OrderedJson arr = OrderedJson::array();
  for (const auto& c : v.coeffs()) arr.push_back(c.str());
  return arr;
}

OrderedJson sparse_matrix_to_json(const FMatrix& m) {
  OrderedJson arr = OrderedJson::array();
  for (int i = 0; i < m.n(); ++i)
    for (int j = 0; j < m.n(); ++j)
      if (i != j && m.at(i, j)) arr.push_back({i + 1, j + 1, m.at(i, j)});
  return arr;
}

std::string rep_label(const Theory& theory, const FMatrix& rep) {
  (void)theory;
  try {
    return SetPartition::from_matrix(rep).format();
  } catch (const std::invalid_argument&) {
    // Representatives off the total order may have several entries per row
    // or column; fall back to the sparse form.
    return sparse_matrix_to_json(rep).dump();
  }
}

OrderedJson char_table_to_json(const Theory& theory) {
  OrderedJson classes = OrderedJson::array();
  for (int c = 0; c < theory.num_classes(); ++c)
    classes.push_back(sparse_matrix_to_json(theory.class_rep(c)));
  OrderedJson chars = OrderedJson::array();
  for (int r = 0; r < theory.num_chars(); ++r)
    chars.push_back(sparse_matrix_to_json(theory.char_rep(r)));
  OrderedJson values = OrderedJson::array();
  for (int r = 0; r < theory.num_chars(); ++r) {
    OrderedJson row = OrderedJson::array();
    for (int c = 0; c < theory.num_classes(); ++c)
      row.push_back(cyclotomic_to_json(theory.value(r, c)));
    values.push_back(row);
  }
  return OrderedJson{{"prime", theory.prime()},
                     {"poset", poset_to_json(theory.poset())},
                     {"classes", classes},
                     {"chars", chars},
                     {"values", values}};
}

OrderedJson combination_to_json(const Combination& comb) {
  OrderedJson terms = OrderedJson::array();
  for (const auto& [label, coeff] : comb.sorted_terms())
    terms.push_back(OrderedJson{{"index", label}, {"coeff", coeff.str()}});
  return OrderedJson{
      {"n", comb.n()}, {"prime", comb.prime()}, {"terms", terms}};
}

OrderedJson decomposition_to_json(const Theory& theory,
                                  const std::vector<Rational>& coeffs,
                                  const std::string& method,
                                  const OrderedJson& embedding,
                                  const std::string& input_label) {
  std::vector<std::pair<std::string, Rational>> terms;
  bool integral = true;
  for (int r = 0; r < theory.num_chars(); ++r) {
    const Rational& c = coeffs[size_t(r)];
    if (c.is_zero()) continue;
    terms.emplace_back(rep_label(theory, theory.char_rep(r)), c);
    integral = integral && c.is_integer() && c > Rational(0);
  }
  std::sort(terms.begin(), terms.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  OrderedJson jterms = OrderedJson::array();
  for (const auto& [label, c] : terms)
    jterms.push_back(OrderedJson{{"index", label}, {"coeff", c.str()}});
  return OrderedJson{{"embedding", embedding},
                     {"input", input_label},
                     {"method", method},
                     {"terms", jterms},
                     {"is_character_candidate", integral}};
}

}  // namespace sct
