#pragma once

#include <string>

#include <json.hpp>

#include "sct/induction.hpp"
#include "sct/setpartition.hpp"
#include "sct/superchar.hpp"

namespace sct {

using OrderedJson = nlohmann::ordered_json;

OrderedJson poset_to_json(const Poset& P);
Poset poset_from_json(const OrderedJson& j);

// "a/b" when the value is rational, else the coefficient string array on the
// power basis of zeta_p; the prime is recorded once per document.
OrderedJson cyclotomic_to_json(const Cyclotomic& v);

// Sparse matrix encoding [[i, j, value], ...] with 1-based indices.
OrderedJson sparse_matrix_to_json(const FMatrix& m);

// Superclass/supercharacter index label: the labeled set partition for total
// orders, else the sparse matrix form.
std::string rep_label(const Theory& theory, const FMatrix& rep);

OrderedJson char_table_to_json(const Theory& theory);

OrderedJson combination_to_json(const Combination& comb);

// Decomposition of a class function of `theory` with rational coefficients,
// indexed by supercharacter labels.
OrderedJson decomposition_to_json(const Theory& theory,
                                  const std::vector<Rational>& coeffs,
                                  const std::string& method,
                                  const OrderedJson& embedding,
                                  const std::string& input_label);

}  // namespace sct
