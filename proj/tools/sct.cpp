// sct: exact supercharacter computations for pattern groups over prime
// fields.  Subcommands: table, superinduce, induce, pieri, restrict, cosets,
// check, verify, repro.  All output is deterministic; exit codes are
// 0 success, 1 usage error, 2 budget exceeded, 3 internal consistency
// failure.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

#include "sct/induction.hpp"
#include "sct/json_io.hpp"
#include "sct/setpartition.hpp"

using namespace sct;

namespace {

struct CommonOpts {
  int prime = 2;
  std::string format = "text";
  uint64_t max_elements = Budget{}.max_elements;
  uint64_t max_summands = Budget{}.max_summands;
  Budget budget() const { return Budget{max_elements, max_summands}; }
  bool json() const { return format == "json"; }
};

void add_common(CLI::App* cmd, CommonOpts& opts, bool needs_prime = true) {
  if (needs_prime)
    cmd->add_option("--prime", opts.prime, "field characteristic (a prime)")
        ->required();
  cmd->add_option("--format", opts.format, "text or json")
      ->check(CLI::IsMember({"text", "json"}))
      ->default_val("text");
  cmd->add_option("--max-elements", opts.max_elements,
                  "largest group enumeration allowed");
  cmd->add_option("--max-summands", opts.max_summands,
                  "largest |G|^2 double sum allowed");
}

Poset load_poset(const std::string& spec) {
  if (spec.size() > 5 && spec.substr(spec.size() - 5) == ".json") {
    std::ifstream in(spec);
    if (!in) throw std::invalid_argument("cannot open poset file " + spec);
    OrderedJson j;
    in >> j;
    return poset_from_json(j);
  }
  return Poset::parse_spec(spec);
}

void emit(const OrderedJson& j) { std::cout << j.dump(2) << "\n"; }

std::string class_label(const Theory& t, int c) {
  return rep_label(t, t.class_rep(c));
}
std::string char_label(const Theory& t, int r) {
  return rep_label(t, t.char_rep(r));
}

void print_table_text(Theory& t) {
  std::cout << "pattern group on " << t.poset().n() << " points, p = "
            << t.prime() << ", |G| = " << t.order() << "\n";
  std::cout << t.num_chars() << " supercharacters x " << t.num_classes()
            << " superclasses\n\n";
  std::vector<size_t> widths(size_t(t.num_classes()));
  for (int c = 0; c < t.num_classes(); ++c) {
    widths[size_t(c)] = class_label(t, c).size();
    for (int r = 0; r < t.num_chars(); ++r)
      widths[size_t(c)] = std::max(widths[size_t(c)], t.value(r, c).str().size());
  }
  size_t head = 0;
  for (int r = 0; r < t.num_chars(); ++r)
    head = std::max(head, char_label(t, r).size());
  std::cout << std::string(head, ' ');
  for (int c = 0; c < t.num_classes(); ++c) {
    std::string lbl = class_label(t, c);
    std::cout << "  " << std::string(widths[size_t(c)] - lbl.size(), ' ') << lbl;
  }
  std::cout << "\n";
  for (int r = 0; r < t.num_chars(); ++r) {
    std::string lbl = char_label(t, r);
    std::cout << lbl << std::string(head - lbl.size(), ' ');
    for (int c = 0; c < t.num_classes(); ++c) {
      std::string v = t.value(r, c).str();
      std::cout << "  " << std::string(widths[size_t(c)] - v.size(), ' ') << v;
    }
    std::cout << "\n";
  }
}

OrderedJson embedding_json(const std::string& sub, const std::string& super) {
  return OrderedJson{{"sub", sub}, {"super", super}};
}

// Decomposition of an induced/superinduced function, shared by the
// superinduce and induce subcommands and by repro.
int run_decomposition(const CommonOpts& opts, const std::string& sub_spec,
                      const std::string& super_spec, const std::string& chr,
                      const std::string& method) {
  Embedding e(load_poset(sub_spec), load_poset(super_spec), opts.prime,
              opts.budget());
  Theory& H = e.sub();
  Theory& G = e.super();
  SetPartition input = SetPartition::parse(chr, opts.prime);
  if (input.n() > H.poset().n())
    throw std::invalid_argument("--char index exceeds the subgroup ground set");
  FMatrix lambda = input.extended_to(H.poset().n()).to_matrix();
  auto f = H.character_row(H.char_of_nil(lambda));

  std::vector<Rational> coeffs;
  bool superclass_fn = true;
  if (method == "superinduce") {
    coeffs = G.decompose(e.superinduce(f));
  } else {
    PointFunction ind = e.induce(f);
    superclass_fn = ind.is_superclass_function;
    if (!superclass_fn) {
      if (opts.json())
        emit(OrderedJson{{"embedding", embedding_json(sub_spec, super_spec)},
                         {"input", chr},
                         {"method", method},
                         {"is_superclass_function", false}});
      else
        std::cout << "induced class function is not a superclass function; "
                     "no supercharacter decomposition exists\n";
      return 0;
    }
    Theory::ClassFunction on_classes;
    for (int c = 0; c < G.num_classes(); ++c)
      on_classes.push_back(ind.by_key[size_t(G.superclass(c).keys[0])]);
    coeffs = G.decompose(on_classes);
  }

  if (opts.json()) {
    emit(decomposition_to_json(G, coeffs, method,
                               embedding_json(sub_spec, super_spec), chr));
    return 0;
  }
  std::cout << method << " of " << chr << " from " << sub_spec << " to "
            << super_spec << ":\n";
  std::vector<std::pair<std::string, Rational>> terms;
  for (int r = 0; r < G.num_chars(); ++r)
    if (!coeffs[size_t(r)].is_zero())
      terms.emplace_back(char_label(G, r), coeffs[size_t(r)]);
  std::sort(terms.begin(), terms.end());
  for (const auto& [label, c] : terms)
    std::cout << "  " << c.str() << " * {" << label << "}\n";
  return 0;
}

int run_verify(const CommonOpts& opts) {
  bool all = true;
  auto report = [&](const std::string& name, bool ok, const std::string& note) {
    all = all && ok;
    std::cout << name << ": " << (ok ? "pass" : "FAIL");
    if (!note.empty()) std::cout << " (" << note << ")";
    std::cout << "\n";
  };

  {
    bool ok = true;
    std::string note;
    for (int n = 2; n <= 4 && ok; ++n) {
      auto rep = Theory(Poset::total(n), 2, opts.budget()).validate_axioms();
      ok = rep.all_pass();
      if (!ok) note = rep.failures[0];
    }
    if (ok) {
      auto rep = Theory(Poset::total(3), 3, opts.budget()).validate_axioms();
      ok = rep.all_pass();
      if (!ok) note = rep.failures[0];
    }
    report("axioms", ok, note);
  }

  {
    bool ok = true;
    std::string note;
    for (auto [n, q] : {std::pair{3, 2}, {4, 2}, {3, 3}}) {
      Embedding e(Poset::last_column(n), Poset::total(n), q, opts.budget());
      Pieri engine;
      for (const auto& mu : enumerate_partitions(n - 1, q)) {
        auto f = e.sub().character_row(
            e.sub().char_of_nil(mu.extended_to(n).to_matrix()));
        PointFunction ind = e.induce(f);
        Theory::ClassFunction cf;
        for (int c = 0; c < e.super().num_classes(); ++c)
          cf.push_back(ind.by_key[size_t(e.super().superclass(c).keys[0])]);
        auto brute = e.super().decompose(cf);
        std::vector<Rational> expect(size_t(e.super().num_chars()), Rational(0));
        Combination comb = induce_combinatorial(mu, n, &engine);
        for (const auto& [part, c] : comb.terms())
          expect[size_t(e.super().char_of_nil(part.to_matrix()))] += c;
        if (brute != expect) {
          ok = false;
          note = "mismatch at n=" + std::to_string(n) + " mu=" + mu.format();
          break;
        }
      }
      if (!ok) break;
    }
    report("pieri-vs-induction", ok, note);
  }

  {
    auto rep1 =
        Embedding(Poset::last_column(3), Poset::total(3), 2, opts.budget())
            .verify_frobenius();
    auto rep2 =
        Embedding(Poset::chain_um(4, 2), Poset::chain_um(4, 1), 2, opts.budget())
            .verify_frobenius();
    report("frobenius", rep1.all_pass && rep2.all_pass,
           rep1.all_pass && rep2.all_pass
               ? std::to_string(rep1.pairs_checked + rep2.pairs_checked) +
                     " pairs"
               : "adjunction failure");
  }

  std::cout << (all ? "verify: all suites pass" : "verify: FAILURES") << "\n";
  return all ? 0 : 3;
}

int run_repro(const CommonOpts& opts, const std::string& which) {
  if (which == "sind" || which == "all") {
    CommonOpts o = opts;
    o.prime = 2;
    run_decomposition(o, "product:U_3 x U_2", "total:5", "1|2|3|4|5",
                      "superinduce");
  }
  if (which == "pieri" || which == "all") {
    Pieri engine;
    Combination comb =
        engine.right(SetPartition::parse("1~4~6|2|3~5", 2).extended_to(7), 0, 6);
    if (opts.json())
      emit(combination_to_json(comb));
    else
      std::cout << "{1~4~6|2|3~5} *_1 {7} = " << comb.str() << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "exact supercharacter theory of pattern groups over prime fields"};
  app.require_subcommand(1);

  CommonOpts opts;

  // table
  auto* table = app.add_subcommand("table", "character table of a poset");
  std::string poset_spec;
  add_common(table, opts);
  table->add_option("--poset", poset_spec, "named builder or .json file")
      ->required();

  // superinduce / induce
  std::string sub_spec, super_spec, char_spec;
  auto* sind = app.add_subcommand("superinduce",
                                  "superinduced decomposition for an embedding");
  add_common(sind, opts);
  sind->add_option("--sub", sub_spec)->required();
  sind->add_option("--super", super_spec)->required();
  sind->add_option("--char", char_spec, "subgroup supercharacter index")
      ->required();
  auto* ind = app.add_subcommand("induce", "induced decomposition");
  add_common(ind, opts);
  ind->add_option("--sub", sub_spec)->required();
  ind->add_option("--super", super_spec)->required();
  ind->add_option("--char", char_spec)->required();

  // pieri
  auto* pieri = app.add_subcommand("pieri", "combinatorial product");
  std::string mu_spec, side = "right";
  int add_index = 0, start_index = 0;
  bool start_given = false;
  add_common(pieri, opts);
  pieri->add_option("--mu", mu_spec, "labeled set partition")->required();
  pieri->add_option("--add", add_index, "element to insert (1-based)")
      ->required();
  pieri->add_option("--side", side)->check(CLI::IsMember({"left", "right"}));
  pieri->add_option("--start", start_index, "initial scan index")
      ->each([&](const std::string&) { start_given = true; });

  // restrict
  auto* restr = app.add_subcommand("restrict", "restriction to U_{n-1}");
  std::string lambda_spec, method = "both";
  add_common(restr, opts);
  restr->add_option("--lambda", lambda_spec)->required();
  restr->add_option("--method", method)
      ->check(CLI::IsMember({"combinatorial", "brute", "both"}));

  // cosets
  auto* cosets = app.add_subcommand("cosets", "coset representative set I");
  bool verify_cosets = false;
  add_common(cosets, opts);
  cosets->add_option("--sub", sub_spec)->required();
  cosets->add_option("--super", super_spec)->required();
  cosets->add_flag("--verify", verify_cosets,
                   "exhaustively check the coset partition");

  // check
  auto* check = app.add_subcommand("check", "sufficient-condition checkers");
  add_common(check, opts);
  check->add_option("--sub", sub_spec)->required();
  check->add_option("--super", super_spec)->required();

  // verify
  auto* verify = app.add_subcommand("verify", "cross-validation suites");
  add_common(verify, opts, /*needs_prime=*/false);

  // repro
  auto* repro = app.add_subcommand("repro", "reproduce the two worked examples");
  std::string which = "all";
  add_common(repro, opts, /*needs_prime=*/false);
  repro->add_option("--example", which)
      ->check(CLI::IsMember({"sind", "pieri", "all"}));

  try {
    app.parse(argc, argv);

    if (*table) {
      Theory t(load_poset(poset_spec), opts.prime, opts.budget());
      if (opts.json())
        emit(char_table_to_json(t));
      else
        print_table_text(t);
      return 0;
    }
    if (*sind)
      return run_decomposition(opts, sub_spec, super_spec, char_spec,
                               "superinduce");
    if (*ind)
      return run_decomposition(opts, sub_spec, super_spec, char_spec, "induce");
    if (*pieri) {
      SetPartition mu = SetPartition::parse(mu_spec, opts.prime);
      Pieri engine;
      Combination comb(1, opts.prime);
      if (side == "right") {
        int n = std::max(mu.n(), add_index);
        mu = mu.extended_to(n);
        int start = start_given ? start_index : 1;
        comb = engine.right(mu, start - 1, add_index - 1);
      } else {
        int start = start_given ? start_index : mu.n();
        comb = engine.left(add_index - 1, start - 1, mu);
      }
      if (opts.json())
        emit(combination_to_json(comb));
      else
        std::cout << comb.str() << "\n";
      return 0;
    }
    if (*restr) {
      SetPartition lambda = SetPartition::parse(lambda_spec, opts.prime);
      OrderedJson out{{"input", lambda.format()}, {"prime", opts.prime}};
      Combination comb(1, opts.prime);
      if (method != "brute") {
        comb = restrict_combinatorial(lambda);
        out["combinatorial"] = combination_to_json(comb);
        if (!opts.json())
          std::cout << "combinatorial: " << comb.str() << "\n";
      }
      if (method != "combinatorial") {
        int n = lambda.n();
        Embedding e(Poset::last_column(n), Poset::total(n), opts.prime,
                    opts.budget());
        auto res = e.restrict_down(e.super().character_row(
            e.super().char_of_nil(lambda.to_matrix())));
        auto coeffs = e.sub().decompose(res);
        out["brute"] = decomposition_to_json(
            e.sub(), coeffs, "restrict",
            embedding_json("last-column:" + std::to_string(n),
                           "total:" + std::to_string(n)),
            lambda.format());
        if (!opts.json()) {
          std::cout << "brute force:\n";
          for (int r = 0; r < e.sub().num_chars(); ++r)
            if (!coeffs[size_t(r)].is_zero())
              std::cout << "  " << coeffs[size_t(r)].str() << " * {"
                        << char_label(e.sub(), r) << "}\n";
        }
        if (method == "both") {
          std::vector<Rational> expect(size_t(e.sub().num_chars()), Rational(0));
          for (const auto& [part, c] : comb.terms())
            expect[size_t(e.sub().char_of_nil(part.extended_to(n).to_matrix()))] +=
                c;
          if (coeffs != expect)
            throw ConsistencyError(
                "combinatorial and brute-force restrictions disagree");
          if (!opts.json()) std::cout << "routes agree exactly\n";
          out["routes_agree"] = true;
        }
      }
      if (opts.json()) emit(out);
      return 0;
    }
    if (*cosets) {
      Poset P = load_poset(sub_spec);
      Poset R = load_poset(super_spec);
      auto reps = coset_reps(P, R, opts.prime, opts.budget());
      if (verify_cosets) {
        std::set<FMatrix> left, right;
        for (const auto& h : enumerate_group(P, opts.prime, opts.budget()))
          for (const auto& l : reps) {
            FMatrix u = group_mul(h, l);
            left.insert(u);
            right.insert(group_mul(l, h));
            auto f = factorize(u, P, R);
            if (f.h != h || f.l != l)
              throw ConsistencyError("factorization mismatch");
          }
        uint64_t order = group_order(R, opts.prime, opts.budget());
        if (left.size() != order || right.size() != order)
          throw ConsistencyError("coset products do not cover U_R");
      }
      if (opts.json()) {
        OrderedJson arr = OrderedJson::array();
        for (const auto& r : reps) arr.push_back(sparse_matrix_to_json(r));
        emit(OrderedJson{{"count", reps.size()},
                         {"verified", verify_cosets},
                         {"representatives", arr}});
      } else {
        std::cout << reps.size() << " coset representatives\n";
        for (const auto& r : reps)
          std::cout << "  1 + " << sparse_matrix_to_json(r).dump() << "\n";
        if (verify_cosets) std::cout << "coset partition verified\n";
      }
      return 0;
    }
    if (*check) {
      Poset P = load_poset(sub_spec);
      Poset R = load_poset(super_spec);
      auto coset = check_coset_condition(P, R, opts.prime);
      auto contain = check_containment_condition(P, R);
      OrderedJson out{
          {"coset_condition",
           {{"left", coset.left.holds}, {"right", coset.right.holds}}},
          {"containment_condition",
           {{"left", contain.left.holds}, {"right", contain.right.holds}}},
      };
      bool semidirect_applicable = false;
      SidedCheck sd;
      if (auto K = complement_poset(P, R)) {
        if (K->num_relations() + P.num_relations() == R.num_relations() &&
            is_normal_in(*K, R, opts.prime)) {
          semidirect_applicable = true;
          sd = check_semidirect_condition(P, *K, R, opts.prime);
          out["semidirect_condition"] = {{"left", sd.left.holds},
                                         {"right", sd.right.holds}};
        }
      }
      if (!semidirect_applicable)
        out["semidirect_condition"] = "not applicable (no normal pattern complement)";
      bool cond1 = Embedding(P, R, opts.prime, opts.budget())
                       .distinct_superclasses_stay_distinct();
      out["distinct_superclasses"] = cond1;
      bool predicted = coset.either() || (cond1 && contain.either()) ||
                       (semidirect_applicable && sd.either());
      out["predicts_superinduction_is_induction"] = predicted;
      if (opts.json()) {
        emit(out);
      } else {
        std::cout << coset.left.describe("coset condition, left") << "\n"
                  << coset.right.describe("coset condition, right (transposed)")
                  << "\n"
                  << contain.left.describe("containment condition") << "\n"
                  << contain.right.describe("containment condition, transposed")
                  << "\n";
        if (semidirect_applicable)
          std::cout << sd.left.describe("semidirect condition, left") << "\n"
                    << sd.right.describe("semidirect condition, right") << "\n";
        else
          std::cout << "semidirect condition: not applicable\n";
        std::cout << "distinct subgroup superclasses stay distinct: "
                  << (cond1 ? "yes" : "no") << "\n";
        std::cout << "superinduction = induction predicted: "
                  << (predicted ? "yes" : "no") << "\n";
      }
      return 0;
    }
    if (*verify) return run_verify(opts);
    if (*repro) return run_repro(opts, which);
    return 1;
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 1;
  } catch (const BudgetError& e) {
    std::cerr << "budget exceeded: " << e.what() << "\n";
    return 2;
  } catch (const ConsistencyError& e) {
    std::cerr << "internal consistency failure: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
