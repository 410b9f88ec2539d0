// Acceptance run: one PASS/FAIL line per criterion, exit 1 if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "inccat/inccat.hpp"
#include "oracles.hpp"

using namespace inccat;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

/// Folds suite results into one outcome, naming the first failing suite.
struct Tally {
  std::size_t checks = 0;
  std::vector<std::string> failures;

  void add(const verify::CheckResult& r, const std::string& where) {
    checks += r.checks;
    if (r.ok()) return;
    std::string msg = where + ": " + r.name + " failed " + std::to_string(r.failures) + "/" + std::to_string(r.checks);
    if (!r.counterexamples.empty()) msg += " e.g. " + r.counterexamples[0].dump();
    failures.push_back(msg);
  }
  void add(bool ok, const std::string& what) {
    ++checks;
    if (!ok) failures.push_back(what);
  }
  Outcome outcome(const std::string& summary) const {
    if (failures.empty()) return {true, summary + ", " + std::to_string(checks) + " checks"};
    return {false, std::to_string(failures.size()) + " failures; first: " + failures[0]};
  }
};

Outcome binomial_law() {
  const auto ctx = sets_up_to(8);
  const HallAlgebra h(ctx);
  Tally t;
  for (std::size_t n = 0; n <= 8; ++n)
    for (std::size_t m = 0; n + m <= 8; ++m) {
      const auto& a = ctx.classes(n)[0].key;
      const auto& b = ctx.classes(m)[0].key;
      const auto& ab = ctx.classes(n + m)[0].key;
      const HallElement expected = Rational(oracle::binomial(n + m, n)) * HallElement::basis(ab);
      t.add(h.product(h.delta(a), h.delta(b)) == expected,
            "n=" + std::to_string(n) + " m=" + std::to_string(m));
    }
  return t.outcome("all n+m <= 8");
}

Outcome colored_law() {
  Tally t;
  for (std::uint32_t k : {2u, 3u}) {
    const auto ctx = colored_sets_up_to(6, k);
    const HallAlgebra h(ctx);
    std::map<std::vector<std::size_t>, CanonicalKey> by_vector;
    for (const auto* c : ctx.classes_up_to(6)) by_vector.emplace(c->color_vector, c->key);
    for (const auto& [u, ku] : by_vector)
      for (const auto& [v, kv] : by_vector) {
        std::size_t total = 0;
        std::vector<std::size_t> w(k);
        std::uint64_t coefficient = 1;
        for (std::size_t i = 0; i < k; ++i) {
          w[i] = u[i] + v[i];
          total += w[i];
          coefficient *= oracle::binomial(w[i], u[i]);
        }
        if (total > 6) continue;
        const HallElement expected = Rational(coefficient) * HallElement::basis(by_vector.at(w));
        t.add(h.product(h.delta(ku), h.delta(kv)) == expected, "k=" + std::to_string(k) + " " + ku.hex() + " * " + kv.hex());
      }
  }
  return t.outcome("k = 2, 3, total size <= 6");
}

Outcome associativity_lemma() {
  Tally t;
  t.add(verify::category_laws(fin_up_to(3), 3), "fin");
  t.add(verify::category_laws(forests_up_to(4), 4), "forests");
  return t.outcome("Fin <= 3, Forests <= 4, every composable triple");
}

Outcome category_exactness() {
  Tally t;
  for (const auto& ctx : {fin_up_to(4), sets_up_to(4), colored_sets_up_to(4, 2), forests_up_to(4)}) {
    auto [ker, cok] = verify::kernel_cokernel_universal(ctx, 3);
    t.add(ker, ctx.name());
    t.add(cok, ctx.name());
    t.add(verify::mono_epi_cancellability(ctx, 3), ctx.name());
    t.add(verify::torsor_counts(ctx, 3), ctx.name());
    t.add(verify::ses_completeness(ctx, 4), ctx.name());
    t.add(verify::subquotients(ctx, 4), ctx.name());
  }
  return t.outcome("universal properties <= 3, SES completeness <= 4");
}

Outcome hopf_suite() {
  Tally t;
  for (const auto& ctx : {fin_up_to(5), sets_up_to(5), colored_sets_up_to(5, 2), forests_up_to(5)})
    t.add(verify::hopf_axioms(ctx, 5), ctx.name());
  return t.outcome("Fin, Sets, ColoredSets(2), Forests at total size <= 5");
}

Outcome phi_theorem() {
  Tally t;
  for (const auto& ctx : {fin_up_to(5), sets_up_to(5), colored_sets_up_to(5, 2), forests_up_to(5)})
    t.add(verify::phi_isomorphism(ctx, 5), ctx.name());
  return t.outcome("Fin, Sets, ColoredSets(2), Forests at total size <= 5");
}

Outcome primitives() {
  Tally t;
  for (const auto& ctx : {fin_up_to(5), sets_up_to(5), colored_sets_up_to(5, 2), colored_sets_up_to(5, 3),
                          forests_up_to(5), forests_up_to(5, true), colored_forests_up_to(5, 2)})
    t.add(verify::primitives(ctx, 5, 4), ctx.name());
  return t.outcome("7 families, deltas <= 5, kernels in degree <= 4");
}

Outcome truncated_k0() {
  Tally t;
  for (const auto& ctx : {fin_up_to(4), forests_up_to(4), colored_sets_up_to(4, 1), colored_sets_up_to(4, 2),
                          colored_sets_up_to(4, 3)})
    t.add(verify::grothendieck_group(ctx, 4), ctx.name());
  return t.outcome("cutoff 4: Fin, Forests rank 1; ColoredSets(k) rank k");
}

Outcome admissible_cuts() {
  Tally t;
  for (bool root_max : {false, true}) t.add(verify::admissible_cuts(forests_up_to(5, root_max), 5), "forests");
  for (std::size_t n = 1; n <= 5; ++n) {
    std::vector<std::vector<int>> trees;
    oracle::rooted_trees(n, trees);
    for (const auto& parent : trees) {
      const Poset tree = oracle::poset_of_parents(parent);
      t.add(order_ideals(tree).size() == oracle::admissible_cuts_by_parent(parent) + 1,
            "tree " + io::poset_to_json(tree).dump());
    }
  }
  return t.outcome("all rooted trees <= 5 vertices, ideals = cuts + 1 (empty cut included)");
}

Outcome oracle_cross_checks() {
  Tally t;
  // order ideals against the subset filter
  const auto fin7 = fin_up_to(7);
  for (const auto* c : fin7.classes_up_to(7)) {
    std::set<std::uint64_t> lattice, brute;
    for (auto ideal : order_ideals(c->representative)) lattice.insert(ideal.bits());
    for (auto ideal : oracle::ideals_by_subset_filter(c->representative)) brute.insert(ideal.bits());
    t.add(lattice == brute && lattice.size() == order_ideals(c->representative).size(), "ideals of " + c->key.hex());
  }

  // product coefficients against direct counts of ideal splits
  const auto fin5 = fin_up_to(5);
  const HallAlgebra h(fin5);
  auto class_of = [&](const Poset& p) -> const IsoClass* {
    for (const auto& c : fin5.classes(p.size()))
      if (oracle::isomorphic_by_permutations(p, c.representative, false)) return &c;
    return nullptr;
  };
  std::map<std::pair<CanonicalKey, CanonicalKey>, HallElement> counted;
  for (const auto* r : fin5.classes_up_to(5))
    for (auto ideal : oracle::ideals_by_subset_filter(r->representative)) {
      const Poset& rp = r->representative;
      const auto* a = class_of(induced_subposet(rp, ideal).poset);
      const auto* b = class_of(induced_subposet(rp, ideal.complement(rp.size())).poset);
      counted[{a->key, b->key}].add(r->key, 1);
    }
  for (const auto* a : fin5.classes_up_to(5))
    for (const auto* b : fin5.classes_up_to(5)) {
      if (a->size + b->size > 5) continue;
      const HallElement expected = counted.count({a->key, b->key}) ? counted.at({a->key, b->key}) : HallElement();
      t.add(h.product(h.delta(a->key), h.delta(b->key)) == expected, "product " + a->key.hex() + " * " + b->key.hex());
    }

  // canonical form against pairwise isomorphism search
  for (std::size_t n = 0; n <= 5; ++n) {
    std::map<CanonicalKey, std::vector<Poset>> groups;
    for (const auto& p : oracle::labeled_posets(n)) groups[canonical_form(p, MapMode::AllPosetIsos)].push_back(p);
    for (const auto& [key, members] : groups)
      for (const auto& p : members) t.add(oracle::isomorphic_by_permutations(members[0], p, false), "same key " + key.hex());
    std::vector<const Poset*> firsts;
    for (const auto& [key, members] : groups) firsts.push_back(&members[0]);
    for (std::size_t i = 0; i < firsts.size(); ++i)
      for (std::size_t j = i + 1; j < firsts.size(); ++j)
        t.add(!oracle::isomorphic_by_permutations(*firsts[i], *firsts[j], false), "distinct keys, isomorphic posets");
    t.add(groups.size() == fin7.classes(n).size(), "class count at size " + std::to_string(n));
  }
  // colored: every 2-coloring of every labeled poset of size <= 3
  for (std::size_t n = 0; n <= 3; ++n) {
    std::vector<Poset> colored;
    for (const auto& p : oracle::labeled_posets(n))
      for (std::uint32_t bits = 0; bits < (1u << n); ++bits) {
        std::vector<std::uint32_t> colors;
        for (std::size_t v = 0; v < n; ++v) colors.push_back((bits >> v) & 1u);
        colored.push_back(Poset::from_down_sets(p.down_rows(), {}, colors));
      }
    for (std::size_t i = 0; i < colored.size(); ++i)
      for (std::size_t j = i; j < colored.size(); ++j) {
        const bool same_key = canonical_form(colored[i], MapMode::ColorPreservingIsos) ==
                              canonical_form(colored[j], MapMode::ColorPreservingIsos);
        t.add(same_key == oracle::isomorphic_by_permutations(colored[i], colored[j], true), "colored key mismatch");
      }
  }
  return t.outcome("ideals n <= 7, products <= 5, canonical keys on all labeled posets <= 5");
}

struct Criterion {
  int id;
  const char* name;
  double limit_seconds;  // 0: no runtime bound
  std::function<Outcome()> run;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "binomial law in Sets", 10, binomial_law},
      {2, "colored binomial law", 30, colored_law},
      {3, "associativity of composition", 120, associativity_lemma},
      {4, "category and exactness suite", 0, category_exactness},
      {5, "Hopf axioms", 300, hopf_suite},
      {6, "Hall to incidence Hopf isomorphism", 0, phi_theorem},
      {7, "primitives are connected deltas", 0, primitives},
      {8, "truncated Grothendieck group", 0, truncated_k0},
      {9, "order ideals vs admissible cuts", 0, admissible_cuts},
      {10, "oracle cross-checks", 0, oracle_cross_checks},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (c.limit_seconds > 0 && secs > c.limit_seconds) {
      o.pass = false;
      o.detail += "; runtime over " + std::to_string(static_cast<int>(c.limit_seconds)) + " s";
    }
    char timing[32];
    std::snprintf(timing, sizeof timing, "%.2fs", secs);
    std::cout << (o.pass ? "PASS" : "FAIL") << " [" << c.id << "] " << c.name << " (" << timing << ") " << o.detail
              << std::endl;
    failed += !o.pass;
  }
  std::cout << (criteria.size() - failed) << "/" << criteria.size() << " criteria passed" << std::endl;
  return failed == 0 ? 0 : 1;
}
