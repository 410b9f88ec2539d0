#pragma once

#include <algorithm>
#include <cstdint>
#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "inccat/family.hpp"
#include "inccat/hall.hpp"
#include "inccat/ideal_lattice.hpp"

namespace inccat {

/// The class [J_P] of an ideal lattice under the relation J_P ~ J_Q iff
/// some admissible map P -> Q exists; named by the class of P.
struct IntervalClass {
  CanonicalKey key;
  bool operator==(const IntervalClass&) const = default;
  auto operator<=>(const IntervalClass&) const = default;
};

using IncidenceElement = LinearCombination<IntervalClass>;
using IncidenceTensor = LinearCombination<std::pair<IntervalClass, IntervalClass>>;

/// phi(f)([J_P]) = f([X_P]).
inline IncidenceElement phi(const HallElement& f) {
  IncidenceElement out;
  for (const auto& [k, c] : f) out.add(IntervalClass{k}, c);
  return out;
}

inline HallElement phi_inverse(const IncidenceElement& f) {
  HallElement out;
  for (const auto& [k, c] : f) out.add(k.key, c);
  return out;
}

inline IncidenceTensor phi(const TensorElement& t) {
  IncidenceTensor out;
  for (const auto& [pair, c] : t) out.add({IntervalClass{pair.first}, IntervalClass{pair.second}}, c);
  return out;
}

/// Schmitt's incidence Hopf algebra on the family of ideal lattices J_P.
/// Products run over the elements of the lattice and classify each
/// interval through the interval / quotient-poset correspondence; the
/// coproduct searches pairs of classes whose sum is the target. Neither
/// path shares tables with HallAlgebra.
class IncidenceHopf {
 public:
  explicit IncidenceHopf(const FamilyContext& ctx) : ctx_(ctx) {}

  IntervalClass interval_class(const Poset& p) const { return IntervalClass{canonical_form(p, ctx_.mode())}; }

  IncidenceElement unit() const { return IncidenceElement::basis(IntervalClass{}); }
  Rational counit(const IncidenceElement& f) const { return f.coefficient(IntervalClass{}); }

  /// (f . g)([J_P]) = sum over x in J_P of f([0, x]) g([x, 1]).
  Rational product_at(const IncidenceElement& f, const IncidenceElement& g, const Poset& p) const {
    const IdealLattice& lattice = order_ideals(p);
    Rational total = 0;
    for (auto x : lattice) {
      const auto lower = interval_to_quotient_lattice(p, lattice.bottom(), x);
      const auto upper = interval_to_quotient_lattice(p, x, lattice.top());
      const Rational a = f.coefficient(interval_class(lower.quotient.poset));
      if (a == 0) continue;
      total += a * g.coefficient(interval_class(upper.quotient.poset));
    }
    return total;
  }

  /// The same product written over ideals: sum over I in J_P of
  /// f([J_I]) g([J_{P \ I}]).
  Rational ideal_form_product_at(const IncidenceElement& f, const IncidenceElement& g, const Poset& p) const {
    Rational total = 0;
    for (auto ideal : order_ideals(p)) {
      const Rational a = f.coefficient(interval_class(induced_subposet(p, ideal).poset));
      if (a == 0) continue;
      total += a * g.coefficient(interval_class(induced_subposet(p, ideal.complement(p.size())).poset));
    }
    return total;
  }

  /// f . g on every class whose size is reachable from the supports.
  IncidenceElement product(const IncidenceElement& f, const IncidenceElement& g) const {
    IncidenceElement out;
    std::set<std::size_t> sizes;
    for (const auto& [a, x] : f)
      for (const auto& [b, y] : g) sizes.insert(a.key.poset_size() + b.key.poset_size());
    for (auto s : sizes) {
      ctx_.require_size(s);
      for (const auto& r : ctx_.classes(s)) out.add(IntervalClass{r.key}, product_at(f, g, r.representative));
    }
    return out;
  }

  /// Delta(f)([J_P], [J_Q]) = f([J_{P+Q}]), by searching every pair of
  /// classes whose sizes add up to a support class.
  IncidenceTensor coproduct(const IncidenceElement& f) const {
    IncidenceTensor out;
    for (const auto& [target, c] : f) {
      const std::size_t n = target.key.poset_size();
      ctx_.require_size(n);
      for (std::size_t a = 0; a <= n; ++a)
        for (const auto& p : ctx_.classes(a))
          for (const auto& q : ctx_.classes(n - a)) {
            const auto dec = sum_decomposition(p.representative, q.representative);
            if (interval_class(dec.sum.poset) == target) out.add({IntervalClass{p.key}, IntervalClass{q.key}}, c);
          }
    }
    return out;
  }

 private:
  const FamilyContext& ctx_;
};

struct HopfRelationReport {
  std::size_t checks = 0;
  std::vector<std::string> violations;
  bool ok() const { return violations.empty(); }
};

/// A uniformly random relabeling of p.
inline Poset shuffled(const Poset& p, std::mt19937_64& rng) {
  std::vector<std::size_t> perm(p.size());
  for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = i;
  std::shuffle(perm.begin(), perm.end(), rng);
  return relabel(p, perm);
}

/// Checks that ~ is a Hopf relation on the truncated family of ideal
/// lattices: compatibility with products J_P x J_R = J_{P+R}, neutrality of
/// the one-element lattice J_0, and order compatibility on intervals.
/// Equivalent pairs P ~ Q are produced by random relabeling.
inline HopfRelationReport verify_hopf_relation(const FamilyContext& ctx, std::size_t cutoff, std::uint64_t seed) {
  ctx.require_size(cutoff);
  HopfRelationReport report;
  std::mt19937_64 rng(seed);
  const MapMode mode = ctx.mode();
  auto key = [&](const Poset& p) { return canonical_form(p, mode); };
  auto fail = [&](const std::string& what, const IsoClass& c) {
    report.violations.push_back(what + " for class " + c.key.hex());
  };
  const Poset empty;
  for (const IsoClass* pc : ctx.classes_up_to(cutoff)) {
    const Poset& p = pc->representative;
    const Poset q = shuffled(p, rng);

    ++report.checks;
    if (key(disjoint_union(p, empty).poset) != pc->key || key(disjoint_union(empty, q).poset) != pc->key)
      fail("one-element lattice is not neutral", *pc);
    ++report.checks;
    if (!p.empty() && key(p) == key(empty)) fail("nonempty class related to the empty class", *pc);

    for (const IsoClass* rc : ctx.classes_up_to(cutoff - p.size())) {
      const Poset& r = rc->representative;
      ++report.checks;
      if (key(disjoint_union(p, r).poset) != key(disjoint_union(q, r).poset) ||
          key(disjoint_union(r, p).poset) != key(disjoint_union(r, q).poset))
        fail("product with class " + rc->key.hex() + " does not respect ~", *pc);
      ++report.checks;
      const auto dec = sum_decomposition(p, r);
      const IdealLattice& joint = order_ideals(dec.sum.poset);
      bool bijective = joint.size() == order_ideals(p).size() * order_ideals(r).size();
      for (auto k : joint) {
        const auto [a, b] = dec.split(k);
        bijective = bijective && is_order_ideal(p, a) && is_order_ideal(r, b) && dec.join(a, b) == k;
      }
      if (!bijective) fail("J of the sum with " + rc->key.hex() + " is not the product lattice", *pc);
    }

    const auto isos = find_isomorphisms(p, q, mode, 1);
    ++report.checks;
    if (isos.empty()) {
      fail("relabeled copy is not related", *pc);
      continue;
    }
    const Bijection& f = isos.front();
    for (auto ideal : order_ideals(p)) {
      ++report.checks;
      const ElementSubset moved = f.image(ideal);
      const bool lower_ok = key(induced_subposet(p, ideal).poset) == key(induced_subposet(q, moved).poset);
      const bool upper_ok = key(induced_subposet(p, ideal.complement(p.size())).poset) ==
                            key(induced_subposet(q, moved.complement(q.size())).poset);
      if (!is_order_ideal(q, moved) || !lower_ok || !upper_ok) fail("relation is not order compatible", *pc);
    }
  }
  return report;
}

}  // namespace inccat
