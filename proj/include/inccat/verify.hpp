#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <string>
#include <tuple>
#include <unordered_map>
#include <unordered_set>
#include <utility>
#include <vector>

#include <json.hpp>

#include "inccat/category.hpp"
#include "inccat/family.hpp"
#include "inccat/hall.hpp"
#include "inccat/incidence_hopf.hpp"
#include "inccat/io.hpp"

namespace inccat::verify {

using json = nlohmann::json;

/// Outcome of one suite: how many individual checks ran and the first few
/// counterexamples of any that failed.
struct CheckResult {
  std::string name;
  std::size_t checks = 0;
  std::size_t failures = 0;
  std::vector<json> counterexamples;

  bool ok() const { return failures == 0; }
  void check(bool passed, const auto& make_counterexample) {
    ++checks;
    if (passed) return;
    ++failures;
    if (counterexamples.size() < 5) counterexamples.push_back(make_counterexample());
  }
};

namespace detail {

inline std::vector<CategoryObject> objects_up_to(const FamilyContext& ctx, const IncidenceCategory& cat, std::size_t n) {
  std::vector<CategoryObject> out;
  for (const IsoClass* c : ctx.classes_up_to(std::min(n, ctx.max_size()))) out.push_back(cat.object(c->representative));
  return out;
}

/// All hom-sets among a list of objects, with a signature index per set.
struct HomTable {
  std::vector<CategoryObject> objects;
  std::vector<std::vector<std::vector<Morphism>>> hom;
  std::vector<std::vector<std::unordered_map<std::string, std::uint32_t>>> index;

  HomTable(const IncidenceCategory& cat, std::vector<CategoryObject> objs) : objects(std::move(objs)) {
    const std::size_t n = objects.size();
    hom.assign(n, std::vector<std::vector<Morphism>>(n));
    index.assign(n, std::vector<std::unordered_map<std::string, std::uint32_t>>(n));
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b) {
        hom[a][b] = cat.hom_set(objects[a], objects[b]);
        for (std::uint32_t i = 0; i < hom[a][b].size(); ++i) index[a][b].emplace(hom[a][b][i].signature(), i);
      }
  }
  std::size_t size() const { return objects.size(); }
};

inline json morphism_json(const Morphism& m) { return io::morphism_to_json(m); }

}  // namespace detail

/// Unit laws and associativity of composition over every composable pair
/// and triple among the objects of size <= n; composites are also checked
/// to land in the enumerated hom-set.
inline CheckResult category_laws(const FamilyContext& ctx, std::size_t n) {
  CheckResult r{"composition: unit laws and associativity", 0, 0, {}};
  const IncidenceCategory cat = ctx.category();
  const detail::HomTable t(cat, detail::objects_up_to(ctx, cat, n));
  const std::size_t k = t.size();
  constexpr std::uint32_t kMissing = static_cast<std::uint32_t>(-1);

  for (std::size_t a = 0; a < k; ++a)
    for (std::size_t b = 0; b < k; ++b)
      for (const auto& m : t.hom[a][b]) {
        r.check(cat.compose(cat.identity(t.objects[b]), m) == m && cat.compose(m, cat.identity(t.objects[a])) == m,
                [&] { return json{{"law", "unit"}, {"morphism", detail::morphism_json(m)}}; });
      }

  // comp[a][b][c][i * |H(b,c)| + j] = index of H(b,c)[j] o H(a,b)[i] in H(a,c)
  std::vector<std::vector<std::vector<std::vector<std::uint32_t>>>> comp(
      k, std::vector<std::vector<std::vector<std::uint32_t>>>(k, std::vector<std::vector<std::uint32_t>>(k)));
  for (std::size_t a = 0; a < k; ++a)
    for (std::size_t b = 0; b < k; ++b)
      for (std::size_t c = 0; c < k; ++c) {
        const auto& f = t.hom[a][b];
        const auto& g = t.hom[b][c];
        auto& table = comp[a][b][c];
        table.resize(f.size() * g.size());
        for (std::size_t i = 0; i < f.size(); ++i)
          for (std::size_t j = 0; j < g.size(); ++j) {
            const Morphism gf = cat.compose(g[j], f[i]);
            auto it = t.index[a][c].find(gf.signature());
            const bool found = it != t.index[a][c].end() && cat.is_valid(gf);
            r.check(found, [&] {
              return json{{"law", "closure"}, {"first", detail::morphism_json(f[i])}, {"second", detail::morphism_json(g[j])}};
            });
            table[i * g.size() + j] = found ? it->second : kMissing;
          }
      }

  for (std::size_t a = 0; a < k; ++a)
    for (std::size_t b = 0; b < k; ++b)
      for (std::size_t c = 0; c < k; ++c)
        for (std::size_t d = 0; d < k; ++d) {
          const std::size_t nf = t.hom[a][b].size(), ng = t.hom[b][c].size(), nh = t.hom[c][d].size();
          const auto& ab_c = comp[a][b][c];
          const auto& ac_d = comp[a][c][d];
          const auto& bc_d = comp[b][c][d];
          const auto& ab_d = comp[a][b][d];
          const std::size_t nac = t.hom[a][c].size(), nbd = t.hom[b][d].size();
          (void)nac;
          for (std::size_t i = 0; i < nf; ++i)
            for (std::size_t j = 0; j < ng; ++j) {
              const std::uint32_t gf = ab_c[i * ng + j];
              for (std::size_t l = 0; l < nh; ++l) {
                const std::uint32_t hg = bc_d[j * nh + l];
                const bool same = gf != kMissing && hg != kMissing && ac_d[gf * nh + l] == ab_d[i * nbd + hg];
                ++r.checks;
                if (same) continue;
                ++r.failures;
                if (r.counterexamples.size() < 5)
                  r.counterexamples.push_back(json{{"law", "associativity"},
                                                   {"f", detail::morphism_json(t.hom[a][b][i])},
                                                   {"g", detail::morphism_json(t.hom[b][c][j])},
                                                   {"h", detail::morphism_json(t.hom[c][d][l])}});
              }
            }
        }
  return r;
}

/// For every m: A -> B and every u: T -> A with m o u = 0 there is exactly
/// one v: T -> ker(m) with u = kernel(m) o v; dually for cokernels. Also
/// m o kernel(m) = 0 and cokernel(m) o m = 0.
inline std::pair<CheckResult, CheckResult> kernel_cokernel_universal(const FamilyContext& ctx, std::size_t n) {
  CheckResult ker{"kernel universal property", 0, 0, {}};
  CheckResult cok{"cokernel universal property", 0, 0, {}};
  const IncidenceCategory cat = ctx.category();
  const detail::HomTable t(cat, detail::objects_up_to(ctx, cat, n));
  for (std::size_t a = 0; a < t.size(); ++a)
    for (std::size_t b = 0; b < t.size(); ++b)
      for (const auto& m : t.hom[a][b]) {
        const Morphism k = cat.kernel(m);
        ker.check(cat.is_zero(cat.compose(m, k)), [&] { return json{{"morphism", detail::morphism_json(m)}}; });
        const Morphism q = cat.cokernel(m);
        cok.check(cat.is_zero(cat.compose(q, m)), [&] { return json{{"morphism", detail::morphism_json(m)}}; });
        for (std::size_t s = 0; s < t.size(); ++s) {
          const auto to_kernel = cat.hom_set(t.objects[s], k.source);
          for (const auto& u : t.hom[s][a]) {
            const bool kills = cat.is_zero(cat.compose(m, u));
            std::size_t factorizations = 0;
            for (const auto& v : to_kernel) factorizations += cat.compose(k, v) == u;
            ker.check(factorizations == (kills ? 1u : 0u), [&] {
              return json{{"morphism", detail::morphism_json(m)}, {"test", detail::morphism_json(u)},
                          {"factorizations", factorizations}};
            });
          }
          const auto from_cokernel = cat.hom_set(q.target, t.objects[s]);
          for (const auto& u : t.hom[b][s]) {
            const bool kills = cat.is_zero(cat.compose(u, m));
            std::size_t factorizations = 0;
            for (const auto& v : from_cokernel) factorizations += cat.compose(v, q) == u;
            cok.check(factorizations == (kills ? 1u : 0u), [&] {
              return json{{"morphism", detail::morphism_json(m)}, {"test", detail::morphism_json(u)},
                          {"factorizations", factorizations}};
            });
          }
        }
      }
  return {ker, cok};
}

/// is_mono agrees with left cancellability, is_epi with right
/// cancellability, quantified over all test objects of size <= n.
inline CheckResult mono_epi_cancellability(const FamilyContext& ctx, std::size_t n) {
  CheckResult r{"mono/epi vs cancellability", 0, 0, {}};
  const IncidenceCategory cat = ctx.category();
  const detail::HomTable t(cat, detail::objects_up_to(ctx, cat, n));
  for (std::size_t a = 0; a < t.size(); ++a)
    for (std::size_t b = 0; b < t.size(); ++b)
      for (const auto& m : t.hom[a][b]) {
        bool left = true, right = true;
        for (std::size_t s = 0; s < t.size() && (left || right); ++s) {
          std::unordered_set<std::string> seen;
          for (const auto& u : t.hom[s][a]) left = left && seen.insert(cat.compose(m, u).signature()).second;
          seen.clear();
          for (const auto& u : t.hom[b][s]) right = right && seen.insert(cat.compose(u, m).signature()).second;
        }
        r.check(left == cat.is_mono(m) && right == cat.is_epi(m), [&] {
          return json{{"morphism", detail::morphism_json(m)}, {"left_cancellable", left}, {"right_cancellable", right}};
        });
      }
  return r;
}

/// Monos X_Q -> X_P with image X_I number |Aut(I)| when Q = I and none
/// otherwise; epis with kernel X_I number |Aut(P \ I)| when the target is
/// P \ I and none otherwise.
inline CheckResult torsor_counts(const FamilyContext& ctx, std::size_t n) {
  CheckResult r{"mono/epi torsors over Aut_M", 0, 0, {}};
  const IncidenceCategory cat = ctx.category();
  const MapMode mode = ctx.mode();
  const auto objs = detail::objects_up_to(ctx, cat, n);
  for (const auto& p : objs)
    for (const auto& q : objs) {
      const auto into = cat.hom_set(q, p);
      const auto out_of = cat.hom_set(p, q);
      for (auto ideal : order_ideals(p.poset())) {
        const Poset sub = induced_subposet(p.poset(), ideal).poset;
        const Poset quo = induced_subposet(p.poset(), ideal.complement(p.size())).poset;
        std::size_t monos = 0, epis = 0;
        for (const auto& m : into) monos += cat.is_mono(m) && m.image_ideal == ideal;
        for (const auto& m : out_of) epis += cat.is_epi(m) && m.kernel_ideal == ideal;
        const std::size_t want_mono = are_isomorphic(q.poset(), sub, mode) ? find_isomorphisms(sub, sub, mode).size() : 0;
        const std::size_t want_epi = are_isomorphic(q.poset(), quo, mode) ? find_isomorphisms(quo, quo, mode).size() : 0;
        r.check(monos == want_mono && epis == want_epi, [&] {
          return json{{"P", io::poset_to_json(p.poset())}, {"Q", io::poset_to_json(q.poset())},
                      {"ideal", io::subset_to_json(p.poset(), ideal)}, {"monos", monos}, {"expected_monos", want_mono},
                      {"epis", epis}, {"expected_epis", want_epi}};
        });
      }
    }
  return r;
}

/// Every exact X_0 -> A -> B -> C -> X_0 found among the hom-sets of objects
/// of size <= n has A = X_I and C = X_{B \ I} for an ideal I of B; the
/// canonical sequences are exact, one per ideal.
inline CheckResult ses_completeness(const FamilyContext& ctx, std::size_t n) {
  CheckResult r{"short exact sequences: classification", 0, 0, {}};
  const IncidenceCategory cat = ctx.category();
  const MapMode mode = ctx.mode();
  const auto objs = detail::objects_up_to(ctx, cat, n);
  const CategoryObject null = cat.null_object();
  for (const auto& b : objs) {
    const auto canonical = cat.short_exact_sequences(b);
    bool all_exact = canonical.size() == order_ideals(b.poset()).size();
    for (const auto& s : canonical) all_exact = all_exact && cat.is_exact(s);
    r.check(all_exact, [&] { return json{{"middle", io::poset_to_json(b.poset())}, {"issue", "canonical sequences"}}; });

    std::vector<std::pair<Morphism, Morphism>> left;   // (X_0 -> A, A -> B), exact at A
    std::vector<std::pair<Morphism, Morphism>> right;  // (B -> C, C -> X_0), exact at C
    for (const auto& a : objs) {
      const Morphism in = cat.zero(null, a);
      for (const auto& alpha : cat.hom_set(a, b)) {
        const Morphism pair[2] = {in, alpha};
        if (cat.is_exact(std::span<const Morphism>(pair))) left.emplace_back(in, alpha);
      }
    }
    for (const auto& c : objs) {
      const Morphism out = cat.zero(c, null);
      for (const auto& beta : cat.hom_set(b, c)) {
        const Morphism pair[2] = {beta, out};
        if (cat.is_exact(std::span<const Morphism>(pair))) right.emplace_back(beta, out);
      }
    }
    for (const auto& [in, alpha] : left)
      for (const auto& [beta, out] : right) {
        const Morphism chain[4] = {in, alpha, beta, out};
        if (!cat.is_exact(std::span<const Morphism>(chain))) continue;
        const ElementSubset ideal = alpha.image_ideal;
        const bool classified =
            is_order_ideal(b.poset(), ideal) &&
            are_isomorphic(alpha.source.poset(), induced_subposet(b.poset(), ideal).poset, mode) &&
            are_isomorphic(beta.target.poset(), induced_subposet(b.poset(), ideal.complement(b.size())).poset, mode);
        r.check(classified, [&] {
          return json{{"alpha", detail::morphism_json(alpha)}, {"beta", detail::morphism_json(beta)}};
        });
      }
  }
  return r;
}

/// Subobjects of X_P / X_I correspond to the ideals between I and P, and
/// (X_P/X_I)/(X_J/X_I) = X_P/X_J.
inline CheckResult subquotients(const FamilyContext& ctx, std::size_t n) {
  CheckResult r{"subobject/quotient correspondence", 0, 0, {}};
  const IncidenceCategory cat = ctx.category();
  for (const auto& x : detail::objects_up_to(ctx, cat, n))
    for (auto ideal : order_ideals(x.poset())) {
      const auto sq = cat.subquotient_correspondence(x, ideal);
      std::size_t between = 0;
      for (auto j : order_ideals(x.poset())) between += ideal.is_subset_of(j);
      bool ok = sq.ideals.size() == between && sq.quotient_ideals.size() == order_ideals(sq.quotient.poset()).size();
      for (std::size_t i = 0; i < sq.ideals.size(); ++i) ok = ok && sq.compatible[i] && ideal.is_subset_of(sq.ideals[i]);
      r.check(ok, [&] { return json{{"P", io::poset_to_json(x.poset())}, {"I", io::subset_to_json(x.poset(), ideal)}}; });
    }
  return r;
}

namespace detail {
using Triple = std::tuple<CanonicalKey, CanonicalKey, CanonicalKey>;
using TripleTensor = LinearCombination<Triple>;

inline TripleTensor coproduct_left(const HallAlgebra& h, const TensorElement& t) {
  TripleTensor out;
  for (const auto& [pair, c] : t)
    for (const auto& [inner, d] : h.coproduct(h.delta(pair.first)))
      out.add({inner.first, inner.second, pair.second}, c * d);
  return out;
}
inline TripleTensor coproduct_right(const HallAlgebra& h, const TensorElement& t) {
  TripleTensor out;
  for (const auto& [pair, c] : t)
    for (const auto& [inner, d] : h.coproduct(h.delta(pair.second)))
      out.add({pair.first, inner.first, inner.second}, c * d);
  return out;
}
}  // namespace detail

/// Hopf axioms on delta generators: unit, associativity, coassociativity,
/// cocommutativity, counit, bialgebra compatibility, grading, antipode.
inline CheckResult hopf_axioms(const FamilyContext& ctx, std::size_t n) {
  CheckResult r{"Hall algebra Hopf axioms", 0, 0, {}};
  const HallAlgebra h(ctx);
  const auto classes = ctx.classes_up_to(std::min(n, ctx.max_size()));
  auto ce = [&](const char* law, std::initializer_list<const IsoClass*> cs) {
    json j{{"law", law}, {"classes", json::array()}};
    for (const auto* c : cs) j["classes"].push_back(io::poset_to_json(c->representative));
    return j;
  };
  const HallElement one = h.unit();
  for (const IsoClass* a : classes) {
    const HallElement da = h.delta(a->key);
    r.check(h.product(one, da) == da && h.product(da, one) == da, [&] { return ce("unit", {a}); });

    const TensorElement cop = h.coproduct(da);
    TensorElement swapped;
    bool graded = true;
    for (const auto& [pair, c] : cop) {
      swapped.add({pair.second, pair.first}, c);
      graded = graded && degree(pair.first) + degree(pair.second) == a->size;
    }
    r.check(graded, [&] { return ce("coproduct grading", {a}); });
    r.check(swapped == cop, [&] { return ce("cocommutativity", {a}); });
    r.check(detail::coproduct_left(h, cop) == detail::coproduct_right(h, cop), [&] { return ce("coassociativity", {a}); });

    HallElement left_counit, right_counit;
    for (const auto& [pair, c] : cop) {
      left_counit += (c * h.counit(h.delta(pair.first))) * h.delta(pair.second);
      right_counit += (c * h.counit(h.delta(pair.second))) * h.delta(pair.first);
    }
    r.check(left_counit == da && right_counit == da, [&] { return ce("counit", {a}); });

    const HallElement expected = h.counit(da) * one;
    r.check(h.left_antipode_convolution(da) == expected && h.right_antipode_convolution(da) == expected,
            [&] { return ce("antipode", {a}); });
  }
  for (const IsoClass* a : classes)
    for (const IsoClass* b : classes) {
      if (a->size + b->size > n) continue;
      const HallElement ab = h.product(h.delta(a->key), h.delta(b->key));
      bool graded = true;
      for (const auto& [k, c] : ab) graded = graded && degree(k) == a->size + b->size;
      r.check(graded, [&] { return ce("product grading", {a, b}); });
      r.check(h.coproduct(ab) == h.tensor_product(h.coproduct(h.delta(a->key)), h.coproduct(h.delta(b->key))),
              [&] { return ce("bialgebra compatibility", {a, b}); });
      for (const IsoClass* c : classes) {
        if (a->size + b->size + c->size > n) continue;
        const HallElement dc = h.delta(c->key);
        r.check(h.product(ab, dc) == h.product(h.delta(a->key), h.product(h.delta(b->key), dc)),
                [&] { return ce("associativity", {a, b, c}); });
      }
    }
  return r;
}

/// Coefficients of delta_P * delta_Q against N(P, Q; R) counted by direct
/// isomorphism search, for every R of size |P| + |Q| <= n.
inline CheckResult structure_constants(const FamilyContext& ctx, std::size_t n) {
  CheckResult r{"product coefficients vs structure constants", 0, 0, {}};
  const HallAlgebra h(ctx);
  const auto classes = ctx.classes_up_to(std::min(n, ctx.max_size()));
  for (const IsoClass* a : classes)
    for (const IsoClass* b : classes) {
      if (a->size + b->size > n) continue;
      const HallElement ab = h.product(h.delta(a->key), h.delta(b->key));
      for (const auto& rc : ctx.classes(a->size + b->size)) {
        const std::size_t direct = structure_constant(a->representative, b->representative, rc.representative, ctx.mode());
        r.check(ab.coefficient(rc.key) == Rational(direct), [&] {
          return json{{"P", io::poset_to_json(a->representative)}, {"Q", io::poset_to_json(b->representative)},
                      {"R", io::poset_to_json(rc.representative)}, {"direct", direct},
                      {"product", to_string(ab.coefficient(rc.key))}};
        });
      }
    }
  return r;
}

/// phi intertwines the Hall structure with the incidence-algebra structure
/// computed over lattice intervals: products, coproducts, unit, counit,
/// and the transported antipode.
inline CheckResult phi_isomorphism(const FamilyContext& ctx, std::size_t n) {
  CheckResult r{"phi: Hall algebra = incidence Hopf algebra", 0, 0, {}};
  const HallAlgebra h(ctx);
  const IncidenceHopf inc(ctx);
  const auto classes = ctx.classes_up_to(std::min(n, ctx.max_size()));
  r.check(phi(h.unit()) == inc.unit(), [] { return json{{"law", "unit"}}; });
  for (const IsoClass* a : classes) {
    const HallElement da = h.delta(a->key);
    r.check(h.counit(da) == inc.counit(phi(da)), [&] { return json{{"law", "counit"}, {"class", a->key.hex()}}; });
    r.check(phi(h.coproduct(da)) == inc.coproduct(phi(da)),
            [&] { return json{{"law", "coproduct"}, {"P", io::poset_to_json(a->representative)}}; });
    // antipode transported by phi satisfies the antipode axiom with the
    // incidence-side product and coproduct
    IncidenceElement conv;
    for (const auto& [pair, c] : inc.coproduct(phi(da)))
      conv += c * inc.product(phi(h.antipode(h.delta(pair.first.key))), IncidenceElement::basis(pair.second));
    r.check(conv == inc.counit(phi(da)) * inc.unit(),
            [&] { return json{{"law", "antipode"}, {"P", io::poset_to_json(a->representative)}}; });
  }
  for (const IsoClass* a : classes)
    for (const IsoClass* b : classes) {
      if (a->size + b->size > n) continue;
      const IncidenceElement fa = phi(h.delta(a->key)), fb = phi(h.delta(b->key));
      r.check(phi(h.product(h.delta(a->key), h.delta(b->key))) == inc.product(fa, fb), [&] {
        return json{{"law", "product"}, {"P", io::poset_to_json(a->representative)},
                    {"Q", io::poset_to_json(b->representative)}};
      });
      for (const auto& rc : ctx.classes(a->size + b->size))
        r.check(inc.product_at(fa, fb, rc.representative) == inc.ideal_form_product_at(fa, fb, rc.representative),
                [&] { return json{{"law", "interval form vs ideal form"}, {"R", io::poset_to_json(rc.representative)}}; });
    }
  return r;
}

/// delta_P is primitive exactly for connected P (sizes 1..n), and the
/// kernel of the reduced coproduct in each degree <= kernel_degree is
/// spanned by the connected deltas.
inline CheckResult primitives(const FamilyContext& ctx, std::size_t n, std::size_t kernel_degree) {
  CheckResult r{"primitives = connected deltas", 0, 0, {}};
  const HallAlgebra h(ctx);
  for (const IsoClass* a : ctx.classes_up_to(std::min(n, ctx.max_size()))) {
    if (a->size == 0) continue;
    r.check(h.is_primitive(h.delta(a->key)) == is_connected(a->representative),
            [&] { return json{{"P", io::poset_to_json(a->representative)}}; });
  }
  for (std::size_t d = 1; d <= std::min(kernel_degree, ctx.max_size()); ++d) {
    const auto basis = h.primitive_basis(d);
    std::vector<HallElement> connected;
    for (const auto& c : ctx.classes(d))
      if (is_connected(c.representative)) connected.push_back(h.delta(c.key));
    bool spans = basis.size() == connected.size();
    for (const auto& e : connected) spans = spans && h.is_primitive(e);
    r.check(spans, [&] {
      return json{{"degree", d}, {"kernel_dimension", basis.size()}, {"connected_classes", connected.size()}};
    });
  }
  return r;
}

/// Truncated K0 is free of rank = number of colors, with
/// k(X_P) = sum over colors of (count) * k(point of that color).
inline CheckResult grothendieck_group(const FamilyContext& ctx, std::size_t cutoff) {
  CheckResult r{"truncated K0", 0, 0, {}};
  const K0Presentation k0 = k0_truncated(ctx, cutoff);
  const std::size_t colors = ctx.spec().colored() ? ctx.spec().colors : 1;
  r.check(k0.free_rank() == colors && k0.torsion().empty(),
          [&] { return json{{"group", k0.describe()}, {"expected_rank", colors}}; });
  std::vector<CanonicalKey> points(colors);
  for (const auto& c : ctx.classes(1)) points[c.representative.color(0)] = c.key;
  for (const auto& g : k0.generators) {
    const IsoClass& cls = ctx.at(g);
    std::vector<Integer> v = k0.unit_vector(g);
    for (std::size_t col = 0; col < colors; ++col) v[k0.generator_index(points[col])] -= cls.color_vector[col];
    r.check(k0.is_relation(v), [&] { return json{{"P", io::poset_to_json(cls.representative)}}; });
  }
  return r;
}

/// Forest families: |J_t| = (admissible cuts of t) + 1 for every tree t;
/// the extra ideal is the empty one, where the whole tree is pruned.
inline CheckResult admissible_cuts(const FamilyContext& ctx, std::size_t n) {
  CheckResult r{"order ideals vs admissible cuts", 0, 0, {}};
  for (const IsoClass* c : ctx.classes_up_to(std::min(n, ctx.max_size()))) {
    if (c->size == 0 || !is_connected(c->representative)) continue;
    const std::size_t ideals = order_ideals(c->representative).size();
    const std::size_t cuts = count_admissible_cuts(c->representative, ctx.spec().root_max);
    r.check(ideals == cuts + 1, [&] {
      return json{{"tree", io::poset_to_json(c->representative)}, {"ideals", ideals}, {"cuts", cuts}};
    });
  }
  return r;
}

inline CheckResult closure(const FamilyContext& ctx) {
  CheckResult r{"family closure", 0, 0, {}};
  const auto rep = verify_closure(ctx);
  r.checks = rep.checks;
  r.failures = rep.violations.size();
  for (std::size_t i = 0; i < std::min<std::size_t>(5, rep.violations.size()); ++i)
    r.counterexamples.push_back(json{{"violation", rep.violations[i]}});
  return r;
}

inline CheckResult hopf_relation(const FamilyContext& ctx, std::size_t n, std::uint64_t seed) {
  CheckResult r{"Hopf relation on ideal lattices", 0, 0, {}};
  const auto rep = verify_hopf_relation(ctx, std::min(n, ctx.max_size()), seed);
  r.checks = rep.checks;
  r.failures = rep.violations.size();
  for (std::size_t i = 0; i < std::min<std::size_t>(5, rep.violations.size()); ++i)
    r.counterexamples.push_back(json{{"violation", rep.violations[i]}});
  return r;
}

/// Per-suite size bounds.
struct SuiteSizes {
  std::size_t composition = 3;
  std::size_t universal = 3;
  std::size_t ses = 4;
  std::size_t hopf = 5;
  std::size_t primitive_kernel = 4;
  std::size_t k0 = 4;
  std::size_t relation = 4;

  static SuiteSizes quick() { return {3, 3, 3, 3, 3, 3, 3}; }
  static SuiteSizes deep(std::size_t d) { return {d, d, d, d, d, d, d}; }
  SuiteSizes capped(std::size_t n) const {
    auto c = [&](std::size_t v) { return std::min(v, n); };
    return {c(composition), c(universal), c(ses), c(hopf), c(primitive_kernel), c(k0), c(relation)};
  }
};

/// The full axiom suite for one family; schmitt adds the incidence-side
/// checks.
inline std::vector<CheckResult> run_all(const FamilyContext& ctx, SuiteSizes sizes, bool schmitt, std::uint64_t seed) {
  sizes = sizes.capped(ctx.max_size());
  std::vector<CheckResult> out;
  out.push_back(closure(ctx));
  out.push_back(category_laws(ctx, sizes.composition));
  auto [ker, cok] = kernel_cokernel_universal(ctx, sizes.universal);
  out.push_back(std::move(ker));
  out.push_back(std::move(cok));
  out.push_back(mono_epi_cancellability(ctx, sizes.universal));
  out.push_back(torsor_counts(ctx, sizes.universal));
  out.push_back(ses_completeness(ctx, sizes.ses));
  out.push_back(subquotients(ctx, sizes.ses));
  out.push_back(hopf_axioms(ctx, sizes.hopf));
  out.push_back(structure_constants(ctx, sizes.hopf));
  out.push_back(primitives(ctx, sizes.hopf, sizes.primitive_kernel));
  out.push_back(grothendieck_group(ctx, sizes.k0));
  if (ctx.spec().forest()) out.push_back(admissible_cuts(ctx, sizes.hopf));
  if (schmitt) {
    out.push_back(phi_isomorphism(ctx, sizes.hopf));
    out.push_back(hopf_relation(ctx, sizes.relation, seed));
  }
  return out;
}

}  // namespace inccat::verify
