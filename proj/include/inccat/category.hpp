#pragma once

#include <array>
#include <functional>
#include <memory>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "inccat/ideal_lattice.hpp"
#include "inccat/isomorphism.hpp"
#include "inccat/poset.hpp"

namespace inccat {

/// An object X_P of the incidence category. Holds the concrete poset, shared
/// between copies.
class CategoryObject {
 public:
  CategoryObject() : poset_(std::make_shared<const Poset>()) {}
  explicit CategoryObject(Poset p) : poset_(std::make_shared<const Poset>(std::move(p))) {}

  const Poset& poset() const { return *poset_; }
  std::size_t size() const { return poset_->size(); }

  /// Canonical key of [X_P] for the given map class.
  CanonicalKey key(MapMode mode) const { return canonical_form(*poset_, mode); }

  bool operator==(const CategoryObject& o) const { return poset_ == o.poset_ || *poset_ == *o.poset_; }

 private:
  std::shared_ptr<const Poset> poset_;
};

/// A morphism (I1, I2, f): X_{P1} -> X_{P2}. I1 is an order ideal of P1,
/// I2 one of P2, and f an admissible isomorphism P1 \ I1 -> I2. The map is
/// stored over P1's indices, with -1 on the elements of I1.
struct Morphism {
  CategoryObject source;
  CategoryObject target;
  ElementSubset kernel_ideal;  ///< I1
  ElementSubset image_ideal;   ///< I2
  std::vector<int> map;        ///< f on P1 \ I1, -1 on I1

  /// f as a bijection between the induced subposets P1 \ I1 and I2.
  Bijection as_bijection(MapMode mode) const {
    const auto dom = induced_subposet(source.poset(), kernel_ideal.complement(source.size()));
    const auto cod = induced_subposet(target.poset(), image_ideal).from_parent(target.size());
    Bijection b{std::vector<std::size_t>(dom.to_parent.size()), mode};
    for (std::size_t i = 0; i < dom.to_parent.size(); ++i)
      b.forward[i] = static_cast<std::size_t>(cod[static_cast<std::size_t>(map[dom.to_parent[i]])]);
    return b;
  }

  /// Compact identity of the triple, for hashing within a fixed hom-set.
  std::string signature() const {
    std::string s;
    auto put = [&](std::uint64_t v) {
      for (int i = 0; i < 8; ++i) s.push_back(static_cast<char>((v >> (8 * i)) & 0xff));
    };
    put(kernel_ideal.bits());
    put(image_ideal.bits());
    for (int t : map) s.push_back(static_cast<char>(t));
    return s;
  }

  bool operator==(const Morphism& o) const {
    return kernel_ideal == o.kernel_ideal && image_ideal == o.image_ideal && map == o.map && source == o.source &&
           target == o.target;
  }
};

/// X_0 -> A -> B -> C -> X_0.
struct ShortExactSequence {
  std::array<CategoryObject, 5> objects;
  std::array<Morphism, 4> arrows;
};

/// Subobjects of X_P / X_I against the ideals J with I <= J <= P.
struct SubquotientCorrespondence {
  ElementSubset base_ideal;                     ///< I
  CategoryObject quotient;                      ///< X_P / X_I = X_{P \ I}
  std::vector<ElementSubset> ideals;            ///< the J, in P's indices
  std::vector<ElementSubset> quotient_ideals;   ///< J \ I, in the quotient's indices
  std::vector<bool> compatible;                 ///< (X_P/X_I)/(X_J/X_I) = X_P/X_J, per J
};

/// The incidence category C_F for a map class and an optional membership
/// predicate describing the family F.
class IncidenceCategory {
 public:
  using Membership = std::function<bool(const Poset&)>;

  explicit IncidenceCategory(MapMode mode = MapMode::AllPosetIsos, Membership member = {})
      : mode_(mode), member_(std::move(member)) {}

  MapMode mode() const { return mode_; }

  CategoryObject object(Poset p) const {
    if (member_ && !member_(p)) throw CategoryError("poset does not belong to the configured family");
    return CategoryObject(std::move(p));
  }
  CategoryObject null_object() const { return CategoryObject(); }

  /// Builds and validates a morphism triple.
  Morphism morphism(const CategoryObject& source, const CategoryObject& target, ElementSubset kernel_ideal,
                    ElementSubset image_ideal, std::vector<int> map) const {
    Morphism m{source, target, kernel_ideal, image_ideal, std::move(map)};
    validate(m);
    return m;
  }

  /// Throws CategoryError unless m is a well-formed triple for this category.
  void validate(const Morphism& m) const {
    if (auto why = defect(m); !why.empty()) throw CategoryError("invalid morphism: " + why);
  }
  bool is_valid(const Morphism& m) const { return defect(m).empty(); }

  Morphism identity(const CategoryObject& x) const {
    std::vector<int> map(x.size());
    for (std::size_t i = 0; i < map.size(); ++i) map[i] = static_cast<int>(i);
    return Morphism{x, x, ElementSubset{}, x.poset().all(), std::move(map)};
  }

  /// (P1, empty, empty map): everything is killed.
  Morphism zero(const CategoryObject& source, const CategoryObject& target) const {
    return Morphism{source, target, source.poset().all(), ElementSubset{}, std::vector<int>(source.size(), -1)};
  }

  /// Every morphism X_{P1} -> X_{P2}, ordered by I1, then I2 (lattice
  /// order), then the bijection lexicographically.
  std::vector<Morphism> hom_set(const CategoryObject& a, const CategoryObject& b) const {
    std::vector<Morphism> out;
    const Poset& p1 = a.poset();
    const Poset& p2 = b.poset();
    for (auto i1 : order_ideals(p1)) {
      const ElementSubset rest = i1.complement(p1.size());
      const auto dom = induced_subposet(p1, rest);
      for (auto i2 : order_ideals(p2)) {
        if (i2.size() != rest.size()) continue;
        const auto cod = induced_subposet(p2, i2);
        for (const auto& f : find_isomorphisms(dom.poset, cod.poset, mode_)) {
          std::vector<int> map(p1.size(), -1);
          for (std::size_t c = 0; c < f.size(); ++c)
            map[dom.to_parent[c]] = static_cast<int>(cod.to_parent[f.forward[c]]);
          out.push_back(Morphism{a, b, i1, i2, std::move(map)});
        }
      }
    }
    return out;
  }

  /// second o first, for first = (I1, I2, f): X1 -> X2 and
  /// second = (J2, J3, g): X2 -> X3. The result is (K1, K3, g o f) with
  /// K1 = I1 u f^-1(I2 n J2) and K3 = g(I2 \ J2).
  Morphism compose(const Morphism& second, const Morphism& first) const {
    if (!(first.target == second.source)) throw CategoryError("morphisms are not composable");
    const Poset& p1 = first.source.poset();
    const ElementSubset met = first.image_ideal & second.kernel_ideal;
    ElementSubset k1 = first.kernel_ideal;
    std::vector<int> h(p1.size(), -1);
    ElementSubset k3;
    for (std::size_t x = 0; x < p1.size(); ++x) {
      if (first.kernel_ideal.contains(x)) continue;
      const auto fx = static_cast<std::size_t>(first.map[x]);
      if (met.contains(fx)) {
        k1.insert(x);
        continue;
      }
      const int gx = second.map[fx];
      h[x] = gx;
      k3.insert(static_cast<std::size_t>(gx));
    }
    Morphism out{first.source, second.target, k1, k3, std::move(h)};
    INCCAT_CHECK(is_order_ideal(p1, k1) && first.kernel_ideal.is_subset_of(k1), "composite kernel is not an ideal above I1");
    INCCAT_CHECK(is_order_ideal(second.target.poset(), k3) && k3.is_subset_of(second.image_ideal),
                 "composite image is not an ideal inside I3");
    INCCAT_CHECK(defect(out).empty(), "composite map is not in the map class");
    return out;
  }

  /// X_{I2}.
  CategoryObject image(const Morphism& m) const {
    return CategoryObject(induced_subposet(m.target.poset(), m.image_ideal).poset);
  }

  /// (empty, I1, id): X_{I1} -> X_{P1}.
  Morphism kernel(const Morphism& m) const { return inclusion(m.source, m.kernel_ideal); }

  /// (I2, P2 \ I2, id): X_{P2} -> X_{P2 \ I2}.
  Morphism cokernel(const Morphism& m) const { return projection(m.target, m.image_ideal); }

  /// The subobject inclusion (empty, I, id): X_I -> X.
  Morphism inclusion(const CategoryObject& x, ElementSubset ideal) const {
    if (!is_order_ideal(x.poset(), ideal)) throw CategoryError("subobject must be cut out by an order ideal");
    const auto sub = induced_subposet(x.poset(), ideal);
    std::vector<int> map(sub.to_parent.size());
    for (std::size_t c = 0; c < map.size(); ++c) map[c] = static_cast<int>(sub.to_parent[c]);
    return Morphism{CategoryObject(sub.poset), x, ElementSubset{}, ideal, std::move(map)};
  }

  /// The quotient map (I, X \ I, id): X -> X_{X \ I}.
  Morphism projection(const CategoryObject& x, ElementSubset ideal) const {
    if (!is_order_ideal(x.poset(), ideal)) throw CategoryError("quotient must be taken by an order ideal");
    const auto rest = induced_subposet(x.poset(), ideal.complement(x.size()));
    const auto back = rest.from_parent(x.size());
    std::vector<int> map(x.size(), -1);
    for (std::size_t i = 0; i < x.size(); ++i)
      if (!ideal.contains(i)) map[i] = back[i];
    return Morphism{x, CategoryObject(rest.poset), ideal, rest.poset.all(), std::move(map)};
  }

  bool is_mono(const Morphism& m) const { return m.kernel_ideal.empty(); }
  bool is_epi(const Morphism& m) const { return m.image_ideal == m.target.poset().all(); }
  bool is_iso(const Morphism& m) const { return is_mono(m) && is_epi(m); }
  bool is_zero(const Morphism& m) const { return m.image_ideal.empty(); }

  /// X_P (+) X_Q = X_{P+Q}.
  CategoryObject direct_sum(const CategoryObject& a, const CategoryObject& b) const {
    return CategoryObject(disjoint_union(a.poset(), b.poset()).poset);
  }

  bool is_indecomposable(const CategoryObject& x) const { return !x.poset().empty() && is_connected(x.poset()); }
  bool is_irreducible(const CategoryObject& x) const { return x.size() == 1; }

  /// One sequence X_0 -> X_I -> X_P -> X_{P \ I} -> X_0 per ideal I of P.
  std::vector<ShortExactSequence> short_exact_sequences(const CategoryObject& x) const {
    std::vector<ShortExactSequence> out;
    for (auto ideal : order_ideals(x.poset())) {
      const Morphism in = inclusion(x, ideal);
      const Morphism out_map = projection(x, ideal);
      const CategoryObject null = null_object();
      ShortExactSequence s{{null, in.source, x, out_map.target, null},
                           {zero(null, in.source), in, out_map, zero(out_map.target, null)}};
      out.push_back(std::move(s));
    }
    return out;
  }

  /// Exact at every internal object: the image ideal of each arrow equals
  /// the kernel ideal of the next.
  bool is_exact(std::span<const Morphism> chain) const {
    for (std::size_t i = 0; i + 1 < chain.size(); ++i)
      if (!(chain[i].target == chain[i + 1].source)) throw CategoryError("chain is not composable");
    for (std::size_t i = 0; i + 1 < chain.size(); ++i)
      if (chain[i].image_ideal != chain[i + 1].kernel_ideal) return false;
    return true;
  }
  bool is_exact(const ShortExactSequence& s) const { return is_exact(std::span<const Morphism>(s.arrows)); }

  /// Bijection between subobjects of X_P / X_I and ideals J with I <= J <= P,
  /// together with the check (X_P/X_I)/(X_J/X_I) = X_P/X_J for every J.
  SubquotientCorrespondence subquotient_correspondence(const CategoryObject& x, ElementSubset ideal) const {
    const Poset& p = x.poset();
    if (!is_order_ideal(p, ideal)) throw CategoryError("base of the quotient must be an order ideal");
    const auto interval = interval_to_quotient_lattice(p, ideal, p.all());
    SubquotientCorrespondence out{ideal, CategoryObject(interval.quotient.poset), {}, {}, {}};
    for (auto qj : order_ideals(interval.quotient.poset)) {
      const ElementSubset j = interval.from_quotient(qj);
      out.ideals.push_back(j);
      out.quotient_ideals.push_back(qj);
      const Poset twice = induced_subposet(interval.quotient.poset, qj.complement(interval.quotient.poset.size())).poset;
      const Poset once = induced_subposet(p, j.complement(p.size())).poset;
      out.compatible.push_back(canonical_form(twice, mode_) == canonical_form(once, mode_));
    }
    return out;
  }

 private:
  std::string defect(const Morphism& m) const {
    const Poset& p1 = m.source.poset();
    const Poset& p2 = m.target.poset();
    if (m.map.size() != p1.size()) return "map length differs from the source size";
    if (!is_order_ideal(p1, m.kernel_ideal)) return "I1 is not an order ideal of the source";
    if (!is_order_ideal(p2, m.image_ideal)) return "I2 is not an order ideal of the target";
    ElementSubset hit;
    for (std::size_t x = 0; x < p1.size(); ++x) {
      const int t = m.map[x];
      if (m.kernel_ideal.contains(x)) {
        if (t != -1) return "map is defined on I1";
        continue;
      }
      if (t < 0 || static_cast<std::size_t>(t) >= p2.size()) return "map is undefined outside I1";
      const auto ut = static_cast<std::size_t>(t);
      if (!m.image_ideal.contains(ut)) return "map leaves I2";
      if (hit.contains(ut)) return "map is not injective";
      hit.insert(ut);
      if (mode_ == MapMode::ColorPreservingIsos && p1.color(x) != p2.color(ut)) return "map does not preserve colors";
    }
    if (hit != m.image_ideal) return "map is not onto I2";
    for (std::size_t x = 0; x < p1.size(); ++x) {
      if (m.kernel_ideal.contains(x)) continue;
      for (std::size_t y = 0; y < p1.size(); ++y) {
        if (m.kernel_ideal.contains(y)) continue;
        if (p1.leq(x, y) != p2.leq(static_cast<std::size_t>(m.map[x]), static_cast<std::size_t>(m.map[y])))
          return "map is not an order isomorphism";
      }
    }
    return {};
  }

  MapMode mode_;
  Membership member_;
};

}  // namespace inccat
