#pragma once

#include <map>
#include <mutex>
#include <set>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "inccat/category.hpp"
#include "inccat/family.hpp"
#include "inccat/linalg.hpp"
#include "inccat/linear_combination.hpp"

namespace inccat {

/// Element of the Ringel-Hall algebra: a finitely supported function on
/// isomorphism classes, keyed by canonical key.
using HallElement = LinearCombination<CanonicalKey>;
using ClassPair = std::pair<CanonicalKey, CanonicalKey>;
/// Element of H (x) H, keyed by pairs of classes.
using TensorElement = LinearCombination<ClassPair>;

/// Degree (poset size) of a class key.
inline std::size_t degree(const CanonicalKey& k) { return k.poset_size(); }

/// The part of f supported in degree d.
inline HallElement homogeneous_part(const HallElement& f, std::size_t d) {
  HallElement out;
  for (const auto& [k, c] : f)
    if (degree(k) == d) out.add(k, c);
  return out;
}

/// N(P, Q; R): ideals I of R with I = P and R \ I = Q, counted by direct
/// isomorphism search. This path never touches canonical forms.
inline std::size_t structure_constant(const Poset& p, const Poset& q, const Poset& r, MapMode mode) {
  if (p.size() + q.size() != r.size()) return 0;
  std::size_t count = 0;
  for (auto ideal : order_ideals(r)) {
    if (ideal.size() != p.size()) continue;
    if (are_isomorphic(induced_subposet(r, ideal).poset, p, mode) &&
        are_isomorphic(induced_subposet(r, ideal.complement(r.size())).poset, q, mode))
      ++count;
  }
  return count;
}

/// The Ringel-Hall Hopf algebra of the incidence category of a truncated
/// family. Memo tables are guarded and never change results.
class HallAlgebra {
 public:
  explicit HallAlgebra(const FamilyContext& ctx) : ctx_(ctx) {}

  const FamilyContext& family() const { return ctx_; }

  HallElement delta(const CanonicalKey& key) const { return HallElement::basis(key); }
  HallElement delta(const Poset& p) const {
    if (!ctx_.contains(p)) throw Error("poset does not belong to family " + ctx_.name());
    return delta(ctx_.classify(p));
  }
  HallElement delta(const CategoryObject& x) const { return delta(x.poset()); }
  HallElement unit() const { return delta(CanonicalKey{}); }

  /// (f * g)(R) = sum over ideals I of R of f(I) g(R \ I), evaluated on
  /// every class R whose size is a sum of a degree of f and one of g.
  HallElement product(const HallElement& f, const HallElement& g) const {
    HallElement out;
    if (f.is_zero() || g.is_zero()) return out;
    std::set<std::size_t> fd, gd, sizes;
    for (const auto& [k, c] : f) fd.insert(degree(k));
    for (const auto& [k, c] : g) gd.insert(degree(k));
    for (auto a : fd)
      for (auto b : gd) sizes.insert(a + b);
    for (auto s : sizes) {
      ctx_.require_size(s);
      for (const auto& r : ctx_.classes(s)) {
        Rational total = 0;
        for (const auto& [ki, kq] : ctx_.ideal_splits(r.key)) {
          auto fi = f.terms().find(ki);
          if (fi == f.terms().end()) continue;
          auto gq = g.terms().find(kq);
          if (gq == g.terms().end()) continue;
          total += fi->second * gq->second;
        }
        out.add(r.key, total);
      }
    }
    return out;
  }

  /// delta_a * delta_b, memoized.
  const HallElement& basis_product(const CanonicalKey& a, const CanonicalKey& b) const {
    {
      std::lock_guard lock(mutex_);
      auto it = products_.find({a, b});
      if (it != products_.end()) return it->second;
    }
    HallElement value = product(delta(a), delta(b));
    std::lock_guard lock(mutex_);
    return products_.emplace(ClassPair{a, b}, std::move(value)).first->second;
  }

  /// N(P, Q; R) for classes, through the isomorphism-search path.
  std::size_t structure_constant(const CanonicalKey& p, const CanonicalKey& q, const CanonicalKey& r) const {
    return inccat::structure_constant(ctx_.at(p).representative, ctx_.at(q).representative,
                                      ctx_.at(r).representative, ctx_.mode());
  }

  /// Delta(f)([M], [N]) = f([M (+) N]).
  TensorElement coproduct(const HallElement& f) const {
    TensorElement out;
    for (const auto& [k, c] : f)
      for (const auto& split : ctx_.component_splits(k)) out.add(split, c);
    return out;
  }

  /// Delta(f) - f (x) 1 - 1 (x) f.
  TensorElement reduced_coproduct(const HallElement& f) const {
    TensorElement out = coproduct(f);
    out -= tensor(f, unit());
    out -= tensor(unit(), f);
    return out;
  }

  Rational counit(const HallElement& f) const { return f.coefficient(CanonicalKey{}); }

  /// S(delta_0) = delta_0; for a class of positive degree,
  /// S(x) = -x - sum S(x') * x'' over the reduced coproduct.
  HallElement antipode(const HallElement& f) const {
    HallElement out;
    for (const auto& [k, c] : f) {
      HallElement s = basis_antipode(k);
      out += c * s;
    }
    return out;
  }

  HallElement lie_bracket(const HallElement& f, const HallElement& g) const { return product(f, g) - product(g, f); }

  bool is_primitive(const HallElement& f) const { return reduced_coproduct(f).is_zero(); }

  /// f (x) g.
  static TensorElement tensor(const HallElement& f, const HallElement& g) {
    TensorElement out;
    for (const auto& [a, x] : f)
      for (const auto& [b, y] : g) out.add({a, b}, x * y);
    return out;
  }

  /// Multiplication m: H (x) H -> H.
  HallElement multiply(const TensorElement& t) const {
    HallElement out;
    for (const auto& [pair, c] : t) out += c * basis_product(pair.first, pair.second);
    return out;
  }

  /// Product in H (x) H: (a (x) b)(c (x) d) = ac (x) bd.
  TensorElement tensor_product(const TensorElement& s, const TensorElement& t) const {
    TensorElement out;
    for (const auto& [p1, x] : s)
      for (const auto& [p2, y] : t) {
        const HallElement& left = basis_product(p1.first, p2.first);
        const HallElement& right = basis_product(p1.second, p2.second);
        for (const auto& [l, a] : left)
          for (const auto& [r, b] : right) out.add({l, r}, x * y * a * b);
      }
    return out;
  }

  /// m o (S (x) id) o Delta.
  HallElement left_antipode_convolution(const HallElement& f) const {
    HallElement out;
    for (const auto& [pair, c] : coproduct(f)) out += c * product(basis_antipode(pair.first), delta(pair.second));
    return out;
  }
  /// m o (id (x) S) o Delta.
  HallElement right_antipode_convolution(const HallElement& f) const {
    HallElement out;
    for (const auto& [pair, c] : coproduct(f)) out += c * product(delta(pair.first), basis_antipode(pair.second));
    return out;
  }

  /// Basis of the degree-d primitives: the kernel of the reduced coproduct
  /// on the span of the degree-d classes, in reduced echelon form over the
  /// class order.
  std::vector<HallElement> primitive_basis(std::size_t d) const {
    const auto& cls = ctx_.classes(d);
    std::map<ClassPair, std::size_t> rows;
    std::vector<TensorElement> images;
    for (const auto& c : cls) {
      images.push_back(reduced_coproduct(delta(c.key)));
      for (const auto& [pair, v] : images.back()) rows.emplace(pair, rows.size());
    }
    Matrix<Rational> m(rows.size(), std::vector<Rational>(cls.size()));
    for (std::size_t j = 0; j < cls.size(); ++j)
      for (const auto& [pair, v] : images[j]) m[rows.at(pair)][j] = v;
    std::vector<HallElement> out;
    for (const auto& v : kernel_basis(std::move(m), cls.size())) {
      HallElement e;
      for (std::size_t j = 0; j < cls.size(); ++j) e.add(cls[j].key, v[j]);
      out.push_back(std::move(e));
    }
    return out;
  }

  /// Dimension of the degree-d primitives by exact rank computation.
  std::size_t primitive_dimension(std::size_t d) const { return primitive_basis(d).size(); }

 private:
  const HallElement& basis_antipode(const CanonicalKey& k) const {
    {
      std::lock_guard lock(mutex_);
      auto it = antipodes_.find(k);
      if (it != antipodes_.end()) return it->second;
    }
    HallElement value;
    if (degree(k) == 0) {
      value = unit();
    } else {
      value = -delta(k);
      for (const auto& [m, n] : ctx_.component_splits(k)) {
        if (degree(m) == 0 || degree(n) == 0) continue;
        value -= product(basis_antipode(m), delta(n));
      }
    }
    std::lock_guard lock(mutex_);
    return antipodes_.emplace(k, std::move(value)).first->second;
  }

  const FamilyContext& ctx_;
  mutable std::mutex mutex_;
  mutable std::map<ClassPair, HallElement> products_;
  mutable std::map<CanonicalKey, HallElement> antipodes_;
};

/// Truncated Grothendieck group: generators are the classes of size
/// <= cutoff, one relation [sub] + [quotient] - [middle] per canonical short
/// exact sequence, reduced by Smith normal form.
struct K0Presentation {
  std::size_t cutoff = 0;
  std::vector<CanonicalKey> generators;
  Matrix<Integer> relations;
  SmithForm smith;

  std::size_t free_rank() const { return smith.free_rank(); }
  std::vector<Integer> torsion() const { return smith.torsion(); }

  std::size_t generator_index(const CanonicalKey& k) const {
    for (std::size_t i = 0; i < generators.size(); ++i)
      if (generators[i] == k) return i;
    throw Error("class " + k.hex() + " is not a generator");
  }
  std::vector<Integer> unit_vector(const CanonicalKey& k) const {
    std::vector<Integer> v(generators.size());
    v[generator_index(k)] = 1;
    return v;
  }
  /// Whether k(a) = k(b) holds in the truncated group, for integer
  /// combinations a - b given as a coefficient vector.
  bool is_relation(const std::vector<Integer>& v) const { return smith.in_row_lattice(v); }

  std::string describe() const {
    std::string s = "Z^" + std::to_string(free_rank());
    for (const auto& t : torsion()) s += " + Z/" + t.str();
    return s + " (truncated at size " + std::to_string(cutoff) + ")";
  }
};

inline K0Presentation k0_truncated(const FamilyContext& ctx, std::size_t cutoff) {
  ctx.require_size(cutoff);
  K0Presentation out;
  out.cutoff = cutoff;
  for (const IsoClass* c : ctx.classes_up_to(cutoff)) out.generators.push_back(c->key);
  std::unordered_map<CanonicalKey, std::size_t> column;
  for (std::size_t i = 0; i < out.generators.size(); ++i) column.emplace(out.generators[i], i);
  const IncidenceCategory cat = ctx.category();
  for (const IsoClass* c : ctx.classes_up_to(cutoff)) {
    const CategoryObject x = cat.object(c->representative);
    for (const auto& ses : cat.short_exact_sequences(x)) {
      if (!cat.is_exact(ses)) throw std::logic_error("canonical sequence is not exact");
      std::vector<Integer> row(out.generators.size());
      row[column.at(ctx.classify(ses.objects[1].poset()))] += 1;
      row[column.at(ctx.classify(ses.objects[3].poset()))] += 1;
      row[column.at(c->key)] -= 1;
      out.relations.push_back(std::move(row));
    }
  }
  out.smith = smith_normal_form(out.relations, out.generators.size());
  return out;
}

}  // namespace inccat
