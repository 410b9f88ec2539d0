#pragma once

#include <algorithm>
#include <memory>
#include <mutex>
#include <span>
#include <unordered_map>
#include <utility>
#include <vector>

#include "inccat/poset.hpp"

namespace inccat {

/// S is an order ideal when it is downward closed.
inline bool is_order_ideal(const Poset& p, ElementSubset s) {
  if (!s.fits(p.size())) return false;
  for (auto i : s)
    if (!p.down(i).is_subset_of(s)) return false;
  return true;
}

/// The smallest order ideal containing every part.
inline ElementSubset smallest_ideal_containing(const Poset& p, std::span<const ElementSubset> parts) {
  ElementSubset all;
  for (auto s : parts) {
    if (!s.fits(p.size())) throw LatticeError("subset references elements outside the poset");
    all = all | s;
  }
  return down_closure(p, all);
}

/// The distributive lattice J_P of order ideals, ordered by inclusion.
/// Ideals are listed by cardinality, then by bit pattern.
class IdealLattice {
 public:
  IdealLattice() = default;
  IdealLattice(std::size_t element_count, std::vector<ElementSubset> ideals)
      : element_count_(element_count), ideals_(std::move(ideals)) {
    std::sort(ideals_.begin(), ideals_.end(), [](ElementSubset a, ElementSubset b) {
      return std::pair(a.size(), a.bits()) < std::pair(b.size(), b.bits());
    });
    index_.reserve(ideals_.size());
    for (std::size_t i = 0; i < ideals_.size(); ++i) index_.emplace(ideals_[i].bits(), i);
  }

  std::size_t element_count() const { return element_count_; }
  std::size_t size() const { return ideals_.size(); }
  const std::vector<ElementSubset>& ideals() const { return ideals_; }
  const ElementSubset& operator[](std::size_t i) const { return ideals_[i]; }
  auto begin() const { return ideals_.begin(); }
  auto end() const { return ideals_.end(); }

  ElementSubset bottom() const { return ElementSubset{}; }
  ElementSubset top() const { return ElementSubset::full(element_count_); }

  bool contains(ElementSubset s) const { return index_.count(s.bits()) != 0; }
  std::size_t position(ElementSubset s) const {
    auto it = index_.find(s.bits());
    if (it == index_.end()) throw LatticeError("subset is not an order ideal of this lattice");
    return it->second;
  }

  ElementSubset join(ElementSubset a, ElementSubset b) const {
    require(a);
    require(b);
    return a | b;
  }
  ElementSubset meet(ElementSubset a, ElementSubset b) const {
    require(a);
    require(b);
    return a & b;
  }

 private:
  void require(ElementSubset s) const {
    if (!contains(s)) throw LatticeError("subset is not a member of the ideal lattice");
  }

  std::size_t element_count_ = 0;
  std::vector<ElementSubset> ideals_;
  std::unordered_map<std::uint64_t, std::size_t> index_;
};

/// Fresh enumeration, uncached. Walks a linear extension deciding each
/// element in turn; an element can only join when its whole strict down-set
/// already has, so every branch ends in a distinct ideal and the work is
/// proportional to the output rather than to 2^n.
inline IdealLattice enumerate_order_ideals(const Poset& p) {
  const std::size_t n = p.size();
  check_size(n);
  std::vector<std::size_t> order(n);
  for (std::size_t i = 0; i < n; ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(), [&](auto a, auto b) { return p.down(a).size() < p.down(b).size(); });
  std::vector<ElementSubset> out;
  auto walk = [&](auto&& self, std::size_t k, ElementSubset current) -> void {
    if (k == n) {
      out.push_back(current);
      return;
    }
    const std::size_t x = order[k];
    self(self, k + 1, current);
    if ((p.down(x) - ElementSubset::singleton(x)).is_subset_of(current)) {
      current.insert(x);
      self(self, k + 1, current);
    }
  };
  walk(walk, 0, ElementSubset{});
  return IdealLattice(n, std::move(out));
}

/// J_P, computed once per poset value and shared by its copies.
inline const IdealLattice& order_ideals(const Poset& p) {
  auto& slot = p.lattice_slot();
  std::call_once(slot.once, [&] { slot.value = std::make_shared<const IdealLattice>(enumerate_order_ideals(p)); });
  return *slot.value;
}

/// The isomorphism between the interval [I, L] of J_P and J_{L \ I}.
struct IntervalCorrespondence {
  ElementSubset lower;       ///< I
  ElementSubset upper;       ///< L
  InducedSubposet quotient;  ///< the poset L \ I

  /// K with I <= K <= L, in P's indices, to the ideal K \ I of L \ I.
  ElementSubset to_quotient(ElementSubset k) const {
    if (!lower.is_subset_of(k) || !k.is_subset_of(upper))
      throw LatticeError("ideal does not lie in the interval");
    return quotient.lower(k - lower);
  }
  /// Inverse of to_quotient.
  ElementSubset from_quotient(ElementSubset k) const { return lower | quotient.lift(k); }

  /// The ideals of P in [I, L], in the quotient lattice's order.
  std::vector<ElementSubset> members() const {
    std::vector<ElementSubset> out;
    for (auto k : order_ideals(quotient.poset)) out.push_back(from_quotient(k));
    return out;
  }
};

inline IntervalCorrespondence interval_to_quotient_lattice(const Poset& p, ElementSubset lower, ElementSubset upper) {
  if (!is_order_ideal(p, lower) || !is_order_ideal(p, upper))
    throw LatticeError("interval endpoints must be order ideals");
  if (!lower.is_subset_of(upper)) throw LatticeError("interval endpoints are not nested");
  return IntervalCorrespondence{lower, upper, induced_subposet(p, upper - lower)};
}

/// J_{P+Q} = J_P x J_Q.
struct SumDecomposition {
  SumResult sum;

  std::pair<ElementSubset, ElementSubset> split(ElementSubset k) const {
    ElementSubset a, b;
    for (std::size_t i = 0; i < sum.left.size(); ++i)
      if (k.contains(sum.left[i])) a.insert(i);
    for (std::size_t i = 0; i < sum.right.size(); ++i)
      if (k.contains(sum.right[i])) b.insert(i);
    return {a, b};
  }
  ElementSubset join(ElementSubset a, ElementSubset b) const {
    ElementSubset k;
    for (auto i : a) k.insert(sum.left[i]);
    for (auto i : b) k.insert(sum.right[i]);
    return k;
  }
};

inline SumDecomposition sum_decomposition(const Poset& p, const Poset& q) { return SumDecomposition{disjoint_union(p, q)}; }

}  // namespace inccat
