#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <cstdlib>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "inccat/error.hpp"

namespace inccat {

/// Compile-time ceiling on poset size. Rows of the order relation are
/// single 64-bit words, so the ceiling can never exceed 64.
inline constexpr std::size_t kMaxPosetSize = 32;
static_assert(kMaxPosetSize <= 64, "relation rows are 64-bit words");

/// Effective size cap. Defaults to kMaxPosetSize; the INCCAT_SIZE_CAP
/// environment variable may move it anywhere in [1, 64].
inline std::size_t size_cap() {
  static const std::size_t cap = [] {
    if (const char* env = std::getenv("INCCAT_SIZE_CAP")) {
      char* end = nullptr;
      const long v = std::strtol(env, &end, 10);
      if (end != env && v >= 1 && v <= 64) return static_cast<std::size_t>(v);
    }
    return kMaxPosetSize;
  }();
  return cap;
}

inline void check_size(std::size_t n) {
  if (n > size_cap())
    throw CapacityError("poset of size " + std::to_string(n) + " exceeds the size cap of " +
                        std::to_string(size_cap()) + " (set INCCAT_SIZE_CAP, max 64)");
}

/// A set of element indices of one specific poset, stored as a bitset.
class ElementSubset {
 public:
  constexpr ElementSubset() = default;
  constexpr explicit ElementSubset(std::uint64_t bits) : bits_(bits) {}

  static constexpr ElementSubset full(std::size_t n) {
    return ElementSubset(n >= 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << n) - 1));
  }
  static constexpr ElementSubset singleton(std::size_t i) {
    return ElementSubset(std::uint64_t{1} << i);
  }

  constexpr std::uint64_t bits() const { return bits_; }
  constexpr bool contains(std::size_t i) const { return (bits_ >> i) & 1u; }
  constexpr void insert(std::size_t i) { bits_ |= std::uint64_t{1} << i; }
  constexpr void erase(std::size_t i) { bits_ &= ~(std::uint64_t{1} << i); }
  constexpr std::size_t size() const { return static_cast<std::size_t>(std::popcount(bits_)); }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr bool is_subset_of(ElementSubset other) const { return (bits_ & ~other.bits_) == 0; }
  /// True when every member is an index below n.
  constexpr bool fits(std::size_t n) const { return is_subset_of(full(n)); }

  constexpr ElementSubset operator|(ElementSubset o) const { return ElementSubset(bits_ | o.bits_); }
  constexpr ElementSubset operator&(ElementSubset o) const { return ElementSubset(bits_ & o.bits_); }
  /// Set difference.
  constexpr ElementSubset operator-(ElementSubset o) const { return ElementSubset(bits_ & ~o.bits_); }
  constexpr bool operator==(const ElementSubset&) const = default;
  constexpr auto operator<=>(const ElementSubset&) const = default;

  /// Complement inside {0, .., n-1}.
  constexpr ElementSubset complement(std::size_t n) const { return full(n) - *this; }

  class iterator {
   public:
    using value_type = std::size_t;
    using difference_type = std::ptrdiff_t;
    constexpr iterator() = default;
    constexpr explicit iterator(std::uint64_t rest) : rest_(rest) {}
    constexpr std::size_t operator*() const { return static_cast<std::size_t>(std::countr_zero(rest_)); }
    constexpr iterator& operator++() {
      rest_ &= rest_ - 1;
      return *this;
    }
    constexpr iterator operator++(int) {
      auto t = *this;
      ++*this;
      return t;
    }
    constexpr bool operator==(const iterator&) const = default;

   private:
    std::uint64_t rest_ = 0;
  };
  constexpr iterator begin() const { return iterator(bits_); }
  constexpr iterator end() const { return iterator(0); }

 private:
  std::uint64_t bits_ = 0;
};

/// Which isomorphisms count as admissible maps between two posets.
enum class MapMode { AllPosetIsos, ColorPreservingIsos };

inline const char* to_string(MapMode m) {
  return m == MapMode::AllPosetIsos ? "all-poset-isos" : "color-preserving-isos";
}

class IdealLattice;

namespace detail {
struct LatticeSlot {
  std::once_flag once;
  std::shared_ptr<const IdealLattice> value;
};
}  // namespace detail

/// A finite partial order on {0, .., size-1} with optional labels and colors.
///
/// The relation is stored densely: down(i) is the set of j with j <= i and
/// up(i) the set of j with i <= j. Values are immutable after construction;
/// the lattice of order ideals is computed on first use and shared between
/// copies.
class Poset {
 public:
  Poset() : slot_(std::make_shared<detail::LatticeSlot>()) {}

  /// Builds from down-set rows (row i holds every j with j <= i). The rows
  /// must describe a reflexive, antisymmetric, transitive relation.
  static Poset from_down_sets(std::vector<std::uint64_t> down, std::vector<std::string> labels = {},
                              std::vector<std::uint32_t> colors = {}) {
    const std::size_t n = down.size();
    check_size(n);
    Poset p;
    p.down_ = std::move(down);
    p.up_.assign(n, 0);
    for (std::size_t i = 0; i < n; ++i) {
      if (!ElementSubset(p.down_[i]).fits(n)) throw PosetError("relation row references an element out of range");
      if (!((p.down_[i] >> i) & 1u)) throw PosetError("relation is not reflexive at element " + std::to_string(i));
      for (auto j : ElementSubset(p.down_[i])) p.up_[j] |= std::uint64_t{1} << i;
    }
    for (std::size_t i = 0; i < n; ++i) {
      for (auto j : ElementSubset(p.down_[i])) {
        if (j != i && ((p.down_[j] >> i) & 1u))
          throw PosetError("relation is not antisymmetric on elements " + std::to_string(j) + ", " +
                           std::to_string(i));
        if ((p.down_[j] & ~p.down_[i]) != 0)
          throw PosetError("relation is not transitive through element " + std::to_string(j));
      }
    }
    if (!labels.empty()) {
      if (labels.size() != n) throw PosetError("label count does not match the element count");
      std::unordered_map<std::string, std::size_t> seen;
      for (std::size_t i = 0; i < n; ++i)
        if (!seen.emplace(labels[i], i).second) throw PosetError("duplicate element label '" + labels[i] + "'");
    }
    if (!colors.empty() && colors.size() != n) throw PosetError("color count does not match the element count");
    p.labels_ = std::move(labels);
    p.colors_ = std::move(colors);
    return p;
  }

  std::size_t size() const { return down_.size(); }
  bool empty() const { return down_.empty(); }

  bool leq(std::size_t a, std::size_t b) const { return (down_[b] >> a) & 1u; }
  bool less(std::size_t a, std::size_t b) const { return a != b && leq(a, b); }
  bool comparable(std::size_t a, std::size_t b) const { return leq(a, b) || leq(b, a); }

  /// {j : j <= i}, including i.
  ElementSubset down(std::size_t i) const { return ElementSubset(down_[i]); }
  /// {j : i <= j}, including i.
  ElementSubset up(std::size_t i) const { return ElementSubset(up_[i]); }
  const std::vector<std::uint64_t>& down_rows() const { return down_; }

  ElementSubset all() const { return ElementSubset::full(size()); }

  bool has_labels() const { return !labels_.empty(); }
  const std::vector<std::string>& labels() const { return labels_; }
  /// Display name; the decimal index when no labels were given.
  std::string label(std::size_t i) const { return labels_.empty() ? std::to_string(i) : labels_[i]; }
  std::optional<std::size_t> index_of(const std::string& name) const {
    for (std::size_t i = 0; i < size(); ++i)
      if (label(i) == name) return i;
    return std::nullopt;
  }

  bool has_colors() const { return !colors_.empty(); }
  const std::vector<std::uint32_t>& colors() const { return colors_; }
  /// Color of element i; uncolored posets report color 0 everywhere.
  std::uint32_t color(std::size_t i) const { return colors_.empty() ? 0 : colors_[i]; }

  /// Hasse diagram edges (a, b) with a covered by b.
  std::vector<std::pair<std::size_t, std::size_t>> covers() const {
    std::vector<std::pair<std::size_t, std::size_t>> out;
    for (std::size_t b = 0; b < size(); ++b) {
      const ElementSubset below = down(b) - ElementSubset::singleton(b);
      for (auto a : below) {
        // a is covered by b iff nothing strictly between them
        if ((below & up(a)) == ElementSubset::singleton(a)) out.emplace_back(a, b);
      }
    }
    std::sort(out.begin(), out.end());
    return out;
  }

  ElementSubset minimal_elements() const {
    ElementSubset out;
    for (std::size_t i = 0; i < size(); ++i)
      if (down(i).size() == 1) out.insert(i);
    return out;
  }
  ElementSubset maximal_elements() const {
    ElementSubset out;
    for (std::size_t i = 0; i < size(); ++i)
      if (up(i).size() == 1) out.insert(i);
    return out;
  }

  /// Structural equality: same relation, labels and colors.
  bool operator==(const Poset& o) const {
    return down_ == o.down_ && labels_ == o.labels_ && colors() == o.colors();
  }

  detail::LatticeSlot& lattice_slot() const { return *slot_; }

 private:
  std::vector<std::uint64_t> down_;
  std::vector<std::uint64_t> up_;
  std::vector<std::string> labels_;
  std::vector<std::uint32_t> colors_;
  std::shared_ptr<detail::LatticeSlot> slot_;
};

/// The poset on a single element.
inline Poset point(std::uint32_t color_index = 0, bool colored = false) {
  return Poset::from_down_sets({1}, {}, colored ? std::vector<std::uint32_t>{color_index} : std::vector<std::uint32_t>{});
}

/// Chain 0 < 1 < ... < n-1.
inline Poset chain(std::size_t n) {
  check_size(n);
  std::vector<std::uint64_t> down(n);
  for (std::size_t i = 0; i < n; ++i) down[i] = ElementSubset::full(i + 1).bits();
  return Poset::from_down_sets(std::move(down));
}

/// n pairwise incomparable elements, optionally colored.
inline Poset antichain(std::size_t n, std::vector<std::uint32_t> colors = {}) {
  check_size(n);
  std::vector<std::uint64_t> down(n);
  for (std::size_t i = 0; i < n; ++i) down[i] = std::uint64_t{1} << i;
  return Poset::from_down_sets(std::move(down), {}, std::move(colors));
}

/// Builds a poset from Hasse-diagram style input. Any acyclic relation works;
/// the result is its reflexive-transitive closure.
inline Poset from_covers(const std::vector<std::string>& element_labels,
                         const std::vector<std::pair<std::string, std::string>>& cover_pairs,
                         const std::map<std::string, std::uint32_t>* colors = nullptr) {
  const std::size_t n = element_labels.size();
  check_size(n);
  std::unordered_map<std::string, std::size_t> index;
  for (std::size_t i = 0; i < n; ++i)
    if (!index.emplace(element_labels[i], i).second)
      throw PosetError("duplicate element label '" + element_labels[i] + "'");
  auto lookup = [&](const std::string& name) {
    auto it = index.find(name);
    if (it == index.end()) throw PosetError("unknown element label '" + name + "'");
    return it->second;
  };
  std::vector<std::vector<std::size_t>> succ(n);
  for (const auto& [a, b] : cover_pairs) succ[lookup(a)].push_back(lookup(b));

  // DFS topological sort; a back edge yields the offending cycle.
  enum class Mark { White, Grey, Black };
  std::vector<Mark> mark(n, Mark::White);
  std::vector<std::size_t> order;
  std::vector<std::size_t> stack;
  auto visit = [&](auto&& self, std::size_t v) -> void {
    mark[v] = Mark::Grey;
    stack.push_back(v);
    for (auto w : succ[v]) {
      if (mark[w] == Mark::Grey) {
        std::string cycle;
        auto it = std::find(stack.begin(), stack.end(), w);
        for (; it != stack.end(); ++it) cycle += element_labels[*it] + " < ";
        cycle += element_labels[w];
        throw PosetError("cover relation has a cycle: " + cycle);
      }
      if (mark[w] == Mark::White) self(self, w);
    }
    stack.pop_back();
    mark[v] = Mark::Black;
    order.push_back(v);
  };
  for (std::size_t v = 0; v < n; ++v)
    if (mark[v] == Mark::White) visit(visit, v);

  // order is reverse topological: successors appear first.
  std::vector<std::uint64_t> up(n, 0);
  for (auto v : order) {
    up[v] = std::uint64_t{1} << v;
    for (auto w : succ[v]) up[v] |= up[w];
  }
  std::vector<std::uint64_t> down(n, 0);
  for (std::size_t v = 0; v < n; ++v)
    for (auto w : ElementSubset(up[v])) down[w] |= std::uint64_t{1} << v;

  std::vector<std::uint32_t> color_vec;
  if (colors != nullptr) {
    color_vec.assign(n, 0);
    std::vector<bool> assigned(n, false);
    for (const auto& [name, c] : *colors) {
      const auto i = lookup(name);
      color_vec[i] = c;
      assigned[i] = true;
    }
    for (std::size_t i = 0; i < n; ++i)
      if (!assigned[i]) throw PosetError("element '" + element_labels[i] + "' has no color");
  }
  return Poset::from_down_sets(std::move(down), element_labels, std::move(color_vec));
}

/// The same poset with element i moved to position new_position[i].
inline Poset relabel(const Poset& p, const std::vector<std::size_t>& new_position) {
  const std::size_t n = p.size();
  std::vector<std::uint64_t> down(n, 0);
  std::vector<std::string> labels(p.has_labels() ? n : 0);
  std::vector<std::uint32_t> colors(p.has_colors() ? n : 0);
  for (std::size_t i = 0; i < n; ++i) {
    std::uint64_t row = 0;
    for (auto j : p.down(i)) row |= std::uint64_t{1} << new_position[j];
    down[new_position[i]] = row;
    if (p.has_labels()) labels[new_position[i]] = p.labels()[i];
    if (p.has_colors()) colors[new_position[i]] = p.colors()[i];
  }
  return Poset::from_down_sets(std::move(down), std::move(labels), std::move(colors));
}

/// The order-reversed poset.
inline Poset dual(const Poset& p) {
  std::vector<std::uint64_t> down(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) down[i] = p.up(i).bits();
  return Poset::from_down_sets(std::move(down), p.labels(), p.colors());
}

/// Result of a disjoint union: the poset plus where each summand landed.
struct SumResult {
  Poset poset;
  std::vector<std::size_t> left;   ///< index in the union of each element of the left summand
  std::vector<std::size_t> right;  ///< same for the right summand
  ElementSubset left_part() const {
    ElementSubset s;
    for (auto i : left) s.insert(i);
    return s;
  }
  ElementSubset right_part() const {
    ElementSubset s;
    for (auto i : right) s.insert(i);
    return s;
  }
};

/// P + Q: the left summand occupies indices 0..|P|-1. Labels survive when
/// they remain unique; colors survive when either side carries them.
inline SumResult disjoint_union(const Poset& p, const Poset& q) {
  const std::size_t np = p.size(), nq = q.size();
  check_size(np + nq);
  std::vector<std::uint64_t> down(np + nq);
  for (std::size_t i = 0; i < np; ++i) down[i] = p.down(i).bits();
  for (std::size_t i = 0; i < nq; ++i) down[np + i] = q.down(i).bits() << np;

  std::vector<std::string> labels;
  if (p.has_labels() || q.has_labels()) {
    std::unordered_map<std::string, int> seen;
    bool unique = true;
    for (std::size_t i = 0; i < np; ++i) unique &= seen.emplace(p.label(i), 0).second;
    for (std::size_t i = 0; i < nq; ++i) unique &= seen.emplace(q.label(i), 0).second;
    if (unique) {
      for (std::size_t i = 0; i < np; ++i) labels.push_back(p.label(i));
      for (std::size_t i = 0; i < nq; ++i) labels.push_back(q.label(i));
    }
  }
  std::vector<std::uint32_t> colors;
  if (p.has_colors() || q.has_colors()) {
    for (std::size_t i = 0; i < np; ++i) colors.push_back(p.color(i));
    for (std::size_t i = 0; i < nq; ++i) colors.push_back(q.color(i));
  }
  SumResult r{Poset::from_down_sets(std::move(down), std::move(labels), std::move(colors)), {}, {}};
  for (std::size_t i = 0; i < np; ++i) r.left.push_back(i);
  for (std::size_t i = 0; i < nq; ++i) r.right.push_back(np + i);
  return r;
}

/// P x Q with the componentwise order; element (x, y) sits at x*|Q| + y.
/// Colors are not carried over.
inline Poset cartesian_product(const Poset& p, const Poset& q) {
  const std::size_t np = p.size(), nq = q.size();
  check_size(np * nq);
  std::vector<std::uint64_t> down(np * nq, 0);
  std::vector<std::string> labels;
  for (std::size_t x = 0; x < np; ++x)
    for (std::size_t y = 0; y < nq; ++y) {
      std::uint64_t row = 0;
      for (auto x2 : p.down(x))
        for (auto y2 : q.down(y)) row |= std::uint64_t{1} << (x2 * nq + y2);
      down[x * nq + y] = row;
      if (p.has_labels() || q.has_labels()) labels.push_back("(" + p.label(x) + "," + q.label(y) + ")");
    }
  return Poset::from_down_sets(std::move(down), std::move(labels));
}

/// Restriction of a poset to a subset, with the index translation.
struct InducedSubposet {
  Poset poset;
  std::vector<std::size_t> to_parent;  ///< child index -> parent index

  /// Parent index -> child index, or -1 outside the subset.
  std::vector<int> from_parent(std::size_t parent_size) const {
    std::vector<int> out(parent_size, -1);
    for (std::size_t i = 0; i < to_parent.size(); ++i) out[to_parent[i]] = static_cast<int>(i);
    return out;
  }
  ElementSubset lift(ElementSubset child) const {
    ElementSubset out;
    for (auto i : child) out.insert(to_parent[i]);
    return out;
  }
  /// Parent subset (which must lie inside the induced subset) in child indices.
  ElementSubset lower(ElementSubset parent) const {
    ElementSubset out;
    for (std::size_t i = 0; i < to_parent.size(); ++i)
      if (parent.contains(to_parent[i])) out.insert(i);
    return out;
  }
};

/// Order and colors restricted to S; children keep the parents' relative order.
inline InducedSubposet induced_subposet(const Poset& p, ElementSubset s) {
  if (!s.fits(p.size())) throw PosetError("subset references elements outside the poset");
  InducedSubposet r;
  for (auto i : s) r.to_parent.push_back(i);
  const std::size_t m = r.to_parent.size();
  std::vector<std::uint64_t> down(m, 0);
  std::vector<std::string> labels;
  std::vector<std::uint32_t> colors;
  for (std::size_t a = 0; a < m; ++a) {
    for (std::size_t b = 0; b < m; ++b)
      if (p.leq(r.to_parent[b], r.to_parent[a])) down[a] |= std::uint64_t{1} << b;
    if (p.has_labels()) labels.push_back(p.labels()[r.to_parent[a]]);
    if (p.has_colors()) colors.push_back(p.colors()[r.to_parent[a]]);
  }
  r.poset = Poset::from_down_sets(std::move(down), std::move(labels), std::move(colors));
  return r;
}

/// Down-closure of a subset.
inline ElementSubset down_closure(const Poset& p, ElementSubset s) {
  ElementSubset out;
  for (auto i : s) out = out | p.down(i);
  return out;
}

/// Up-closure of a subset.
inline ElementSubset up_closure(const Poset& p, ElementSubset s) {
  ElementSubset out;
  for (auto i : s) out = out | p.up(i);
  return out;
}

/// S is convex when x <= z <= y with x, y in S forces z into S.
inline bool is_convex(const Poset& p, ElementSubset s) {
  for (auto x : s)
    for (auto y : s)
      if (p.leq(x, y) && !((p.up(x) & p.down(y)).is_subset_of(s))) return false;
  return true;
}

/// Second characterization: S = L \ I for order ideals I within L. Taking
/// L = down-closure of S, this holds iff L \ S is itself downward closed.
inline bool is_convex_by_ideals(const Poset& p, ElementSubset s) {
  const ElementSubset lower = down_closure(p, s) - s;
  return down_closure(p, lower) == lower;
}

/// Components of the comparability graph, ordered by smallest element.
inline std::vector<ElementSubset> connected_components(const Poset& p) {
  std::vector<ElementSubset> out;
  ElementSubset seen;
  for (std::size_t start = 0; start < p.size(); ++start) {
    if (seen.contains(start)) continue;
    ElementSubset comp = ElementSubset::singleton(start);
    ElementSubset frontier = comp;
    while (!frontier.empty()) {
      ElementSubset next;
      for (auto v : frontier) next = next | p.down(v) | p.up(v);
      frontier = next - comp;
      comp = comp | next;
    }
    seen = seen | comp;
    out.push_back(comp);
  }
  return out;
}

inline bool is_connected(const Poset& p) { return connected_components(p).size() == 1; }

/// A bijection between the element sets of two posets, remembering which
/// map class it was validated against.
struct Bijection {
  std::vector<std::size_t> forward;  ///< source index -> target index
  MapMode mode = MapMode::AllPosetIsos;

  std::size_t size() const { return forward.size(); }
  std::size_t operator()(std::size_t i) const { return forward[i]; }

  static Bijection identity(std::size_t n, MapMode mode) {
    Bijection b{std::vector<std::size_t>(n), mode};
    for (std::size_t i = 0; i < n; ++i) b.forward[i] = i;
    return b;
  }
  Bijection inverse() const {
    Bijection b{std::vector<std::size_t>(forward.size()), mode};
    for (std::size_t i = 0; i < forward.size(); ++i) b.forward[forward[i]] = i;
    return b;
  }
  /// then(g) is g after *this.
  Bijection then(const Bijection& g) const {
    Bijection b{std::vector<std::size_t>(forward.size()), mode};
    for (std::size_t i = 0; i < forward.size(); ++i) b.forward[i] = g.forward[forward[i]];
    return b;
  }
  ElementSubset image(ElementSubset s) const {
    ElementSubset out;
    for (auto i : s) out.insert(forward[i]);
    return out;
  }
  bool operator==(const Bijection&) const = default;
};

/// f + g on P1 + Q1 -> P2 + Q2, using the disjoint_union index layout.
inline Bijection sum_of(const Bijection& f, const Bijection& g) {
  Bijection b{f.forward, f.mode};
  const std::size_t shift = f.size();
  for (auto t : g.forward) b.forward.push_back(t + shift);
  return b;
}

/// Whether forward is an order isomorphism P -> Q admissible under the mode.
inline bool is_isomorphism(const Poset& p, const Poset& q, const std::vector<std::size_t>& forward, MapMode mode) {
  const std::size_t n = p.size();
  if (q.size() != n || forward.size() != n) return false;
  ElementSubset hit;
  for (auto t : forward) {
    if (t >= n || hit.contains(t)) return false;
    hit.insert(t);
  }
  for (std::size_t a = 0; a < n; ++a) {
    if (mode == MapMode::ColorPreservingIsos && p.color(a) != q.color(forward[a])) return false;
    for (std::size_t b = 0; b < n; ++b)
      if (p.leq(a, b) != q.leq(forward[a], forward[b])) return false;
  }
  return true;
}

}  // namespace inccat
