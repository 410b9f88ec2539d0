#pragma once

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "inccat/category.hpp"
#include "inccat/ideal_lattice.hpp"
#include "inccat/isomorphism.hpp"
#include "inccat/poset.hpp"

namespace inccat {

enum class FamilyKind { Fin, Sets, ColoredSets, Forests, ColoredForests };

/// Which family of posets, parsed from "fin", "sets", "csets:k", "forests"
/// or "cforests:k".
struct FamilySpec {
  FamilyKind kind = FamilyKind::Fin;
  std::uint32_t colors = 1;
  /// Forest orientation: roots are maximal instead of minimal.
  bool root_max = false;

  static FamilySpec parse(const std::string& text) {
    auto colored = [&](const std::string& prefix, FamilyKind kind) -> std::optional<FamilySpec> {
      if (text.rfind(prefix, 0) != 0) return std::nullopt;
      const std::string rest = text.substr(prefix.size());
      if (rest.empty() || rest.find_first_not_of("0123456789") != std::string::npos)
        throw ParseError("bad color count in family '" + text + "'");
      const unsigned long k = std::stoul(rest);
      if (k < 1 || k > 255) throw ParseError("color count must lie in [1, 255]: '" + text + "'");
      return FamilySpec{kind, static_cast<std::uint32_t>(k), false};
    };
    if (text == "fin") return {FamilyKind::Fin, 1, false};
    if (text == "sets") return {FamilyKind::Sets, 1, false};
    if (text == "forests") return {FamilyKind::Forests, 1, false};
    if (auto s = colored("csets:", FamilyKind::ColoredSets)) return *s;
    if (auto s = colored("cforests:", FamilyKind::ColoredForests)) return *s;
    throw ParseError("unknown family '" + text + "' (expected fin|sets|csets:k|forests|cforests:k)");
  }

  std::string name() const {
    switch (kind) {
      case FamilyKind::Fin: return "fin";
      case FamilyKind::Sets: return "sets";
      case FamilyKind::ColoredSets: return "csets:" + std::to_string(colors);
      case FamilyKind::Forests: return root_max ? "forests(root-max)" : "forests";
      case FamilyKind::ColoredForests:
        return "cforests:" + std::to_string(colors) + (root_max ? "(root-max)" : "");
    }
    return "?";
  }

  bool colored() const { return kind == FamilyKind::ColoredSets || kind == FamilyKind::ColoredForests; }
  bool forest() const { return kind == FamilyKind::Forests || kind == FamilyKind::ColoredForests; }
  MapMode mode() const { return colored() ? MapMode::ColorPreservingIsos : MapMode::AllPosetIsos; }
};

/// An isomorphism class [X_P] with a canonical representative.
struct IsoClass {
  CanonicalKey key;
  Poset representative;
  std::size_t size = 0;
  std::vector<std::size_t> color_vector;  ///< elements per color; one entry for uncolored families
};

/// Whether every element's down-set (or up-set, for root_max) is a chain,
/// i.e. the Hasse diagram is a rooted forest.
inline bool is_forest_poset(const Poset& p, bool root_max = false) {
  for (std::size_t i = 0; i < p.size(); ++i) {
    const ElementSubset s = root_max ? p.up(i) : p.down(i);
    for (auto a : s)
      for (auto b : s)
        if (!p.comparable(a, b)) return false;
  }
  return true;
}

inline bool is_antichain(const Poset& p) {
  for (std::size_t i = 0; i < p.size(); ++i)
    if (p.down(i).size() != 1 || p.up(i).size() != 1) return false;
  return true;
}

/// Number of admissible cuts of a rooted tree, counted directly on edge
/// subsets: a set of Hasse edges is admissible when every root-to-leaf path
/// crosses it at most once. The empty cut counts.
inline std::size_t count_admissible_cuts(const Poset& tree, bool root_max = false) {
  const Poset t = root_max ? dual(tree) : tree;
  if (t.empty()) return 1;
  const auto edges = t.covers();  // (parent, child): parent is covered by child
  const ElementSubset leaves = t.maximal_elements();
  std::vector<std::vector<std::size_t>> paths;  // edge indices along each root-to-leaf path
  for (auto leaf : leaves) {
    std::vector<std::size_t> path;
    for (std::size_t e = 0; e < edges.size(); ++e)
      if (t.leq(edges[e].second, leaf)) path.push_back(e);
    paths.push_back(std::move(path));
  }
  std::size_t count = 0;
  for (std::uint64_t cut = 0; cut < (std::uint64_t{1} << edges.size()); ++cut) {
    bool ok = true;
    for (const auto& path : paths) {
      int crossings = 0;
      for (auto e : path) crossings += static_cast<int>((cut >> e) & 1u);
      if (crossings > 1) {
        ok = false;
        break;
      }
    }
    if (ok) ++count;
  }
  return count;
}

struct ClosureReport {
  std::size_t checks = 0;
  std::vector<std::string> violations;
  bool ok() const { return violations.empty(); }
};

/// A size-truncated family F: every isomorphism class of size <= max_size,
/// indexed by canonical key, plus per-class tables that the algebra layers
/// reuse.
class FamilyContext {
 public:
  using Split = std::pair<CanonicalKey, CanonicalKey>;

  FamilyContext(FamilySpec spec, std::size_t max_size)
      : spec_(spec), max_size_(max_size), cache_(std::make_unique<Cache>()) {
    check_size(max_size);
    generate();
  }

  const FamilySpec& spec() const { return spec_; }
  std::string name() const { return spec_.name(); }
  MapMode mode() const { return spec_.mode(); }
  std::size_t max_size() const { return max_size_; }

  IncidenceCategory category() const {
    const FamilySpec s = spec_;
    return IncidenceCategory(mode(), [s](const Poset& p) { return contains_poset(s, p); });
  }

  bool contains(const Poset& p) const { return contains_poset(spec_, p); }

  const std::vector<IsoClass>& classes(std::size_t size) const {
    require_size(size);
    return by_size_[size];
  }
  std::vector<const IsoClass*> classes_up_to(std::size_t size) const {
    std::vector<const IsoClass*> out;
    for (std::size_t s = 0; s <= size; ++s)
      for (const auto& c : classes(s)) out.push_back(&c);
    return out;
  }

  CanonicalKey classify(const Poset& p) const { return canonical_form(p, mode()); }

  const IsoClass* find(const CanonicalKey& key) const {
    auto it = index_.find(key);
    if (it == index_.end()) return nullptr;
    return &by_size_[it->second.first][it->second.second];
  }
  const IsoClass& at(const CanonicalKey& key) const {
    if (const auto* c = find(key)) return *c;
    if (key.poset_size() > max_size_)
      throw TruncationError("class of size " + std::to_string(key.poset_size()) + " lies beyond the family cutoff " +
                            std::to_string(max_size_));
    throw Error("canonical key " + key.hex() + " is not a class of family " + name());
  }
  /// Class of a poset, which must belong to the family and fit the cutoff.
  const IsoClass& class_of(const Poset& p) const {
    if (!contains(p)) throw Error("poset does not belong to family " + name());
    if (p.size() > max_size_)
      throw TruncationError("poset of size " + std::to_string(p.size()) + " exceeds the family cutoff " +
                            std::to_string(max_size_));
    return at(classify(p));
  }

  void require_size(std::size_t size) const {
    if (size > max_size_)
      throw TruncationError("family " + name() + " is truncated at size " + std::to_string(max_size_) +
                            " but size " + std::to_string(size) + " is required");
  }

  /// For each ideal I of the representative R (lattice order): the classes
  /// of I and of R \ I.
  const std::vector<Split>& ideal_splits(const CanonicalKey& key) const {
    std::lock_guard lock(cache_->mutex);
    auto it = cache_->ideal_splits.find(key);
    if (it != cache_->ideal_splits.end()) return it->second;
    const Poset& r = at(key).representative;
    std::vector<Split> out;
    for (auto ideal : order_ideals(r))
      out.emplace_back(classify(induced_subposet(r, ideal).poset),
                       classify(induced_subposet(r, ideal.complement(r.size())).poset));
    return cache_->ideal_splits.emplace(key, std::move(out)).first->second;
  }

  /// Distinct ordered pairs ([M], [N]) with M + N isomorphic to the class,
  /// found by distributing connected components between the two sides.
  const std::vector<Split>& component_splits(const CanonicalKey& key) const {
    std::lock_guard lock(cache_->mutex);
    auto it = cache_->component_splits.find(key);
    if (it != cache_->component_splits.end()) return it->second;
    const Poset& r = at(key).representative;
    const auto comps = connected_components(r);
    std::vector<Split> out;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << comps.size()); ++mask) {
      ElementSubset left;
      for (std::size_t c = 0; c < comps.size(); ++c)
        if ((mask >> c) & 1u) left = left | comps[c];
      out.emplace_back(classify(induced_subposet(r, left).poset),
                       classify(induced_subposet(r, left.complement(r.size())).poset));
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return cache_->component_splits.emplace(key, std::move(out)).first->second;
  }

  static bool contains_poset(const FamilySpec& spec, const Poset& p) {
    auto colors_ok = [&] {
      for (std::size_t i = 0; i < p.size(); ++i)
        if (p.color(i) >= spec.colors) return false;
      return true;
    };
    switch (spec.kind) {
      case FamilyKind::Fin: return true;
      case FamilyKind::Sets: return is_antichain(p);
      case FamilyKind::ColoredSets: return is_antichain(p) && colors_ok();
      case FamilyKind::Forests: return is_forest_poset(p, spec.root_max);
      case FamilyKind::ColoredForests: return is_forest_poset(p, spec.root_max) && colors_ok();
    }
    return false;
  }

 private:
  struct Cache {
    std::mutex mutex;
    std::unordered_map<CanonicalKey, std::vector<Split>> ideal_splits;
    std::unordered_map<CanonicalKey, std::vector<Split>> component_splits;
  };

  void add(std::size_t size, const Poset& p) {
    const auto lab = canonical_labeling(p, mode());
    if (index_.count(lab.key)) return;
    Poset rep = relabel(p, lab.position);
    rep = Poset::from_down_sets(rep.down_rows(), {}, spec_.colored() ? rep.colors() : std::vector<std::uint32_t>{});
    IsoClass c{lab.key, rep, size, std::vector<std::size_t>(spec_.colored() ? spec_.colors : 1, 0)};
    for (std::size_t i = 0; i < size; ++i) ++c.color_vector[spec_.colored() ? rep.color(i) : 0];
    index_.emplace(lab.key, std::pair(size, by_size_[size].size()));
    by_size_[size].push_back(std::move(c));
  }

  // Grows size n from size n-1 by adjoining a new maximal element whose
  // strict down-set is an allowed ideal of the smaller poset.
  void generate() {
    by_size_.assign(max_size_ + 1, {});
    add(0, Poset{});
    const bool colored = spec_.colored();
    const std::uint32_t palette = colored ? spec_.colors : 1;
    for (std::size_t n = 1; n <= max_size_; ++n) {
      if (spec_.kind == FamilyKind::Sets || spec_.kind == FamilyKind::ColoredSets) {
        // one antichain per multiset of colors
        std::vector<std::uint32_t> colors(n, 0);
        auto walk = [&](auto&& self, std::size_t pos, std::uint32_t from) -> void {
          if (pos == n) {
            add(n, antichain(n, colored ? colors : std::vector<std::uint32_t>{}));
            return;
          }
          for (std::uint32_t c = from; c < palette; ++c) {
            colors[pos] = c;
            self(self, pos + 1, c);
          }
        };
        walk(walk, 0, 0);
        continue;
      }
      const std::vector<IsoClass> smaller = by_size_[n - 1];
      for (const auto& base : smaller) {
        const Poset root_min = spec_.root_max ? dual(base.representative) : base.representative;
        std::vector<ElementSubset> below;
        if (spec_.forest()) {
          below.push_back(ElementSubset{});
          for (std::size_t x = 0; x < root_min.size(); ++x) below.push_back(root_min.down(x));
        } else {
          below = order_ideals(root_min).ideals();
        }
        for (auto d : below)
          for (std::uint32_t c = 0; c < palette; ++c) {
            std::vector<std::uint64_t> rows = root_min.down_rows();
            rows.push_back(d.bits() | (std::uint64_t{1} << (n - 1)));
            std::vector<std::uint32_t> colors;
            if (colored) {
              colors = root_min.colors();
              colors.push_back(c);
            }
            Poset grown = Poset::from_down_sets(std::move(rows), {}, std::move(colors));
            add(n, spec_.root_max ? dual(grown) : grown);
          }
      }
    }
    for (auto& bucket : by_size_)
      std::sort(bucket.begin(), bucket.end(), [](const IsoClass& a, const IsoClass& b) { return a.key < b.key; });
    for (std::size_t s = 0; s < by_size_.size(); ++s)
      for (std::size_t i = 0; i < by_size_[s].size(); ++i) index_[by_size_[s][i].key] = {s, i};
  }

  FamilySpec spec_;
  std::size_t max_size_;
  std::vector<std::vector<IsoClass>> by_size_;
  std::unordered_map<CanonicalKey, std::pair<std::size_t, std::size_t>> index_;
  std::unique_ptr<Cache> cache_;
};

inline FamilyContext fin_up_to(std::size_t n) { return FamilyContext({FamilyKind::Fin, 1, false}, n); }
inline FamilyContext sets_up_to(std::size_t n) { return FamilyContext({FamilyKind::Sets, 1, false}, n); }
inline FamilyContext colored_sets_up_to(std::size_t n, std::uint32_t k) {
  return FamilyContext({FamilyKind::ColoredSets, k, false}, n);
}
inline FamilyContext forests_up_to(std::size_t n, bool root_max = false) {
  return FamilyContext({FamilyKind::Forests, 1, root_max}, n);
}
inline FamilyContext colored_forests_up_to(std::size_t n, std::uint32_t k, bool root_max = false) {
  return FamilyContext({FamilyKind::ColoredForests, k, root_max}, n);
}

/// Closure of the truncated family under convex subposets and disjoint
/// unions, checked against the generated class index.
inline ClosureReport verify_closure(const FamilyContext& ctx) {
  ClosureReport report;
  for (const IsoClass* c : ctx.classes_up_to(ctx.max_size())) {
    const Poset& p = c->representative;
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << p.size()); ++bits) {
      const ElementSubset s(bits);
      if (!is_convex(p, s)) continue;
      ++report.checks;
      const Poset sub = induced_subposet(p, s).poset;
      if (!ctx.contains(sub) || ctx.find(ctx.classify(sub)) == nullptr)
        report.violations.push_back("convex subposet of class " + c->key.hex() + " leaves the family");
    }
  }
  for (const IsoClass* a : ctx.classes_up_to(ctx.max_size()))
    for (const IsoClass* b : ctx.classes_up_to(ctx.max_size() - a->size)) {
      ++report.checks;
      const Poset u = disjoint_union(a->representative, b->representative).poset;
      if (!ctx.contains(u) || ctx.find(ctx.classify(u)) == nullptr)
        report.violations.push_back("union of " + a->key.hex() + " and " + b->key.hex() + " leaves the family");
    }
  return report;
}

}  // namespace inccat
