#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <functional>
#include <string>
#include <tuple>
#include <vector>

#include "inccat/poset.hpp"

namespace inccat {

/// Cheap isomorphism-invariant data attached to each element.
struct ElementInvariant {
  std::uint32_t color = 0;
  std::uint32_t down = 0;  ///< |{j : j <= i}|
  std::uint32_t up = 0;    ///< |{j : i <= j}|
  std::uint32_t rank = 0;  ///< length of the longest chain ending at i
  auto operator<=>(const ElementInvariant&) const = default;
};

inline std::vector<ElementInvariant> element_invariants(const Poset& p, MapMode mode) {
  const std::size_t n = p.size();
  std::vector<ElementInvariant> inv(n);
  std::vector<std::size_t> order(n);
  for (std::size_t i = 0; i < n; ++i) {
    order[i] = i;
    inv[i].color = mode == MapMode::ColorPreservingIsos ? p.color(i) : 0;
    inv[i].down = static_cast<std::uint32_t>(p.down(i).size());
    inv[i].up = static_cast<std::uint32_t>(p.up(i).size());
  }
  // strictly smaller elements have strictly smaller down-sets
  std::sort(order.begin(), order.end(), [&](auto a, auto b) { return inv[a].down < inv[b].down; });
  for (auto i : order)
    for (auto j : p.down(i))
      if (j != i) inv[i].rank = std::max(inv[i].rank, inv[j].rank + 1);
  return inv;
}

/// Every admissible isomorphism P -> Q, in lexicographic order of the
/// forward arrays. For P = Q this is the automorphism group Aut_M(P).
inline std::vector<Bijection> find_isomorphisms(const Poset& p, const Poset& q, MapMode mode,
                                                std::size_t limit = static_cast<std::size_t>(-1)) {
  std::vector<Bijection> out;
  const std::size_t n = p.size();
  if (q.size() != n) return out;
  const auto ip = element_invariants(p, mode);
  const auto iq = element_invariants(q, mode);
  {
    auto sp = ip, sq = iq;
    std::sort(sp.begin(), sp.end());
    std::sort(sq.begin(), sq.end());
    if (sp != sq) return out;
  }
  std::vector<std::size_t> forward(n);
  ElementSubset used;
  auto extend = [&](auto&& self, std::size_t a) -> void {
    if (out.size() >= limit) return;
    if (a == n) {
      out.push_back(Bijection{forward, mode});
      return;
    }
    for (std::size_t t = 0; t < n; ++t) {
      if (used.contains(t) || ip[a] != iq[t]) continue;
      bool ok = true;
      for (std::size_t b = 0; b < a && ok; ++b)
        ok = p.leq(a, b) == q.leq(t, forward[b]) && p.leq(b, a) == q.leq(forward[b], t);
      if (!ok) continue;
      forward[a] = t;
      used.insert(t);
      self(self, a + 1);
      used.erase(t);
    }
  };
  extend(extend, 0);
  return out;
}

inline bool are_isomorphic(const Poset& p, const Poset& q, MapMode mode) {
  return !find_isomorphisms(p, q, mode, 1).empty();
}

/// Byte-string naming an isomorphism class. Byte 0 is the element count,
/// so ordering keys orders classes by size first. The empty poset has the
/// empty key.
class CanonicalKey {
 public:
  CanonicalKey() = default;
  explicit CanonicalKey(std::string bytes) : bytes_(std::move(bytes)) {}

  const std::string& bytes() const { return bytes_; }
  std::size_t poset_size() const { return bytes_.empty() ? 0 : static_cast<unsigned char>(bytes_[0]); }

  std::string hex() const {
    static constexpr char digits[] = "0123456789abcdef";
    std::string out;
    out.reserve(bytes_.size() * 2);
    for (unsigned char c : bytes_) {
      out.push_back(digits[c >> 4]);
      out.push_back(digits[c & 15]);
    }
    return out;
  }
  static CanonicalKey from_hex(const std::string& text) {
    if (text.size() % 2 != 0) throw ParseError("odd-length canonical key hex '" + text + "'");
    auto nibble = [&](char c) -> int {
      if (c >= '0' && c <= '9') return c - '0';
      if (c >= 'a' && c <= 'f') return c - 'a' + 10;
      throw ParseError("canonical key hex must be lowercase hex: '" + text + "'");
    };
    std::string bytes;
    for (std::size_t i = 0; i < text.size(); i += 2)
      bytes.push_back(static_cast<char>(nibble(text[i]) * 16 + nibble(text[i + 1])));
    return CanonicalKey(std::move(bytes));
  }

  bool operator==(const CanonicalKey&) const = default;
  auto operator<=>(const CanonicalKey&) const = default;

 private:
  std::string bytes_;
};

struct CanonicalLabeling {
  CanonicalKey key;
  std::vector<std::size_t> position;  ///< element -> canonical position
};

namespace detail {

// Canonical search state. Positions are filled cell by cell; after placing
// position k the bits leq(s_i, s_k), leq(s_k, s_i) for i < k are appended,
// so every partial placement determines a prefix of the final bit string
// and can be compared against the best string found so far.
class CanonicalSearch {
 public:
  CanonicalSearch(const Poset& p, MapMode mode) : p_(p), mode_(mode), n_(p.size()) {
    inv_ = element_invariants(p, mode);
    sorted_.resize(n_);
    for (std::size_t i = 0; i < n_; ++i) sorted_[i] = i;
    std::sort(sorted_.begin(), sorted_.end(), [&](auto a, auto b) {
      return std::tie(inv_[a], a) < std::tie(inv_[b], b);
    });
    twin_.assign(n_, 0);
    for (std::size_t x = 0; x < n_; ++x)
      for (std::size_t y = 0; y < n_; ++y) {
        const auto sx = ElementSubset::singleton(x), sy = ElementSubset::singleton(y);
        const bool same = x != y && inv_[x] == inv_[y] && (p.down(x) - sx) == (p.down(y) - sy) &&
                          (p.up(x) - sx) == (p.up(y) - sy);
        if (same) twin_[x] |= std::uint64_t{1} << y;
      }
  }

  CanonicalLabeling run() {
    placed_.assign(n_, 0);
    current_.clear();
    best_.clear();
    found_ = false;
    search(0, false);
    CanonicalLabeling out;
    out.position.resize(n_);
    for (std::size_t k = 0; k < n_; ++k) out.position[best_order_[k]] = k;
    if (n_ == 0) return out;
    std::string bytes;
    bytes.push_back(static_cast<char>(n_));
    if (mode_ == MapMode::ColorPreservingIsos)
      for (std::size_t k = 0; k < n_; ++k) bytes.push_back(static_cast<char>(p_.color(best_order_[k]) & 0xff));
    unsigned char acc = 0;
    int filled = 0;
    for (auto bit : best_) {
      acc = static_cast<unsigned char>((acc << 1) | bit);
      if (++filled == 8) {
        bytes.push_back(static_cast<char>(acc));
        acc = 0;
        filled = 0;
      }
    }
    if (filled > 0) bytes.push_back(static_cast<char>(acc << (8 - filled)));
    out.key = CanonicalKey(std::move(bytes));
    return out;
  }

 private:
  void search(std::size_t k, bool already_smaller) {
    if (k == n_) {
      if (!found_ || already_smaller) {
        best_ = current_;
        best_order_ = placed_;
        found_ = true;
        ++generation_;
      }
      return;
    }
    const ElementInvariant& cell = inv_[sorted_[k]];
    const std::uint64_t entry_generation = generation_;
    std::uint64_t tried = 0;
    for (auto x : sorted_) {
      if (inv_[x] != cell || used_.contains(x)) continue;
      if (twin_[x] & tried) continue;
      tried |= std::uint64_t{1} << x;

      const std::size_t mark = current_.size();
      // a new best found below this frame shares the prefix placed so far
      bool smaller = already_smaller && generation_ == entry_generation;
      bool pruned = false;
      for (std::size_t i = 0; i < k; ++i) {
        for (int dir = 0; dir < 2; ++dir) {
          const bool bit = dir == 0 ? p_.leq(placed_[i], x) : p_.leq(x, placed_[i]);
          current_.push_back(bit);
          if (found_ && !smaller) {
            const auto b = best_[current_.size() - 1];
            if (bit > b) {
              pruned = true;
              break;
            }
            if (bit < b) smaller = true;
          }
        }
        if (pruned) break;
      }
      if (!pruned) {
        placed_[k] = x;
        used_.insert(x);
        search(k + 1, smaller);
        used_.erase(x);
      }
      current_.resize(mark);
    }
  }

  const Poset& p_;
  MapMode mode_;
  std::size_t n_;
  std::vector<ElementInvariant> inv_;
  std::vector<std::size_t> sorted_;
  std::vector<std::uint64_t> twin_;
  std::vector<std::size_t> placed_;
  std::vector<std::size_t> best_order_;
  std::vector<std::uint8_t> current_;
  std::vector<std::uint8_t> best_;
  ElementSubset used_;
  bool found_ = false;
  std::uint64_t generation_ = 0;
};

}  // namespace detail

/// Canonical labeling: the lexicographically least serialized relation over
/// all orderings compatible with the invariant partition, plus the color
/// sequence in color-preserving mode.
inline CanonicalLabeling canonical_labeling(const Poset& p, MapMode mode) {
  return detail::CanonicalSearch(p, mode).run();
}

inline CanonicalKey canonical_form(const Poset& p, MapMode mode) { return canonical_labeling(p, mode).key; }

/// The poset rearranged into canonical order, labels dropped.
inline Poset canonical_representative(const Poset& p, MapMode mode) {
  const auto lab = canonical_labeling(p, mode);
  Poset r = relabel(p, lab.position);
  return Poset::from_down_sets(r.down_rows(), {}, r.colors());
}

}  // namespace inccat

template <>
struct std::hash<inccat::CanonicalKey> {
  std::size_t operator()(const inccat::CanonicalKey& k) const noexcept { return std::hash<std::string>{}(k.bytes()); }
};
