#pragma once

#include <string>
#include <utility>
#include <vector>

#include "inccat/poset.hpp"

namespace testing_posets {

using inccat::Poset;

inline Poset make(std::vector<std::string> labels, std::vector<std::pair<std::string, std::string>> covers) {
  return inccat::from_covers(labels, covers);
}

/// a < b
inline Poset chain2() { return make({"a", "b"}, {{"a", "b"}}); }
/// a < b < c
inline Poset chain3() { return make({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}}); }
/// x, y incomparable
inline Poset antichain2() { return make({"x", "y"}, {}); }
/// a below b and c
inline Poset vee() { return make({"a", "b", "c"}, {{"a", "b"}, {"a", "c"}}); }
/// bottom < l, r < top
inline Poset diamond() { return make({"bot", "l", "r", "top"}, {{"bot", "l"}, {"bot", "r"}, {"l", "top"}, {"r", "top"}}); }

}  // namespace testing_posets
