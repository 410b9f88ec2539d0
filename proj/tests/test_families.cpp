#include <gtest/gtest.h>

#include <set>

#include "helpers.hpp"
#include "inccat/family.hpp"
#include "inccat/hall.hpp"
#include "inccat/verify.hpp"
#include "oracles.hpp"

using namespace inccat;
using namespace testing_posets;

namespace {

std::vector<std::size_t> class_counts(const FamilyContext& ctx) {
  std::vector<std::size_t> out;
  for (std::size_t s = 0; s <= ctx.max_size(); ++s) out.push_back(ctx.classes(s).size());
  return out;
}

std::size_t tree_count(const FamilyContext& ctx, std::size_t size) {
  std::size_t n = 0;
  for (const auto& c : ctx.classes(size)) n += is_connected(c.representative);
  return n;
}

}  // namespace

TEST(FamilySpec, Parse) {
  EXPECT_EQ(FamilySpec::parse("fin").kind, FamilyKind::Fin);
  EXPECT_EQ(FamilySpec::parse("sets").kind, FamilyKind::Sets);
  EXPECT_EQ(FamilySpec::parse("forests").kind, FamilyKind::Forests);
  const auto c = FamilySpec::parse("csets:3");
  EXPECT_EQ(c.kind, FamilyKind::ColoredSets);
  EXPECT_EQ(c.colors, 3u);
  EXPECT_EQ(c.mode(), MapMode::ColorPreservingIsos);
  EXPECT_EQ(FamilySpec::parse("cforests:2").name(), "cforests:2");
  EXPECT_THROW(FamilySpec::parse("csets:"), ParseError);
  EXPECT_THROW(FamilySpec::parse("csets:0"), ParseError);
  EXPECT_THROW(FamilySpec::parse("graphs"), ParseError);
}

TEST(Fin, ClassCounts) {
  EXPECT_EQ(class_counts(fin_up_to(6)), (std::vector<std::size_t>{1, 1, 2, 5, 16, 63, 318}));
}

TEST(Fin, CountsMatchRelationMatrixEnumeration) {
  const auto ctx = fin_up_to(5);
  for (std::size_t n = 0; n <= 5; ++n) {
    const auto labeled = oracle::labeled_posets(n);
    EXPECT_EQ(oracle::classes_by_permutations(labeled, false).size(), ctx.classes(n).size()) << n;
  }
}

TEST(Fin, SmallSizes) {
  const auto ctx = fin_up_to(2);
  ASSERT_EQ(ctx.classes(1).size(), 1u);
  EXPECT_EQ(ctx.classes(1)[0].key, canonical_form(point(), MapMode::AllPosetIsos));
  std::set<CanonicalKey> two;
  for (const auto& c : ctx.classes(2)) two.insert(c.key);
  EXPECT_EQ(two, (std::set<CanonicalKey>{canonical_form(chain(2), MapMode::AllPosetIsos),
                                         canonical_form(antichain(2), MapMode::AllPosetIsos)}));
}

TEST(Family, ClassesAreSortedAndDeduplicated) {
  const auto ctx = fin_up_to(5);
  for (std::size_t s = 0; s <= 5; ++s) {
    const auto& cs = ctx.classes(s);
    for (std::size_t i = 1; i < cs.size(); ++i) EXPECT_LT(cs[i - 1].key, cs[i].key);
    for (const auto& c : cs) {
      EXPECT_EQ(c.size, s);
      EXPECT_EQ(canonical_form(c.representative, MapMode::AllPosetIsos), c.key);
    }
  }
}

TEST(Family, TruncationIsReported) {
  const auto ctx = fin_up_to(3);
  EXPECT_THROW(ctx.classes(4), TruncationError);
  EXPECT_THROW(ctx.class_of(chain(4)), TruncationError);
  EXPECT_THROW(ctx.at(canonical_form(chain(4), MapMode::AllPosetIsos)), TruncationError);
  EXPECT_THROW(fin_up_to(size_cap() + 1), CapacityError);
}

TEST(Sets, OneClassPerSize) {
  EXPECT_EQ(class_counts(sets_up_to(8)), std::vector<std::size_t>(9, 1));
  const auto sets = sets_up_to(5);
  for (const auto* c : sets.classes_up_to(5)) EXPECT_TRUE(is_antichain(c->representative));
}

TEST(ColoredSets, ClassesAreColorMultisets) {
  const auto ctx = colored_sets_up_to(2, 2);
  ASSERT_EQ(ctx.classes(2).size(), 3u);
  std::set<std::vector<std::size_t>> vectors;
  for (const auto& c : ctx.classes(2)) vectors.insert(c.color_vector);
  EXPECT_EQ(vectors, (std::set<std::vector<std::size_t>>{{2, 0}, {1, 1}, {0, 2}}));
  for (std::uint32_t k = 1; k <= 3; ++k) {
    const auto ck = colored_sets_up_to(5, k);
    for (std::size_t n = 0; n <= 5; ++n) EXPECT_EQ(ck.classes(n).size(), oracle::binomial(n + k - 1, k - 1));
  }
}

TEST(ColoredSets, OneColorBehavesLikeSets) {
  const auto one = colored_sets_up_to(5, 1);
  const auto sets = sets_up_to(5);
  EXPECT_EQ(class_counts(one), class_counts(sets));
  const HallAlgebra h1(one), hs(sets);
  for (std::size_t n = 0; n <= 2; ++n)
    for (std::size_t m = 0; m <= 3; ++m) {
      const auto a = h1.product(h1.delta(one.classes(n)[0].key), h1.delta(one.classes(m)[0].key));
      const auto b = hs.product(hs.delta(antichain(n)), hs.delta(antichain(m)));
      EXPECT_EQ(a.coefficient(one.classes(n + m)[0].key), b.coefficient(sets.classes(n + m)[0].key));
    }
}

TEST(ColoredSets, ColorsOutOfRangeAreRejected) {
  const auto ctx = colored_sets_up_to(2, 2);
  EXPECT_FALSE(ctx.contains(point(2, true)));
  EXPECT_TRUE(ctx.contains(point(1, true)));
}

TEST(Forests, TreeCounts) {
  const auto ctx = forests_up_to(5);
  std::vector<std::size_t> trees;
  for (std::size_t n = 1; n <= 5; ++n) trees.push_back(tree_count(ctx, n));
  EXPECT_EQ(trees, (std::vector<std::size_t>{1, 1, 2, 4, 9}));
  EXPECT_EQ(class_counts(ctx), (std::vector<std::size_t>{1, 1, 2, 4, 9, 20}));
}

TEST(Forests, TreeCountsMatchExhaustiveGeneration) {
  const auto ctx = forests_up_to(6);
  for (std::size_t n = 1; n <= 6; ++n) {
    std::vector<std::vector<int>> parents;
    oracle::rooted_trees(n, parents);
    std::vector<Poset> posets;
    for (const auto& p : parents) posets.push_back(oracle::poset_of_parents(p));
    EXPECT_EQ(oracle::classes_by_permutations(posets, false).size(), tree_count(ctx, n)) << n;
  }
}

TEST(Forests, SizeTwo) {
  const auto ctx = forests_up_to(2);
  ASSERT_EQ(ctx.classes(2).size(), 2u);
  std::size_t connected = 0;
  for (const auto& c : ctx.classes(2)) connected += is_connected(c.representative);
  EXPECT_EQ(connected, 1u);
}

TEST(Forests, Membership) {
  EXPECT_TRUE(is_forest_poset(vee()));
  EXPECT_FALSE(is_forest_poset(dual(vee())));
  EXPECT_TRUE(is_forest_poset(dual(vee()), true));
  EXPECT_FALSE(is_forest_poset(diamond()));
  EXPECT_TRUE(is_forest_poset(Poset()));
  const auto ctx = forests_up_to(5);
  for (const auto* c : ctx.classes_up_to(5)) EXPECT_TRUE(is_forest_poset(c->representative));
}

TEST(Forests, RootMaxIsTheDual) {
  const auto down = forests_up_to(5);
  const auto up = forests_up_to(5, true);
  EXPECT_EQ(class_counts(down), class_counts(up));
  std::set<CanonicalKey> dual_keys;
  for (const auto* c : down.classes_up_to(5)) dual_keys.insert(canonical_form(dual(c->representative), MapMode::AllPosetIsos));
  for (const auto* c : up.classes_up_to(5)) EXPECT_TRUE(dual_keys.count(c->key));
}

TEST(Forests, IdealsMatchAdmissibleCuts) {
  for (bool root_max : {false, true}) {
    const auto ctx = forests_up_to(6, root_max);
    EXPECT_TRUE(verify::admissible_cuts(ctx, 6).ok());
  }
  const auto ctx = forests_up_to(6);
  for (const auto* c : ctx.classes_up_to(6)) {
    if (c->size == 0 || !is_connected(c->representative)) continue;
    const auto parents = oracle::parents_of_tree(c->representative);
    EXPECT_EQ(count_admissible_cuts(c->representative), oracle::admissible_cuts_by_parent(parents));
  }
}

TEST(ColoredForests, CountsMatchExhaustiveGeneration) {
  const auto ctx = colored_forests_up_to(4, 2);
  for (std::size_t n = 1; n <= 4; ++n) {
    // forests on n nodes are trees on n + 1 nodes with the root removed
    std::vector<std::vector<int>> parents;
    oracle::rooted_trees(n + 1, parents);
    std::vector<Poset> posets;
    for (const auto& tree : parents) {
      std::vector<int> forest;
      for (std::size_t v = 1; v <= n; ++v) forest.push_back(tree[v] <= 0 ? -1 : tree[v] - 1);
      const Poset shape = oracle::poset_of_parents(forest);
      for (std::uint32_t c = 0; c < (1u << n); ++c) {
        std::vector<std::uint32_t> colors;
        for (std::size_t v = 0; v < n; ++v) colors.push_back((c >> v) & 1u);
        posets.push_back(Poset::from_down_sets(shape.down_rows(), {}, colors));
      }
    }
    EXPECT_EQ(oracle::classes_by_permutations(posets, true).size(), ctx.classes(n).size()) << n;
  }
  for (const auto* c : ctx.classes_up_to(4)) EXPECT_TRUE(is_forest_poset(c->representative));
}

TEST(Closure, AllBuiltInFamilies) {
  for (const auto& ctx : {fin_up_to(5), sets_up_to(5), colored_sets_up_to(5, 2), forests_up_to(5),
                          forests_up_to(5, true), colored_forests_up_to(4, 2)}) {
    const auto rep = verify_closure(ctx);
    EXPECT_TRUE(rep.ok()) << ctx.name();
    EXPECT_GT(rep.checks, 0u);
  }
}

TEST(Closure, ConvexSubposetsOfForestsAreForests) {
  const auto ctx = forests_up_to(5);
  for (const auto* c : ctx.classes_up_to(5)) {
    const Poset& p = c->representative;
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << p.size()); ++bits) {
      const ElementSubset s(bits);
      if (is_convex(p, s)) {
        EXPECT_TRUE(is_forest_poset(induced_subposet(p, s).poset));
      }
    }
  }
}
