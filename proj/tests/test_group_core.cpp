#include <gtest/gtest.h>

#include <random>
#include <set>

#include "grouplab/abelian.hpp"
#include "grouplab/builtin.hpp"
#include "grouplab/error.hpp"
#include "grouplab/isomorphism.hpp"
#include "grouplab/permutation.hpp"
#include "grouplab/realization.hpp"
#include "grouplab/structure.hpp"
#include "support.hpp"

namespace {

using namespace grouplab;
namespace b = grouplab::builtin;
using testing_support::brute_center;
using testing_support::brute_derived;

std::set<Element> as_set(const Subgroup& s) { return {s.members.begin(), s.members.end()}; }

Element element_of(const PermutationGroup& pg, const Permutation& p) {
  for (Element x = 0; x < pg.elements.size(); ++x) {
    if (pg.elements[x] == p) return x;
  }
  ADD_FAILURE() << "permutation not in group";
  return 0;
}

TEST(Permutations, SingleInvolutionGivesOrderTwo) {
  EXPECT_EQ(build_from_permutations({Permutation::from_cycles("(1,2)", 2)}, 10).order(), 2u);
}

TEST(Permutations, TwoTranspositionsGenerateS3) {
  const auto g = build_from_permutations(
      {Permutation::from_cycles("(1,2)", 3), Permutation::from_cycles("(1,3)", 3)}, 100);
  EXPECT_EQ(g.order(), 6u);
  EXPECT_FALSE(g.validate().has_value());
  // brute-force closure over all 6 permutations of 3 points
  std::set<std::vector<Point>> all;
  std::vector<Point> p{0, 1, 2};
  do all.insert(p);
  while (std::next_permutation(p.begin(), p.end()));
  EXPECT_EQ(all.size(), g.order());
}

TEST(Permutations, EmptyGeneratorsWithDegreeGiveTrivialGroup) {
  EXPECT_EQ(build_from_permutations({}, 10, 3).order(), 1u);
}

TEST(Permutations, EmptyGeneratorsWithoutDegreeAreRejected) {
  try {
    build_from_permutations({}, 10);
    FAIL() << "expected an error";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::EmptyGeneratorList);
  }
}

TEST(Permutations, ClosureCapIsEnforced) {
  try {
    build_from_permutations({Permutation::from_cycles("(1,2,3,4,5)", 5), Permutation::from_cycles("(1,2)", 5)}, 100);
    FAIL() << "expected an error";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::ClosureExceedsCap);
  }
}

TEST(Permutations, CompositionIsRightToLeft) {
  const auto a = Permutation::from_cycles("(1,2)", 3);
  const auto c = Permutation::from_cycles("(1,3)", 3);
  // (a*c)(1) = a(c(1)) = a(3) = 3
  EXPECT_EQ((a * c).images()[0], 2u);
}

TEST(Permutations, CycleParseErrors) {
  EXPECT_THROW(Permutation::from_cycles("(1,2", 3), Error);
  EXPECT_THROW(Permutation::from_cycles("(1,4)", 3), Error);
  EXPECT_THROW(Permutation::from_cycles("(1,1)", 3), Error);
}

TEST(Commutator, EqualArgumentsGiveIdentity) {
  for (const auto& g : testing_support::small_groups()) {
    for (Element x = 0; x < g.order(); ++x) EXPECT_EQ(g.commutator(x, x), FiniteGroup::identity);
  }
}

TEST(Commutator, AbelianGroupsHaveTrivialCommutators) {
  const auto g = b::direct_product(b::cyclic(4), b::cyclic(6));
  for (Element x = 0; x < g.order(); ++x) {
    for (Element y = 0; y < g.order(); ++y) EXPECT_EQ(g.commutator(x, y), FiniteGroup::identity);
  }
}

TEST(Commutator, S3TranspositionsGiveThreeCycle) {
  const auto a = Permutation::from_cycles("(1,2)", 3);
  const auto c = Permutation::from_cycles("(1,3)", 3);
  const auto pg = close_permutations({a, c}, 10);
  const Element x = element_of(pg, a), y = element_of(pg, c);
  EXPECT_EQ(pg.elements[pg.group.commutator(x, y)], Permutation::from_cycles("(1,2,3)", 3));
  EXPECT_EQ(pg.group.conjugate(x, y), pg.group.mul(pg.group.mul(x, y), pg.group.inv(x)));
}

TEST(Center, Examples) {
  const auto v = b::direct_product(b::cyclic(3), b::cyclic(5));
  EXPECT_EQ(center(v).order(), v.order());
  EXPECT_TRUE(center(b::symmetric(3)).is_trivial());
  EXPECT_EQ(center(b::quaternion8()).order(), 2u);
}

TEST(Center, MatchesBruteForce) {
  for (const auto& g : testing_support::small_groups()) EXPECT_EQ(as_set(center(g)), brute_center(g)) << g.label();
}

TEST(Derived, Examples) {
  EXPECT_TRUE(derived_subgroup(b::cyclic(8)).is_trivial());
  EXPECT_EQ(derived_subgroup(b::symmetric(3)).order(), 3u);
  EXPECT_EQ(derived_subgroup(b::dihedral(4)).order(), 2u);
}

TEST(Derived, MatchesBruteForce) {
  for (const auto& g : testing_support::small_groups()) EXPECT_EQ(as_set(derived_subgroup(g)), brute_derived(g)) << g.label();
}

TEST(Quotient, ByWholeGroupIsTrivial) {
  const auto g = b::dihedral(4);
  EXPECT_EQ(quotient(g, whole_group(g)).group.order(), 1u);
}

TEST(Quotient, ByTrivialSubgroupIsIsomorphic) {
  const auto g = b::quaternion8();
  const auto q = quotient(g, trivial_subgroup());
  EXPECT_EQ(q.group, g);
  EXPECT_EQ(q.projection, identity_hom(g));
}

TEST(Quotient, S3ModA3HasOrderTwo) {
  const auto g = b::symmetric(3);
  EXPECT_EQ(quotient(g, derived_subgroup(g)).group.order(), 2u);
}

TEST(Quotient, RejectsNonNormalSubgroup) {
  const auto g = b::symmetric(3);
  for (Element x = 1; x < g.order(); ++x) {
    if (g.element_order(x) != 2) continue;
    try {
      quotient(g, Subgroup{{0, x}});
      FAIL() << "expected NotNormal";
    } catch (const Error& e) {
      EXPECT_EQ(e.kind(), ErrorKind::NotNormal);
    }
    return;
  }
}

TEST(Quotient, ProjectionIsSurjectiveWithKernelN) {
  for (const auto& g : testing_support::small_groups()) {
    for (const auto& n : {center(g), derived_subgroup(g)}) {
      const auto q = quotient(g, n);
      EXPECT_EQ(q.group.order() * n.order(), g.order());
      EXPECT_TRUE(is_homomorphism(g, q.group, q.projection));
      EXPECT_EQ(image_of(q.projection).order(), q.group.order());
      EXPECT_EQ(kernel_of(q.projection), n);
      EXPECT_FALSE(q.group.validate().has_value());
    }
  }
}

TEST(AbelianSubgroups, AbelianGroupIsItsOwnMaximal) {
  const auto g = b::direct_product(b::cyclic(2), b::cyclic(4));
  const auto subs = abelian_subgroups(g, true);
  ASSERT_EQ(subs.size(), 1u);
  EXPECT_EQ(subs[0].order(), g.order());
}

TEST(AbelianSubgroups, S3Maximal) {
  const auto subs = abelian_subgroups(b::symmetric(3), true);
  ASSERT_EQ(subs.size(), 4u);
  EXPECT_EQ(subs[0].order(), 2u);
  EXPECT_EQ(subs[1].order(), 2u);
  EXPECT_EQ(subs[2].order(), 2u);
  EXPECT_EQ(subs[3].order(), 3u);
}

TEST(AbelianSubgroups, TrivialGroup) {
  const auto subs = abelian_subgroups(FiniteGroup(), true);
  ASSERT_EQ(subs.size(), 1u);
  EXPECT_TRUE(subs[0].is_trivial());
}

TEST(AbelianSubgroups, AllAreAbelianSubgroupsInOrder) {
  for (const auto& g : testing_support::small_groups()) {
    const auto all = abelian_subgroups(g, false);
    EXPECT_TRUE(std::is_sorted(all.begin(), all.end()));
    for (const auto& a : all) {
      EXPECT_TRUE(is_subgroup(g, a));
      EXPECT_TRUE(is_abelian_subset(g, a.members));
    }
    // every cyclic subgroup appears
    for (Element x = 0; x < g.order(); ++x) {
      const Element gens[] = {x};
      EXPECT_NE(std::find(all.begin(), all.end(), generate_subgroup(g, gens)), all.end());
    }
  }
}

TEST(AbelianInvariants, Examples) {
  EXPECT_TRUE(abelianization(FiniteGroup()).is_trivial());
  EXPECT_EQ(abelian_invariants(b::elementary(2, 2)).factors, (std::vector<std::uint64_t>{2, 2}));
  EXPECT_EQ(abelian_invariants(b::cyclic(6)).factors, (std::vector<std::uint64_t>{6}));
}

TEST(AbelianInvariants, NonAbelianRejected) {
  try {
    abelian_invariants(b::symmetric(3));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NotAbelian);
  }
}

TEST(AbelianInvariants, MatchGcdLcmNormalFormOnRandomProducts) {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<std::uint64_t> pick(1, 6);
  for (int trial = 0; trial < 40; ++trial) {
    std::vector<std::uint64_t> orders;
    FiniteGroup g;
    const int k = 1 + trial % 3;
    for (int i = 0; i < k; ++i) {
      orders.push_back(pick(rng));
      g = b::direct_product(g, b::cyclic(orders.back()));
    }
    if (g.order() > 120) continue;
    const auto inv = abelian_invariants(g);
    EXPECT_TRUE(inv.is_valid());
    EXPECT_EQ(inv.order(), g.order());
    EXPECT_EQ(inv.factors, testing_support::cyclic_product_invariants(orders));
  }
}

TEST(AbelianInvariants, StableUnderRelabeling) {
  std::mt19937_64 rng(11);
  const auto g = b::direct_product(b::cyclic(4), b::elementary(2, 2));
  const auto expected = abelian_invariants(g);
  for (int i = 0; i < 10; ++i) {
    const auto p = testing_support::random_relabeling(g.order(), rng);
    EXPECT_EQ(abelian_invariants(relabel(g, p)), expected);
  }
}

TEST(Isomorphism, SelfIsomorphismIsIdentity) {
  const auto g = b::dihedral(4);
  const auto f = find_isomorphism(g, g);
  ASSERT_TRUE(f);
  EXPECT_EQ(*f, identity_hom(g));
}

TEST(Isomorphism, C4AndKleinAreNotIsomorphic) {
  EXPECT_FALSE(find_isomorphism(b::cyclic(4), b::elementary(2, 2)));
}

TEST(Isomorphism, PermutationS3AndEnumeratedS3) {
  Presentation p{2, {{1, 1}, {2, 2}, {1, 2, 1, 2, 1, 2}}, "S3"};
  const auto r = realize(p);
  const auto f = find_isomorphism(b::symmetric(3), r.group);
  ASSERT_TRUE(f);
  EXPECT_TRUE(is_homomorphism(b::symmetric(3), r.group, *f));
  EXPECT_TRUE(is_bijective(*f, r.group.order()));
}

TEST(Isomorphism, SymmetricOnSmallGroups) {
  const auto groups = testing_support::small_groups();
  for (const auto& a : groups) {
    for (const auto& c : groups) {
      EXPECT_EQ(are_isomorphic(a, c), are_isomorphic(c, a)) << a.label() << " " << c.label();
    }
  }
}

TEST(Isomorphism, RelabeledCopiesAreIsomorphic) {
  std::mt19937_64 rng(3);
  for (const auto& g : testing_support::small_groups()) {
    const auto h = relabel(g, testing_support::random_relabeling(g.order(), rng));
    const auto f = find_isomorphism(g, h);
    ASSERT_TRUE(f) << g.label();
    EXPECT_TRUE(is_homomorphism(g, h, *f));
  }
}

TEST(Characteristic, CenterAndDerivedPreservedByAutomorphisms) {
  for (const auto& g : {b::dihedral(4), b::quaternion8(), b::symmetric(3), b::alternating(4)}) {
    const auto z = center(g), d = derived_subgroup(g);
    for_each_isomorphism(g, g, [&](const GroupHom& f) {
      for (Element x : z.members) EXPECT_TRUE(z.contains(f(x)));
      for (Element x : d.members) EXPECT_TRUE(d.contains(f(x)));
      return true;
    });
  }
}

TEST(FiniteGroupTable, RejectsNonLatinSquare) {
  EXPECT_THROW(FiniteGroup::from_table(2, {0, 1, 1, 1}, "bad"), Error);
}

TEST(FiniteGroupTable, ValidateFindsNonAssociativity) {
  // a Latin square with identity 0 that is not associative (order 5 loop)
  const std::vector<Element> t = {0, 1, 2, 3, 4, 1, 0, 3, 4, 2, 2, 4, 0, 1, 3, 3, 2, 4, 0, 1, 4, 3, 1, 2, 0};
  const auto g = FiniteGroup::from_table(5, t, "loop");
  ASSERT_TRUE(g.validate().has_value());
  EXPECT_NE(g.validate()->find("associative"), std::string::npos);
}

TEST(FiniteGroupTable, EveryBuiltinIsValid) {
  for (const auto& g : testing_support::small_groups()) EXPECT_FALSE(g.validate().has_value()) << g.label();
  EXPECT_FALSE(b::extraspecial(3, b::Exponent::P).validate().has_value());
  EXPECT_FALSE(b::extraspecial(3, b::Exponent::P2).validate().has_value());
  EXPECT_FALSE(b::symmetric(4).validate().has_value());
}

}  // namespace
