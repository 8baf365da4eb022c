#include <gtest/gtest.h>

#include <random>

#include "grouplab/builtin.hpp"
#include "grouplab/error.hpp"
#include "grouplab/wedge.hpp"
#include "support.hpp"

namespace {

using namespace grouplab;
namespace b = grouplab::builtin;

std::vector<FiniteGroup> wedge_groups() {
  return {b::cyclic(1),    b::cyclic(4),         b::elementary(2, 2), b::symmetric(3), b::dihedral(4),
          b::quaternion8(), b::dihedral(5),      b::alternating(4),   b::direct_product(b::symmetric(3), b::cyclic(2)),
          b::direct_product(b::cyclic(4), b::cyclic(2))};
}

TEST(WedgePresentation, OneGeneratorPerOrderedPair) {
  for (std::size_t n : {1, 2, 5, 6}) {
    const auto wp = build_wedge_presentation(b::cyclic(n), WedgeVariant::Curly);
    EXPECT_EQ(wp.presentation.num_generators, n * n);
  }
}

TEST(WedgePresentation, S3RawRelatorCounts) {
  const auto wp = build_wedge_presentation(b::symmetric(3), WedgeVariant::Curly);
  EXPECT_EQ(wp.raw_r1, 216u);
  EXPECT_EQ(wp.raw_r2, 216u);
  std::size_t commuting = 0;
  const auto g = b::symmetric(3);
  for (Element x = 0; x < 6; ++x) {
    for (Element y = 0; y < 6; ++y) commuting += g.mul(x, y) == g.mul(y, x);
  }
  EXPECT_EQ(wp.raw_r3, commuting);
  EXPECT_EQ(build_wedge_presentation(g, WedgeVariant::Exterior).raw_r3, 6u);
}

TEST(WedgePresentation, CurlyRelatorsContainExteriorOnes) {
  for (const auto& g : {b::symmetric(3), b::quaternion8()}) {
    const auto curly = build_wedge_presentation(g, WedgeVariant::Curly).presentation.relators;
    const auto ext = build_wedge_presentation(g, WedgeVariant::Exterior).presentation.relators;
    for (const auto& r : ext) EXPECT_NE(std::find(curly.begin(), curly.end(), r), curly.end());
  }
}

TEST(WedgePresentation, CapIsEnforced) {
  try {
    build_wedge_presentation(b::cyclic(17), WedgeVariant::Exterior);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::GroupTooLarge);
  }
  EXPECT_THROW(build_wedge_presentation(b::cyclic(65), WedgeVariant::Curly), Error);
  EXPECT_NO_THROW(build_wedge_presentation(b::cyclic(17), WedgeVariant::Exterior, 17));
}

TEST(Wedge, C2CurlyIsTrivial) {
  const auto w = compute_wedge(b::cyclic(2), WedgeVariant::Curly);
  EXPECT_EQ(w.order(), 1u);
  EXPECT_TRUE(w.kernel.is_trivial());
}

TEST(Wedge, AbelianCurlyCollapses) {
  for (std::size_t n : {1, 3, 8}) EXPECT_EQ(compute_wedge(b::cyclic(n), WedgeVariant::Curly).order(), 1u);
  EXPECT_EQ(compute_wedge(b::elementary(2, 3), WedgeVariant::Curly).order(), 1u);
}

TEST(Wedge, KleinExteriorHasOrderTwo) {
  const auto w = compute_wedge(b::elementary(2, 2), WedgeVariant::Exterior);
  EXPECT_EQ(w.order(), 2u);
  EXPECT_EQ(w.kernel.order(), 2u);
  for (Element x : w.kappa.images) EXPECT_EQ(x, FiniteGroup::identity);
}

TEST(Wedge, S3CurlyIsCyclicOfOrderThree) {
  const auto g = b::symmetric(3);
  const auto w = compute_wedge(g, WedgeVariant::Curly);
  EXPECT_EQ(w.order(), 3u);
  EXPECT_TRUE(w.kernel.is_trivial());
  EXPECT_EQ(image_of(w.kappa).order(), w.order());
  EXPECT_EQ(image_of(w.kappa), derived_subgroup(g));
}

TEST(Wedge, BogomolovKernelExamples) {
  EXPECT_TRUE(bogomolov_kernel(b::cyclic(6)).is_trivial());
  EXPECT_TRUE(bogomolov_kernel(b::symmetric(3)).is_trivial());
  EXPECT_TRUE(bogomolov_kernel(b::dihedral(4)).is_trivial());
}

TEST(Wedge, MultiplierOrderExamples) {
  for (std::size_t n : {1, 2, 5, 9}) EXPECT_EQ(multiplier_order(b::cyclic(n)), 1u);
  EXPECT_EQ(multiplier_order(b::elementary(2, 2)), 2u);
  EXPECT_EQ(multiplier_order(b::quaternion8()), 1u);
  EXPECT_EQ(multiplier_order(b::dihedral(4)), 2u);
  EXPECT_EQ(multiplier_order(b::symmetric(3)), 1u);
  EXPECT_EQ(multiplier_order(b::elementary(3, 2)), 3u);
}

TEST(Wedge, KappaMatchesCommutatorsOnPairs) {
  for (const auto& g : wedge_groups()) {
    for (auto v : {WedgeVariant::Curly, WedgeVariant::Exterior}) {
      const auto w = compute_wedge(g, v);
      for (Element m = 0; m < g.order(); ++m) {
        for (Element n = 0; n < g.order(); ++n) EXPECT_EQ(w.kappa(w.pair_image(m, n)), g.commutator(m, n));
      }
      EXPECT_TRUE(is_homomorphism(w.group(), g, w.kappa));
    }
  }
}

TEST(Wedge, RelatorsTraceToIdentityThroughCommutatorRecipe) {
  for (const auto& g : wedge_groups()) {
    for (auto v : {WedgeVariant::Curly, WedgeVariant::Exterior}) {
      const auto wp = build_wedge_presentation(g, v);
      EXPECT_TRUE(kills_relators(wp.presentation, g, kappa_generator_images(g))) << g.label();
    }
  }
}

TEST(Wedge, ExactnessAndKappaOntoDerivedSubgroup) {
  for (const auto& g : wedge_groups()) {
    const auto d = derived_subgroup(g);
    for (auto v : {WedgeVariant::Curly, WedgeVariant::Exterior}) {
      const auto w = compute_wedge(g, v);
      EXPECT_EQ(image_of(w.kappa), d) << g.label();
      EXPECT_EQ(w.order(), w.kernel.order() * d.order()) << g.label();
      EXPECT_EQ(w.kernel, kernel_of(w.kappa));
    }
  }
}

TEST(Wedge, CurlyKernelIsAbelian) {
  for (const auto& g : wedge_groups()) {
    const auto w = compute_wedge(g, WedgeVariant::Curly);
    EXPECT_TRUE(is_abelian_subset(w.group(), w.kernel.members)) << g.label();
  }
}

TEST(Wedge, ExteriorSurjectsOntoCurly) {
  for (const auto& g : wedge_groups()) {
    const auto curly = compute_wedge(g, WedgeVariant::Curly);
    const auto ext = compute_wedge(g, WedgeVariant::Exterior);
    EXPECT_EQ(ext.order() % curly.order(), 0u) << g.label();
    const auto f = extend_to_hom(ext.realization, curly.group(), curly.realization.gen_images);
    ASSERT_TRUE(f) << g.label();
    EXPECT_EQ(image_of(*f).order(), curly.order());
  }
}

TEST(Wedge, PairsWithIdentityVanish) {
  for (const auto& g : wedge_groups()) {
    for (auto v : {WedgeVariant::Curly, WedgeVariant::Exterior}) {
      const auto w = compute_wedge(g, v);
      for (Element x = 0; x < g.order(); ++x) {
        EXPECT_EQ(w.pair_image(0, x), FiniteGroup::identity);
        EXPECT_EQ(w.pair_image(x, 0), FiniteGroup::identity);
      }
    }
  }
}

TEST(Wedge, ReductionKeepsOrders) {
  WedgeOptions reduce;
  reduce.reduce_generators = true;
  for (const auto& g : wedge_groups()) {
    for (auto v : {WedgeVariant::Curly, WedgeVariant::Exterior}) {
      const auto plain = compute_wedge(g, v);
      const auto reduced = compute_wedge(g, v, reduce);
      EXPECT_EQ(plain.order(), reduced.order()) << g.label();
      EXPECT_EQ(plain.kernel.order(), reduced.kernel.order()) << g.label();
      EXPECT_EQ(kernel_invariants(plain), kernel_invariants(reduced)) << g.label();
    }
  }
}

TEST(Wedge, FelschAgreesWithHlt) {
  WedgeOptions felsch;
  felsch.enumeration.strategy = Strategy::Felsch;
  for (const auto& g : {b::symmetric(3), b::quaternion8(), b::dihedral(4)}) {
    EXPECT_EQ(compute_wedge(g, WedgeVariant::Curly).order(), compute_wedge(g, WedgeVariant::Curly, felsch).order());
  }
}

TEST(Wedge, CosetLimitPropagates) {
  WedgeOptions tight;
  tight.enumeration.max_cosets = 2;
  try {
    compute_wedge(b::quaternion8(), WedgeVariant::Curly, tight);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::CosetLimitExceeded);
  }
}

TEST(Wedge, BogomolovKernelInvariantUnderRelabeling) {
  std::mt19937_64 rng(17);
  for (const auto& g : {b::dihedral(4), b::quaternion8(), b::alternating(4), b::symmetric(3)}) {
    const auto expected = bogomolov_kernel(g);
    const auto expected_order = compute_wedge(g, WedgeVariant::Curly).order();
    for (int i = 0; i < 3; ++i) {
      const auto h = relabel(g, testing_support::random_relabeling(g.order(), rng));
      EXPECT_EQ(bogomolov_kernel(h), expected);
      EXPECT_EQ(compute_wedge(h, WedgeVariant::Curly).order(), expected_order);
    }
  }
}

TEST(Wedge, CorpusExactness) {
  for (const auto& e : testing_support::corpus()) {
    const auto& g = e.group;
    const auto w = compute_wedge(g, WedgeVariant::Curly);
    EXPECT_EQ(w.order(), w.kernel.order() * derived_subgroup(g).order()) << e.name;
    if (g.is_abelian()) {
      EXPECT_EQ(w.order(), 1u) << e.name;
    }
  }
}

TEST(Pairing, TrivialPairingHoldsAndGivesTrivialHom) {
  const auto g = b::quaternion8();
  const FiniteGroup l = b::cyclic(3);
  const std::vector<Element> phi(g.order() * g.order(), 0);
  EXPECT_TRUE(check_pairing(g, l, phi));
  const auto w = compute_wedge(g, WedgeVariant::Curly);
  const auto f = pairing_to_hom(g, l, phi, w);
  for (Element x : f.images) EXPECT_EQ(x, 0u);
}

TEST(Pairing, PairImagesGiveIdentityHom) {
  for (const auto& g : {b::symmetric(3), b::dihedral(4), b::quaternion8()}) {
    const auto w = compute_wedge(g, WedgeVariant::Curly);
    const auto& phi = w.realization.gen_images;
    EXPECT_TRUE(check_pairing(g, w.group(), phi));
    EXPECT_EQ(pairing_to_hom(g, w.group(), phi, w), identity_hom(w.group()));
  }
}

TEST(Pairing, CommutatorMapGivesKappa) {
  for (const auto& g : wedge_groups()) {
    const auto phi = kappa_generator_images(g);
    EXPECT_TRUE(check_pairing(g, g, phi)) << g.label();
    const auto w = compute_wedge(g, WedgeVariant::Curly);
    EXPECT_EQ(pairing_to_hom(g, g, phi, w), w.kappa) << g.label();
  }
}

TEST(Pairing, ProductMapOnAbelianGroupFails) {
  const auto g = b::cyclic(4);
  std::vector<Element> phi(16);
  for (Element x = 0; x < 4; ++x) {
    for (Element y = 0; y < 4; ++y) phi[x * 4 + y] = g.mul(x, y);
  }
  EXPECT_FALSE(check_pairing(g, g, phi));
  try {
    pairing_to_hom(g, g, phi, compute_wedge(g, WedgeVariant::Curly));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NotAPairing);
  }
}

TEST(Pairing, WrongWedgeRejected) {
  const auto g = b::symmetric(3);
  const auto phi = kappa_generator_images(g);
  EXPECT_THROW(pairing_to_hom(g, g, phi, compute_wedge(g, WedgeVariant::Exterior)), Error);
  EXPECT_THROW(pairing_to_hom(g, g, phi, compute_wedge(b::cyclic(6), WedgeVariant::Curly)), Error);
}

}  // namespace
