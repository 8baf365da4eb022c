#include <gtest/gtest.h>

#include "grouplab/builtin.hpp"
#include "grouplab/error.hpp"
#include "grouplab/isoclinism.hpp"
#include "grouplab/serialization.hpp"
#include "support.hpp"

namespace {

using namespace grouplab;
namespace b = grouplab::builtin;

// Compatibility straight from the definition: for every a1, b1 and every a2,
// b2 whose cosets alpha assigns to those of a1, b1, beta([a1,b1]) = [a2,b2].
bool brute_compatible(const IsoclinismWitness& w) {
  const auto& g1 = w.first.group;
  const auto& g2 = w.second.group;
  for (Element a1 = 0; a1 < g1.order(); ++a1) {
    for (Element b1 = 0; b1 < g1.order(); ++b1) {
      const Element qa = w.alpha(w.first.quotient.projection(a1));
      const Element qb = w.alpha(w.first.quotient.projection(b1));
      const Element target = w.beta_of(g1.commutator(a1, b1));
      for (Element a2 = 0; a2 < g2.order(); ++a2) {
        if (w.second.quotient.projection(a2) != qa) continue;
        for (Element b2 = 0; b2 < g2.order(); ++b2) {
          if (w.second.quotient.projection(b2) != qb) continue;
          if (g2.commutator(a2, b2) != target) return false;
        }
      }
    }
  }
  return true;
}

bool is_witness_shape(const IsoclinismWitness& w) {
  return is_homomorphism(w.first.quotient.group, w.second.quotient.group, w.alpha) &&
         is_bijective(w.alpha, w.second.quotient.group.order()) &&
         is_homomorphism(w.first.derived.group, w.second.derived.group, w.beta) &&
         is_bijective(w.beta, w.second.derived.group.order());
}

TEST(CentralData, OrdersMatchBruteForce) {
  for (const auto& g : testing_support::small_groups()) {
    const auto d = central_data(g);
    EXPECT_EQ(d.center.order(), testing_support::brute_center(g).size());
    EXPECT_EQ(d.derived.group.order(), testing_support::brute_derived(g).size());
    EXPECT_EQ(d.quotient.group.order() * d.center.order(), g.order());
  }
}

TEST(AreIsoclinic, AbelianGroupsAreIsoclinic) {
  const auto w = are_isoclinic(b::cyclic(4), b::elementary(2, 2));
  ASSERT_TRUE(w);
  EXPECT_EQ(w->first.quotient.group.order(), 1u);
  EXPECT_EQ(w->first.derived.group.order(), 1u);
  EXPECT_TRUE(verify_witness(*w));
}

TEST(AreIsoclinic, D8AndQ8) {
  const auto w = are_isoclinic(b::dihedral(4), b::quaternion8());
  ASSERT_TRUE(w);
  EXPECT_TRUE(verify_witness(*w));
  EXPECT_TRUE(is_witness_shape(*w));
  EXPECT_TRUE(brute_compatible(*w));
}

TEST(AreIsoclinic, S3AndC6AreNot) {
  EXPECT_FALSE(are_isoclinic(b::symmetric(3), b::cyclic(6)));
  EXPECT_FALSE(are_isoclinic(b::symmetric(3), b::dihedral(4)));
  EXPECT_FALSE(are_isoclinic(b::alternating(4), b::symmetric(3)));
}

TEST(AreIsoclinic, GroupAndProductWithC2) {
  for (const auto& e : testing_support::corpus()) {
    const auto w = are_isoclinic(e.group, b::direct_product(e.group, b::cyclic(2)));
    ASSERT_TRUE(w) << e.name;
    EXPECT_TRUE(verify_witness(*w)) << e.name;
  }
}

TEST(AreIsoclinic, FoundWitnessesPassTheDefinition) {
  const std::pair<FiniteGroup, FiniteGroup> pairs[] = {
      {b::symmetric(3), b::direct_product(b::symmetric(3), b::cyclic(2))},
      {b::dihedral(4), b::quaternion8()},
      {b::extraspecial(3, b::Exponent::P), b::extraspecial(3, b::Exponent::P2)},
      {b::dihedral(3), b::dihedral(6)},
  };
  for (const auto& [g1, g2] : pairs) {
    const auto w = are_isoclinic(g1, g2);
    ASSERT_TRUE(w) << g1.label() << " " << g2.label();
    EXPECT_TRUE(is_witness_shape(*w));
    EXPECT_TRUE(brute_compatible(*w));
  }
}

TEST(AreIsoclinic, InvariantUnderRelabeling) {
  std::mt19937_64 rng(41);
  const auto g = b::dihedral(4);
  for (int i = 0; i < 5; ++i) {
    const auto h = relabel(b::quaternion8(), testing_support::random_relabeling(8, rng));
    const auto w = are_isoclinic(g, h);
    ASSERT_TRUE(w);
    EXPECT_TRUE(brute_compatible(*w));
  }
}

TEST(VerifyWitness, IdentityWitness) {
  for (const auto& g : testing_support::small_groups()) EXPECT_TRUE(verify_witness(identity_witness(g))) << g.label();
}

TEST(VerifyWitness, InvertingBetaOnS3Fails) {
  auto w = identity_witness(b::symmetric(3));
  ASSERT_EQ(w.first.derived.group.order(), 3u);
  for (Element x = 0; x < 3; ++x) w.beta.images[x] = w.first.derived.group.inv(x);
  EXPECT_TRUE(is_witness_shape(w));
  EXPECT_FALSE(verify_witness(w));
  EXPECT_FALSE(brute_compatible(w));
}

TEST(VerifyWitness, AgreesWithDefinitionOnAllAutomorphismPairs) {
  // every (alpha, beta) pair of automorphisms for D8 against itself
  const auto d = central_data(b::dihedral(4));
  std::vector<GroupHom> alphas, betas;
  for_each_isomorphism(d.quotient.group, d.quotient.group, [&](const GroupHom& f) {
    alphas.push_back(f);
    return true;
  });
  for_each_isomorphism(d.derived.group, d.derived.group, [&](const GroupHom& f) {
    betas.push_back(f);
    return true;
  });
  EXPECT_EQ(alphas.size(), 6u);
  std::size_t valid = 0;
  for (const auto& alpha : alphas) {
    for (const auto& beta : betas) {
      const IsoclinismWitness w{d, d, alpha, beta};
      EXPECT_EQ(verify_witness(w), brute_compatible(w));
      valid += verify_witness(w);
    }
  }
  EXPECT_EQ(valid, alphas.size());
}

TEST(VerifyWitness, RejectsNonBijectiveAlpha) {
  auto w = *are_isoclinic(b::dihedral(4), b::quaternion8());
  w.alpha.images.assign(w.alpha.images.size(), 0);
  EXPECT_FALSE(verify_witness(w));
  EXPECT_THROW(build_gamma(w, compute_wedge(w.first.group, WedgeVariant::Curly),
                           compute_wedge(w.second.group, WedgeVariant::Curly)),
               Error);
}

TEST(Equivalence, InvertAndCompose) {
  const auto g1 = b::dihedral(4), g2 = b::quaternion8();
  const auto g3 = b::direct_product(b::dihedral(4), b::cyclic(2));
  const auto w12 = *are_isoclinic(g1, g2);
  const auto w23 = *are_isoclinic(g2, g3);
  EXPECT_TRUE(verify_witness(invert(w12)));
  EXPECT_TRUE(brute_compatible(invert(w12)));
  const auto w13 = compose(w12, w23);
  EXPECT_TRUE(verify_witness(w13));
  EXPECT_TRUE(brute_compatible(w13));
  EXPECT_THROW(compose(w12, w12), Error);
}

TEST(Gamma, IdentityWitnessGivesIdentity) {
  for (const auto& g : {b::symmetric(3), b::dihedral(4), b::alternating(4)}) {
    const auto w = compute_wedge(g, WedgeVariant::Curly);
    const auto gm = build_gamma(identity_witness(g), w, w);
    EXPECT_EQ(gm.gamma, identity_hom(w.group()));
    EXPECT_EQ(gm.gamma_tilde, identity_hom(gm.kernel1.group));
  }
}

TEST(Gamma, D8ToQ8) {
  const auto g1 = b::dihedral(4), g2 = b::quaternion8();
  const auto w = *are_isoclinic(g1, g2);
  const auto w1 = compute_wedge(g1, WedgeVariant::Curly), w2 = compute_wedge(g2, WedgeVariant::Curly);
  const auto gm = build_gamma(w, w1, w2);
  EXPECT_EQ(w1.order(), 2u);
  EXPECT_EQ(w2.order(), 2u);
  EXPECT_TRUE(is_bijective(gm.gamma, 2));
  EXPECT_EQ(gm.kernel1.group.order(), 1u);
  EXPECT_EQ(gm.kernel2.group.order(), 1u);
}

TEST(Gamma, S3ToS3xC2) {
  const auto g1 = b::symmetric(3), g2 = b::direct_product(b::symmetric(3), b::cyclic(2));
  const auto w = *are_isoclinic(g1, g2);
  const auto w1 = compute_wedge(g1, WedgeVariant::Curly), w2 = compute_wedge(g2, WedgeVariant::Curly);
  const auto gm = build_gamma(w, w1, w2);
  EXPECT_EQ(w2.order(), 3u);
  EXPECT_TRUE(is_bijective(gm.gamma, 3));
  EXPECT_EQ(gm.gamma_tilde.images.size(), 1u);
}

TEST(Gamma, DiagramCommutesAndGammaIsHomomorphism) {
  for (const auto& e1 : testing_support::corpus()) {
    if (e1.group.is_abelian() || e1.group.order() > 16) continue;
    const auto g2 = b::direct_product(e1.group, b::cyclic(2));
    const auto w = *are_isoclinic(e1.group, g2);
    const auto w1 = compute_wedge(e1.group, WedgeVariant::Curly), w2 = compute_wedge(g2, WedgeVariant::Curly);
    const auto gm = build_gamma(w, w1, w2);
    EXPECT_TRUE(is_homomorphism(w1.group(), w2.group(), gm.gamma)) << e1.name;
    for (Element x = 0; x < w1.order(); ++x) {
      EXPECT_EQ(w.beta_of(w1.kappa(x)), w2.kappa(gm.gamma(x))) << e1.name;
    }
    for (std::size_t i = 0; i < gm.kernel1.group.order(); ++i) {
      EXPECT_EQ(gm.kernel2.embedding[gm.gamma_tilde(static_cast<Element>(i))],
                gm.gamma(gm.kernel1.embedding[i]));
    }
    EXPECT_EQ(kernel_invariants(w1), kernel_invariants(w2)) << e1.name;
  }
}

TEST(Gamma, InverseWitnessGivesInverseMap) {
  const auto g1 = b::dihedral(4), g2 = b::quaternion8();
  const auto w = *are_isoclinic(g1, g2);
  const auto w1 = compute_wedge(g1, WedgeVariant::Curly), w2 = compute_wedge(g2, WedgeVariant::Curly);
  const auto forward = build_gamma(w, w1, w2);
  const auto back = build_gamma(invert(w), w2, w1);
  EXPECT_EQ(compose(back.gamma, forward.gamma), identity_hom(w1.group()));
}

TEST(Gamma, RequiresCurlyWedgesOverTheRightGroups) {
  const auto g = b::symmetric(3);
  const auto id = identity_witness(g);
  const auto curly = compute_wedge(g, WedgeVariant::Curly);
  const auto ext = compute_wedge(g, WedgeVariant::Exterior);
  EXPECT_THROW(build_gamma(id, curly, ext), Error);
  EXPECT_THROW(build_gamma(id, compute_wedge(b::dihedral(4), WedgeVariant::Curly), curly), Error);
}

TEST(Fuzz, D8Q8ThousandTrials) {
  const auto g1 = b::dihedral(4), g2 = b::quaternion8();
  const auto w = *are_isoclinic(g1, g2);
  EXPECT_TRUE(well_definedness_fuzz(w, compute_wedge(g1, WedgeVariant::Curly),
                                    compute_wedge(g2, WedgeVariant::Curly), 1000));
}

TEST(Fuzz, AbelianPairIsVacuous) {
  const auto g1 = b::cyclic(4), g2 = b::elementary(2, 2);
  const auto w = *are_isoclinic(g1, g2);
  EXPECT_TRUE(well_definedness_fuzz(w, compute_wedge(g1, WedgeVariant::Curly),
                                    compute_wedge(g2, WedgeVariant::Curly), 100));
}

TEST(Fuzz, ExtraspecialPair) {
  const auto g1 = b::extraspecial(3, b::Exponent::P), g2 = b::extraspecial(3, b::Exponent::P2);
  const auto w = *are_isoclinic(g1, g2);
  EXPECT_TRUE(well_definedness_fuzz(w, compute_wedge(g1, WedgeVariant::Curly),
                                    compute_wedge(g2, WedgeVariant::Curly), 100, 99));
}

TEST(Families, AbelianCatalogIsOneFamily) {
  const auto f = partition_into_families(
      std::vector<FiniteGroup>{b::cyclic(2), b::cyclic(6), b::elementary(2, 3), b::cyclic(1)});
  ASSERT_EQ(f.size(), 1u);
  EXPECT_EQ(f[0], (std::vector<std::size_t>{0, 1, 2, 3}));
}

TEST(Families, D8Q8C8) {
  const auto f = partition_into_families(std::vector<FiniteGroup>{b::dihedral(4), b::quaternion8(), b::cyclic(8)});
  ASSERT_EQ(f.size(), 2u);
  EXPECT_EQ(f[0], (std::vector<std::size_t>{0, 1}));
  EXPECT_EQ(f[1], (std::vector<std::size_t>{2}));
}

TEST(Families, EmptyCatalog) { EXPECT_TRUE(partition_into_families(std::vector<FiniteGroup>{}).empty()); }

TEST(Families, AgreeWithPairwiseSearch) {
  const std::vector<FiniteGroup> groups = {
      b::symmetric(3), b::cyclic(4), b::dihedral(4), b::direct_product(b::symmetric(3), b::cyclic(2)),
      b::quaternion8(), b::alternating(4), b::dihedral(3), b::elementary(2, 2)};
  const auto families = partition_into_families(groups);
  std::vector<std::size_t> family_of(groups.size());
  for (std::size_t k = 0; k < families.size(); ++k) {
    for (auto i : families[k]) family_of[i] = k;
  }
  for (std::size_t i = 0; i < groups.size(); ++i) {
    for (std::size_t j = 0; j < groups.size(); ++j) {
      EXPECT_EQ(family_of[i] == family_of[j], are_isoclinic(groups[i], groups[j]).has_value()) << i << " " << j;
    }
  }
}

TEST(WitnessJson, RoundTrip) {
  const auto g1 = b::dihedral(4), g2 = b::quaternion8();
  const auto w = *are_isoclinic(g1, g2);
  const auto j = to_json(w);
  ASSERT_TRUE(j.contains("alpha"));
  ASSERT_TRUE(j.contains("beta"));
  const auto back = witness_from_json(Json::parse(j.dump()), g1, g2);
  EXPECT_EQ(back.alpha, w.alpha);
  EXPECT_EQ(back.beta, w.beta);
  EXPECT_TRUE(verify_witness(back));
}

TEST(WitnessJson, TamperedWitnessIsRejected) {
  const auto g = b::symmetric(3);
  auto j = to_json(identity_witness(g));
  j["beta"] = Json::array({0, 2, 1});
  bool rejected = false;
  try {
    rejected = !verify_witness(witness_from_json(j, g, g));
  } catch (const Error&) {
    rejected = true;
  }
  EXPECT_TRUE(rejected);
}

}  // namespace
