#pragma once

// Isoclinism of finite groups: witnesses (alpha, beta) made of an isomorphism
// of central quotients and an isomorphism of derived subgroups compatible with
// the commutator map, and the isomorphism between curly wedges they induce.

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <random>
#include <tuple>
#include <vector>

#include "grouplab/error.hpp"
#include "grouplab/finite_group.hpp"
#include "grouplab/isomorphism.hpp"
#include "grouplab/structure.hpp"
#include "grouplab/wedge.hpp"

namespace grouplab {

/// Center, central quotient and derived subgroup of one group.
struct CentralData {
  FiniteGroup group;
  Subgroup center;
  Quotient quotient;  ///< G/Z(G), section = smallest element of each coset
  SubgroupAsGroup derived;
};

inline CentralData central_data(const FiniteGroup& g) {
  CentralData d{g, center(g), {}, {}};
  d.quotient = quotient(g, d.center);
  d.quotient.group.set_label(g.label() + "/Z");
  d.derived = subgroup_as_group(g, derived_subgroup(g));
  d.derived.group.set_label(g.label() + "'");
  return d;
}

struct IsoclinismWitness {
  CentralData first;
  CentralData second;
  GroupHom alpha;  ///< first.quotient.group -> second.quotient.group
  GroupHom beta;   ///< first.derived.group -> second.derived.group

  /// beta on parent elements of the first derived subgroup.
  Element beta_of(Element c) const { return second.derived.embedding[beta(first.derived.index_of(c))]; }

  /// The section representative of alpha(xZ) in the second group.
  Element partner(Element x) const {
    return second.quotient.section[alpha(first.quotient.projection(x))];
  }
};

namespace detail {

/// beta forced by alpha on commutators and extended along the derived
/// subgroup, or nullopt if it is not a well-defined bijective homomorphism.
inline std::optional<GroupHom> derive_beta(const CentralData& a, const CentralData& b, const GroupHom& alpha) {
  const FiniteGroup& g1 = a.group;
  const FiniteGroup& g2 = b.group;
  const auto& s1 = a.quotient.section;
  const auto& s2 = b.quotient.section;
  const std::size_t nd = a.derived.group.order();
  if (nd != b.derived.group.order()) return std::nullopt;

  // [a z, b w] = [a, b] for central z, w, so coset pairs determine everything.
  std::vector<Element> on_commutators(nd, kUnmapped);
  std::vector<Element> generators;
  for (Element u = 0; u < s1.size(); ++u) {
    for (Element v = 0; v < s1.size(); ++v) {
      const Element c1 = a.derived.index_of(g1.commutator(s1[u], s1[v]));
      const Element c2 = b.derived.index_of(g2.commutator(s2[alpha(u)], s2[alpha(v)]));
      if (on_commutators[c1] == kUnmapped) {
        on_commutators[c1] = c2;
        generators.push_back(c1);
      } else if (on_commutators[c1] != c2) {
        return std::nullopt;
      }
    }
  }
  std::vector<Element> images;
  for (Element c : generators) images.push_back(on_commutators[c]);
  std::vector<Element> map;
  if (!extend_injective(a.derived.group, b.derived.group, generators, images, map)) return std::nullopt;
  if (std::find(map.begin(), map.end(), kUnmapped) != map.end()) return std::nullopt;
  return GroupHom{std::move(map)};
}

inline bool quick_reject(const CentralData& a, const CentralData& b) {
  return a.quotient.group.order() != b.quotient.group.order() ||
         a.derived.group.order() != b.derived.group.order() ||
         a.group.order() / a.center.order() != b.group.order() / b.center.order();
}

}  // namespace detail

/// First witness in the search order over isomorphisms of central quotients.
inline std::optional<IsoclinismWitness> are_isoclinic(const CentralData& a, const CentralData& b) {
  if (detail::quick_reject(a, b)) return std::nullopt;
  std::optional<IsoclinismWitness> found;
  for_each_isomorphism(a.quotient.group, b.quotient.group, [&](const GroupHom& alpha) {
    auto beta = detail::derive_beta(a, b, alpha);
    if (!beta) return true;
    found = IsoclinismWitness{a, b, alpha, std::move(*beta)};
    return false;
  });
  return found;
}

inline std::optional<IsoclinismWitness> are_isoclinic(const FiniteGroup& g1, const FiniteGroup& g2) {
  return are_isoclinic(central_data(g1), central_data(g2));
}

/// Exhaustive check: alpha and beta are isomorphisms of the right groups and
/// beta([a1, b1]) = [a2, b2] for every a1, b1 and every pair of
/// representatives a2, b2 of alpha(a1 Z1), alpha(b1 Z2).
inline bool verify_witness(const IsoclinismWitness& w) {
  const auto& [a, b] = std::tie(w.first, w.second);
  const FiniteGroup& g1 = a.group;
  const FiniteGroup& g2 = b.group;
  const FiniteGroup& q1 = a.quotient.group;
  const FiniteGroup& q2 = b.quotient.group;
  const FiniteGroup& d1 = a.derived.group;
  const FiniteGroup& d2 = b.derived.group;
  if (w.alpha.images.size() != q1.order() || w.beta.images.size() != d1.order()) return false;
  if (!is_homomorphism(q1, q2, w.alpha) || !is_bijective(w.alpha, q2.order())) return false;
  if (!is_homomorphism(d1, d2, w.beta) || !is_bijective(w.beta, d2.order())) return false;
  for (Element x = 0; x < g1.order(); ++x) {
    for (Element y = 0; y < g1.order(); ++y) {
      const Element expected = w.beta_of(g1.commutator(x, y));
      const Element xs = w.partner(x), ys = w.partner(y);
      for (Element z : b.center.members) {
        for (Element t : b.center.members) {
          if (g2.commutator(g2.mul(xs, z), g2.mul(ys, t)) != expected) return false;
        }
      }
    }
  }
  return true;
}

inline IsoclinismWitness identity_witness(const FiniteGroup& g) {
  auto d = central_data(g);
  GroupHom alpha = identity_hom(d.quotient.group);
  GroupHom beta = identity_hom(d.derived.group);
  return IsoclinismWitness{d, d, std::move(alpha), std::move(beta)};
}

/// The witness for (G2, G1) made of the inverse maps.
inline IsoclinismWitness invert(const IsoclinismWitness& w) {
  return IsoclinismWitness{w.second, w.first, inverse_of(w.alpha), inverse_of(w.beta)};
}

/// The witness for (G1, G3) from witnesses for (G1, G2) and (G2, G3).
inline IsoclinismWitness compose(const IsoclinismWitness& first, const IsoclinismWitness& second) {
  if (!(first.second.group == second.first.group)) {
    throw Error(ErrorKind::InvalidArgument, "witnesses do not share the middle group");
  }
  return IsoclinismWitness{first.first, second.second, grouplab::compose(second.alpha, first.alpha),
                           grouplab::compose(second.beta, first.beta)};
}

struct GammaMap {
  GroupHom gamma;        ///< first curly wedge -> second curly wedge
  SubgroupAsGroup kernel1;
  SubgroupAsGroup kernel2;
  GroupHom gamma_tilde;  ///< kernel1.group -> kernel2.group
};

namespace detail {

/// gamma from the pairing (a1, b1) -> a2 ⋏ b2 with a2, b2 taken from `section`
/// (one representative per coset of Z2). No witness validation here.
inline GammaMap induced_gamma(const IsoclinismWitness& w, const WedgeRealization& wedge1,
                              const WedgeRealization& wedge2, std::span<const Element> section) {
  const FiniteGroup& g1 = w.first.group;
  const std::size_t n = g1.order();
  std::vector<Element> phi(n * n);
  for (Element a = 0; a < n; ++a) {
    const Element a2 = section[w.alpha(w.first.quotient.projection(a))];
    for (Element b = 0; b < n; ++b) {
      const Element b2 = section[w.alpha(w.first.quotient.projection(b))];
      phi[a * n + b] = wedge2.pair_image(a2, b2);
    }
  }
  if (!check_pairing(g1, wedge2.group(), phi)) {
    throw Error(ErrorKind::PairingAxiomFailed, "the induced map " + g1.label() + " x " + g1.label() +
                                                   " -> " + wedge2.group().label() + " is not a pairing");
  }
  if (!kills_relators(wedge1.presentation(), wedge2.group(), phi)) {
    throw Error(ErrorKind::RelatorNotKilled, "the induced pairing does not kill a wedge relator");
  }
  auto gamma = extend_to_hom(wedge1.realization, wedge2.group(), phi);
  if (!gamma) throw Error(ErrorKind::RelatorNotKilled, "the induced pairing does not define a homomorphism");

  GammaMap out;
  out.gamma = std::move(*gamma);
  if (wedge1.order() != wedge2.order() || !is_bijective(out.gamma, wedge2.order())) {
    throw Error(ErrorKind::GammaNotBijective, "gamma is not a bijection");
  }
  out.kernel1 = subgroup_as_group(wedge1.group(), wedge1.kernel);
  out.kernel2 = subgroup_as_group(wedge2.group(), wedge2.kernel);
  if (wedge1.kernel.order() != wedge2.kernel.order()) {
    throw Error(ErrorKind::GammaNotBijective, "kernels have different orders");
  }
  out.gamma_tilde.images.reserve(wedge1.kernel.order());
  for (Element x : wedge1.kernel.members) {
    const Element y = out.gamma(x);
    if (!wedge2.kernel.contains(y)) {
      throw Error(ErrorKind::GammaNotBijective, "gamma does not map kernel into kernel");
    }
    out.gamma_tilde.images.push_back(out.kernel2.index_of(y));
  }
  if (!is_bijective(out.gamma_tilde, wedge2.kernel.order())) {
    throw Error(ErrorKind::GammaNotBijective, "the restriction of gamma to the kernels is not a bijection");
  }
  for (Element x = 0; x < wedge1.order(); ++x) {
    if (w.beta_of(wedge1.kappa(x)) != wedge2.kappa(out.gamma(x))) {
      throw Error(ErrorKind::DiagramNotCommutative, "beta . kappa1 != kappa2 . gamma at element " +
                                                        std::to_string(x));
    }
  }
  return out;
}

inline void require_curly_over(const WedgeRealization& wedge, const FiniteGroup& g) {
  if (wedge.variant != WedgeVariant::Curly || !(wedge.base == g)) {
    throw Error(ErrorKind::InvalidArgument, "expected the curly wedge of " + g.label());
  }
}

}  // namespace detail

/// The isomorphism G1⋏G1 -> G2⋏G2 with a1⋏b1 -> a2⋏b2, its restriction to the
/// kernels of the commutator maps, and the check that it lies over beta.
inline GammaMap build_gamma(const IsoclinismWitness& w, const WedgeRealization& wedge1,
                            const WedgeRealization& wedge2) {
  if (!verify_witness(w)) throw Error(ErrorKind::WitnessInvalid, "witness fails verification");
  detail::require_curly_over(wedge1, w.first.group);
  detail::require_curly_over(wedge2, w.second.group);
  return detail::induced_gamma(w, wedge1, wedge2, w.second.quotient.section);
}

/// Rebuilds gamma `trials` times with every section representative of the
/// second group moved by a random central element and compares the maps.
inline bool well_definedness_fuzz(const IsoclinismWitness& w, const WedgeRealization& wedge1,
                                  const WedgeRealization& wedge2, std::size_t trials,
                                  std::uint64_t seed = 0x5eed) {
  const GammaMap reference = build_gamma(w, wedge1, wedge2);
  const FiniteGroup& g2 = w.second.group;
  const auto& z = w.second.center.members;
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> pick(0, z.size() - 1);
  std::vector<Element> section(w.second.quotient.section.size());
  for (std::size_t t = 0; t < trials; ++t) {
    for (std::size_t c = 0; c < section.size(); ++c) {
      section[c] = g2.mul(w.second.quotient.section[c], z[pick(rng)]);
    }
    try {
      if (!(detail::induced_gamma(w, wedge1, wedge2, section).gamma == reference.gamma)) return false;
    } catch (const Error&) {
      return false;
    }
  }
  return true;
}

/// Cheap isoclinism invariants; groups with different keys are never compared.
struct FamilyKey {
  std::size_t central_quotient_order = 0;
  std::size_t derived_order = 0;
  std::vector<std::size_t> quotient_profile;
  std::vector<std::size_t> derived_profile;

  friend auto operator<=>(const FamilyKey&, const FamilyKey&) = default;
};

inline FamilyKey family_key(const CentralData& d) {
  return FamilyKey{d.quotient.group.order(), d.derived.group.order(), element_order_profile(d.quotient.group),
                   element_order_profile(d.derived.group)};
}

/// Isoclinism classes as sorted index lists, ordered by smallest member.
inline std::vector<std::vector<std::size_t>> partition_into_families(const std::vector<CentralData>& data) {
  const std::size_t n = data.size();
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  std::vector<FamilyKey> keys;
  keys.reserve(n);
  for (const auto& d : data) keys.push_back(family_key(d));
  // one representative per family is enough since isoclinism is transitive
  std::map<FamilyKey, std::vector<std::size_t>> heads;
  for (std::size_t i = 0; i < n; ++i) {
    auto& bucket = heads[keys[i]];
    bool joined = false;
    for (std::size_t h : bucket) {
      if (are_isoclinic(data[h], data[i])) {
        parent[find(i)] = find(h);
        joined = true;
        break;
      }
    }
    if (!joined) bucket.push_back(i);
  }
  std::map<std::size_t, std::vector<std::size_t>> by_root;
  for (std::size_t i = 0; i < n; ++i) by_root[find(i)].push_back(i);
  std::vector<std::vector<std::size_t>> families;
  for (auto& [root, members] : by_root) families.push_back(std::move(members));
  std::sort(families.begin(), families.end());
  return families;
}

inline std::vector<std::vector<std::size_t>> partition_into_families(const std::vector<FiniteGroup>& groups) {
  std::vector<CentralData> data;
  data.reserve(groups.size());
  for (const auto& g : groups) data.push_back(central_data(g));
  return partition_into_families(data);
}

}  // namespace grouplab
