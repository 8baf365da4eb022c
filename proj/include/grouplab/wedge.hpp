#pragma once

// The curly-wedge group G⋏G and the exterior square G∧G of a finite group,
// presented on one symbol per ordered pair (m, n) and realized by coset
// enumeration, together with the commutator map κ(m⋏n) = [m, n] and its
// kernel.
//
// Relators, for all m, m', n, n' in G:
//   (m m' ⋏ n)⁻¹ (^m m' ⋏ ^m n) (m ⋏ n)
//   (m ⋏ n n')⁻¹ (m ⋏ n) (^n m ⋏ ^n n')
//   x ⋏ y   for every commuting pair (curly) or every diagonal pair (exterior)

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "grouplab/abelian.hpp"
#include "grouplab/error.hpp"
#include "grouplab/finite_group.hpp"
#include "grouplab/presentation.hpp"
#include "grouplab/realization.hpp"
#include "grouplab/structure.hpp"
#include "grouplab/tietze.hpp"
#include "grouplab/todd_coxeter.hpp"

namespace grouplab {

enum class WedgeVariant { Curly, Exterior };

inline constexpr std::size_t kDefaultCurlyCap = 64;
inline constexpr std::size_t kDefaultExteriorCap = 16;

inline std::string_view to_string(WedgeVariant v) { return v == WedgeVariant::Curly ? "curly" : "exterior"; }

inline std::size_t default_cap(WedgeVariant v) {
  return v == WedgeVariant::Curly ? kDefaultCurlyCap : kDefaultExteriorCap;
}

struct WedgeOptions {
  std::size_t group_cap = 0;  ///< 0 selects the variant default
  EnumerationOptions enumeration;
  /// Eliminate generators killed or identified by short relators before
  /// enumerating. The presented group is unchanged.
  bool reduce_generators = false;
};

struct WedgePresentation {
  Presentation presentation;
  std::size_t base_order = 0;
  // relator counts per family before normalization
  std::size_t raw_r1 = 0;
  std::size_t raw_r2 = 0;
  std::size_t raw_r3 = 0;

  std::size_t pair_generator(Element m, Element n) const { return m * base_order + n; }
};

inline WedgePresentation build_wedge_presentation(const FiniteGroup& g, WedgeVariant variant,
                                                  std::size_t group_cap = 0) {
  const std::size_t cap = group_cap ? group_cap : default_cap(variant);
  if (g.order() > cap) {
    throw Error(ErrorKind::GroupTooLarge, "group of order " + std::to_string(g.order()) +
                                              " exceeds the " + std::string(to_string(variant)) +
                                              " wedge cap " + std::to_string(cap));
  }
  WedgePresentation wp;
  const std::size_t n = g.order();
  wp.base_order = n;
  auto sym = [&](Element a, Element b) { return generator_letter(wp.pair_generator(a, b)); };

  std::vector<Word> raw;
  raw.reserve(2 * n * n * n + n * n);
  for (Element m = 0; m < n; ++m) {
    for (Element m2 = 0; m2 < n; ++m2) {
      for (Element k = 0; k < n; ++k) {
        raw.push_back({-sym(g.mul(m, m2), k), sym(g.conjugate(m, m2), g.conjugate(m, k)), sym(m, k)});
      }
    }
  }
  wp.raw_r1 = raw.size();
  for (Element m = 0; m < n; ++m) {
    for (Element k = 0; k < n; ++k) {
      for (Element k2 = 0; k2 < n; ++k2) {
        raw.push_back({-sym(m, g.mul(k, k2)), sym(m, k), sym(g.conjugate(k, m), g.conjugate(k, k2))});
      }
    }
  }
  wp.raw_r2 = raw.size() - wp.raw_r1;
  for (Element x = 0; x < n; ++x) {
    if (variant == WedgeVariant::Exterior) {
      raw.push_back({sym(x, x)});
      continue;
    }
    for (Element y = 0; y < n; ++y) {
      if (g.commute(x, y)) raw.push_back({sym(x, y)});
    }
  }
  wp.raw_r3 = raw.size() - wp.raw_r1 - wp.raw_r2;

  wp.presentation.num_generators = n * n;
  wp.presentation.relators = normalize_relators(raw);
  wp.presentation.label = g.label() + (variant == WedgeVariant::Curly ? " curly wedge" : " exterior square");
  return wp;
}

struct WedgeRealization {
  WedgeVariant variant = WedgeVariant::Curly;
  FiniteGroup base;
  WedgePresentation wedge_presentation;
  Realization realization;
  GroupHom kappa;  ///< realization.group -> base, image [G, G]
  Subgroup kernel;
  std::size_t cosets_defined = 0;

  const Presentation& presentation() const { return wedge_presentation.presentation; }
  const FiniteGroup& group() const { return realization.group; }
  std::size_t order() const { return realization.group.order(); }
  std::size_t pair_generator(Element m, Element n) const {
    return wedge_presentation.pair_generator(m, n);
  }
  /// The element m⋏n (or m∧n) of the realization.
  Element pair_image(Element m, Element n) const {
    return realization.gen_images[pair_generator(m, n)];
  }
};

/// Commutator images [m, n] of the pair generators, the recipe defining κ.
inline std::vector<Element> kappa_generator_images(const FiniteGroup& g) {
  std::vector<Element> t(g.order() * g.order());
  for (Element m = 0; m < g.order(); ++m) {
    for (Element n = 0; n < g.order(); ++n) t[m * g.order() + n] = g.commutator(m, n);
  }
  return t;
}

inline WedgeRealization compute_wedge(const FiniteGroup& g, WedgeVariant variant,
                                      const WedgeOptions& options = {}) {
  WedgeRealization w;
  w.variant = variant;
  w.base = g;
  w.wedge_presentation = build_wedge_presentation(g, variant, options.group_cap);
  const Presentation& p = w.wedge_presentation.presentation;

  if (options.reduce_generators) {
    auto elim = eliminate_generators(p);
    auto table = todd_coxeter(elim.reduced, {}, options.enumeration);
    w.cosets_defined = table.cosets_defined;
    Realization reduced = realize(elim.reduced, table);
    w.realization.gen_images.reserve(p.num_generators);
    for (const auto& word : elim.substitution) {
      w.realization.gen_images.push_back(evaluate_word(reduced, word));
    }
    w.realization.group = std::move(reduced.group);
  } else {
    auto table = todd_coxeter(p, {}, options.enumeration);
    w.cosets_defined = table.cosets_defined;
    w.realization = realize(p, table);
  }
  w.realization.group.set_label(p.label);

  const auto commutators = kappa_generator_images(g);
  if (!kills_relators(p, g, commutators)) {
    throw Error(ErrorKind::KappaRelatorViolation, "a wedge relator does not map to 1 under [m, n]");
  }
  auto kappa = extend_to_hom(w.realization, g, commutators);
  if (!kappa) throw Error(ErrorKind::KappaRelatorViolation, "commutator images do not define κ");
  w.kappa = std::move(*kappa);
  w.kernel = kernel_of(w.kappa);
  return w;
}

/// Abelian invariants of ker κ on the curly wedge, i.e. of B̃₀(G).
inline AbelianInvariants kernel_invariants(const WedgeRealization& w) {
  return abelian_invariants(w.realization.group, w.kernel, true);
}

inline AbelianInvariants bogomolov_kernel(const FiniteGroup& g, const WedgeOptions& options = {}) {
  return kernel_invariants(compute_wedge(g, WedgeVariant::Curly, options));
}

/// |ker κ| on the exterior square, the order of the Schur multiplier.
inline std::size_t multiplier_order(const FiniteGroup& g, const WedgeOptions& options = {}) {
  return compute_wedge(g, WedgeVariant::Exterior, options).kernel.order();
}

/// Exhaustive check of the three pairing axioms for phi : G×G -> L, stored
/// row-major as phi[m * |G| + n].
inline bool check_pairing(const FiniteGroup& g, const FiniteGroup& l, std::span<const Element> phi) {
  const std::size_t n = g.order();
  if (phi.size() != n * n) return false;
  auto at = [&](Element a, Element b) { return phi[a * n + b]; };
  for (Element m = 0; m < n; ++m) {
    for (Element m2 = 0; m2 < n; ++m2) {
      for (Element k = 0; k < n; ++k) {
        if (at(g.mul(m, m2), k) != l.mul(at(g.conjugate(m, m2), g.conjugate(m, k)), at(m, k))) return false;
        // second axiom with (m, n, n') = (m, m2, k)
        if (at(m, g.mul(m2, k)) != l.mul(at(m, m2), at(g.conjugate(m2, m), g.conjugate(m2, k)))) return false;
      }
    }
  }
  for (Element x = 0; x < n; ++x) {
    for (Element y = 0; y < n; ++y) {
      if (g.commute(x, y) && at(x, y) != FiniteGroup::identity) return false;
    }
  }
  return true;
}

/// The homomorphism G⋏G -> L with m⋏n -> phi(m, n).
inline GroupHom pairing_to_hom(const FiniteGroup& g, const FiniteGroup& l, std::span<const Element> phi,
                               const WedgeRealization& wedge) {
  if (wedge.variant != WedgeVariant::Curly || !(wedge.base == g)) {
    throw Error(ErrorKind::InvalidArgument, "pairing_to_hom needs the curly wedge of the same group");
  }
  if (!check_pairing(g, l, phi)) throw Error(ErrorKind::NotAPairing, "phi violates a pairing axiom");
  if (!kills_relators(wedge.presentation(), l, phi)) {
    throw Error(ErrorKind::RelatorNotKilled, "pairing images do not kill a wedge relator");
  }
  auto f = extend_to_hom(wedge.realization, l, phi);
  if (!f) throw Error(ErrorKind::RelatorNotKilled, "pairing images do not define a homomorphism");
  return *f;
}

}  // namespace grouplab
