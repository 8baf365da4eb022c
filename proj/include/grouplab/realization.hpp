#pragma once

// Finite models of presented groups and homomorphisms out of them.

#include <optional>
#include <span>
#include <vector>

#include "grouplab/error.hpp"
#include "grouplab/finite_group.hpp"
#include "grouplab/permutation.hpp"
#include "grouplab/presentation.hpp"
#include "grouplab/todd_coxeter.hpp"

namespace grouplab {

/// A presented group as a table group; generator g of the presentation is
/// the element gen_images[g].
struct Realization {
  FiniteGroup group;
  std::vector<Element> gen_images;
};

inline Element evaluate_word(const FiniteGroup& g, std::span<const Element> gen_images, const Word& w) {
  Element x = FiniteGroup::identity;
  for (Letter l : w) {
    const Element y = gen_images[generator_of(l)];
    x = g.mul(x, l > 0 ? y : g.inv(y));
  }
  return x;
}

inline Element evaluate_word(const Realization& r, const Word& w) {
  return evaluate_word(r.group, r.gen_images, w);
}

/// Builds the regular permutation representation of a table closed over the
/// trivial subgroup. Generator g acts by c -> c·g⁻¹ so that composition of
/// the permutations (right to left) matches multiplication in the group.
inline Realization realize(const Presentation& p, const CosetTable& table) {
  if (!table.trivial_subgroup) {
    throw Error(ErrorKind::TableNotClosed, "table enumerates a nontrivial subgroup");
  }
  if (table.num_generators != p.num_generators ||
      table.entries.size() != table.num_cosets * table.width()) {
    throw Error(ErrorKind::TableNotClosed, "table does not match the presentation");
  }
  for (auto e : table.entries) {
    if (e < 0) throw Error(ErrorKind::TableNotClosed, "table has undefined entries");
  }
  const std::size_t n = table.num_cosets;
  std::vector<Permutation> perms;
  perms.reserve(p.num_generators);
  for (std::size_t g = 0; g < p.num_generators; ++g) {
    std::vector<Point> images(n);
    for (std::size_t c = 0; c < n; ++c) images[c] = static_cast<Point>(table.entry(c, 2 * g + 1));
    perms.emplace_back(std::move(images));
  }
  auto closed = close_permutations(perms, n, n, p.label);
  if (closed.group.order() != n) {
    throw Error(ErrorKind::TableNotClosed, "generator action is not regular on the cosets");
  }
  return Realization{std::move(closed.group), std::move(closed.generator_elements)};
}

/// Enumerate and realize in one step.
inline Realization realize(const Presentation& p, const EnumerationOptions& options = {}) {
  return realize(p, todd_coxeter(p, {}, options));
}

/// True when every relator evaluates to the identity of `target` under the
/// generator images.
inline bool kills_relators(const Presentation& p, const FiniteGroup& target,
                           std::span<const Element> images) {
  for (const auto& r : p.relators) {
    if (evaluate_word(target, images, r) != FiniteGroup::identity) return false;
  }
  return true;
}

/// The homomorphism from the realized group to `target` sending generator g
/// to target_images[g], or nullopt when those images do not define one.
/// Checked edge by edge on the Cayley graph of the realization.
inline std::optional<GroupHom> extend_to_hom(const Realization& source, const FiniteGroup& target,
                                             std::span<const Element> target_images) {
  constexpr Element unset = static_cast<Element>(-1);
  const FiniteGroup& g = source.group;
  // Collapse generators with equal images in the source.
  std::vector<Element> edge_of(g.order(), unset);
  std::vector<Element> gens, images;
  for (std::size_t j = 0; j < source.gen_images.size(); ++j) {
    const Element s = source.gen_images[j];
    if (edge_of[s] == unset) {
      edge_of[s] = static_cast<Element>(gens.size());
      gens.push_back(s);
      images.push_back(target_images[j]);
    } else if (images[edge_of[s]] != target_images[j]) {
      return std::nullopt;
    }
  }
  GroupHom f;
  f.images.assign(g.order(), unset);
  f.images[FiniteGroup::identity] = FiniteGroup::identity;
  std::vector<Element> queue{FiniteGroup::identity};
  for (std::size_t i = 0; i < queue.size(); ++i) {
    const Element x = queue[i];
    for (std::size_t j = 0; j < gens.size(); ++j) {
      const Element y = g.mul(x, gens[j]);
      const Element t = target.mul(f.images[x], images[j]);
      if (f.images[y] == unset) {
        f.images[y] = t;
        queue.push_back(y);
      } else if (f.images[y] != t) {
        return std::nullopt;
      }
    }
  }
  if (queue.size() != g.order()) return std::nullopt;  // images do not generate
  return f;
}

}  // namespace grouplab
