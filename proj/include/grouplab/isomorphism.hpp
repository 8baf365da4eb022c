#pragma once

// Backtracking isomorphism search between table groups.

#include <algorithm>
#include <functional>
#include <optional>
#include <vector>

#include "grouplab/finite_group.hpp"
#include "grouplab/structure.hpp"

namespace grouplab {

/// Greedy generating sequence: repeatedly add the element (smallest index
/// on ties) that enlarges the generated subgroup the most.
inline std::vector<Element> greedy_generators(const FiniteGroup& g) {
  std::vector<Element> gens;
  Subgroup current = trivial_subgroup();
  while (current.order() < g.order()) {
    Element best = 0;
    std::size_t best_size = 0;
    for (Element x = 0; x < g.order(); ++x) {
      if (current.contains(x)) continue;
      auto trial = gens;
      trial.push_back(x);
      const auto size = generate_subgroup(g, trial).order();
      if (size > best_size) {
        best = x;
        best_size = size;
      }
    }
    gens.push_back(best);
    current = generate_subgroup(g, gens);
  }
  return gens;
}

namespace detail {

constexpr Element kUnmapped = static_cast<Element>(-1);

/// Extends generator images to the subgroup they generate, checking that
/// the map stays a well-defined injective homomorphism. On success `map`
/// holds the images of every element of <gens>.
inline bool extend_injective(const FiniteGroup& source, const FiniteGroup& target,
                             const std::vector<Element>& gens,
                             const std::vector<Element>& images, std::vector<Element>& map) {
  map.assign(source.order(), kUnmapped);
  std::vector<char> used(target.order());
  map[FiniteGroup::identity] = FiniteGroup::identity;
  used[FiniteGroup::identity] = 1;
  std::vector<Element> queue{FiniteGroup::identity};
  for (std::size_t i = 0; i < queue.size(); ++i) {
    const Element x = queue[i];
    for (std::size_t j = 0; j < gens.size(); ++j) {
      const Element y = source.mul(x, gens[j]);
      const Element t = target.mul(map[x], images[j]);
      if (map[y] == kUnmapped) {
        if (used[t]) return false;
        used[t] = 1;
        map[y] = t;
        queue.push_back(y);
      } else if (map[y] != t) {
        return false;
      }
    }
  }
  return true;
}

}  // namespace detail

/// Calls `visit` with every isomorphism source -> target in lexicographic
/// order of generator images, until `visit` returns false.
inline void for_each_isomorphism(const FiniteGroup& source, const FiniteGroup& target,
                                 const std::function<bool(const GroupHom&)>& visit) {
  if (source.order() != target.order()) return;
  if (element_order_profile(source) != element_order_profile(target)) return;

  const auto gens = greedy_generators(source);
  std::vector<std::size_t> gen_orders;
  for (Element x : gens) gen_orders.push_back(source.element_order(x));
  std::vector<std::size_t> target_orders(target.order());
  for (Element y = 0; y < target.order(); ++y) target_orders[y] = target.element_order(y);

  std::vector<Element> images;
  std::vector<Element> map;
  bool stop = false;
  std::function<void(std::size_t)> search = [&](std::size_t depth) {
    if (stop) return;
    if (depth == gens.size()) {
      detail::extend_injective(source, target, gens, images, map);
      if (!visit(GroupHom{map})) stop = true;
      return;
    }
    for (Element y = 0; y < target.order() && !stop; ++y) {
      if (target_orders[y] != gen_orders[depth]) continue;
      images.push_back(y);
      std::vector<Element> prefix_gens(gens.begin(), gens.begin() + depth + 1);
      if (detail::extend_injective(source, target, prefix_gens, images, map)) search(depth + 1);
      images.pop_back();
    }
  };
  search(0);
}

/// First isomorphism in search order, or nullopt.
inline std::optional<GroupHom> find_isomorphism(const FiniteGroup& source,
                                                const FiniteGroup& target) {
  std::optional<GroupHom> found;
  for_each_isomorphism(source, target, [&](const GroupHom& f) {
    found = f;
    return false;
  });
  return found;
}

inline bool are_isomorphic(const FiniteGroup& a, const FiniteGroup& b) {
  return find_isomorphism(a, b).has_value();
}

}  // namespace grouplab
