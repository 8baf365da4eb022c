#pragma once

// Structural subroutines on table groups: generated subgroups, center,
// derived subgroup, quotients and abelian subgroups.

#include <algorithm>
#include <deque>
#include <set>
#include <span>
#include <vector>

#include "grouplab/error.hpp"
#include "grouplab/finite_group.hpp"

namespace grouplab {

/// The subgroup generated by `generators` (closure under right
/// multiplication, which suffices in a finite group).
inline Subgroup generate_subgroup(const FiniteGroup& g, std::span<const Element> generators) {
  std::vector<char> in(g.order());
  std::vector<Element> members{FiniteGroup::identity};
  in[FiniteGroup::identity] = 1;
  for (std::size_t i = 0; i < members.size(); ++i) {
    for (Element s : generators) {
      const Element y = g.mul(members[i], s);
      if (!in[y]) {
        in[y] = 1;
        members.push_back(y);
      }
    }
  }
  std::sort(members.begin(), members.end());
  return Subgroup{std::move(members)};
}

inline Subgroup center(const FiniteGroup& g) {
  Subgroup z;
  for (Element x = 0; x < g.order(); ++x) {
    bool central = true;
    for (Element y = 0; y < g.order() && central; ++y) central = g.commute(x, y);
    if (central) z.members.push_back(x);
  }
  return z;
}

/// All distinct commutators [x, y], sorted.
inline std::vector<Element> commutator_set(const FiniteGroup& g) {
  std::vector<char> hit(g.order());
  for (Element x = 0; x < g.order(); ++x) {
    for (Element y = 0; y < g.order(); ++y) hit[g.commutator(x, y)] = 1;
  }
  std::vector<Element> out;
  for (Element x = 0; x < g.order(); ++x) {
    if (hit[x]) out.push_back(x);
  }
  return out;
}

/// [G, G], generated by all commutators.
inline Subgroup derived_subgroup(const FiniteGroup& g) {
  const auto comms = commutator_set(g);
  return generate_subgroup(g, comms);
}

inline bool is_normal(const FiniteGroup& g, const Subgroup& n) {
  for (Element x = 0; x < g.order(); ++x) {
    for (Element h : n.members) {
      if (!n.contains(g.conjugate(x, h))) return false;
    }
  }
  return true;
}

/// G/N together with the projection and a section choosing the smallest
/// element index in each coset. Cosets are numbered by their smallest
/// element, so the trivial coset is 0.
struct Quotient {
  FiniteGroup group;
  GroupHom projection;
  std::vector<Element> section;
};

inline Quotient quotient(const FiniteGroup& g, const Subgroup& n) {
  if (!is_subgroup(g, n)) throw Error(ErrorKind::InvalidArgument, "not a subgroup");
  if (!is_normal(g, n)) throw Error(ErrorKind::NotNormal, "subgroup is not normal");
  constexpr Element unset = static_cast<Element>(-1);
  Quotient q;
  q.projection.images.assign(g.order(), unset);
  for (Element x = 0; x < g.order(); ++x) {
    if (q.projection.images[x] != unset) continue;
    const auto coset = static_cast<Element>(q.section.size());
    q.section.push_back(x);
    for (Element h : n.members) q.projection.images[g.mul(x, h)] = coset;
  }
  const std::size_t k = q.section.size();
  std::vector<Element> mul(k * k);
  for (Element a = 0; a < k; ++a) {
    for (Element b = 0; b < k; ++b) mul[a * k + b] = q.projection(g.mul(q.section[a], q.section[b]));
  }
  q.group = FiniteGroup::from_table(k, std::move(mul), g.label() + "/N");
  return q;
}

/// A subgroup re-indexed as a group in its own right: element i of `group`
/// is `embedding[i]` of the parent (the i-th smallest member).
struct SubgroupAsGroup {
  FiniteGroup group;
  std::vector<Element> embedding;

  /// Index in `group` of a parent element that lies in the subgroup.
  Element index_of(Element parent_element) const {
    auto it = std::lower_bound(embedding.begin(), embedding.end(), parent_element);
    return static_cast<Element>(it - embedding.begin());
  }
};

inline SubgroupAsGroup subgroup_as_group(const FiniteGroup& g, const Subgroup& h) {
  SubgroupAsGroup out;
  out.embedding = h.members;
  const std::size_t k = h.order();
  std::vector<Element> mul(k * k);
  for (Element a = 0; a < k; ++a) {
    for (Element b = 0; b < k; ++b) mul[a * k + b] = out.index_of(g.mul(h.members[a], h.members[b]));
  }
  out.group = FiniteGroup::from_table(k, std::move(mul), g.label() + "<H>");
  return out;
}

inline bool is_abelian_subset(const FiniteGroup& g, std::span<const Element> xs) {
  for (std::size_t i = 0; i < xs.size(); ++i) {
    for (std::size_t j = i + 1; j < xs.size(); ++j) {
      if (!g.commute(xs[i], xs[j])) return false;
    }
  }
  return true;
}

/// All abelian subgroups, or only those maximal under inclusion, ordered by
/// (size, sorted members). Found by breadth-first extension of each known
/// abelian subgroup by one more element of its centralizer.
inline std::vector<Subgroup> abelian_subgroups(const FiniteGroup& g, bool maximal_only) {
  if (maximal_only && g.is_abelian()) return {whole_group(g)};
  std::set<Subgroup> found{trivial_subgroup()};
  std::deque<Subgroup> todo{trivial_subgroup()};
  while (!todo.empty()) {
    Subgroup h = std::move(todo.front());
    todo.pop_front();
    for (Element x = 0; x < g.order(); ++x) {
      if (h.contains(x)) continue;
      bool centralizes = true;
      for (Element y : h.members) {
        if (!g.commute(x, y)) {
          centralizes = false;
          break;
        }
      }
      if (!centralizes) continue;
      std::vector<Element> gens = h.members;
      gens.push_back(x);
      Subgroup bigger = generate_subgroup(g, gens);
      if (found.insert(bigger).second) todo.push_back(std::move(bigger));
    }
  }
  std::vector<Subgroup> all(found.begin(), found.end());
  if (!maximal_only) return all;
  std::vector<Subgroup> maximal;
  for (const auto& a : all) {
    bool contained = false;
    for (const auto& b : all) {
      if (b.order() > a.order() &&
          std::includes(b.members.begin(), b.members.end(), a.members.begin(), a.members.end())) {
        contained = true;
        break;
      }
    }
    if (!contained) maximal.push_back(a);
  }
  return maximal;
}

}  // namespace grouplab
