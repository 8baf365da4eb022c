#pragma once

// Test-side oracles and generators. Everything here is written directly from
// definitions, without calling the library routine it is used to check.

#include <algorithm>
#include <cstdint>
#include <filesystem>
#include <numeric>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "grouplab/builtin.hpp"
#include "grouplab/catalog.hpp"
#include "grouplab/finite_group.hpp"

namespace testing_support {

using grouplab::Element;
using grouplab::FiniteGroup;

inline std::filesystem::path corpus_dir() { return GROUPLAB_CORPUS_DIR; }

inline std::vector<grouplab::CatalogEntry> corpus() { return grouplab::load_catalog(corpus_dir()); }

/// Small groups used by property tests, cheap enough for cubic checks.
inline std::vector<FiniteGroup> small_groups() {
  namespace b = grouplab::builtin;
  return {FiniteGroup(),   b::cyclic(2),    b::cyclic(5),          b::elementary(2, 2),
          b::symmetric(3), b::dihedral(4),  b::quaternion8(),      b::direct_product(b::symmetric(3), b::cyclic(2)),
          b::alternating(4), b::dihedral(5), b::direct_product(b::cyclic(4), b::cyclic(2))};
}

/// Random bijection of element indices fixing the identity.
inline std::vector<Element> random_relabeling(std::size_t n, std::mt19937_64& rng) {
  std::vector<Element> p(n);
  std::iota(p.begin(), p.end(), 0);
  if (n > 2) std::shuffle(p.begin() + 1, p.end(), rng);
  return p;
}

inline std::set<Element> brute_center(const FiniteGroup& g) {
  std::set<Element> z;
  for (Element x = 0; x < g.order(); ++x) {
    bool central = true;
    for (Element y = 0; y < g.order(); ++y) central = central && g.mul(x, y) == g.mul(y, x);
    if (central) z.insert(x);
  }
  return z;
}

/// Closure of a set under multiplication, by repeated products until stable.
inline std::set<Element> brute_closure(const FiniteGroup& g, std::set<Element> s) {
  s.insert(FiniteGroup::identity);
  for (bool grew = true; grew;) {
    grew = false;
    const std::vector<Element> cur(s.begin(), s.end());
    for (Element a : cur) {
      for (Element b : cur) grew = s.insert(g.mul(a, b)).second || grew;
    }
  }
  return s;
}

inline std::set<Element> brute_derived(const FiniteGroup& g) {
  std::set<Element> c;
  for (Element x = 0; x < g.order(); ++x) {
    for (Element y = 0; y < g.order(); ++y) {
      // x y x^-1 y^-1 spelled out with an inverse search
      Element xi = 0, yi = 0;
      for (Element t = 0; t < g.order(); ++t) {
        if (g.mul(x, t) == 0) xi = t;
        if (g.mul(y, t) == 0) yi = t;
      }
      c.insert(g.mul(g.mul(x, y), g.mul(xi, yi)));
    }
  }
  return brute_closure(g, c);
}

inline std::size_t brute_order(const FiniteGroup& g, Element x) {
  std::size_t k = 1;
  for (Element y = x; y != 0; y = g.mul(y, x)) ++k;
  return k;
}

/// Invariant factors of a product of cyclic groups of the given orders, by
/// repeatedly replacing (a, b) with (gcd, lcm).
inline std::vector<std::uint64_t> cyclic_product_invariants(std::vector<std::uint64_t> orders) {
  for (std::size_t i = 0; i < orders.size(); ++i) {
    for (std::size_t j = i + 1; j < orders.size(); ++j) {
      const auto g = std::gcd(orders[i], orders[j]);
      const auto l = orders[i] / g * orders[j];
      orders[i] = g;
      orders[j] = l;
    }
  }
  std::vector<std::uint64_t> out;
  for (auto o : orders) {
    if (o > 1) out.push_back(o);
  }
  return out;
}

}  // namespace testing_support
