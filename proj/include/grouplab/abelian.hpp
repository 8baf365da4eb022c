#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "grouplab/error.hpp"
#include "grouplab/finite_group.hpp"
#include "grouplab/structure.hpp"

namespace grouplab {

/// Invariant factors d1 | d2 | ... | dk of a finite abelian group, each > 1.
/// The empty sequence is the trivial group.
struct AbelianInvariants {
  std::vector<std::uint64_t> factors;

  std::uint64_t order() const {
    std::uint64_t n = 1;
    for (auto d : factors) n *= d;
    return n;
  }
  bool is_trivial() const noexcept { return factors.empty(); }

  bool is_valid() const {
    for (std::size_t i = 0; i < factors.size(); ++i) {
      if (factors[i] < 2) return false;
      if (i > 0 && factors[i] % factors[i - 1] != 0) return false;
    }
    return true;
  }

  std::string to_string() const {
    if (factors.empty()) return "[]";
    std::string s = "[";
    for (std::size_t i = 0; i < factors.size(); ++i) {
      if (i) s += ", ";
      s += std::to_string(factors[i]);
    }
    return s + "]";
  }

  friend bool operator==(const AbelianInvariants&, const AbelianInvariants&) = default;
};

namespace detail {

inline std::map<std::uint64_t, unsigned> factorize(std::uint64_t n) {
  std::map<std::uint64_t, unsigned> out;
  for (std::uint64_t p = 2; p * p <= n; ++p) {
    while (n % p == 0) {
      ++out[p];
      n /= p;
    }
  }
  if (n > 1) ++out[n];
  return out;
}

}  // namespace detail

/// Invariant factors of the direct sum of cyclic groups of the given orders.
/// Orders of 0 or 1 contribute nothing.
inline AbelianInvariants invariants_from_cyclic_orders(const std::vector<std::uint64_t>& orders) {
  // prime -> exponents of the p-primary cyclic parts
  std::map<std::uint64_t, std::vector<unsigned>> primary;
  for (auto n : orders) {
    if (n < 2) continue;
    for (auto [p, e] : detail::factorize(n)) primary[p].push_back(e);
  }
  std::size_t k = 0;
  for (auto& [p, exps] : primary) {
    std::sort(exps.rbegin(), exps.rend());
    k = std::max(k, exps.size());
  }
  // Largest prime powers go into the last factor.
  std::vector<std::uint64_t> factors(k, 1);
  for (auto& [p, exps] : primary) {
    for (std::size_t i = 0; i < exps.size(); ++i) {
      std::uint64_t q = 1;
      for (unsigned j = 0; j < exps[i]; ++j) q *= p;
      factors[k - 1 - i] *= q;
    }
  }
  return AbelianInvariants{std::move(factors)};
}

/// Abelian invariants of the subgroup h of g from an element-order census:
/// for each prime p, the counts #{x : x^(p^j) = 1} determine the number of
/// p-primary cyclic factors of each exponent.
inline AbelianInvariants abelian_invariants(const FiniteGroup& g, const Subgroup& h,
                                            bool assert_abelian = true) {
  if (assert_abelian && !is_abelian_subset(g, h.members)) {
    throw Error(ErrorKind::NotAbelian, "abelian invariants requested for a nonabelian group");
  }
  std::vector<std::size_t> orders;
  orders.reserve(h.order());
  for (Element x : h.members) orders.push_back(g.element_order(x));

  std::vector<std::uint64_t> cyclic;
  for (auto [p, e] : detail::factorize(h.order())) {
    // rank_at_least[j] = number of cyclic p-factors of exponent >= j
    std::vector<std::uint64_t> census(e + 1, 0);
    for (std::size_t o : orders) {
      std::uint64_t pj = 1;
      for (unsigned j = 0; j <= e; ++j, pj *= p) {
        if (pj % o == 0) ++census[j];
      }
    }
    auto log_p = [p = p](std::uint64_t ratio) {
      unsigned r = 0;
      while (ratio > 1) {
        ratio /= p;
        ++r;
      }
      return r;
    };
    std::vector<unsigned> at_least(e + 2, 0);
    for (unsigned j = 1; j <= e; ++j) at_least[j] = log_p(census[j] / census[j - 1]);
    for (unsigned j = 1; j <= e; ++j) {
      const unsigned exactly = at_least[j] - at_least[j + 1];
      std::uint64_t q = 1;
      for (unsigned t = 0; t < j; ++t) q *= p;
      for (unsigned t = 0; t < exactly; ++t) cyclic.push_back(q);
    }
  }
  return invariants_from_cyclic_orders(cyclic);
}

inline AbelianInvariants abelian_invariants(const FiniteGroup& g, bool assert_abelian = true) {
  return abelian_invariants(g, whole_group(g), assert_abelian);
}

/// Invariants of G^ab = G/[G,G].
inline AbelianInvariants abelianization(const FiniteGroup& g) {
  auto q = quotient(g, derived_subgroup(g));
  return abelian_invariants(q.group);
}

}  // namespace grouplab
