#pragma once

// Built-in families of small groups used as the test corpus.

#include <cstdint>
#include <string>
#include <vector>

#include "grouplab/error.hpp"
#include "grouplab/finite_group.hpp"
#include "grouplab/permutation.hpp"

namespace grouplab::builtin {

inline void require(bool ok, const std::string& what) {
  if (!ok) throw Error(ErrorKind::ParamOutOfRange, what);
}

inline FiniteGroup cyclic(std::size_t n) {
  require(n >= 1, "cyclic group needs n >= 1");
  return FiniteGroup::from_rule(n, [n](Element a, Element b) { return (a + b) % n; },
                                "C" + std::to_string(n));
}

/// Dihedral group of order 2n; element r^i s^j has index i + n j.
inline FiniteGroup dihedral(std::size_t n) {
  require(n >= 1, "dihedral group needs n >= 1");
  return FiniteGroup::from_rule(
      2 * n,
      [n](Element a, Element b) {
        const std::size_t i = a % n, j = a / n, k = b % n, l = b / n;
        // r^i s^j r^k s^l = r^(i ± k) s^(j + l)
        const std::size_t rot = j == 0 ? (i + k) % n : (i + n - k) % n;
        return rot + n * ((j + l) % 2);
      },
      "D" + std::to_string(2 * n));
}

/// Quaternion group of order 8 from the unit quaternions ±1, ±i, ±j, ±k.
inline FiniteGroup quaternion8() {
  // index = sign * 4 + unit with unit 0..3 = 1, i, j, k
  static constexpr int kUnitProduct[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
  static constexpr int kSign[4][4] = {{0, 0, 0, 0}, {0, 1, 0, 1}, {0, 1, 1, 0}, {0, 0, 1, 1}};
  return FiniteGroup::from_rule(
      8,
      [](Element a, Element b) {
        const unsigned ua = a % 4, ub = b % 4;
        const unsigned sign = (a / 4 + b / 4 + static_cast<unsigned>(kSign[ua][ub])) % 2;
        return sign * 4 + static_cast<unsigned>(kUnitProduct[ua][ub]);
      },
      "Q8");
}

inline FiniteGroup symmetric(std::size_t n) {
  require(n >= 1 && n <= 5, "symmetric group needs 1 <= n <= 5");
  std::vector<Permutation> gens;
  if (n >= 2) {
    gens.push_back(Permutation::from_cycles("(1,2)", n));
    std::string cycle = "(";
    for (std::size_t i = 1; i <= n; ++i) cycle += (i > 1 ? "," : "") + std::to_string(i);
    gens.push_back(Permutation::from_cycles(cycle + ")", n));
  }
  return build_from_permutations(gens, 120, n, "S" + std::to_string(n));
}

inline FiniteGroup alternating(std::size_t n) {
  require(n >= 1 && n <= 5, "alternating group needs 1 <= n <= 5");
  std::vector<Permutation> gens;
  for (std::size_t k = 3; k <= n; ++k) {
    gens.push_back(Permutation::from_cycles("(1,2," + std::to_string(k) + ")", n));
  }
  return build_from_permutations(gens, 60, n, "A" + std::to_string(n));
}

inline FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b) {
  const std::size_t na = a.order(), nb = b.order();
  return FiniteGroup::from_rule(
      na * nb,
      [&](Element x, Element y) { return a.mul(x % na, y % na) + na * b.mul(x / na, y / na); },
      a.label() + "x" + b.label());
}

inline bool is_prime(std::uint64_t p) {
  if (p < 2) return false;
  for (std::uint64_t d = 2; d * d <= p; ++d) {
    if (p % d == 0) return false;
  }
  return true;
}

/// (Z/p)^k
inline FiniteGroup elementary(std::size_t p, std::size_t k) {
  require(is_prime(p), "elementary abelian group needs a prime p");
  require(k >= 1 && k <= 8, "elementary abelian group needs 1 <= k <= 8");
  FiniteGroup g = cyclic(p);
  for (std::size_t i = 1; i < k; ++i) g = direct_product(g, cyclic(p));
  g.set_label("E" + std::to_string(p) + "^" + std::to_string(k));
  return g;
}

enum class Exponent { P, P2 };

/// Extraspecial group of order p³ for odd p: the Heisenberg group of
/// exponent p, or the exponent-p² group <x, y | x^(p²), y^p, y x y⁻¹ = x^(1+p)>.
inline FiniteGroup extraspecial(std::size_t p, Exponent exponent) {
  require(p == 3 || p == 5, "extraspecial groups are provided for p in {3, 5}");
  const std::size_t n = p * p * p;
  if (exponent == Exponent::P) {
    // (a, b, c)(a', b', c') = (a + a', b + b', c + c' + a b'), index a + p b + p² c
    return FiniteGroup::from_rule(
        n,
        [p](Element x, Element y) {
          const std::size_t a = x % p, b = (x / p) % p, c = x / (p * p);
          const std::size_t a2 = y % p, b2 = (y / p) % p, c2 = y / (p * p);
          return (a + a2) % p + p * ((b + b2) % p) + p * p * ((c + c2 + a * b2) % p);
        },
        "He" + std::to_string(p));
  }
  // x^i y^j, index i + p² j; x^i y^j x^k y^l = x^(i + k (1+p)^j) y^(j + l)
  const std::size_t p2 = p * p;
  return FiniteGroup::from_rule(
      n,
      [p, p2](Element x, Element y) {
        const std::size_t i = x % p2, j = x / p2, k = y % p2, l = y / p2;
        std::size_t twist = 1;
        for (std::size_t t = 0; t < j; ++t) twist = twist * (1 + p) % p2;
        return (i + k * twist) % p2 + p2 * ((j + l) % p);
      },
      "M" + std::to_string(p) + "^3");
}

}  // namespace grouplab::builtin
