#pragma once

// H²(G, Z/m) with trivial action through normalized 2-cocycles, restriction
// to subgroups, and the intersection of restriction kernels over the maximal
// abelian subgroups.
//
// A normalized cochain is a function f : G×G -> Z/m with f(1, y) = f(x, 1) = 0,
// stored on the (|G|-1)² pairs of nonidentity elements. The cocycle identity is
// f(x, y) + f(xy, z) = f(y, z) + f(x, yz).

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "grouplab/abelian.hpp"
#include "grouplab/error.hpp"
#include "grouplab/finite_group.hpp"
#include "grouplab/structure.hpp"
#include "grouplab/zmod_linear.hpp"

namespace grouplab {

inline constexpr std::size_t kDefaultOracleCap = 24;

/// Full |G|×|G| table over Z/m, f[x * |G| + y].
using CocycleTable = std::vector<zmod::Int>;

struct H2Class {
  zmod::Int modulus = 1;
  std::vector<zmod::Int> coordinates;

  friend bool operator==(const H2Class&, const H2Class&) = default;
};

class CocycleSpace {
 public:
  CocycleSpace(FiniteGroup g, zmod::Int m, std::size_t cap = kDefaultOracleCap)
      : group_(std::move(g)), m_(m) {
    if (m < 1) throw Error(ErrorKind::InvalidArgument, "modulus must be at least 1");
    if (group_.order() > cap) {
      throw Error(ErrorKind::GroupTooLargeForOracle, "group of order " + std::to_string(group_.order()) +
                                                         " exceeds the oracle cap " + std::to_string(cap));
    }
    const std::size_t k = group_.order() - 1;
    const std::size_t vars = k * k;

    zmod::Matrix cocycle_rows(0, vars);
    zmod::Vector row(vars);
    for (Element x = 1; x < group_.order(); ++x) {
      for (Element y = 1; y < group_.order(); ++y) {
        for (Element z = 1; z < group_.order(); ++z) {
          std::fill(row.begin(), row.end(), 0);
          add(row, x, y, 1);
          add(row, group_.mul(x, y), z, 1);
          add(row, y, z, -1);
          add(row, x, group_.mul(y, z), -1);
          cocycle_rows.append_row(row);
        }
      }
    }
    coboundary_ = zmod::Matrix(vars, k);
    std::vector<zmod::Vector> coboundaries;
    for (Element c = 1; c < group_.order(); ++c) {
      // δ(e_c)(x, y) = e_c(x) + e_c(y) - e_c(xy)
      zmod::Vector b(vars, 0);
      for (Element x = 1; x < group_.order(); ++x) {
        for (Element y = 1; y < group_.order(); ++y) {
          zmod::Int v = (x == c) + (y == c) - (group_.mul(x, y) == c);
          b[index(x, y)] = zmod::reduce(v, m_);
        }
      }
      for (std::size_t i = 0; i < vars; ++i) coboundary_(i, c - 1) = b[i];
      coboundaries.push_back(std::move(b));
    }
    h2_.emplace(cocycle_rows, coboundaries, m_);
    b2_order_ = zmod::image_order(coboundary_, m_);
    if (h2_->kernel_order() != b2_order_ * h2_->order()) {
      throw Error(ErrorKind::InconsistentOrders, "|Z²| != |B²|·|H²| for " + group_.label());
    }
  }

  const FiniteGroup& group() const noexcept { return group_; }
  zmod::Int modulus() const noexcept { return m_; }

  std::uint64_t h2_order() const { return h2_->order(); }
  AbelianInvariants h2_invariants() const { return h2_->invariants(); }
  /// Orders of the cyclic basis classes (not necessarily invariant factors).
  const std::vector<zmod::Int>& basis_orders() const { return h2_->orders(); }
  std::uint64_t z2_order() const { return h2_->kernel_order(); }
  std::uint64_t b2_order() const { return b2_order_; }

  std::size_t index(Element x, Element y) const { return (x - 1) * (group_.order() - 1) + (y - 1); }

  zmod::Vector to_vector(const CocycleTable& f) const {
    const std::size_t n = group_.order();
    if (f.size() != n * n) throw Error(ErrorKind::InvalidArgument, "cochain table has the wrong size");
    zmod::Vector v((n - 1) * (n - 1));
    for (Element x = 1; x < n; ++x) {
      for (Element y = 1; y < n; ++y) v[index(x, y)] = zmod::reduce(f[x * n + y], m_);
    }
    return v;
  }

  CocycleTable to_table(const zmod::Vector& v) const {
    const std::size_t n = group_.order();
    CocycleTable f(n * n, 0);
    for (Element x = 1; x < n; ++x) {
      for (Element y = 1; y < n; ++y) f[x * n + y] = v[index(x, y)];
    }
    return f;
  }

  bool is_normalized_cocycle(const CocycleTable& f) const {
    const std::size_t n = group_.order();
    if (f.size() != n * n) return false;
    auto at = [&](Element a, Element b) { return zmod::reduce(f[a * n + b], m_); };
    for (Element x = 0; x < n; ++x) {
      if (at(0, x) != 0 || at(x, 0) != 0) return false;
    }
    for (Element x = 0; x < n; ++x) {
      for (Element y = 0; y < n; ++y) {
        for (Element z = 0; z < n; ++z) {
          if (zmod::reduce(at(x, y) + at(group_.mul(x, y), z) - at(y, z) - at(x, group_.mul(y, z)), m_) != 0) {
            return false;
          }
        }
      }
    }
    return true;
  }

  H2Class class_of(const CocycleTable& f) const {
    if (!is_normalized_cocycle(f)) throw Error(ErrorKind::InvalidArgument, "not a normalized cocycle");
    return H2Class{m_, h2_->coordinates(to_vector(f))};
  }

  CocycleTable representative(const H2Class& c) const {
    if (c.modulus != m_) throw Error(ErrorKind::ModulusMismatch, "class and space use different moduli");
    return to_table(h2_->lift(c.coordinates));
  }

  /// Representative cocycles of the basis classes.
  std::vector<CocycleTable> basis() const {
    std::vector<CocycleTable> out;
    for (std::size_t k = 0; k < h2_->orders().size(); ++k) out.push_back(to_table(h2_->representative(k)));
    return out;
  }

  H2Class add(const H2Class& a, const H2Class& b) const {
    H2Class c{m_, a.coordinates};
    for (std::size_t k = 0; k < c.coordinates.size(); ++k) {
      c.coordinates[k] = zmod::reduce(a.coordinates[k] + b.coordinates[k], h2_->orders()[k]);
    }
    return c;
  }

  H2Class zero() const { return H2Class{m_, std::vector<zmod::Int>(h2_->orders().size(), 0)}; }

 private:
  void add(zmod::Vector& row, Element x, Element y, zmod::Int coeff) const {
    if (x == FiniteGroup::identity || y == FiniteGroup::identity) return;
    auto& e = row[index(x, y)];
    e = zmod::reduce(e + coeff, m_);
  }

  FiniteGroup group_;
  zmod::Int m_;
  std::optional<zmod::Subquotient> h2_;
  zmod::Matrix coboundary_;
  std::uint64_t b2_order_ = 1;
};

/// A subgroup together with the cocycle space of the subgroup as a group.
struct SubgroupCohomology {
  Subgroup subgroup;
  std::vector<Element> embedding;
  CocycleSpace space;
};

inline SubgroupCohomology subgroup_cohomology(const FiniteGroup& g, const Subgroup& a, zmod::Int m,
                                              std::size_t cap = kDefaultOracleCap) {
  auto as_group = subgroup_as_group(g, a);
  return SubgroupCohomology{a, as_group.embedding, CocycleSpace(std::move(as_group.group), m, cap)};
}

/// Restriction of a class of H²(G) along the embedding of a subgroup.
inline H2Class restrict(const CocycleSpace& from, const H2Class& c, const CocycleSpace& to,
                        std::span<const Element> embedding) {
  if (c.modulus != from.modulus() || to.modulus() != from.modulus()) {
    throw Error(ErrorKind::ModulusMismatch, "restriction between different coefficient moduli");
  }
  const CocycleTable f = from.representative(c);
  const std::size_t n = from.group().order(), k = to.group().order();
  CocycleTable r(k * k);
  for (Element a = 0; a < k; ++a) {
    for (Element b = 0; b < k; ++b) r[a * k + b] = f[embedding[a] * n + embedding[b]];
  }
  return to.class_of(r);
}

inline H2Class restrict(const CocycleSpace& from, const H2Class& c, const SubgroupCohomology& to) {
  return restrict(from, c, to.space, to.embedding);
}

struct OrderAndInvariants {
  std::uint64_t order = 1;
  AbelianInvariants invariants;
};

inline OrderAndInvariants h2_order(const FiniteGroup& g, zmod::Int m, std::size_t cap = kDefaultOracleCap) {
  CocycleSpace s(g, m, cap);
  return {s.h2_order(), s.h2_invariants()};
}

/// |M(G)| = |H²(G, Z/|G|)| / |G^ab|.
inline std::uint64_t multiplier_order_oracle(const CocycleSpace& space);

inline std::uint64_t multiplier_order_oracle(const FiniteGroup& g, std::size_t cap = kDefaultOracleCap) {
  return multiplier_order_oracle(CocycleSpace(g, static_cast<zmod::Int>(g.order()), cap));
}

/// Restriction of every basis class of `space` to `sub`, as a matrix whose
/// column i holds the coordinates of the restriction of basis class i.
inline std::vector<std::vector<zmod::Int>> restriction_matrix(const CocycleSpace& space,
                                                              const SubgroupCohomology& sub) {
  const std::size_t r = space.basis_orders().size();
  std::vector<std::vector<zmod::Int>> cols;
  for (std::size_t i = 0; i < r; ++i) {
    H2Class e = space.zero();
    e.coordinates[i] = 1;
    cols.push_back(restrict(space, e, sub).coordinates);
  }
  return cols;
}

/// The subgroup of H²(G, Z/m) of classes restricting to zero on every listed
/// subgroup, from the stacked restriction matrices.
inline OrderAndInvariants restriction_kernel(const CocycleSpace& space,
                                             const std::vector<SubgroupCohomology>& subgroups) {
  const zmod::Int m = space.modulus();
  const auto& orders = space.basis_orders();
  const std::size_t r = orders.size();
  zmod::Matrix stacked(0, r);
  for (const auto& sub : subgroups) {
    const auto cols = restriction_matrix(space, sub);
    const auto& target_orders = sub.space.basis_orders();
    for (std::size_t j = 0; j < target_orders.size(); ++j) {
      // coordinate j lives in Z/b_j; scale by m/b_j to test it inside Z/m
      zmod::Vector row(r);
      for (std::size_t i = 0; i < r; ++i) row[i] = zmod::reduce(cols[i][j] * (m / target_orders[j]), m);
      stacked.append_row(row);
    }
  }
  std::vector<zmod::Vector> zero_classes;
  for (std::size_t i = 0; i < r; ++i) {
    zmod::Vector e(r, 0);
    e[i] = orders[i] % m;
    zero_classes.push_back(std::move(e));
  }
  zmod::Subquotient kernel(stacked, zero_classes, m);
  return {kernel.order(), kernel.invariants()};
}

/// ⋂ ker(res to A) over the maximal abelian subgroups A, inside H²(G, Z/m).
inline OrderAndInvariants b0_lower_bound(const CocycleSpace& space, std::size_t cap = kDefaultOracleCap) {
  const FiniteGroup& g = space.group();
  std::vector<SubgroupCohomology> subs;
  for (const auto& a : abelian_subgroups(g, true)) {
    subs.push_back(subgroup_cohomology(g, a, space.modulus(), cap));
  }
  return restriction_kernel(space, subs);
}

inline OrderAndInvariants b0_lower_bound(const FiniteGroup& g, zmod::Int m, std::size_t cap = kDefaultOracleCap) {
  return b0_lower_bound(CocycleSpace(g, m, cap), cap);
}

/// Multiplier order from an already computed space with m = |G|.
inline std::uint64_t multiplier_order_oracle(const CocycleSpace& space) {
  const auto h2 = space.h2_order();
  const auto ab = abelianization(space.group()).order();
  if (static_cast<std::size_t>(space.modulus()) != space.group().order()) {
    throw Error(ErrorKind::ModulusMismatch, "the multiplier oracle needs coefficients Z/|G|");
  }
  if (h2 % ab != 0) {
    throw Error(ErrorKind::InconsistentOrders, "|H²(G, Z/|G|)| = " + std::to_string(h2) +
                                                   " is not divisible by |G^ab| = " + std::to_string(ab));
  }
  return h2 / ab;
}

}  // namespace grouplab
