#pragma once

// Finite groups as dense multiplication tables.
//
// Elements are indices 0..order-1 and index 0 is always the identity.
// Products are read left to right: mul(a, b) is "a then b" in the table,
// which for permutation groups means a∘b with b applied first.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "grouplab/error.hpp"

namespace grouplab {

using Element = std::uint32_t;

class FiniteGroup {
 public:
  static constexpr Element identity = 0;

  /// The trivial group.
  FiniteGroup() : order_(1), mul_{0}, inv_{0}, label_("1") {}

  /// Builds a group from a row-major order×order table whose element 0 is the
  /// identity. Runs the cheap structural checks (shape, identity, Latin
  /// square); associativity is left to validate() because it is cubic.
  static FiniteGroup from_table(std::size_t order, std::vector<Element> mul, std::string label,
                                std::vector<std::string> element_names = {}) {
    if (order == 0) throw Error(ErrorKind::ValidationError, "group order must be positive");
    if (mul.size() != order * order) {
      throw Error(ErrorKind::ValidationError, "table has " + std::to_string(mul.size()) +
                                                  " entries, expected " +
                                                  std::to_string(order * order));
    }
    if (!element_names.empty() && element_names.size() != order) {
      throw Error(ErrorKind::ValidationError, "element_names length differs from order");
    }
    FiniteGroup g;
    g.order_ = order;
    g.mul_ = std::move(mul);
    g.label_ = std::move(label);
    g.names_ = std::move(element_names);
    if (auto problem = g.structural_problem()) throw Error(ErrorKind::ValidationError, *problem);
    g.inv_.assign(order, 0);
    for (Element x = 0; x < order; ++x) {
      for (Element y = 0; y < order; ++y) {
        if (g.mul(x, y) == identity) {
          g.inv_[x] = y;
          break;
        }
      }
    }
    return g;
  }

  /// Builds the table from a product rule f(a, b) on indices 0..order-1.
  template <typename Rule>
  static FiniteGroup from_rule(std::size_t order, Rule&& rule, std::string label) {
    std::vector<Element> mul(order * order);
    for (Element a = 0; a < order; ++a) {
      for (Element b = 0; b < order; ++b) mul[a * order + b] = static_cast<Element>(rule(a, b));
    }
    return from_table(order, std::move(mul), std::move(label));
  }

  std::size_t order() const noexcept { return order_; }
  Element mul(Element a, Element b) const noexcept { return mul_[a * order_ + b]; }
  Element inv(Element a) const noexcept { return inv_[a]; }
  std::span<const Element> table() const noexcept { return mul_; }
  std::span<const Element> row(Element a) const noexcept {
    return std::span<const Element>(mul_).subspan(a * order_, order_);
  }

  const std::string& label() const noexcept { return label_; }
  void set_label(std::string label) { label_ = std::move(label); }
  const std::vector<std::string>& element_names() const noexcept { return names_; }

  std::string name_of(Element x) const {
    return names_.empty() ? std::to_string(x) : names_[x];
  }

  /// ^x y = x y x⁻¹
  Element conjugate(Element x, Element y) const noexcept { return mul(mul(x, y), inv(x)); }

  /// [x, y] = x y x⁻¹ y⁻¹
  Element commutator(Element x, Element y) const noexcept {
    return mul(mul(x, y), mul(inv(x), inv(y)));
  }

  Element power(Element x, std::uint64_t k) const noexcept {
    Element result = identity;
    for (std::uint64_t i = 0; i < k; ++i) result = mul(result, x);
    return result;
  }

  std::size_t element_order(Element x) const noexcept {
    std::size_t k = 1;
    for (Element y = x; y != identity; y = mul(y, x)) ++k;
    return k;
  }

  bool commute(Element x, Element y) const noexcept { return mul(x, y) == mul(y, x); }

  bool is_abelian() const noexcept {
    for (Element x = 0; x < order_; ++x) {
      for (Element y = x + 1; y < order_; ++y) {
        if (!commute(x, y)) return false;
      }
    }
    return true;
  }

  /// Full check including associativity. Returns a description of the first
  /// violated invariant, or nullopt.
  std::optional<std::string> validate() const {
    if (auto problem = structural_problem()) return problem;
    for (Element a = 0; a < order_; ++a) {
      for (Element b = 0; b < order_; ++b) {
        const Element ab = mul(a, b);
        for (Element c = 0; c < order_; ++c) {
          if (mul(ab, c) != mul(a, mul(b, c))) {
            return "not associative at (" + std::to_string(a) + ", " + std::to_string(b) + ", " +
                   std::to_string(c) + ")";
          }
        }
      }
    }
    for (Element a = 0; a < order_; ++a) {
      if (mul(a, inv_[a]) != identity || mul(inv_[a], a) != identity) {
        return "inverse table wrong at " + std::to_string(a);
      }
    }
    return std::nullopt;
  }

  friend bool operator==(const FiniteGroup& a, const FiniteGroup& b) {
    return a.order_ == b.order_ && a.mul_ == b.mul_;
  }

 private:
  std::optional<std::string> structural_problem() const {
    for (Element x : mul_) {
      if (x >= order_) return "table entry " + std::to_string(x) + " out of range";
    }
    for (Element a = 0; a < order_; ++a) {
      if (mul(identity, a) != a || mul(a, identity) != a) {
        return "element 0 is not a two-sided identity (fails at " + std::to_string(a) + ")";
      }
    }
    std::vector<char> seen(order_);
    for (Element a = 0; a < order_; ++a) {
      std::fill(seen.begin(), seen.end(), 0);
      for (Element b = 0; b < order_; ++b) {
        if (seen[mul(a, b)]++) return "row " + std::to_string(a) + " is not a permutation (not a Latin square)";
      }
      std::fill(seen.begin(), seen.end(), 0);
      for (Element b = 0; b < order_; ++b) {
        if (seen[mul(b, a)]++) return "column " + std::to_string(a) + " is not a permutation (not a Latin square)";
      }
    }
    return std::nullopt;
  }

  std::size_t order_;
  std::vector<Element> mul_;
  std::vector<Element> inv_;
  std::string label_;
  std::vector<std::string> names_;
};

/// A subgroup of some parent group, stored as its sorted member list. The
/// parent is not referenced; operations take it explicitly.
struct Subgroup {
  std::vector<Element> members;

  std::size_t order() const noexcept { return members.size(); }
  bool contains(Element x) const { return std::binary_search(members.begin(), members.end(), x); }
  bool is_trivial() const noexcept { return members.size() == 1; }

  friend bool operator==(const Subgroup&, const Subgroup&) = default;
  friend auto operator<=>(const Subgroup& a, const Subgroup& b) {
    if (a.members.size() != b.members.size()) return a.members.size() <=> b.members.size();
    return a.members <=> b.members;
  }
};

inline Subgroup whole_group(const FiniteGroup& g) {
  Subgroup s;
  s.members.resize(g.order());
  for (Element x = 0; x < g.order(); ++x) s.members[x] = x;
  return s;
}

inline Subgroup trivial_subgroup() { return Subgroup{{FiniteGroup::identity}}; }

/// Checks membership of identity and closure under products and inverses.
inline bool is_subgroup(const FiniteGroup& g, const Subgroup& h) {
  if (h.members.empty() || !std::is_sorted(h.members.begin(), h.members.end())) return false;
  if (!h.contains(FiniteGroup::identity)) return false;
  for (Element x : h.members) {
    if (x >= g.order() || !h.contains(g.inv(x))) return false;
    for (Element y : h.members) {
      if (!h.contains(g.mul(x, y))) return false;
    }
  }
  return true;
}

/// A map between groups given by its full image table.
struct GroupHom {
  std::vector<Element> images;

  Element operator()(Element x) const { return images[x]; }
  friend bool operator==(const GroupHom&, const GroupHom&) = default;
};

inline GroupHom identity_hom(const FiniteGroup& g) { return GroupHom{whole_group(g).members}; }

inline bool is_homomorphism(const FiniteGroup& source, const FiniteGroup& target,
                            const GroupHom& f) {
  if (f.images.size() != source.order()) return false;
  for (Element x : f.images) {
    if (x >= target.order()) return false;
  }
  for (Element x = 0; x < source.order(); ++x) {
    for (Element y = 0; y < source.order(); ++y) {
      if (f(source.mul(x, y)) != target.mul(f(x), f(y))) return false;
    }
  }
  return true;
}

inline bool is_bijective(const GroupHom& f, std::size_t target_order) {
  if (f.images.size() != target_order) return false;
  std::vector<char> hit(target_order);
  for (Element x : f.images) {
    if (x >= target_order || hit[x]++) return false;
  }
  return true;
}

inline Subgroup image_of(const GroupHom& f) {
  Subgroup s{f.images};
  std::sort(s.members.begin(), s.members.end());
  s.members.erase(std::unique(s.members.begin(), s.members.end()), s.members.end());
  return s;
}

inline Subgroup kernel_of(const GroupHom& f) {
  Subgroup s;
  for (Element x = 0; x < f.images.size(); ++x) {
    if (f.images[x] == FiniteGroup::identity) s.members.push_back(x);
  }
  return s;
}

inline GroupHom compose(const GroupHom& second, const GroupHom& first) {
  GroupHom out;
  out.images.reserve(first.images.size());
  for (Element x : first.images) out.images.push_back(second(x));
  return out;
}

inline GroupHom inverse_of(const GroupHom& bijection) {
  GroupHom out;
  out.images.assign(bijection.images.size(), 0);
  for (Element x = 0; x < bijection.images.size(); ++x) out.images[bijection.images[x]] = x;
  return out;
}

/// Sorted multiset of element orders, a cheap isomorphism invariant.
inline std::vector<std::size_t> element_order_profile(const FiniteGroup& g) {
  std::vector<std::size_t> orders(g.order());
  for (Element x = 0; x < g.order(); ++x) orders[x] = g.element_order(x);
  std::sort(orders.begin(), orders.end());
  return orders;
}

/// Relabels g by a permutation of indices that fixes 0: element x of g
/// becomes element relabel[x] of the result.
inline FiniteGroup relabel(const FiniteGroup& g, std::span<const Element> relabel) {
  const std::size_t n = g.order();
  if (relabel.size() != n || relabel[0] != FiniteGroup::identity) {
    throw Error(ErrorKind::InvalidArgument, "relabeling must be a permutation fixing 0");
  }
  std::vector<Element> mul(n * n);
  for (Element a = 0; a < n; ++a) {
    for (Element b = 0; b < n; ++b) mul[relabel[a] * n + relabel[b]] = relabel[g.mul(a, b)];
  }
  return FiniteGroup::from_table(n, std::move(mul), g.label());
}

}  // namespace grouplab
