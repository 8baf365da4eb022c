#pragma once

// Permutations on {0, ..., degree-1} and closure of permutation generators
// into a FiniteGroup.
//
// Composition is right to left: (p * q)(x) = p(q(x)), i.e. q is applied
// first. Cycle notation in strings is 1-based, e.g. "(1,2,3)(4,5)".

#include <cctype>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "grouplab/error.hpp"
#include "grouplab/finite_group.hpp"

namespace grouplab {

using Point = std::uint32_t;

class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::vector<Point> images) : images_(std::move(images)) {
    std::vector<char> hit(images_.size());
    for (Point p : images_) {
      if (p >= images_.size() || hit[p]++) {
        throw Error(ErrorKind::ValidationError, "image array is not a permutation");
      }
    }
  }

  static Permutation identity(std::size_t degree) {
    std::vector<Point> images(degree);
    for (Point i = 0; i < degree; ++i) images[i] = i;
    return Permutation(std::move(images));
  }

  /// Parses 1-based cycle notation such as "(1,2)(3,4,5)" or "(1 2)". The
  /// empty string and "()" denote the identity.
  static Permutation from_cycles(std::string_view text, std::size_t degree) {
    std::vector<Point> images(degree);
    for (Point i = 0; i < degree; ++i) images[i] = i;
    std::size_t pos = 0;
    auto fail = [&](const std::string& why) {
      throw Error(ErrorKind::ParseError,
                  "cycle notation '" + std::string(text) + "' at position " + std::to_string(pos) +
                      ": " + why);
    };
    std::vector<char> used(degree);
    while (pos < text.size()) {
      if (std::isspace(static_cast<unsigned char>(text[pos]))) {
        ++pos;
        continue;
      }
      if (text[pos] != '(') fail("expected '('");
      ++pos;
      std::vector<Point> cycle;
      while (true) {
        while (pos < text.size() &&
               (std::isspace(static_cast<unsigned char>(text[pos])) || text[pos] == ',')) {
          ++pos;
        }
        if (pos >= text.size()) fail("unterminated cycle");
        if (text[pos] == ')') {
          ++pos;
          break;
        }
        if (!std::isdigit(static_cast<unsigned char>(text[pos]))) fail("expected a point");
        std::size_t value = 0;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
          value = value * 10 + static_cast<std::size_t>(text[pos] - '0');
          ++pos;
        }
        if (value == 0 || value > degree) fail("point out of range 1.." + std::to_string(degree));
        if (used[value - 1]++) fail("point " + std::to_string(value) + " repeated");
        cycle.push_back(static_cast<Point>(value - 1));
      }
      for (std::size_t i = 0; i < cycle.size(); ++i) {
        images[cycle[i]] = cycle[(i + 1) % cycle.size()];
      }
    }
    return Permutation(std::move(images));
  }

  std::size_t degree() const noexcept { return images_.size(); }
  Point operator()(Point x) const { return images_[x]; }
  const std::vector<Point>& images() const noexcept { return images_; }

  bool is_identity() const noexcept {
    for (Point i = 0; i < images_.size(); ++i) {
      if (images_[i] != i) return false;
    }
    return true;
  }

  Permutation inverse() const {
    std::vector<Point> out(images_.size());
    for (Point i = 0; i < images_.size(); ++i) out[images_[i]] = i;
    return Permutation(std::move(out));
  }

  /// 1-based cycle notation; "()" for the identity.
  std::string to_cycles() const {
    std::string out;
    std::vector<char> seen(images_.size());
    for (Point start = 0; start < images_.size(); ++start) {
      if (seen[start] || images_[start] == start) continue;
      out += '(';
      for (Point x = start; !seen[x]; x = images_[x]) {
        if (x != start) out += ',';
        seen[x] = 1;
        out += std::to_string(x + 1);
      }
      out += ')';
    }
    return out.empty() ? "()" : out;
  }

  friend Permutation operator*(const Permutation& p, const Permutation& q) {
    std::vector<Point> out(q.images_.size());
    for (Point i = 0; i < out.size(); ++i) out[i] = p.images_[q.images_[i]];
    Permutation r;
    r.images_ = std::move(out);
    return r;
  }

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::vector<Point> images_;
};

struct PermutationHash {
  std::size_t operator()(const std::vector<Point>& v) const noexcept {
    std::size_t h = 1469598103934665603ull;
    for (Point p : v) {
      h ^= p;
      h *= 1099511628211ull;
    }
    return h;
  }
};

/// A group built by closing permutation generators. elements[i] is the
/// permutation of element i; generator_elements[j] the index of generator j.
struct PermutationGroup {
  FiniteGroup group;
  std::vector<Permutation> elements;
  std::vector<Element> generator_elements;
};

/// Closes generators under composition. Element 0 is the identity and
/// elements are numbered in breadth-first order over the generators.
/// An empty generator list needs an explicit degree and yields the trivial
/// group.
inline PermutationGroup close_permutations(const std::vector<Permutation>& generators,
                                           std::size_t cap,
                                           std::optional<std::size_t> degree = std::nullopt,
                                           std::string label = "") {
  if (generators.empty() && !degree) {
    throw Error(ErrorKind::EmptyGeneratorList, "no generators and no point set given");
  }
  const std::size_t n = degree ? *degree : generators.front().degree();
  for (const auto& g : generators) {
    if (g.degree() != n) throw Error(ErrorKind::InvalidArgument, "generators act on different point sets");
  }

  // Distinct non-redundant generators, but remember where each input went.
  std::vector<Permutation> gens;
  std::vector<std::size_t> gen_slot(generators.size());
  {
    std::map<std::vector<Point>, std::size_t> seen;
    for (std::size_t j = 0; j < generators.size(); ++j) {
      auto [it, fresh] = seen.emplace(generators[j].images(), gens.size());
      if (fresh) gens.push_back(generators[j]);
      gen_slot[j] = it->second;
    }
  }

  PermutationGroup out;
  std::unordered_map<std::vector<Point>, Element, PermutationHash> index;
  out.elements.push_back(Permutation::identity(n));
  index.emplace(out.elements[0].images(), 0);
  // right[x * k + s] = index of elements[x] * gens[s]
  std::vector<Element> right;
  std::vector<std::pair<Element, std::uint32_t>> parent{{0, 0}};
  const std::size_t k = gens.size();
  for (std::size_t x = 0; x < out.elements.size(); ++x) {
    for (std::size_t s = 0; s < k; ++s) {
      Permutation p = out.elements[x] * gens[s];
      auto it = index.find(p.images());
      Element id;
      if (it == index.end()) {
        if (out.elements.size() >= cap) {
          throw Error(ErrorKind::ClosureExceedsCap,
                      "closure exceeds cap of " + std::to_string(cap) + " elements");
        }
        id = static_cast<Element>(out.elements.size());
        index.emplace(p.images(), id);
        out.elements.push_back(std::move(p));
        parent.emplace_back(static_cast<Element>(x), static_cast<std::uint32_t>(s));
      } else {
        id = it->second;
      }
      right.push_back(id);
    }
  }

  // x * y = (x * parent(y)) * gen(y), filled in breadth-first order of y.
  const std::size_t order = out.elements.size();
  std::vector<Element> mul(order * order);
  for (Element x = 0; x < order; ++x) mul[x * order] = x;
  for (Element y = 1; y < order; ++y) {
    const auto [py, s] = parent[y];
    for (Element x = 0; x < order; ++x) mul[x * order + y] = right[mul[x * order + py] * k + s];
  }
  out.group = FiniteGroup::from_table(order, std::move(mul), std::move(label));
  for (std::size_t j = 0; j < generators.size(); ++j) {
    out.generator_elements.push_back(index.at(gens[gen_slot[j]].images()));
  }
  return out;
}

/// The FiniteGroup generated by the given permutations.
inline FiniteGroup build_from_permutations(const std::vector<Permutation>& generators,
                                           std::size_t cap,
                                           std::optional<std::size_t> degree = std::nullopt,
                                           std::string label = "") {
  return close_permutations(generators, cap, degree, std::move(label)).group;
}

}  // namespace grouplab
