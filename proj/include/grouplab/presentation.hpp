#pragma once

// Finitely presented groups.
//
// A word is a sequence of nonzero letters: letter k > 0 is generator k-1 and
// letter -k is its inverse (1-based so that every generator has a signed
// form).

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <string>
#include <vector>

#include "grouplab/error.hpp"

namespace grouplab {

using Letter = std::int32_t;
using Word = std::vector<Letter>;

inline Letter generator_letter(std::size_t generator) { return static_cast<Letter>(generator + 1); }
inline Letter inverse_letter(std::size_t generator) { return -static_cast<Letter>(generator + 1); }
inline std::size_t generator_of(Letter l) { return static_cast<std::size_t>(std::abs(l)) - 1; }

inline Word inverse(const Word& w) {
  Word out(w.rbegin(), w.rend());
  for (auto& l : out) l = -l;
  return out;
}

/// Cancels adjacent inverse pairs.
inline Word free_reduce(const Word& w) {
  Word out;
  for (Letter l : w) {
    if (!out.empty() && out.back() == -l) {
      out.pop_back();
    } else {
      out.push_back(l);
    }
  }
  return out;
}

/// Free reduction followed by cancelling inverse letters at the two ends.
inline Word cyclically_reduce(const Word& w) {
  Word r = free_reduce(w);
  std::size_t lo = 0, hi = r.size();
  while (hi - lo >= 2 && r[lo] == -r[hi - 1]) {
    ++lo;
    --hi;
  }
  return Word(r.begin() + static_cast<std::ptrdiff_t>(lo), r.begin() + static_cast<std::ptrdiff_t>(hi));
}

/// Representative of the class of a cyclically reduced word under rotation
/// and inversion: the lexicographically least rotation of w or w⁻¹.
inline Word canonical_relator(const Word& w) {
  Word best = w;
  for (const Word& v : {w, inverse(w)}) {
    for (std::size_t r = 0; r < v.size(); ++r) {
      Word rot(v.begin() + static_cast<std::ptrdiff_t>(r), v.end());
      rot.insert(rot.end(), v.begin(), v.begin() + static_cast<std::ptrdiff_t>(r));
      if (rot < best) best = std::move(rot);
    }
  }
  return best;
}

struct Presentation {
  std::size_t num_generators = 0;
  std::vector<Word> relators;
  std::string label;

  /// Throws ValidationError if a letter is zero or names a missing generator.
  void validate() const {
    for (std::size_t i = 0; i < relators.size(); ++i) {
      for (Letter l : relators[i]) {
        if (l == 0 || generator_of(l) >= num_generators) {
          throw Error(ErrorKind::ValidationError,
                      "relator " + std::to_string(i) + " uses letter " + std::to_string(l) +
                          " outside 1.." + std::to_string(num_generators));
        }
      }
    }
  }

  friend bool operator==(const Presentation&, const Presentation&) = default;
};

/// Cyclically reduces every relator, drops empty ones, removes duplicates up
/// to rotation and inversion, and orders the rest by (length, letters).
inline std::vector<Word> normalize_relators(const std::vector<Word>& relators) {
  std::vector<Word> out;
  out.reserve(relators.size());
  for (const auto& r : relators) {
    Word c = cyclically_reduce(r);
    if (!c.empty()) out.push_back(canonical_relator(c));
  }
  std::sort(out.begin(), out.end(), [](const Word& a, const Word& b) {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
  });
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace grouplab
