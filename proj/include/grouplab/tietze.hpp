#pragma once

// Generator elimination by short relators (a restricted Tietze pass).
//
// Relators of length one kill a generator and relators of length two
// identify one generator with another or its inverse. The pass repeats until
// no short relator is left, so chains of identifications collapse fully.

#include <numeric>
#include <vector>

#include "grouplab/presentation.hpp"

namespace grouplab {

struct GeneratorElimination {
  Presentation reduced;
  /// substitution[g] expresses original generator g in the reduced
  /// generators; it is empty (trivial) or a single letter.
  std::vector<Word> substitution;
};

inline GeneratorElimination eliminate_generators(const Presentation& p) {
  p.validate();
  const std::size_t n = p.num_generators;
  // target[g] = letter (in original numbering) that g equals; 0 = trivial.
  std::vector<Letter> target(n);
  for (std::size_t g = 0; g < n; ++g) target[g] = generator_letter(g);

  auto resolve = [&](Letter l) {
    // Follow identifications until a fixed point, tracking the sign.
    int sign = l > 0 ? 1 : -1;
    std::size_t g = generator_of(l);
    while (true) {
      const Letter t = target[g];
      if (t == 0) return Letter{0};
      if (t == generator_letter(g)) return static_cast<Letter>(sign * t);
      sign *= t > 0 ? 1 : -1;
      g = generator_of(t);
    }
  };
  auto substitute = [&](const Word& w) {
    Word out;
    for (Letter l : w) {
      const Letter r = resolve(l);
      if (r != 0) out.push_back(r);
    }
    return cyclically_reduce(out);
  };

  std::vector<Word> relators = p.relators;
  bool changed = true;
  while (changed) {
    changed = false;
    for (auto& r : relators) {
      r = substitute(r);
      if (r.size() == 1) {
        target[generator_of(r[0])] = 0;
        changed = true;
      } else if (r.size() == 2 && generator_of(r[0]) != generator_of(r[1])) {
        // r0 r1 = 1, so the larger generator is expressed by the smaller one.
        Letter a = r[0], b = r[1];
        if (generator_of(a) < generator_of(b)) std::swap(a, b);
        // a = b⁻¹ in either order because r0 r1 = 1 iff r1 r0 = 1.
        const Letter value = a > 0 ? -b : b;
        target[generator_of(a)] = value;
        changed = true;
      }
      if (changed) r = substitute(r);
    }
  }

  std::vector<std::size_t> renumber(n, n);
  std::size_t kept = 0;
  for (std::size_t g = 0; g < n; ++g) {
    if (target[g] == generator_letter(g)) renumber[g] = kept++;
  }
  GeneratorElimination out;
  out.reduced.num_generators = kept;
  out.reduced.label = p.label;
  auto relabel_word = [&](const Word& w) {
    Word out_word;
    for (Letter l : w) {
      const std::size_t g = renumber[generator_of(l)];
      out_word.push_back(l > 0 ? generator_letter(g) : inverse_letter(g));
    }
    return out_word;
  };
  std::vector<Word> reduced_relators;
  for (const auto& r : relators) {
    Word s = substitute(r);
    if (!s.empty()) reduced_relators.push_back(relabel_word(s));
  }
  out.reduced.relators = normalize_relators(reduced_relators);
  out.substitution.resize(n);
  for (std::size_t g = 0; g < n; ++g) {
    const Letter r = resolve(generator_letter(g));
    if (r != 0) out.substitution[g] = relabel_word(Word{r});
  }
  return out;
}

}  // namespace grouplab
