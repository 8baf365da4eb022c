#pragma once

// Todd-Coxeter coset enumeration (HLT and Felsch definition strategies).
//
// Columns of the table are 2g for generator g and 2g+1 for its inverse.
// The working table is organised as in Holt's Handbook: a forwarding array
// marks dead cosets, coincidences are processed through a queue, and dead
// rows are compacted away once they dominate the table.

#include <algorithm>
#include <cstdint>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "grouplab/error.hpp"
#include "grouplab/presentation.hpp"

namespace grouplab {

inline constexpr std::size_t kDefaultMaxCosets = 1'000'000;

enum class Strategy {
  Hlt,     ///< scan every relator from each coset, defining as needed
  Felsch,  ///< define the first gap, then process all consequences
};

struct EnumerationOptions {
  Strategy strategy = Strategy::Hlt;
  /// Bound on the number of cosets ever defined (dead ones included).
  std::size_t max_cosets = kDefaultMaxCosets;
};

/// A closed, compacted and standardized coset table. Coset 0 is the
/// subgroup; entry(c, col) is the coset c·x for column x.
struct CosetTable {
  std::size_t num_generators = 0;
  std::size_t num_cosets = 0;
  std::vector<std::int32_t> entries;
  bool trivial_subgroup = true;
  std::size_t cosets_defined = 0;

  std::size_t width() const noexcept { return 2 * num_generators; }
  std::int32_t entry(std::size_t coset, std::size_t column) const {
    return entries[coset * width() + column];
  }
  static std::size_t column_of(Letter l) { return 2 * generator_of(l) + (l < 0 ? 1 : 0); }
  std::int32_t act(std::size_t coset, Letter l) const { return entry(coset, column_of(l)); }

  friend bool operator==(const CosetTable&, const CosetTable&) = default;
};

/// True when every entry is defined, every column pair is mutually inverse
/// and every relator traces from every coset back to itself.
inline bool is_closed_for(const CosetTable& t, const Presentation& p) {
  if (t.num_generators != p.num_generators || t.entries.size() != t.num_cosets * t.width()) return false;
  for (std::size_t c = 0; c < t.num_cosets; ++c) {
    for (std::size_t x = 0; x < t.width(); ++x) {
      const auto d = t.entry(c, x);
      if (d < 0 || static_cast<std::size_t>(d) >= t.num_cosets) return false;
      if (t.entry(static_cast<std::size_t>(d), x ^ 1) != static_cast<std::int32_t>(c)) return false;
    }
  }
  for (const auto& r : p.relators) {
    for (std::size_t c = 0; c < t.num_cosets; ++c) {
      std::size_t d = c;
      for (Letter l : r) d = static_cast<std::size_t>(t.act(d, l));
      if (d != c) return false;
    }
  }
  return true;
}

namespace detail {

class CosetEnumerator {
 public:
  using Coset = std::int32_t;
  static constexpr Coset kNone = -1;

  CosetEnumerator(const Presentation& p, const std::vector<Word>& subgroup_words,
                  const EnumerationOptions& options)
      : width_(2 * p.num_generators), options_(options) {
    p.validate();
    if (options.max_cosets == 0) throw Error(ErrorKind::InvalidArgument, "max_cosets must be positive");
    for (const auto& r : normalize_relators(p.relators)) relators_.push_back(to_columns(r));
    for (const auto& w : subgroup_words) {
      Word reduced = free_reduce(w);
      for (Letter l : reduced) {
        if (l == 0 || generator_of(l) >= p.num_generators) {
          throw Error(ErrorKind::ValidationError, "subgroup word uses an unknown generator");
        }
      }
      if (!reduced.empty()) subgroup_.push_back(to_columns(reduced));
    }
    if (options.strategy == Strategy::Felsch) index_conjugates();
  }

  CosetTable run() {
    new_coset();
    for (const auto& w : subgroup_) scan_and_fill(0, w);
    if (felsch()) process_deductions();

    for (Coset c = 0; c < static_cast<Coset>(rows_); ++c) {
      maybe_compact(c);
      if (c >= static_cast<Coset>(rows_)) break;
      if (felsch()) {
        for (std::size_t x = 0; x < width_ && live(c); ++x) {
          if (at(c, x) == kNone) {
            define(c, x);
            process_deductions();
          }
        }
      } else {
        for (const auto& r : relators_) {
          if (!live(c)) break;
          scan_and_fill(c, r);
        }
        for (std::size_t x = 0; x < width_ && live(c); ++x) {
          if (at(c, x) == kNone) define(c, x);
        }
      }
    }
    compact();
    return standardized();
  }

 private:
  bool felsch() const { return options_.strategy == Strategy::Felsch; }
  bool live(Coset c) const { return forward_[static_cast<std::size_t>(c)] == c; }
  Coset& at(Coset c, std::size_t x) { return cells_[static_cast<std::size_t>(c) * width_ + x]; }

  std::vector<std::uint32_t> to_columns(const Word& w) const {
    std::vector<std::uint32_t> out;
    out.reserve(w.size());
    for (Letter l : w) out.push_back(static_cast<std::uint32_t>(CosetTable::column_of(l)));
    return out;
  }

  // All rotations of relators and their inverses, grouped by first column.
  void index_conjugates() {
    std::set<std::vector<std::uint32_t>> conjugates;
    for (const auto& r : relators_) {
      const std::vector<std::uint32_t>* fwd = &r;
      std::vector<std::uint32_t> inv(r.rbegin(), r.rend());
      for (auto& x : inv) x ^= 1;
      const std::vector<std::uint32_t>* bwd = &inv;
      for (const auto* w : {fwd, bwd}) {
        for (std::size_t k = 0; k < w->size(); ++k) {
          std::vector<std::uint32_t> rot(w->begin() + static_cast<std::ptrdiff_t>(k), w->end());
          rot.insert(rot.end(), w->begin(), w->begin() + static_cast<std::ptrdiff_t>(k));
          conjugates.insert(std::move(rot));
        }
      }
    }
    by_first_.assign(width_, {});
    for (const auto& w : conjugates) {
      by_first_[w.front()].emplace_back(static_cast<std::uint32_t>(flat_.size()),
                                        static_cast<std::uint32_t>(w.size()));
      flat_.insert(flat_.end(), w.begin(), w.end());
    }
  }

  Coset new_coset() {
    if (defined_ >= options_.max_cosets) {
      throw Error(ErrorKind::CosetLimitExceeded,
                  "coset enumeration defined " + std::to_string(defined_) +
                      " cosets without closing (max_cosets = " + std::to_string(options_.max_cosets) +
                      ")");
    }
    const auto c = static_cast<Coset>(rows_);
    cells_.resize(cells_.size() + width_, kNone);
    forward_.push_back(c);
    ++rows_;
    ++live_;
    ++defined_;
    return c;
  }

  void define(Coset c, std::size_t x) {
    const Coset d = new_coset();
    at(c, x) = d;
    at(d, x ^ 1) = c;
    if (felsch()) deductions_.emplace_back(c, x);
  }

  Coset rep(Coset k) {
    Coset r = k;
    while (forward_[static_cast<std::size_t>(r)] != r) r = forward_[static_cast<std::size_t>(r)];
    while (forward_[static_cast<std::size_t>(k)] != r) {
      const Coset next = forward_[static_cast<std::size_t>(k)];
      forward_[static_cast<std::size_t>(k)] = r;
      k = next;
    }
    return r;
  }

  void merge(Coset k, Coset l) {
    const Coset a = rep(k), b = rep(l);
    if (a == b) return;
    const Coset mu = std::min(a, b), nu = std::max(a, b);
    forward_[static_cast<std::size_t>(nu)] = mu;
    --live_;
    queue_.push_back(nu);
  }

  void coincidence(Coset a, Coset b) {
    queue_.clear();
    merge(a, b);
    for (std::size_t i = 0; i < queue_.size(); ++i) {
      const Coset g = queue_[i];
      for (std::size_t x = 0; x < width_; ++x) {
        const Coset d = at(g, x);
        if (d == kNone) continue;
        at(d, x ^ 1) = kNone;
        const Coset mu = rep(g), nu = rep(d);
        if (at(mu, x) != kNone) {
          merge(nu, at(mu, x));
        } else if (at(nu, x ^ 1) != kNone) {
          merge(mu, at(nu, x ^ 1));
        } else {
          at(mu, x) = nu;
          at(nu, x ^ 1) = mu;
          if (felsch()) deductions_.emplace_back(mu, x);
        }
      }
    }
  }

  template <bool Fill>
  void scan_impl(Coset c, const std::uint32_t* w, std::size_t len) {
    Coset f = c, b = c;
    std::ptrdiff_t i = 0, j = static_cast<std::ptrdiff_t>(len) - 1;
    while (true) {
      while (i <= j && at(f, w[i]) != kNone) f = at(f, w[i++]);
      if (i > j) {
        if (f != c) coincidence(f, c);
        return;
      }
      while (j >= i && at(b, w[j] ^ 1) != kNone) b = at(b, w[j--] ^ 1);
      if (j < i) {
        coincidence(f, b);
        return;
      }
      if (i == j) {
        at(f, w[i]) = b;
        at(b, w[i] ^ 1) = f;
        if (felsch()) deductions_.emplace_back(f, w[i]);
        return;
      }
      if constexpr (!Fill) return;
      define(f, w[i]);
    }
  }

  void scan_and_fill(Coset c, const std::vector<std::uint32_t>& w) {
    scan_impl<true>(c, w.data(), w.size());
  }

  void process_deductions() {
    while (!deductions_.empty()) {
      const auto [c, x] = deductions_.back();
      deductions_.pop_back();
      if (!live(c)) continue;
      for (const auto& [offset, len] : by_first_[x]) {
        if (!live(c)) break;
        scan_impl<false>(c, flat_.data() + offset, len);
      }
      if (!live(c)) continue;
      const Coset d = at(c, x);
      if (d == kNone) continue;
      for (const auto& [offset, len] : by_first_[x ^ 1]) {
        if (!live(d)) break;
        scan_impl<false>(d, flat_.data() + offset, len);
      }
    }
  }

  void maybe_compact(Coset& c) {
    if (rows_ < 4096 || 2 * live_ > rows_) return;
    Coset below = 0;
    for (Coset k = 0; k < c; ++k) below += live(k) ? 1 : 0;
    compact();
    c = below;
  }

  // Drops dead rows; live rows keep their relative order. Requires that no
  // coincidence or deduction is pending.
  void compact() {
    std::vector<Coset> renumber(rows_, kNone);
    Coset next = 0;
    for (std::size_t k = 0; k < rows_; ++k) {
      if (live(static_cast<Coset>(k))) renumber[k] = next++;
    }
    for (std::size_t k = 0; k < rows_; ++k) {
      if (renumber[k] == kNone) continue;
      const std::size_t to = static_cast<std::size_t>(renumber[k]) * width_;
      const std::size_t from = k * width_;
      for (std::size_t x = 0; x < width_; ++x) {
        const Coset e = cells_[from + x];
        cells_[to + x] = e == kNone ? kNone : renumber[static_cast<std::size_t>(e)];
      }
    }
    rows_ = static_cast<std::size_t>(next);
    cells_.resize(rows_ * width_);
    forward_.resize(rows_);
    for (std::size_t k = 0; k < rows_; ++k) forward_[k] = static_cast<Coset>(k);
  }

  CosetTable standardized() {
    CosetTable t;
    t.num_generators = width_ / 2;
    t.num_cosets = rows_;
    t.trivial_subgroup = subgroup_.empty();
    t.cosets_defined = defined_;
    std::vector<Coset> order{0};
    std::vector<Coset> renumber(rows_, kNone);
    renumber[0] = 0;
    for (std::size_t i = 0; i < order.size(); ++i) {
      for (std::size_t x = 0; x < width_; ++x) {
        const Coset d = at(order[i], x);
        if (d == kNone) {
          throw Error(ErrorKind::TableNotClosed, "enumeration finished with an undefined entry");
        }
        if (renumber[static_cast<std::size_t>(d)] == kNone) {
          renumber[static_cast<std::size_t>(d)] = static_cast<Coset>(order.size());
          order.push_back(d);
        }
      }
    }
    t.entries.resize(rows_ * width_);
    for (std::size_t k = 0; k < rows_; ++k) {
      const std::size_t row = static_cast<std::size_t>(renumber[k]) * width_;
      for (std::size_t x = 0; x < width_; ++x) {
        t.entries[row + x] = renumber[static_cast<std::size_t>(at(static_cast<Coset>(k), x))];
      }
    }
    return t;
  }

  std::size_t width_;
  EnumerationOptions options_;
  std::vector<std::vector<std::uint32_t>> relators_;
  std::vector<std::vector<std::uint32_t>> subgroup_;
  std::vector<std::vector<std::pair<std::uint32_t, std::uint32_t>>> by_first_;
  std::vector<std::uint32_t> flat_;

  std::vector<Coset> cells_;
  std::vector<Coset> forward_;
  std::size_t rows_ = 0;
  std::size_t live_ = 0;
  std::size_t defined_ = 0;
  std::vector<std::pair<Coset, std::size_t>> deductions_;
  std::vector<Coset> queue_;
};

}  // namespace detail

/// Enumerates the cosets of the subgroup generated by `subgroup_words`.
/// With no subgroup words the result has one coset per group element.
inline CosetTable todd_coxeter(const Presentation& p, const std::vector<Word>& subgroup_words = {},
                               const EnumerationOptions& options = {}) {
  return detail::CosetEnumerator(p, subgroup_words, options).run();
}

}  // namespace grouplab
