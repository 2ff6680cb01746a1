#pragma once

// Test-side oracles: definitional, brute-force implementations used to
// cross-check the library's reduction paths. They only read the category
// accessors and deliberately avoid the library's partition and axiom code.

#include <cstdint>
#include <vector>

#include "concentra/core.hpp"

namespace oracle {

using concentra::FinCategory;
using concentra::kNoMorphism;
using concentra::MorphismId;

inline std::vector<std::vector<MorphismId>> members_by_class(
    const std::vector<std::uint32_t>& class_of) {
  std::uint32_t count = 0;
  for (std::uint32_t c : class_of) count = std::max(count, c + 1);
  std::vector<std::vector<MorphismId>> members(count);
  for (MorphismId f = 0; f < class_of.size(); ++f) members[class_of[f]].push_back(f);
  return members;
}

inline bool identity_axiom(const FinCategory& cat, const std::vector<std::uint32_t>& class_of) {
  for (std::size_t a = 1; a < cat.object_count(); ++a) {
    if (class_of[cat.identity(a)] != class_of[cat.identity(0)]) return false;
  }
  return true;
}

inline bool composition_axiom(const FinCategory& cat,
                              const std::vector<std::uint32_t>& class_of) {
  const std::size_t n = cat.morphism_count();
  for (MorphismId f = 0; f < n; ++f) {
    for (MorphismId g = 0; g < n; ++g) {
      if (!cat.composable(f, g)) continue;
      for (MorphismId f2 = 0; f2 < n; ++f2) {
        if (class_of[f2] != class_of[f]) continue;
        for (MorphismId g2 = 0; g2 < n; ++g2) {
          if (class_of[g2] != class_of[g] || !cat.composable(f2, g2)) continue;
          if (class_of[cat.composite(f, g)] != class_of[cat.composite(f2, g2)]) return false;
        }
      }
    }
  }
  return true;
}

// Every class tuple of the given arity has a chain-composable tuple of
// representatives; decided by marking the class tuples of all composable
// morphism tuples.
inline bool k_existence(const FinCategory& cat, const std::vector<std::uint32_t>& class_of,
                        int arity) {
  const std::size_t n = cat.morphism_count();
  std::uint32_t classes = 0;
  for (std::uint32_t c : class_of) classes = std::max(classes, c + 1);
  std::size_t tuple_count = 1;
  for (int i = 0; i < arity; ++i) tuple_count *= classes;
  std::vector<bool> witnessed(tuple_count, false);

  std::vector<MorphismId> tuple(arity, 0);
  while (true) {
    bool composable = true;
    for (int i = 0; i + 1 < arity; ++i) {
      if (cat.src(tuple[i]) != cat.tgt(tuple[i + 1])) {
        composable = false;
        break;
      }
    }
    if (composable) {
      std::size_t key = 0;
      for (int i = 0; i < arity; ++i) key = key * classes + class_of[tuple[i]];
      witnessed[key] = true;
    }
    int pos = arity - 1;
    while (pos >= 0 && ++tuple[pos] == n) tuple[pos--] = 0;
    if (pos < 0) break;
  }
  for (bool w : witnessed) {
    if (!w) return false;
  }
  return true;
}

// The associativity axiom, quantified literally: for all f ~ f', g ~ g',
// h ~ h', m ~ f∘g, n ~ g'∘h' with f'∘n and m∘h defined, f'∘n ~ m∘h.
inline bool associativity_axiom(const FinCategory& cat,
                                const std::vector<std::uint32_t>& class_of) {
  const std::size_t n_mor = cat.morphism_count();
  auto members = members_by_class(class_of);
  for (MorphismId f = 0; f < n_mor; ++f) {
    for (MorphismId g = 0; g < n_mor; ++g) {
      if (!cat.composable(f, g)) continue;
      MorphismId fg = cat.composite(f, g);
      for (MorphismId f2 : members[class_of[f]]) {
        for (MorphismId g2 : members[class_of[g]]) {
          for (MorphismId h2 = 0; h2 < n_mor; ++h2) {
            if (!cat.composable(g2, h2)) continue;
            MorphismId g2h2 = cat.composite(g2, h2);
            for (MorphismId h : members[class_of[h2]]) {
              for (MorphismId m : members[class_of[fg]]) {
                if (!cat.composable(m, h)) continue;
                for (MorphismId n : members[class_of[g2h2]]) {
                  if (!cat.composable(f2, n)) continue;
                  if (class_of[cat.composite(f2, n)] != class_of[cat.composite(m, h)]) {
                    return false;
                  }
                }
              }
            }
          }
        }
      }
    }
  }
  return true;
}

inline bool is_concentration(const FinCategory& cat,
                             const std::vector<std::uint32_t>& class_of) {
  return identity_axiom(cat, class_of) && composition_axiom(cat, class_of) &&
         k_existence(cat, class_of, 2) && associativity_axiom(cat, class_of);
}

// All set partitions of {0..n-1} as restricted growth strings, in
// lexicographic order.
inline std::vector<std::vector<std::uint32_t>> all_partitions(std::size_t n) {
  std::vector<std::vector<std::uint32_t>> out;
  std::vector<std::uint32_t> rgs(n, 0);
  auto rec = [&](auto&& self, std::size_t pos, std::uint32_t max_used) -> void {
    if (pos == n) {
      out.push_back(rgs);
      return;
    }
    for (std::uint32_t c = 0; c <= max_used + 1; ++c) {
      rgs[pos] = c;
      self(self, pos + 1, std::max(max_used, c));
    }
  };
  if (n > 0) rec(rec, 1, 0);
  return out;
}

}  // namespace oracle
