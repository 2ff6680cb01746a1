#include "concentra/concentration.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace concentra {

namespace {

void require(bool cond, const std::string& message) {
  if (!cond) throw std::invalid_argument(message);
}

void canonicalize(MorphismPartition& part) {
  for (auto& cls : part.classes) std::sort(cls.begin(), cls.end());
  std::sort(part.classes.begin(), part.classes.end(),
            [](const auto& a, const auto& b) { return a.front() < b.front(); });
  for (std::uint32_t c = 0; c < part.classes.size(); ++c) {
    for (MorphismId f : part.classes[c]) part.class_of[f] = c;
  }
}

}  // namespace

MorphismPartition partition_from_classes(std::size_t morphism_count,
                                         std::vector<std::vector<MorphismId>> classes) {
  MorphismPartition part;
  part.classes = std::move(classes);
  part.class_of.assign(morphism_count, static_cast<std::uint32_t>(-1));
  std::size_t covered = 0;
  for (std::uint32_t c = 0; c < part.classes.size(); ++c) {
    require(!part.classes[c].empty(), "partition contains an empty class");
    for (MorphismId f : part.classes[c]) {
      require(f < morphism_count, "partition references a morphism out of range");
      require(part.class_of[f] == static_cast<std::uint32_t>(-1),
              "partition classes are not disjoint");
      part.class_of[f] = c;
      ++covered;
    }
  }
  require(covered == morphism_count, "partition classes do not cover the morphism set");
  canonicalize(part);
  return part;
}

MorphismPartition partition_from_class_of(std::vector<std::uint32_t> class_of) {
  std::uint32_t n_classes = 0;
  for (std::uint32_t c : class_of) n_classes = std::max(n_classes, c + 1);
  MorphismPartition part;
  part.class_of = std::move(class_of);
  part.classes.resize(n_classes);
  for (MorphismId f = 0; f < part.class_of.size(); ++f) {
    part.classes[part.class_of[f]].push_back(f);
  }
  for (const auto& cls : part.classes) {
    require(!cls.empty(), "class assignment skips a class index");
  }
  canonicalize(part);
  return part;
}

void require_consistent(const FinCategory& cat, const MorphismPartition& part) {
  require(part.class_of.size() == cat.morphism_count(),
          "partition size differs from the morphism count");
  std::vector<std::uint32_t> seen(part.classes.size(), 0);
  for (std::uint32_t c = 0; c < part.classes.size(); ++c) {
    for (MorphismId f : part.classes[c]) {
      require(f < cat.morphism_count() && part.class_of[f] == c,
              "partition classes and class assignment disagree");
    }
    seen[c] = static_cast<std::uint32_t>(part.classes[c].size());
  }
  std::size_t total = 0;
  for (std::uint32_t s : seen) total += s;
  require(total == cat.morphism_count(), "partition classes do not cover the morphism set");
}

MorphismPartition trivial_concentration(const FinCategory& cat) {
  std::vector<std::uint32_t> class_of(cat.morphism_count(), 0);
  if (class_of.empty()) return MorphismPartition{};
  return partition_from_class_of(std::move(class_of));
}

MorphismPartition discrete_partition(const FinCategory& cat) {
  std::vector<std::uint32_t> class_of(cat.morphism_count());
  for (MorphismId f = 0; f < class_of.size(); ++f) class_of[f] = f;
  if (class_of.empty()) return MorphismPartition{};
  return partition_from_class_of(std::move(class_of));
}

Verdict AxiomReport::existence_at(int arity) const {
  for (const ExistenceCheck& e : existence) {
    if (e.arity == arity) return e.verdict;
  }
  return Verdict::kNotEvaluated;
}

bool AxiomReport::is_concentration() const {
  return identity_axiom == Verdict::kPass && composition_axiom == Verdict::kPass &&
         existence_at(2) == Verdict::kPass && associativity_axiom == Verdict::kPass;
}

bool AxiomReport::is_n_concentration(int arity) const {
  return identity_axiom == Verdict::kPass && composition_axiom == Verdict::kPass &&
         existence_at(arity) == Verdict::kPass;
}

namespace {

// Composable pairs of representatives exist for every class tuple of the
// given arity; on failure returns the first failing tuple in lexicographic
// class order.
std::optional<std::vector<std::uint32_t>> existence_counterexample(const FinCategory& cat,
                                                                   const MorphismPartition& part,
                                                                   int arity) {
  const std::size_t n_classes = part.class_count();
  if (n_classes == 0) return std::nullopt;  // vacuous on the empty category
  std::vector<std::uint32_t> tuple(arity, 0);
  // reach[i] holds the possible targets of the composite tail starting at
  // position i, given the class choices of tuple[i..].
  std::vector<char> reach(cat.object_count());
  std::vector<char> next(cat.object_count());
  while (true) {
    std::fill(reach.begin(), reach.end(), 0);
    for (MorphismId f : part.classes[tuple[arity - 1]]) reach[cat.tgt(f)] = 1;
    bool feasible = true;
    for (int i = arity - 2; i >= 0; --i) {
      std::fill(next.begin(), next.end(), 0);
      bool any = false;
      for (MorphismId f : part.classes[tuple[i]]) {
        if (reach[cat.src(f)]) {
          next[cat.tgt(f)] = 1;
          any = true;
        }
      }
      if (!any) {
        feasible = false;
        break;
      }
      std::swap(reach, next);
    }
    if (!feasible) return tuple;
    int pos = arity - 1;
    while (pos >= 0 && ++tuple[pos] == n_classes) tuple[pos--] = 0;
    if (pos < 0) return std::nullopt;
  }
}

}  // namespace

AxiomReport check_concentration(const FinCategory& cat, const MorphismPartition& part,
                                int max_n) {
  require(max_n >= 2, "max_n must be at least 2");
  require_consistent(cat, part);

  AxiomReport report;

  // Identity axiom.
  report.identity_axiom = Verdict::kPass;
  if (cat.object_count() > 0) {
    MorphismId first = cat.identity(0);
    for (ObjectId a = 1; a < cat.object_count(); ++a) {
      MorphismId id = cat.identity(a);
      if (!part.related(first, id)) {
        report.identity_axiom = Verdict::kFail;
        report.identity_witness = {first, id};
        break;
      }
    }
  }

  // Composition axiom: the class of f∘g depends only on the classes of f, g.
  report.composition_axiom = Verdict::kPass;
  {
    std::map<std::pair<std::uint32_t, std::uint32_t>, std::array<MorphismId, 3>> seen;
    for (MorphismId f = 0; f < cat.morphism_count() && report.composition_axiom == Verdict::kPass;
         ++f) {
      for (MorphismId g = 0; g < cat.morphism_count(); ++g) {
        if (!cat.composable(f, g)) continue;
        MorphismId fg = cat.composite(f, g);
        auto key = std::make_pair(part.class_of[f], part.class_of[g]);
        auto [it, inserted] = seen.emplace(key, std::array<MorphismId, 3>{f, g, fg});
        if (!inserted && part.class_of[it->second[2]] != part.class_of[fg]) {
          report.composition_axiom = Verdict::kFail;
          report.composition_witness = {it->second[0], it->second[1], f, g};
          break;
        }
      }
    }
  }

  for (int arity = 2; arity <= max_n; ++arity) {
    ExistenceCheck check;
    check.arity = arity;
    if (auto witness = existence_counterexample(cat, part, arity)) {
      check.verdict = Verdict::kFail;
      check.witness_classes = *witness;
    } else {
      check.verdict = Verdict::kPass;
    }
    report.existence.push_back(std::move(check));
  }

  // Associativity via the induced class-level multiplication; only valid when
  // the composition axiom and 2-existence hold.
  if (report.composition_axiom == Verdict::kPass && report.existence_at(2) == Verdict::kPass) {
    std::vector<std::uint32_t> mu = class_multiplication(cat, part);
    const std::size_t k = part.class_count();
    report.associativity_axiom = Verdict::kPass;
    for (std::uint32_t a = 0; a < k && report.associativity_axiom == Verdict::kPass; ++a) {
      for (std::uint32_t b = 0; b < k && report.associativity_axiom == Verdict::kPass; ++b) {
        for (std::uint32_t c = 0; c < k; ++c) {
          if (mu[mu[a * k + b] * k + c] != mu[a * k + mu[b * k + c]]) {
            report.associativity_axiom = Verdict::kFail;
            report.associativity_witness = {a, b, c};
            break;
          }
        }
      }
    }
  }

  return report;
}

std::vector<std::uint32_t> class_multiplication(const FinCategory& cat,
                                                const MorphismPartition& part) {
  require_consistent(cat, part);
  const std::size_t k = part.class_count();
  std::vector<std::uint32_t> mu(k * k, static_cast<std::uint32_t>(-1));
  for (std::uint32_t a = 0; a < k; ++a) {
    for (std::uint32_t b = 0; b < k; ++b) {
      for (MorphismId f : part.classes[a]) {
        for (MorphismId g : part.classes[b]) {
          if (!cat.composable(f, g)) continue;
          mu[a * k + b] = part.class_of[cat.composite(f, g)];
          goto next_pair;
        }
      }
      throw std::invalid_argument(
          "class multiplication undefined: no composable representatives for a class pair");
    next_pair:;
    }
  }
  return mu;
}

std::optional<Axiom4Counterexample> axiom4_counterexample(const FinCategory& cat,
                                                          const MorphismPartition& part,
                                                          std::size_t max_morphisms) {
  require_consistent(cat, part);
  if (cat.morphism_count() > max_morphisms) {
    std::ostringstream os;
    os << "exhaustive associativity check refused: " << cat.morphism_count()
       << " morphisms exceed the bound " << max_morphisms;
    throw std::invalid_argument(os.str());
  }

  std::vector<std::pair<MorphismId, MorphismId>> composable;
  for (MorphismId f = 0; f < cat.morphism_count(); ++f) {
    for (MorphismId g = 0; g < cat.morphism_count(); ++g) {
      if (cat.composable(f, g)) composable.emplace_back(f, g);
    }
  }

  for (auto [f, g] : composable) {
    const std::uint32_t m_class = part.class_of[cat.composite(f, g)];
    for (auto [g2, h2] : composable) {  // g2 plays g', h2 plays h'
      if (part.class_of[g2] != part.class_of[g]) continue;
      const std::uint32_t n_class = part.class_of[cat.composite(g2, h2)];
      // The axiom relates every defined f'∘n to every defined m∘h; a clash
      // inside one side alone is vacuous while the other side is empty.
      std::map<std::uint32_t, std::pair<MorphismId, MorphismId>> left;   // class -> (f', n)
      std::map<std::uint32_t, std::pair<MorphismId, MorphismId>> right;  // class -> (m, h)
      for (MorphismId f2 : part.classes[part.class_of[f]]) {
        for (MorphismId n : part.classes[n_class]) {
          if (!cat.composable(f2, n)) continue;
          left.emplace(part.class_of[cat.composite(f2, n)], std::make_pair(f2, n));
        }
      }
      for (MorphismId m : part.classes[m_class]) {
        for (MorphismId h : part.classes[part.class_of[h2]]) {
          if (!cat.composable(m, h)) continue;
          right.emplace(part.class_of[cat.composite(m, h)], std::make_pair(m, h));
        }
      }
      if (left.empty() || right.empty()) continue;
      for (const auto& [left_class, left_pair] : left) {
        for (const auto& [right_class, right_pair] : right) {
          if (left_class != right_class) {
            return Axiom4Counterexample{{f, left_pair.first, g, g2, right_pair.second, h2,
                                         right_pair.first, left_pair.second}};
          }
        }
      }
    }
  }
  return std::nullopt;
}

PreservationCheck is_concentration_preserving(const FunctorData& fun,
                                              const MorphismPartition& source_part,
                                              const MorphismPartition& target_part) {
  require(check_functor(fun).ok, "is_concentration_preserving requires a valid functor");
  require_consistent(*fun.source, source_part);
  require_consistent(*fun.target, target_part);
  for (const auto& cls : source_part.classes) {
    std::uint32_t image_class = target_part.class_of[fun.mor_map[cls.front()]];
    for (MorphismId f : cls) {
      if (target_part.class_of[fun.mor_map[f]] != image_class) {
        return PreservationCheck{false, std::make_pair(cls.front(), f)};
      }
    }
  }
  return PreservationCheck{true, std::nullopt};
}

bool is_concentration_isomorphism(const FunctorData& fun, const MorphismPartition& source_part,
                                  const MorphismPartition& target_part) {
  auto inverse = strong_inverse(fun);
  if (!inverse) return false;
  return is_concentration_preserving(fun, source_part, target_part).preserving &&
         is_concentration_preserving(*inverse, target_part, source_part).preserving;
}

namespace {

template <typename Fn>
void for_each_growth_string(std::vector<std::uint32_t>& rgs, std::size_t pos,
                            std::uint32_t max_used, Fn&& fn) {
  if (pos == rgs.size()) {
    fn(rgs);
    return;
  }
  for (std::uint32_t c = 0; c <= max_used + 1; ++c) {
    rgs[pos] = c;
    for_each_growth_string(rgs, pos + 1, std::max(max_used, c), fn);
  }
}

}  // namespace

std::vector<MorphismPartition> enumerate_concentrations(const FinCategory& cat,
                                                        std::size_t max_morphisms) {
  const std::size_t n = cat.morphism_count();
  if (n > max_morphisms) {
    std::ostringstream os;
    os << "enumeration refused: " << n << " morphisms exceed the bound " << max_morphisms;
    throw std::invalid_argument(os.str());
  }
  std::vector<MorphismPartition> found;
  if (n == 0) return found;
  std::vector<std::uint32_t> rgs(n, 0);
  for_each_growth_string(rgs, 1, 0, [&](const std::vector<std::uint32_t>& assignment) {
    MorphismPartition part = partition_from_class_of(assignment);
    if (check_concentration(cat, part, 2).is_concentration()) {
      found.push_back(std::move(part));
    }
  });
  return found;
}

}  // namespace concentra
