#pragma once

#include <array>
#include <optional>
#include <utility>
#include <vector>

#include "concentra/core.hpp"

namespace concentra {

/// Equivalence relation on the morphism set of a category, stored both as a
/// class assignment and as an explicit class list. Canonical form: every
/// class is sorted ascending and classes are ordered by their smallest
/// member, so equal relations compare equal.
struct MorphismPartition {
  std::vector<std::uint32_t> class_of;
  std::vector<std::vector<MorphismId>> classes;

  std::size_t class_count() const { return classes.size(); }
  bool related(MorphismId f, MorphismId g) const { return class_of[f] == class_of[g]; }
  bool operator==(const MorphismPartition&) const = default;
};

MorphismPartition partition_from_classes(std::size_t morphism_count,
                                         std::vector<std::vector<MorphismId>> classes);
MorphismPartition partition_from_class_of(std::vector<std::uint32_t> class_of);

/// Throws std::invalid_argument when the partition does not describe an
/// equivalence relation on the morphism set of cat.
void require_consistent(const FinCategory& cat, const MorphismPartition& part);

/// One class containing every morphism.
MorphismPartition trivial_concentration(const FinCategory& cat);

/// Singleton classes. On a one-object category this is always a
/// concentration structure; elsewhere the caller is responsible for running
/// check_concentration before treating it as one.
MorphismPartition discrete_partition(const FinCategory& cat);

enum class Verdict { kPass, kFail, kNotEvaluated };

struct ExistenceCheck {
  int arity = 2;
  Verdict verdict = Verdict::kNotEvaluated;
  std::vector<std::uint32_t> witness_classes;  // failing class tuple
};

/// Outcome of checking the concentration axioms on (cat, part).
///
/// The associativity axiom is decided through the induced class-level
/// multiplication mu([f],[g]) = [f'∘g'], which exists exactly when the
/// composition axiom and 2-existence hold; when either of those fails the
/// associativity verdict is kNotEvaluated rather than guessed.
struct AxiomReport {
  Verdict identity_axiom = Verdict::kNotEvaluated;
  std::optional<std::pair<MorphismId, MorphismId>> identity_witness;

  Verdict composition_axiom = Verdict::kNotEvaluated;
  // f, g, f', g' with f ~ f', g ~ g' and class(f∘g) != class(f'∘g')
  std::optional<std::array<MorphismId, 4>> composition_witness;

  std::vector<ExistenceCheck> existence;  // arities 2..max_n in order

  Verdict associativity_axiom = Verdict::kNotEvaluated;
  std::optional<std::array<std::uint32_t, 3>> associativity_witness;  // class triple

  Verdict existence_at(int arity) const;
  bool is_concentration() const;
  bool is_n_concentration(int arity) const;
};

/// Checks the identity and composition axioms, k-existence for
/// 2 <= k <= max_n, and the associativity axiom of (cat, part).
AxiomReport check_concentration(const FinCategory& cat, const MorphismPartition& part,
                                int max_n = 2);

/// Class-level multiplication table (class_count^2, row-major). Requires the
/// composition axiom and 2-existence; used to build concentration monoids.
std::vector<std::uint32_t> class_multiplication(const FinCategory& cat,
                                                const MorphismPartition& part);

/// Exhaustive witness-level check of the associativity axiom, quantifying
/// over all tuples (f, f', g, g', h, h', m, n) of the definition. The
/// hypothesis "m ~ f∘g" is evaluated over composable representative pairs of
/// the classes of f and g, so the particular f∘g need not exist. Only
/// intended for cross-validation on tiny categories; refuses above the
/// morphism bound.
struct Axiom4Counterexample {
  // f, f', g, g', h, h', m, n as in the axiom statement
  std::array<MorphismId, 8> tuple;
};
std::optional<Axiom4Counterexample> axiom4_counterexample(const FinCategory& cat,
                                                          const MorphismPartition& part,
                                                          std::size_t max_morphisms = 8);

struct PreservationCheck {
  bool preserving = false;
  // source-related pair whose images land in different target classes
  std::optional<std::pair<MorphismId, MorphismId>> witness;
};

PreservationCheck is_concentration_preserving(const FunctorData& fun,
                                              const MorphismPartition& source_part,
                                              const MorphismPartition& target_part);

/// True iff fun is strongly invertible and fun and its inverse are both
/// concentration preserving.
bool is_concentration_isomorphism(const FunctorData& fun, const MorphismPartition& source_part,
                                  const MorphismPartition& target_part);

/// All partitions of the morphism set that pass check_concentration, in
/// restricted-growth-string order (so the trivial partition comes first).
/// Refuses categories with more than max_morphisms morphisms.
std::vector<MorphismPartition> enumerate_concentrations(const FinCategory& cat,
                                                        std::size_t max_morphisms = 10);

}  // namespace concentra
