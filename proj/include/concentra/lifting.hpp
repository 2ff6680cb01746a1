#pragma once

#include <optional>
#include <utility>

#include "concentra/concentration.hpp"
#include "concentra/core.hpp"
#include "concentra/monoid.hpp"

namespace concentra {

struct LiftCheck {
  bool ok = false;
  std::optional<std::pair<MorphismId, MorphismId>> witness;  // unliftable target pair (g1, g2)
};

/// 2-lifting: every composable pair in the target lifts to a composable pair
/// of preimages in the source.
LiftCheck check_2_lifting(const FunctorData& fun);

struct FibrationCheck {
  bool ok = false;
  std::optional<std::pair<MorphismId, ObjectId>> witness;  // (base morphism, stranded object)
};

/// Multivalued fibration: every base morphism lifts with any prescribed
/// source object over its target.
FibrationCheck check_multivalued_fibration(const FunctorData& fun);

bool check_surjective_on_morphisms(const FunctorData& fun);

/// Pullback f ~ g iff F(f) ~ F(g). Requires fun to be 2-lifting and
/// target_part to be a concentration; the result is re-verified and a
/// failure raises internal_error.
MorphismPartition pullback_concentration(const FunctorData& fun,
                                         const MorphismPartition& target_part);

struct ConcentratingFunctor {
  CatRef target;               // one-object category of the concentration monoid
  FunctorData functor;         // objects to *, morphism f to its class
  ConcentrationMonoid monoid;  // classes with their morphism assignment
};

/// The canonical functor from (cat, part) onto the one-object category of its
/// concentration monoid. Concentration preserving into the discrete partition
/// and 2-lifting.
ConcentratingFunctor concentrating_functor(CatRef cat, const MorphismPartition& part);

/// The concentrating functor viewed as an external presentation of the
/// concentration; the overload with target_monoid composes with the
/// lexicographically least isomorphism onto it and refuses when the monoids
/// are not isomorphic.
FunctorData externalize(CatRef cat, const MorphismPartition& part);
FunctorData externalize(CatRef cat, const MorphismPartition& part, const FinMonoid& target_monoid);

/// Pullback of the discrete partition along a 2-lifting functor into a
/// one-object category; inverse of externalize.
MorphismPartition internalize(const FunctorData& fun);

/// Triangle identities of the adjunction between taking the concentration
/// monoid and forming the one-object category with discrete partition: the
/// induced map of the concentrating functor is the identity after the
/// canonical identification, and the unit at a one-object category is the
/// identity functor.
bool verify_adjunction_triangles(CatRef cat, const MorphismPartition& part);
bool verify_adjunction_triangles_monoid(const FinMonoid& monoid);

}  // namespace concentra
