#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "concentra/concentration.hpp"
#include "concentra/core.hpp"
#include "concentra/monoid.hpp"

namespace concentra {

/// A subcategory given by subsets of object and morphism ids of the parent.
struct SubcategoryData {
  std::vector<ObjectId> objects;
  std::vector<MorphismId> morphisms;
};

/// Closure under identities, composition and endpoints.
ValidationReport validate_subcategory(const FinCategory& cat, const SubcategoryData& sub);

/// The subcategory reindexed as its own category, with maps back to the
/// parent ids.
struct SubcategoryView {
  CatRef category;
  std::vector<ObjectId> object_of;      // sub object -> parent object
  std::vector<MorphismId> morphism_of;  // sub morphism -> parent morphism
  FunctorData inclusion;                // sub -> parent
};

SubcategoryView materialize_subcategory(CatRef cat, const SubcategoryData& sub);

/// Restriction of the partition to the subcategory, on the reindexed
/// morphism set.
MorphismPartition restrict_partition(const MorphismPartition& part, const SubcategoryView& view);

/// The restricted relation is a concentration structure on the subcategory.
bool check_closed(CatRef cat, const MorphismPartition& part, const SubcategoryData& sub);

/// Sufficient condition for closedness: the morphism subset is a union of
/// classes.
bool saturation_condition(const FinCategory& cat, const MorphismPartition& part,
                          const SubcategoryData& sub);

struct NormalityCheck {
  bool normal = false;
  std::optional<std::pair<std::uint32_t, std::uint32_t>> witness;  // classes ([f], [h])
};

/// Normality of a closed sub-concentration, decided inside the concentration
/// monoid: for every class [f] and every class [h] of the subcategory there
/// are [h1], [h2] in the image submonoid with [f][h] = [h1][f] and
/// [h][f] = [f][h2].
NormalityCheck is_normal_subconcentration(CatRef cat, const MorphismPartition& part,
                                          const SubcategoryData& sub);

/// f ~ g iff [h1][f] = [g][h2] in the concentration monoid for some h1, h2
/// in the subcategory. Requires a normal closed sub-concentration; the
/// result is re-verified as a concentration structure.
MorphismPartition quotient_concentration(CatRef cat, const MorphismPartition& part,
                                         const SubcategoryData& sub);

/// An action of the base category on the fiber category: one endofunctor of
/// the fiber per morphism of the base, functorially.
struct CatAction {
  CatRef base;   // D
  CatRef fiber;  // C
  std::vector<FunctorData> functor_of;
};

ValidationReport validate_cat_action(const CatAction& action, bool require_invertible);

struct CompatibilityCheck {
  bool ok = false;
  // (alpha, alpha', f, f') related pairs whose action images are unrelated
  std::optional<std::array<MorphismId, 4>> witness;
};

CompatibilityCheck check_action_compatibility(const CatAction& action,
                                              const MorphismPartition& fiber_part,
                                              const MorphismPartition& base_part);

/// Semidirect product category. Objects are pairs (fiber object, base
/// object); a morphism is a base morphism f together with a fiber morphism
/// alpha out of the f-image of the source fiber object, composed by
/// (alpha2, f2)∘(alpha1, f1) = (alpha2 ∘ Phi_f2(alpha1), f2∘f1).
struct SemidirectProduct {
  CatRef category;
  MorphismPartition partition;  // classes are pairs of factor classes; empty for the plain form

  struct Mor {
    ObjectId fiber_src;  // fiber object of the source pair
    MorphismId alpha;
    MorphismId f;
  };
  std::vector<Mor> mors;
  std::size_t base_objects = 0;

  ObjectId object_index(ObjectId fiber_obj, ObjectId base_obj) const {
    return fiber_obj * static_cast<ObjectId>(base_objects) + base_obj;
  }
  MorphismId morphism_index(ObjectId fiber_src, MorphismId alpha, MorphismId f) const;
};

/// Plain form: endofunctors need not be invertible and no partitions are
/// involved.
SemidirectProduct semidirect_category_plain(const CatAction& action);

/// Concentration form: requires strongly invertible action functors and a
/// compatible pair of concentrations; the product partition is re-verified.
SemidirectProduct semidirect_category(const CatAction& action,
                                      const MorphismPartition& fiber_part,
                                      const MorphismPartition& base_part);

}  // namespace concentra
