#include "concentra/catalg.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace concentra {

namespace {

void require(bool cond, const std::string& message) {
  if (!cond) throw std::invalid_argument(message);
}

}  // namespace

ValidationReport validate_subcategory(const FinCategory& cat, const SubcategoryData& sub) {
  for (ObjectId a : sub.objects) require(a < cat.object_count(), "subcategory object out of range");
  for (MorphismId f : sub.morphisms) {
    require(f < cat.morphism_count(), "subcategory morphism out of range");
  }
  std::set<ObjectId> objects(sub.objects.begin(), sub.objects.end());
  std::set<MorphismId> morphisms(sub.morphisms.begin(), sub.morphisms.end());

  ValidationReport report;
  for (MorphismId f : morphisms) {
    if (!objects.count(cat.src(f)) || !objects.count(cat.tgt(f))) {
      report.add("endpoints", {f},
                 "morphism " + cat.morphism_label(f) + " has an endpoint outside the subcategory");
    }
  }
  for (ObjectId a : objects) {
    if (!morphisms.count(cat.identity(a))) {
      report.add("identity", {a},
                 "identity of " + cat.object_label(a) + " is missing from the subcategory");
    }
  }
  for (MorphismId f : morphisms) {
    for (MorphismId g : morphisms) {
      if (!cat.composable(f, g)) continue;
      MorphismId fg = cat.composite(f, g);
      if (!morphisms.count(fg)) {
        report.add("composition-closure", {f, g, fg},
                   "composite " + cat.morphism_label(fg) + " of " + cat.morphism_label(f) +
                       " and " + cat.morphism_label(g) + " is missing from the subcategory");
      }
    }
  }
  return report;
}

SubcategoryView materialize_subcategory(CatRef cat, const SubcategoryData& sub) {
  require(cat != nullptr, "null category");
  require(validate_subcategory(*cat, sub).ok, "not a subcategory");

  SubcategoryView view;
  view.object_of.assign(sub.objects.begin(), sub.objects.end());
  std::sort(view.object_of.begin(), view.object_of.end());
  view.object_of.erase(std::unique(view.object_of.begin(), view.object_of.end()),
                       view.object_of.end());
  view.morphism_of.assign(sub.morphisms.begin(), sub.morphisms.end());
  std::sort(view.morphism_of.begin(), view.morphism_of.end());
  view.morphism_of.erase(std::unique(view.morphism_of.begin(), view.morphism_of.end()),
                         view.morphism_of.end());

  std::map<ObjectId, ObjectId> object_index;
  std::map<MorphismId, MorphismId> morphism_index;
  CategoryBuilder builder;
  for (ObjectId a : view.object_of) {
    object_index[a] = builder.add_object(cat->object_label(a));
  }
  for (MorphismId f : view.morphism_of) {
    morphism_index[f] = builder.add_morphism(cat->morphism_label(f),
                                             object_index.at(cat->src(f)),
                                             object_index.at(cat->tgt(f)));
  }
  for (ObjectId a : view.object_of) {
    builder.set_identity(object_index.at(a), morphism_index.at(cat->identity(a)));
  }
  for (MorphismId f : view.morphism_of) {
    for (MorphismId g : view.morphism_of) {
      if (!cat->composable(f, g)) continue;
      builder.set_composite(morphism_index.at(f), morphism_index.at(g),
                            morphism_index.at(cat->composite(f, g)));
    }
  }
  view.category = std::make_shared<FinCategory>(std::move(builder).build());
  view.inclusion.source = view.category;
  view.inclusion.target = std::move(cat);
  view.inclusion.obj_map = view.object_of;
  view.inclusion.mor_map = view.morphism_of;
  return view;
}

MorphismPartition restrict_partition(const MorphismPartition& part, const SubcategoryView& view) {
  std::vector<std::uint32_t> class_of;
  class_of.reserve(view.morphism_of.size());
  std::map<std::uint32_t, std::uint32_t> renumber;
  for (MorphismId parent : view.morphism_of) {
    auto [it, inserted] = renumber.emplace(part.class_of[parent],
                                           static_cast<std::uint32_t>(renumber.size()));
    class_of.push_back(it->second);
  }
  return partition_from_class_of(std::move(class_of));
}

bool check_closed(CatRef cat, const MorphismPartition& part, const SubcategoryData& sub) {
  require_consistent(*cat, part);
  SubcategoryView view = materialize_subcategory(std::move(cat), sub);
  MorphismPartition restricted = restrict_partition(part, view);
  return check_concentration(*view.category, restricted, 2).is_concentration();
}

bool saturation_condition(const FinCategory& cat, const MorphismPartition& part,
                          const SubcategoryData& sub) {
  require_consistent(cat, part);
  require(validate_subcategory(cat, sub).ok, "not a subcategory");
  std::set<MorphismId> members(sub.morphisms.begin(), sub.morphisms.end());
  for (MorphismId f : members) {
    for (MorphismId g : part.classes[part.class_of[f]]) {
      if (!members.count(g)) return false;
    }
  }
  return true;
}

namespace {

// Image of the subcategory's classes inside the concentration monoid.
std::vector<std::uint32_t> submonoid_image(const ConcentrationMonoid& cm,
                                           const SubcategoryData& sub) {
  std::set<std::uint32_t> image;
  for (MorphismId f : sub.morphisms) image.insert(cm.class_map[f]);
  return {image.begin(), image.end()};
}

}  // namespace

NormalityCheck is_normal_subconcentration(CatRef cat, const MorphismPartition& part,
                                          const SubcategoryData& sub) {
  require(check_closed(cat, part, sub), "is_normal_subconcentration requires a closed sub");
  ConcentrationMonoid cm = concentration_monoid(*cat, part);
  const FinMonoid& m = *cm.monoid;
  std::vector<std::uint32_t> image = submonoid_image(cm, sub);
  std::set<std::uint32_t> members(image.begin(), image.end());

  for (std::uint32_t f = 0; f < m.size(); ++f) {
    for (std::uint32_t h : members) {
      bool right = false;  // [f][h] = [h1][f]
      bool left = false;   // [h][f] = [f][h2]
      for (std::uint32_t h1 : members) {
        if (m.mul(f, h) == m.mul(h1, f)) {
          right = true;
          break;
        }
      }
      for (std::uint32_t h2 : members) {
        if (m.mul(h, f) == m.mul(f, h2)) {
          left = true;
          break;
        }
      }
      if (!right || !left) return NormalityCheck{false, std::make_pair(f, h)};
    }
  }
  return NormalityCheck{true, std::nullopt};
}

MorphismPartition quotient_concentration(CatRef cat, const MorphismPartition& part,
                                         const SubcategoryData& sub) {
  NormalityCheck normal = is_normal_subconcentration(cat, part, sub);
  require(normal.normal, "quotient refused: the sub-concentration is not normal");

  ConcentrationMonoid cm = concentration_monoid(*cat, part);
  const FinMonoid& m = *cm.monoid;
  std::vector<std::uint32_t> image = submonoid_image(cm, sub);
  QuotientMonoid quotient = quotient_by_normal_submonoid(m, image);

  std::vector<std::uint32_t> class_of(cat->morphism_count());
  for (MorphismId f = 0; f < class_of.size(); ++f) {
    class_of[f] = quotient.class_of[cm.class_map[f]];
  }
  MorphismPartition result = partition_from_class_of(std::move(class_of));
  if (!check_concentration(*cat, result, 2).is_concentration()) {
    throw internal_error("quotient by a normal sub-concentration failed the concentration axioms");
  }
  return result;
}

ValidationReport validate_cat_action(const CatAction& action, bool require_invertible) {
  require(action.base && action.fiber, "action with null category");
  require(action.functor_of.size() == action.base->morphism_count(),
          "action must assign one endofunctor per base morphism");
  const FinCategory& base = *action.base;

  ValidationReport report;
  for (MorphismId f = 0; f < base.morphism_count(); ++f) {
    const FunctorData& fun = action.functor_of[f];
    require(fun.source == action.fiber && fun.target == action.fiber,
            "action functor is not an endofunctor of the fiber");
    if (!check_functor(fun).ok) {
      report.add("functor", {f}, "action of " + base.morphism_label(f) + " is not a functor");
      continue;
    }
    if (require_invertible && !strong_inverse(fun)) {
      report.add("invertible", {f},
                 "action of " + base.morphism_label(f) + " is not strongly invertible");
    }
  }
  if (!report.ok) return report;

  for (ObjectId a = 0; a < base.object_count(); ++a) {
    if (!is_identity_functor(action.functor_of[base.identity(a)])) {
      report.add("identity", {a},
                 "action of the identity of " + base.object_label(a) + " is not the identity");
    }
  }
  for (MorphismId f2 = 0; f2 < base.morphism_count(); ++f2) {
    for (MorphismId f1 = 0; f1 < base.morphism_count(); ++f1) {
      if (!base.composable(f2, f1)) continue;
      FunctorData composed = compose_functors(action.functor_of[f2], action.functor_of[f1]);
      if (!same_functor(composed, action.functor_of[base.composite(f2, f1)])) {
        report.add("functoriality", {f2, f1},
                   "action of " + base.morphism_label(base.composite(f2, f1)) +
                       " differs from the composite of the factor actions");
      }
    }
  }
  return report;
}

CompatibilityCheck check_action_compatibility(const CatAction& action,
                                              const MorphismPartition& fiber_part,
                                              const MorphismPartition& base_part) {
  require(validate_cat_action(action, true).ok, "invalid category action");
  require_consistent(*action.fiber, fiber_part);
  require_consistent(*action.base, base_part);

  for (const auto& base_class : base_part.classes) {
    for (const auto& fiber_class : fiber_part.classes) {
      MorphismId f0 = base_class.front();
      MorphismId a0 = fiber_class.front();
      std::uint32_t expected = fiber_part.class_of[action.functor_of[f0].mor_map[a0]];
      for (MorphismId f : base_class) {
        for (MorphismId alpha : fiber_class) {
          if (fiber_part.class_of[action.functor_of[f].mor_map[alpha]] != expected) {
            return CompatibilityCheck{false, std::array<MorphismId, 4>{a0, alpha, f0, f}};
          }
        }
      }
    }
  }
  return CompatibilityCheck{true, std::nullopt};
}

MorphismId SemidirectProduct::morphism_index(ObjectId fiber_src, MorphismId alpha,
                                             MorphismId f) const {
  for (MorphismId m = 0; m < mors.size(); ++m) {
    if (mors[m].fiber_src == fiber_src && mors[m].alpha == alpha && mors[m].f == f) return m;
  }
  throw std::invalid_argument("no such morphism in the semidirect product");
}

namespace {

SemidirectProduct build_semidirect(const CatAction& action) {
  const FinCategory& fiber = *action.fiber;
  const FinCategory& base = *action.base;

  SemidirectProduct out;
  out.base_objects = base.object_count();

  CategoryBuilder builder;
  for (ObjectId c = 0; c < fiber.object_count(); ++c) {
    for (ObjectId d = 0; d < base.object_count(); ++d) {
      builder.add_object("(" + fiber.object_label(c) + "," + base.object_label(d) + ")");
    }
  }

  // Morphism (alpha, f) out of (c1, src f): alpha must start at the f-image
  // of c1.
  std::map<std::array<std::uint32_t, 3>, MorphismId> index;
  for (MorphismId f = 0; f < base.morphism_count(); ++f) {
    const FunctorData& act = action.functor_of[f];
    for (ObjectId c1 = 0; c1 < fiber.object_count(); ++c1) {
      for (MorphismId alpha = 0; alpha < fiber.morphism_count(); ++alpha) {
        if (fiber.src(alpha) != act.obj_map[c1]) continue;
        ObjectId source = out.object_index(c1, base.src(f));
        ObjectId target = out.object_index(fiber.tgt(alpha), base.tgt(f));
        MorphismId id = builder.add_morphism(
            "(" + fiber.morphism_label(alpha) + "," + base.morphism_label(f) + ")", source,
            target);
        out.mors.push_back(SemidirectProduct::Mor{c1, alpha, f});
        index[{c1, alpha, f}] = id;
      }
    }
  }

  for (ObjectId c = 0; c < fiber.object_count(); ++c) {
    for (ObjectId d = 0; d < base.object_count(); ++d) {
      builder.set_identity(out.object_index(c, d),
                           index.at({c, fiber.identity(c), base.identity(d)}));
    }
  }

  for (MorphismId m2 = 0; m2 < out.mors.size(); ++m2) {
    const auto& [c2, alpha2, f2] = out.mors[m2];
    for (MorphismId m1 = 0; m1 < out.mors.size(); ++m1) {
      const auto& [c1, alpha1, f1] = out.mors[m1];
      if (!base.composable(f2, f1)) continue;
      if (c2 != fiber.tgt(alpha1)) continue;  // source pair of m2 = target pair of m1
      MorphismId moved = action.functor_of[f2].mor_map[alpha1];
      MorphismId alpha = fiber.composite(alpha2, moved);
      if (alpha == kNoMorphism) {
        throw internal_error("semidirect composition hit an undefined fiber composite");
      }
      builder.set_composite(m2, m1, index.at({c1, alpha, base.composite(f2, f1)}));
    }
  }

  out.category = std::make_shared<FinCategory>(std::move(builder).build());
  ValidationReport valid = validate_category(*out.category);
  if (!valid.ok) throw internal_error("semidirect product is not a category");
  return out;
}

}  // namespace

SemidirectProduct semidirect_category_plain(const CatAction& action) {
  require(validate_cat_action(action, false).ok, "invalid category action");
  return build_semidirect(action);
}

SemidirectProduct semidirect_category(const CatAction& action,
                                      const MorphismPartition& fiber_part,
                                      const MorphismPartition& base_part) {
  CompatibilityCheck compatible = check_action_compatibility(action, fiber_part, base_part);
  require(compatible.ok, "semidirect product refused: the action is not compatible with the concentrations");
  require(check_concentration(*action.fiber, fiber_part, 2).is_concentration(),
          "semidirect product refused: fiber partition is not a concentration");
  require(check_concentration(*action.base, base_part, 2).is_concentration(),
          "semidirect product refused: base partition is not a concentration");

  SemidirectProduct out = build_semidirect(action);
  std::vector<std::uint32_t> class_of(out.mors.size());
  const std::size_t fiber_classes = fiber_part.class_count();
  for (MorphismId m = 0; m < out.mors.size(); ++m) {
    class_of[m] = base_part.class_of[out.mors[m].f] * fiber_classes +
                  fiber_part.class_of[out.mors[m].alpha];
  }
  // Renumber to consecutive class ids.
  std::map<std::uint32_t, std::uint32_t> renumber;
  for (std::uint32_t& c : class_of) {
    auto [it, inserted] = renumber.emplace(c, static_cast<std::uint32_t>(renumber.size()));
    c = it->second;
  }
  out.partition = partition_from_class_of(std::move(class_of));
  if (!check_concentration(*out.category, out.partition, 2).is_concentration()) {
    throw internal_error("semidirect product partition failed the concentration axioms");
  }
  return out;
}

}  // namespace concentra
