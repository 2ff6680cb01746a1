#include "concentra/lifting.hpp"

#include <algorithm>
#include <numeric>

namespace concentra {

namespace {

void require(bool cond, const std::string& message) {
  if (!cond) throw std::invalid_argument(message);
}

std::vector<std::vector<MorphismId>> preimages(const FunctorData& fun) {
  std::vector<std::vector<MorphismId>> pre(fun.target->morphism_count());
  for (MorphismId f = 0; f < fun.mor_map.size(); ++f) pre[fun.mor_map[f]].push_back(f);
  return pre;
}

}  // namespace

LiftCheck check_2_lifting(const FunctorData& fun) {
  require(check_functor(fun).ok, "check_2_lifting requires a valid functor");
  const FinCategory& d = *fun.target;
  const FinCategory& c = *fun.source;
  std::vector<std::vector<MorphismId>> pre = preimages(fun);
  for (MorphismId g1 = 0; g1 < d.morphism_count(); ++g1) {
    for (MorphismId g2 = 0; g2 < d.morphism_count(); ++g2) {
      if (!d.composable(g1, g2)) continue;
      bool lifted = false;
      for (MorphismId f1 : pre[g1]) {
        for (MorphismId f2 : pre[g2]) {
          if (c.composable(f1, f2)) {
            lifted = true;
            break;
          }
        }
        if (lifted) break;
      }
      if (!lifted) return LiftCheck{false, std::make_pair(g1, g2)};
    }
  }
  return LiftCheck{true, std::nullopt};
}

FibrationCheck check_multivalued_fibration(const FunctorData& fun) {
  require(check_functor(fun).ok, "check_multivalued_fibration requires a valid functor");
  const FinCategory& base = *fun.target;
  const FinCategory& total = *fun.source;
  for (MorphismId g = 0; g < base.morphism_count(); ++g) {
    for (ObjectId e1 = 0; e1 < total.object_count(); ++e1) {
      if (fun.obj_map[e1] != base.tgt(g)) continue;
      bool lifted = false;
      for (MorphismId f = 0; f < total.morphism_count(); ++f) {
        if (total.tgt(f) == e1 && fun.mor_map[f] == g) {
          lifted = true;
          break;
        }
      }
      if (!lifted) return FibrationCheck{false, std::make_pair(g, e1)};
    }
  }
  return FibrationCheck{true, std::nullopt};
}

bool check_surjective_on_morphisms(const FunctorData& fun) {
  require(check_functor(fun).ok, "check_surjective_on_morphisms requires a valid functor");
  std::vector<bool> hit(fun.target->morphism_count(), false);
  for (MorphismId g : fun.mor_map) hit[g] = true;
  return std::all_of(hit.begin(), hit.end(), [](bool b) { return b; });
}

MorphismPartition pullback_concentration(const FunctorData& fun,
                                         const MorphismPartition& target_part) {
  require_consistent(*fun.target, target_part);
  require(check_concentration(*fun.target, target_part, 2).is_concentration(),
          "pullback refused: the target partition is not a concentration structure");
  LiftCheck lift = check_2_lifting(fun);
  require(lift.ok, "pullback refused: the functor is not 2-lifting");

  std::vector<std::uint32_t> class_of(fun.source->morphism_count());
  for (MorphismId f = 0; f < class_of.size(); ++f) {
    class_of[f] = target_part.class_of[fun.mor_map[f]];
  }
  MorphismPartition part = partition_from_class_of(std::move(class_of));
  if (!check_concentration(*fun.source, part, 2).is_concentration()) {
    throw internal_error("pullback along a 2-lifting functor failed the concentration axioms");
  }
  return part;
}

ConcentratingFunctor concentrating_functor(CatRef cat, const MorphismPartition& part) {
  require(cat != nullptr, "null category");
  ConcentratingFunctor out;
  out.monoid = concentration_monoid(*cat, part);
  out.target = std::make_shared<FinCategory>(one_object_category(*out.monoid.monoid));
  out.functor.source = cat;
  out.functor.target = out.target;
  out.functor.obj_map.assign(cat->object_count(), 0);
  out.functor.mor_map = out.monoid.class_map;
  if (!check_functor(out.functor).ok) {
    throw internal_error("concentrating functor fails the functor laws");
  }
  return out;
}

FunctorData externalize(CatRef cat, const MorphismPartition& part) {
  return concentrating_functor(std::move(cat), part).functor;
}

FunctorData externalize(CatRef cat, const MorphismPartition& part,
                        const FinMonoid& target_monoid) {
  ConcentratingFunctor cf = concentrating_functor(std::move(cat), part);
  auto iso = find_isomorphism(*cf.monoid.monoid, target_monoid);
  require(iso.has_value(),
          "externalize refused: the concentration monoid is not isomorphic to the requested one");
  FunctorData fun;
  fun.source = cf.functor.source;
  fun.target = std::make_shared<FinCategory>(one_object_category(target_monoid));
  fun.obj_map = cf.functor.obj_map;
  fun.mor_map.reserve(cf.functor.mor_map.size());
  for (MorphismId cls : cf.functor.mor_map) fun.mor_map.push_back((*iso)[cls]);
  return fun;
}

MorphismPartition internalize(const FunctorData& fun) {
  require(fun.target && fun.target->object_count() == 1,
          "internalize requires a functor into a one-object category");
  return pullback_concentration(fun, discrete_partition(*fun.target));
}

bool verify_adjunction_triangles_monoid(const FinMonoid& monoid) {
  // Unit at the one-object category of the monoid: under the identification
  // of an element with its singleton class, it must be the identity functor.
  auto bg = std::make_shared<FinCategory>(one_object_category(monoid));
  ConcentratingFunctor unit = concentrating_functor(bg, discrete_partition(*bg));
  for (MorphismId f = 0; f < unit.functor.mor_map.size(); ++f) {
    if (unit.functor.mor_map[f] != f) return false;
  }
  const FinMonoid& rebuilt = *unit.monoid.monoid;
  return rebuilt.table == monoid.table && rebuilt.identity == monoid.identity;
}

bool verify_adjunction_triangles(CatRef cat, const MorphismPartition& part) {
  ConcentratingFunctor cf = concentrating_functor(cat, part);
  // Counit side: the induced homomorphism of the unit, read through the
  // identification above, must be the identity on the concentration monoid.
  MonoidHom induced = induced_hom(cf.functor, part, discrete_partition(*cf.target));
  for (std::uint32_t e = 0; e < induced.map.size(); ++e) {
    if (induced.map[e] != e) return false;
  }
  return verify_adjunction_triangles_monoid(*cf.monoid.monoid);
}

}  // namespace concentra
