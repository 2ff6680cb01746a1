#include "concentra/core.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace concentra {

namespace {

std::string mor_name(const FinCategory& cat, MorphismId f) {
  std::ostringstream os;
  os << cat.morphism_label(f) << " (#" << f << ")";
  return os.str();
}

void require(bool cond, const std::string& message) {
  if (!cond) throw std::invalid_argument(message);
}

}  // namespace

std::size_t FinCategory::hom_size(ObjectId a, ObjectId b) const {
  std::size_t n = 0;
  for (const Morphism& m : morphisms) {
    if (m.src == a && m.tgt == b) ++n;
  }
  return n;
}

ObjectId CategoryBuilder::add_object(std::string label) {
  cat_.objects.push_back(std::move(label));
  return static_cast<ObjectId>(cat_.objects.size() - 1);
}

MorphismId CategoryBuilder::add_morphism(std::string label, ObjectId src, ObjectId tgt) {
  cat_.morphisms.push_back(Morphism{std::move(label), src, tgt});
  return static_cast<MorphismId>(cat_.morphisms.size() - 1);
}

void CategoryBuilder::set_identity(ObjectId obj, MorphismId f) {
  if (cat_.identities.size() <= obj) cat_.identities.resize(obj + 1, kNoMorphism);
  cat_.identities[obj] = f;
}

void CategoryBuilder::set_composite(MorphismId f, MorphismId g, MorphismId fg) {
  composites_.push_back({f, g, fg});
}

FinCategory CategoryBuilder::build() && {
  const std::size_t n_obj = cat_.objects.size();
  const std::size_t n_mor = cat_.morphisms.size();
  cat_.identities.resize(n_obj, kNoMorphism);
  for (std::size_t a = 0; a < n_obj; ++a) {
    require(cat_.identities[a] != kNoMorphism && cat_.identities[a] < n_mor,
            "identity of object " + cat_.objects[a] + " missing or out of range");
  }
  for (const Morphism& m : cat_.morphisms) {
    require(m.src < n_obj && m.tgt < n_obj,
            "morphism " + m.label + " has an out-of-range endpoint");
  }
  cat_.comp_table.assign(n_mor * n_mor, kNoMorphism);
  for (const auto& [f, g, fg] : composites_) {
    require(f < n_mor && g < n_mor && fg < n_mor, "composition triple index out of range");
    MorphismId& slot = cat_.comp_table[f * n_mor + g];
    require(slot == kNoMorphism || slot == fg, "conflicting composition entries");
    slot = fg;
  }
  return std::move(cat_);
}

void ValidationReport::add(std::string rule, std::vector<std::uint32_t> witness,
                           std::string message) {
  ok = false;
  violations.push_back(Violation{std::move(rule), std::move(witness), std::move(message)});
}

ValidationReport validate_category(const FinCategory& cat) {
  const std::size_t n_obj = cat.object_count();
  const std::size_t n_mor = cat.morphism_count();

  require(cat.identities.size() == n_obj, "identities list size differs from object count");
  require(cat.comp_table.size() == n_mor * n_mor, "composition table has the wrong size");
  for (const Morphism& m : cat.morphisms) {
    require(m.src < n_obj && m.tgt < n_obj, "morphism endpoint index out of range");
  }
  for (MorphismId id : cat.identities) {
    require(id < n_mor, "identity morphism index out of range");
  }
  for (MorphismId e : cat.comp_table) {
    require(e == kNoMorphism || e < n_mor, "composition table entry out of range");
  }

  ValidationReport report;

  for (ObjectId a = 0; a < n_obj; ++a) {
    MorphismId id = cat.identity(a);
    if (cat.src(id) != a || cat.tgt(id) != a) {
      report.add("identity-endpoints", {a, id},
                 "identity of " + cat.object_label(a) + " is " + mor_name(cat, id) +
                     " which is not an endomorphism of it");
    }
  }

  for (MorphismId f = 0; f < n_mor; ++f) {
    for (MorphismId g = 0; g < n_mor; ++g) {
      MorphismId fg = cat.composite(f, g);
      if (cat.composable(f, g)) {
        if (fg == kNoMorphism) {
          report.add("composition-domain", {f, g},
                     "composite of " + mor_name(cat, f) + " and " + mor_name(cat, g) +
                         " is missing although the pair is composable");
        } else if (cat.src(fg) != cat.src(g) || cat.tgt(fg) != cat.tgt(f)) {
          report.add("composition-endpoints", {f, g, fg},
                     "composite " + mor_name(cat, fg) + " of " + mor_name(cat, f) + " and " +
                         mor_name(cat, g) + " has wrong endpoints");
        }
      } else if (fg != kNoMorphism) {
        report.add("composition-domain", {f, g},
                   "composite defined for the non-composable pair " + mor_name(cat, f) + ", " +
                       mor_name(cat, g));
      }
    }
  }

  for (MorphismId f = 0; f < n_mor; ++f) {
    MorphismId right = cat.composite(f, cat.identity(cat.src(f)));
    MorphismId left = cat.composite(cat.identity(cat.tgt(f)), f);
    if (right != f) {
      report.add("identity-law", {f}, mor_name(cat, f) + " composed with its source identity is not itself");
    }
    if (left != f) {
      report.add("identity-law", {f}, "target identity composed with " + mor_name(cat, f) + " is not itself");
    }
  }

  for (MorphismId f = 0; f < n_mor; ++f) {
    for (MorphismId g = 0; g < n_mor; ++g) {
      if (!cat.composable(f, g)) continue;
      for (MorphismId h = 0; h < n_mor; ++h) {
        if (!cat.composable(g, h)) continue;
        MorphismId fg = cat.composite(f, g);
        MorphismId gh = cat.composite(g, h);
        if (fg == kNoMorphism || gh == kNoMorphism) continue;  // reported above
        MorphismId lhs = cat.composite(fg, h);
        MorphismId rhs = cat.composite(f, gh);
        if (lhs != rhs) {
          report.add("associativity", {f, g, h},
                     "(" + mor_name(cat, f) + " ∘ " + mor_name(cat, g) + ") ∘ " + mor_name(cat, h) +
                         " differs from the right-associated composite");
        }
      }
    }
  }

  return report;
}

std::optional<MorphismId> compose(const FinCategory& cat, MorphismId f, MorphismId g) {
  require(f < cat.morphism_count() && g < cat.morphism_count(), "morphism id out of range");
  if (!cat.composable(f, g)) return std::nullopt;
  return cat.composite(f, g);
}

bool is_equivalent_to_trivial(const FinCategory& cat) {
  if (cat.object_count() == 0) return false;
  std::vector<std::size_t> counts(cat.object_count() * cat.object_count(), 0);
  for (const Morphism& m : cat.morphisms) {
    ++counts[m.src * cat.object_count() + m.tgt];
  }
  return std::all_of(counts.begin(), counts.end(), [](std::size_t c) { return c == 1; });
}

std::optional<MorphismId> inverse_morphism(const FinCategory& cat, MorphismId f) {
  require(f < cat.morphism_count(), "morphism id out of range");
  MorphismId id_src = cat.identity(cat.src(f));
  MorphismId id_tgt = cat.identity(cat.tgt(f));
  for (MorphismId g = 0; g < cat.morphism_count(); ++g) {
    if (cat.src(g) != cat.tgt(f) || cat.tgt(g) != cat.src(f)) continue;
    if (cat.composite(f, g) == id_tgt && cat.composite(g, f) == id_src) return g;
  }
  return std::nullopt;
}

bool is_groupoid(const FinCategory& cat) {
  for (MorphismId f = 0; f < cat.morphism_count(); ++f) {
    if (!inverse_morphism(cat, f)) return false;
  }
  return true;
}

bool is_connected(const FinCategory& cat) {
  if (cat.object_count() == 0) return false;
  std::vector<ObjectId> parent(cat.object_count());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](ObjectId a) {
    while (parent[a] != a) a = parent[a] = parent[parent[a]];
    return a;
  };
  for (const Morphism& m : cat.morphisms) parent[find(m.src)] = find(m.tgt);
  ObjectId root = find(0);
  for (ObjectId a = 1; a < cat.object_count(); ++a) {
    if (find(a) != root) return false;
  }
  return true;
}

FunctorData identity_functor(CatRef cat) {
  require(cat != nullptr, "null category");
  FunctorData fun;
  fun.source = cat;
  fun.target = cat;
  fun.obj_map.resize(cat->object_count());
  std::iota(fun.obj_map.begin(), fun.obj_map.end(), 0);
  fun.mor_map.resize(cat->morphism_count());
  std::iota(fun.mor_map.begin(), fun.mor_map.end(), 0);
  return fun;
}

ValidationReport check_functor(const FunctorData& fun) {
  require(fun.source && fun.target, "functor with null endpoint category");
  const FinCategory& c = *fun.source;
  const FinCategory& d = *fun.target;
  require(fun.obj_map.size() == c.object_count(), "object map size differs from source objects");
  require(fun.mor_map.size() == c.morphism_count(), "morphism map size differs from source morphisms");
  for (ObjectId a : fun.obj_map) require(a < d.object_count(), "object map value out of range");
  for (MorphismId f : fun.mor_map) require(f < d.morphism_count(), "morphism map value out of range");

  ValidationReport report;
  for (MorphismId f = 0; f < c.morphism_count(); ++f) {
    MorphismId ff = fun.mor_map[f];
    if (d.src(ff) != fun.obj_map[c.src(f)] || d.tgt(ff) != fun.obj_map[c.tgt(f)]) {
      report.add("endpoints", {f},
                 "image of " + mor_name(c, f) + " does not run between the image objects");
    }
  }
  for (ObjectId a = 0; a < c.object_count(); ++a) {
    if (fun.mor_map[c.identity(a)] != d.identity(fun.obj_map[a])) {
      report.add("identity", {a},
                 "identity of " + c.object_label(a) + " is not sent to the identity of its image");
    }
  }
  for (MorphismId f = 0; f < c.morphism_count(); ++f) {
    for (MorphismId g = 0; g < c.morphism_count(); ++g) {
      if (!c.composable(f, g)) continue;
      MorphismId fg = c.composite(f, g);
      if (fg == kNoMorphism) continue;
      MorphismId image = d.composable(fun.mor_map[f], fun.mor_map[g])
                             ? d.composite(fun.mor_map[f], fun.mor_map[g])
                             : kNoMorphism;
      if (image == kNoMorphism || fun.mor_map[fg] != image) {
        report.add("composition", {f, g},
                   "image of " + mor_name(c, fg) + " differs from the composite of the images of " +
                       mor_name(c, f) + " and " + mor_name(c, g));
      }
    }
  }
  return report;
}

FunctorData compose_functors(const FunctorData& f, const FunctorData& g) {
  require(g.target == f.source, "compose_functors: target of the second argument must be the source of the first");
  FunctorData out;
  out.source = g.source;
  out.target = f.target;
  out.obj_map.reserve(g.obj_map.size());
  for (ObjectId a : g.obj_map) out.obj_map.push_back(f.obj_map[a]);
  out.mor_map.reserve(g.mor_map.size());
  for (MorphismId m : g.mor_map) out.mor_map.push_back(f.mor_map[m]);
  return out;
}

std::optional<FunctorData> strong_inverse(const FunctorData& fun) {
  require(check_functor(fun).ok, "strong_inverse requires a valid functor");
  const FinCategory& c = *fun.source;
  const FinCategory& d = *fun.target;
  if (c.object_count() != d.object_count() || c.morphism_count() != d.morphism_count()) {
    return std::nullopt;
  }
  FunctorData inv;
  inv.source = fun.target;
  inv.target = fun.source;
  inv.obj_map.assign(d.object_count(), static_cast<ObjectId>(-1));
  inv.mor_map.assign(d.morphism_count(), kNoMorphism);
  for (ObjectId a = 0; a < c.object_count(); ++a) {
    ObjectId b = fun.obj_map[a];
    if (inv.obj_map[b] != static_cast<ObjectId>(-1)) return std::nullopt;
    inv.obj_map[b] = a;
  }
  for (MorphismId f = 0; f < c.morphism_count(); ++f) {
    MorphismId ff = fun.mor_map[f];
    if (inv.mor_map[ff] != kNoMorphism) return std::nullopt;
    inv.mor_map[ff] = f;
  }
  if (!check_functor(inv).ok) return std::nullopt;
  return inv;
}

bool is_identity_functor(const FunctorData& fun) {
  if (fun.source != fun.target) return false;
  for (ObjectId a = 0; a < fun.obj_map.size(); ++a) {
    if (fun.obj_map[a] != a) return false;
  }
  for (MorphismId f = 0; f < fun.mor_map.size(); ++f) {
    if (fun.mor_map[f] != f) return false;
  }
  return true;
}

bool same_functor(const FunctorData& a, const FunctorData& b) {
  return a.source == b.source && a.target == b.target && a.obj_map == b.obj_map &&
         a.mor_map == b.mor_map;
}

}  // namespace concentra
