#include "concentra/groupoid.hpp"

#include <map>
#include <random>

namespace concentra {

namespace {

void require(bool cond, const std::string& message) {
  if (!cond) throw std::invalid_argument(message);
}

MorphismId inverse_or_throw(const FinCategory& cat, MorphismId f) {
  auto inv = inverse_morphism(cat, f);
  if (!inv) throw std::invalid_argument("morphism " + cat.morphism_label(f) + " is not invertible");
  return *inv;
}

}  // namespace

TorsorGroupoid torsor_groupoid(MonoidRef group, std::size_t objects) {
  require(group != nullptr && group->is_group, "torsor groupoid requires a group");
  require(objects >= 1, "torsor groupoid needs at least one object");

  TorsorGroupoid out;
  out.group = group;
  out.objects = objects;

  CategoryBuilder builder;
  for (std::size_t a = 0; a < objects; ++a) builder.add_object("p" + std::to_string(a));
  for (std::size_t a = 0; a < objects; ++a) {
    for (std::size_t b = 0; b < objects; ++b) {
      for (std::uint32_t g = 0; g < group->size(); ++g) {
        builder.add_morphism("(" + std::to_string(a) + "->" + std::to_string(b) + ";" +
                                 group->labels[g] + ")",
                             static_cast<ObjectId>(a), static_cast<ObjectId>(b));
      }
    }
  }
  for (std::size_t a = 0; a < objects; ++a) {
    builder.set_identity(static_cast<ObjectId>(a),
                         out.morphism(a, a, group->identity));
  }
  for (std::size_t a = 0; a < objects; ++a) {
    for (std::size_t b = 0; b < objects; ++b) {
      for (std::size_t c = 0; c < objects; ++c) {
        for (std::uint32_t h = 0; h < group->size(); ++h) {
          for (std::uint32_t g = 0; g < group->size(); ++g) {
            builder.set_composite(out.morphism(b, c, h), out.morphism(a, b, g),
                                  out.morphism(a, c, group->mul(h, g)));
          }
        }
      }
    }
  }
  out.category = std::make_shared<FinCategory>(std::move(builder).build());
  if (!validate_category(*out.category).ok) {
    throw internal_error("torsor groupoid is not a category");
  }
  return out;
}

void validate_theta(const FinCategory& groupoid, const ThetaFamily& theta) {
  require(theta.base < groupoid.object_count(), "theta base out of range");
  require(theta.theta.size() == groupoid.object_count(),
          "theta must assign one morphism per object");
  for (ObjectId y = 0; y < groupoid.object_count(); ++y) {
    MorphismId t = theta.theta[y];
    require(t < groupoid.morphism_count(), "theta morphism out of range");
    require(groupoid.src(t) == theta.base && groupoid.tgt(t) == y,
            "theta at " + groupoid.object_label(y) + " does not run from the base to it");
  }
  require(theta.theta[theta.base] == groupoid.identity(theta.base),
          "theta at the base must be the identity");
}

ThetaFamily sample_theta(const FinCategory& groupoid, ObjectId base, std::uint64_t seed) {
  require(base < groupoid.object_count(), "theta base out of range");
  std::mt19937_64 rng(seed);
  ThetaFamily out;
  out.base = base;
  out.theta.resize(groupoid.object_count());
  for (ObjectId y = 0; y < groupoid.object_count(); ++y) {
    if (y == base) {
      out.theta[y] = groupoid.identity(base);
      continue;
    }
    std::vector<MorphismId> candidates;
    for (MorphismId f = 0; f < groupoid.morphism_count(); ++f) {
      if (groupoid.src(f) == base && groupoid.tgt(f) == y) candidates.push_back(f);
    }
    require(!candidates.empty(),
            "no morphism from the base to " + groupoid.object_label(y));
    out.theta[y] = candidates[rng() % candidates.size()];
  }
  return out;
}

MorphismId theta_conjugate(const FinCategory& groupoid, const ThetaFamily& theta,
                           MorphismId alpha) {
  require(alpha < groupoid.morphism_count(), "morphism out of range");
  MorphismId into = theta.theta[groupoid.src(alpha)];
  MorphismId back = inverse_or_throw(groupoid, theta.theta[groupoid.tgt(alpha)]);
  MorphismId middle = groupoid.composite(alpha, into);
  return groupoid.composite(back, middle);
}

MorphismPartition theta_concentration(const FinCategory& groupoid, const ThetaFamily& theta) {
  require(is_groupoid(groupoid), "theta concentration requires a groupoid");
  require(is_connected(groupoid), "theta concentration requires a connected groupoid");
  validate_theta(groupoid, theta);

  std::vector<std::uint32_t> class_of(groupoid.morphism_count());
  std::map<MorphismId, std::uint32_t> loop_class;
  for (MorphismId alpha = 0; alpha < groupoid.morphism_count(); ++alpha) {
    MorphismId loop = theta_conjugate(groupoid, theta, alpha);
    auto [it, inserted] = loop_class.emplace(loop, static_cast<std::uint32_t>(loop_class.size()));
    class_of[alpha] = it->second;
  }
  MorphismPartition part = partition_from_class_of(std::move(class_of));
  if (!check_concentration(groupoid, part, 2).is_concentration()) {
    throw internal_error("theta relation failed the concentration axioms");
  }
  return part;
}

VertexGroup vertex_group(const FinCategory& groupoid, ObjectId at) {
  require(at < groupoid.object_count(), "object out of range");
  VertexGroup out;
  for (MorphismId f = 0; f < groupoid.morphism_count(); ++f) {
    if (groupoid.src(f) == at && groupoid.tgt(f) == at) out.loops.push_back(f);
  }
  require(!out.loops.empty(), "empty vertex monoid");
  std::map<MorphismId, std::uint32_t> index;
  for (std::uint32_t i = 0; i < out.loops.size(); ++i) index[out.loops[i]] = i;
  const std::size_t k = out.loops.size();
  std::vector<std::vector<std::uint32_t>> rows(k, std::vector<std::uint32_t>(k));
  std::vector<std::string> labels(k);
  for (std::size_t i = 0; i < k; ++i) {
    labels[i] = groupoid.morphism_label(out.loops[i]);
    for (std::size_t j = 0; j < k; ++j) {
      MorphismId composite = groupoid.composite(out.loops[i], out.loops[j]);
      require(composite != kNoMorphism, "vertex hom-set is not closed under composition");
      rows[i][j] = index.at(composite);
    }
  }
  out.monoid = std::make_shared<FinMonoid>(make_monoid(rows, std::move(labels)));
  return out;
}

MonoidHom theta_vertex_isomorphism(const FinCategory& groupoid, const ThetaFamily& theta,
                                   const MorphismPartition& part) {
  require_consistent(groupoid, part);
  ConcentrationMonoid cm = concentration_monoid(groupoid, part);
  VertexGroup vertex = vertex_group(groupoid, theta.base);
  std::map<MorphismId, std::uint32_t> loop_index;
  for (std::uint32_t i = 0; i < vertex.loops.size(); ++i) loop_index[vertex.loops[i]] = i;

  MonoidHom hom;
  hom.source = cm.monoid;
  hom.target = vertex.monoid;
  hom.map.resize(part.class_count());
  for (std::uint32_t cls = 0; cls < part.class_count(); ++cls) {
    MorphismId loop = theta_conjugate(groupoid, theta, part.classes[cls].front());
    for (MorphismId member : part.classes[cls]) {
      if (theta_conjugate(groupoid, theta, member) != loop) {
        throw internal_error("theta conjugation is not constant on a class");
      }
    }
    hom.map[cls] = loop_index.at(loop);
  }
  if (!check_monoid_hom(hom) || !is_bijective(hom)) {
    throw internal_error("theta conjugation is not an isomorphism onto the vertex group");
  }
  return hom;
}

FunctorData theta_change_functor(CatRef groupoid, const ThetaFamily& first,
                                 const ThetaFamily& second, MorphismId rho) {
  require(groupoid != nullptr, "null category");
  const FinCategory& cat = *groupoid;
  validate_theta(cat, first);
  validate_theta(cat, second);
  require(rho < cat.morphism_count() && cat.src(rho) == first.base && cat.tgt(rho) == second.base,
          "rho must run from the first base to the second");

  MorphismId rho_inverse = inverse_or_throw(cat, rho);
  FunctorData fun;
  fun.source = groupoid;
  fun.target = groupoid;
  fun.obj_map.resize(cat.object_count());
  for (ObjectId a = 0; a < cat.object_count(); ++a) fun.obj_map[a] = a;
  fun.mor_map.resize(cat.morphism_count());
  for (MorphismId alpha = 0; alpha < cat.morphism_count(); ++alpha) {
    ObjectId a = cat.src(alpha);
    ObjectId b = cat.tgt(alpha);
    MorphismId image = inverse_or_throw(cat, second.theta[a]);
    image = cat.composite(rho_inverse, image);
    image = cat.composite(first.theta[a], image);
    image = cat.composite(alpha, image);
    image = cat.composite(inverse_or_throw(cat, first.theta[b]), image);
    image = cat.composite(rho, image);
    image = cat.composite(second.theta[b], image);
    fun.mor_map[alpha] = image;
  }
  if (!check_functor(fun).ok) {
    throw internal_error("theta change construction is not a functor");
  }
  return fun;
}

CodiscreteCover codiscrete_cover(MonoidRef group) {
  require(group != nullptr && group->is_group, "codiscrete cover requires a group");
  const std::size_t n = group->size();

  CategoryBuilder builder;
  for (std::uint32_t g = 0; g < n; ++g) builder.add_object(group->labels[g]);
  auto pair_morphism = [n](std::uint32_t from, std::uint32_t to) {
    return static_cast<MorphismId>(from * n + to);
  };
  for (std::uint32_t from = 0; from < n; ++from) {
    for (std::uint32_t to = 0; to < n; ++to) {
      builder.add_morphism("(" + group->labels[from] + "->" + group->labels[to] + ")", from, to);
    }
  }
  for (std::uint32_t g = 0; g < n; ++g) builder.set_identity(g, pair_morphism(g, g));
  for (std::uint32_t from = 0; from < n; ++from) {
    for (std::uint32_t mid = 0; mid < n; ++mid) {
      for (std::uint32_t to = 0; to < n; ++to) {
        builder.set_composite(pair_morphism(mid, to), pair_morphism(from, mid),
                              pair_morphism(from, to));
      }
    }
  }

  CodiscreteCover out;
  out.cover = std::make_shared<FinCategory>(std::move(builder).build());
  out.base = std::make_shared<FinCategory>(one_object_category(*group));
  out.projection.source = out.cover;
  out.projection.target = out.base;
  out.projection.obj_map.assign(n, 0);
  out.projection.mor_map.resize(n * n);
  std::vector<std::uint32_t> inverse = inversion_map(*group);
  for (std::uint32_t from = 0; from < n; ++from) {
    for (std::uint32_t to = 0; to < n; ++to) {
      out.projection.mor_map[pair_morphism(from, to)] = group->mul(to, inverse[from]);
    }
  }
  if (!check_functor(out.projection).ok) {
    throw internal_error("codiscrete cover projection is not a functor");
  }
  if (!check_multivalued_fibration(out.projection).ok ||
      !check_surjective_on_morphisms(out.projection)) {
    throw internal_error("codiscrete cover projection is not a surjective multivalued fibration");
  }
  if (!is_equivalent_to_trivial(*out.cover)) {
    throw internal_error("codiscrete cover is not codiscrete");
  }
  out.partition = pullback_concentration(out.projection, discrete_partition(*out.base));
  return out;
}

}  // namespace concentra
