#pragma once

#include <cstdint>

#include "concentra/concentration.hpp"
#include "concentra/core.hpp"
#include "concentra/lifting.hpp"
#include "concentra/monoid.hpp"

namespace concentra {

/// Connected groupoid on n objects whose hom-sets are copies of a fixed
/// group: Mor(a, b) = {(a, b, g)} with (b, c, h)∘(a, b, g) = (a, c, h*g).
struct TorsorGroupoid {
  CatRef category;
  MonoidRef group;
  std::size_t objects = 0;

  MorphismId morphism(ObjectId from, ObjectId to, std::uint32_t g) const {
    return (from * static_cast<MorphismId>(objects) + to) * static_cast<MorphismId>(group->size()) +
           g;
  }
};

TorsorGroupoid torsor_groupoid(MonoidRef group, std::size_t objects);

/// A base object together with one morphism from it to every object; the one
/// at the base itself is the identity.
struct ThetaFamily {
  ObjectId base = 0;
  std::vector<MorphismId> theta;  // per object
};

void validate_theta(const FinCategory& groupoid, const ThetaFamily& theta);

/// Deterministic family: the connecting morphism of each object is drawn by
/// a seeded generator from the hom-set out of the base.
ThetaFamily sample_theta(const FinCategory& groupoid, ObjectId base, std::uint64_t seed);

/// theta_tgt^{-1} ∘ alpha ∘ theta_src, a loop at the base object.
MorphismId theta_conjugate(const FinCategory& groupoid, const ThetaFamily& theta,
                           MorphismId alpha);

/// Morphisms are related when their theta-conjugates agree as loops at the
/// base. Requires a connected groupoid; the result is re-verified as a
/// concentration structure.
MorphismPartition theta_concentration(const FinCategory& groupoid, const ThetaFamily& theta);

struct VertexGroup {
  MonoidRef monoid;
  std::vector<MorphismId> loops;  // element index -> loop morphism
};

VertexGroup vertex_group(const FinCategory& groupoid, ObjectId at);

/// The explicit isomorphism [alpha] -> theta-conjugate of alpha from the
/// concentration monoid onto the vertex group at the base; verified to be a
/// bijective homomorphism.
MonoidHom theta_vertex_isomorphism(const FinCategory& groupoid, const ThetaFamily& theta,
                                   const MorphismPartition& part);

/// The comparison functor between the concentrations of two theta families,
/// conjugating by a connecting morphism rho from the first base to the
/// second: alpha maps to
/// sigma_b ∘ rho ∘ theta_b^{-1} ∘ alpha ∘ theta_a ∘ rho^{-1} ∘ sigma_a^{-1}.
FunctorData theta_change_functor(CatRef groupoid, const ThetaFamily& first,
                                 const ThetaFamily& second, MorphismId rho);

/// Codiscrete groupoid on the element set of a group, projected onto the
/// one-object category of the group by (g, h) -> h*g^{-1}, with the pullback
/// of the discrete partition. The projection is a surjective multivalued
/// fibration, the cover is equivalent to the trivial category, and the
/// concentration monoid recovers the group.
struct CodiscreteCover {
  CatRef cover;
  CatRef base;
  FunctorData projection;
  MorphismPartition partition;
};

CodiscreteCover codiscrete_cover(MonoidRef group);

}  // namespace concentra
