#pragma once

#include <map>
#include <string>

#include "concentra/concentration.hpp"
#include "concentra/core.hpp"
#include "concentra/dirlim.hpp"
#include "concentra/monoid.hpp"

namespace concentra::fixtures {

/// Two objects C and D with endomorphism groups Z/2 and Z/4 and no cross
/// morphisms. Morphism ids: 0_C, 1_C, 0_D, 1_D, 2_D, 3_D.
CatRef e1();
MorphismPartition e1_sim_a();  // {0_C,0_D} {1_C,2_D} {1_D} {3_D}
MorphismPartition e1_sim_b();  // {0_C,0_D,2_D} {1_C,1_D,3_D}
MorphismPartition e1_sim_c();  // {0_C,1_C,0_D} {1_D} {2_D} {3_D}
MorphismPartition e1_sim_d();  // {0_C,0_D,1_D,2_D,3_D} {1_C}

/// e1 extended by a unique morphism C -> D (id 6).
CatRef e1m();

/// Two objects, four parallel morphisms in every hom-set, indexed by the
/// Klein four-group; composition adds the indices.
CatRef klein_category();
MorphismPartition klein_colors();

/// Three objects C, D, E with hom-sets C->E, E->D, C->D of three parallel
/// morphisms each, indexed by Z/3; no composable chain of length three
/// avoids the identities.
CatRef z3_category();
MorphismPartition z3_colors();

/// Surjective functor that is not 2-lifting: the three-arrow path category
/// (f: C->D, g: D->E, h = g∘f) collapsed onto the one-object category of
/// Z/2 by f -> 0, g -> 1, h -> 1.
struct CollapseFixture {
  CatRef path;
  CatRef base;
  FunctorData functor;
};
CollapseFixture collapse_functor();

/// Chain C <= D with groups Z/2 -> Z/4 connected by doubling, acted on
/// trivially.
struct ChainFixture {
  DirectedPoset poset;
  GroupDiagram diagram;
  PosetAction no_action;         // trivial group
  PosetAction z2_trivial_action; // Z/2 acting trivially
};
ChainFixture chain_z2_z4();

/// Vee poset A, B <= T, constant diagram Z/2 with identity maps, acted on by
/// Z/2 swapping A and B.
struct VeeFixture {
  DirectedPoset poset;
  GroupDiagram diagram;
  PosetAction swap_action;
  PosetAction z2_trivial_action;
};
VeeFixture vee_z2();

/// Single-element poset carrying Z/6.
struct PointFixture {
  DirectedPoset poset;
  GroupDiagram diagram;
  PosetAction no_action;
  PosetAction z2_trivial_action;
};
PointFixture point_z6();

/// Shared group tables: triv, z2, z3, z4, z6, klein, s3.
const std::map<std::string, MonoidRef>& standard_groups();

}  // namespace concentra::fixtures
