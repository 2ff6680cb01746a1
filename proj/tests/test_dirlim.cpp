#include <doctest.h>

#include <set>

#include "concentra/catalg.hpp"
#include "concentra/dirlim.hpp"
#include "concentra/fixtures.hpp"

using namespace concentra;

namespace {

bool isomorphic(const FinMonoid& a, const FinMonoid& b) {
  return find_isomorphism(a, b).has_value();
}

DirectedPoset antichain() {
  DirectedPoset poset;
  poset.elements = {"A", "B"};
  poset.leq = {1, 0, 0, 1};
  return poset;
}

}  // namespace

TEST_CASE("poset validation and the greatest element") {
  fixtures::ChainFixture chain = fixtures::chain_z2_z4();
  CHECK(validate_poset(chain.poset).ok);
  CHECK(greatest_element(chain.poset) == std::size_t{1});

  fixtures::VeeFixture vee = fixtures::vee_z2();
  CHECK(validate_poset(vee.poset).ok);
  CHECK(greatest_element(vee.poset) == std::size_t{2});

  ValidationReport report = validate_poset(antichain());
  CHECK_FALSE(report.ok);
  CHECK(report.violations.front().rule == "directedness");

  DirectedPoset cyclic;
  cyclic.elements = {"A", "B"};
  cyclic.leq = {1, 1, 1, 1};
  CHECK_FALSE(validate_poset(cyclic).ok);  // antisymmetry
}

TEST_CASE("direct categories of posets") {
  fixtures::ChainFixture chain = fixtures::chain_z2_z4();
  FinCategory thin = direct_category(chain.poset);
  CHECK(validate_category(thin).ok);
  CHECK(thin.morphism_count() == 3);

  fixtures::VeeFixture vee = fixtures::vee_z2();
  FinCategory vee_cat = direct_category(vee.poset);
  CHECK(validate_category(vee_cat).ok);
  CHECK(vee_cat.morphism_count() == 5);
  // the two composable non-identity arrows compose to the long arrow
  for (MorphismId f = 0; f < vee_cat.morphism_count(); ++f) {
    for (MorphismId g = 0; g < vee_cat.morphism_count(); ++g) {
      if (!vee_cat.composable(f, g)) continue;
      MorphismId fg = vee_cat.composite(f, g);
      CHECK(vee_cat.src(fg) == vee_cat.src(g));
      CHECK(vee_cat.tgt(fg) == vee_cat.tgt(f));
    }
  }

  CHECK_THROWS_AS(direct_category(antichain()), std::invalid_argument);
}

TEST_CASE("diagram validation catches non-homomorphisms and incoherence") {
  fixtures::ChainFixture chain = fixtures::chain_z2_z4();
  CHECK(validate_diagram(chain.poset, chain.diagram).ok);

  GroupDiagram broken = chain.diagram;
  broken.hom_of[{0, 1}] = {0, 1};  // 1 + 1 = 0 would need to land on 1 + 1 = 2
  CHECK_FALSE(validate_diagram(chain.poset, broken).ok);

  GroupDiagram missing = chain.diagram;
  missing.hom_of.erase({0, 1});
  CHECK_FALSE(validate_diagram(chain.poset, missing).ok);
}

TEST_CASE("action validation enforces order preservation and equivariance") {
  fixtures::VeeFixture vee = fixtures::vee_z2();
  CHECK(validate_action(vee.poset, vee.diagram, vee.swap_action).ok);
  CHECK(validate_action(vee.poset, vee.diagram, vee.z2_trivial_action).ok);

  PosetAction not_order_preserving = vee.swap_action;
  not_order_preserving.perm_of[1] = {2, 1, 0};  // sends T below A
  CHECK_FALSE(validate_action(vee.poset, vee.diagram, not_order_preserving).ok);

  // breaking hom equality under the swap breaks equivariance
  GroupDiagram uneven = vee.diagram;
  uneven.hom_of[{0, 2}] = {0, 0};  // trivial map from A, identity from B
  REQUIRE(validate_diagram(vee.poset, uneven).ok);
  ValidationReport report = validate_action(vee.poset, uneven, vee.swap_action);
  CHECK_FALSE(report.ok);
  bool found = false;
  for (const Violation& v : report.violations) found = found || v.rule == "equivariance-hom";
  CHECK(found);

  // registry identity matters: equal tables under different registry entries
  GroupDiagram copies = vee.diagram;
  copies.group_of[0] = std::make_shared<FinMonoid>(cyclic_group(2));
  CHECK_FALSE(validate_action(vee.poset, copies, vee.swap_action).ok);
}

TEST_CASE("the chain with the trivial action reproduces the two-object fixture") {
  fixtures::ChainFixture chain = fixtures::chain_z2_z4();
  SGCategory s0 = build_SG(chain.poset, chain.diagram, chain.no_action);

  auto e1 = fixtures::e1();
  REQUIRE(s0.category->morphism_count() == e1->morphism_count());
  CHECK(s0.category->object_count() == e1->object_count());
  // morphisms enumerate as (C,0), (C,1), (D,0..3), matching the e1 ids
  CHECK(s0.category->comp_table == e1->comp_table);
  for (MorphismId f = 0; f < e1->morphism_count(); ++f) {
    CHECK(s0.category->src(f) == e1->src(f));
    CHECK(s0.category->tgt(f) == e1->tgt(f));
  }
  CHECK(s0.partition == fixtures::e1_sim_a());
}

TEST_CASE("a single point carrying Z/6 yields the discrete one-object structure") {
  fixtures::PointFixture point = fixtures::point_z6();
  SGCategory sg = build_SG(point.poset, point.diagram, point.no_action);
  CHECK(sg.category->object_count() == 1);
  CHECK(sg.category->morphism_count() == 6);
  CHECK(sg.partition.class_count() == 6);
  CHECK(isomorphic(*equivariant_direct_limit(point.poset, point.diagram, point.no_action).monoid,
                   cyclic_group(6)));
}

TEST_CASE("the vee fixture with the swap action") {
  fixtures::VeeFixture vee = fixtures::vee_z2();
  SGCategory sg = build_SG(vee.poset, vee.diagram, vee.swap_action);
  CHECK(sg.category->morphism_count() == 12);  // 2 group elements x 3 objects x Z/2
  CHECK(sg.partition.class_count() == 4);      // group element x value at the top
  CHECK(is_groupoid(*sg.category));

  ConcentrationMonoid limit = equivariant_direct_limit(vee.poset, vee.diagram, vee.swap_action);
  CHECK(limit.monoid->is_group);
  CHECK(isomorphic(*limit.monoid, klein_four_group()));
}

TEST_CASE("equivariance violations are refused with a witness message") {
  fixtures::VeeFixture vee = fixtures::vee_z2();
  GroupDiagram uneven = vee.diagram;
  uneven.hom_of[{0, 2}] = {0, 0};
  CHECK_THROWS_WITH_AS(build_SG(vee.poset, uneven, vee.swap_action),
                       doctest::Contains("invalid action"), std::invalid_argument);
}

TEST_CASE("the classical limit of the chain is the four-element cyclic group") {
  fixtures::ChainFixture chain = fixtures::chain_z2_z4();
  ClassicalLimit limit = classical_direct_limit(chain.poset, chain.diagram);
  CHECK(isomorphic(*limit.monoid, cyclic_group(4)));
  // the doubling map identifies (C, a) with (D, 2a)
  CHECK(limit.class_of[0][0] == limit.class_of[1][0]);
  CHECK(limit.class_of[0][1] == limit.class_of[1][2]);
  CHECK(limit.class_of[1][1] != limit.class_of[1][3]);
}

TEST_CASE("the trivial-group limit agrees with the classical limit") {
  fixtures::ChainFixture chain = fixtures::chain_z2_z4();
  fixtures::VeeFixture vee = fixtures::vee_z2();
  fixtures::PointFixture point = fixtures::point_z6();

  CHECK(isomorphic(*equivariant_direct_limit(chain.poset, chain.diagram, chain.no_action).monoid,
                   *classical_direct_limit(chain.poset, chain.diagram).monoid));
  CHECK(isomorphic(*equivariant_direct_limit(vee.poset, vee.diagram,
                                             trivial_action(vee.poset)).monoid,
                   *classical_direct_limit(vee.poset, vee.diagram).monoid));
  CHECK(isomorphic(*equivariant_direct_limit(point.poset, point.diagram, point.no_action).monoid,
                   *classical_direct_limit(point.poset, point.diagram).monoid));
}

TEST_CASE("agreement at the top equals agreement at some upper bound") {
  fixtures::VeeFixture vee = fixtures::vee_z2();
  SGCategory sg = build_SG(vee.poset, vee.diagram, vee.swap_action);
  const std::size_t top = *greatest_element(vee.poset);

  for (MorphismId m1 = 0; m1 < sg.mors.size(); ++m1) {
    for (MorphismId m2 = 0; m2 < sg.mors.size(); ++m2) {
      const auto& [a, alpha, f] = sg.mors[m1];
      const auto& [b, beta, g] = sg.mors[m2];
      bool at_top = f == g && vee.diagram.hom(a, top)[alpha] ==
                                  vee.diagram.hom(b, top)[beta];
      bool at_some = false;
      if (f == g) {
        for (std::size_t c = 0; c < vee.poset.size(); ++c) {
          if (vee.poset.le(a, c) && vee.poset.le(b, c) &&
              vee.diagram.hom(a, c)[alpha] == vee.diagram.hom(b, c)[beta]) {
            at_some = true;
            break;
          }
        }
      }
      CHECK(at_top == at_some);
      CHECK(sg.partition.related(m1, m2) == at_top);
    }
  }
}

TEST_CASE("semidirect decomposition holds on the fixtures") {
  fixtures::VeeFixture vee = fixtures::vee_z2();
  DecompositionReport swapped =
      check_semidirect_decomposition(vee.poset, vee.diagram, vee.swap_action);
  CHECK(swapped.ok);
  CHECK(swapped.functor_ok);
  CHECK(swapped.concentration_isomorphism_ok);
  CHECK(swapped.monoid_isomorphism_ok);
  CHECK(isomorphic(*swapped.equivariant_limit, klein_four_group()));

  fixtures::ChainFixture chain = fixtures::chain_z2_z4();
  DecompositionReport plain =
      check_semidirect_decomposition(chain.poset, chain.diagram, chain.no_action);
  CHECK(plain.ok);
  CHECK(isomorphic(*plain.equivariant_limit, cyclic_group(4)));
}

TEST_CASE("trivially acting groups split as direct products") {
  fixtures::ChainFixture chain = fixtures::chain_z2_z4();
  fixtures::VeeFixture vee = fixtures::vee_z2();
  fixtures::PointFixture point = fixtures::point_z6();

  struct Case {
    const DirectedPoset& poset;
    const GroupDiagram& diagram;
    const PosetAction& action;
  };
  for (const Case& test : {Case{chain.poset, chain.diagram, chain.z2_trivial_action},
                           Case{vee.poset, vee.diagram, vee.z2_trivial_action},
                           Case{point.poset, point.diagram, point.z2_trivial_action}}) {
    DecompositionReport report =
        check_semidirect_decomposition(test.poset, test.diagram, test.action);
    CHECK(report.ok);
    FinMonoid product = direct_product(*classical_direct_limit(test.poset, test.diagram).monoid,
                                       *test.action.group);
    CHECK(isomorphic(*report.equivariant_limit, product));
  }
}

TEST_CASE("the trivial-group part is a sub-concentration of the full structure") {
  fixtures::VeeFixture vee = fixtures::vee_z2();
  SGCategory sg = build_SG(vee.poset, vee.diagram, vee.swap_action);

  // morphisms with the identity group component form S_H for H trivial
  SubcategoryData sub;
  for (ObjectId a = 0; a < sg.category->object_count(); ++a) sub.objects.push_back(a);
  for (MorphismId m = 0; m < sg.mors.size(); ++m) {
    if (sg.mors[m].f == vee.swap_action.group->identity) sub.morphisms.push_back(m);
  }
  REQUIRE(validate_subcategory(*sg.category, sub).ok);
  CHECK(check_closed(sg.category, sg.partition, sub));

  SubcategoryView view = materialize_subcategory(sg.category, sub);
  MonoidHom included =
      induced_hom(view.inclusion, restrict_partition(sg.partition, view), sg.partition);
  CHECK(check_monoid_hom(included));
  std::set<std::uint32_t> image(included.map.begin(), included.map.end());
  CHECK(image.size() == included.map.size());  // injective: a subgroup of the limit
  CHECK(isomorphic(*included.source, cyclic_group(2)));
}
