#include <doctest.h>

#include <set>

#include "concentra/concentration.hpp"
#include "concentra/fixtures.hpp"
#include "concentra/monoid.hpp"

using namespace concentra;

namespace {

bool isomorphic(const FinMonoid& a, const FinMonoid& b) {
  return find_isomorphism(a, b).has_value();
}

}  // namespace

TEST_CASE("monoid construction validates the table") {
  CHECK_THROWS_AS(make_monoid({{1, 0}, {0, 0}}), std::invalid_argument);  // no identity
  // (1*2)*2 = 1 while 1*(2*2) = 0
  CHECK_THROWS_AS(make_monoid({{0, 1, 2}, {1, 0, 2}, {2, 2, 1}}), std::invalid_argument);
  FinMonoid z3 = cyclic_group(3);
  CHECK(z3.is_group);
  CHECK(z3.identity == 0);
  CHECK(validate_monoid(z3).ok);
}

TEST_CASE("group builders") {
  CHECK(symmetric_group(3).size() == 6);
  CHECK(symmetric_group(3).is_group);
  // non-abelian: (01)(012) != (012)(01)
  FinMonoid s3 = symmetric_group(3);
  bool abelian = true;
  for (std::uint32_t a = 0; a < 6 && abelian; ++a) {
    for (std::uint32_t b = 0; b < 6; ++b) {
      if (s3.mul(a, b) != s3.mul(b, a)) {
        abelian = false;
        break;
      }
    }
  }
  CHECK_FALSE(abelian);
  CHECK(klein_four_group().size() == 4);
  CHECK_FALSE(isomorphic(klein_four_group(), cyclic_group(4)));
  CHECK(isomorphic(direct_product(cyclic_group(2), cyclic_group(3)), cyclic_group(6)));
}

TEST_CASE("concentration monoids of the e1 partitions match the reported groups") {
  auto e1 = fixtures::e1();
  auto monoid_of = [&](const MorphismPartition& part) {
    return concentration_monoid(*e1, part).monoid;
  };
  CHECK(isomorphic(*monoid_of(fixtures::e1_sim_a()), cyclic_group(4)));
  CHECK(isomorphic(*monoid_of(fixtures::e1_sim_b()), cyclic_group(2)));
  CHECK(isomorphic(*monoid_of(fixtures::e1_sim_c()), cyclic_group(4)));
  CHECK(isomorphic(*monoid_of(fixtures::e1_sim_d()), cyclic_group(2)));
}

TEST_CASE("colored fixtures produce the Klein group and Z/3") {
  auto klein = fixtures::klein_category();
  CHECK(isomorphic(*concentration_monoid(*klein, fixtures::klein_colors()).monoid,
                   klein_four_group()));
  auto z3cat = fixtures::z3_category();
  CHECK(isomorphic(*concentration_monoid(*z3cat, fixtures::z3_colors()).monoid, cyclic_group(3)));
}

TEST_CASE("the trivial concentration has the one-element monoid") {
  auto e1m = fixtures::e1m();
  ConcentrationMonoid cm = concentration_monoid(*e1m, trivial_concentration(*e1m));
  CHECK(cm.monoid->size() == 1);
  CHECK(cm.monoid->is_group);
}

TEST_CASE("groupoid fixtures give groups and the criterion holds") {
  auto e1 = fixtures::e1();
  CHECK(every_class_contains_isomorphism(*e1, fixtures::e1_sim_a()));
  CHECK(concentration_monoid(*e1, fixtures::e1_sim_a()).monoid->is_group);
  auto klein = fixtures::klein_category();
  CHECK(every_class_contains_isomorphism(*klein, fixtures::klein_colors()));
  CHECK(concentration_monoid(*klein, fixtures::klein_colors()).monoid->is_group);
  // e1m has a non-invertible arrow, but its only concentration is trivial and
  // the single class still contains an isomorphism.
  auto e1m = fixtures::e1m();
  CHECK(every_class_contains_isomorphism(*e1m, trivial_concentration(*e1m)));
}

TEST_CASE("the monoid table does not depend on the representatives") {
  // Stronger than resampling: every composable representative pair of every
  // class pair must give the same composite class.
  for (auto [cat, part] :
       std::vector<std::pair<CatRef, MorphismPartition>>{{fixtures::e1(), fixtures::e1_sim_a()},
                                                         {fixtures::klein_category(),
                                                          fixtures::klein_colors()}}) {
    ConcentrationMonoid cm = concentration_monoid(*cat, part);
    for (std::uint32_t a = 0; a < part.class_count(); ++a) {
      for (std::uint32_t b = 0; b < part.class_count(); ++b) {
        for (MorphismId f : part.classes[a]) {
          for (MorphismId g : part.classes[b]) {
            if (!cat->composable(f, g)) continue;
            CHECK(part.class_of[cat->composite(f, g)] == cm.monoid->mul(a, b));
          }
        }
      }
    }
  }
}

TEST_CASE("concentration_monoid refuses partitions that fail the axioms") {
  auto e1 = fixtures::e1();
  CHECK_THROWS_AS(concentration_monoid(*e1, discrete_partition(*e1)), std::invalid_argument);
}

TEST_CASE("induced homomorphisms") {
  auto e1 = fixtures::e1();
  MorphismPartition sim_a = fixtures::e1_sim_a();

  MonoidHom identity_hom = induced_hom(identity_functor(e1), sim_a, sim_a);
  for (std::uint32_t c = 0; c < identity_hom.map.size(); ++c) CHECK(identity_hom.map[c] == c);

  // The concentrating functor induces an isomorphism onto the discrete
  // concentration monoid of its one-object target.
  auto bz4 = std::make_shared<FinCategory>(
      one_object_category(*concentration_monoid(*e1, sim_a).monoid));
  FunctorData concentrate;
  concentrate.source = e1;
  concentrate.target = bz4;
  concentrate.obj_map = {0, 0};
  concentrate.mor_map = concentration_monoid(*e1, sim_a).class_map;
  REQUIRE(check_functor(concentrate).ok);
  MonoidHom onto = induced_hom(concentrate, sim_a, discrete_partition(*bz4));
  CHECK(check_monoid_hom(onto));
  CHECK(is_bijective(onto));

  CHECK_THROWS_AS(induced_hom(identity_functor(e1), sim_a, discrete_partition(*e1)),
                  std::invalid_argument);
}

TEST_CASE("functoriality of the induced homomorphism") {
  auto e1 = fixtures::e1();
  MorphismPartition sim_a = fixtures::e1_sim_a();
  ConcentrationMonoid cm = concentration_monoid(*e1, sim_a);
  auto bz4 = std::make_shared<FinCategory>(one_object_category(*cm.monoid));
  auto bz2 = std::make_shared<FinCategory>(one_object_category(cyclic_group(2)));

  FunctorData first;
  first.source = e1;
  first.target = bz4;
  first.obj_map = {0, 0};
  first.mor_map = cm.class_map;
  REQUIRE(check_functor(first).ok);

  // the mod-2 homomorphism Z/4 -> Z/2 as a functor between the one-object
  // categories; [1_D] is the generator (index 2 in canonical class order)
  FunctorData second;
  second.source = bz4;
  second.target = bz2;
  second.obj_map = {0};
  second.mor_map.resize(4);
  for (std::uint32_t e = 0; e < 4; ++e) {
    // order of the element inside Z/4 decides its parity
    std::uint32_t power = e;
    int steps = 1;
    while (power != cm.monoid->identity) {
      power = cm.monoid->mul(power, e);
      ++steps;
    }
    second.mor_map[e] = (steps == 4) ? 1 : 0;  // generators are odd
  }
  REQUIRE(check_functor(second).ok);

  MorphismPartition dis4 = discrete_partition(*bz4);
  MorphismPartition dis2 = discrete_partition(*bz2);
  MonoidHom composite_hom = induced_hom(compose_functors(second, first), sim_a, dis2);
  MonoidHom chained = compose_homs(induced_hom(second, dis4, dis2), induced_hom(first, sim_a, dis4));
  CHECK(composite_hom.map == chained.map);
}

TEST_CASE("the sub-concentration inclusion induces an injective homomorphism") {
  auto e1 = fixtures::e1();
  MorphismPartition sim_a = fixtures::e1_sim_a();

  // B = {D; 0_D, 2_D} with the discrete relation, included into (e1, sim_a).
  CategoryBuilder builder;
  ObjectId d = builder.add_object("D");
  builder.add_morphism("0_D", d, d);
  builder.add_morphism("2_D", d, d);
  builder.set_identity(d, 0);
  builder.set_composite(0, 0, 0);
  builder.set_composite(0, 1, 1);
  builder.set_composite(1, 0, 1);
  builder.set_composite(1, 1, 0);
  auto sub = std::make_shared<FinCategory>(std::move(builder).build());

  FunctorData include;
  include.source = sub;
  include.target = e1;
  include.obj_map = {1};
  include.mor_map = {2, 4};
  REQUIRE(check_functor(include).ok);

  MonoidHom hom = induced_hom(include, discrete_partition(*sub), sim_a);
  CHECK(check_monoid_hom(hom));
  std::set<std::uint32_t> image(hom.map.begin(), hom.map.end());
  CHECK(image.size() == hom.map.size());  // injective
  CHECK(image == std::set<std::uint32_t>{sim_a.class_of[2], sim_a.class_of[4]});
  CHECK(isomorphic(*hom.source, cyclic_group(2)));
}

TEST_CASE("isomorphism search") {
  CHECK(isomorphic(cyclic_group(4), cyclic_group(4)));
  CHECK_FALSE(isomorphic(cyclic_group(4), klein_four_group()));
  CHECK_FALSE(isomorphic(cyclic_group(6), symmetric_group(3)));

  auto identity_map_on_z4 = find_isomorphism(cyclic_group(4), cyclic_group(4));
  REQUIRE(identity_map_on_z4.has_value());
  CHECK(*identity_map_on_z4 == std::vector<std::uint32_t>{0, 1, 2, 3});

  // every returned bijection preserves the table entry-wise
  FinMonoid left = symmetric_group(3);
  FinMonoid right = semidirect_monoid(cyclic_group(3), cyclic_group(2),
                                      {{0, 1, 2}, inversion_map(cyclic_group(3))});
  auto iso = find_isomorphism(left, right);
  REQUIRE(iso.has_value());
  for (std::uint32_t a = 0; a < left.size(); ++a) {
    for (std::uint32_t b = 0; b < left.size(); ++b) {
      CHECK((*iso)[left.mul(a, b)] == right.mul((*iso)[a], (*iso)[b]));
    }
  }
}

TEST_CASE("normal submonoids and quotients") {
  FinMonoid z4 = cyclic_group(4);
  CHECK(is_submonoid(z4, {0, 2}));
  CHECK_FALSE(is_submonoid(z4, {1, 3}));  // misses the identity
  CHECK(is_normal_submonoid(z4, {0, 2}));

  QuotientMonoid quotient = quotient_by_normal_submonoid(z4, {0, 2});
  CHECK(isomorphic(quotient.monoid, cyclic_group(2)));
  CHECK_FALSE(quotient.closure_was_needed);
  CHECK(quotient.class_of == std::vector<std::uint32_t>{0, 1, 0, 1});  // {0,2} and {1,3}

  QuotientMonoid by_identity = quotient_by_normal_submonoid(z4, {0});
  CHECK(isomorphic(by_identity.monoid, z4));

  FinMonoid s3 = symmetric_group(3);
  // even permutations in the one-line lex order: 012, 120, 201
  std::vector<std::uint32_t> alternating = {0, 3, 4};
  CHECK(is_normal_submonoid(s3, alternating));
  CHECK(isomorphic(quotient_by_normal_submonoid(s3, alternating).monoid, cyclic_group(2)));
  // a two-element subgroup generated by a transposition is not normal
  CHECK(is_submonoid(s3, {0, 2}));
  CHECK_FALSE(is_normal_submonoid(s3, {0, 2}));
  CHECK_THROWS_AS(quotient_by_normal_submonoid(s3, {0, 2}), std::invalid_argument);
}

TEST_CASE("the two congruence variants coincide on subgroups of groups") {
  CHECK(quotient_relations_coincide(cyclic_group(4), {0, 2}));
  CHECK(quotient_relations_coincide(symmetric_group(3), {0, 3, 4}));
  CHECK(quotient_relations_coincide(cyclic_group(6), {0, 2, 4}));
}

TEST_CASE("semidirect products of monoids") {
  FinMonoid z3 = cyclic_group(3);
  FinMonoid z2 = cyclic_group(2);
  std::vector<std::uint32_t> identity = {0, 1, 2};

  FinMonoid s3_model = semidirect_monoid(z3, z2, {identity, inversion_map(z3)});
  CHECK(isomorphic(s3_model, symmetric_group(3)));

  FinMonoid product = semidirect_monoid(z3, z2, {identity, identity});
  CHECK(isomorphic(product, cyclic_group(6)));

  FinMonoid klein_model = semidirect_monoid(z2, z2, {{0, 1}, {0, 1}});
  CHECK(isomorphic(klein_model, klein_four_group()));

  // phi must be a homomorphism into the automorphisms
  CHECK_THROWS_AS(semidirect_monoid(z3, z2, {inversion_map(z3), identity}),
                  std::invalid_argument);
  CHECK_THROWS_AS(semidirect_monoid(z3, z2, {identity, {0, 0, 0}}), std::invalid_argument);
}
