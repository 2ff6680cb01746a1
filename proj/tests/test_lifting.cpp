#include <doctest.h>

#include "concentra/fixtures.hpp"
#include "concentra/groupoid.hpp"
#include "concentra/lifting.hpp"

using namespace concentra;

namespace {

bool isomorphic(const FinMonoid& a, const FinMonoid& b) {
  return find_isomorphism(a, b).has_value();
}

// All (cat, part) pairs the property suites run over.
std::vector<std::pair<CatRef, MorphismPartition>> concentration_fixtures() {
  std::vector<std::pair<CatRef, MorphismPartition>> out;
  CatRef e1 = fixtures::e1();
  out.emplace_back(e1, fixtures::e1_sim_a());
  out.emplace_back(e1, fixtures::e1_sim_b());
  out.emplace_back(e1, fixtures::e1_sim_c());
  out.emplace_back(e1, fixtures::e1_sim_d());
  out.emplace_back(e1, trivial_concentration(*e1));
  out.emplace_back(fixtures::klein_category(), fixtures::klein_colors());
  out.emplace_back(fixtures::z3_category(), fixtures::z3_colors());
  auto bz4 = std::make_shared<FinCategory>(one_object_category(cyclic_group(4)));
  out.emplace_back(bz4, discrete_partition(*bz4));
  return out;
}

}  // namespace

TEST_CASE("the collapse functor is surjective but not 2-lifting") {
  fixtures::CollapseFixture collapse = fixtures::collapse_functor();
  CHECK(check_surjective_on_morphisms(collapse.functor));
  LiftCheck lift = check_2_lifting(collapse.functor);
  CHECK_FALSE(lift.ok);
  REQUIRE(lift.witness.has_value());
  CHECK(*lift.witness == std::pair<MorphismId, MorphismId>{1, 1});

  FibrationCheck fibration = check_multivalued_fibration(collapse.functor);
  CHECK_FALSE(fibration.ok);
  REQUIRE(fibration.witness.has_value());
  CHECK(fibration.witness->first == 1);  // the nontrivial loop has stranded objects
}

TEST_CASE("identity functors lift everything") {
  FunctorData id = identity_functor(fixtures::e1());
  CHECK(check_2_lifting(id).ok);
  CHECK(check_multivalued_fibration(id).ok);
  CHECK(check_surjective_on_morphisms(id));
}

TEST_CASE("the codiscrete projection is a surjective multivalued fibration") {
  CodiscreteCover cover = codiscrete_cover(fixtures::standard_groups().at("z2"));
  CHECK(check_surjective_on_morphisms(cover.projection));
  CHECK(check_multivalued_fibration(cover.projection).ok);
  CHECK(check_2_lifting(cover.projection).ok);
}

TEST_CASE("concentrating functors are 2-lifting and pull the discrete partition back") {
  for (const auto& [cat, part] : concentration_fixtures()) {
    ConcentratingFunctor cf = concentrating_functor(cat, part);
    CHECK(check_2_lifting(cf.functor).ok);
    CHECK(is_concentration_preserving(cf.functor, part, discrete_partition(*cf.target))
              .preserving);
    MorphismPartition pulled = pullback_concentration(cf.functor, discrete_partition(*cf.target));
    CHECK(pulled == part);
  }
}

TEST_CASE("pullback along the identity returns the same partition") {
  auto e1 = fixtures::e1();
  MorphismPartition sim_b = fixtures::e1_sim_b();
  CHECK(pullback_concentration(identity_functor(e1), sim_b) == sim_b);
}

TEST_CASE("pullback refuses functors that are not 2-lifting") {
  fixtures::CollapseFixture collapse = fixtures::collapse_functor();
  CHECK_THROWS_AS(
      pullback_concentration(collapse.functor, discrete_partition(*collapse.base)),
      std::invalid_argument);
}

TEST_CASE("pullback along the codiscrete projection groups pairs by their quotient") {
  MonoidRef s3 = fixtures::standard_groups().at("s3");
  CodiscreteCover cover = codiscrete_cover(s3);
  MorphismPartition part = pullback_concentration(cover.projection, discrete_partition(*cover.base));
  CHECK(part == cover.partition);
  CHECK(part.class_count() == 6);
  for (const auto& cls : part.classes) {
    CHECK(cls.size() == 6);
    MorphismId image = cover.projection.mor_map[cls.front()];
    for (MorphismId f : cls) CHECK(cover.projection.mor_map[f] == image);
  }
  CHECK(isomorphic(*concentration_monoid(*cover.cover, part).monoid, *s3));
}

TEST_CASE("2-lifting functors induce isomorphisms on the concentration monoids") {
  // the concentrating functor of every fixture, plus the codiscrete
  // projection
  for (const auto& [cat, part] : concentration_fixtures()) {
    ConcentratingFunctor cf = concentrating_functor(cat, part);
    MorphismPartition discrete = discrete_partition(*cf.target);
    MonoidHom hom = induced_hom(cf.functor, pullback_concentration(cf.functor, discrete), discrete);
    CHECK(check_monoid_hom(hom));
    CHECK(is_bijective(hom));
  }
  CodiscreteCover cover = codiscrete_cover(fixtures::standard_groups().at("klein"));
  MorphismPartition discrete = discrete_partition(*cover.base);
  MonoidHom hom = induced_hom(cover.projection, cover.partition, discrete);
  CHECK(check_monoid_hom(hom));
  CHECK(is_bijective(hom));
}

TEST_CASE("the concentrating functor of a discrete one-object category is the identity shape") {
  auto bz6 = std::make_shared<FinCategory>(one_object_category(cyclic_group(6)));
  ConcentratingFunctor cf = concentrating_functor(bz6, discrete_partition(*bz6));
  for (MorphismId f = 0; f < cf.functor.mor_map.size(); ++f) CHECK(cf.functor.mor_map[f] == f);
  CHECK(cf.monoid.monoid->table == cyclic_group(6).table);
}

TEST_CASE("the colored z3 fixture concentrates onto the one-object Z/3 category") {
  auto cat = fixtures::z3_category();
  ConcentratingFunctor cf = concentrating_functor(cat, fixtures::z3_colors());
  CHECK(cf.target->morphism_count() == 3);
  CHECK(isomorphic(*cf.monoid.monoid, cyclic_group(3)));
}

TEST_CASE("externalize and internalize are inverse presentations") {
  auto e1 = fixtures::e1();
  MorphismPartition sim_a = fixtures::e1_sim_a();

  FunctorData external = externalize(e1, sim_a);
  CHECK(internalize(external) == sim_a);

  // with a requested target monoid the functor lands exactly on its table
  FunctorData onto_z4 = externalize(e1, sim_a, cyclic_group(4));
  CHECK(check_2_lifting(onto_z4).ok);
  CHECK(onto_z4.target->morphism_count() == 4);
  CHECK(internalize(onto_z4) == sim_a);
  CHECK_THROWS_AS(externalize(e1, sim_a, klein_four_group()), std::invalid_argument);

  CodiscreteCover cover = codiscrete_cover(fixtures::standard_groups().at("z2"));
  MorphismPartition internal = internalize(cover.projection);
  CHECK(internal.class_count() == 2);
  CHECK(isomorphic(*concentration_monoid(*cover.cover, internal).monoid, cyclic_group(2)));
}

TEST_CASE("internalize requires a one-object target") {
  CHECK_THROWS_AS(internalize(identity_functor(fixtures::e1())), std::invalid_argument);
}

TEST_CASE("adjunction triangle identities") {
  for (const auto& [cat, part] : concentration_fixtures()) {
    CHECK(verify_adjunction_triangles(cat, part));
  }
  for (unsigned n = 2; n <= 6; ++n) CHECK(verify_adjunction_triangles_monoid(cyclic_group(n)));
  CHECK(verify_adjunction_triangles_monoid(symmetric_group(3)));
  CHECK(verify_adjunction_triangles_monoid(klein_four_group()));
}

namespace {

// Enumerates every functor between two small categories by brute force.
template <typename Fn>
void for_each_functor(const CatRef& source, const CatRef& target, Fn&& fn) {
  const std::size_t n_obj = source->object_count();
  const std::size_t n_mor = source->morphism_count();
  std::vector<ObjectId> obj_map(n_obj, 0);
  while (true) {
    std::vector<MorphismId> mor_map(n_mor, 0);
    while (true) {
      FunctorData fun;
      fun.source = source;
      fun.target = target;
      fun.obj_map = obj_map;
      fun.mor_map = mor_map;
      if (check_functor(fun).ok) fn(fun);
      std::size_t pos = 0;
      while (pos < n_mor && ++mor_map[pos] == target->morphism_count()) mor_map[pos++] = 0;
      if (pos == n_mor) break;
    }
    std::size_t pos = 0;
    while (pos < n_obj && ++obj_map[pos] == target->object_count()) obj_map[pos++] = 0;
    if (pos == n_obj) break;
  }
}

}  // namespace

TEST_CASE("surjective multivalued fibrations are 2-lifting on all small functors") {
  std::vector<CatRef> cats = {
      std::make_shared<FinCategory>(one_object_category(cyclic_group(2))),
      std::make_shared<FinCategory>(one_object_category(cyclic_group(3))),
      std::make_shared<FinCategory>(one_object_category(cyclic_group(4))),
      codiscrete_cover(fixtures::standard_groups().at("z2")).cover,  // 4 morphisms
  };
  int functors = 0, fibrations = 0;
  for (const CatRef& source : cats) {
    for (const CatRef& target : cats) {
      for_each_functor(source, target, [&](const FunctorData& fun) {
        ++functors;
        if (check_multivalued_fibration(fun).ok && check_surjective_on_morphisms(fun)) {
          ++fibrations;
          CHECK(check_2_lifting(fun).ok);
        }
      });
    }
  }
  CHECK(functors >= 30);  // the sweep is not vacuous
  CHECK(fibrations >= 5);
}
