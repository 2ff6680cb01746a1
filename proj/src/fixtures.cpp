#include "concentra/fixtures.hpp"

namespace concentra::fixtures {

namespace {

CatRef build_e1(bool with_arrow) {
  CategoryBuilder builder;
  ObjectId c = builder.add_object("C");
  ObjectId d = builder.add_object("D");
  for (int k = 0; k < 2; ++k) builder.add_morphism(std::to_string(k) + "_C", c, c);
  for (int k = 0; k < 4; ++k) builder.add_morphism(std::to_string(k) + "_D", d, d);
  builder.set_identity(c, 0);
  builder.set_identity(d, 2);
  for (MorphismId a = 0; a < 2; ++a) {
    for (MorphismId b = 0; b < 2; ++b) builder.set_composite(a, b, (a + b) % 2);
  }
  for (MorphismId a = 0; a < 4; ++a) {
    for (MorphismId b = 0; b < 4; ++b) builder.set_composite(2 + a, 2 + b, 2 + (a + b) % 4);
  }
  if (with_arrow) {
    MorphismId u = builder.add_morphism("u", c, d);
    for (MorphismId b = 0; b < 2; ++b) builder.set_composite(u, b, u);
    for (MorphismId a = 0; a < 4; ++a) builder.set_composite(2 + a, u, u);
  }
  return std::make_shared<FinCategory>(std::move(builder).build());
}

}  // namespace

CatRef e1() { return build_e1(false); }
CatRef e1m() { return build_e1(true); }

MorphismPartition e1_sim_a() { return partition_from_classes(6, {{0, 2}, {1, 4}, {3}, {5}}); }
MorphismPartition e1_sim_b() { return partition_from_classes(6, {{0, 2, 4}, {1, 3, 5}}); }
MorphismPartition e1_sim_c() { return partition_from_classes(6, {{0, 1, 2}, {3}, {4}, {5}}); }
MorphismPartition e1_sim_d() { return partition_from_classes(6, {{0, 2, 3, 4, 5}, {1}}); }

namespace {

// Parallel-arrow category on a cyclic or Klein index group: every listed
// hom-set carries one morphism per group element and composition adds the
// indices. Identities are the 0-indexed endo-morphisms.
CatRef colored_category(const FinMonoid& colors, const std::vector<std::string>& objects,
                        const std::vector<std::pair<ObjectId, ObjectId>>& homs,
                        const std::vector<std::string>& color_names) {
  CategoryBuilder builder;
  for (const std::string& label : objects) builder.add_object(label);
  std::map<std::pair<ObjectId, ObjectId>, std::vector<MorphismId>> arrows;
  for (auto [from, to] : homs) {
    std::vector<MorphismId> ids;
    for (std::uint32_t x = 0; x < colors.size(); ++x) {
      ids.push_back(builder.add_morphism(
          color_names[x] + "_" + objects[from] + "^" + objects[to], from, to));
    }
    arrows[{from, to}] = std::move(ids);
  }
  for (ObjectId a = 0; a < objects.size(); ++a) {
    builder.set_identity(a, arrows.at({a, a})[colors.identity]);
  }
  for (const auto& [outer, outer_ids] : arrows) {
    for (const auto& [inner, inner_ids] : arrows) {
      if (outer.first != inner.second) continue;
      auto target = arrows.find({inner.first, outer.second});
      if (target == arrows.end()) continue;
      for (std::uint32_t x = 0; x < colors.size(); ++x) {
        for (std::uint32_t y = 0; y < colors.size(); ++y) {
          builder.set_composite(outer_ids[x], inner_ids[y], target->second[colors.mul(x, y)]);
        }
      }
    }
  }
  return std::make_shared<FinCategory>(std::move(builder).build());
}

MorphismPartition color_partition(const FinCategory& cat, std::size_t colors) {
  std::vector<std::uint32_t> class_of(cat.morphism_count());
  for (MorphismId f = 0; f < class_of.size(); ++f) {
    class_of[f] = f % static_cast<std::uint32_t>(colors);
  }
  return partition_from_class_of(std::move(class_of));
}

}  // namespace

CatRef klein_category() {
  return colored_category(klein_four_group(), {"C", "D"},
                          {{0, 0}, {0, 1}, {1, 0}, {1, 1}}, {"d", "r", "b", "g"});
}

MorphismPartition klein_colors() { return color_partition(*klein_category(), 4); }

CatRef z3_category() {
  // Singleton identity hom-sets plus colored triples C->E, E->D, C->D;
  // every composable chain of length three passes through an identity.
  CategoryBuilder builder;
  ObjectId c = builder.add_object("C");
  ObjectId d = builder.add_object("D");
  ObjectId e = builder.add_object("E");
  MorphismId id_c = builder.add_morphism("d_C^C", c, c);
  MorphismId id_d = builder.add_morphism("d_D^D", d, d);
  MorphismId id_e = builder.add_morphism("d_E^E", e, e);
  const char* colors[3] = {"d", "r", "b"};
  std::vector<MorphismId> ce, ed, cd;
  for (int x = 0; x < 3; ++x) ce.push_back(builder.add_morphism(std::string(colors[x]) + "_C^E", c, e));
  for (int x = 0; x < 3; ++x) ed.push_back(builder.add_morphism(std::string(colors[x]) + "_E^D", e, d));
  for (int x = 0; x < 3; ++x) cd.push_back(builder.add_morphism(std::string(colors[x]) + "_C^D", c, d));
  builder.set_identity(c, id_c);
  builder.set_identity(d, id_d);
  builder.set_identity(e, id_e);
  builder.set_composite(id_c, id_c, id_c);
  builder.set_composite(id_d, id_d, id_d);
  builder.set_composite(id_e, id_e, id_e);
  for (int x = 0; x < 3; ++x) {
    builder.set_composite(ce[x], id_c, ce[x]);
    builder.set_composite(id_e, ce[x], ce[x]);
    builder.set_composite(ed[x], id_e, ed[x]);
    builder.set_composite(id_d, ed[x], ed[x]);
    builder.set_composite(cd[x], id_c, cd[x]);
    builder.set_composite(id_d, cd[x], cd[x]);
    for (int y = 0; y < 3; ++y) {
      builder.set_composite(ed[x], ce[y], cd[(x + y) % 3]);
    }
  }
  return std::make_shared<FinCategory>(std::move(builder).build());
}

MorphismPartition z3_colors() {
  return partition_from_classes(12, {{0, 1, 2, 3, 6, 9}, {4, 7, 10}, {5, 8, 11}});
}

CollapseFixture collapse_functor() {
  CategoryBuilder builder;
  ObjectId c = builder.add_object("C");
  ObjectId d = builder.add_object("D");
  ObjectId e = builder.add_object("E");
  MorphismId id_c = builder.add_morphism("1_C", c, c);
  MorphismId id_d = builder.add_morphism("1_D", d, d);
  MorphismId id_e = builder.add_morphism("1_E", e, e);
  MorphismId f = builder.add_morphism("f", c, d);
  MorphismId g = builder.add_morphism("g", d, e);
  MorphismId h = builder.add_morphism("h", c, e);
  builder.set_identity(c, id_c);
  builder.set_identity(d, id_d);
  builder.set_identity(e, id_e);
  builder.set_composite(id_c, id_c, id_c);
  builder.set_composite(id_d, id_d, id_d);
  builder.set_composite(id_e, id_e, id_e);
  builder.set_composite(f, id_c, f);
  builder.set_composite(id_d, f, f);
  builder.set_composite(g, id_d, g);
  builder.set_composite(id_e, g, g);
  builder.set_composite(h, id_c, h);
  builder.set_composite(id_e, h, h);
  builder.set_composite(g, f, h);

  CollapseFixture out;
  out.path = std::make_shared<FinCategory>(std::move(builder).build());
  out.base = std::make_shared<FinCategory>(one_object_category(cyclic_group(2)));
  out.functor.source = out.path;
  out.functor.target = out.base;
  out.functor.obj_map = {0, 0, 0};
  out.functor.mor_map = {0, 0, 0, 0, 1, 1};
  return out;
}

const std::map<std::string, MonoidRef>& standard_groups() {
  static const std::map<std::string, MonoidRef> groups = [] {
    std::map<std::string, MonoidRef> g;
    g["triv"] = std::make_shared<FinMonoid>(trivial_group());
    g["z2"] = std::make_shared<FinMonoid>(cyclic_group(2));
    g["z3"] = std::make_shared<FinMonoid>(cyclic_group(3));
    g["z4"] = std::make_shared<FinMonoid>(cyclic_group(4));
    g["z6"] = std::make_shared<FinMonoid>(cyclic_group(6));
    g["klein"] = std::make_shared<FinMonoid>(klein_four_group());
    g["s3"] = std::make_shared<FinMonoid>(symmetric_group(3));
    return g;
  }();
  return groups;
}

namespace {

PosetAction z2_trivial(const DirectedPoset& poset) {
  PosetAction action;
  action.group = standard_groups().at("z2");
  std::vector<std::uint32_t> identity(poset.size());
  for (std::uint32_t i = 0; i < poset.size(); ++i) identity[i] = i;
  action.perm_of = {identity, identity};
  return action;
}

}  // namespace

ChainFixture chain_z2_z4() {
  ChainFixture out;
  out.poset.elements = {"C", "D"};
  out.poset.leq = {1, 1, 0, 1};
  out.diagram = make_diagram(out.poset,
                             {standard_groups().at("z2"), standard_groups().at("z4")},
                             {{{0, 1}, {0, 2}}});
  out.no_action = trivial_action(out.poset);
  out.z2_trivial_action = z2_trivial(out.poset);
  return out;
}

VeeFixture vee_z2() {
  VeeFixture out;
  out.poset.elements = {"A", "B", "T"};
  out.poset.leq = {1, 0, 1, 0, 1, 1, 0, 0, 1};
  MonoidRef z2 = standard_groups().at("z2");
  out.diagram = make_diagram(out.poset, {z2, z2, z2},
                             {{{0, 2}, {0, 1}}, {{1, 2}, {0, 1}}});
  out.swap_action.group = z2;
  out.swap_action.perm_of = {{0, 1, 2}, {1, 0, 2}};
  out.z2_trivial_action = z2_trivial(out.poset);
  return out;
}

PointFixture point_z6() {
  PointFixture out;
  out.poset.elements = {"P"};
  out.poset.leq = {1};
  out.diagram = make_diagram(out.poset, {standard_groups().at("z6")}, {});
  out.no_action = trivial_action(out.poset);
  out.z2_trivial_action = z2_trivial(out.poset);
  return out;
}

}  // namespace concentra::fixtures
