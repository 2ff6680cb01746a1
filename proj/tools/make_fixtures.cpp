// Regenerates the JSON fixture corpus under fixtures/ from the built-in
// constructions, so the files never drift from the library.

#include <iostream>
#include <string>

#include "concentra/fixtures.hpp"
#include "concentra/workspace.hpp"

using namespace concentra;

namespace {

void write(const WorkspaceDocument& doc, const std::string& dir, const std::string& name) {
  save_workspace(doc, dir + "/" + name);
  std::cout << "wrote " << dir << "/" << name << "\n";
}

WorkspaceDocument groups_doc() {
  WorkspaceDocument doc;
  for (const auto& [name, monoid] : fixtures::standard_groups()) doc.monoids[name] = monoid;
  return doc;
}

}  // namespace

int main(int argc, char** argv) {
  std::string dir = argc > 1 ? argv[1] : "fixtures";

  {
    WorkspaceDocument doc;
    doc.categories["e1"] = fixtures::e1();
    doc.partitions["sim_a"] = {"e1", fixtures::e1_sim_a()};
    doc.partitions["sim_b"] = {"e1", fixtures::e1_sim_b()};
    doc.partitions["sim_c"] = {"e1", fixtures::e1_sim_c()};
    doc.partitions["sim_d"] = {"e1", fixtures::e1_sim_d()};
    doc.partitions["trivial"] = {"e1", trivial_concentration(*doc.categories["e1"])};
    doc.partitions["discrete"] = {"e1", discrete_partition(*doc.categories["e1"])};
    write(doc, dir, "e1.json");
  }
  {
    WorkspaceDocument doc;
    doc.categories["e1m"] = fixtures::e1m();
    doc.partitions["trivial"] = {"e1m", trivial_concentration(*doc.categories["e1m"])};
    write(doc, dir, "e1m.json");
  }
  {
    WorkspaceDocument doc;
    doc.categories["klein"] = fixtures::klein_category();
    doc.partitions["colors"] = {"klein", fixtures::klein_colors()};
    write(doc, dir, "klein.json");
  }
  {
    WorkspaceDocument doc;
    doc.categories["z3color"] = fixtures::z3_category();
    doc.partitions["colors"] = {"z3color", fixtures::z3_colors()};
    write(doc, dir, "z3color.json");
  }
  {
    WorkspaceDocument doc;
    fixtures::CollapseFixture collapse = fixtures::collapse_functor();
    doc.categories["path3"] = collapse.path;
    doc.categories["bz2"] = collapse.base;
    doc.functors["collapse"] = {"path3", "bz2", collapse.functor};
    doc.partitions["discrete"] = {"bz2", discrete_partition(*collapse.base)};
    write(doc, dir, "collapse.json");
  }
  {
    WorkspaceDocument doc = groups_doc();
    write(doc, dir, "groups.json");
  }
  {
    WorkspaceDocument doc;
    fixtures::ChainFixture chain = fixtures::chain_z2_z4();
    doc.monoids["z2"] = fixtures::standard_groups().at("z2");
    doc.monoids["z4"] = fixtures::standard_groups().at("z4");
    doc.monoids["triv"] = fixtures::standard_groups().at("triv");
    doc.posets["chain"] = chain.poset;
    doc.diagrams["chain_z2_z4"] = {"chain", {"z2", "z4"}, chain.diagram};
    doc.actions["no_action"] = {"chain", "triv", chain.no_action};
    doc.actions["z2_trivial"] = {"chain", "z2", chain.z2_trivial_action};
    write(doc, dir, "dirlim_chain.json");
  }
  {
    WorkspaceDocument doc;
    fixtures::VeeFixture vee = fixtures::vee_z2();
    doc.monoids["z2"] = fixtures::standard_groups().at("z2");
    doc.monoids["triv"] = fixtures::standard_groups().at("triv");
    doc.posets["vee"] = vee.poset;
    doc.diagrams["vee_z2"] = {"vee", {"z2", "z2", "z2"}, vee.diagram};
    doc.actions["swap"] = {"vee", "z2", vee.swap_action};
    doc.actions["z2_trivial"] = {"vee", "z2", vee.z2_trivial_action};
    write(doc, dir, "dirlim_vee.json");
  }
  return 0;
}
