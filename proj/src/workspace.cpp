#include "concentra/workspace.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace concentra {

namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& path, const std::string& what) {
  throw workspace_error(path + ": " + what);
}

const json& member(const json& node, const std::string& key, const std::string& path) {
  auto it = node.find(key);
  if (it == node.end()) fail(path, "missing required field '" + key + "'");
  return *it;
}

std::uint32_t to_index(const json& node, const std::string& path, std::size_t bound,
                       const std::string& what) {
  if (!node.is_number_unsigned()) fail(path, "expected a nonnegative " + what + " index");
  std::uint64_t value = node.get<std::uint64_t>();
  if (value >= bound) {
    fail(path, what + " index " + std::to_string(value) + " out of range (have " +
                   std::to_string(bound) + ")");
  }
  return static_cast<std::uint32_t>(value);
}

CatRef parse_category(const json& node, const std::string& path) {
  if (!node.is_object()) fail(path, "expected an object");
  const json& objects = member(node, "objects", path);
  const json& morphisms = member(node, "morphisms", path);
  const json& identities = member(node, "identities", path);
  const json& composition = member(node, "composition", path);
  if (!objects.is_array() || !morphisms.is_array() || !identities.is_array() ||
      !composition.is_array()) {
    fail(path, "objects, morphisms, identities and composition must be arrays");
  }

  CategoryBuilder builder;
  for (std::size_t i = 0; i < objects.size(); ++i) {
    if (!objects[i].is_string()) fail(path + ".objects[" + std::to_string(i) + "]", "expected a string");
    builder.add_object(objects[i].get<std::string>());
  }
  for (std::size_t i = 0; i < morphisms.size(); ++i) {
    const std::string mpath = path + ".morphisms[" + std::to_string(i) + "]";
    const json& m = morphisms[i];
    if (!m.is_array() || m.size() != 3 || !m[0].is_string()) {
      fail(mpath, "expected [label, src, tgt]");
    }
    builder.add_morphism(m[0].get<std::string>(), to_index(m[1], mpath, objects.size(), "object"),
                         to_index(m[2], mpath, objects.size(), "object"));
  }
  if (identities.size() != objects.size()) {
    fail(path + ".identities", "expected one identity per object");
  }
  for (std::size_t i = 0; i < identities.size(); ++i) {
    builder.set_identity(static_cast<ObjectId>(i),
                         to_index(identities[i], path + ".identities[" + std::to_string(i) + "]",
                                  morphisms.size(), "morphism"));
  }
  for (std::size_t i = 0; i < composition.size(); ++i) {
    const std::string cpath = path + ".composition[" + std::to_string(i) + "]";
    const json& t = composition[i];
    if (!t.is_array() || t.size() != 3) fail(cpath, "expected [f, g, fg]");
    builder.set_composite(to_index(t[0], cpath, morphisms.size(), "morphism"),
                          to_index(t[1], cpath, morphisms.size(), "morphism"),
                          to_index(t[2], cpath, morphisms.size(), "morphism"));
  }
  try {
    return std::make_shared<FinCategory>(std::move(builder).build());
  } catch (const std::invalid_argument& e) {
    fail(path, e.what());
  }
}

MorphismPartition parse_partition(const json& node, std::size_t morphism_count,
                                  const std::string& path) {
  const json& classes = member(node, "classes", path);
  if (!classes.is_array()) fail(path + ".classes", "expected an array of id lists");
  std::vector<std::vector<MorphismId>> parsed;
  for (std::size_t i = 0; i < classes.size(); ++i) {
    const std::string cpath = path + ".classes[" + std::to_string(i) + "]";
    if (!classes[i].is_array()) fail(cpath, "expected an array of morphism ids");
    std::vector<MorphismId> cls;
    for (const json& id : classes[i]) cls.push_back(to_index(id, cpath, morphism_count, "morphism"));
    parsed.push_back(std::move(cls));
  }
  try {
    return partition_from_classes(morphism_count, std::move(parsed));
  } catch (const std::invalid_argument& e) {
    fail(path, e.what());
  }
}

std::vector<std::uint32_t> parse_index_vector(const json& node, std::size_t expected,
                                              std::size_t bound, const std::string& path,
                                              const std::string& what) {
  if (!node.is_array() || node.size() != expected) {
    fail(path, "expected an array of " + std::to_string(expected) + " " + what + " indices");
  }
  std::vector<std::uint32_t> out;
  out.reserve(expected);
  for (std::size_t i = 0; i < node.size(); ++i) {
    out.push_back(to_index(node[i], path + "[" + std::to_string(i) + "]", bound, what));
  }
  return out;
}

MonoidRef parse_monoid(const json& node, const std::string& path) {
  const json& table = member(node, "table", path);
  if (!table.is_array() || table.empty()) fail(path + ".table", "expected a nonempty array of rows");
  const std::size_t n = table.size();
  std::vector<std::vector<std::uint32_t>> rows;
  for (std::size_t i = 0; i < n; ++i) {
    rows.push_back(
        parse_index_vector(table[i], n, n, path + ".table[" + std::to_string(i) + "]", "element"));
  }
  std::vector<std::string> labels;
  if (node.contains("labels")) {
    const json& l = node["labels"];
    if (!l.is_array() || l.size() != n) fail(path + ".labels", "expected one label per element");
    for (const json& s : l) {
      if (!s.is_string()) fail(path + ".labels", "expected strings");
      labels.push_back(s.get<std::string>());
    }
  }
  try {
    FinMonoid monoid = make_monoid(rows, std::move(labels));
    if (node.contains("identity") &&
        to_index(node["identity"], path + ".identity", n, "element") != monoid.identity) {
      fail(path + ".identity", "declared identity disagrees with the table");
    }
    return std::make_shared<FinMonoid>(std::move(monoid));
  } catch (const std::invalid_argument& e) {
    fail(path, e.what());
  }
}

DirectedPoset parse_poset(const json& node, const std::string& path) {
  const json& elements = member(node, "elements", path);
  const json& leq = member(node, "leq", path);
  if (!elements.is_array() || elements.empty()) fail(path + ".elements", "expected a nonempty array");
  DirectedPoset poset;
  for (const json& e : elements) {
    if (!e.is_string()) fail(path + ".elements", "expected strings");
    poset.elements.push_back(e.get<std::string>());
  }
  const std::size_t n = poset.elements.size();
  if (!leq.is_array() || leq.size() != n) fail(path + ".leq", "expected one row per element");
  for (std::size_t i = 0; i < n; ++i) {
    const json& row = leq[i];
    if (!row.is_array() || row.size() != n) {
      fail(path + ".leq[" + std::to_string(i) + "]", "expected one entry per element");
    }
    for (const json& cell : row) {
      if (!cell.is_number_unsigned() || cell.get<std::uint64_t>() > 1) {
        fail(path + ".leq[" + std::to_string(i) + "]", "entries must be 0 or 1");
      }
      poset.leq.push_back(static_cast<std::uint8_t>(cell.get<std::uint64_t>()));
    }
  }
  return poset;
}

json category_to_json(const FinCategory& cat) {
  json node;
  node["objects"] = cat.objects;
  json morphisms = json::array();
  for (const Morphism& m : cat.morphisms) morphisms.push_back({m.label, m.src, m.tgt});
  node["morphisms"] = std::move(morphisms);
  node["identities"] = cat.identities;
  json composition = json::array();
  for (MorphismId f = 0; f < cat.morphism_count(); ++f) {
    for (MorphismId g = 0; g < cat.morphism_count(); ++g) {
      if (cat.composite(f, g) != kNoMorphism) {
        composition.push_back({f, g, cat.composite(f, g)});
      }
    }
  }
  node["composition"] = std::move(composition);
  return node;
}

json monoid_to_json(const FinMonoid& monoid) {
  json node;
  node["labels"] = monoid.labels;
  node["identity"] = monoid.identity;
  json table = json::array();
  for (std::uint32_t a = 0; a < monoid.size(); ++a) {
    json row = json::array();
    for (std::uint32_t b = 0; b < monoid.size(); ++b) row.push_back(monoid.mul(a, b));
    table.push_back(std::move(row));
  }
  node["table"] = std::move(table);
  return node;
}

}  // namespace

WorkspaceDocument parse_workspace(const std::string& json_text) {
  json root;
  try {
    root = json::parse(json_text);
  } catch (const json::parse_error& e) {
    fail("$", std::string("not valid JSON: ") + e.what());
  }
  if (!root.is_object()) fail("$", "top level must be an object");

  WorkspaceDocument doc;
  doc.version = root.value("version", 1);

  if (root.contains("categories")) {
    for (const auto& [name, node] : root["categories"].items()) {
      doc.categories[name] = parse_category(node, "categories." + name);
    }
  }
  if (root.contains("monoids")) {
    for (const auto& [name, node] : root["monoids"].items()) {
      doc.monoids[name] = parse_monoid(node, "monoids." + name);
    }
  }
  if (root.contains("partitions")) {
    for (const auto& [name, node] : root["partitions"].items()) {
      const std::string path = "partitions." + name;
      const json& category = member(node, "category", path);
      if (!category.is_string()) fail(path + ".category", "expected a category name");
      auto cat = doc.categories.find(category.get<std::string>());
      if (cat == doc.categories.end()) {
        fail(path + ".category", "unknown category '" + category.get<std::string>() + "'");
      }
      doc.partitions[name] = NamedPartition{
          cat->first, parse_partition(node, cat->second->morphism_count(), path)};
    }
  }
  if (root.contains("functors")) {
    for (const auto& [name, node] : root["functors"].items()) {
      const std::string path = "functors." + name;
      const json& source = member(node, "source", path);
      const json& target = member(node, "target", path);
      if (!source.is_string() || !target.is_string()) {
        fail(path, "source and target must be category names");
      }
      auto src = doc.categories.find(source.get<std::string>());
      auto tgt = doc.categories.find(target.get<std::string>());
      if (src == doc.categories.end()) fail(path + ".source", "unknown category");
      if (tgt == doc.categories.end()) fail(path + ".target", "unknown category");
      NamedFunctor fun;
      fun.source = src->first;
      fun.target = tgt->first;
      fun.functor.source = src->second;
      fun.functor.target = tgt->second;
      fun.functor.obj_map =
          parse_index_vector(member(node, "objects", path), src->second->object_count(),
                             tgt->second->object_count(), path + ".objects", "object");
      fun.functor.mor_map =
          parse_index_vector(member(node, "morphisms", path), src->second->morphism_count(),
                             tgt->second->morphism_count(), path + ".morphisms", "morphism");
      doc.functors[name] = std::move(fun);
    }
  }
  if (root.contains("posets")) {
    for (const auto& [name, node] : root["posets"].items()) {
      doc.posets[name] = parse_poset(node, "posets." + name);
    }
  }
  if (root.contains("diagrams")) {
    for (const auto& [name, node] : root["diagrams"].items()) {
      const std::string path = "diagrams." + name;
      const json& poset_name = member(node, "poset", path);
      if (!poset_name.is_string()) fail(path + ".poset", "expected a poset name");
      auto poset = doc.posets.find(poset_name.get<std::string>());
      if (poset == doc.posets.end()) fail(path + ".poset", "unknown poset");
      const std::size_t n = poset->second.size();

      NamedDiagram diagram;
      diagram.poset = poset->first;
      const json& groups = member(node, "groups", path);
      if (!groups.is_array() || groups.size() != n) {
        fail(path + ".groups", "expected one monoid name per poset element");
      }
      std::vector<MonoidRef> group_refs;
      for (const json& g : groups) {
        if (!g.is_string()) fail(path + ".groups", "expected monoid names");
        auto monoid = doc.monoids.find(g.get<std::string>());
        if (monoid == doc.monoids.end()) {
          fail(path + ".groups", "unknown monoid '" + g.get<std::string>() + "'");
        }
        diagram.groups.push_back(monoid->first);
        group_refs.push_back(monoid->second);
      }
      std::map<std::pair<std::size_t, std::size_t>, std::vector<std::uint32_t>> homs;
      const json& homs_node = member(node, "homs", path);
      if (!homs_node.is_array()) fail(path + ".homs", "expected an array");
      for (std::size_t i = 0; i < homs_node.size(); ++i) {
        const std::string hpath = path + ".homs[" + std::to_string(i) + "]";
        const json& h = homs_node[i];
        std::size_t from = to_index(member(h, "from", hpath), hpath + ".from", n, "poset element");
        std::size_t to = to_index(member(h, "to", hpath), hpath + ".to", n, "poset element");
        homs[{from, to}] = parse_index_vector(member(h, "map", hpath), group_refs[from]->size(),
                                              group_refs[to]->size(), hpath + ".map", "element");
      }
      diagram.diagram = make_diagram(poset->second, std::move(group_refs), std::move(homs));
      doc.diagrams[name] = std::move(diagram);
    }
  }
  if (root.contains("actions")) {
    for (const auto& [name, node] : root["actions"].items()) {
      const std::string path = "actions." + name;
      const json& poset_name = member(node, "poset", path);
      const json& group_name = member(node, "group", path);
      if (!poset_name.is_string()) fail(path + ".poset", "expected a poset name");
      if (!group_name.is_string()) fail(path + ".group", "expected a monoid name");
      auto poset = doc.posets.find(poset_name.get<std::string>());
      if (poset == doc.posets.end()) fail(path + ".poset", "unknown poset");
      auto group = doc.monoids.find(group_name.get<std::string>());
      if (group == doc.monoids.end()) fail(path + ".group", "unknown monoid");

      NamedAction action;
      action.poset = poset->first;
      action.group = group->first;
      action.action.group = group->second;
      const json& perms = member(node, "perms", path);
      if (!perms.is_array() || perms.size() != group->second->size()) {
        fail(path + ".perms", "expected one permutation per group element");
      }
      for (std::size_t i = 0; i < perms.size(); ++i) {
        action.action.perm_of.push_back(
            parse_index_vector(perms[i], poset->second.size(), poset->second.size(),
                               path + ".perms[" + std::to_string(i) + "]", "poset element"));
      }
      doc.actions[name] = std::move(action);
    }
  }
  return doc;
}

WorkspaceDocument load_workspace(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw workspace_error(path + ": cannot open file");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_workspace(buffer.str());
}

std::string serialize_workspace(const WorkspaceDocument& doc) {
  json root;
  root["version"] = doc.version;
  for (const auto& [name, cat] : doc.categories) {
    root["categories"][name] = category_to_json(*cat);
  }
  for (const auto& [name, part] : doc.partitions) {
    json node;
    node["category"] = part.category;
    node["classes"] = part.partition.classes;
    root["partitions"][name] = std::move(node);
  }
  for (const auto& [name, fun] : doc.functors) {
    json node;
    node["source"] = fun.source;
    node["target"] = fun.target;
    node["objects"] = fun.functor.obj_map;
    node["morphisms"] = fun.functor.mor_map;
    root["functors"][name] = std::move(node);
  }
  for (const auto& [name, monoid] : doc.monoids) {
    root["monoids"][name] = monoid_to_json(*monoid);
  }
  for (const auto& [name, poset] : doc.posets) {
    json node;
    node["elements"] = poset.elements;
    json rows = json::array();
    for (std::size_t a = 0; a < poset.size(); ++a) {
      json row = json::array();
      for (std::size_t b = 0; b < poset.size(); ++b) row.push_back(poset.le(a, b) ? 1 : 0);
      rows.push_back(std::move(row));
    }
    node["leq"] = std::move(rows);
    root["posets"][name] = std::move(node);
  }
  for (const auto& [name, diagram] : doc.diagrams) {
    json node;
    node["poset"] = diagram.poset;
    node["groups"] = diagram.groups;
    json homs = json::array();
    for (const auto& [pair, map] : diagram.diagram.hom_of) {
      if (pair.first == pair.second) continue;  // reflexive identities are implied
      json h;
      h["from"] = pair.first;
      h["to"] = pair.second;
      h["map"] = map;
      homs.push_back(std::move(h));
    }
    node["homs"] = std::move(homs);
    root["diagrams"][name] = std::move(node);
  }
  for (const auto& [name, action] : doc.actions) {
    json node;
    node["poset"] = action.poset;
    node["group"] = action.group;
    node["perms"] = action.action.perm_of;
    root["actions"][name] = std::move(node);
  }
  return root.dump(2) + "\n";
}

void save_workspace(const WorkspaceDocument& doc, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw workspace_error(path + ": cannot open file for writing");
  out << serialize_workspace(doc);
}

}  // namespace concentra
