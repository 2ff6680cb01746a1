#include "concentra/cli.hpp"

#include <cstdlib>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "concentra/catalg.hpp"
#include "concentra/concentration.hpp"
#include "concentra/core.hpp"
#include "concentra/dirlim.hpp"
#include "concentra/groupoid.hpp"
#include "concentra/lifting.hpp"
#include "concentra/monoid.hpp"
#include "concentra/workspace.hpp"

namespace concentra {

namespace {

using nlohmann::json;

constexpr int kHolds = 0;
constexpr int kFails = 1;
constexpr int kBadInput = 2;

void emit_result(std::ostream& out, const json& result) {
  out << "```json\n" << result.dump(2) << "\n```\n";
}

std::string verdict_name(Verdict v) {
  switch (v) {
    case Verdict::kPass: return "pass";
    case Verdict::kFail: return "fail";
    default: return "not evaluated";
  }
}

std::string class_text(const FinCategory& cat, const std::vector<MorphismId>& cls) {
  std::string text = "{";
  for (std::size_t i = 0; i < cls.size(); ++i) {
    if (i) text += ", ";
    text += cat.morphism_label(cls[i]);
  }
  return text + "}";
}

std::string partition_text(const FinCategory& cat, const MorphismPartition& part) {
  std::string text;
  for (std::size_t c = 0; c < part.class_count(); ++c) {
    if (c) text += " ";
    text += class_text(cat, part.classes[c]);
  }
  return text;
}

void print_partition(std::ostream& out, const FinCategory& cat, const MorphismPartition& part) {
  for (std::size_t c = 0; c < part.class_count(); ++c) {
    out << "  class " << c << ": " << class_text(cat, part.classes[c]) << "\n";
  }
}

void print_monoid(std::ostream& out, const FinMonoid& monoid) {
  out << monoid.size() << " element" << (monoid.size() == 1 ? "" : "s") << ", "
      << (monoid.is_group ? "group" : "monoid") << ", identity " << monoid.labels[monoid.identity]
      << "\n";
  std::size_t width = 1;
  for (const std::string& label : monoid.labels) width = std::max(width, label.size());
  auto pad = [&](const std::string& s) {
    return s + std::string(width - std::min(width, s.size()), ' ');
  };
  out << "  " << pad("*");
  for (const std::string& label : monoid.labels) out << " " << pad(label);
  out << "\n";
  for (std::uint32_t a = 0; a < monoid.size(); ++a) {
    out << "  " << pad(monoid.labels[a]);
    for (std::uint32_t b = 0; b < monoid.size(); ++b) {
      out << " " << pad(monoid.labels[monoid.mul(a, b)]);
    }
    out << "\n";
  }
}

json monoid_json(const FinMonoid& monoid) {
  json node;
  node["size"] = monoid.size();
  node["is_group"] = monoid.is_group;
  node["identity"] = monoid.identity;
  node["labels"] = monoid.labels;
  json table = json::array();
  for (std::uint32_t a = 0; a < monoid.size(); ++a) {
    json row = json::array();
    for (std::uint32_t b = 0; b < monoid.size(); ++b) row.push_back(monoid.mul(a, b));
    table.push_back(std::move(row));
  }
  node["table"] = std::move(table);
  return node;
}

json violations_json(const ValidationReport& report) {
  json list = json::array();
  for (const Violation& v : report.violations) {
    json node;
    node["rule"] = v.rule;
    node["witness"] = v.witness;
    node["message"] = v.message;
    list.push_back(std::move(node));
  }
  return list;
}

const CatRef& need_category(const WorkspaceDocument& doc, const std::string& name) {
  auto it = doc.categories.find(name);
  if (it == doc.categories.end()) throw workspace_error("unknown category '" + name + "'");
  return it->second;
}

const NamedPartition& need_partition(const WorkspaceDocument& doc, const std::string& name) {
  auto it = doc.partitions.find(name);
  if (it == doc.partitions.end()) throw workspace_error("unknown partition '" + name + "'");
  return it->second;
}

const MonoidRef& need_monoid(const WorkspaceDocument& doc, const std::string& name) {
  auto it = doc.monoids.find(name);
  if (it == doc.monoids.end()) throw workspace_error("unknown monoid '" + name + "'");
  return it->second;
}

// Resolves the category a command works on: an explicit name, the partition's
// category, or the only category in the document.
std::string resolve_category_name(const WorkspaceDocument& doc, const std::string& category,
                                  const std::string& partition) {
  if (!category.empty()) {
    need_category(doc, category);
    if (!partition.empty() && need_partition(doc, partition).category != category) {
      throw workspace_error("partition '" + partition + "' belongs to category '" +
                            need_partition(doc, partition).category + "', not '" + category + "'");
    }
    return category;
  }
  if (!partition.empty()) return need_partition(doc, partition).category;
  if (doc.categories.size() == 1) return doc.categories.begin()->first;
  throw workspace_error("--category is required when the document has several categories");
}

// Ensures the named category satisfies the category axioms before a command
// builds on it.
bool require_valid_category(std::ostream& out, const std::string& name, const FinCategory& cat,
                            json& result) {
  ValidationReport report = validate_category(cat);
  if (!report.ok) {
    out << "category " << name << " is not valid:\n";
    for (const Violation& v : report.violations) out << "  " << v.message << "\n";
    result["ok"] = false;
    result["violations"] = violations_json(report);
  }
  return report.ok;
}

std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> out;
  std::string token;
  std::istringstream stream(text);
  while (std::getline(stream, token, ',')) {
    while (!token.empty() && token.front() == ' ') token.erase(token.begin());
    while (!token.empty() && token.back() == ' ') token.pop_back();
    if (!token.empty()) out.push_back(token);
  }
  return out;
}

ObjectId resolve_object(const FinCategory& cat, const std::string& token) {
  for (ObjectId a = 0; a < cat.object_count(); ++a) {
    if (cat.object_label(a) == token) return a;
  }
  try {
    std::size_t pos = 0;
    unsigned long value = std::stoul(token, &pos);
    if (pos == token.size() && value < cat.object_count()) return static_cast<ObjectId>(value);
  } catch (const std::exception&) {
  }
  throw workspace_error("unknown object '" + token + "'");
}

MorphismId resolve_morphism(const FinCategory& cat, const std::string& token) {
  for (MorphismId f = 0; f < cat.morphism_count(); ++f) {
    if (cat.morphism_label(f) == token) return f;
  }
  try {
    std::size_t pos = 0;
    unsigned long value = std::stoul(token, &pos);
    if (pos == token.size() && value < cat.morphism_count()) return static_cast<MorphismId>(value);
  } catch (const std::exception&) {
  }
  throw workspace_error("unknown morphism '" + token + "'");
}

struct CommonArgs {
  std::string doc_path;
  std::string category;
  std::string partition;
};

int cmd_validate(const WorkspaceDocument& doc, const CommonArgs& args,
                 const std::string& functor_name, const std::string& monoid_name,
                 const std::string& poset_name, std::ostream& out) {
  json items;
  bool all_ok = true;
  auto record = [&](const std::string& key, const ValidationReport& report) {
    out << key << ": " << (report.ok ? "ok" : "INVALID") << "\n";
    for (const Violation& v : report.violations) out << "  " << v.message << "\n";
    json node;
    node["ok"] = report.ok;
    node["violations"] = violations_json(report);
    items[key] = std::move(node);
    all_ok = all_ok && report.ok;
  };

  bool filtered = !args.category.empty() || !functor_name.empty() || !monoid_name.empty() ||
                  !poset_name.empty();
  if (!args.category.empty() || !filtered) {
    for (const auto& [name, cat] : doc.categories) {
      if (!args.category.empty() && name != args.category) continue;
      record("category " + name, validate_category(*cat));
    }
  }
  if (!functor_name.empty() || !filtered) {
    for (const auto& [name, fun] : doc.functors) {
      if (!functor_name.empty() && name != functor_name) continue;
      record("functor " + name, check_functor(fun.functor));
    }
  }
  if (!monoid_name.empty() || !filtered) {
    for (const auto& [name, monoid] : doc.monoids) {
      if (!monoid_name.empty() && name != monoid_name) continue;
      record("monoid " + name, validate_monoid(*monoid));
    }
  }
  if (!poset_name.empty() || !filtered) {
    for (const auto& [name, poset] : doc.posets) {
      if (!poset_name.empty() && name != poset_name) continue;
      record("poset " + name, validate_poset(poset));
    }
  }

  json result;
  result["command"] = "validate";
  result["ok"] = all_ok;
  result["items"] = std::move(items);
  emit_result(out, result);
  return all_ok ? kHolds : kFails;
}

int cmd_check_conc(const WorkspaceDocument& doc, const CommonArgs& args, int max_n,
                   bool exhaustive, std::ostream& out) {
  std::string cat_name = resolve_category_name(doc, args.category, args.partition);
  const FinCategory& cat = *need_category(doc, cat_name);
  const NamedPartition& named = need_partition(doc, args.partition);

  json result;
  result["command"] = "check-conc";
  if (!require_valid_category(out, cat_name, cat, result)) {
    emit_result(out, result);
    return kFails;
  }

  AxiomReport report = check_concentration(cat, named.partition, max_n);
  out << "checking partition " << args.partition << " on category " << cat_name
      << " (existence up to arity " << max_n << ")\n";

  out << "  identity axiom: " << verdict_name(report.identity_axiom) << "\n";
  if (report.identity_witness) {
    out << "    witness: identities " << cat.morphism_label(report.identity_witness->first)
        << " and " << cat.morphism_label(report.identity_witness->second)
        << " lie in different classes\n";
  }
  out << "  composition axiom: " << verdict_name(report.composition_axiom) << "\n";
  if (report.composition_witness) {
    const auto& w = *report.composition_witness;
    out << "    witness: " << cat.morphism_label(w[0]) << "∘" << cat.morphism_label(w[1])
        << " and " << cat.morphism_label(w[2]) << "∘" << cat.morphism_label(w[3])
        << " land in different classes\n";
  }
  json existence = json::array();
  for (const ExistenceCheck& check : report.existence) {
    out << "  " << check.arity << "-existence axiom: " << verdict_name(check.verdict) << "\n";
    json node;
    node["arity"] = check.arity;
    node["verdict"] = verdict_name(check.verdict);
    if (!check.witness_classes.empty()) {
      std::string tuple;
      json witness = json::array();
      for (std::uint32_t cls : check.witness_classes) {
        if (!tuple.empty()) tuple += ", ";
        tuple += class_text(cat, named.partition.classes[cls]);
        witness.push_back(cls);
      }
      out << "    witness classes: (" << tuple << ")\n";
      node["witness_classes"] = std::move(witness);
    }
    existence.push_back(std::move(node));
  }
  out << "  associativity axiom: " << verdict_name(report.associativity_axiom) << "\n";
  if (report.associativity_witness) {
    const auto& w = *report.associativity_witness;
    out << "    witness classes: (" << class_text(cat, named.partition.classes[w[0]]) << ", "
        << class_text(cat, named.partition.classes[w[1]]) << ", "
        << class_text(cat, named.partition.classes[w[2]]) << ")\n";
  }

  bool requested_hold = report.is_concentration();
  for (const ExistenceCheck& check : report.existence) {
    requested_hold = requested_hold && check.verdict == Verdict::kPass;
  }

  result["identity"] = verdict_name(report.identity_axiom);
  result["composition"] = verdict_name(report.composition_axiom);
  result["existence"] = std::move(existence);
  result["associativity"] = verdict_name(report.associativity_axiom);
  result["is_concentration"] = report.is_concentration();

  if (exhaustive) {
    auto counterexample = axiom4_counterexample(cat, named.partition);
    bool exhaustive_pass = !counterexample.has_value();
    out << "  exhaustive associativity re-check: " << (exhaustive_pass ? "pass" : "fail") << "\n";
    if (counterexample) {
      out << "    witness tuple (f, f', g, g', h, h', m, n):";
      for (MorphismId m : counterexample->tuple) out << " " << cat.morphism_label(m);
      out << "\n";
    }
    result["exhaustive_associativity"] = exhaustive_pass ? "pass" : "fail";
    if (report.associativity_axiom != Verdict::kNotEvaluated) {
      bool agree = exhaustive_pass == (report.associativity_axiom == Verdict::kPass);
      out << "  mode agreement: " << (agree ? "yes" : "NO") << "\n";
      result["modes_agree"] = agree;
      requested_hold = requested_hold && exhaustive_pass;
    }
  }

  out << (requested_hold ? "all axioms hold\n" : "some axiom fails\n");
  result["ok"] = requested_hold;
  emit_result(out, result);
  return requested_hold ? kHolds : kFails;
}

int cmd_monoid(const WorkspaceDocument& doc, const CommonArgs& args, std::ostream& out) {
  std::string cat_name = resolve_category_name(doc, args.category, args.partition);
  const FinCategory& cat = *need_category(doc, cat_name);
  const NamedPartition& named = need_partition(doc, args.partition);

  json result;
  result["command"] = "monoid";
  if (!require_valid_category(out, cat_name, cat, result)) {
    emit_result(out, result);
    return kFails;
  }
  AxiomReport axioms = check_concentration(cat, named.partition, 2);
  if (!axioms.is_concentration()) {
    out << "partition " << args.partition << " is not a concentration structure on " << cat_name
        << "; run check-conc for the witnesses\n";
    result["ok"] = false;
    result["is_concentration"] = false;
    emit_result(out, result);
    return kFails;
  }

  ConcentrationMonoid cm = concentration_monoid(cat, named.partition);
  out << "concentration monoid of (" << cat_name << ", " << args.partition << "): ";
  print_monoid(out, *cm.monoid);
  out << "classes:\n";
  print_partition(out, cat, named.partition);

  result["ok"] = true;
  result["monoid"] = monoid_json(*cm.monoid);
  result["class_map"] = cm.class_map;
  emit_result(out, result);
  return kHolds;
}

int cmd_enumerate(const WorkspaceDocument& doc, const CommonArgs& args, std::size_t bound,
                  std::ostream& out) {
  std::string cat_name = resolve_category_name(doc, args.category, "");
  const FinCategory& cat = *need_category(doc, cat_name);
  json result;
  result["command"] = "enumerate-conc";
  if (!require_valid_category(out, cat_name, cat, result)) {
    emit_result(out, result);
    return kFails;
  }
  std::vector<MorphismPartition> found;
  try {
    found = enumerate_concentrations(cat, bound);
  } catch (const std::invalid_argument& e) {
    out << e.what() << "\n";
    result["ok"] = false;
    result["error"] = e.what();
    emit_result(out, result);
    return kBadInput;
  }
  out << found.size() << " concentration structure" << (found.size() == 1 ? "" : "s") << " on "
      << cat_name << "\n";
  json list = json::array();
  for (const MorphismPartition& part : found) {
    out << "  " << partition_text(cat, part) << "\n";
    list.push_back(part.classes);
  }
  result["ok"] = true;
  result["count"] = found.size();
  result["partitions"] = std::move(list);
  emit_result(out, result);
  return kHolds;
}

int cmd_pullback(const WorkspaceDocument& doc, const std::string& functor_name,
                 const std::string& partition_name, std::ostream& out) {
  auto fun_it = doc.functors.find(functor_name);
  if (fun_it == doc.functors.end()) throw workspace_error("unknown functor '" + functor_name + "'");
  const NamedFunctor& fun = fun_it->second;
  const NamedPartition& named = need_partition(doc, partition_name);
  if (named.category != fun.target) {
    throw workspace_error("partition '" + partition_name + "' lives on '" + named.category +
                          "', not on the functor target '" + fun.target + "'");
  }

  json result;
  result["command"] = "pullback";
  if (!check_functor(fun.functor).ok) {
    out << "functor " << functor_name << " is not a functor; run validate\n";
    result["ok"] = false;
    emit_result(out, result);
    return kFails;
  }
  if (!check_concentration(*fun.functor.target, named.partition, 2).is_concentration()) {
    out << "partition " << partition_name << " is not a concentration structure\n";
    result["ok"] = false;
    emit_result(out, result);
    return kFails;
  }
  LiftCheck lift = check_2_lifting(fun.functor);
  if (!lift.ok) {
    const FinCategory& target = *fun.functor.target;
    out << "functor " << functor_name << " is not 2-lifting; witness pair ("
        << target.morphism_label(lift.witness->first) << ", "
        << target.morphism_label(lift.witness->second) << ")\n";
    result["ok"] = false;
    result["witness"] = {lift.witness->first, lift.witness->second};
    emit_result(out, result);
    return kFails;
  }

  MorphismPartition part = pullback_concentration(fun.functor, named.partition);
  out << "pullback of " << partition_name << " along " << functor_name << ":\n";
  print_partition(out, *fun.functor.source, part);
  result["ok"] = true;
  result["classes"] = part.classes;
  emit_result(out, result);
  return kHolds;
}

int cmd_concentrate(const WorkspaceDocument& doc, const CommonArgs& args, std::ostream& out) {
  std::string cat_name = resolve_category_name(doc, args.category, args.partition);
  const FinCategory& cat = *need_category(doc, cat_name);
  const CatRef& cat_ref = need_category(doc, cat_name);
  const NamedPartition& named = need_partition(doc, args.partition);

  json result;
  result["command"] = "concentrate";
  if (!require_valid_category(out, cat_name, cat, result)) {
    emit_result(out, result);
    return kFails;
  }
  if (!check_concentration(cat, named.partition, 2).is_concentration()) {
    out << "partition " << args.partition << " is not a concentration structure\n";
    result["ok"] = false;
    emit_result(out, result);
    return kFails;
  }

  ConcentratingFunctor cf = concentrating_functor(cat_ref, named.partition);
  out << "concentrating functor of (" << cat_name << ", " << args.partition
      << ") onto the one-object category of its concentration monoid\n";
  out << "target monoid: ";
  print_monoid(out, *cf.monoid.monoid);
  out << "morphism assignment:\n";
  for (MorphismId f = 0; f < cat.morphism_count(); ++f) {
    out << "  " << cat.morphism_label(f) << " -> " << cf.monoid.monoid->labels[cf.functor.mor_map[f]]
        << "\n";
  }
  LiftCheck lift = check_2_lifting(cf.functor);
  out << "2-lifting: " << (lift.ok ? "yes" : "NO") << "\n";

  result["ok"] = lift.ok;
  result["monoid"] = monoid_json(*cf.monoid.monoid);
  result["morphism_map"] = cf.functor.mor_map;
  emit_result(out, result);
  return lift.ok ? kHolds : kFails;
}

int cmd_quotient(const WorkspaceDocument& doc, const CommonArgs& args,
                 const std::string& monoid_name, const std::string& submonoid,
                 const std::string& sub_objects, const std::string& sub_morphisms,
                 std::ostream& out) {
  json result;
  result["command"] = "quotient";

  if (!monoid_name.empty()) {
    const FinMonoid& monoid = *need_monoid(doc, monoid_name);
    std::vector<std::uint32_t> subset;
    for (const std::string& token : split_list(submonoid)) {
      bool found = false;
      for (std::uint32_t e = 0; e < monoid.size(); ++e) {
        if (monoid.labels[e] == token) {
          subset.push_back(e);
          found = true;
          break;
        }
      }
      if (!found) {
        try {
          std::size_t pos = 0;
          unsigned long value = std::stoul(token, &pos);
          if (pos == token.size() && value < monoid.size()) {
            subset.push_back(static_cast<std::uint32_t>(value));
            found = true;
          }
        } catch (const std::exception&) {
        }
      }
      if (!found) throw workspace_error("unknown element '" + token + "'");
    }
    if (!is_submonoid(monoid, subset)) {
      out << "the given subset is not a submonoid\n";
      result["ok"] = false;
      emit_result(out, result);
      return kFails;
    }
    if (!is_normal_submonoid(monoid, subset)) {
      out << "the given submonoid is not normal\n";
      result["ok"] = false;
      emit_result(out, result);
      return kFails;
    }
    QuotientMonoid quotient = quotient_by_normal_submonoid(monoid, subset);
    out << "quotient of " << monoid_name << ": ";
    print_monoid(out, quotient.monoid);
    out << "transitive closure needed: " << (quotient.closure_was_needed ? "yes" : "no") << "\n";
    out << "two-sided congruence variant coincides: "
        << (quotient_relations_coincide(monoid, subset) ? "yes" : "no") << "\n";
    result["ok"] = true;
    result["monoid"] = monoid_json(quotient.monoid);
    result["class_of"] = quotient.class_of;
    emit_result(out, result);
    return kHolds;
  }

  std::string cat_name = resolve_category_name(doc, args.category, args.partition);
  const CatRef& cat_ref = need_category(doc, cat_name);
  const FinCategory& cat = *cat_ref;
  const NamedPartition& named = need_partition(doc, args.partition);
  if (!require_valid_category(out, cat_name, cat, result)) {
    emit_result(out, result);
    return kFails;
  }

  SubcategoryData sub;
  for (const std::string& token : split_list(sub_objects)) {
    sub.objects.push_back(resolve_object(cat, token));
  }
  for (const std::string& token : split_list(sub_morphisms)) {
    sub.morphisms.push_back(resolve_morphism(cat, token));
  }
  ValidationReport sub_report = validate_subcategory(cat, sub);
  if (!sub_report.ok) {
    out << "not a subcategory:\n";
    for (const Violation& v : sub_report.violations) out << "  " << v.message << "\n";
    result["ok"] = false;
    result["violations"] = violations_json(sub_report);
    emit_result(out, result);
    return kFails;
  }
  if (!check_closed(cat_ref, named.partition, sub)) {
    out << "the partition is not closed on the subcategory\n";
    result["ok"] = false;
    emit_result(out, result);
    return kFails;
  }
  NormalityCheck normal = is_normal_subconcentration(cat_ref, named.partition, sub);
  if (!normal.normal) {
    out << "the sub-concentration is not normal; witness classes ("
        << class_text(cat, named.partition.classes[normal.witness->first]) << ", "
        << class_text(cat, named.partition.classes[normal.witness->second]) << ")\n";
    result["ok"] = false;
    result["witness"] = {normal.witness->first, normal.witness->second};
    emit_result(out, result);
    return kFails;
  }

  MorphismPartition quotient = quotient_concentration(cat_ref, named.partition, sub);
  ConcentrationMonoid cm = concentration_monoid(cat, quotient);
  out << "quotient concentration of (" << cat_name << ", " << args.partition << "):\n";
  print_partition(out, cat, quotient);
  out << "quotient monoid: ";
  print_monoid(out, *cm.monoid);
  result["ok"] = true;
  result["classes"] = quotient.classes;
  result["monoid"] = monoid_json(*cm.monoid);
  emit_result(out, result);
  return kHolds;
}

int cmd_semidirect(const WorkspaceDocument& doc, const std::string& left_name,
                   const std::string& right_name, const std::string& phi_text, bool trivial,
                   bool inversion, std::ostream& out) {
  const FinMonoid& left = *need_monoid(doc, left_name);
  const FinMonoid& right = *need_monoid(doc, right_name);

  json result;
  result["command"] = "semidirect";

  std::vector<std::vector<std::uint32_t>> phi;
  if (trivial) {
    std::vector<std::uint32_t> identity(left.size());
    for (std::uint32_t i = 0; i < left.size(); ++i) identity[i] = i;
    phi.assign(right.size(), identity);
  } else if (inversion) {
    if (!left.is_group) throw workspace_error("--inversion requires the left factor to be a group");
    std::vector<std::uint32_t> identity(left.size());
    for (std::uint32_t i = 0; i < left.size(); ++i) identity[i] = i;
    std::vector<std::uint32_t> invert = inversion_map(left);
    phi.resize(right.size());
    for (std::uint32_t n = 0; n < right.size(); ++n) {
      // involutions invert the left factor, everything else acts trivially
      phi[n] = (right.mul(n, n) == right.identity && n != right.identity) ? invert : identity;
    }
  } else {
    json parsed;
    try {
      parsed = json::parse(phi_text);
    } catch (const json::parse_error& e) {
      throw workspace_error(std::string("--phi is not valid JSON: ") + e.what());
    }
    if (!parsed.is_array()) throw workspace_error("--phi must be an array of permutations");
    for (const json& row : parsed) {
      if (!row.is_array()) throw workspace_error("--phi must be an array of permutations");
      std::vector<std::uint32_t> perm;
      for (const json& v : row) {
        if (!v.is_number_unsigned() || v.get<std::uint64_t>() >= left.size()) {
          throw workspace_error("--phi entry out of range");
        }
        perm.push_back(v.get<std::uint32_t>());
      }
      phi.push_back(std::move(perm));
    }
  }

  FinMonoid product;
  try {
    product = semidirect_monoid(left, right, phi);
  } catch (const std::invalid_argument& e) {
    out << "semidirect product refused: " << e.what() << "\n";
    result["ok"] = false;
    result["error"] = e.what();
    emit_result(out, result);
    return kFails;
  }
  out << "semidirect product " << left_name << " x| " << right_name << ": ";
  print_monoid(out, product);
  result["ok"] = true;
  result["monoid"] = monoid_json(product);
  emit_result(out, result);
  return kHolds;
}

int cmd_dirlim(const WorkspaceDocument& doc, const std::string& diagram_name,
               const std::string& action_name, bool decompose, std::ostream& out) {
  auto diagram_it = doc.diagrams.find(diagram_name);
  if (diagram_it == doc.diagrams.end()) {
    throw workspace_error("unknown diagram '" + diagram_name + "'");
  }
  const NamedDiagram& diagram = diagram_it->second;
  const DirectedPoset& poset = doc.posets.at(diagram.poset);

  json result;
  result["command"] = "dirlim";

  ValidationReport poset_report = validate_poset(poset);
  ValidationReport diagram_report = validate_diagram(poset, diagram.diagram);
  if (!poset_report.ok || !diagram_report.ok) {
    out << "invalid inputs:\n";
    for (const Violation& v : poset_report.violations) out << "  " << v.message << "\n";
    for (const Violation& v : diagram_report.violations) out << "  " << v.message << "\n";
    result["ok"] = false;
    emit_result(out, result);
    return kFails;
  }

  PosetAction action = trivial_action(poset);
  if (!action_name.empty()) {
    auto action_it = doc.actions.find(action_name);
    if (action_it == doc.actions.end()) throw workspace_error("unknown action '" + action_name + "'");
    if (action_it->second.poset != diagram.poset) {
      throw workspace_error("action '" + action_name + "' acts on poset '" +
                            action_it->second.poset + "', not '" + diagram.poset + "'");
    }
    action = action_it->second.action;
  }
  ValidationReport action_report = validate_action(poset, diagram.diagram, action);
  if (!action_report.ok) {
    out << "invalid action:\n";
    for (const Violation& v : action_report.violations) out << "  " << v.message << "\n";
    result["ok"] = false;
    emit_result(out, result);
    return kFails;
  }

  ClassicalLimit classical = classical_direct_limit(poset, diagram.diagram);
  out << "classical direct limit: ";
  print_monoid(out, *classical.monoid);
  result["classical_limit"] = monoid_json(*classical.monoid);

  ConcentrationMonoid limit = equivariant_direct_limit(poset, diagram.diagram, action);
  out << "equivariant direct limit: ";
  print_monoid(out, *limit.monoid);
  result["equivariant_limit"] = monoid_json(*limit.monoid);

  bool ok = true;
  if (decompose) {
    DecompositionReport decomposition = check_semidirect_decomposition(poset, diagram.diagram, action);
    out << "semidirect decomposition:\n";
    out << "  comparison functor valid: " << (decomposition.functor_ok ? "yes" : "NO") << "\n";
    out << "  concentration isomorphism: "
        << (decomposition.concentration_isomorphism_ok ? "yes" : "NO") << "\n";
    out << "  monoid isomorphism with the semidirect model: "
        << (decomposition.monoid_isomorphism_ok ? "yes" : "NO") << "\n";
    result["decomposition_ok"] = decomposition.ok;
    ok = decomposition.ok;
  }
  result["ok"] = ok;
  emit_result(out, result);
  return ok ? kHolds : kFails;
}

int cmd_iso(const WorkspaceDocument& doc, const std::string& first_name,
            const std::string& second_name, std::ostream& out) {
  const FinMonoid& first = *need_monoid(doc, first_name);
  const FinMonoid& second = *need_monoid(doc, second_name);

  json result;
  result["command"] = "iso";
  auto iso = find_isomorphism(first, second);
  if (!iso) {
    out << first_name << " and " << second_name << " are not isomorphic\n";
    result["ok"] = false;
    emit_result(out, result);
    return kFails;
  }
  out << first_name << " and " << second_name << " are isomorphic:\n";
  for (std::uint32_t e = 0; e < first.size(); ++e) {
    out << "  " << first.labels[e] << " -> " << second.labels[(*iso)[e]] << "\n";
  }
  result["ok"] = true;
  result["map"] = *iso;
  emit_result(out, result);
  return kHolds;
}

int cmd_adjunction(const WorkspaceDocument& doc, const CommonArgs& args,
                   const std::string& monoid_name, std::ostream& out) {
  json result;
  result["command"] = "adjunction";
  bool ok;
  if (!monoid_name.empty()) {
    ok = verify_adjunction_triangles_monoid(*need_monoid(doc, monoid_name));
    out << "triangle identities at monoid " << monoid_name << ": " << (ok ? "hold" : "FAIL")
        << "\n";
  } else {
    std::string cat_name = resolve_category_name(doc, args.category, args.partition);
    const CatRef& cat = need_category(doc, cat_name);
    const NamedPartition& named = need_partition(doc, args.partition);
    if (!require_valid_category(out, cat_name, *cat, result) ||
        !check_concentration(*cat, named.partition, 2).is_concentration()) {
      out << "inputs do not form a category with concentration\n";
      result["ok"] = false;
      emit_result(out, result);
      return kFails;
    }
    ok = verify_adjunction_triangles(cat, named.partition);
    out << "triangle identities at (" << cat_name << ", " << args.partition
        << "): " << (ok ? "hold" : "FAIL") << "\n";
  }
  result["ok"] = ok;
  emit_result(out, result);
  return ok ? kHolds : kFails;
}

int cmd_groupoid_model(const WorkspaceDocument& doc, const std::string& group_name,
                       std::size_t objects, std::uint64_t seed, bool codiscrete,
                       std::ostream& out) {
  const MonoidRef& group = need_monoid(doc, group_name);
  json result;
  result["command"] = "groupoid-model";
  if (!group->is_group) {
    out << "monoid " << group_name << " is not a group\n";
    result["ok"] = false;
    emit_result(out, result);
    return kFails;
  }

  bool ok = true;
  if (codiscrete) {
    CodiscreteCover cover = codiscrete_cover(group);
    bool trivial_shape = is_equivalent_to_trivial(*cover.cover);
    bool fibration = check_multivalued_fibration(cover.projection).ok;
    bool surjective = check_surjective_on_morphisms(cover.projection);
    bool lifting = check_2_lifting(cover.projection).ok;
    ConcentrationMonoid cm = concentration_monoid(*cover.cover, cover.partition);
    bool recovered = find_isomorphism(*cm.monoid, *group).has_value();
    ok = trivial_shape && fibration && surjective && lifting && recovered;
    out << "codiscrete cover of " << group_name << " (" << cover.cover->morphism_count()
        << " morphisms)\n";
    out << "  equivalent to the trivial category: " << (trivial_shape ? "yes" : "NO") << "\n";
    out << "  projection multivalued fibration: " << (fibration ? "yes" : "NO") << "\n";
    out << "  projection surjective on morphisms: " << (surjective ? "yes" : "NO") << "\n";
    out << "  projection 2-lifting: " << (lifting ? "yes" : "NO") << "\n";
    out << "  concentration monoid recovers the group: " << (recovered ? "yes" : "NO") << "\n";
    result["checks"] = {{"equivalent_to_trivial", trivial_shape},
                        {"multivalued_fibration", fibration},
                        {"surjective", surjective},
                        {"two_lifting", lifting},
                        {"recovers_group", recovered}};
  } else {
    TorsorGroupoid torsor = torsor_groupoid(group, objects);
    ThetaFamily theta = sample_theta(*torsor.category, 0, seed);
    MorphismPartition part = theta_concentration(*torsor.category, theta);
    ConcentrationMonoid cm = concentration_monoid(*torsor.category, part);
    bool recovered = find_isomorphism(*cm.monoid, *group).has_value();

    ThetaFamily other = sample_theta(*torsor.category, 0, seed + 1);
    MorphismPartition other_part = theta_concentration(*torsor.category, other);
    FunctorData change =
        theta_change_functor(torsor.category, theta, other, torsor.category->identity(0));
    bool independent = is_concentration_isomorphism(change, part, other_part);

    ok = recovered && independent;
    out << "torsor groupoid on " << objects << " object" << (objects == 1 ? "" : "s")
        << " with group " << group_name << " (seed " << seed << ")\n";
    out << "  concentration classes: " << part.class_count() << "\n";
    out << "  concentration monoid recovers the group: " << (recovered ? "yes" : "NO") << "\n";
    out << "  independent of the path family (seed " << seed + 1
        << "): " << (independent ? "yes" : "NO") << "\n";
    result["checks"] = {{"recovers_group", recovered}, {"family_independent", independent}};
    result["classes"] = part.class_count();
  }
  result["ok"] = ok;
  emit_result(out, result);
  return ok ? kHolds : kFails;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"finite categories with concentration structures"};
  app.require_subcommand(1);

  std::uint64_t default_seed = 0;
  if (const char* env = std::getenv("CONCENTRA_SEED")) {
    default_seed = std::strtoull(env, nullptr, 10);
  }

  CommonArgs common;
  std::string functor_name, monoid_name, poset_name, diagram_name, action_name;
  std::string submonoid, sub_objects, sub_morphisms;
  std::string left_name, right_name, phi_text, first_name, second_name, group_name;
  int max_n = 2;
  bool exhaustive = false, decompose = false, trivial = false, inversion = false;
  bool codiscrete = false;
  std::size_t bound = 10, objects = 2;
  std::uint64_t seed = default_seed;

  auto add_doc = [&](CLI::App* cmd) {
    cmd->add_option("doc", common.doc_path, "workspace file")->required();
  };

  CLI::App* validate = app.add_subcommand("validate", "check structural axioms of named objects");
  add_doc(validate);
  validate->add_option("--category", common.category);
  validate->add_option("--functor", functor_name);
  validate->add_option("--monoid", monoid_name);
  validate->add_option("--poset", poset_name);

  CLI::App* check = app.add_subcommand("check-conc", "check the concentration axioms");
  add_doc(check);
  check->add_option("--category", common.category);
  check->add_option("--partition", common.partition)->required();
  check->add_option("--max-n", max_n)->check(CLI::Range(2, 8));
  check->add_flag("--exhaustive-axiom4", exhaustive,
                  "re-check associativity over all witness tuples (<= 8 morphisms)");

  CLI::App* monoid = app.add_subcommand("monoid", "build the concentration monoid");
  add_doc(monoid);
  monoid->add_option("--category", common.category);
  monoid->add_option("--partition", common.partition)->required();

  CLI::App* enumerate = app.add_subcommand("enumerate-conc", "list all concentration structures");
  add_doc(enumerate);
  enumerate->add_option("--category", common.category);
  enumerate->add_option("--bound", bound, "maximal morphism count");

  CLI::App* pullback = app.add_subcommand("pullback", "pull a concentration back along a functor");
  add_doc(pullback);
  pullback->add_option("--functor", functor_name)->required();
  pullback->add_option("--partition", common.partition)->required();

  CLI::App* concentrate = app.add_subcommand("concentrate", "build the concentrating functor");
  add_doc(concentrate);
  concentrate->add_option("--category", common.category);
  concentrate->add_option("--partition", common.partition)->required();

  CLI::App* quotient = app.add_subcommand("quotient", "quotient by a normal sub-structure");
  add_doc(quotient);
  quotient->add_option("--category", common.category);
  quotient->add_option("--partition", common.partition);
  quotient->add_option("--monoid", monoid_name);
  quotient->add_option("--submonoid", submonoid, "comma-separated elements");
  quotient->add_option("--sub-objects", sub_objects, "comma-separated objects");
  quotient->add_option("--sub-morphisms", sub_morphisms, "comma-separated morphisms");

  CLI::App* semidirect = app.add_subcommand("semidirect", "semidirect product of two monoids");
  add_doc(semidirect);
  semidirect->add_option("--left", left_name)->required();
  semidirect->add_option("--right", right_name)->required();
  semidirect->add_option("--phi", phi_text, "JSON array: one permutation of the left factor per right element");
  semidirect->add_flag("--trivial", trivial, "trivial action (direct product)");
  semidirect->add_flag("--inversion", inversion, "involutions of the right factor invert the left factor");

  CLI::App* dirlim = app.add_subcommand("dirlim", "direct limits of group diagrams");
  add_doc(dirlim);
  dirlim->add_option("--diagram", diagram_name)->required();
  dirlim->add_option("--action", action_name);
  dirlim->add_flag("--decompose", decompose, "verify the semidirect decomposition");

  CLI::App* iso = app.add_subcommand("iso", "search for a monoid isomorphism");
  add_doc(iso);
  iso->add_option("--first", first_name)->required();
  iso->add_option("--second", second_name)->required();

  CLI::App* adjunction = app.add_subcommand("adjunction", "verify the triangle identities");
  add_doc(adjunction);
  adjunction->add_option("--category", common.category);
  adjunction->add_option("--partition", common.partition);
  adjunction->add_option("--monoid", monoid_name);

  CLI::App* model = app.add_subcommand("groupoid-model", "torsor and codiscrete groupoid models");
  add_doc(model);
  model->add_option("--group", group_name)->required();
  model->add_option("--objects", objects)->check(CLI::PositiveNumber);
  model->add_option("--seed", seed, "path family seed (default: CONCENTRA_SEED or 0)");
  model->add_flag("--codiscrete", codiscrete, "check the codiscrete cover instead");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kHolds;
  } catch (const CLI::ParseError& e) {
    err << "argument error: " << e.what() << "\n";
    return kBadInput;
  }

  try {
    WorkspaceDocument doc = load_workspace(common.doc_path);
    if (validate->parsed()) {
      return cmd_validate(doc, common, functor_name, monoid_name, poset_name, out);
    }
    if (check->parsed()) return cmd_check_conc(doc, common, max_n, exhaustive, out);
    if (monoid->parsed()) return cmd_monoid(doc, common, out);
    if (enumerate->parsed()) return cmd_enumerate(doc, common, bound, out);
    if (pullback->parsed()) return cmd_pullback(doc, functor_name, common.partition, out);
    if (concentrate->parsed()) return cmd_concentrate(doc, common, out);
    if (quotient->parsed()) {
      if (monoid_name.empty() && common.partition.empty()) {
        throw workspace_error("quotient requires --monoid/--submonoid or --partition/--sub-*");
      }
      return cmd_quotient(doc, common, monoid_name, submonoid, sub_objects, sub_morphisms, out);
    }
    if (semidirect->parsed()) {
      if (!trivial && !inversion && phi_text.empty()) {
        throw workspace_error("semidirect requires --phi, --trivial or --inversion");
      }
      return cmd_semidirect(doc, left_name, right_name, phi_text, trivial, inversion, out);
    }
    if (dirlim->parsed()) return cmd_dirlim(doc, diagram_name, action_name, decompose, out);
    if (iso->parsed()) return cmd_iso(doc, first_name, second_name, out);
    if (adjunction->parsed()) {
      if (monoid_name.empty() && common.partition.empty()) {
        throw workspace_error("adjunction requires --monoid or --partition");
      }
      return cmd_adjunction(doc, common, monoid_name, out);
    }
    if (model->parsed()) {
      return cmd_groupoid_model(doc, group_name, objects, seed, codiscrete, out);
    }
    err << "no command\n";
    return kBadInput;
  } catch (const workspace_error& e) {
    err << "input error: " << e.what() << "\n";
    return kBadInput;
  } catch (const internal_error& e) {
    err << "internal error: " << e.what() << "\n";
    return kBadInput;
  } catch (const std::invalid_argument& e) {
    err << "input error: " << e.what() << "\n";
    return kBadInput;
  }
}

}  // namespace concentra
