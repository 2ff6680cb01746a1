#include "concentra/dirlim.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace concentra {

namespace {

void require(bool cond, const std::string& message) {
  if (!cond) throw std::invalid_argument(message);
}

std::vector<std::uint32_t> identity_map(std::size_t n) {
  std::vector<std::uint32_t> map(n);
  std::iota(map.begin(), map.end(), 0);
  return map;
}

}  // namespace

ValidationReport validate_poset(const DirectedPoset& poset) {
  const std::size_t n = poset.size();
  require(poset.leq.size() == n * n, "relation matrix size mismatch");

  ValidationReport report;
  for (std::size_t a = 0; a < n; ++a) {
    if (!poset.le(a, a)) report.add("reflexivity", {static_cast<std::uint32_t>(a)}, poset.elements[a] + " is not <= itself");
  }
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      if (a != b && poset.le(a, b) && poset.le(b, a)) {
        report.add("antisymmetry", {static_cast<std::uint32_t>(a), static_cast<std::uint32_t>(b)},
                   poset.elements[a] + " and " + poset.elements[b] + " are mutually comparable");
      }
    }
  }
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      if (!poset.le(a, b)) continue;
      for (std::size_t c = 0; c < n; ++c) {
        if (poset.le(b, c) && !poset.le(a, c)) {
          report.add("transitivity",
                     {static_cast<std::uint32_t>(a), static_cast<std::uint32_t>(b),
                      static_cast<std::uint32_t>(c)},
                     "the relation is not transitive");
        }
      }
    }
  }
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      bool bounded = false;
      for (std::size_t c = 0; c < n; ++c) {
        if (poset.le(a, c) && poset.le(b, c)) {
          bounded = true;
          break;
        }
      }
      if (!bounded) {
        report.add("directedness",
                   {static_cast<std::uint32_t>(a), static_cast<std::uint32_t>(b)},
                   poset.elements[a] + " and " + poset.elements[b] + " have no upper bound");
      }
    }
  }
  return report;
}

std::optional<std::size_t> greatest_element(const DirectedPoset& poset) {
  for (std::size_t t = 0; t < poset.size(); ++t) {
    bool top = true;
    for (std::size_t a = 0; a < poset.size(); ++a) {
      if (!poset.le(a, t)) {
        top = false;
        break;
      }
    }
    if (top) return t;
  }
  return std::nullopt;
}

FinCategory direct_category(const DirectedPoset& poset) {
  require(validate_poset(poset).ok, "not a directed partial order");
  CategoryBuilder builder;
  for (const std::string& label : poset.elements) builder.add_object(label);

  std::map<std::pair<std::size_t, std::size_t>, MorphismId> arrow;
  for (std::size_t a = 0; a < poset.size(); ++a) {
    for (std::size_t b = 0; b < poset.size(); ++b) {
      if (!poset.le(a, b)) continue;
      arrow[{a, b}] = builder.add_morphism(poset.elements[a] + "<=" + poset.elements[b],
                                           static_cast<ObjectId>(a), static_cast<ObjectId>(b));
    }
  }
  for (std::size_t a = 0; a < poset.size(); ++a) {
    builder.set_identity(static_cast<ObjectId>(a), arrow.at({a, a}));
  }
  for (const auto& [second, second_id] : arrow) {
    for (const auto& [first, first_id] : arrow) {
      if (second.first != first.second) continue;  // src of outer must be tgt of inner
      builder.set_composite(second_id, first_id, arrow.at({first.first, second.second}));
    }
  }
  return std::move(builder).build();
}

GroupDiagram make_diagram(const DirectedPoset& poset, std::vector<MonoidRef> groups,
                          std::map<std::pair<std::size_t, std::size_t>,
                                   std::vector<std::uint32_t>> strict_homs) {
  GroupDiagram diagram;
  diagram.group_of = std::move(groups);
  diagram.hom_of = std::move(strict_homs);
  for (std::size_t a = 0; a < poset.size(); ++a) {
    if (a < diagram.group_of.size() && diagram.group_of[a]) {
      diagram.hom_of.emplace(std::make_pair(a, a), identity_map(diagram.group_of[a]->size()));
    }
  }
  return diagram;
}

ValidationReport validate_diagram(const DirectedPoset& poset, const GroupDiagram& diagram) {
  const std::size_t n = poset.size();
  require(diagram.group_of.size() == n, "diagram must assign one group per poset element");
  for (const MonoidRef& group : diagram.group_of) require(group != nullptr, "null group");

  ValidationReport report;
  for (std::size_t a = 0; a < n; ++a) {
    if (!diagram.group_of[a]->is_group) {
      report.add("group", {static_cast<std::uint32_t>(a)},
                 "value at " + poset.elements[a] + " is not a group");
    }
  }
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      if (!poset.le(a, b)) continue;
      auto it = diagram.hom_of.find({a, b});
      if (it == diagram.hom_of.end()) {
        report.add("hom-missing", {static_cast<std::uint32_t>(a), static_cast<std::uint32_t>(b)},
                   "no connecting map for " + poset.elements[a] + " <= " + poset.elements[b]);
        continue;
      }
      MonoidHom hom{diagram.group_of[a], diagram.group_of[b], it->second};
      if (hom.map.size() != diagram.group_of[a]->size() || !check_monoid_hom(hom)) {
        report.add("hom", {static_cast<std::uint32_t>(a), static_cast<std::uint32_t>(b)},
                   "connecting map for " + poset.elements[a] + " <= " + poset.elements[b] +
                       " is not a homomorphism");
      }
    }
  }
  if (!report.ok) return report;

  for (std::size_t a = 0; a < n; ++a) {
    if (diagram.hom(a, a) != identity_map(diagram.group_of[a]->size())) {
      report.add("hom-reflexive", {static_cast<std::uint32_t>(a)},
                 "connecting map at " + poset.elements[a] + " is not the identity");
    }
  }
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      if (!poset.le(a, b)) continue;
      for (std::size_t c = 0; c < n; ++c) {
        if (!poset.le(b, c)) continue;
        const auto& ab = diagram.hom(a, b);
        const auto& bc = diagram.hom(b, c);
        const auto& ac = diagram.hom(a, c);
        for (std::uint32_t x = 0; x < ab.size(); ++x) {
          if (bc[ab[x]] != ac[x]) {
            report.add("hom-coherence",
                       {static_cast<std::uint32_t>(a), static_cast<std::uint32_t>(b),
                        static_cast<std::uint32_t>(c)},
                       "connecting maps do not compose along " + poset.elements[a] + " <= " +
                           poset.elements[b] + " <= " + poset.elements[c]);
            break;
          }
        }
      }
    }
  }
  return report;
}

PosetAction trivial_action(const DirectedPoset& poset) {
  PosetAction action;
  action.group = std::make_shared<FinMonoid>(trivial_group());
  action.perm_of = {identity_map(poset.size())};
  return action;
}

ValidationReport validate_action(const DirectedPoset& poset, const GroupDiagram& diagram,
                                 const PosetAction& action) {
  require(action.group != nullptr, "null acting group");
  require(action.group->is_group, "acting monoid is not a group");
  require(action.perm_of.size() == action.group->size(),
          "action must assign one permutation per group element");
  const std::size_t n = poset.size();

  ValidationReport report;
  for (std::uint32_t g = 0; g < action.perm_of.size(); ++g) {
    const auto& perm = action.perm_of[g];
    require(perm.size() == n, "permutation size mismatch");
    std::vector<bool> hit(n, false);
    for (std::uint32_t v : perm) {
      require(v < n, "permutation value out of range");
      require(!hit[v], "action entry is not a permutation");
      hit[v] = true;
    }
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) {
        if (poset.le(a, b) != poset.le(perm[a], perm[b])) {
          report.add("order-preserving", {g, static_cast<std::uint32_t>(a), static_cast<std::uint32_t>(b)},
                     "the action of " + action.group->labels[g] + " does not preserve the order");
        }
      }
    }
  }
  if (action.perm_of[action.group->identity] != identity_map(n)) {
    report.add("action-identity", {}, "the group identity does not act as the identity");
  }
  for (std::uint32_t g1 = 0; g1 < action.perm_of.size(); ++g1) {
    for (std::uint32_t g2 = 0; g2 < action.perm_of.size(); ++g2) {
      const auto& left = action.perm_of[action.group->mul(g1, g2)];
      for (std::size_t a = 0; a < n; ++a) {
        if (left[a] != action.perm_of[g1][action.perm_of[g2][a]]) {
          report.add("action-homomorphism", {g1, g2}, "the action is not a homomorphism");
          break;
        }
      }
    }
  }
  if (!report.ok) return report;

  // Equivariance: groups match as registry entries, connecting maps as
  // functions.
  for (std::uint32_t g = 0; g < action.perm_of.size(); ++g) {
    const auto& perm = action.perm_of[g];
    for (std::size_t a = 0; a < n; ++a) {
      if (diagram.group_of[a] != diagram.group_of[perm[a]]) {
        report.add("equivariance-group", {g, static_cast<std::uint32_t>(a)},
                   "group at " + poset.elements[a] + " is not the identical registry entry as at " +
                       poset.elements[perm[a]]);
      }
    }
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) {
        if (!poset.le(a, b)) continue;
        if (diagram.hom(a, b) != diagram.hom(perm[a], perm[b])) {
          report.add("equivariance-hom",
                     {g, static_cast<std::uint32_t>(a), static_cast<std::uint32_t>(b)},
                     "connecting map for " + poset.elements[a] + " <= " + poset.elements[b] +
                         " differs from its image under " + action.group->labels[g]);
        }
      }
    }
  }
  return report;
}

MorphismId SGCategory::index_of(std::size_t target, std::uint32_t alpha, std::uint32_t f) const {
  return f * block_size_ + object_offset_[target] + alpha;
}

SGCategory build_SG(const DirectedPoset& poset, const GroupDiagram& diagram,
                    const PosetAction& action) {
  {
    ValidationReport poset_report = validate_poset(poset);
    require(poset_report.ok, "build refused: not a directed poset");
    ValidationReport diagram_report = validate_diagram(poset, diagram);
    require(diagram_report.ok, "build refused: invalid group diagram");
    ValidationReport action_report = validate_action(poset, diagram, action);
    if (!action_report.ok) {
      std::ostringstream os;
      os << "build refused: invalid action";
      for (const Violation& v : action_report.violations) os << "; " << v.message;
      throw std::invalid_argument(os.str());
    }
  }

  const std::size_t n = poset.size();
  const FinMonoid& acting = *action.group;

  SGCategory out;
  out.object_offset_.resize(n);
  std::uint32_t offset = 0;
  for (std::size_t a = 0; a < n; ++a) {
    out.object_offset_[a] = offset;
    offset += static_cast<std::uint32_t>(diagram.group_of[a]->size());
  }
  out.block_size_ = offset;

  std::vector<std::vector<std::uint32_t>> inverse_perm(acting.size(),
                                                       std::vector<std::uint32_t>(n));
  for (std::uint32_t g = 0; g < acting.size(); ++g) {
    for (std::size_t a = 0; a < n; ++a) inverse_perm[g][action.perm_of[g][a]] = a;
  }

  CategoryBuilder builder;
  for (const std::string& label : poset.elements) builder.add_object(label);
  for (std::uint32_t f = 0; f < acting.size(); ++f) {
    for (std::size_t a = 0; a < n; ++a) {
      const FinMonoid& fiber = *diagram.group_of[a];
      for (std::uint32_t alpha = 0; alpha < fiber.size(); ++alpha) {
        builder.add_morphism("(" + poset.elements[a] + "," + fiber.labels[alpha] + "," +
                                 acting.labels[f] + ")",
                             static_cast<ObjectId>(inverse_perm[f][a]),
                             static_cast<ObjectId>(a));
        out.mors.push_back(SGCategory::Mor{a, alpha, f});
      }
    }
  }
  for (std::size_t a = 0; a < n; ++a) {
    builder.set_identity(static_cast<ObjectId>(a),
                         out.index_of(a, diagram.group_of[a]->identity, acting.identity));
  }
  for (MorphismId m1 = 0; m1 < out.mors.size(); ++m1) {
    const auto& [a, alpha, f] = out.mors[m1];
    for (MorphismId m2 = 0; m2 < out.mors.size(); ++m2) {
      const auto& [b, beta, g] = out.mors[m2];
      if (inverse_perm[f][a] != b) continue;  // src of m1 must be tgt of m2
      builder.set_composite(m1, m2,
                            out.index_of(a, diagram.group_of[a]->mul(alpha, beta),
                                         acting.mul(f, g)));
    }
  }
  out.category = std::make_shared<FinCategory>(std::move(builder).build());
  if (!validate_category(*out.category).ok) {
    throw internal_error("S_G construction is not a category");
  }

  const std::size_t top = *greatest_element(poset);
  std::vector<std::uint32_t> class_of(out.mors.size());
  std::map<std::pair<std::uint32_t, std::uint32_t>, std::uint32_t> class_index;
  for (MorphismId m = 0; m < out.mors.size(); ++m) {
    const auto& [a, alpha, f] = out.mors[m];
    std::pair<std::uint32_t, std::uint32_t> key{f, diagram.hom(a, top)[alpha]};
    auto [it, inserted] = class_index.emplace(key, static_cast<std::uint32_t>(class_index.size()));
    class_of[m] = it->second;
  }
  out.partition = partition_from_class_of(std::move(class_of));
  if (!check_concentration(*out.category, out.partition, 2).is_concentration()) {
    throw internal_error("S_G relation failed the concentration axioms");
  }
  return out;
}

ClassicalLimit classical_direct_limit(const DirectedPoset& poset, const GroupDiagram& diagram) {
  require(validate_poset(poset).ok, "not a directed poset");
  require(validate_diagram(poset, diagram).ok, "invalid group diagram");
  auto top_opt = greatest_element(poset);
  require(top_opt.has_value(), "classical limit requires a greatest element");
  const std::size_t top = *top_opt;
  const std::size_t n = poset.size();

  std::vector<std::uint32_t> offset(n);
  std::uint32_t total = 0;
  for (std::size_t a = 0; a < n; ++a) {
    offset[a] = total;
    total += static_cast<std::uint32_t>(diagram.group_of[a]->size());
  }

  // Union-find over all pairs (A, alpha) using the definitional relation:
  // identified when the images in some common upper bound agree.
  std::vector<std::uint32_t> parent(total);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::uint32_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      for (std::uint32_t alpha = 0; alpha < diagram.group_of[a]->size(); ++alpha) {
        for (std::uint32_t beta = 0; beta < diagram.group_of[b]->size(); ++beta) {
          for (std::size_t c = 0; c < n; ++c) {
            if (!poset.le(a, c) || !poset.le(b, c)) continue;
            if (diagram.hom(a, c)[alpha] == diagram.hom(b, c)[beta]) {
              parent[find(offset[a] + alpha)] = find(offset[b] + beta);
              break;
            }
          }
        }
      }
    }
  }

  std::map<std::uint32_t, std::uint32_t> roots;
  std::vector<std::uint32_t> root_of(total);
  for (std::uint32_t x = 0; x < total; ++x) {
    auto [it, inserted] = roots.emplace(find(x), static_cast<std::uint32_t>(roots.size()));
    root_of[x] = it->second;
  }

  // Every class must contain an element of the top group, which carries the
  // multiplication.
  const FinMonoid& top_group = *diagram.group_of[top];
  std::vector<std::uint32_t> representative(roots.size(), static_cast<std::uint32_t>(-1));
  for (std::uint32_t x = 0; x < top_group.size(); ++x) {
    representative[root_of[offset[top] + x]] = x;
  }
  for (std::uint32_t rep : representative) {
    if (rep == static_cast<std::uint32_t>(-1)) {
      throw internal_error("limit class misses the greatest element's group");
    }
  }

  const std::size_t k = roots.size();
  std::vector<std::vector<std::uint32_t>> rows(k, std::vector<std::uint32_t>(k));
  std::vector<std::string> labels(k);
  for (std::size_t x = 0; x < k; ++x) {
    labels[x] = "[" + top_group.labels[representative[x]] + "]";
    for (std::size_t y = 0; y < k; ++y) {
      rows[x][y] = root_of[offset[top] + top_group.mul(representative[x], representative[y])];
    }
  }

  ClassicalLimit out;
  out.monoid = std::make_shared<FinMonoid>(make_monoid(rows, std::move(labels)));
  out.class_of.resize(n);
  for (std::size_t a = 0; a < n; ++a) {
    out.class_of[a].resize(diagram.group_of[a]->size());
    for (std::uint32_t alpha = 0; alpha < out.class_of[a].size(); ++alpha) {
      out.class_of[a][alpha] = root_of[offset[a] + alpha];
    }
  }
  return out;
}

ConcentrationMonoid equivariant_direct_limit(const DirectedPoset& poset,
                                             const GroupDiagram& diagram,
                                             const PosetAction& action) {
  SGCategory sg = build_SG(poset, diagram, action);
  ConcentrationMonoid limit = concentration_monoid(*sg.category, sg.partition);
  if (!limit.monoid->is_group) {
    throw internal_error("equivariant direct limit is not a group");
  }
  return limit;
}

DecompositionReport check_semidirect_decomposition(const DirectedPoset& poset,
                                                   const GroupDiagram& diagram,
                                                   const PosetAction& action) {
  SGCategory sg = build_SG(poset, diagram, action);
  SGCategory s0 = build_SG(poset, diagram, trivial_action(poset));
  const FinMonoid& acting = *action.group;

  auto bg = std::make_shared<FinCategory>(one_object_category(acting));
  MorphismPartition bg_discrete = discrete_partition(*bg);

  CatAction phi;
  phi.base = bg;
  phi.fiber = s0.category;
  phi.functor_of.resize(acting.size());
  for (std::uint32_t g = 0; g < acting.size(); ++g) {
    FunctorData fun;
    fun.source = s0.category;
    fun.target = s0.category;
    fun.obj_map.resize(poset.size());
    for (std::size_t a = 0; a < poset.size(); ++a) {
      fun.obj_map[a] = static_cast<ObjectId>(action.perm_of[g][a]);
    }
    fun.mor_map.resize(s0.mors.size());
    for (MorphismId m = 0; m < s0.mors.size(); ++m) {
      const auto& [a, alpha, eps] = s0.mors[m];
      fun.mor_map[m] = s0.index_of(action.perm_of[g][a], alpha, eps);
    }
    phi.functor_of[g] = std::move(fun);
  }

  SemidirectProduct product = semidirect_category(phi, s0.partition, bg_discrete);

  FunctorData comparison;
  comparison.source = product.category;
  comparison.target = sg.category;
  comparison.obj_map.resize(product.category->object_count());
  for (ObjectId c = 0; c < poset.size(); ++c) {
    comparison.obj_map[product.object_index(c, 0)] = c;
  }
  comparison.mor_map.resize(product.mors.size());
  for (MorphismId m = 0; m < product.mors.size(); ++m) {
    const auto& [fiber_src, alpha, g] = product.mors[m];
    const auto& [a, fiber_alpha, eps] = s0.mors[alpha];
    comparison.mor_map[m] = sg.index_of(a, fiber_alpha, g);
  }

  DecompositionReport report;
  report.functor_ok = check_functor(comparison).ok;
  report.concentration_isomorphism_ok =
      report.functor_ok &&
      is_concentration_isomorphism(comparison, product.partition, sg.partition);

  ConcentrationMonoid limit = concentration_monoid(*sg.category, sg.partition);
  ConcentrationMonoid plain_limit = concentration_monoid(*s0.category, s0.partition);

  // Monoid-level action: the class of (A, alpha) moves to the class of
  // (g(A), alpha); well defined by the compatibility of the action.
  std::vector<std::vector<std::uint32_t>> monoid_phi(acting.size());
  for (std::uint32_t g = 0; g < acting.size(); ++g) {
    monoid_phi[g].assign(s0.partition.class_count(), static_cast<std::uint32_t>(-1));
    for (std::uint32_t cls = 0; cls < s0.partition.class_count(); ++cls) {
      for (MorphismId member : s0.partition.classes[cls]) {
        const auto& [a, alpha, eps] = s0.mors[member];
        std::uint32_t image =
            s0.partition.class_of[s0.index_of(action.perm_of[g][a], alpha, eps)];
        if (monoid_phi[g][cls] == static_cast<std::uint32_t>(-1)) {
          monoid_phi[g][cls] = image;
        } else if (monoid_phi[g][cls] != image) {
          throw internal_error("monoid-level action of the decomposition is not well defined");
        }
      }
    }
  }
  FinMonoid model = semidirect_monoid(*plain_limit.monoid, acting, monoid_phi);
  report.monoid_isomorphism_ok = find_isomorphism(*limit.monoid, model).has_value();

  report.equivariant_limit = limit.monoid;
  report.semidirect_model = std::make_shared<FinMonoid>(std::move(model));
  report.ok = report.functor_ok && report.concentration_isomorphism_ok &&
              report.monoid_isomorphism_ok;
  return report;
}

}  // namespace concentra
