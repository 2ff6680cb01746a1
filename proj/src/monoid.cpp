#include "concentra/monoid.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

namespace concentra {

namespace {

void require(bool cond, const std::string& message) {
  if (!cond) throw std::invalid_argument(message);
}

bool table_is_group(const FinMonoid& m) {
  for (std::uint32_t a = 0; a < m.size(); ++a) {
    bool has_inverse = false;
    for (std::uint32_t b = 0; b < m.size(); ++b) {
      if (m.mul(a, b) == m.identity && m.mul(b, a) == m.identity) {
        has_inverse = true;
        break;
      }
    }
    if (!has_inverse) return false;
  }
  return true;
}

std::vector<std::string> default_labels(std::size_t n) {
  std::vector<std::string> labels(n);
  for (std::size_t i = 0; i < n; ++i) labels[i] = std::to_string(i);
  return labels;
}

}  // namespace

FinMonoid make_monoid(const std::vector<std::vector<std::uint32_t>>& rows,
                      std::vector<std::string> labels) {
  const std::size_t n = rows.size();
  require(n > 0, "monoid table must be nonempty");
  FinMonoid m;
  m.table.reserve(n * n);
  for (const auto& row : rows) {
    require(row.size() == n, "monoid table must be square");
    for (std::uint32_t e : row) {
      require(e < n, "monoid table entry out of range");
      m.table.push_back(e);
    }
  }
  m.labels = labels.empty() ? default_labels(n) : std::move(labels);
  require(m.labels.size() == n, "monoid label count differs from the table size");

  bool found_identity = false;
  for (std::uint32_t e = 0; e < n; ++e) {
    bool two_sided = true;
    for (std::uint32_t x = 0; x < n; ++x) {
      if (m.mul(e, x) != x || m.mul(x, e) != x) {
        two_sided = false;
        break;
      }
    }
    if (two_sided) {
      m.identity = e;
      found_identity = true;
      break;
    }
  }
  require(found_identity, "monoid table has no two-sided identity");

  for (std::uint32_t a = 0; a < n; ++a) {
    for (std::uint32_t b = 0; b < n; ++b) {
      for (std::uint32_t c = 0; c < n; ++c) {
        if (m.mul(m.mul(a, b), c) != m.mul(a, m.mul(b, c))) {
          std::ostringstream os;
          os << "monoid table not associative at (" << a << ", " << b << ", " << c << ")";
          throw std::invalid_argument(os.str());
        }
      }
    }
  }
  m.is_group = table_is_group(m);
  return m;
}

ValidationReport validate_monoid(const FinMonoid& monoid) {
  const std::size_t n = monoid.size();
  require(n > 0 && monoid.table.size() == n * n, "monoid table size mismatch");
  for (std::uint32_t e : monoid.table) require(e < n, "monoid table entry out of range");
  require(monoid.identity < n, "identity index out of range");

  ValidationReport report;
  for (std::uint32_t x = 0; x < n; ++x) {
    if (monoid.mul(monoid.identity, x) != x || monoid.mul(x, monoid.identity) != x) {
      report.add("identity", {x}, "stored identity is not a two-sided unit at element " +
                                      monoid.labels[x]);
    }
  }
  for (std::uint32_t a = 0; a < n; ++a) {
    for (std::uint32_t b = 0; b < n; ++b) {
      for (std::uint32_t c = 0; c < n; ++c) {
        if (monoid.mul(monoid.mul(a, b), c) != monoid.mul(a, monoid.mul(b, c))) {
          report.add("associativity", {a, b, c}, "multiplication not associative");
        }
      }
    }
  }
  if (monoid.is_group != table_is_group(monoid)) {
    report.add("group-flag", {}, "is_group flag disagrees with the table");
  }
  return report;
}

FinMonoid trivial_group() { return make_monoid({{0}}, {"e"}); }

FinMonoid cyclic_group(std::uint32_t order) {
  require(order > 0, "cyclic group order must be positive");
  std::vector<std::vector<std::uint32_t>> rows(order, std::vector<std::uint32_t>(order));
  for (std::uint32_t a = 0; a < order; ++a) {
    for (std::uint32_t b = 0; b < order; ++b) rows[a][b] = (a + b) % order;
  }
  return make_monoid(rows);
}

FinMonoid symmetric_group(std::uint32_t letters) {
  require(letters >= 1 && letters <= 5, "symmetric_group supports 1..5 letters");
  std::vector<std::vector<std::uint32_t>> perms;
  std::vector<std::uint32_t> p(letters);
  std::iota(p.begin(), p.end(), 0);
  do {
    perms.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));

  auto index_of = [&](const std::vector<std::uint32_t>& q) {
    return static_cast<std::uint32_t>(
        std::lower_bound(perms.begin(), perms.end(), q) - perms.begin());
  };

  const std::size_t n = perms.size();
  std::vector<std::vector<std::uint32_t>> rows(n, std::vector<std::uint32_t>(n));
  std::vector<std::string> labels(n);
  std::vector<std::uint32_t> composed(letters);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      for (std::uint32_t x = 0; x < letters; ++x) composed[x] = perms[a][perms[b][x]];
      rows[a][b] = index_of(composed);
    }
    std::string label;
    for (std::uint32_t x : perms[a]) label += static_cast<char>('0' + x);
    labels[a] = std::move(label);
  }
  return make_monoid(rows, std::move(labels));
}

FinMonoid direct_product(const FinMonoid& left, const FinMonoid& right) {
  const std::size_t n = left.size() * right.size();
  std::vector<std::vector<std::uint32_t>> rows(n, std::vector<std::uint32_t>(n));
  std::vector<std::string> labels(n);
  auto index = [&](std::uint32_t a, std::uint32_t b) {
    return a * static_cast<std::uint32_t>(right.size()) + b;
  };
  for (std::uint32_t a1 = 0; a1 < left.size(); ++a1) {
    for (std::uint32_t b1 = 0; b1 < right.size(); ++b1) {
      labels[index(a1, b1)] = "(" + left.labels[a1] + "," + right.labels[b1] + ")";
      for (std::uint32_t a2 = 0; a2 < left.size(); ++a2) {
        for (std::uint32_t b2 = 0; b2 < right.size(); ++b2) {
          rows[index(a1, b1)][index(a2, b2)] = index(left.mul(a1, a2), right.mul(b1, b2));
        }
      }
    }
  }
  return make_monoid(rows, std::move(labels));
}

FinMonoid klein_four_group() {
  FinMonoid z2 = cyclic_group(2);
  return direct_product(z2, z2);
}

std::optional<std::uint32_t> element_inverse(const FinMonoid& monoid, std::uint32_t element) {
  require(element < monoid.size(), "element index out of range");
  for (std::uint32_t b = 0; b < monoid.size(); ++b) {
    if (monoid.mul(element, b) == monoid.identity && monoid.mul(b, element) == monoid.identity) {
      return b;
    }
  }
  return std::nullopt;
}

std::vector<std::uint32_t> inversion_map(const FinMonoid& group) {
  require(group.is_group, "inversion_map requires a group");
  std::vector<std::uint32_t> inv(group.size());
  for (std::uint32_t a = 0; a < group.size(); ++a) inv[a] = *element_inverse(group, a);
  return inv;
}

bool check_monoid_hom(const MonoidHom& hom) {
  require(hom.source && hom.target, "hom with null endpoint");
  require(hom.map.size() == hom.source->size(), "hom map size mismatch");
  for (std::uint32_t v : hom.map) {
    if (v >= hom.target->size()) return false;
  }
  if (hom.map[hom.source->identity] != hom.target->identity) return false;
  for (std::uint32_t a = 0; a < hom.source->size(); ++a) {
    for (std::uint32_t b = 0; b < hom.source->size(); ++b) {
      if (hom.map[hom.source->mul(a, b)] != hom.target->mul(hom.map[a], hom.map[b])) return false;
    }
  }
  return true;
}

bool is_bijective(const MonoidHom& hom) {
  if (hom.source->size() != hom.target->size()) return false;
  std::vector<bool> hit(hom.target->size(), false);
  for (std::uint32_t v : hom.map) {
    if (hit[v]) return false;
    hit[v] = true;
  }
  return true;
}

MonoidHom compose_homs(const MonoidHom& f, const MonoidHom& g) {
  require(g.target && f.source, "compose_homs: null endpoint");
  require(g.target->table == f.source->table && g.target->identity == f.source->identity,
          "compose_homs: endpoint mismatch");
  MonoidHom out;
  out.source = g.source;
  out.target = f.target;
  out.map.reserve(g.map.size());
  for (std::uint32_t v : g.map) out.map.push_back(f.map[v]);
  return out;
}

FinCategory one_object_category(const FinMonoid& monoid) {
  CategoryBuilder builder;
  ObjectId star = builder.add_object("*");
  for (std::uint32_t e = 0; e < monoid.size(); ++e) {
    builder.add_morphism(monoid.labels[e], star, star);
  }
  builder.set_identity(star, monoid.identity);
  for (std::uint32_t a = 0; a < monoid.size(); ++a) {
    for (std::uint32_t b = 0; b < monoid.size(); ++b) {
      builder.set_composite(a, b, monoid.mul(a, b));
    }
  }
  return std::move(builder).build();
}

bool every_class_contains_isomorphism(const FinCategory& cat, const MorphismPartition& part) {
  require_consistent(cat, part);
  for (const auto& cls : part.classes) {
    bool found = false;
    for (MorphismId f : cls) {
      if (inverse_morphism(cat, f)) {
        found = true;
        break;
      }
    }
    if (!found) return false;
  }
  return true;
}

ConcentrationMonoid concentration_monoid(const FinCategory& cat, const MorphismPartition& part) {
  AxiomReport report = check_concentration(cat, part, 2);
  require(report.is_concentration(),
          "concentration_monoid refused: the partition fails the concentration axioms");

  const std::size_t k = part.class_count();
  std::vector<std::uint32_t> mu = class_multiplication(cat, part);
  std::vector<std::vector<std::uint32_t>> rows(k, std::vector<std::uint32_t>(k));
  for (std::size_t a = 0; a < k; ++a) {
    for (std::size_t b = 0; b < k; ++b) rows[a][b] = mu[a * k + b];
  }
  std::vector<std::string> labels(k);
  for (std::size_t c = 0; c < k; ++c) {
    labels[c] = "[" + cat.morphism_label(part.classes[c].front()) + "]";
  }
  FinMonoid monoid = make_monoid(rows, std::move(labels));
  if (monoid.identity != part.class_of[cat.identity(0)]) {
    throw internal_error("concentration monoid identity is not the class of the identities");
  }
  if (every_class_contains_isomorphism(cat, part) && !monoid.is_group) {
    throw internal_error("every class contains an isomorphism but the table is not a group");
  }
  ConcentrationMonoid out;
  out.monoid = std::make_shared<FinMonoid>(std::move(monoid));
  out.class_map = part.class_of;
  return out;
}

MonoidHom induced_hom(const FunctorData& fun, const MorphismPartition& source_part,
                      const MorphismPartition& target_part) {
  PreservationCheck preserving = is_concentration_preserving(fun, source_part, target_part);
  require(preserving.preserving, "induced_hom refused: the functor is not concentration preserving");

  ConcentrationMonoid source = concentration_monoid(*fun.source, source_part);
  ConcentrationMonoid target = concentration_monoid(*fun.target, target_part);
  MonoidHom hom;
  hom.source = source.monoid;
  hom.target = target.monoid;
  hom.map.resize(source_part.class_count());
  for (std::uint32_t c = 0; c < source_part.class_count(); ++c) {
    hom.map[c] = target_part.class_of[fun.mor_map[source_part.classes[c].front()]];
  }
  if (!check_monoid_hom(hom)) {
    throw internal_error("induced map of a concentration preserving functor is not a homomorphism");
  }
  return hom;
}

namespace {

// (tail, cycle) of the power sequence x, x^2, ... together with an identity
// flag; isomorphism-invariant and cheap, used only for pruning.
struct ElementProfile {
  std::uint32_t tail = 0;
  std::uint32_t cycle = 0;
  bool is_identity = false;
  auto operator<=>(const ElementProfile&) const = default;
};

ElementProfile profile_of(const FinMonoid& m, std::uint32_t x) {
  std::vector<std::uint32_t> order;
  std::vector<std::uint32_t> position(m.size(), static_cast<std::uint32_t>(-1));
  std::uint32_t current = x;
  while (position[current] == static_cast<std::uint32_t>(-1)) {
    position[current] = static_cast<std::uint32_t>(order.size());
    order.push_back(current);
    current = m.mul(current, x);
  }
  ElementProfile p;
  p.tail = position[current];
  p.cycle = static_cast<std::uint32_t>(order.size()) - position[current];
  p.is_identity = (x == m.identity);
  return p;
}

struct IsoSearch {
  const FinMonoid& left;
  const FinMonoid& right;
  std::vector<ElementProfile> left_profiles;
  std::vector<ElementProfile> right_profiles;

  // Extends the partial map with a := b plus everything forced by closing
  // under products of already-mapped elements. Returns false on a clash.
  bool propagate(std::vector<std::uint32_t>& map, std::vector<bool>& used, std::uint32_t a,
                 std::uint32_t b) const {
    if (map[a] != static_cast<std::uint32_t>(-1)) return map[a] == b;
    if (used[b] || left_profiles[a] != right_profiles[b]) return false;
    map[a] = b;
    used[b] = true;
    for (std::uint32_t x = 0; x < left.size(); ++x) {
      if (map[x] == static_cast<std::uint32_t>(-1)) continue;
      if (!propagate(map, used, left.mul(a, x), right.mul(b, map[x]))) return false;
      if (!propagate(map, used, left.mul(x, a), right.mul(map[x], b))) return false;
    }
    return true;
  }

  bool search(std::vector<std::uint32_t>& map, std::vector<bool>& used) const {
    std::uint32_t a = 0;
    while (a < left.size() && map[a] != static_cast<std::uint32_t>(-1)) ++a;
    if (a == left.size()) return true;
    for (std::uint32_t b = 0; b < right.size(); ++b) {
      if (used[b] || left_profiles[a] != right_profiles[b]) continue;
      std::vector<std::uint32_t> trial_map = map;
      std::vector<bool> trial_used = used;
      if (propagate(trial_map, trial_used, a, b) && search(trial_map, trial_used)) {
        map = std::move(trial_map);
        used = std::move(trial_used);
        return true;
      }
    }
    return false;
  }
};

}  // namespace

std::optional<std::vector<std::uint32_t>> find_isomorphism(const FinMonoid& left,
                                                           const FinMonoid& right) {
  require(left.size() <= 64 && right.size() <= 64,
          "find_isomorphism refused: monoids larger than 64 elements");
  if (left.size() != right.size()) return std::nullopt;

  IsoSearch search{left, right, {}, {}};
  search.left_profiles.reserve(left.size());
  for (std::uint32_t x = 0; x < left.size(); ++x) {
    search.left_profiles.push_back(profile_of(left, x));
  }
  search.right_profiles.reserve(right.size());
  for (std::uint32_t x = 0; x < right.size(); ++x) {
    search.right_profiles.push_back(profile_of(right, x));
  }
  {
    auto l = search.left_profiles;
    auto r = search.right_profiles;
    std::sort(l.begin(), l.end());
    std::sort(r.begin(), r.end());
    if (l != r) return std::nullopt;
  }

  std::vector<std::uint32_t> map(left.size(), static_cast<std::uint32_t>(-1));
  std::vector<bool> used(right.size(), false);
  if (!search.propagate(map, used, left.identity, right.identity)) return std::nullopt;
  if (!search.search(map, used)) return std::nullopt;
  return map;
}

bool is_submonoid(const FinMonoid& monoid, const std::vector<std::uint32_t>& subset) {
  std::set<std::uint32_t> members(subset.begin(), subset.end());
  for (std::uint32_t e : members) {
    if (e >= monoid.size()) return false;
  }
  if (!members.count(monoid.identity)) return false;
  for (std::uint32_t a : members) {
    for (std::uint32_t b : members) {
      if (!members.count(monoid.mul(a, b))) return false;
    }
  }
  return true;
}

bool is_normal_submonoid(const FinMonoid& monoid, const std::vector<std::uint32_t>& subset) {
  require(is_submonoid(monoid, subset), "subset is not a submonoid");
  std::set<std::uint32_t> members(subset.begin(), subset.end());
  for (std::uint32_t x = 0; x < monoid.size(); ++x) {
    std::set<std::uint32_t> xs, sx;
    for (std::uint32_t s : members) {
      xs.insert(monoid.mul(x, s));
      sx.insert(monoid.mul(s, x));
    }
    if (xs != sx) return false;
  }
  return true;
}

namespace {

// a ~ b iff s1*a = b*s2 for some s1, s2 in the submonoid.
std::vector<bool> raw_quotient_relation(const FinMonoid& m,
                                        const std::set<std::uint32_t>& members) {
  const std::size_t n = m.size();
  std::vector<bool> related(n * n, false);
  for (std::uint32_t a = 0; a < n; ++a) {
    for (std::uint32_t b = 0; b < n; ++b) {
      for (std::uint32_t s1 : members) {
        if (related[a * n + b]) break;
        for (std::uint32_t s2 : members) {
          if (m.mul(s1, a) == m.mul(b, s2)) {
            related[a * n + b] = true;
            break;
          }
        }
      }
    }
  }
  return related;
}

}  // namespace

QuotientMonoid quotient_by_normal_submonoid(const FinMonoid& monoid,
                                            const std::vector<std::uint32_t>& subset) {
  require(is_normal_submonoid(monoid, subset),
          "quotient refused: subset is not a normal submonoid");
  std::set<std::uint32_t> members(subset.begin(), subset.end());
  const std::size_t n = monoid.size();
  std::vector<bool> related = raw_quotient_relation(monoid, members);

  for (std::uint32_t a = 0; a < n; ++a) {
    if (!related[a * n + a]) throw internal_error("quotient relation is not reflexive");
    for (std::uint32_t b = 0; b < n; ++b) {
      if (related[a * n + b] != related[b * n + a]) {
        throw internal_error("quotient relation of a normal submonoid is not symmetric");
      }
    }
  }

  bool closure_was_needed = false;
  for (bool changed = true; changed;) {
    changed = false;
    for (std::uint32_t a = 0; a < n; ++a) {
      for (std::uint32_t b = 0; b < n; ++b) {
        if (!related[a * n + b]) continue;
        for (std::uint32_t c = 0; c < n; ++c) {
          if (related[b * n + c] && !related[a * n + c]) {
            related[a * n + c] = true;
            related[c * n + a] = true;
            closure_was_needed = true;
            changed = true;
          }
        }
      }
    }
  }

  for (std::uint32_t a = 0; a < n; ++a) {
    for (std::uint32_t b = 0; b < n; ++b) {
      if (!related[a * n + b]) continue;
      for (std::uint32_t c = 0; c < n; ++c) {
        for (std::uint32_t d = 0; d < n; ++d) {
          if (!related[c * n + d]) continue;
          if (!related[monoid.mul(a, c) * n + monoid.mul(b, d)]) {
            throw internal_error("quotient relation of a normal submonoid is not a congruence");
          }
        }
      }
    }
  }

  QuotientMonoid out;
  out.closure_was_needed = closure_was_needed;
  out.class_of.assign(n, static_cast<std::uint32_t>(-1));
  std::vector<std::uint32_t> representative;
  for (std::uint32_t a = 0; a < n; ++a) {
    if (out.class_of[a] != static_cast<std::uint32_t>(-1)) continue;
    std::uint32_t cls = static_cast<std::uint32_t>(representative.size());
    representative.push_back(a);
    for (std::uint32_t b = a; b < n; ++b) {
      if (related[a * n + b]) out.class_of[b] = cls;
    }
  }
  const std::size_t k = representative.size();
  std::vector<std::vector<std::uint32_t>> rows(k, std::vector<std::uint32_t>(k));
  std::vector<std::string> labels(k);
  for (std::size_t a = 0; a < k; ++a) {
    labels[a] = "[" + monoid.labels[representative[a]] + "]";
    for (std::size_t b = 0; b < k; ++b) {
      rows[a][b] = out.class_of[monoid.mul(representative[a], representative[b])];
    }
  }
  out.monoid = make_monoid(rows, std::move(labels));
  return out;
}

bool quotient_relations_coincide(const FinMonoid& monoid,
                                 const std::vector<std::uint32_t>& subset) {
  require(is_submonoid(monoid, subset), "subset is not a submonoid");
  std::set<std::uint32_t> members(subset.begin(), subset.end());
  const std::size_t n = monoid.size();
  std::vector<bool> rs = raw_quotient_relation(monoid, members);
  for (std::uint32_t a = 0; a < n; ++a) {
    for (std::uint32_t b = 0; b < n; ++b) {
      std::set<std::uint32_t> sa, bs;
      for (std::uint32_t s : members) {
        sa.insert(monoid.mul(s, a));
        bs.insert(monoid.mul(b, s));
      }
      if ((sa == bs) != rs[a * n + b]) return false;
    }
  }
  return true;
}

FinMonoid semidirect_monoid(const FinMonoid& left, const FinMonoid& right,
                            const std::vector<std::vector<std::uint32_t>>& phi) {
  require(phi.size() == right.size(), "phi must assign one map per element of the right factor");
  for (const auto& perm : phi) {
    require(perm.size() == left.size(), "phi entry has the wrong size");
    std::vector<bool> hit(left.size(), false);
    for (std::uint32_t v : perm) {
      require(v < left.size() && !hit[v], "phi entry is not a bijection");
      hit[v] = true;
    }
    for (std::uint32_t a = 0; a < left.size(); ++a) {
      for (std::uint32_t b = 0; b < left.size(); ++b) {
        require(perm[left.mul(a, b)] == left.mul(perm[a], perm[b]),
                "phi entry is not an automorphism of the left factor");
      }
    }
  }
  for (std::uint32_t a = 0; a < left.size(); ++a) {
    require(phi[right.identity][a] == a, "phi of the right identity is not the identity map");
  }
  for (std::uint32_t n1 = 0; n1 < right.size(); ++n1) {
    for (std::uint32_t n2 = 0; n2 < right.size(); ++n2) {
      for (std::uint32_t a = 0; a < left.size(); ++a) {
        require(phi[right.mul(n1, n2)][a] == phi[n1][phi[n2][a]],
                "phi is not a homomorphism into the automorphism group");
      }
    }
  }

  const std::size_t total = left.size() * right.size();
  auto index = [&](std::uint32_t m, std::uint32_t n) {
    return m * static_cast<std::uint32_t>(right.size()) + n;
  };
  std::vector<std::vector<std::uint32_t>> rows(total, std::vector<std::uint32_t>(total));
  std::vector<std::string> labels(total);
  for (std::uint32_t m1 = 0; m1 < left.size(); ++m1) {
    for (std::uint32_t n1 = 0; n1 < right.size(); ++n1) {
      labels[index(m1, n1)] = "(" + left.labels[m1] + "," + right.labels[n1] + ")";
      for (std::uint32_t m2 = 0; m2 < left.size(); ++m2) {
        for (std::uint32_t n2 = 0; n2 < right.size(); ++n2) {
          rows[index(m1, n1)][index(m2, n2)] =
              index(left.mul(m1, phi[n1][m2]), right.mul(n1, n2));
        }
      }
    }
  }
  return make_monoid(rows, std::move(labels));
}

}  // namespace concentra
