#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "concentra/concentration.hpp"
#include "concentra/core.hpp"

namespace concentra {

/// Finite monoid given by a total multiplication table. is_group is derived
/// from the table (every element has a two-sided inverse).
struct FinMonoid {
  std::vector<std::string> labels;
  std::vector<std::uint32_t> table;  // size*size, row-major: table[a*size+b] = a*b
  std::uint32_t identity = 0;
  bool is_group = false;

  std::size_t size() const { return labels.size(); }
  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const { return table[a * size() + b]; }
};

using MonoidRef = std::shared_ptr<const FinMonoid>;

/// Validates associativity and a two-sided identity, then fills in the
/// derived fields. Throws std::invalid_argument when rows is not a monoid
/// table.
FinMonoid make_monoid(const std::vector<std::vector<std::uint32_t>>& rows,
                      std::vector<std::string> labels = {});

/// Report-style version of the same checks, for data loaded from files.
ValidationReport validate_monoid(const FinMonoid& monoid);

FinMonoid trivial_group();
FinMonoid cyclic_group(std::uint32_t order);
FinMonoid symmetric_group(std::uint32_t letters);
FinMonoid direct_product(const FinMonoid& left, const FinMonoid& right);
FinMonoid klein_four_group();

std::optional<std::uint32_t> element_inverse(const FinMonoid& monoid, std::uint32_t element);

/// x -> x^{-1}; defined on groups, where it is an automorphism exactly when
/// the group is abelian.
std::vector<std::uint32_t> inversion_map(const FinMonoid& group);

struct MonoidHom {
  MonoidRef source;
  MonoidRef target;
  std::vector<std::uint32_t> map;
};

bool check_monoid_hom(const MonoidHom& hom);
bool is_bijective(const MonoidHom& hom);
MonoidHom compose_homs(const MonoidHom& f, const MonoidHom& g);  // f∘g

/// One-object category whose morphisms are the monoid elements and whose
/// composition is the multiplication.
FinCategory one_object_category(const FinMonoid& monoid);

struct ConcentrationMonoid {
  MonoidRef monoid;
  std::vector<std::uint32_t> class_map;  // MorphismId -> element index
};

/// Quotient of the morphism set by the concentration structure, multiplied
/// through composable representatives. Refuses when (cat, part) fails the
/// concentration axioms. The result is a group exactly when every class
/// contains an invertible morphism.
ConcentrationMonoid concentration_monoid(const FinCategory& cat, const MorphismPartition& part);

bool every_class_contains_isomorphism(const FinCategory& cat, const MorphismPartition& part);

/// Homomorphism [f] -> [F(f)] induced by a concentration preserving functor.
/// Refuses non-preserving functors.
MonoidHom induced_hom(const FunctorData& fun, const MorphismPartition& source_part,
                      const MorphismPartition& target_part);

/// A multiplication-preserving bijection from left to right, or absent when
/// none exists. Deterministic: the lexicographically least isomorphism is
/// returned. Refuses monoids larger than 64 elements.
std::optional<std::vector<std::uint32_t>> find_isomorphism(const FinMonoid& left,
                                                           const FinMonoid& right);

/// subset must contain the identity and be closed under multiplication.
bool is_submonoid(const FinMonoid& monoid, const std::vector<std::uint32_t>& subset);

/// xS = Sx for every x. Throws when subset is not a submonoid.
bool is_normal_submonoid(const FinMonoid& monoid, const std::vector<std::uint32_t>& subset);

struct QuotientMonoid {
  FinMonoid monoid;
  std::vector<std::uint32_t> class_of;  // element of the source -> quotient element
  bool closure_was_needed = false;      // transitive closure changed the raw relation
};

/// Quotient by the congruence a ~ b iff s1*a = b*s2 for some s1, s2 in the
/// submonoid. The relation is verified to be an equivalence and a congruence
/// before the table is built; with a normal submonoid a failure is an
/// internal error.
QuotientMonoid quotient_by_normal_submonoid(const FinMonoid& monoid,
                                            const std::vector<std::uint32_t>& subset);

/// Diagnostic: does the congruence above coincide with the two-sided variant
/// a ~ b iff S*a = b*S as sets? They agree when the submonoid is a subgroup
/// of a group.
bool quotient_relations_coincide(const FinMonoid& monoid,
                                 const std::vector<std::uint32_t>& subset);

/// Semidirect product on pairs (m, n) with (m1,n1)(m2,n2) =
/// (m1 * phi[n1](m2), n1*n2). phi must assign to every element of right an
/// automorphism of left, homomorphically.
FinMonoid semidirect_monoid(const FinMonoid& left, const FinMonoid& right,
                            const std::vector<std::vector<std::uint32_t>>& phi);

}  // namespace concentra
