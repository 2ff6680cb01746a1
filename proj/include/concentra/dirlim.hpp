#pragma once

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "concentra/catalg.hpp"
#include "concentra/concentration.hpp"
#include "concentra/core.hpp"
#include "concentra/monoid.hpp"

namespace concentra {

/// Finite directed partially ordered set with an explicit relation matrix.
/// Every finite directed poset has a greatest element, which the limit
/// constructions rely on.
struct DirectedPoset {
  std::vector<std::string> elements;
  std::vector<std::uint8_t> leq;  // elements^2, row-major: leq[a*n+b] iff a <= b

  std::size_t size() const { return elements.size(); }
  bool le(std::size_t a, std::size_t b) const { return leq[a * size() + b] != 0; }
};

/// Reflexivity, antisymmetry, transitivity and directedness (upper bounds for
/// all pairs).
ValidationReport validate_poset(const DirectedPoset& poset);

std::optional<std::size_t> greatest_element(const DirectedPoset& poset);

/// Thin category with one morphism a -> b per a <= b. Throws when the
/// relation is not a directed partial order.
FinCategory direct_category(const DirectedPoset& poset);

/// Group-valued diagram on a poset. Groups live in a shared registry;
/// equivariance comparisons use literal pointer identity, so elements with
/// equal groups must reference the same FinMonoid instance.
struct GroupDiagram {
  std::vector<MonoidRef> group_of;  // per poset element
  std::map<std::pair<std::size_t, std::size_t>, std::vector<std::uint32_t>> hom_of;

  const std::vector<std::uint32_t>& hom(std::size_t from, std::size_t to) const {
    return hom_of.at({from, to});
  }
};

/// Fills in the identity maps on reflexive pairs.
GroupDiagram make_diagram(const DirectedPoset& poset, std::vector<MonoidRef> groups,
                          std::map<std::pair<std::size_t, std::size_t>,
                                   std::vector<std::uint32_t>> strict_homs);

/// Each connecting map is a homomorphism, reflexive maps are identities, and
/// the maps compose coherently along the order.
ValidationReport validate_diagram(const DirectedPoset& poset, const GroupDiagram& diagram);

/// A group acting on the poset by order automorphisms.
struct PosetAction {
  MonoidRef group;
  std::vector<std::vector<std::uint32_t>> perm_of;  // per group element
};

PosetAction trivial_action(const DirectedPoset& poset);

/// Homomorphism property, order preservation, and equivariance of the
/// diagram: the group at an element is the identical registry entry as the
/// group at its image, and the connecting maps are equal as functions.
ValidationReport validate_action(const DirectedPoset& poset, const GroupDiagram& diagram,
                                 const PosetAction& action);

/// The groupoid whose morphisms into A are triples (A, alpha, f) with alpha
/// in the group at A and f a group element moving the source onto A,
/// composed by (A, alpha, f)∘(B, beta, g) = (A, alpha*beta, f*g); together
/// with the concentration relating (A, alpha, f) and (B, beta, f) whenever
/// alpha and beta agree after pushing into a common upper bound.
struct SGCategory {
  CatRef category;  // objects are the poset elements
  MorphismPartition partition;

  struct Mor {
    std::size_t target;
    std::uint32_t alpha;
    std::uint32_t f;
  };
  std::vector<Mor> mors;

  MorphismId index_of(std::size_t target, std::uint32_t alpha, std::uint32_t f) const;

 private:
  friend SGCategory build_SG(const DirectedPoset&, const GroupDiagram&, const PosetAction&);
  std::vector<std::uint32_t> object_offset_;  // morphisms below each object within an f-block
  std::uint32_t block_size_ = 0;              // morphisms per group element
};

SGCategory build_SG(const DirectedPoset& poset, const GroupDiagram& diagram,
                    const PosetAction& action);

/// Classical direct limit, computed from the definition: pairs (A, alpha)
/// identified when they agree in some common upper bound, multiplied at the
/// greatest element.
struct ClassicalLimit {
  MonoidRef monoid;
  std::vector<std::vector<std::uint32_t>> class_of;  // per element A: alpha -> limit element
};

ClassicalLimit classical_direct_limit(const DirectedPoset& poset, const GroupDiagram& diagram);

/// Concentration group of the S_G groupoid; always a group.
ConcentrationMonoid equivariant_direct_limit(const DirectedPoset& poset,
                                             const GroupDiagram& diagram,
                                             const PosetAction& action);

/// Decomposition of (S_G, ~) as the semidirect product of (S_0, ~) by the
/// acting group: builds the product, the explicit comparison functor, and
/// the monoid-level semidirect product, and verifies all three agree.
struct DecompositionReport {
  bool ok = false;
  bool functor_ok = false;
  bool concentration_isomorphism_ok = false;
  bool monoid_isomorphism_ok = false;
  MonoidRef equivariant_limit;
  MonoidRef semidirect_model;  // lim F ⋊ G
};

DecompositionReport check_semidirect_decomposition(const DirectedPoset& poset,
                                                   const GroupDiagram& diagram,
                                                   const PosetAction& action);

}  // namespace concentra
