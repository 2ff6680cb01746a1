#pragma once

#include <array>
#include <cstdint>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace concentra {

using ObjectId = std::uint32_t;
using MorphismId = std::uint32_t;

inline constexpr MorphismId kNoMorphism = static_cast<MorphismId>(-1);

struct Morphism {
  std::string label;
  ObjectId src = 0;
  ObjectId tgt = 0;
};

/// Explicit finite category: labelled objects, morphisms with source/target,
/// one identity morphism per object, and a composition table stored densely
/// over all morphism pairs. comp(f, g) denotes f∘g ("g first, then f") and
/// must be defined exactly when src(f) == tgt(g).
///
/// Instances are immutable after construction; labels are for I/O only and
/// all algebra runs on integer ids.
struct FinCategory {
  std::vector<std::string> objects;
  std::vector<Morphism> morphisms;
  std::vector<MorphismId> identities;  // indexed by object
  std::vector<MorphismId> comp_table;  // |Mor|^2, kNoMorphism where undefined

  std::size_t object_count() const { return objects.size(); }
  std::size_t morphism_count() const { return morphisms.size(); }
  ObjectId src(MorphismId f) const { return morphisms[f].src; }
  ObjectId tgt(MorphismId f) const { return morphisms[f].tgt; }
  MorphismId identity(ObjectId a) const { return identities[a]; }
  bool composable(MorphismId f, MorphismId g) const {
    return morphisms[f].src == morphisms[g].tgt;
  }
  MorphismId composite(MorphismId f, MorphismId g) const {
    return comp_table[f * morphisms.size() + g];
  }
  const std::string& morphism_label(MorphismId f) const { return morphisms[f].label; }
  const std::string& object_label(ObjectId a) const { return objects[a]; }
  std::size_t hom_size(ObjectId a, ObjectId b) const;
};

using CatRef = std::shared_ptr<const FinCategory>;

/// Incremental construction helper; build() materialises the dense
/// composition table and range-checks every index.
class CategoryBuilder {
 public:
  ObjectId add_object(std::string label);
  MorphismId add_morphism(std::string label, ObjectId src, ObjectId tgt);
  void set_identity(ObjectId obj, MorphismId f);
  void set_composite(MorphismId f, MorphismId g, MorphismId fg);
  FinCategory build() &&;

 private:
  FinCategory cat_;
  std::vector<std::array<MorphismId, 3>> composites_;
};

struct Violation {
  std::string rule;                    // machine tag, e.g. "associativity"
  std::vector<std::uint32_t> witness;  // ids whose meaning depends on the rule
  std::string message;
};

struct ValidationReport {
  bool ok = true;
  std::vector<Violation> violations;

  void add(std::string rule, std::vector<std::uint32_t> witness, std::string message);
};

/// Checks the category axioms: composition defined exactly on composable
/// pairs with matching endpoints, identity laws, associativity, and identity
/// endpoints. Structurally ill-formed input (out-of-range indices, wrong
/// table size) throws std::invalid_argument instead of being reported.
ValidationReport validate_category(const FinCategory& cat);

/// f∘g when src(f) == tgt(g), absent otherwise.
std::optional<MorphismId> compose(const FinCategory& cat, MorphismId f, MorphismId g);

/// True iff the category is nonempty and codiscrete (every hom-set is a
/// singleton), i.e. equivalent to the one-object one-morphism category.
bool is_equivalent_to_trivial(const FinCategory& cat);

std::optional<MorphismId> inverse_morphism(const FinCategory& cat, MorphismId f);
bool is_groupoid(const FinCategory& cat);
bool is_connected(const FinCategory& cat);

/// Object map plus morphism map between two categories. Source and target are
/// shared so functors stay valid independently of scope.
struct FunctorData {
  CatRef source;
  CatRef target;
  std::vector<ObjectId> obj_map;
  std::vector<MorphismId> mor_map;
};

FunctorData identity_functor(CatRef cat);

/// Verifies that obj_map/mor_map preserve endpoints, identities and
/// composition.
ValidationReport check_functor(const FunctorData& fun);

/// f∘g (g applied first); requires g.target == f.source (same object).
FunctorData compose_functors(const FunctorData& f, const FunctorData& g);

/// The strong inverse of f, when both maps are bijections whose inverses form
/// a functor; absent otherwise.
std::optional<FunctorData> strong_inverse(const FunctorData& fun);

bool is_identity_functor(const FunctorData& fun);
bool same_functor(const FunctorData& a, const FunctorData& b);

/// A re-verification failed that is guaranteed to hold by construction.
/// Signals a bug in this library, never bad input.
class internal_error : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace concentra
