#ifndef GMCAT_MONOIDAL_HPP
#define GMCAT_MONOIDAL_HPP

#include <set>
#include <tuple>

#include "gmcat/cells.hpp"

namespace gmcat {

// Monoidal structure on a finite category. The associator is oriented
// A⊗(B⊗C) -> (A⊗B)⊗C and the unitors λ_A: I⊗A -> A, ρ_A: A⊗I -> A.
// Components are stored explicitly together with their inverses even when
// they are identities, so strict and non-strict instances share one checker.
struct MonoidalStructure {
  FinCategory base;
  Functor tensor;  // product_category(base, base) -> base
  std::string unit;
  std::map<std::tuple<std::string, std::string, std::string>, std::string> assoc;
  std::map<std::tuple<std::string, std::string, std::string>, std::string> assoc_inv;
  std::map<std::string, std::string> lunit, lunit_inv;
  std::map<std::string, std::string> runit, runit_inv;

  bool operator==(const MonoidalStructure&) const = default;

  std::string tensor_obj(const std::string& a, const std::string& b) const;
  std::string tensor_mor(const std::string& f, const std::string& g) const;
  const std::string& assoc_at(const std::string& a, const std::string& b, const std::string& c) const;
  const std::string& lunit_at(const std::string& a) const;
  const std::string& runit_at(const std::string& a) const;

  // True when every associator and unitor component is an identity morphism.
  bool is_strict() const;

  // The unique morphism u⊗u -> u of a thin structure. Throws unless that
  // hom-set is a singleton.
  std::string nabla(const std::string& u) const;
};

enum class Variant { lax, oplax };

std::string to_string(Variant v);

// (F, φ, φ̄) between monoidal structures. Directions:
//   lax    φ: ⊗'·(F×F) -> F·⊗      φ̄: I' -> F(I)
//   oplax  φ: F·⊗ -> ⊗'·(F×F)      φ̄: F(I) -> I'
struct MonoidalFunctor {
  Variant variant = Variant::lax;
  MonoidalStructure src;
  MonoidalStructure dst;
  Functor F;
  NatTrans phi;
  std::string phibar;

  bool operator==(const MonoidalFunctor&) const = default;
};

struct MonoidalTransformation {
  MonoidalFunctor src;
  MonoidalFunctor dst;
  NatTrans underlying;

  bool operator==(const MonoidalTransformation&) const = default;
};

// Expected boundary of φ for a given variant; used by checks and loaders.
std::pair<Functor, Functor> monoidal_functor_phi_boundary(const MonoidalFunctor& f);

CheckReport check_monoidal(const MonoidalStructure& m);
CheckReport check_monoidal_functor(const MonoidalFunctor& f);
CheckReport check_monoidal_transformation(const MonoidalTransformation& t);

// The identity monoidal endofunctor (Id, 1, 1) on a structure.
MonoidalFunctor trivial_monoidal_endofunctor(const MonoidalStructure& m, Variant variant);

// Componentwise monoidal structure on a product category.
MonoidalStructure product_monoidal(const MonoidalStructure& a, const MonoidalStructure& b);

struct Semilattice {
  std::string name;
  std::vector<std::string> elements;
  std::set<std::pair<std::string, std::string>> leq;

  bool operator==(const Semilattice&) const = default;
};

// Direction of the unique morphisms in the thin category of a semilattice.
//   up:   u -> v iff u ≤ v (the unit is terminal)
//   down: u -> v iff v ≤ u (the unit is initial)
// Both occur as gradings; the engine never guesses which one a user means.
enum class ThinArrows { up, down };

// Validates the poset, computes meets and builds the thin monoidal category
// with ⊗ = meet and unit = top. Morphism ids are "u->v".
MonoidalStructure thin_from_semilattice(const Semilattice& s, ThinArrows arrows);

std::string meet_of(const Semilattice& s, const std::string& a, const std::string& b);
std::string top_of(const Semilattice& s);

// The strict monoidal category generated inside End(c) by the given
// endofunctors and transformations, closed under composition (tensor) and
// vertical/horizontal pasting. Ids are the generator names; composites are
// named after the expression that first produced them.
struct EndoMonoidal {
  MonoidalStructure monoidal;
  std::map<std::string, Functor> functor_of;
  std::map<std::string, NatTrans> trans_of;
};

EndoMonoidal endo_monoidal(const FinCategory& c,
                           const std::map<std::string, Functor>& gen_functors,
                           const std::map<std::string, NatTrans>& gen_transes,
                           std::size_t max_functors = 64,
                           std::size_t max_transes = 512);

}  // namespace gmcat

#endif
