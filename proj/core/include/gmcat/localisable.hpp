#ifndef GMCAT_LOCALISABLE_HPP
#define GMCAT_LOCALISABLE_HPP

#include "gmcat/graded.hpp"

namespace gmcat {

// A strict presheaf of categories over a thin site: one category per site
// element and a functor per site morphism, strictly functorial. The site
// morphism m: u -> v indexes the restriction at(u) -> at(v); with a
// down-oriented thin site this is exactly a presheaf over the order.
struct PresheafOfCategories {
  MonoidalStructure site;
  std::map<std::string, FinCategory> at;
  std::map<std::string, Functor> restrict_along;  // site morphism -> functor

  bool operator==(const PresheafOfCategories&) const = default;

  const FinCategory& at_element(const std::string& u) const;
  const Functor& restriction(const std::string& site_morphism) const;
};

// Componentwise monads on a presheaf, strictly compatible with restrictions.
struct FormalMonad {
  PresheafOfCategories base;
  std::map<std::string, Functor> T;
  std::map<std::string, NatTrans> mu;   // T_u∘T_u -> T_u
  std::map<std::string, NatTrans> eta;  // Id -> T_u

  bool operator==(const FormalMonad&) const = default;
};

// Street-style morphism family: (1, φ̄): src -> dst carries φ̄_u: S_u -> T_u
// where T is the source monad and S the target monad.
struct MonadMorphismFamily {
  FormalMonad src;
  FormalMonad dst;
  std::map<std::string, NatTrans> phibar;

  bool operator==(const MonadMorphismFamily&) const = default;
};

// 2-cells between morphism families (components β_u on each level) paired
// with 2-cells between the corresponding graded morphisms share their data;
// see check_family_transformation.
struct FamilyTransformation {
  MonadMorphismFamily src;
  MonadMorphismFamily dst;
  std::map<std::string, NatTrans> beta;  // per element: component of the modification

  bool operator==(const FamilyTransformation&) const = default;
};

struct CentralIdempotentCandidate {
  std::string object;
  std::string eps;        // ε: u -> I
  std::string fused;      // the common composite u⊗u -> u
  std::string fused_inv;  // its two-sided inverse

  bool operator==(const CentralIdempotentCandidate&) const = default;
};

// The user-declared object-level correspondence between graded monads over a
// thin grading and formal monads on a presheaf whose levels all coincide with
// the graded base. component_map renames grading objects to site elements.
struct LocalisablePairing {
  GradedMonad graded_src;
  GradedMonad graded_dst;
  FormalMonad formal_src;
  FormalMonad formal_dst;
  std::map<std::string, std::string> component_map;

  bool operator==(const LocalisablePairing&) const = default;

  std::string site_element(const std::string& grading_object) const;
};

CheckReport check_presheaf(const PresheafOfCategories& p);
CheckReport check_formal_monad(const FormalMonad& m);
CheckReport check_family(const MonadMorphismFamily& f);
CheckReport check_family_transformation(const FamilyTransformation& t);

// Component agreement of a declared pairing: levels equal the graded base,
// T matches F, μ matches γ on the diagonal, and η matches F(!_u)∘δ along the
// unique morphism from the grading unit.
CheckReport verify_pairing(const LocalisablePairing& p);

// Translation of a morphism family into an oplax graded morphism over the
// identity carrier (ω_u = φ̄_u) and back. Both throw PairingMismatch when the
// declared pairing fails component agreement.
GradedMorphism theta_to_graded(const MonadMorphismFamily& f, const LocalisablePairing& p);
MonadMorphismFamily theta_from_graded(const GradedMorphism& h, const LocalisablePairing& p);

std::vector<CentralIdempotentCandidate> find_central_idempotents(const MonoidalStructure& m);

}  // namespace gmcat

#endif
