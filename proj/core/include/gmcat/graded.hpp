#ifndef GMCAT_GRADED_HPP
#define GMCAT_GRADED_HPP

#include "gmcat/monoidal.hpp"

namespace gmcat {

// A grading monoidal category M together with a grade-indexed family of
// endofunctors of the base, a multiplication γ_{X,Y}: F_X∘F_Y -> F_{X⊗Y}
// and a unit δ: Id -> F_I. Everything is stored per grade so the checker can
// bind failures to concrete grading objects.
struct GradedMonad {
  MonoidalStructure grading;
  FinCategory base;
  std::map<std::string, Functor> F_obj;                                // grading object -> endofunctor
  std::map<std::string, NatTrans> F_mor;                               // grading morphism -> F_f
  std::map<std::pair<std::string, std::string>, NatTrans> gamma;       // (X, Y) -> γ_{X,Y}
  NatTrans delta;

  bool operator==(const GradedMonad&) const = default;

  const Functor& F_at(const std::string& x) const;
  const NatTrans& F_on(const std::string& grading_morphism) const;
  const NatTrans& gamma_at(const std::string& x, const std::string& y) const;
};

struct PlainMonad {
  FinCategory base;
  Functor T;
  NatTrans mu;   // T∘T -> T
  NatTrans eta;  // Id -> T
};

// Per-grade monoidal packaging of F_X.
struct GradePhi {
  NatTrans phi;
  std::string phibar;

  bool operator==(const GradePhi&) const = default;
};

struct CommutativeGradedMonad {
  GradedMonad underlying;
  Variant variant = Variant::oplax;
  std::map<std::string, GradePhi> Phi;  // grading object -> (Φ_X, Φ̄_X)
  MonoidalStructure base_monoidal;

  bool operator==(const CommutativeGradedMonad&) const = default;
};

// Morphism of graded monads (Ω, ω) over a shared grading.
//   lax    ω_X: Ω∘F_X -> G_X∘Ω
//   oplax  ω_X: G_X∘Ω -> Ω∘F_X
struct GradedMorphism {
  Variant variant = Variant::lax;
  GradedMonad src;
  GradedMonad dst;
  Functor Omega;
  std::map<std::string, NatTrans> omega;

  bool operator==(const GradedMorphism&) const = default;

  const NatTrans& omega_at(const std::string& x) const;
};

struct GradedTransformation {
  GradedMorphism src;
  GradedMorphism dst;
  NatTrans beta;  // Ω -> Ξ

  bool operator==(const GradedTransformation&) const = default;
};

CheckReport check_graded_monad(const GradedMonad& t);
CheckReport check_graded_morphism(const GradedMorphism& h);
CheckReport check_graded_transformation(const GradedTransformation& b);
CheckReport check_commutative(const CommutativeGradedMonad& t);

// Wraps plain monad data as a monad graded by the terminal monoidal category;
// the result passes check_graded_monad exactly when the plain monad laws hold.
GradedMonad from_plain_monad(const PlainMonad& m);

GradedMonad forget_commutative(const CommutativeGradedMonad& t);

// The monoidal functor (F_X, Φ_X, Φ̄_X) on the base monoidal structure.
MonoidalFunctor monoidal_functor_at(const CommutativeGradedMonad& t, const std::string& x);

// The pasted monoidal structure on F_X∘F_Y (whiskered Φ's, fused Φ̄'s).
MonoidalFunctor composite_structure(const CommutativeGradedMonad& t, const std::string& x,
                                    const std::string& y);

// 2-categorical plumbing of graded monads: identities, pasting, products and
// the trivial monad on the terminal category. These are constructors only;
// the ambient 2-category is never materialised.
FinCategory terminal_category();
GradedMonad trivial_graded_monad(const MonoidalStructure& grading);
GradedMorphism identity_graded_morphism(const GradedMonad& t, Variant variant);
GradedMorphism compose_graded_morphisms(const GradedMorphism& second, const GradedMorphism& first);
GradedMonad product_graded_monad(const GradedMonad& a, const GradedMonad& b);
GradedMorphism product_graded_morphism(const GradedMorphism& a, const GradedMorphism& b);

}  // namespace gmcat

#endif
