#ifndef GMCAT_CONSTRUCTIONS_HPP
#define GMCAT_CONSTRUCTIONS_HPP

#include "gmcat/graded.hpp"

namespace gmcat {

// Concrete Kleisli presentation of a strictly graded monad: objects are the
// base objects, morphisms are grade-tagged maps A -> F_X(B), composition
// (Y,g)∘(X,f) = (X⊗Y, γ_{X,Y}∘F_X(g)∘f) and identity (I, δ_A). Ids encode
// the grade and the underlying morphism, plus the Kleisli codomain to keep
// them unique when F_X identifies objects.
struct KleisliCategory {
  GradedMonad source;
  FinCategory category;
  std::map<std::string, std::pair<std::string, std::string>> decode;  // id -> (grade, underlying)

  bool operator==(const KleisliCategory&) const = default;
};

std::string kleisli_id(const std::string& grade, const std::string& underlying,
                       const std::string& target);

KleisliCategory build_kleisli(const GradedMonad& t);

// Graded algebra: a carrier functor A: M -> C with actions
// a_{X,N}: F_X(A(N)) -> A(X⊗N), natural in both variables, unital and
// multiplicative. Requires a strict grading.
struct GradedAlgebra {
  Functor carrier;
  std::map<std::pair<std::string, std::string>, std::string> act;  // (X, N) -> morphism of C

  bool operator==(const GradedAlgebra&) const = default;

  const std::string& act_at(const std::string& x, const std::string& n) const;
};

struct AlgebraMorphism {
  GradedAlgebra src;
  GradedAlgebra dst;
  std::map<std::string, std::string> components;  // N -> morphism A(N) -> B(N)

  bool operator==(const AlgebraMorphism&) const = default;
};

CheckReport check_graded_algebra(const GradedAlgebra& alg, const GradedMonad& t);
CheckReport check_algebra_morphism(const AlgebraMorphism& h, const GradedMonad& t);

// The free algebra on a base object: A(N) = F_N(B0), act = γ.
GradedAlgebra free_algebra(const GradedMonad& t, const std::string& base_object);

// All algebras of t, smallest-first in table order. `bound` caps the number
// of candidate tables examined.
std::vector<GradedAlgebra> enumerate_graded_algebras(const GradedMonad& t, std::size_t bound = 200000);

// Tensor of algebras over an oplax commutative graded monad:
// (A⊗B)(N) = A(N)⊗B(N), act = (a⊗b)∘Φ_X. The unit algebra is constant at the
// monoidal unit with act = Φ̄_X.
GradedAlgebra tensor_algebras(const CommutativeGradedMonad& t, const GradedAlgebra& a,
                              const GradedAlgebra& b);
GradedAlgebra unit_algebra(const CommutativeGradedMonad& t);

// The regrouping of an oplax commutative graded monad as a monoid object in
// the 2-category of graded monads: the tensor and unit become graded-monad
// morphisms out of the product and trivial monads, and the base associator
// and unitors become transformations between their pastings.
struct XiBundle {
  GradedMonad pair_monad;
  GradedMonad triple_monad;
  GradedMonad trivial_monad;
  GradedMorphism tensor_cell;
  GradedMorphism unit_cell;
  GradedTransformation assoc_cell;
  GradedTransformation lunit_cell;
  GradedTransformation runit_cell;
};

struct XiRow {
  std::string id;
  bool commutative_pass = false;
  bool regrouped_pass = false;
  std::string note;
};

// Law-by-law comparison of the two views. Every row compares one family of
// commutative-side laws with the corresponding family of regrouped-side laws;
// the trailing "naturality-closure" row collects the modification squares at
// non-identity grading morphisms, which have no one-family counterpart and
// are consequences of the other rows.
struct XiEquivalence {
  CheckReport commutative_report;
  std::map<std::string, CheckReport> regrouped_reports;
  std::vector<XiRow> rows;
  bool commutative_pass = false;
  bool regrouped_pass = false;
  bool equivalent = false;  // overall verdicts agree
};

struct XiResult {
  XiBundle bundle;
  XiEquivalence equivalence;
};

XiResult xi_reassociate(const CommutativeGradedMonad& t);

}  // namespace gmcat

#endif
