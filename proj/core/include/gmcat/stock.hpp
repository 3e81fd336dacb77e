#ifndef GMCAT_STOCK_HPP
#define GMCAT_STOCK_HPP

#include "gmcat/constructions.hpp"
#include "gmcat/json_io.hpp"
#include "gmcat/localisable.hpp"

namespace gmcat {
namespace stock {

// Small instances shared by the test-suites, the shipped corpus and the
// command-line examples. Everything here is deterministic.

FinCategory walking_arrow();                 // a -> b
FinCategory parallel_pair();                 // p, q: a -> b
FinCategory idem_monoid();                   // one object, morphisms 1 and e with e∘e = e
FinCategory discrete(std::size_t n);         // n objects, identities only

Semilattice chain2(const std::string& name); // 0 ≤ 1
Semilattice chain(std::size_t n, const std::string& name);
Semilattice diamond();                       // bot ≤ a,b ≤ top with a∧b = bot

MonoidalStructure terminal_monoidal();       // one-element semilattice
MonoidalStructure chain2_up();               // arrows along ≤, unit terminal
MonoidalStructure chain2_down();             // arrows against ≤, unit initial
MonoidalStructure monoid_monoidal();         // idem_monoid with multiplication tensor
MonoidalStructure nonthin2_monoidal();       // chain2_down × idem_monoid, 2 objects
MonoidalStructure nonthin3_monoidal();       // chain3_down × idem_monoid, 3 objects

// Graded monads.
GradedMonad identity_graded();               // terminal grading, identity monad on the walking arrow
GradedMonad truncation_graded();             // chain2_down grading on the walking arrow
GradedMonad reader_graded_up();              // u∧- on chain2_up, grading chain2_up
GradedMonad reader_graded_down();            // u∧- on chain2_down, grading chain2_down
GradedMonad identity_family_graded(const FinCategory& base, const MonoidalStructure& grading);

// Commutative (oplax) instances.
CommutativeGradedMonad reader_commutative(); // thin reader on chain2_up
CommutativeGradedMonad monoid_commutative(); // identity monad on idem_monoid, terminal grading

// Localisable instances: the reader-style pairing over the down chain and the
// mutation-rich pairing over the idempotent monoid.
PresheafOfCategories reader_presheaf();
FormalMonad reader_formal_identity();
FormalMonad reader_formal_meet();
MonadMorphismFamily reader_family();
LocalisablePairing reader_pairing();

PresheafOfCategories monoid_presheaf();
FormalMonad monoid_formal_identity();
MonadMorphismFamily monoid_family();
LocalisablePairing monoid_pairing();

// Plain monads for the degenerate-grading checks.
PlainMonad identity_monad(const FinCategory& c);
PlainMonad meet_with_bottom_monad();         // 0∧- on chain2_down

// The shipped corpus, as self-contained bundles.
Bundle terminal_identity_bundle();
Bundle truncation_bundle();
Bundle thin_reader_bundle();
Bundle monoid_commutative_bundle();
Bundle reader_pairing_bundle();
Bundle monoid_pairing_bundle();
Bundle nonthin_monoidal_bundle();
std::vector<Bundle> corpus();

}  // namespace stock
}  // namespace gmcat

#endif
