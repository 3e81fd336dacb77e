#ifndef GMCAT_CELLS_HPP
#define GMCAT_CELLS_HPP

#include "gmcat/category.hpp"

namespace gmcat {

// The 2-cell calculus of Cat on table-driven data. Every pasted composite in
// the coherence diagrams is evaluated through these; all of them throw
// ShapeMismatch when the boundaries do not line up.

Functor id_functor(const FinCategory& c);
Functor const_functor(const FinCategory& src, const FinCategory& dst, const std::string& object);

// g∘f: apply f first.
Functor compose_functors(const Functor& g, const Functor& f);

// f×g : src(f)×src(g) -> dst(f)×dst(g) on the product id scheme.
Functor product_functor(const Functor& f, const Functor& g);

NatTrans id_nattrans(const Functor& f);

// Vertical composite: first: F -> G, second: G -> H; result F -> H.
NatTrans vcomp(const NatTrans& second, const NatTrans& first);

// Horizontal composite. inner: F -> G between C -> D, outer: H -> K between
// D -> E; result H∘F -> K∘G with component outer_{G(A)} ∘ H(inner_A).
NatTrans hcomp(const NatTrans& outer, const NatTrans& inner);

// f ⋆ t: postcompose every component with the functor f (f on the left).
NatTrans whisker_left(const Functor& f, const NatTrans& t);
// t ⋆ f: reindex the components of t along f (f on the right).
NatTrans whisker_right(const NatTrans& t, const Functor& f);

// (a,b) componentwise on a product category.
NatTrans product_nattrans(const NatTrans& a, const NatTrans& b);

// Compact boundary description used in ShapeMismatch messages.
std::string describe(const Functor& f);

}  // namespace gmcat

#endif
