#include <doctest.h>

#include "support.hpp"

using namespace gmcat;
using namespace testsupport;

namespace {

// The idempotent e as a 2-cell Id -> Id on the one-object category.
NatTrans e_cell() {
  Functor id = id_functor(stock::idem_monoid());
  NatTrans t = id_nattrans(id);
  t.components["*"] = "e";
  return t;
}

}  // namespace

TEST_CASE("vertical composition with an identity is the other argument") {
  NatTrans e = e_cell();
  NatTrans id = id_nattrans(e.src);
  CHECK(vcomp(e, id) == e);
  CHECK(vcomp(id, e) == e);
}

TEST_CASE("whiskering an identity cell gives an identity cell") {
  FinCategory w = stock::walking_arrow();
  Functor cb = const_functor(w, w, "b");
  NatTrans id = id_nattrans(id_functor(w));
  NatTrans left = whisker_left(cb, id);
  CHECK(left.components == id_nattrans(compose_functors(cb, id_functor(w))).components);
  NatTrans right = whisker_right(id, cb);
  CHECK(right.components == id_nattrans(cb).components);
}

TEST_CASE("interchange on the idempotent monoid") {
  NatTrans e = e_cell();
  // (τ'∘τ)·(σ'∘σ) computed as vertical-of-horizontal and
  // horizontal-of-vertical agree.
  NatTrans lhs = vcomp(hcomp(e, e), hcomp(e, e));
  NatTrans rhs = hcomp(vcomp(e, e), vcomp(e, e));
  CHECK(lhs.components == rhs.components);
}

TEST_CASE("interchange on a composite of walking-arrow cells") {
  FinCategory w = stock::walking_arrow();
  FinCategory m = stock::idem_monoid();
  FinCategory base = product_category(w, m);

  // Two vertically composable cells between endofunctors of w×m, built from
  // the central idempotent in the second coordinate.
  Functor id = id_functor(base);
  NatTrans sigma = id_nattrans(id);
  for (auto& [obj, comp] : sigma.components)
    comp = pair_id(w.identity_of(obj.substr(1, 1)), "e");
  REQUIRE(check_naturality(sigma).pass());

  NatTrans lhs = vcomp(hcomp(sigma, sigma), hcomp(sigma, sigma));
  NatTrans rhs = hcomp(vcomp(sigma, sigma), vcomp(sigma, sigma));
  CHECK(lhs.components == rhs.components);
}

TEST_CASE("pasting rejects mismatched boundaries") {
  FinCategory w = stock::walking_arrow();
  FinCategory m = stock::idem_monoid();
  NatTrans idw = id_nattrans(id_functor(w));
  NatTrans idm = id_nattrans(id_functor(m));
  CHECK_THROWS_AS(vcomp(idw, idm), ShapeMismatch);
  CHECK_THROWS_AS(hcomp(idw, idm), ShapeMismatch);
  CHECK_THROWS_AS(compose_functors(id_functor(w), id_functor(m)), ShapeMismatch);
}

TEST_CASE("horizontal composite matches the componentwise pasting") {
  // hcomp(outer, inner)_A = outer_{G(A)} ∘ H(inner_A)
  FinCategory w = stock::walking_arrow();
  Functor idw = id_functor(w);
  Functor cb = const_functor(w, w, "b");
  NatTrans inner;
  inner.src = idw;
  inner.dst = cb;
  inner.components = {{"a", "f"}, {"b", "id_b"}};
  NatTrans outer = id_nattrans(cb);
  NatTrans h = hcomp(outer, inner);
  CHECK(h.src == compose_functors(cb, idw));
  CHECK(h.dst == compose_functors(cb, cb));
  CHECK(h.components.at("a") == "id_b");
  CHECK(check_naturality(h).pass());
}
